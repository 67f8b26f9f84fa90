import numpy as np
import pytest

from semham.embedding import normalize
from semham.errors import (
    DimensionMismatchError,
    NormBrokenError,
    NotUnitaryError,
)
from semham.sampling import make_rng, random_unit_vector
from semham.transitions import (
    TransitionOperator,
    apply,
    change_of_basis,
    compose_indirect,
    diagonal_operator,
    hamiltonian_constraint,
    householder_transition,
    identity_operator,
    negated_identity_operator,
    quadratic_similarity,
    run_indirect_experiment,
    symmetrize,
)

A = normalize([3.0, 4.0])


def random_state(dim, rng):
    return normalize(random_unit_vector(dim, rng))


def test_householder_swap_axes():
    h = householder_transition(normalize([1, 0]), normalize([0, 1]))
    np.testing.assert_allclose(h.matrix, [[0, 1], [1, 0]], atol=1e-15)
    np.testing.assert_allclose(apply(h, normalize([1, 0])).components, [0, 1], atol=1e-15)


def test_householder_degenerate_pair_is_identity():
    a = normalize([0.6, 0.8])
    h = householder_transition(a, a)
    np.testing.assert_allclose(h.matrix, np.eye(2), atol=0)
    assert h.kind == "householder"


def test_householder_axis_reflection():
    h = householder_transition(normalize([1, 0]), normalize([-1, 0]))
    np.testing.assert_allclose(h.matrix, np.diag([-1.0, 1.0]), atol=0)


def test_householder_exactness_properties():
    # reflections map exactly and stay orthogonal/symmetric/involutive
    rng = make_rng(101)
    for dim, trials, expensive_trials in ((2, 1000, 1000), (16, 1000, 1000), (768, 1000, 60)):
        gap = 0.0
        for k in range(trials):
            a, b = random_state(dim, rng), random_state(dim, rng)
            h = householder_transition(a, b)
            gap = max(gap, float(np.max(np.abs(h.matrix @ a.components - b.components))))
            assert float(np.max(np.abs(h.matrix - h.matrix.T))) <= 1e-12
            if k < expensive_trials:  # N^3 checks capped at 768 for runtime
                assert float(np.max(np.abs(h.matrix.T @ h.matrix - np.eye(dim)))) <= 1e-10
                assert float(np.max(np.abs(h.matrix @ h.matrix - np.eye(dim)))) <= 1e-10
        assert gap <= 1e-10


def test_apply_identity_and_negation():
    assert np.array_equal(apply(identity_operator(2), A).components, A.components)
    neg = apply(negated_identity_operator(2), A)
    np.testing.assert_allclose(neg.components, -A.components, atol=0)


def test_apply_swap_matrix():
    swap = TransitionOperator([[0.0, 1.0], [1.0, 0.0]])
    np.testing.assert_allclose(apply(swap, A).components, [0.8, 0.6], atol=1e-15)


def test_apply_rejects_norm_breaking_operator():
    with pytest.raises(NormBrokenError):
        apply(diagonal_operator([2.0, 2.0]), A)


def test_quadratic_similarity_values():
    assert quadratic_similarity(A, identity_operator(2)) == pytest.approx(1.0, abs=1e-15)
    assert quadratic_similarity(A, negated_identity_operator(2)) == pytest.approx(-1.0, abs=1e-15)
    swap = TransitionOperator([[0.0, 1.0], [1.0, 0.0]])
    assert quadratic_similarity(A, swap) == pytest.approx(0.96, abs=1e-12)


def test_symmetrize_fixed_point_and_averaging():
    swap = TransitionOperator([[0.0, 1.0], [1.0, 0.0]])
    assert symmetrize(swap) is swap
    upper = TransitionOperator([[0.0, 1.0], [0.0, 0.0]])
    np.testing.assert_allclose(symmetrize(upper).matrix, [[0, 0.5], [0.5, 0]], atol=0)


def test_symmetrize_preserves_quadratic_form():
    rng = make_rng(102)
    for _ in range(1000):
        m = rng.standard_normal((5, 5))
        a = random_state(5, rng)
        op = TransitionOperator(m)
        sym = symmetrize(op)
        assert abs(quadratic_similarity(a, op) - quadratic_similarity(a, sym)) <= 1e-12


def test_change_of_basis():
    h = diagonal_operator([2.0, 3.0])
    assert np.array_equal(change_of_basis(h, np.eye(2)).matrix, h.matrix)
    swap = np.array([[0.0, 1.0], [1.0, 0.0]])
    np.testing.assert_allclose(change_of_basis(h, swap).matrix, np.diag([3.0, 2.0]), atol=0)


def test_change_of_basis_preserves_trace_and_spectrum():
    rng = make_rng(103)
    for _ in range(100):
        m = rng.standard_normal((6, 6))
        q, _ = np.linalg.qr(rng.standard_normal((6, 6)))
        conjugated = change_of_basis(TransitionOperator(m), q)
        assert abs(np.trace(conjugated.matrix) - np.trace(m)) <= 1e-10
        ours = np.sort_complex(np.linalg.eigvals(conjugated.matrix))
        theirs = np.sort_complex(np.linalg.eigvals(m))
        np.testing.assert_allclose(ours, theirs, atol=1e-8)


def test_change_of_basis_rejects_non_unitary():
    with pytest.raises(NotUnitaryError):
        change_of_basis(identity_operator(2), np.array([[1.0, 1.0], [0.0, 1.0]]))


def test_compose_identity_is_neutral():
    h = householder_transition(A, normalize([0.8, 0.6]))
    composed = compose_indirect(identity_operator(2), h)
    np.testing.assert_allclose(composed.matrix, h.matrix, atol=0)
    assert composed.kind == "composed"


def test_compose_two_householders_maps_through():
    rng = make_rng(104)
    for dim in (2, 3, 16):
        for _ in range(100):
            a, b, c = (random_state(dim, rng) for _ in range(3))
            h12 = householder_transition(a, b)
            h23 = householder_transition(b, c)
            composed = compose_indirect(h12, h23)
            np.testing.assert_allclose(
                composed.matrix @ a.components, c.components, atol=1e-10)


def test_composed_operator_has_off_diagonal_elements():
    rng = make_rng(105)
    a, b, c = (random_state(8, rng) for _ in range(3))
    composed = compose_indirect(householder_transition(a, b),
                                householder_transition(b, c))
    off = composed.matrix - np.diag(np.diag(composed.matrix))
    assert float(np.max(np.abs(off))) > 1e-3


def test_hamiltonian_constraint_values():
    rng = make_rng(106)
    a = random_state(16, rng)
    h = householder_transition(a, random_state(16, rng))
    assert abs(hamiltonian_constraint(h, a) - 1.0) <= 1e-12
    assert hamiltonian_constraint(diagonal_operator([2.0, 2.0]), A) == pytest.approx(4.0)
    projector = TransitionOperator([[1.0, 0.0], [0.0, 0.0]])
    assert hamiltonian_constraint(projector, A) == pytest.approx(0.36, abs=1e-15)


def test_indirect_experiment_trivial_triple():
    rep = run_indirect_experiment(A, A, A)
    assert rep.direct_similarity == 1.0
    assert rep.indirect_similarity == pytest.approx(1.0, abs=1e-12)
    assert rep.constraint_12 == pytest.approx(1.0, abs=1e-12)
    assert rep.constraint_23 == pytest.approx(1.0, abs=1e-12)


def test_indirect_experiment_random_triples():
    rng = make_rng(107)
    for dim in (2, 16, 768):
        for _ in range(20):
            v1, v2, v3 = (random_state(dim, rng) for _ in range(3))
            rep = run_indirect_experiment(v1, v2, v3)
            assert rep.discrepancy <= 1e-10
            assert abs(rep.constraint_12 - 1.0) <= 1e-10
            assert abs(rep.constraint_23 - 1.0) <= 1e-10


def test_operator_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        apply(identity_operator(3), A)
    with pytest.raises(DimensionMismatchError):
        householder_transition(A, normalize([1, 0, 0]))
