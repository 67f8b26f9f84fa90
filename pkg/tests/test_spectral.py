import numpy as np
import pytest

from semham.embedding import normalize
from semham.errors import (
    DegenerateMultipliersError,
    DimensionMismatchError,
    EqualIndicesError,
    IndexOutOfRangeError,
)
from semham.perturbation import general_similarity
from semham.sampling import make_rng
from semham.spectral import (
    build_rank_one,
    diagonalize,
    first_perturbation_matrix,
    h_prime_from_h,
    project_state,
    second_perturbation_matrix,
)
from semham.transitions import (
    TransitionOperator,
    identity_operator,
    negated_identity_operator,
)

SQRT2 = np.sqrt(2.0)


def test_h_prime_endpoints():
    np.testing.assert_allclose(
        h_prime_from_h(negated_identity_operator(3)), np.zeros((3, 3)), atol=0)
    np.testing.assert_allclose(
        h_prime_from_h(identity_operator(3)), np.eye(3), atol=0)


def test_h_prime_of_swap_is_two_dim_block():
    swap = TransitionOperator([[0.0, 1.0], [1.0, 0.0]])
    np.testing.assert_allclose(
        h_prime_from_h(swap), [[0.5, 0.5], [0.5, 0.5]], atol=0)


def test_h_prime_shifts_quadratic_form():
    rng = make_rng(201)
    for _ in range(100):
        m = rng.standard_normal((5, 5))
        a = normalize(rng.standard_normal(5))
        hp = h_prime_from_h(TransitionOperator(m))
        lhs = float(a.components @ hp @ a.components)
        rhs = 0.5 * (float(a.components @ m @ a.components) + 1.0)
        assert abs(lhs - rhs) <= 1e-12


def test_build_rank_one_axis_vector():
    h = build_rank_one([1.0, 0.0, 0.0])
    np.testing.assert_allclose(h.matrix, np.diag([1.0, 0.0, 0.0]), atol=0)


def test_build_rank_one_unit_pair():
    h = build_rank_one([1.0, 1.0])
    np.testing.assert_allclose(h.matrix, [[0.5, 0.5], [0.5, 0.5]], atol=0)


def test_build_rank_one_three_four():
    h = build_rank_one([3.0, 4.0])
    np.testing.assert_allclose(h.matrix, np.array([[9, 12], [12, 16]]) / 25.0, atol=1e-15)


def test_build_rank_one_rejects_zero():
    with pytest.raises(DegenerateMultipliersError):
        build_rank_one([0.0, 0.0])


def test_rank_one_invariants():
    rng = make_rng(202)
    for _ in range(300):
        dim = int(rng.integers(2, 20))
        h = build_rank_one(rng.standard_normal(dim))
        m = h.matrix
        assert abs(np.trace(m) - 1.0) <= 1e-12
        assert float(np.max(np.abs(m - m.T))) == 0.0
        assert float(np.max(np.abs(m @ m - m))) <= 1e-10
        # rank 1: sampled 2x2 minors vanish
        for _ in range(8):
            r0, r1 = rng.integers(0, dim, size=2)
            c0, c1 = rng.integers(0, dim, size=2)
            minor = m[r0, c0] * m[r1, c1] - m[r0, c1] * m[r1, c0]
            assert abs(minor) <= 1e-10


def test_first_perturbation_matrix():
    np.testing.assert_allclose(
        first_perturbation_matrix(2, 4), np.diag([0.0, 0.0, 1.0, 0.0]), atol=0)
    a = normalize([3.0, 4.0])
    form = float(a.components @ first_perturbation_matrix(0, 2) @ a.components)
    assert abs(form - 0.36) <= 1e-15
    for dim in (2, 5, 9):
        for i in range(dim):
            assert np.trace(first_perturbation_matrix(i, dim)) == 1.0
    with pytest.raises(IndexOutOfRangeError):
        first_perturbation_matrix(4, 4)


def test_second_perturbation_matrix():
    np.testing.assert_allclose(
        second_perturbation_matrix(0, 1, 2), [[0.5, 0.5], [0.5, 0.5]], atol=0)
    a = normalize([3.0, 4.0])
    form = float(a.components @ second_perturbation_matrix(0, 1, 2) @ a.components)
    assert abs(form - 0.98) <= 1e-12
    assert np.trace(second_perturbation_matrix(1, 3, 6)) == 1.0
    with pytest.raises(EqualIndicesError):
        second_perturbation_matrix(1, 1, 3)
    with pytest.raises(IndexOutOfRangeError):
        second_perturbation_matrix(0, 3, 3)


def test_diagonalize_axis_vector_gives_identity_basis():
    dec = diagonalize(build_rank_one([1.0, 0.0, 0.0, 0.0]))
    np.testing.assert_allclose(dec.basis, np.eye(4), atol=0)
    np.testing.assert_allclose(dec.eigenvalues, [1.0, 0.0, 0.0, 0.0], atol=0)


def test_diagonalize_unit_pair_hand_decomposition():
    dec = diagonalize(build_rank_one([1.0, 1.0]))
    np.testing.assert_allclose(dec.basis[:, 0], [1 / SQRT2, 1 / SQRT2], atol=1e-15)
    np.testing.assert_allclose(dec.basis[:, 1], [1 / SQRT2, -1 / SQRT2], atol=1e-15)
    np.testing.assert_allclose(dec.eigenvalues, [1.0, 0.0], atol=0)


def test_diagonalize_random_residuals():
    rng = make_rng(203)
    for _ in range(200):
        v = rng.standard_normal(16)
        h = build_rank_one(v)
        dec = diagonalize(h)
        d = np.diag(dec.eigenvalues)
        assert float(np.max(np.abs(dec.basis.T @ h.matrix @ dec.basis - d))) <= 1e-10
        assert float(np.max(np.abs(dec.basis.T @ dec.basis - np.eye(16)))) <= 1e-10
        # null-space columns are orthogonal to v
        assert float(np.max(np.abs(v @ dec.basis[:, 1:]))) <= 1e-10
        # sign convention: the first significant entry of each column is positive
        for col in dec.basis.T:
            lead = col[np.abs(col) > 1e-12][0]
            assert lead > 0.0


def test_diagonalize_agrees_with_eigh_oracle():
    rng = make_rng(204)
    for _ in range(100):
        dim = int(rng.integers(2, 33))
        h = build_rank_one(rng.standard_normal(dim))
        ours = np.sort(diagonalize(h).eigenvalues)
        oracle = np.sort(np.linalg.eigh(h.matrix)[0])
        np.testing.assert_allclose(ours, oracle, atol=1e-8)


def test_project_state_on_leading_eigenvector():
    dec = diagonalize(build_rank_one([1.0, 1.0]))
    x1 = normalize(dec.basis[:, 0])
    amps = project_state(x1, dec)
    np.testing.assert_allclose(amps, [1.0, 0.0], atol=1e-12)


def test_project_state_orthogonal_anchor_has_zero_leading_amplitude():
    dec = diagonalize(build_rank_one([1.0, 1.0]))
    a = normalize([1.0, -1.0])
    amps = project_state(a, dec)
    assert abs(amps[0]) <= 1e-12


def test_project_state_amplitude_values():
    a = normalize([3.0, 4.0])
    dec = diagonalize(build_rank_one([1.0, 1.0]))
    amps = project_state(a, dec)
    assert abs(amps[0] - 1.4 / SQRT2) <= 1e-12
    assert abs(amps[0] ** 2 - 0.98) <= 1e-12
    assert abs(float(amps @ amps) - 1.0) <= 1e-10
    with pytest.raises(DimensionMismatchError):
        project_state(normalize([1, 0, 0]), dec)


def test_projection_is_isometry():
    rng = make_rng(205)
    for _ in range(200):
        dim = int(rng.integers(2, 24))
        dec = diagonalize(build_rank_one(rng.standard_normal(dim)))
        a = normalize(rng.standard_normal(dim))
        amps = project_state(a, dec)
        assert abs(np.linalg.norm(amps) - 1.0) <= 1e-12


def test_quadratic_form_ties_spectral_to_perturbation():
    # a^T H' a equals the transformed similarity of the multiplier system
    rng = make_rng(206)
    for _ in range(300):
        dim = int(rng.integers(2, 24))
        a = normalize(rng.standard_normal(dim))
        v = rng.standard_normal(dim)
        if abs(v @ a.components) <= 1e-9:
            continue
        h = build_rank_one(v)
        form = float(a.components @ h.matrix @ a.components)
        transformed = general_similarity(a, v).transformed
        assert abs(form - transformed) <= 1e-12
        amps = project_state(a, diagonalize(h))
        assert abs(amps[0] ** 2 - form) <= 1e-10
