"""Transition operators between embedding states: b = H a.

Householder reflections are the concrete unitary instances: H = I - 2 w w^T
with w the unit bisector direction (a - b)/||a - b|| maps a to b exactly,
is symmetric, orthogonal, and involutive. The coefficient constraint
C(H, a) = ||H a||^2 must equal 1 for the image to remain an embedding;
`apply` enforces it at tolerance ``APPLY_NORM_TOL``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embedding import EmbeddingVector, clamp_similarity, cosine_similarity
from .errors import (
    DimensionMismatchError,
    NonFiniteError,
    NormBrokenError,
    NotUnitaryError,
)

APPLY_NORM_TOL = 1e-6
UNITARY_TOL = 1e-8
DEGENERATE_REFLECTION_TOL = 1e-12

KINDS = ("identity", "negated_identity", "diagonal", "householder",
         "composed", "general")


@dataclass(frozen=True, eq=False)
class TransitionOperator:
    """An N x N real matrix mapping one embedding state to another.

    ``kind`` tags how the operator was built; structural invariants
    (orthogonality, symmetry, involution for Householder operators) are
    guaranteed by the constructors and checked in the test suite rather
    than on every instantiation.

    Writable input matrices are validated and defensively copied. A
    read-only float64 array is adopted as-is: that is the fast path for
    matrices built by this module's own constructors, whose entries are
    finite by construction, and an explicit opt-in for callers who freeze
    their own buffers.
    """

    matrix: np.ndarray
    kind: str = "general"

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.float64)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatchError(f"operator must be square, got {m.shape}")
        if self.kind not in KINDS:
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if m.flags.writeable or m.base is not None:
            # views of writable buffers could still change under us
            if not np.all(np.isfinite(m)):
                raise NonFiniteError("operator entries must be finite")
            m = m.copy()
            m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class TransitionReport:
    """Direct-vs-indirect comparison for a three-state transition."""

    direct_similarity: float
    indirect_similarity: float
    constraint_12: float
    constraint_23: float
    discrepancy: float


def identity_operator(dim: int) -> TransitionOperator:
    return TransitionOperator(np.eye(dim), kind="identity")


def negated_identity_operator(dim: int) -> TransitionOperator:
    return TransitionOperator(-np.eye(dim), kind="negated_identity")


def diagonal_operator(scales) -> TransitionOperator:
    """Direct transition: each dimension rescaled independently."""
    return TransitionOperator(np.diag(np.asarray(scales, dtype=np.float64)),
                              kind="diagonal")


def _householder_matrix(w: np.ndarray) -> np.ndarray:
    # -2 w w^T in a single full-matrix pass, then 1s onto the diagonal
    m = np.outer(w, -2.0 * w)
    m[np.arange(w.size), np.arange(w.size)] += 1.0
    m.setflags(write=False)
    return m


def householder_transition(a: EmbeddingVector, b: EmbeddingVector) -> TransitionOperator:
    """Reflection H = I - 2 w w^T with w = (a - b)/||a - b||, so H a = b.

    Degenerate pairs (a within 1e-12 of b) return the identity, the limit
    of the reflection family.
    """
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dim {a.dim} vs {b.dim}")
    d = a.components - b.components
    gap = float(np.linalg.norm(d))
    if gap <= DEGENERATE_REFLECTION_TOL:
        return TransitionOperator(np.eye(a.dim), kind="householder")
    return TransitionOperator(_householder_matrix(d / gap), kind="householder")


def apply(op: TransitionOperator, a: EmbeddingVector) -> EmbeddingVector:
    """Apply H to a state; the image must remain on the unit hypersphere.

    Raises NormBrokenError when | ||Ha|| - 1 | exceeds ``APPLY_NORM_TOL``
    (the operator violates the coefficient constraint at this vector).
    """
    if op.dim != a.dim:
        raise DimensionMismatchError(f"operator dim {op.dim} vs vector {a.dim}")
    image = op.matrix @ a.components
    norm = float(np.linalg.norm(image))
    if abs(norm - 1.0) > APPLY_NORM_TOL:
        raise NormBrokenError(
            f"||Ha|| = {norm!r} deviates from 1 by {abs(norm - 1.0):.3e}"
        )
    return EmbeddingVector(image)


def quadratic_similarity(a: EmbeddingVector, op: TransitionOperator) -> float:
    """The quadratic form a^T H a.

    Equals cosine_similarity(a, Ha) whenever Ha is unit-norm; returned
    unclamped because general operators may take it outside [-1, 1].
    """
    if op.dim != a.dim:
        raise DimensionMismatchError(f"operator dim {op.dim} vs vector {a.dim}")
    return float(a.components @ op.matrix @ a.components)


def symmetrize(op: TransitionOperator) -> TransitionOperator:
    """(H + H^T)/2; preserves every quadratic form a^T H a."""
    sym = (op.matrix + op.matrix.T) / 2.0
    if np.array_equal(sym, op.matrix):
        return op
    return TransitionOperator(sym, kind="general")


def change_of_basis(op: TransitionOperator, basis: np.ndarray) -> TransitionOperator:
    """Conjugate H by an orthogonal U: H' = U H U^T (same spectrum)."""
    u = np.asarray(basis, dtype=np.float64)
    if u.shape != op.matrix.shape:
        raise DimensionMismatchError(f"basis shape {u.shape} vs operator {op.matrix.shape}")
    residual = float(np.max(np.abs(u.T @ u - np.eye(op.dim))))
    if residual > UNITARY_TOL:
        raise NotUnitaryError(
            f"||U^T U - I||_inf = {residual:.3e} exceeds {UNITARY_TOL:g}"
        )
    return TransitionOperator(u @ op.matrix @ u.T, kind=op.kind)


def compose_indirect(op_12: TransitionOperator, op_23: TransitionOperator) -> TransitionOperator:
    """Effective operator for the two-leg path: H_23 H_12 (applied right to left)."""
    if op_12.dim != op_23.dim:
        raise DimensionMismatchError(f"dim {op_12.dim} vs {op_23.dim}")
    return TransitionOperator(op_23.matrix @ op_12.matrix, kind="composed")


def hamiltonian_constraint(op: TransitionOperator, a: EmbeddingVector) -> float:
    """Coefficient constraint C = ||H a||^2; 1 iff the image is unit-norm."""
    if op.dim != a.dim:
        raise DimensionMismatchError(f"operator dim {op.dim} vs vector {a.dim}")
    image = op.matrix @ a.components
    return float(image @ image)


def run_indirect_experiment(v1: EmbeddingVector, v2: EmbeddingVector,
                            v3: EmbeddingVector) -> TransitionReport:
    """Compare the direct 1->3 similarity against the 1->2->3 path.

    Builds Householder operators for both legs, pushes v1 through them
    (evaluated as matrix-vector products; composition is associative), and
    reports both similarities, the coefficient constraints of each leg at
    its departure state, and the absolute discrepancy. Reflections map
    exactly, so the discrepancy stays at double-precision round-off.
    """
    h12 = householder_transition(v1, v2)
    mid = h12.matrix @ v1.components
    constraint_12 = float(mid @ mid)
    del h12  # keep at most one N x N matrix alive so its buffer gets reused

    h23 = householder_transition(v2, v3)
    indirect_state = h23.matrix @ mid
    image_23 = h23.matrix @ v2.components

    direct = cosine_similarity(v1, v3)
    indirect = clamp_similarity(float(v1.components @ indirect_state))
    return TransitionReport(
        direct_similarity=direct,
        indirect_similarity=indirect,
        constraint_12=constraint_12,
        constraint_23=float(image_23 @ image_23),
        discrepancy=abs(direct - indirect),
    )
