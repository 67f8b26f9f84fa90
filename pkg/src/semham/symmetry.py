"""Parity and plane-rotation operators, and the swap-decomposition check.

The single-flip Hamiltonian's quadratic form a_i^2 is invariant under any
sign flip; the two-dimension form (a_i + a_j)^2 / 2 is invariant under
exchanging or jointly negating a_i and a_j. Those invariances hold
unconditionally and are asserted by tests; anything else is measured via
`expectation_shift` rather than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .embedding import EmbeddingVector
from .errors import DimensionMismatchError, EqualIndicesError, IndexOutOfRangeError
from .perturbation import solve_two_dim

SWAP_TOL = 1e-12
ORTHOGONALITY_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class ParityOperator:
    """Diagonal +-1 matrix flipping the sign of selected dimensions."""

    signs: np.ndarray

    def __post_init__(self):
        signs = np.asarray(self.signs, dtype=np.float64).copy()
        if not np.all(np.abs(signs) == 1.0):
            raise ValueError("parity entries must be exactly +1 or -1")
        signs.setflags(write=False)
        object.__setattr__(self, "signs", signs)

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(self.signs)

    @classmethod
    def flipping(cls, dims, dim: int) -> "ParityOperator":
        """Parity flipping exactly the listed dimensions."""
        signs = np.ones(dim)
        for d in dims:
            if not 0 <= d < dim:
                raise IndexOutOfRangeError(f"index {d} outside [0, {dim})")
            signs[d] = -1.0
        return cls(signs)


@dataclass(frozen=True)
class RotationOperator:
    """Rotation by theta in the (i, j) coordinate plane."""

    i: int
    j: int
    theta: float

    def __post_init__(self):
        if self.i == self.j:
            raise EqualIndicesError(f"plane needs two axes, got i = j = {self.i}")

    def matrix(self, dim: int) -> np.ndarray:
        self._check_range(dim)
        m = np.eye(dim)
        c, s = math.cos(self.theta), math.sin(self.theta)
        m[self.i, self.i] = c
        m[self.i, self.j] = -s
        m[self.j, self.i] = s
        m[self.j, self.j] = c
        return m

    def _check_range(self, dim: int) -> None:
        for idx in (self.i, self.j):
            if not 0 <= idx < dim:
                raise IndexOutOfRangeError(f"index {idx} outside [0, {dim})")


def apply_parity(p: ParityOperator, a: EmbeddingVector) -> EmbeddingVector:
    """Componentwise sign flips; the norm is preserved exactly."""
    if p.signs.size != a.dim:
        raise DimensionMismatchError(f"parity dim {p.signs.size} vs vector {a.dim}")
    return EmbeddingVector(p.signs * a.components)


def apply_rotation(r: RotationOperator, a: EmbeddingVector) -> EmbeddingVector:
    """Rotate in the (i, j) plane; all other components pass through."""
    r._check_range(a.dim)
    c, s = math.cos(r.theta), math.sin(r.theta)
    out = a.components.copy()
    out[r.i] = c * a.components[r.i] - s * a.components[r.j]
    out[r.j] = s * a.components[r.i] + c * a.components[r.j]
    return EmbeddingVector(out)


def expectation_shift(op, h: np.ndarray, a: EmbeddingVector) -> float:
    """<Ta|H|Ta> - <a|H|a> for T a parity or rotation operator.

    Zero when H commutes with T; generally nonzero, which is the point:
    symmetry of a given Hamiltonian is measured, not presumed.
    """
    if isinstance(op, ParityOperator):
        moved = apply_parity(op, a)
    elif isinstance(op, RotationOperator):
        moved = apply_rotation(op, a)
    else:
        raise TypeError(f"expected ParityOperator or RotationOperator, got {type(op)!r}")
    h = np.asarray(h, dtype=np.float64)
    if h.shape != (a.dim, a.dim):
        raise DimensionMismatchError(f"matrix shape {h.shape} vs dim {a.dim}")
    before = float(a.components @ h @ a.components)
    after = float(moved.components @ h @ moved.components)
    return after - before


@dataclass(frozen=True, eq=False)
class SwapDecomposition:
    """Outcome of checking b = M a for the swap-perturbation matrix M."""

    matrix: np.ndarray
    perturbed: EmbeddingVector
    max_error: float
    orthogonality_residual: float
    determinant: float
    passed: bool


def verify_swap_decomposition(a: EmbeddingVector, i: int, j: int) -> SwapDecomposition:
    """Check that the v = e_i + e_j perturbation is a signed swap.

    Solving the two-dimension perturbation with unit multipliers exchanges
    components i and j and negates the rest, i.e. b = M a where M is -I
    outside the (i, j) block and the plain swap inside it. Records the
    residual, M's orthogonality, and det(M) (the parity content, +-1).
    """
    result = solve_two_dim(a, i, j, 1.0, 1.0)
    n = a.dim
    m = -np.eye(n)
    m[i, i] = m[j, j] = 0.0
    m[i, j] = m[j, i] = 1.0
    image = m @ a.components
    max_error = float(np.max(np.abs(result.perturbed.components - image)))
    orth = float(np.max(np.abs(m.T @ m - np.eye(n))))
    return SwapDecomposition(
        matrix=m,
        perturbed=result.perturbed,
        max_error=max_error,
        orthogonality_residual=orth,
        determinant=float(np.linalg.det(m)),
        passed=max_error <= SWAP_TOL and orth <= ORTHOGONALITY_TOL,
    )
