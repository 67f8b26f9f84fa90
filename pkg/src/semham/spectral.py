"""Rank-1 modified Hamiltonians and their exact spectral decomposition.

H' = v v^T / (v . v) is a symmetric projector with trace 1: one eigenvalue
1 (eigenvector v/||v||) and N-1 zeros spanning the orthogonal complement.
The decomposition is built directly from that structure: the leading
column is v/||v||, the rest come from modified Gram-Schmidt over standard
basis vectors, so no general-purpose eigensolver is needed (or shipped;
tests compare against one as an oracle).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embedding import EmbeddingVector
from .errors import (
    DegenerateMultipliersError,
    DimensionMismatchError,
    EqualIndicesError,
    IndexOutOfRangeError,
)
from .transitions import TransitionOperator

SIGN_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class RankOneHamiltonian:
    """Projector v v^T / (v . v) onto the multiplier direction."""

    v: np.ndarray
    matrix: np.ndarray

    def __post_init__(self):
        for name in ("v", "matrix"):
            arr = np.asarray(getattr(self, name), dtype=np.float64).copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def dim(self) -> int:
        return self.v.size


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Eigenvalues [1, 0, ..., 0] and the orthonormal basis carrying them."""

    eigenvalues: np.ndarray
    basis: np.ndarray

    def __post_init__(self):
        for name in ("eigenvalues", "basis"):
            arr = np.asarray(getattr(self, name), dtype=np.float64).copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def dim(self) -> int:
        return self.eigenvalues.size


def h_prime_from_h(op: TransitionOperator) -> np.ndarray:
    """Shift a transition operator into [0, 1] form: H' = (H + I)/2.

    Eigenvectors are preserved; the quadratic form becomes the transformed
    similarity (a^T H a + 1)/2.
    """
    m = op.matrix.copy()
    m /= 2.0
    m[np.arange(op.dim), np.arange(op.dim)] += 0.5
    return m


def build_rank_one(v) -> RankOneHamiltonian:
    """Build H' = v v^T / (v . v) from a nonzero multiplier vector."""
    v = np.asarray(v, dtype=np.float64)
    norm = float(np.linalg.norm(v))
    if norm <= 1e-12:
        raise DegenerateMultipliersError("multiplier vector is zero")
    return RankOneHamiltonian(v=v, matrix=np.outer(v, v) / (norm * norm))


def first_perturbation_matrix(i: int, dim: int) -> np.ndarray:
    """Single-flip Hamiltonian: 1 at (i, i), zero elsewhere; a^T H a = a_i^2."""
    if not 0 <= i < dim:
        raise IndexOutOfRangeError(f"index {i} outside [0, {dim})")
    m = np.zeros((dim, dim))
    m[i, i] = 1.0
    return m


def second_perturbation_matrix(i: int, j: int, dim: int) -> np.ndarray:
    """Two-dimension Hamiltonian: 1/2 at (i,i), (j,j), (i,j), (j,i).

    Its quadratic form is (a_i + a_j)^2 / 2.
    """
    if i == j:
        raise EqualIndicesError(f"indices must differ, got i = j = {i}")
    for idx in (i, j):
        if not 0 <= idx < dim:
            raise IndexOutOfRangeError(f"index {idx} outside [0, {dim})")
    m = np.zeros((dim, dim))
    m[i, i] = m[j, j] = m[i, j] = m[j, i] = 0.5
    return m


def _fix_sign(col: np.ndarray) -> np.ndarray:
    # deterministic sign: first entry with magnitude > SIGN_TOL made positive
    for x in col:
        if abs(x) > SIGN_TOL:
            return -col if x < 0 else col
    return col


def _orthonormal_basis(v: np.ndarray) -> np.ndarray:
    """Orthonormal basis whose first column is parallel to v.

    Modified Gram-Schmidt with one re-orthogonalization pass, seeded with
    the standard basis minus the axis where |v_i| peaks (that axis is
    replaced by v itself, keeping the seed set linearly independent).
    """
    n = v.size
    basis = np.empty((n, n))
    basis[:, 0] = _fix_sign(v / np.linalg.norm(v))
    lead = int(np.argmax(np.abs(v)))
    col = 1
    for k in range(n):
        if k == lead:
            continue
        u = np.zeros(n)
        u[k] = 1.0
        for _ in range(2):
            for c in range(col):
                u -= (basis[:, c] @ u) * basis[:, c]
        u /= np.linalg.norm(u)
        basis[:, col] = _fix_sign(u)
        col += 1
    return basis


def diagonalize(h: RankOneHamiltonian) -> SpectralDecomposition:
    """Exact spectral decomposition of the rank-1 projector.

    D = diag(1, 0, ..., 0); column 1 of the basis is v/||v|| (sign fixed),
    the remaining columns are orthonormal and orthogonal to v.
    """
    eigenvalues = np.zeros(h.dim)
    eigenvalues[0] = 1.0
    return SpectralDecomposition(eigenvalues=eigenvalues,
                                 basis=_orthonormal_basis(h.v))


def project_state(a: EmbeddingVector, dec: SpectralDecomposition) -> np.ndarray:
    """Amplitudes A = U^T a of a state over the eigenbasis.

    The projection is an isometry (sum A_n^2 = 1) and A_1^2 equals the
    transformed similarity a^T H' a.
    """
    if a.dim != dec.dim:
        raise DimensionMismatchError(f"vector dim {a.dim} vs basis {dec.dim}")
    return dec.basis.T @ a.components
