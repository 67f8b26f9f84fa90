"""Unit-norm embedding vectors and the elementary similarity operations.

Everything downstream (perturbations, transition operators, spectral
analysis) assumes vectors on the unit hypersphere, so this module owns the
normalization policy:

* construction accepts vectors whose norm is within ``LOAD_TOL`` of 1 and
  silently renormalizes anything off by more than ``NORM_TOL`` (covers
  32-bit round-trip loss from embedding models);
* norms further out are rejected rather than silently fixed.

All arithmetic is float64. Similarities are plain floats, clamped to
[-1, 1] only for round-off smaller than ``CLAMP_TOL``; larger excursions
indicate a logic bug and raise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    DimensionTooSmallError,
    NonFiniteError,
    NormOutOfRangeError,
    SimilarityOutOfRangeError,
    ZeroVectorError,
)

NORM_TOL = 1e-9
LOAD_TOL = 1e-3
CLAMP_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class EmbeddingVector:
    """An L2-normalized real vector, the basic semantic state.

    Args:
        components: 1-D real sequence; must already be unit-norm within
            ``LOAD_TOL`` (use :func:`normalize` for arbitrary raw vectors).
        id: optional opaque label carried through reports.
        text: optional source string the vector was derived from.
    """

    components: np.ndarray
    id: str | None = None
    text: str | None = None

    def __post_init__(self):
        arr = np.asarray(self.components, dtype=np.float64)
        if arr.ndim != 1:
            raise DimensionTooSmallError(
                f"expected a 1-D vector, got shape {arr.shape}"
            )
        if arr.size < 2:
            raise DimensionTooSmallError(
                f"embedding vectors need dim >= 2, got {arr.size}"
            )
        if not np.all(np.isfinite(arr)):
            raise NonFiniteError("embedding components must be finite")
        norm = float(np.linalg.norm(arr))
        off = abs(norm - 1.0)
        if off > LOAD_TOL:
            raise NormOutOfRangeError(
                f"norm {norm!r} deviates from 1 by {off:.3e} "
                f"(> load tolerance {LOAD_TOL:g})"
            )
        arr = arr.copy() if off <= NORM_TOL else arr / norm
        arr.setflags(write=False)
        object.__setattr__(self, "components", arr)

    @property
    def dim(self) -> int:
        return self.components.size

    def __repr__(self) -> str:  # full 768-entry arrays are useless in logs
        label = f", id={self.id!r}" if self.id is not None else ""
        return f"EmbeddingVector(dim={self.dim}{label})"


def normalize(raw, *, id: str | None = None, text: str | None = None) -> EmbeddingVector:
    """Scale a raw vector onto the unit hypersphere.

    Args:
        raw: any finite real sequence with dim >= 2 and norm > 1e-12.

    Returns:
        An :class:`EmbeddingVector` pointing in the direction of ``raw``
        with unit norm (within 1e-12).

    Raises:
        ZeroVectorError: norm of ``raw`` is at or below 1e-12.
        NonFiniteError: any entry is NaN or infinite.
        DimensionTooSmallError: fewer than two dimensions.
    """
    arr = np.asarray(raw, dtype=np.float64)
    if arr.ndim != 1 or arr.size < 2:
        raise DimensionTooSmallError(
            f"expected a 1-D vector with dim >= 2, got shape {arr.shape}"
        )
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError("cannot normalize non-finite input")
    norm = float(np.linalg.norm(arr))
    if norm <= 1e-12:
        raise ZeroVectorError(f"cannot normalize vector with norm {norm!r}")
    return EmbeddingVector(arr / norm, id=id, text=text)


def clamp_similarity(value: float) -> float:
    """Clamp round-off just past [-1, 1]; reject anything further out."""
    if value > 1.0:
        if value - 1.0 > CLAMP_TOL:
            raise SimilarityOutOfRangeError(
                f"similarity {value!r} exceeds 1 by more than {CLAMP_TOL:g}"
            )
        return 1.0
    if value < -1.0:
        if -1.0 - value > CLAMP_TOL:
            raise SimilarityOutOfRangeError(
                f"similarity {value!r} is below -1 by more than {CLAMP_TOL:g}"
            )
        return -1.0
    return value


def cosine_similarity(a: EmbeddingVector, b: EmbeddingVector) -> float:
    """Cosine similarity of two normalized vectors (their dot product)."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dim {a.dim} vs {b.dim}")
    return clamp_similarity(float(a.components @ b.components))


def maximally_dissimilar(a: EmbeddingVector) -> EmbeddingVector:
    """The negation of ``a``, the unique vector at cosine similarity -1."""
    return EmbeddingVector(-a.components)


def transform_similarity(score: float) -> float:
    """Map a cosine similarity from [-1, 1] onto [0, 1] via (s + 1) / 2."""
    return (clamp_similarity(score) + 1.0) / 2.0
