"""Constrained perturbations of maximally dissimilar vectors.

A perturbed state is b = -a + delta. Requiring b to stay on the unit
hypersphere pins the residual

    r(a, delta) = -2 sum_i a_i delta_i + sum_i delta_i^2 = 0

and with delta_i = v_i * scale the unique nonzero root of r is

    scale = 2 (v . a) / (v . v)

which gives the closed-form similarity  S = -1 + 2 (v . a)^2 / (v . v).
The functions here compute those quantities and package the perturbed
vector together with its excitation epsilon = S + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embedding import EmbeddingVector, clamp_similarity
from .errors import (
    AllZeroError,
    ConstraintViolatedError,
    DegenerateMultipliersError,
    DimensionMismatchError,
    EqualIndicesError,
    IndexOutOfRangeError,
    NonPhysicalConfigurationError,
)

CONSTRAINT_TOL = 1e-10
COMPENSATION_TOL = 1e-12
ZERO_COMPONENT_TOL = 1e-15


@dataclass(frozen=True, eq=False)
class PerturbationProfile:
    """Per-dimension change delta with its multiplier decomposition."""

    delta: np.ndarray
    v: np.ndarray
    scale: float

    def __post_init__(self):
        delta = np.asarray(self.delta, dtype=np.float64)
        v = np.asarray(self.v, dtype=np.float64)
        if delta.shape != v.shape:
            raise DimensionMismatchError(
                f"delta shape {delta.shape} vs multipliers {v.shape}"
            )
        for name, arr in (("delta", delta), ("v", v)):
            arr = arr.copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @classmethod
    def from_multipliers(cls, v, scale: float) -> "PerturbationProfile":
        v = np.asarray(v, dtype=np.float64)
        return cls(delta=v * scale, v=v, scale=float(scale))

    @property
    def active_dims(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.nonzero(self.v)[0])


@dataclass(frozen=True, eq=False)
class PerturbationResult:
    """A perturbed state with its similarity to the anchor.

    ``epsilon`` is the excitation S + 1 (strictly positive for any
    physical configuration); ``transformed`` is the [0, 1]-valued
    similarity epsilon / 2.
    """

    perturbed: EmbeddingVector
    similarity: float
    epsilon: float
    profile: PerturbationProfile

    @property
    def transformed(self) -> float:
        return self.epsilon / 2.0


def check_multiplier_convention(v) -> None:
    """Strict-mode validation: every multiplier is 0 or has |v_i| >= 1."""
    v = np.asarray(v, dtype=np.float64)
    bad = np.nonzero((v != 0.0) & (np.abs(v) < 1.0))[0]
    if bad.size:
        raise ValueError(
            f"multipliers at indices {bad.tolist()} violate |v_i| >= 1 or v_i = 0"
        )


def constraint_residual(a: EmbeddingVector, delta) -> float:
    """Residual -2 sum(a_i delta_i) + sum(delta_i^2); zero iff -a + delta is unit."""
    delta = np.asarray(delta, dtype=np.float64)
    if delta.shape != (a.dim,):
        raise DimensionMismatchError(
            f"delta shape {delta.shape} vs anchor dim {a.dim}"
        )
    return float(-2.0 * (a.components @ delta) + delta @ delta)


def similarity_from_delta(delta, anchor: EmbeddingVector | None = None) -> float:
    """Similarity -1 + sum(delta_i^2)/2 of a norm-preserving perturbation.

    When ``anchor`` is given the norm-preservation constraint is checked
    and ConstraintViolatedError raised if the residual exceeds
    ``CONSTRAINT_TOL``; without it the caller asserts the constraint.
    """
    delta = np.asarray(delta, dtype=np.float64)
    if anchor is not None:
        residual = constraint_residual(anchor, delta)
        if abs(residual) > CONSTRAINT_TOL:
            raise ConstraintViolatedError(
                f"constraint residual {residual:.3e} exceeds {CONSTRAINT_TOL:g}"
            )
    return clamp_similarity(-1.0 + 0.5 * float(delta @ delta))


def _build_result(a: EmbeddingVector, profile: PerturbationProfile,
                  similarity: float) -> PerturbationResult:
    perturbed = EmbeddingVector(-a.components + profile.delta)
    similarity = clamp_similarity(similarity)
    return PerturbationResult(
        perturbed=perturbed,
        similarity=similarity,
        epsilon=similarity + 1.0,
        profile=profile,
    )


def smallest_perturbation(a: EmbeddingVector) -> PerturbationResult:
    """Flip the single dimension of smallest nonzero magnitude.

    The only nonzero root of the single-dimension constraint is
    delta_i = 2 a_i, so the perturbed state equals -a with the sign of
    component i restored, at similarity -1 + 2 a_i^2. Ties between
    equal-magnitude minima resolve to the lowest index; exact zeros are
    excluded (flipping them changes nothing).
    """
    mags = np.abs(a.components)
    eligible = mags > ZERO_COMPONENT_TOL
    if not np.any(eligible):
        raise AllZeroError("no component with magnitude above 1e-15")
    masked = np.where(eligible, mags, np.inf)
    i = int(np.argmin(masked))
    a_i = float(a.components[i])
    v = np.zeros(a.dim)
    v[i] = 1.0
    profile = PerturbationProfile.from_multipliers(v, 2.0 * a_i)
    return _build_result(a, profile, -1.0 + 2.0 * a_i * a_i)


def solve_two_dim(a: EmbeddingVector, i: int, j: int,
                  v_i: float, v_j: float, *, strict: bool = False) -> PerturbationResult:
    """Solve the two-dimension perturbation for multipliers (v_i, v_j).

    delta_i = 2 v_i (v_i a_i + v_j a_j) / (v_i^2 + v_j^2), likewise for j,
    and S = -1 + 2 (v_i a_i + v_j a_j)^2 / (v_i^2 + v_j^2). With v_j = 0
    this reduces to the single-dimension flip.
    """
    if i == j:
        raise EqualIndicesError(f"indices must differ, got i = j = {i}")
    for idx in (i, j):
        if not 0 <= idx < a.dim:
            raise IndexOutOfRangeError(f"index {idx} outside [0, {a.dim})")
    v = np.zeros(a.dim)
    v[i] = v_i
    v[j] = v_j
    return general_similarity(a, v, strict=strict)


def general_similarity(a: EmbeddingVector, v, *, strict: bool = False) -> PerturbationResult:
    """Perturbation generated by an arbitrary multiplier vector v.

    Raises NonPhysicalConfigurationError when v . a vanishes (the
    perturbed state would sit exactly at similarity -1, excluded from the
    system) and DegenerateMultipliersError for v = 0.
    """
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (a.dim,):
        raise DimensionMismatchError(f"multiplier shape {v.shape} vs dim {a.dim}")
    if strict:
        check_multiplier_convention(v)
    vv = float(v @ v)
    if vv <= 1e-12 ** 2:
        raise DegenerateMultipliersError("multiplier vector is zero")
    va = float(v @ a.components)
    if abs(va) <= COMPENSATION_TOL:
        raise NonPhysicalConfigurationError(
            f"sum v_i a_i = {va!r} vanishes; perfect compensation is excluded"
        )
    scale = 2.0 * va / vv
    profile = PerturbationProfile.from_multipliers(v, scale)
    return _build_result(a, profile, -1.0 + 2.0 * va * va / vv)


def chain_perturbations(delta1, delta2) -> np.ndarray:
    """Combine two perturbations of the same anchor componentwise.

    The sum generally violates the norm constraint and must be re-solved
    against the anchor before use.
    """
    delta1 = np.asarray(delta1, dtype=np.float64)
    delta2 = np.asarray(delta2, dtype=np.float64)
    if delta1.shape != delta2.shape:
        raise DimensionMismatchError(
            f"delta shapes {delta1.shape} vs {delta2.shape}"
        )
    return delta1 + delta2
