"""Time evolution of states over the rank-1 eigenbasis.

Coefficients evolve by phase only, c_n(t) = A_n exp(-i E_n t / hbar), so
evolution is computed in closed form (never by timestepping). With the
rank-1 spectrum E = (1, 0, ..., 0) only c_1 rotates in the complex plane;
the expectation value stays pinned at A_1^2, and the minimum attainable
transformed similarity over a candidate family plays the role of a
zero-point level epsilon = A_1^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .embedding import EmbeddingVector
from .errors import (
    AllNonPhysicalError,
    BadRangeError,
    DimensionMismatchError,
    EmptyCandidatesError,
    NonFiniteError,
    NonPositiveDtError,
    NonPositiveHbarError,
)
from .perturbation import COMPENSATION_TOL

TRAJECTORY_COLUMNS = ("t", "re_c1", "im_c1", "static_sum", "expectation")


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Complex coefficients over an eigenbasis at a fixed time.

    ``coefficients`` is derived: c_n = A_n exp(-i E_n t / hbar). Moduli
    never change (|c_n| = A_n), so normalization is conserved for free.
    """

    amplitudes: np.ndarray
    energies: np.ndarray
    hbar: float = 1.0
    time: float = 0.0
    coefficients: np.ndarray = field(init=False)

    def __post_init__(self):
        if self.hbar <= 0.0:
            raise NonPositiveHbarError(f"hbar must be positive, got {self.hbar!r}")
        amps = np.asarray(self.amplitudes, dtype=np.float64).copy()
        energies = np.asarray(self.energies, dtype=np.float64).copy()
        if amps.shape != energies.shape or amps.ndim != 1:
            raise DimensionMismatchError(
                f"amplitudes {amps.shape} vs energies {energies.shape}"
            )
        if not (np.all(np.isfinite(amps)) and np.all(np.isfinite(energies))):
            raise NonFiniteError("amplitudes and energies must be finite")
        coeffs = amps * np.exp(-1j * energies * self.time / self.hbar)
        for name, arr in (("amplitudes", amps), ("energies", energies),
                          ("coefficients", coeffs)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def dim(self) -> int:
        return self.amplitudes.size


def rank_one_state(amplitudes, hbar: float = 1.0) -> QuantumState:
    """State over a rank-1 spectrum: E_1 = 1, all other energies 0."""
    amplitudes = np.asarray(amplitudes, dtype=np.float64)
    energies = np.zeros(amplitudes.size)
    energies[0] = 1.0
    return QuantumState(amplitudes=amplitudes, energies=energies, hbar=hbar)


def evolve(state: QuantumState, t: float) -> QuantumState:
    """The same state at time t; only phases move."""
    return replace(state, time=float(t))


def expectation(state: QuantumState) -> float:
    """sum_n |c_n(t)|^2 E_n, constant in time (equals A_1^2 for rank-1)."""
    return float(np.abs(state.coefficients) ** 2 @ state.energies)


def _coefficients_at(state: QuantumState, t: float) -> np.ndarray:
    return state.amplitudes * np.exp(-1j * state.energies * t / state.hbar)


def schrodinger_residual(state: QuantumState, t: float, dt: float) -> float:
    """Inf-norm residual of i hbar dpsi/dt = D psi via central differences.

    The closed-form coefficients satisfy the equation exactly, so the
    residual is pure truncation error, O(dt^2): halving dt divides it by
    about 4 until float noise takes over.
    """
    if dt <= 0.0:
        raise NonPositiveDtError(f"dt must be positive, got {dt!r}")
    derivative = (_coefficients_at(state, t + dt)
                  - _coefficients_at(state, t - dt)) / (2.0 * dt)
    residual = 1j * state.hbar * derivative - state.energies * _coefficients_at(state, t)
    return float(np.max(np.abs(residual)))


@dataclass(frozen=True, eq=False)
class ZeroPointResult:
    """Minimum transformed similarity over a candidate multiplier family."""

    epsilon: float
    a1: float
    argmin_v: np.ndarray
    skipped: tuple[int, ...] = ()


def zero_point(a: EmbeddingVector, candidates) -> ZeroPointResult:
    """Minimize (v . a)^2 / (v . v) over candidate multiplier vectors.

    Candidates that perfectly compensate the anchor (|v . a| <= 1e-12,
    including v = 0) are skipped and their indices reported. The minimum
    is the zero-point level epsilon > 0 with amplitude A_1 = sqrt(epsilon).
    """
    candidates = list(candidates)
    if not candidates:
        raise EmptyCandidatesError("need at least one candidate multiplier vector")
    best = None
    best_v = None
    skipped: list[int] = []
    for idx, v in enumerate(candidates):
        v = np.asarray(v, dtype=np.float64)
        if v.shape != (a.dim,):
            raise DimensionMismatchError(
                f"candidate {idx} shape {v.shape} vs dim {a.dim}"
            )
        va = float(v @ a.components)
        if abs(va) <= COMPENSATION_TOL:
            skipped.append(idx)
            continue
        value = va * va / float(v @ v)
        if best is None or value < best:
            best = value
            best_v = v
    if best is None:
        raise AllNonPhysicalError(
            f"all {len(candidates)} candidates perfectly compensate the anchor"
        )
    return ZeroPointResult(epsilon=best, a1=float(np.sqrt(best)),
                           argmin_v=best_v.copy(), skipped=tuple(skipped))


def trajectory(state: QuantumState, t0: float, t1: float, steps: int) -> np.ndarray:
    """Sample the evolving state on a uniform time grid.

    Returns an array with one row per sample and columns
    ``TRAJECTORY_COLUMNS``: time, real and imaginary parts of c_1, the
    static amplitude sum over the zero-energy modes (n >= 2), and the
    expectation value (constant across the grid).
    """
    if not t1 > t0:
        raise BadRangeError(f"need t1 > t0, got [{t0!r}, {t1!r}]")
    if steps < 2:
        raise BadRangeError(f"need at least 2 samples, got {steps}")
    times = np.linspace(t0, t1, steps)
    static_sum = float(np.sum(state.amplitudes[1:]))
    out = np.empty((steps, len(TRAJECTORY_COLUMNS)))
    for row, t in enumerate(times):
        at_t = evolve(state, t)
        c1 = at_t.coefficients[0]
        out[row] = (t, c1.real, c1.imag, static_sum, expectation(at_t))
    return out
