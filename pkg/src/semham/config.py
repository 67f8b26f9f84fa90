"""Run configuration shared by the CLI commands."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass

TOL_ENV_VAR = "SEMHAM_TOL"

DEFAULT_NORM_TOL = 1e-9
DEFAULT_CONSTRAINT_TOL = 1e-6


@dataclass(frozen=True)
class RunConfig:
    """Tolerances and knobs echoed into every report for reproducibility."""

    norm_tol: float = DEFAULT_NORM_TOL
    constraint_tol: float = DEFAULT_CONSTRAINT_TOL
    hbar: float = 1.0
    seed: int = 0
    strict_multipliers: bool = False
    output_path: str | None = None

    def __post_init__(self):
        if self.norm_tol <= 0.0 or self.constraint_tol <= 0.0:
            raise ValueError("tolerances must be positive")
        if self.hbar <= 0.0:
            raise ValueError("hbar must be positive")

    def echo(self) -> dict:
        return asdict(self)


def resolve_constraint_tol(cli_value: float | None) -> float:
    """Explicit --tol wins, then the SEMHAM_TOL environment, then the default."""
    if cli_value is not None:
        return cli_value
    env = os.environ.get(TOL_ENV_VAR)
    if env is not None:
        try:
            return float(env)
        except ValueError as exc:
            raise ValueError(f"{TOL_ENV_VAR}={env!r} is not a number") from exc
    return DEFAULT_CONSTRAINT_TOL
