"""Seeded generation of uniformly distributed unit vectors."""

from __future__ import annotations

import numpy as np

from .embedding import EmbeddingVector


def make_rng(seed: int | None) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_unit_vector(dim: int, rng: np.random.Generator) -> np.ndarray:
    """One point uniform on the hypersphere: normalized iid Gaussians."""
    while True:
        raw = rng.standard_normal(dim)
        norm = np.linalg.norm(raw)
        if norm > 1e-12:  # astronomically unlikely to loop
            return raw / norm


def random_unit_vectors(count: int, dim: int, rng: np.random.Generator) -> np.ndarray:
    """(count, dim) array of independent uniform unit vectors."""
    out = np.empty((count, dim))
    for k in range(count):
        out[k] = random_unit_vector(dim, rng)
    return out


def random_embedding(dim: int, rng: np.random.Generator,
                     id: str | None = None) -> EmbeddingVector:
    return EmbeddingVector(random_unit_vector(dim, rng), id=id)
