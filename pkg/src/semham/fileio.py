"""Reading and writing "semham-emb/1" embedding files and CSV exports.

The embedding file is a single JSON document:

    {
      "format_version": "semham-emb/1",
      "model": "optional model name",
      "dim": 768,
      "entries": [
        {"id": "state1", "text": "optional source text", "values": [...]},
        ...
      ]
    }

Entries must share ``dim``, carry unique ids, and be unit-norm within the
load tolerance (slightly off-norm vectors, typical after 32-bit model
output round-trips, are renormalized and counted).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .embedding import NORM_TOL, EmbeddingVector
from .errors import (
    DimensionMismatchError,
    DuplicateIdError,
    ParseError,
    UnknownIdError,
)

FORMAT_VERSION = "semham-emb/1"


@dataclass(eq=False)
class EmbeddingFile:
    """A validated set of same-dimension embedding vectors."""

    dim: int
    entries: list[EmbeddingVector] = field(default_factory=list)
    model: str | None = None
    format_version: str = FORMAT_VERSION
    renormalized_count: int = 0

    def ids(self) -> list[str]:
        return [e.id for e in self.entries]

    def get(self, entry_id: str) -> EmbeddingVector:
        for entry in self.entries:
            if entry.id == entry_id:
                return entry
        raise UnknownIdError(entry_id)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParseError(message)


def load_embeddings(path) -> EmbeddingFile:
    """Parse and validate an embedding file.

    Raises ParseError for structural or value-level problems (bad JSON,
    wrong format_version, non-finite values), DimensionMismatchError when
    an entry disagrees with the declared dim, DuplicateIdError for
    repeated ids, and NormOutOfRangeError when a vector cannot be
    reconciled with the unit-norm policy.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc

    _require(isinstance(doc, dict), f"{path}: top level must be an object")
    _require(doc.get("format_version") == FORMAT_VERSION,
             f"{path}: format_version must be {FORMAT_VERSION!r}, "
             f"got {doc.get('format_version')!r}")
    dim = doc.get("dim")
    _require(isinstance(dim, int) and dim >= 2,
             f"{path}: dim must be an integer >= 2, got {dim!r}")
    raw_entries = doc.get("entries")
    _require(isinstance(raw_entries, list), f"{path}: entries must be a list")
    model = doc.get("model")
    _require(model is None or isinstance(model, str),
             f"{path}: model must be a string when present")

    entries: list[EmbeddingVector] = []
    seen: set[str] = set()
    renormalized = 0
    for pos, raw in enumerate(raw_entries):
        where = f"{path}: entries[{pos}]"
        _require(isinstance(raw, dict), f"{where} must be an object")
        entry_id = raw.get("id")
        _require(isinstance(entry_id, str) and entry_id,
                 f"{where}: id must be a non-empty string")
        if entry_id in seen:
            raise DuplicateIdError(f"{where}: duplicate id {entry_id!r}")
        seen.add(entry_id)
        text = raw.get("text")
        _require(text is None or isinstance(text, str),
                 f"{where}: text must be a string when present")
        values = raw.get("values")
        _require(isinstance(values, list), f"{where}: values must be a list")
        arr = np.asarray(values, dtype=np.float64)
        _require(arr.ndim == 1 and np.all(np.isfinite(arr)),
                 f"{where}: values must be a flat list of finite numbers")
        if arr.size != dim:
            raise DimensionMismatchError(
                f"{where}: expected {dim} values, got {arr.size}"
            )
        if abs(float(np.linalg.norm(arr)) - 1.0) > NORM_TOL:
            renormalized += 1  # still subject to LOAD_TOL inside the constructor
        entries.append(EmbeddingVector(arr, id=entry_id, text=text))
    return EmbeddingFile(dim=dim, entries=entries, model=model,
                         renormalized_count=renormalized)


def save_embeddings(ef: EmbeddingFile, path) -> None:
    """Write the canonical JSON form (fixed field order, exact floats)."""
    doc = {
        "format_version": ef.format_version,
        "model": ef.model,
        "dim": ef.dim,
        "entries": [
            {
                "id": entry.id,
                "text": entry.text,
                "values": [float(x) for x in entry.components],
            }
            for entry in ef.entries
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def write_csv(path, header, rows) -> None:
    """One-line header plus float rows, 17 significant digits."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(f"{float(x):.17g}" for x in row) + "\n")
