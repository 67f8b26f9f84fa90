"""Encode text prompts into a "semham-emb/1" embedding file.

Thin batch script: resolve a sentence-embedding model, encode the prompts,
L2-normalize, write JSON. No model is pinned; the name is a required
argument. Names of the form ``hash:<dim>`` select a deterministic offline
encoder (text-seeded Gaussian unit vectors) so the pipeline can run and be
tested without model downloads; it carries no semantics.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field

import numpy as np

FORMAT_VERSION = "semham-emb/1"


class ModelUnavailableError(RuntimeError):
    """The named embedding model cannot be loaded."""


class WriteError(OSError):
    """The output file cannot be written."""


@dataclass
class ExtractionRequest:
    model_name: str
    prompts: list[tuple[str, str]]  # (id, text)
    output_path: str
    normalize: bool = field(default=True)

    def __post_init__(self):
        if not self.prompts:
            raise ValueError("at least one prompt is required")
        ids = [pid for pid, _ in self.prompts]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"duplicate prompt ids: {dupes}")
        for pid, text in self.prompts:
            if not pid or not text:
                raise ValueError(f"empty id or text in prompt {pid!r}")


def _hash_encode(texts: list[str], dim: int) -> np.ndarray:
    out = np.empty((len(texts), dim))
    for row, text in enumerate(texts):
        digest = hashlib.sha256(text.encode("utf-8")).digest()
        rng = np.random.default_rng(int.from_bytes(digest[:8], "little"))
        out[row] = rng.standard_normal(dim)
    return out


def _model_encode(model_name: str, texts: list[str]) -> np.ndarray:
    try:
        from sentence_transformers import SentenceTransformer
    except ImportError as exc:
        raise ModelUnavailableError(
            "sentence-transformers is not installed; "
            "pip install 'semham-extract[model]'"
        ) from exc
    try:
        model = SentenceTransformer(model_name)
        return np.asarray(model.encode(texts), dtype=np.float64)
    except Exception as exc:
        raise ModelUnavailableError(f"cannot load or run {model_name!r}: {exc}") from exc


def encode(model_name: str, texts: list[str]) -> np.ndarray:
    """(len(texts), dim) float64 matrix from the named encoder."""
    if model_name.startswith("hash:"):
        try:
            dim = int(model_name.split(":", 1)[1])
        except ValueError as exc:
            raise ModelUnavailableError(f"bad offline encoder spec {model_name!r}") from exc
        if dim < 2:
            raise ModelUnavailableError("offline encoder needs dim >= 2")
        return _hash_encode(texts, dim)
    return _model_encode(model_name, texts)


def extract(req: ExtractionRequest) -> dict:
    """Encode the prompts and write the embedding file; returns the document."""
    vectors = encode(req.model_name, [text for _, text in req.prompts])
    if req.normalize:
        norms = np.linalg.norm(vectors, axis=1, keepdims=True)
        if np.any(norms <= 1e-12):
            raise ModelUnavailableError("encoder produced a zero vector")
        vectors = vectors / norms
    doc = {
        "format_version": FORMAT_VERSION,
        "model": req.model_name,
        "dim": int(vectors.shape[1]),
        "entries": [
            {"id": pid, "text": text, "values": [float(x) for x in vectors[row]]}
            for row, (pid, text) in enumerate(req.prompts)
        ],
    }
    try:
        with open(req.output_path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    except OSError as exc:
        raise WriteError(f"cannot write {req.output_path!r}: {exc}") from exc
    return doc


def _parse_prompt(item: str) -> tuple[str, str]:
    pid, sep, text = item.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(
            f"prompt must look like id=text, got {item!r}")
    return pid.strip(), text.strip()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="semham-extract", description=__doc__)
    parser.add_argument("--model", required=True,
                        help="sentence-transformers model name, or hash:<dim> "
                             "for the deterministic offline encoder")
    parser.add_argument("--out", required=True, help="output JSON path")
    parser.add_argument("--prompt", action="append", required=True,
                        type=_parse_prompt, metavar="ID=TEXT",
                        help="prompt to encode (repeatable)")
    parser.add_argument("--no-normalize", action="store_true",
                        help="write raw encoder output instead of unit vectors")
    args = parser.parse_args(argv)
    try:
        request = ExtractionRequest(
            model_name=args.model,
            prompts=args.prompt,
            output_path=args.out,
            normalize=not args.no_normalize,
        )
        doc = extract(request)
    except (ModelUnavailableError, WriteError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {len(doc['entries'])} vectors (dim {doc['dim']}) to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
