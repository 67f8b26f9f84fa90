"""Command-line surface: semham verify|transition|perturb|spectrum|evolve|states.

Every command prints a JSON report (with the run configuration echoed) to
stdout. Exit codes: 0 success, 2 validation failure, 3 non-physical
configuration, 4 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import dynamics, perturbation, spectral, transitions
from .config import RunConfig, resolve_constraint_tol
from .embedding import EmbeddingVector, cosine_similarity, maximally_dissimilar
from .errors import (
    AllNonPhysicalError,
    NonPhysicalConfigurationError,
    ParseError,
    SemhamError,
)
from .fileio import load_embeddings, write_csv
from .sampling import make_rng, random_embedding

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NONPHYSICAL = 3
EXIT_IO = 4


def parse_vspec(spec: str, dim: int | None = None) -> np.ndarray:
    """Parse a multiplier/amplitude spec: dense "1,0,-2" or sparse "0:1,5:-2"."""
    spec = spec.strip()
    if not spec:
        raise ValueError("empty vector spec")
    try:
        if ":" in spec:
            if dim is None:
                raise ValueError("sparse vector spec needs a known dimension")
            out = np.zeros(dim)
            for item in spec.split(","):
                key, _, value = item.partition(":")
                idx = int(key)
                if not 0 <= idx < dim:
                    raise ValueError(f"sparse index {idx} outside [0, {dim})")
                out[idx] = float(value)
            return out
        return np.asarray([float(x) for x in spec.split(",")], dtype=np.float64)
    except ValueError:
        raise
    except Exception as exc:
        raise ValueError(f"cannot parse vector spec {spec!r}: {exc}") from exc


def _config_from_args(args) -> RunConfig:
    hbar = getattr(args, "hbar", None)
    seed = getattr(args, "seed", None)
    return RunConfig(
        constraint_tol=resolve_constraint_tol(getattr(args, "tol", None)),
        hbar=1.0 if hbar is None else hbar,
        seed=0 if seed is None else seed,
        strict_multipliers=bool(getattr(args, "strict", False)),
        output_path=getattr(args, "out", None),
    )


def _report(command: str, config: RunConfig, **fields) -> dict:
    doc = {"command": command, "config": config.echo()}
    doc.update(fields)
    return doc


def _resolve_triple(args, config: RunConfig):
    if args.synthetic:
        dim = args.dim or 16
        rng = make_rng(config.seed)
        vecs = [random_embedding(dim, rng, id=f"synthetic-{k}") for k in range(3)]
        return vecs, {"synthetic": True, "dim": dim, "seed": config.seed}
    if not args.input:
        raise ValueError("transition needs --input with --from/--via/--to, or --synthetic")
    ef = load_embeddings(args.input)
    ids = (args.from_id, args.via_id, args.to_id)
    if any(i is None for i in ids):
        raise ValueError("--from, --via and --to are required with --input")
    return [ef.get(i) for i in ids], {"input": args.input, "ids": list(ids)}


def cmd_transition(args) -> tuple[int, dict]:
    config = _config_from_args(args)
    (v1, v2, v3), source = _resolve_triple(args, config)
    rep = transitions.run_indirect_experiment(v1, v2, v3)
    tol = config.constraint_tol
    passed = (rep.discrepancy <= tol
              and abs(rep.constraint_12 - 1.0) <= tol
              and abs(rep.constraint_23 - 1.0) <= tol)
    report = _report(
        "transition", config,
        source=source,
        direct_similarity=rep.direct_similarity,
        indirect_similarity=rep.indirect_similarity,
        constraint_12=rep.constraint_12,
        constraint_23=rep.constraint_23,
        discrepancy=rep.discrepancy,
        passed=passed,
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
    return (EXIT_OK if passed else EXIT_VALIDATION), report


def cmd_perturb(args) -> tuple[int, dict]:
    config = _config_from_args(args)
    ef = load_embeddings(args.input)
    anchor = ef.get(args.id)
    if args.v is None:
        result = perturbation.smallest_perturbation(anchor)
        index = result.profile.active_dims[0]
        detail = {
            "mode": "smallest",
            "index": index,
            "delta_i": float(result.profile.delta[index]),
        }
    else:
        v = parse_vspec(args.v, anchor.dim)
        result = perturbation.general_similarity(
            anchor, v, strict=config.strict_multipliers)
        detail = {
            "mode": "general",
            "scale": result.profile.scale,
            "active_dims": len(result.profile.active_dims),
            "delta_norm": float(np.linalg.norm(result.profile.delta)),
        }
        if anchor.dim <= 16:
            detail["delta"] = result.profile.delta.tolist()
    raw_norm = float(np.linalg.norm(-anchor.components + result.profile.delta))
    cross_check = cosine_similarity(anchor, result.perturbed)
    report = _report(
        "perturb", config,
        input=args.input, id=args.id,
        similarity=result.similarity,
        transformed_similarity=result.transformed,
        epsilon=result.epsilon,
        perturbed_norm=raw_norm,
        dot_product_check=abs(cross_check - result.similarity),
        **detail,
    )
    return EXIT_OK, report


def cmd_spectrum(args) -> tuple[int, dict]:
    config = _config_from_args(args)
    v = parse_vspec(args.v)
    h = spectral.build_rank_one(v)
    dec = spectral.diagonalize(h)
    n = h.dim
    diag_residual = float(np.max(np.abs(
        dec.basis.T @ h.matrix @ dec.basis - np.diag(dec.eigenvalues))))
    orth_residual = float(np.max(np.abs(dec.basis.T @ dec.basis - np.eye(n))))
    report = _report(
        "spectrum", config,
        dim=n,
        eigenvalues=dec.eigenvalues.tolist(),
        trace=float(np.trace(h.matrix)),
        leading_eigenvector=dec.basis[:, 0].tolist(),
        orthogonality_residual=orth_residual,
        diagonalization_residual=diag_residual,
    )
    if args.out:
        dump = dict(report)
        dump["h_prime"] = h.matrix.tolist()
        dump["basis"] = dec.basis.tolist()
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(dump, fh, indent=2)
        report["out"] = args.out
    return EXIT_OK, report


def cmd_evolve(args) -> tuple[int, dict]:
    config = _config_from_args(args)
    amplitudes = parse_vspec(args.v)
    state = dynamics.rank_one_state(amplitudes, hbar=config.hbar)
    samples = dynamics.trajectory(state, args.t0, args.t1, args.steps)
    write_csv(args.out, dynamics.TRAJECTORY_COLUMNS, samples)
    report = _report(
        "evolve", config,
        out=args.out,
        steps=args.steps,
        t0=args.t0,
        t1=args.t1,
        expectation=dynamics.expectation(state),
        static_sum=float(np.sum(state.amplitudes[1:])),
    )
    return EXIT_OK, report


def cmd_states(args) -> tuple[int, dict]:
    config = _config_from_args(args)
    dim = args.dim or 16
    rng = make_rng(config.seed)
    anchor = random_embedding(dim, rng, id="anchor")
    dissimilar = maximally_dissimilar(anchor)
    first = perturbation.smallest_perturbation(anchor)
    i = first.profile.active_dims[0]
    # second-smallest magnitude pairs with the smallest for the swap state
    order = np.argsort(np.abs(anchor.components), kind="stable")
    j = int(order[1]) if int(order[0]) == i else int(order[0])
    swap = perturbation.solve_two_dim(anchor, i, j, 1.0, 1.0)
    rows = np.column_stack([
        np.arange(dim),
        anchor.components,
        dissimilar.components,
        first.perturbed.components,
        swap.perturbed.components,
    ])
    header = ("index", "anchor", "dissimilar", "first_perturbed", "swap_perturbed")
    write_csv(args.out, header, rows)
    report = _report(
        "states", config,
        out=args.out, dim=dim,
        flip_index=i, swap_indices=[i, j],
        first_similarity=first.similarity,
        swap_similarity=swap.similarity,
    )
    return EXIT_OK, report


def _verify_vector(a: EmbeddingVector, failures: list, norm_tol: float) -> int:
    checks = 0
    norm = float(np.linalg.norm(a.components))

    def check(ok: bool, label: str):
        nonlocal checks
        checks += 1
        if not ok:
            failures.append(f"{a.id}: {label}")

    check(abs(norm - 1.0) <= norm_tol, f"norm {norm!r} off unit")
    check(abs(cosine_similarity(a, a) - 1.0) <= 1e-12, "self-similarity != 1")
    check(abs(cosine_similarity(a, maximally_dissimilar(a)) + 1.0) <= 1e-12,
          "negation similarity != -1")
    smallest = perturbation.smallest_perturbation(a)
    residual = perturbation.constraint_residual(a, smallest.profile.delta)
    check(abs(residual) <= 1e-10, f"smallest-flip residual {residual!r}")
    brute = float(a.components @ smallest.perturbed.components)
    check(abs(brute - smallest.similarity) <= 1e-10, "smallest-flip similarity mismatch")
    return checks


def _verify_pair(a: EmbeddingVector, b: EmbeddingVector,
                 failures: list, tol: float) -> int:
    checks = 0
    label = f"({a.id}, {b.id})"

    def check(ok: bool, what: str):
        nonlocal checks
        checks += 1
        if not ok:
            failures.append(f"{label}: {what}")

    s_ab = cosine_similarity(a, b)
    s_ba = cosine_similarity(b, a)
    check(abs(s_ab - s_ba) < 1e-15, "similarity not symmetric")
    h = transitions.householder_transition(a, b)
    image = h.matrix @ a.components
    check(float(np.max(np.abs(image - b.components))) <= 1e-10,
          "Householder does not map a to b")
    check(abs(transitions.hamiltonian_constraint(h, a) - 1.0) <= tol,
          "coefficient constraint off 1")
    # b = -a + delta with delta = a + b ties the perturbation algebra to the pair
    delta = a.components + b.components
    check(abs(perturbation.constraint_residual(a, delta)) <= 1e-10,
          "pair delta violates norm constraint")
    if abs(s_ab + 1.0) > 1e-12:
        predicted = perturbation.similarity_from_delta(delta)
        check(abs(predicted - s_ab) <= 1e-10, "pair delta similarity mismatch")
    return checks


def cmd_verify(args) -> tuple[int, dict]:
    config = _config_from_args(args)
    ef = load_embeddings(args.input)
    failures: list[str] = []
    checks = 0
    for entry in ef.entries:
        checks += _verify_vector(entry, failures, config.norm_tol)
    for first in range(len(ef.entries)):
        for second in range(first + 1, len(ef.entries)):
            checks += _verify_pair(ef.entries[first], ef.entries[second],
                                   failures, config.constraint_tol)
    report = _report(
        "verify", config,
        input=args.input,
        vectors=len(ef.entries),
        renormalized=ef.renormalized_count,
        checks=checks,
        failures=failures,
        passed=not failures,
    )
    return (EXIT_OK if not failures else EXIT_VALIDATION), report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semham",
        description="Analysis of L2-normalized embedding spaces: constrained "
                    "perturbations, transition operators, rank-1 spectra, and "
                    "quantum-style time evolution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, input_=False, tol=True):
        if input_:
            p.add_argument("--input", help="semham-emb/1 JSON file")
        if tol:
            p.add_argument("--tol", type=float, default=None,
                           help="constraint tolerance (default: SEMHAM_TOL or 1e-6)")

    p = sub.add_parser("verify", help="run the invariant suite over a file")
    common(p, input_=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transition", help="direct vs indirect transition report")
    common(p, input_=True)
    p.add_argument("--from", dest="from_id", help="initial state id")
    p.add_argument("--via", dest="via_id", help="intermediate state id")
    p.add_argument("--to", dest="to_id", help="final state id")
    p.add_argument("--synthetic", action="store_true",
                   help="use three random unit vectors instead of a file")
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="also write the report JSON here")
    p.set_defaults(func=cmd_transition)

    p = sub.add_parser("perturb", help="perturbation report for one vector")
    common(p, input_=True)
    p.add_argument("--id", required=True)
    p.add_argument("--v", default=None,
                   help='multipliers: dense "1,1,0" or sparse "0:1,5:-2"; '
                        "omit for the smallest single-dimension flip")
    p.add_argument("--strict", action="store_true",
                   help="enforce |v_i| >= 1 or v_i = 0")
    p.set_defaults(func=cmd_perturb)

    p = sub.add_parser("spectrum", help="rank-1 spectral decomposition of v")
    common(p, input_=False)
    p.add_argument("--v", required=True, help="dense multiplier list")
    p.add_argument("--out", help="dump matrices to this JSON file")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("evolve", help="export a time-evolution trajectory CSV")
    common(p, input_=False, tol=True)
    p.add_argument("--v", required=True, help="amplitude list A_n")
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t1", type=float, default=2.0 * np.pi)
    p.add_argument("--steps", type=int, default=200)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("states", help="export anchor/dissimilar/perturbed states CSV")
    common(p, input_=False)
    p.add_argument("--dim", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_states)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, report = args.func(args)
    except (NonPhysicalConfigurationError, AllNonPhysicalError) as exc:
        _fail(exc)
        return EXIT_NONPHYSICAL
    except ParseError as exc:
        _fail(exc)
        return EXIT_IO
    except OSError as exc:
        _fail(exc)
        return EXIT_IO
    except (SemhamError, ValueError) as exc:
        _fail(exc)
        return EXIT_VALIDATION
    print(json.dumps(report, indent=2))
    return code


def _fail(exc: Exception) -> None:
    doc = {"error": type(exc).__name__, "message": str(exc)}
    print(json.dumps(doc), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
