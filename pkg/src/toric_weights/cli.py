"""``toric-weights`` command line front end.

Exit codes: 0 ok, 1 parse error, 2 validation failure, 3 internal
cross-check failure, 4 out of scope.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cone import DEFAULT_ZONOTOPE_BUDGET, GeneratorMatrix, build_face_lattice, check_saturated, parse_matrix
from .errors import ScopeError, ToricWeightsError, ValidationError
from .fuzz import random_cones
from .gh import _g, _h, ih_affine, ih_compact, verify_stanley_identity
from .poset import interval
from .weights import envelope_violations, example_d4_violations, l_table, weight_report


@dataclass
class RunConfig:
    command: str
    input: str | None
    format: str = "json"
    degree_bound: int | None = None
    budget: int = DEFAULT_ZONOTOPE_BUDGET
    max_dim: int = 6
    random: int | None = None
    d: int | None = None
    seed: int = 0
    full: bool = False

    def __post_init__(self):
        for name in ("budget", "max_dim"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.degree_bound is not None and self.degree_bound <= 0:
            raise ValueError("degree bound must be positive")


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def _load(cfg, strict=True):
    if cfg.input is None:
        raise ToricWeightsError("no input file given")
    try:
        with open(cfg.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ToricWeightsError(f"cannot read {cfg.input}: {exc}") from exc
    A = parse_matrix(text, strict=strict)
    if A.d > cfg.max_dim:
        raise ScopeError(f"d = {A.d} exceeds the --max-dim guard {cfg.max_dim}")
    return A


def cmd_check(cfg, out):
    A = _load(cfg, strict=False)
    diag = {
        "d": A.d,
        "n": A.n,
        "rank": A.rank,
        "full_rank": A.rank == A.d,
        "lattice_index": A.lattice_index,
        "full_lattice": A.full_lattice,
        "pointed": A.pointed,
        "saturated": None,
        "witness": None,
        "f_vector": None,
    }
    if A.rank == A.d and A.pointed:
        sat, witness = check_saturated(A, budget=cfg.budget)
        diag["saturated"] = sat
        diag["witness"] = list(witness) if witness is not None else None
        diag["f_vector"] = build_face_lattice(A).f_vector()
    ok = all(diag[k] for k in ("full_rank", "full_lattice", "pointed", "saturated"))
    if cfg.format == "json":
        print(_dump(diag), file=out)
    else:
        for k, v in diag.items():
            print(f"{k:>14}: {v}", file=out)
        print("all checks pass" if ok else "some checks FAIL", file=out)
    return 0 if ok else 2


def cmd_faces(cfg, out):
    L = build_face_lattice(_load(cfg))
    if cfg.format == "json":
        print(_dump(L.to_dict()), file=out)
    else:
        print(f"f-vector {L.f_vector()}", file=out)
        for f in L.faces:
            cols = ",".join(str(j + 1) for j in sorted(f.columns)) or "-"
            print(f"{f.id:>4} dim {f.dim}  columns {{{cols}}}  covers {list(L.lower_covers[f.id])}", file=out)
    return 0


def betti_rows(L):
    rows = []
    for f in L.faces:
        ih = ih_affine(interval(L, L.bottom, f.id))
        h = list(_h(L, L.bottom, f.id, reverse=True)) if f.id != L.bottom else []
        rows.append(
            {
                "face": f.id,
                "ih": ih.to_dict(),
                "ih_c": ih_compact(ih).to_dict(),
                "g": list(_g(L, L.bottom, f.id, reverse=True)),
                "h": h,
            }
        )
    return rows


def cmd_betti(cfg, out):
    L = build_face_lattice(_load(cfg))
    rows = betti_rows(L)
    if cfg.format == "json":
        print(_dump(rows), file=out)
    else:
        for r in rows:
            print(f"face {r['face']:>3}  ih {r['ih']}  ih_c {r['ih_c']}  g {r['g']}  h {r['h']}", file=out)
    return 0


def render_l_pages(L, table, full=False):
    lines = []
    d = L.dim
    for dim in range(d + 1):
        if dim == d and not full:
            continue
        lines.append(f"-- pages l_tau(k, e) for faces of dimension {dim} --")
        for t in L.of_dim(dim):
            lines.append(f"face {t}:")
            for k in reversed(range(d)):
                cells = " ".join(f"{table[t, k, e]:>3}" for e in range(1, d + 1))
                lines.append(f"  k={k} | {cells}")
            lines.append("       " + "-" * (4 * d))
            lines.append("    e= " + " ".join(f"{e:>3}" for e in range(1, d + 1)))
    return lines


def cmd_weights(cfg, out):
    L = build_face_lattice(_load(cfg))
    report = weight_report(L)
    if cfg.format == "json":
        print(_dump(report.to_dict()), file=out)
        return 0
    for w, lst in report.weights.items():
        items = ", ".join(f"face {t} (dim {report.dims[t]}) x{m}" for t, m in lst) or "-"
        print(f"weight {w}: {items}", file=out)
    print(f"length {report.length}", file=out)
    if report.closed_form is not None:
        verdict = "matches" if report.closed_form == report.length else "MISMATCH"
        print(f"closed form {report.closed_form} ({verdict})", file=out)
    print(f"checks {report.checks}", file=out)
    for line in render_l_pages(L, l_table(L), full=cfg.full):
        print(line, file=out)
    return 0


def verify_matrix(columns):
    """Property suite on one matrix; returns a list of failure descriptions."""
    A = GeneratorMatrix.from_columns(columns, strict=False)
    L = build_face_lattice(A)
    failures = []
    if verify_stanley_identity(L) != ():
        failures.append("stanley identity")
    try:
        weight_report(L)
    except ToricWeightsError as exc:
        failures.append(f"triple agreement: {exc}")
    table = l_table(L)
    if envelope_violations(L, table):
        failures.append("vanishing envelope")
    if L.dim == 4 and example_d4_violations(L, table):
        failures.append("d=4 page pattern")
    return failures


def _workers():
    cap = os.environ.get("TORIC_WEIGHTS_THREADS")
    n = os.cpu_count() or 1
    return max(1, min(n, int(cap))) if cap else n


def cmd_verify(cfg, out):
    if cfg.random is not None:
        samples = [A.columns for A in random_cones(cfg.random, cfg.seed, d=cfg.d)]
        note = "random samples: saturation is not checked"
    else:
        samples = [_load(cfg).columns]
        note = None
    workers = _workers()
    if workers > 1 and len(samples) > 8:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(verify_matrix, samples, chunksize=4))
    else:
        results = [verify_matrix(s) for s in samples]
    bad = [(i, r) for i, r in enumerate(results) if r]
    summary = {"samples": len(samples), "passed": len(samples) - len(bad), "note": note}
    if bad:
        i, r = bad[0]
        A = GeneratorMatrix.from_columns(samples[i], strict=False)
        summary["first_counterexample"] = {"index": i, "failures": r, "matrix": A.to_text()}
    if cfg.format == "json":
        print(_dump(summary), file=out)
    else:
        print(f"{summary['passed']}/{summary['samples']} samples pass", file=out)
        if note:
            print(f"note: {note}", file=out)
        if bad:
            print(f"first failure (sample {bad[0][0]}): {bad[0][1]}", file=out)
            print(summary["first_counterexample"]["matrix"], file=out, end="")
    return 3 if bad else 0


def cmd_generators(cfg, out):
    from .generators import dependency_dimension, filtration_generators

    A = _load(cfg)
    L = build_face_lattice(A)
    if A.d > 3 and not L.is_boolean():
        raise ScopeError(
            f"explicit generators for non-simplicial cones need d <= 3 (got d = {A.d})"
        )
    sat, witness = check_saturated(A, budget=cfg.budget)
    if not sat:
        raise ValidationError(f"NA is not saturated (witness {list(witness)})")
    levels = filtration_generators(A, L, cfg.degree_bound)
    if cfg.format == "json":
        print(_dump([lvl.to_dict() for lvl in levels]), file=out)
        return 0
    for lvl in levels:
        mons = ", ".join(m.render() for m in lvl.monomials)
        print(f"W{lvl.level}: {mons}", file=out)
        if lvl.operators:
            tag = " (redundant: simplicial)" if lvl.operators_redundant else ""
            ops = "; ".join(op.render() for op in lvl.operators)
            print(f"  operators{tag}: {ops}", file=out)
    if A.d == 3:
        print(f"dependency space dimension {dependency_dimension(A, L)}", file=out)
    return 0


COMMANDS = {
    "check": cmd_check,
    "faces": cmd_faces,
    "betti": cmd_betti,
    "weights": cmd_weights,
    "verify": cmd_verify,
    "generators": cmd_generators,
}


def build_parser():
    p = argparse.ArgumentParser(prog="toric-weights", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("file", nargs="?")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--degree-bound", type=int, default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_ZONOTOPE_BUDGET)
    p.add_argument("--max-dim", type=int, default=6)
    p.add_argument("--random", type=int, default=None, metavar="N")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--full", action="store_true", help="also print the all-zero page of sigma")
    return p


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            input=args.file,
            format=args.format,
            degree_bound=args.degree_bound,
            budget=args.budget,
            max_dim=args.max_dim,
            random=args.random,
            d=args.d,
            seed=args.seed,
            full=args.full,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return COMMANDS[cfg.command](cfg, out)
    except ToricWeightsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
