"""Command-line front end.

Exit codes: 0 = Bipartite (or success for non-decision commands),
1 = NotBipartite, 2 = Undecided, 3 = input or usage error.
JSON goes to stdout, diagnostics to stderr; output is deterministic for
identical inputs and seed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import core, decider, gale_ryser, oracle, partition, reduction
from .lbds import lbds as compute_lbds
from .core import DegreeClass, DegreeSequence, ParamBounds
from .errors import BdrError, BudgetExceededError, InputOutOfClassError, ParseError

EXIT_BIPARTITE = 0
EXIT_NOT_BIPARTITE = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 3


def _read_sequence(path: str) -> DegreeSequence:
    with open(path) as fh:
        return core.parse_sequence(fh.read())


def _read_pair(path: str) -> gale_ryser.BipartitePair:
    with open(path) as fh:
        lines = [line for line in fh.read().splitlines() if line.strip()]
    if len(lines) != 2:
        raise ParseError(f"expected two sequence lines in {path}, got {len(lines)}")
    return gale_ryser.BipartitePair(core.parse_sequence(lines[0]),
                                    core.parse_sequence(lines[1]))


def _bounds(args) -> ParamBounds:
    return ParamBounds(core.parse_rational(args.c1), core.parse_rational(args.c2))


def _json_decision(decision: decider.Decision) -> dict:
    split = None
    if decision.split is not None:
        split = {"u_indices": list(decision.split.u_indices()),
                 "v_indices": list(decision.split.v_indices())}
    realization = None
    if decision.realization is not None:
        realization = [list(e) for e in decision.realization.sorted_edges()]
    return {
        "verdict": decision.verdict,
        "reason": decision.reason,
        "split": split,
        "realization": realization,
        "region": decision.region.value if decision.region is not None else None,
    }


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def run_decide(args) -> int:
    ds = _read_sequence(args.file)
    bounds = _bounds(args)
    decision = decider.decide_bdr(ds, bounds)
    if decision.verdict == "Undecided" and args.exact:
        decision = decider.decide_exact(ds, budget=args.budget).with_region(
            decider.classify_region(bounds))
    _emit(_json_decision(decision))
    return {"Bipartite": EXIT_BIPARTITE,
            "NotBipartite": EXIT_NOT_BIPARTITE,
            "Undecided": EXIT_UNDECIDED}[decision.verdict]


def run_realize(args) -> int:
    pair = _read_pair(args.file)
    g = gale_ryser.construct_realization(pair)
    if g is None:
        print("infeasible: pair is not bigraphic", file=sys.stderr)
        return EXIT_NOT_BIPARTITE
    print(gale_ryser.format_realization(g))
    return EXIT_BIPARTITE


def run_lbds(args) -> int:
    cls = DegreeClass(args.n, args.sigma, args.d, args.delta)
    seq = compute_lbds(cls)
    print(" ".join(str(d) for d in seq.degrees))
    return 0


def run_reduce(args) -> int:
    ds = _read_sequence(args.file)
    inst = reduction.build_hard_instance(ds, _bounds(args))
    _emit({
        "r": str(inst.r),
        "c1_tilde": str(inst.c1_tilde),
        "c2_tilde": str(inst.c2_tilde),
        "n": inst.n,
        "d_prime": list(inst.d_prime.degrees),
        "roles": [{"kind": role.kind, "source_index": role.source_index}
                  for role in inst.roles],
    })
    return 0


def run_verify_reduction(args) -> int:
    ds = _read_sequence(args.file)
    report = reduction.verify_reduction_roundtrip(ds, _bounds(args),
                                                  budget=args.budget)
    _emit({
        "source_realizable": report.source_realizable,
        "padded_realizable": report.padded_realizable,
        "agree": report.agree,
        "n": report.instance.n,
        "r": str(report.instance.r),
    })
    return 0 if report.agree else 1


def _parse_grid(text: str) -> list[Fraction]:
    try:
        start_s, stop_s, step_s = text.split(":")
    except ValueError as exc:
        raise ParseError(f"grid must be start:stop:step, got {text!r}") from exc
    start = core.parse_rational(start_s)
    stop = core.parse_rational(stop_s)
    step = core.parse_rational(step_s)
    if step <= 0:
        raise ParseError("grid step must be positive")
    values = []
    v = start
    while v <= stop:
        values.append(v)
        v += step
    return values


def _random_graphic_in_window(rng: random.Random, n: int, lo: int, hi: int,
                              attempts: int) -> DegreeSequence | None:
    for _ in range(attempts):
        ds = DegreeSequence(sorted((rng.randint(lo, hi) for _ in range(n)),
                                   reverse=True))
        if core.is_graphic(ds):
            return ds
    return None


def run_scan(args) -> int:
    if args.samples < 1:
        raise ParseError("samples must be >= 1")
    rng = random.Random(args.seed)
    print("c1,c2,region,frac_split,frac_bipartite,samples")
    for c1 in _parse_grid(args.c1_grid):
        for c2 in _parse_grid(args.c2_grid):
            if c1 > c2:
                continue
            bounds = ParamBounds(c1, c2)
            region = decider.classify_region(bounds)
            lo = -((-c1.numerator * args.n) // c1.denominator)  # ceil(c1*n)
            hi = (c2.numerator * args.n) // c2.denominator      # floor(c2*n)
            found: list[DegreeSequence] = []
            if lo <= hi:
                for _ in range(args.samples):
                    ds = _random_graphic_in_window(rng, args.n, lo, hi, 200)
                    if ds is not None:
                        found.append(ds)
            n_split = 0
            n_bip = 0
            for ds in found:
                if partition.equal_sum_split_exists(ds):
                    n_split += 1
                decision = decider.decide_bdr(ds, bounds)
                if decision.verdict == "Undecided":
                    decision = decider.decide_exact(ds, budget=args.budget)
                if decision.verdict == "Bipartite":
                    n_bip += 1
            count = len(found)
            frac_split = n_split / count if count else 0.0
            frac_bip = n_bip / count if count else 0.0
            print(f"{c1},{c2},{region.value},{frac_split},{frac_bip},{count}")
    return 0


def run_oracle(args) -> int:
    ds = _read_sequence(args.file)
    verdict = oracle.brute_force_bipartite_realizable(ds, budget=args.budget)
    _emit({"bipartite": verdict})
    return EXIT_BIPARTITE if verdict else EXIT_NOT_BIPARTITE


def _add_bounds(parser) -> None:
    parser.add_argument("--c1", required=True, help='lower bound, "p/q" or decimal')
    parser.add_argument("--c2", required=True, help='upper bound, "p/q" or decimal')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bdr",
                                     description="bipartite degree realization tools")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide bipartite realizability")
    _add_bounds(p)
    p.add_argument("--exact", action="store_true",
                   help="fall back to exhaustive split search when undecided")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("file")
    p.set_defaults(func=run_decide)

    p = sub.add_parser("realize", help="realize a two-line degree sequence pair")
    p.add_argument("file")
    p.set_defaults(func=run_realize)

    p = sub.add_parser("lbds", help="print the least balanced sequence of a class")
    p.add_argument("n", type=int)
    p.add_argument("sigma", type=int)
    p.add_argument("delta", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=run_lbds)

    p = sub.add_parser("reduce", help="build the padded hard instance")
    _add_bounds(p)
    p.add_argument("file")
    p.set_defaults(func=run_reduce)

    p = sub.add_parser("verify-reduction", help="round-trip verdict check")
    _add_bounds(p)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("file")
    p.set_defaults(func=run_verify_reduction)

    p = sub.add_parser("scan", help="sample the parameter grid, CSV to stdout")
    p.add_argument("--c1-grid", required=True, help="start:stop:step")
    p.add_argument("--c2-grid", required=True, help="start:stop:step")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=run_scan)

    p = sub.add_parser("oracle", help="brute-force verdict (debugging)")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("file")
    p.set_defaults(func=run_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        return args.func(args)
    except (ParseError, InputOutOfClassError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BdrError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
