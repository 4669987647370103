"""Command-line front end.

Exit codes: 0 success (including negative verdicts), 1 invalid input,
2 resource budget exceeded, 3 failed verification or formula disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .betti import DEFAULT_CELL_BUDGET, betti_table, normalize_method
from .cache import DiskCache
from .errors import BudgetError, PileBettiError, ValidationError
from .homology import FieldSpec
from .invariants import (
    gorenstein_condition,
    highest_syzygy,
    partition_count,
    projective_dimension,
    regularity_bound,
)
from .lattice import check_complement, generators_from_json, make_weights, veronese_generators
from .complex import pile_complex
from .verify import (
    FuzzConfig,
    fuzz_corpus,
    fuzz_duality,
    verify_alexander,
    verify_conditions,
    verify_star_lemma,
)

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_BREACH = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # subcommand copies use SUPPRESS so they do not clobber values given before the subcommand
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    src = parser.add_mutually_exclusive_group()
    src.add_argument("--weights", type=_int_list, default=d(None), help="weights vector, e.g. 1,1,1")
    src.add_argument("--points-file", default=d(None), help="generator set JSON file")
    parser.add_argument("--d", type=int, default=d(None), help="Veronese degree")
    parser.add_argument("--field", default=d("q"), help="q or fp:<p>")
    parser.add_argument("--method", default=d("both"), help="bh, dual or both")
    parser.add_argument("--out", choices=("json", "text"), default=d("text"))
    parser.add_argument("--cache", default=d(None), help="directory for the per-degree result cache")
    parser.add_argument("--jobs", type=int, default=d(1))
    parser.add_argument("--budget", type=int, default=d(DEFAULT_CELL_BUDGET), help="max cells in the degree box")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pilebetti", description="Betti tables of weighted Veronese rings via pile complexes.")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in [
        ("betti", "multigraded and Z-graded Betti table"),
        ("highest-syzygy", "top syzygy by lattice counting"),
        ("invariants", "projective dimension, regularity bound, Gorenstein test"),
    ]:
        _common(sub.add_parser(name, help=helptext), suppress=True)

    pc = sub.add_parser("partition-count", help="number of b >= 0 with q . b == k")
    _common(pc, suppress=True)
    pc.add_argument("--k", type=int, required=True)

    ver = sub.add_parser("verify", help="theorem checks")
    ver.add_argument("check", choices=("duality", "conditions", "star", "alexander"))
    _common(ver, suppress=True)
    ver.add_argument("--trials", type=int, default=200)
    ver.add_argument("--seed", type=int, default=1)
    ver.add_argument("--max-n", type=int, default=2)
    ver.add_argument("--max-points", type=int, default=7)
    ver.add_argument("--max-coordinate", type=int, default=4)
    ver.add_argument("--c", type=_int_list, default=None, help="multidegree for single-instance checks")
    return parser


def _generators(args, required=True):
    if args.points_file:
        with open(args.points_file) as fh:
            return generators_from_json(json.load(fh))
    if args.weights is not None:
        if args.d is None:
            raise ValidationError("--weights needs --d")
        return veronese_generators(args.weights, args.d)
    if required:
        raise ValidationError("give --weights with --d, or --points-file")
    return None


def _emit(args, payload: dict, text: str) -> None:
    if args.out == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_betti(args) -> int:
    A = _generators(args)
    field = FieldSpec.parse(args.field)
    cache = DiskCache(args.cache) if args.cache else None
    table = betti_table(A, field, normalize_method(args.method), jobs=args.jobs, cache=cache, budget=args.budget)
    lines = [f"field {field.name}, method {table.method}, N={A.N}, n={A.n}", "multigraded:"]
    for (i, c), b in table.entries.items():
        lines.append(f"  i={i} c={list(c)} beta={b}")
    if A.homogeneous:
        lines += ["Z-graded:", table.render()]
    for dis in table.disagreements:
        lines.append(f"DISAGREEMENT at c={dis['c']}: bh={dis['bh']} dual={dis['dual']}")
    _emit(args, table.to_json(), "\n".join(lines))
    return EXIT_BREACH if table.disagreements else EXIT_OK


def _weights_and_d(args):
    if args.weights is None or args.d is None:
        raise ValidationError("this command needs --weights and --d")
    return make_weights(args.weights), args.d


def cmd_highest_syzygy(args) -> int:
    q, d = _weights_and_d(args)
    rep = highest_syzygy(q, d)
    hist = ", ".join(f"{z}: {m}" for z, m in rep.zdeg_histogram().items())
    text = f"homological index {rep.homological_index}, rank {rep.rank}\nZ-degrees {{{hist}}}"
    payload = rep.to_json()
    payload["zdeg_histogram"] = {str(z): m for z, m in rep.zdeg_histogram().items()}
    _emit(args, payload, text)
    return EXIT_OK


def cmd_invariants(args) -> int:
    q, d = _weights_and_d(args)
    A = veronese_generators(q, d)
    reg = regularity_bound(q, d)
    dr = d * q.r
    payload = {
        "weights": list(q.q),
        "d": d,
        "r": q.r,
        "N": A.N,
        "n": A.n,
        "projective_dimension": projective_dimension(A),
        "regularity": reg.to_json(),
        "gorenstein_condition": gorenstein_condition(q, d),
        "partition_counts": [partition_count(q.q, k) for k in range(dr)],
    }
    text = "\n".join(
        [
            f"N={A.N} n={A.n} r={q.r}",
            f"projective dimension: {payload['projective_dimension']}",
            f"regularity bound: {reg.bound} (rho={reg.rho}, equality certified: {reg.equality_certified})",
            f"regularity lower bound from top syzygy: {reg.lower_bound_from_top_syzygy}",
            f"gorenstein condition (dr | sum q): {payload['gorenstein_condition']}",
            f"partition counts T_q(k), k < dr: {payload['partition_counts']}",
        ]
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_partition_count(args) -> int:
    if args.weights is None:
        raise ValidationError("partition-count needs --weights")
    if any(x <= 0 for x in args.weights):
        raise ValidationError("weights must be positive")
    value = partition_count(args.weights, args.k)
    _emit(args, {"weights": args.weights, "k": args.k, "count": value}, str(value))
    return EXIT_OK


def _fuzz_config(args) -> FuzzConfig:
    return FuzzConfig(
        max_n=args.max_n,
        max_points=args.max_points,
        max_coordinate=args.max_coordinate,
        trials=args.trials,
        seed=args.seed,
        field=FieldSpec.parse(args.field),
    )


def cmd_verify(args) -> int:
    field = FieldSpec.parse(args.field)
    if args.check == "duality":
        report = fuzz_duality(_fuzz_config(args))
        text = f"{report.trials} trials, seed {report.seed}, {len(report.failures)} failures"
        _emit(args, report.to_json(), text)
        return EXIT_OK if report.ok else EXIT_BREACH

    if args.check == "conditions":
        A = _generators(args)
        rep = verify_conditions(A)
        text = (
            f"saturated (NA = ZA meet N^(n+1)): {rep.saturated}\n"
            f"Delta_c = Gamma_c on [0, t]: {rep.complexes_agree}\n"
            f"homogeneous: {rep.homogeneous}"
        )
        _emit(args, rep.to_json(), text)
        return EXIT_OK if rep.consistent else EXIT_BREACH

    A = _generators(args, required=False)
    if A is not None:
        cases = [(A, tuple(args.c) if args.c else None)]
    else:
        cases = list(fuzz_corpus(_fuzz_config(args)))
    failures = []
    checked = 0
    for A, c in cases:
        if args.check == "star":
            points = [c] if c is not None else [tuple(A.t)]
            bs = []
            for base in points:
                for j in range(A.dim):
                    b = list(base)
                    b[j] = A.t[j]
                    bs.append(tuple(b))
            for b in bs:
                checked += 1
                if not verify_star_lemma(A, b, field):
                    failures.append({"A": A.to_json(), "b": list(b)})
        else:
            degrees = [c] if c is not None else [check_complement(A, (0,) * A.dim)]
            for cc in degrees:
                checked += 1
                if not verify_alexander(pile_complex(A, cc), field):
                    failures.append({"A": A.to_json(), "c": list(cc)})
    _emit(args, {"check": args.check, "checked": checked, "failures": failures}, f"{checked} checked, {len(failures)} failures")
    return EXIT_OK if not failures else EXIT_BREACH


COMMANDS = {
    "betti": cmd_betti,
    "highest-syzygy": cmd_highest_syzygy,
    "invariants": cmd_invariants,
    "partition-count": cmd_partition_count,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            return COMMANDS[args.command](args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (PileBettiError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
