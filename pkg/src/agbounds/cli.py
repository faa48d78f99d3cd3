"""Command-line interface.

Subcommands: curve, dfun, coset, distances, compare, crosstab, optimal,
verify.  All outputs are deterministic plain text.
"""

from __future__ import annotations

import argparse
import sys

from . import oracle, reports
from .cosets import (coset_bound_abzprime, coset_bound_fixed_column,
                     coset_bound_cbdiv, coset_bound_mts)
from .curves import CurveError, load_curve, make_suzuki_curve, save_curve, validate_curve
from .membership import DivisorClass
from .tables import BoundKind, distance_table, table_to_csv, table_to_doc


def _write(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def _load(path: str):
    curve = load_curve(path)
    return curve


def cmd_curve(args) -> int:
    if args.family != "suzuki":
        raise CurveError(f"unknown curve family {args.family!r}")
    curve = make_suzuki_curve(args.q0)
    problems = validate_curve(curve)
    if problems:
        raise CurveError("constructed curve is invalid: " + "; ".join(problems))
    if args.out:
        save_curve(curve, args.out)
    else:
        print(f"{curve.name}: g={curve.genus} m={curve.period}")
        print("d =", list(curve.d_pq))
    return 0


def cmd_dfun(args) -> int:
    curve = _load(args.curve)
    print(curve.d_pq[args.k % curve.period])
    return 0


def cmd_coset(args) -> int:
    curve = _load(args.curve)
    kind = BoundKind.parse(args.kind)
    c = DivisorClass(args.deg, args.cq)
    if kind is BoundKind.DK:
        value = coset_bound_mts(curve, c)
    elif kind is BoundKind.DP:
        value = coset_bound_cbdiv(curve, c, args.pt)
    elif kind is BoundKind.ABZP:
        value = coset_bound_abzprime(curve, c, args.pt)
    elif kind in (BoundKind.B0, BoundKind.B):
        value = coset_bound_fixed_column(curve, c, args.pt, kind.name)
    else:
        raise ValueError(f"kind {kind.value} has no per-coset bound")
    print(value)
    return 0


def cmd_distances(args) -> int:
    curve = _load(args.curve)
    kind = BoundKind.parse(args.kind)
    table = distance_table(curve, kind)
    if args.format == "csv":
        _write(table_to_csv(table), args.out)
    else:
        _write(table_to_doc(table, args.universe), args.out)
    return 0


def cmd_compare(args) -> int:
    curve = _load(args.curve)
    kinds = [BoundKind.parse(k) for k in args.kinds.split(",")]
    report = reports.compare_bounds(curve, kinds, args.universe)
    _write(reports.comparison_to_csv(report), args.out)
    return 0


def cmd_crosstab(args) -> int:
    curve = _load(args.curve)
    ct = reports.cross_tab(curve, args.universe)
    _write(reports.crosstab_to_csv(ct), args.out)
    return 0


def cmd_optimal(args) -> int:
    curve = _load(args.curve)
    kind = BoundKind.parse(args.kind)
    rows = reports.optimal_by_degree(curve, kind)
    _write(reports.optima_to_csv(rows), args.out)
    return 0


def cmd_verify(args) -> int:
    from . import cosets

    curve = make_suzuki_curve(args.q0)
    flavors = args.flavors.split(",") if args.flavors else list(oracle.FLAVORS)
    mismatches = []
    for flavor in flavors:
        cfg = oracle.OracleConfig(curve, flavor)
        for deg in range(1, 2 * curve.genus + 1):
            got = {
                "cbdiv": lambda c: cosets.coset_bound_cbdiv(curve, c, "P"),
                "mts": lambda c: cosets.coset_bound_mts(curve, c),
                "fixed-B": lambda c: cosets.coset_bound_fixed_column(curve, c, "P", "B"),
                "fixed-B0": lambda c: cosets.coset_bound_fixed_column(curve, c, "P", "B0"),
                "abzprime": lambda c: cosets.coset_bound_abzprime(curve, c, "P"),
            }[flavor]
            for jq in range(curve.period):
                c = DivisorClass(deg, jq)
                dp_value = got(c)
                oracle_value = oracle.brute_force_coset_bound(cfg, c, "P")
                if dp_value != oracle_value:
                    mismatches.append((flavor, deg, jq, dp_value, oracle_value))
    if mismatches:
        for flavor, deg, jq, got_v, want in mismatches:
            print(f"MISMATCH {flavor} C=({deg},{jq}): engine={got_v} oracle={want}")
        print(f"verify: {len(mismatches)} mismatches")
        return 1
    print(f"verify: all flavors match the oracle on q0={args.q0} "
          f"({2 * curve.genus * curve.period} cosets per flavor)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agbounds",
        description="Minimum-distance lower bounds for two-point AG codes")
    parser.add_argument("--universe", choices=list(reports.UNIVERSES),
                        default=reports.DEFAULT_UNIVERSE,
                        help="degree range of the code universe for reports")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curve", help="construct a curve table")
    p.add_argument("family", choices=["suzuki"])
    p.add_argument("--q0", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("dfun", help="evaluate the d-function")
    p.add_argument("--curve", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_dfun)

    p = sub.add_parser("coset", help="one per-coset bound")
    p.add_argument("--curve", required=True)
    p.add_argument("--kind", required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--cq", type=int, required=True)
    p.add_argument("--pt", choices=["P", "Q"], default="P")
    p.set_defaults(func=cmd_coset)

    p = sub.add_parser("distances", help="full distance table for one kind")
    p.add_argument("--curve", required=True)
    p.add_argument("--kind", required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv", "doc"], default="csv")
    p.set_defaults(func=cmd_distances)

    p = sub.add_parser("compare", help="pairwise improvement report")
    p.add_argument("--curve", required=True)
    p.add_argument("--kinds", default="gop,bpt,b0,b,abzp,dp,dk")
    p.add_argument("--out")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("crosstab", help="(dp-b) x (dk-dp) histogram")
    p.add_argument("--curve", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_crosstab)

    p = sub.add_parser("optimal", help="per-degree optima")
    p.add_argument("--curve", required=True)
    p.add_argument("--kind", default="dk")
    p.add_argument("--out")
    p.set_defaults(func=cmd_optimal)

    p = sub.add_parser("verify", help="oracle sweep on a small curve")
    p.add_argument("--q0", type=int, default=2)
    p.add_argument("--flavors")
    p.set_defaults(func=cmd_verify)

    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CurveError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
