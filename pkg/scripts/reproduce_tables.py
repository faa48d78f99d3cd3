#!/usr/bin/env python3
"""Build every report for one Suzuki curve and write them to an output dir.

Produces, for the chosen q0:
  curve.json            the curve table itself
  distances_<kind>.csv  one full distance table per order-bound kind
  comparison.csv        pairwise improvement counts and maxima
  crosstab.csv          joint (dp - b) x (dk - dp) histogram
  optima.csv            per-degree optima of the strongest bound

Run with no arguments for the q0=4 curve (g=124, 10168 codes, a few
minutes); use --q0 2 for a quick smoke run.
"""

import argparse
import time
from pathlib import Path

from agbounds.curves import make_suzuki_curve, save_curve
from agbounds.reports import (DEFAULT_UNIVERSE, UNIVERSES, BoundSet,
                              compare_bounds, comparison_to_csv, cross_tab,
                              crosstab_to_csv, optima_to_csv,
                              optimal_by_degree)
from agbounds.tables import ALL_KINDS, TABLE_KINDS, BoundKind, table_to_csv


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--q0", type=int, default=4)
    parser.add_argument("--universe", choices=list(UNIVERSES),
                        default=DEFAULT_UNIVERSE)
    parser.add_argument("--out", default="reports")
    args = parser.parse_args()

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)

    curve = make_suzuki_curve(args.q0)
    save_curve(curve, outdir / "curve.json")
    print(f"{curve.name}: g={curve.genus} m={curve.period} "
          f"codes={2 * curve.genus * curve.period}")

    t0 = time.perf_counter()
    bounds = BoundSet(curve, TABLE_KINDS)
    print(f"distance tables built in {time.perf_counter() - t0:.1f}s")

    for kind in TABLE_KINDS:
        path = outdir / f"distances_{kind.value}.csv"
        path.write_text(table_to_csv(bounds.tables[kind]))

    rep = compare_bounds(curve, ALL_KINDS, args.universe, bounds)
    (outdir / "comparison.csv").write_text(comparison_to_csv(rep))
    ct = cross_tab(curve, args.universe, bounds)
    (outdir / "crosstab.csv").write_text(crosstab_to_csv(ct))
    rows = optimal_by_degree(curve, BoundKind.DK, bounds)
    (outdir / "optima.csv").write_text(optima_to_csv(rows))

    print(f"wrote {len(TABLE_KINDS) + 4} files to {outdir}/")
    best = {(x, y): v for (x, y), v in rep.pairs.items() if v[0]}
    for (x, y), (count, mx) in sorted(best.items()):
        print(f"  {y} improves {x} on {count} codes (max +{mx})")


if __name__ == "__main__":
    main()
