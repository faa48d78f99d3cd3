"""Pairwise bound comparisons, the cross-tabulation, and per-degree optima."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .curves import CurveSpec
from .membership import DivisorClass, in_gamma_p, in_gamma_q
from .tables import (ALL_KINDS, TABLE_KINDS, BoundKind, BoundTable,
                     build_coset_tables, distance_table)

UNIVERSES = ("0..2g-1", "1..2g")
# Default chosen to reproduce the published comparison counts.
DEFAULT_UNIVERSE = "0..2g-1"


def universe_degrees(g: int, universe: str) -> range:
    if universe == "0..2g-1":
        return range(0, 2 * g)
    if universe == "1..2g":
        return range(1, 2 * g + 1)
    raise ValueError(f"unknown universe {universe!r}; expected one of {UNIVERSES}")


class BoundSet:
    """Distance tables for several kinds on one curve, built once."""

    def __init__(self, curve: CurveSpec, kinds=TABLE_KINDS):
        self.curve = curve
        self.tables = {k: distance_table(curve, k) for k in kinds
                       if k in TABLE_KINDS}

    def values(self, kind: BoundKind, universe: str) -> np.ndarray:
        """Bound per code over the universe, shape (n_degrees, m)."""
        curve = self.curve
        g, m = curve.genus, curve.period
        degs = universe_degrees(g, universe)
        if kind is BoundKind.GOP:
            return np.repeat(np.array(degs)[:, None], m, axis=1)
        if kind is BoundKind.BPT:
            out = np.empty((len(degs), m), dtype=np.int64)
            for r, deg in enumerate(degs):
                for j in range(m):
                    c = DivisorClass(deg, j)
                    base = not (in_gamma_p(curve, c) and in_gamma_q(curve, c))
                    out[r, j] = deg + 1 if base else deg
            return out
        return self.tables[kind].values[list(degs)].astype(np.int64)


@dataclass
class ComparisonReport:
    curve: str
    universe: str
    n_codes: int
    kinds: list
    # (x, y) -> (count of codes with y > x, max of y - x over those, 0 if none)
    pairs: dict = field(default_factory=dict)


def compare_bounds(curve: CurveSpec, kinds=ALL_KINDS,
                   universe: str = DEFAULT_UNIVERSE,
                   bounds: BoundSet | None = None) -> ComparisonReport:
    """Improvement counts and maxima for every ordered pair of kinds."""
    kinds = [k if isinstance(k, BoundKind) else BoundKind.parse(k) for k in kinds]
    if bounds is None:
        bounds = BoundSet(curve, kinds)
    vals = {k: bounds.values(k, universe) for k in kinds}
    n_codes = next(iter(vals.values())).size
    report = ComparisonReport(curve.name, universe, n_codes,
                              [k.value for k in kinds])
    for x in kinds:
        for y in kinds:
            if x is y:
                continue
            diff = vals[y] - vals[x]
            count = int((diff > 0).sum())
            max_impr = int(diff[diff > 0].max()) if count else 0
            # conservation cross-check: recount via the difference histogram
            hist_count = sum(int((diff == v).sum())
                             for v in range(1, int(diff.max(initial=0)) + 1))
            if hist_count != count:
                raise AssertionError("improvement count mismatch between "
                                     "direct count and histogram")
            report.pairs[(x.value, y.value)] = (count, max_impr)
    return report


@dataclass
class CrossTab:
    curve: str
    universe: str
    matrix: np.ndarray        # rows: d_DP - d_B, cols: d_DK - d_DP
    total: int


def cross_tab(curve: CurveSpec, universe: str = DEFAULT_UNIVERSE,
              bounds: BoundSet | None = None) -> CrossTab:
    """Joint histogram of (d_DP - d_B, d_DK - d_DP) over the universe."""
    if bounds is None:
        bounds = BoundSet(curve, (BoundKind.B, BoundKind.DP, BoundKind.DK))
    b = bounds.values(BoundKind.B, universe)
    dp = bounds.values(BoundKind.DP, universe)
    dk = bounds.values(BoundKind.DK, universe)
    rows_diff = dp - b
    cols_diff = dk - dp
    if rows_diff.min() < 0 or cols_diff.min() < 0:
        raise AssertionError("negative improvement: bound ordering violated")
    matrix = np.zeros((int(rows_diff.max()) + 1, int(cols_diff.max()) + 1),
                      dtype=np.int64)
    for r, c in zip(rows_diff.ravel(), cols_diff.ravel()):
        matrix[r, c] += 1
    return CrossTab(curve.name, universe, matrix, int(matrix.sum()))


@dataclass
class OptimaRow:
    deg_c: int
    best_value: int
    argmax_cq: list           # canonicalized: jq <= (deg - jq) mod m
    excess_over_dp: int
    excess_over_b: int


def optimal_by_degree(curve: CurveSpec, kind: BoundKind = BoundKind.DK,
                      bounds: BoundSet | None = None,
                      deg_range=None) -> list:
    """Per-degree optimum of ``kind`` with excesses over the DP and B optima."""
    if bounds is None:
        bounds = BoundSet(curve, (BoundKind.B, BoundKind.DP, kind))
    m, g = curve.period, curve.genus
    if deg_range is None:
        deg_range = range(2, g + 1)
    main = bounds.tables[kind].values
    dp = bounds.tables[BoundKind.DP].values
    b = bounds.tables[BoundKind.B].values
    out = []
    for deg in deg_range:
        row = main[deg]
        best = int(row.max())
        argmax = [j for j in range(m)
                  if row[j] == best and j <= (deg - j) % m]
        out.append(OptimaRow(deg, best, argmax,
                             best - int(dp[deg].max()),
                             best - int(b[deg].max())))
    return out


# --- deterministic text renderings -------------------------------------

def comparison_to_csv(report: ComparisonReport) -> str:
    lines = ["x,y,improvements,max_improvement"]
    for x in report.kinds:
        for y in report.kinds:
            if x == y:
                continue
            count, mx = report.pairs[(x, y)]
            lines.append(f"{x},{y},{count},{mx}")
    return "\n".join(lines) + "\n"


def comparison_to_doc(report: ComparisonReport) -> str:
    doc = {
        "curve": report.curve,
        "universe": report.universe,
        "n_codes": report.n_codes,
        "kinds": report.kinds,
        "pairs": {f"{x}->{y}": list(v) for (x, y), v in sorted(report.pairs.items())},
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def crosstab_to_csv(ct: CrossTab) -> str:
    ncols = ct.matrix.shape[1]
    lines = ["dp_minus_b," + ",".join(f"dk_minus_dp_{c}" for c in range(ncols))]
    for r, row in enumerate(ct.matrix):
        lines.append(f"{r}," + ",".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def optima_to_csv(rows) -> str:
    lines = ["deg_c,best,argmax_cq,excess_over_dp,excess_over_b"]
    for r in rows:
        cq = " ".join(str(j) for j in r.argmax_cq)
        lines.append(f"{r.deg_c},{r.best_value},[{cq}],"
                     f"{r.excess_over_dp},{r.excess_over_b}")
    return "\n".join(lines) + "\n"
