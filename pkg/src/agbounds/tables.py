"""Full coset tables and the distance-flow recursion.

CP[i][j] bounds the coset C(C) \\ C(C+P) for C = (i, j); CQ likewise for Q.
For the chained kind DK the per-coset values come from the joint table CS
and are pushed down the grid by minimization.  The distance table D runs a
max/min flow over coset filtrations and yields scalar bounds per code.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

import numpy as np

from . import cosets
from .curves import CurveSpec
from .membership import DivisorClass, in_gamma_p, in_gamma_q


class BoundKind(enum.Enum):
    GOP = "gop"
    BPT = "bpt"
    B0 = "b0"
    B = "b"
    ABZP = "abzp"
    DP = "dp"
    DK = "dk"

    @classmethod
    def parse(cls, text: str) -> "BoundKind":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown bound kind {text!r}; expected one of "
                             + ", ".join(k.value for k in cls)) from None


TABLE_KINDS = (BoundKind.B0, BoundKind.B, BoundKind.ABZP, BoundKind.DP, BoundKind.DK)
ALL_KINDS = (BoundKind.GOP, BoundKind.BPT) + TABLE_KINDS


@dataclass
class BoundTable:
    """(2g+1) x m integer table; row index is deg C, column is C_Q mod m."""
    kind: BoundKind
    curve: str
    values: np.ndarray

    def __getitem__(self, idx):
        return self.values[idx]


@dataclass
class CosetTables:
    kind: BoundKind
    cp: BoundTable
    cq: BoundTable
    cs: BoundTable | None = None   # only for DK


def _per_coset_rows(curve: CurveSpec, kind: BoundKind) -> np.ndarray:
    """Point-P per-coset values for degrees 0..2g-1 on the given curve."""
    g, m = curve.genus, curve.period
    rows = np.zeros((2 * g, m), dtype=np.int32)
    for deg in range(2 * g):
        if kind is BoundKind.DP:
            rows[deg] = cosets.cbdiv_bounds_by_residue(curve, deg)
        elif kind is BoundKind.ABZP:
            rows[deg] = cosets.abzprime_bounds_by_residue(curve, deg)
        elif kind is BoundKind.B0:
            rows[deg] = cosets.fixed_column_bounds_by_residue(curve, deg)[0]
        elif kind is BoundKind.B:
            rows[deg] = cosets.fixed_column_bounds_by_residue(curve, deg)[1]
        else:
            raise ValueError(f"no per-coset rows for kind {kind}")
    return rows


def _relabel_q_to_p(rows: np.ndarray, m: int) -> np.ndarray:
    """Reindex per-degree rows from swapped-curve coordinates back to jq."""
    out = np.empty_like(rows)
    cols = np.arange(m)
    for deg in range(rows.shape[0]):
        out[deg] = rows[deg][(deg - cols) % m]
    return out


def build_coset_tables(curve: CurveSpec, kind: BoundKind) -> CosetTables:
    """CP and CQ tables (rows 0..2g, row 2g pinned to 2g) for one kind."""
    if kind not in TABLE_KINDS:
        raise ValueError(f"{kind} has no coset tables")
    g, m = curve.genus, curve.period

    def with_init(rows):
        vals = np.empty((2 * g + 1, m), dtype=np.int32)
        vals[: 2 * g] = rows
        vals[2 * g] = 2 * g
        return vals

    if kind is BoundKind.DK:
        cs_rows = np.zeros((2 * g, m), dtype=np.int32)
        for deg in range(2 * g):
            cs_rows[deg] = cosets.mts_bounds_by_residue(curve, deg)
        cs = with_init(cs_rows)
        cp = np.empty_like(cs)
        cq = np.empty_like(cs)
        cp[2 * g] = cq[2 * g] = 2 * g
        qstep = (np.arange(m) + 1) % m
        for deg in range(2 * g - 1, -1, -1):
            cp[deg] = np.minimum(cs[deg], cp[deg + 1][qstep])
            cq[deg] = np.minimum(cs[deg], cq[deg + 1])
        return CosetTables(kind,
                           BoundTable(kind, curve.name, cp),
                           BoundTable(kind, curve.name, cq),
                           BoundTable(kind, curve.name, cs))

    rows_p = _per_coset_rows(curve, kind)
    if curve.is_point_symmetric:
        rows_q = rows_p
    else:
        rows_q = _per_coset_rows(curve.swapped(), kind)
    cq_rows = _relabel_q_to_p(rows_q, m)
    return CosetTables(kind,
                       BoundTable(kind, curve.name, with_init(rows_p)),
                       BoundTable(kind, curve.name, with_init(cq_rows)))


def distance_table(curve: CurveSpec, kind: BoundKind,
                   tables: CosetTables | None = None) -> BoundTable:
    """Min-max flow over coset filtrations; D[i][j] bounds d(C((i, j)))."""
    if tables is None:
        tables = build_coset_tables(curve, kind)
    g, m = curve.genus, curve.period
    cp, cq = tables.cp.values, tables.cq.values
    d = np.empty((2 * g + 1, m), dtype=np.int32)
    d[2 * g] = 2 * g
    qstep = (np.arange(m) + 1) % m
    for deg in range(2 * g - 1, -1, -1):
        d[deg] = np.maximum(np.minimum(d[deg + 1], cp[deg]),
                            np.minimum(d[deg + 1][qstep], cq[deg]))
    return BoundTable(kind, curve.name, d)


def goppa_bound(c: DivisorClass) -> int:
    return c.deg


def bpt_bound(curve: CurveSpec, c: DivisorClass) -> int:
    """Goppa bound plus one when C misses Gamma_P or Gamma_Q."""
    if c.deg < 0:
        raise ValueError("bpt_bound requires deg C >= 0")
    if not (in_gamma_p(curve, c) and in_gamma_q(curve, c)):
        return c.deg + 1
    return c.deg


def code_bound(curve: CurveSpec, kind: BoundKind, c: DivisorClass,
               table: BoundTable | None = None) -> int:
    """Scalar lower bound for the code C(C)."""
    if kind is BoundKind.GOP:
        return goppa_bound(c)
    if kind is BoundKind.BPT:
        return bpt_bound(curve, c)
    if not 0 <= c.deg <= 2 * curve.genus:
        raise ValueError(f"deg C = {c.deg} outside table range [0, {2*curve.genus}]")
    if table is None:
        table = distance_table(curve, kind)
    return int(table.values[c.deg][c.jq % curve.period])


def table_to_csv(table: BoundTable) -> str:
    m = table.values.shape[1]
    lines = ["deg," + ",".join(f"cq{j}" for j in range(m))]
    for deg, row in enumerate(table.values):
        lines.append(f"{deg}," + ",".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def table_to_doc(table: BoundTable, universe: str | None = None) -> str:
    doc = {
        "curve": table.curve,
        "kind": table.kind.value,
        "universe": universe,
        "rows": [[int(v) for v in row] for row in table.values],
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"
