"""Independent brute-force oracles for the coset bounds.

The oracles enumerate admissible chains directly from the defining step
conditions, as longest paths over the explicit list of counting cells.
They share only the membership predicates with the production kernels;
the chain logic is written from scratch so failure modes stay independent.
Intended for small curves (the q0=2 grid); the cell budget is enforced.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curves import CurveSpec
from .membership import DivisorClass, in_delta_p, in_delta_q

FLAVORS = ("cbdiv", "mts", "fixed-B", "fixed-B0", "abzprime")


class OracleBudgetError(RuntimeError):
    """The enumeration would be too large to finish; never guess instead."""


@dataclass
class OracleConfig:
    curve: CurveSpec
    flavor: str
    max_cells: int = 20000

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")


def _swap_for_point(curve, c, pt):
    """Point-Q questions become point-P questions on the swapped curve."""
    if pt == "P":
        return curve, c
    if pt == "Q":
        return curve.swapped(), DivisorClass(c.deg, (c.deg - c.jq) % curve.period)
    raise ValueError(f"pt must be 'P' or 'Q', got {pt!r}")


def _delta_p_cells(curve, c):
    m = curve.period
    cells = [(i, j)
             for i in range(c.deg + 2 * curve.genus)
             for j in range(m)
             if in_delta_p(curve, c, DivisorClass(i, j))]
    return cells


def _longest_chain(cells, admissible, budget):
    """Longest path over cells sorted by degree, one relaxation per cell.

    ``admissible(deg, jq, degs, jqs)`` returns a boolean mask over earlier
    cells marking legal predecessors.
    """
    if len(cells) ** 2 > budget * 50:
        raise OracleBudgetError(f"{len(cells)} cells is over the oracle budget")
    cells = sorted(cells)
    degs = np.array([c[0] for c in cells])
    jqs = np.array([c[1] for c in cells])
    best = np.zeros(len(cells), dtype=int)
    for k, (deg, jq) in enumerate(cells):
        mask = admissible(deg, jq, degs[:k], jqs[:k])
        best[k] = 1 + (best[:k][mask].max() if mask.any() else 0)
    return int(best.max()) if len(cells) else 0


def brute_force_coset_bound(cfg: OracleConfig, c: DivisorClass,
                            pt: str = "P") -> int:
    """Exact maximum admissible chain length for one coset."""
    if c.deg <= 0:
        raise ValueError(f"coset oracles require deg C > 0, got {c.deg}")
    curve = cfg.curve
    m = curve.period
    n_grid = (c.deg + 2 * curve.genus) * m
    if n_grid > cfg.max_cells:
        raise OracleBudgetError(f"grid of {n_grid} cells is over the budget "
                                f"of {cfg.max_cells}")

    if cfg.flavor == "mts":
        return _mts_oracle(curve, c)

    curve, c = _swap_for_point(curve, c, pt)
    cells = _delta_p_cells(curve, c)

    if cfg.flavor == "fixed-B0":
        return sum(1 for _, j in cells if j == 0)
    if cfg.flavor == "fixed-B":
        counts = {}
        for _, j in cells:
            counts[j] = counts.get(j, 0) + 1
        return max(counts.values(), default=0)
    if cfg.flavor == "cbdiv":
        # step condition: next - prev >= P, i.e. deg gap covers one P plus
        # the Q-residue change
        def admissible(deg, jq, degs, jqs):
            return deg - degs >= 1 + (jq - jqs) % m
        return _longest_chain(cells, admissible, cfg.max_cells)
    if cfg.flavor == "abzprime":
        return _abzprime_oracle(cells, m, cfg.max_cells)
    raise AssertionError(cfg.flavor)


def _mts_oracle(curve, c):
    """Chains in Delta_S(C) with A_i - P_i >= A_{i-1}, labels in {P, Q}."""
    m = curve.period
    cells = []
    for i in range(c.deg + 2 * curve.genus):
        for j in range(m):
            a = DivisorClass(i, j)
            if in_delta_p(curve, c, a):
                cells.append((i, j, 0))    # label P
            if in_delta_q(curve, c, a):
                cells.append((i, j, 1))    # label Q
    cells = sorted(cells)
    degs = np.array([x[0] for x in cells])
    jqs = np.array([x[1] for x in cells])
    best = np.zeros(len(cells), dtype=int)
    for k, (deg, jq, label) in enumerate(cells):
        # A_k minus its own label point must dominate the predecessor
        deg_m1 = deg - 1
        jq_m1 = jq - label
        mask = (deg_m1 - degs[:k] >= (jq_m1 - jqs[:k]) % m) & (degs[:k] <= deg_m1)
        best[k] = 1 + (best[:k][mask].max() if mask.any() else 0)
    return int(best.max()) if len(cells) else 0


def _abzprime_oracle(cells, m, budget):
    """Column chains with at most one exceptional (column-changing) step."""
    if len(cells) ** 2 > budget * 50:
        raise OracleBudgetError(f"{len(cells)} cells is over the oracle budget")
    cells = sorted(cells)
    degs = np.array([c[0] for c in cells])
    jqs = np.array([c[1] for c in cells])
    plain = np.zeros(len(cells), dtype=int)    # no jump used yet
    jumped = np.zeros(len(cells), dtype=int)   # jump already spent
    for k, (deg, jq) in enumerate(cells):
        same_col = (jqs[:k] == jq) & (degs[:k] < deg)
        # exceptional step: one P plus the residue change in Q's; a
        # same-column difference is already a pure multiple of P
        jump = (jqs[:k] != jq) & (deg - degs[:k] >= 1 + (jq - jqs[:k]) % m)
        p0 = plain[:k][same_col].max() if same_col.any() else 0
        plain[k] = 1 + p0
        j_prev = jumped[:k][same_col].max() if same_col.any() else 0
        j_new = plain[:k][jump].max() if jump.any() else -1
        jumped[k] = 1 + max(j_prev, j_new if j_new >= 0 else 0)
    if len(cells) == 0:
        return 0
    return int(max(plain.max(), jumped.max()))


def semigroup_from_generators(gens, limit: int):
    """All sums of the generators up to ``limit``, including 0."""
    gens = sorted(set(int(x) for x in gens))
    if not gens or gens[0] < 1:
        raise ValueError("generators must be positive integers")
    if limit < max(gens):
        raise ValueError("limit must be at least the largest generator")
    reachable = [False] * (limit + 1)
    reachable[0] = True
    for n in range(1, limit + 1):
        reachable[n] = any(n >= s and reachable[n - s] for s in gens)
    return {n for n, ok in enumerate(reachable) if ok}
