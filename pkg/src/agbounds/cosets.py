"""Per-coset lower bounds via longest-chain dynamic programming.

The grid has one row per degree i in [0, deg C + 2g - 1] and one column per
Q-residue j.  A P-step keeps the column and may collect a counting point
(membership of (i, j) in Delta_P(C)); a Q-step moves the column by one.

All kernels are vectorized across the Q-residue of C: for a fixed deg C the
bounds for all m residues are computed in one pass.  Point-Q variants are
obtained from the point-P kernels on the swapped curve, relabeling the
residue of C from Q-coordinates to P-coordinates.
"""

from __future__ import annotations

import numpy as np

from .curves import CurveSpec
from .membership import DivisorClass


def _require_in_scope(c: DivisorClass):
    if c.deg <= 0:
        raise ValueError(f"coset bounds require deg C > 0, got {c.deg}")


def _window_rows(curve: CurveSpec, c_deg: int) -> int:
    # degrees 0 .. deg C + 2g - 1; Delta is empty outside this window
    return c_deg + 2 * curve.genus


def delta_p_grid(curve: CurveSpec, c_deg: int) -> np.ndarray:
    """Boolean array BP[i, cjq, j]: (i, j) in Delta_P((c_deg, cjq))."""
    m = curve.period
    n = _window_rows(curve, c_deg)
    dqp = np.asarray(curve.d_qp)
    i = np.arange(n)[:, None]
    j = np.arange(m)[None, :]
    in_gp = i >= dqp[(i - j) % m]                               # A in Gamma_P
    shifted = (i - c_deg) >= dqp[((i - c_deg) - j) % m]         # A-C in Gamma_P, by jq of A-C
    idx = (j - np.arange(m)[:, None]) % m                       # jq of A-C per (cjq, j)
    return in_gp[:, None, :] & ~shifted[:, idx]


def delta_q_grid(curve: CurveSpec, c_deg: int) -> np.ndarray:
    """Boolean array BQ[i, cjq, j]: (i, j) in Delta_Q((c_deg, cjq))."""
    m = curve.period
    n = _window_rows(curve, c_deg)
    dpq = np.asarray(curve.d_pq)
    i = np.arange(n)[:, None]
    j = np.arange(m)[None, :]
    in_gq = i >= dpq[None, :]
    shifted = (i - c_deg) >= dpq[None, :]
    idx = (j - np.arange(m)[:, None]) % m
    return in_gq[:, None, :] & ~shifted[:, idx]


def _qstep_index(m: int) -> np.ndarray:
    # T[:, _qstep_index(m)][j] == T[:, j-1]: a Q-step into column j
    return (np.arange(m) - 1) % m


def cbdiv_bounds_by_residue(curve: CurveSpec, c_deg: int) -> np.ndarray:
    """Point-P coset bounds for all C = (c_deg, cjq) at once."""
    m = curve.period
    bp = delta_p_grid(curve, c_deg)
    qstep = _qstep_index(m)
    t = np.zeros((m, m), dtype=np.int32)
    for row in bp:
        t = np.maximum(t[:, qstep], t + row)
    return t.max(axis=1)


def mts_bounds_by_residue(curve: CurveSpec, c_deg: int) -> np.ndarray:
    """Joint {P,Q} coset bounds: both step types may collect a point."""
    m = curve.period
    bp = delta_p_grid(curve, c_deg)
    bq = delta_q_grid(curve, c_deg)
    qstep = _qstep_index(m)
    t = np.zeros((m, m), dtype=np.int32)
    for row_p, row_q in zip(bp, bq):
        t = np.maximum(t[:, qstep] + row_q, t + row_p)
    return t.max(axis=1)


def fixed_column_bounds_by_residue(curve: CurveSpec, c_deg: int):
    """(B0, B) point-P bounds: chains confined to one residue column.

    B takes the best column count; B0 only column 0 (the chain must start
    at a multiple of P).
    """
    colsum = delta_p_grid(curve, c_deg).sum(axis=0, dtype=np.int32)
    return colsum[:, 0].copy(), colsum.max(axis=1)


def abzprime_bounds_by_residue(curve: CurveSpec, c_deg: int) -> np.ndarray:
    """Column chains with at most one column-changing step.

    Two-phase count: a prefix of column j1 up to degree i - delta plus a
    suffix of column j2 from degree i on.  The exceptional step still
    carries one P on top of the residue change, so delta = (j2 - j1) mod m
    + 1; a same-column jump is realizable with pure P-steps and adds
    nothing.  Zero-jump chains are included.
    """
    m = curve.period
    bp = delta_p_grid(curve, c_deg)
    n = bp.shape[0]
    pre = np.cumsum(bp, axis=0, dtype=np.int32)        # counts with deg <= i
    tot = pre[-1]                                      # (cjq, j)
    suf = np.empty_like(pre)                           # counts with deg >= i
    suf[0] = tot
    suf[1:] = tot[None, :, :] - pre[:-1]
    best = tot.max(axis=1)                             # plain column chains
    cols = np.arange(m)
    for off in range(1, m):
        delta = off + 1
        if delta >= n:
            continue
        head = pre[:-delta]                            # phase 1, column j1
        tail = suf[delta:][:, :, (cols + off) % m]     # phase 2, column j1+off
        best = np.maximum(best, (head + tail).max(axis=(0, 2)))
    return best


_P_KERNELS = {
    "cbdiv": cbdiv_bounds_by_residue,
    "abzprime": abzprime_bounds_by_residue,
}


def _point_p_value(curve, c, kernel):
    return int(kernel(curve, c.deg)[c.jq % curve.period])


def _point_q_value(curve, c, kernel):
    # point-Q chains are point-P chains on the swapped curve; the residue
    # of C moves from Q-coordinates to P-coordinates
    m = curve.period
    return int(kernel(curve.swapped(), c.deg)[(c.deg - c.jq) % m])


def _dispatch(curve, c, pt, kernel):
    _require_in_scope(c)
    if pt == "P":
        return _point_p_value(curve, c, kernel)
    if pt == "Q":
        return _point_q_value(curve, c, kernel)
    raise ValueError(f"pt must be 'P' or 'Q', got {pt!r}")


def coset_bound_cbdiv(curve: CurveSpec, c: DivisorClass, pt: str = "P") -> int:
    """Lower bound for word weights in the coset C(C) \\ C(C+pt)."""
    return _dispatch(curve, c, pt, cbdiv_bounds_by_residue)


def coset_bound_mts(curve: CurveSpec, c: DivisorClass) -> int:
    """Lower bound for the joint coset C(C,S) minus both one-point enlargements."""
    _require_in_scope(c)
    return int(mts_bounds_by_residue(curve, c.deg)[c.jq % curve.period])


def coset_bound_fixed_column(curve: CurveSpec, c: DivisorClass, pt: str = "P",
                       variant: str = "B") -> int:
    if variant not in ("B0", "B"):
        raise ValueError(f"variant must be 'B0' or 'B', got {variant!r}")
    idx = 0 if variant == "B0" else 1

    def kernel(cv, c_deg):
        return fixed_column_bounds_by_residue(cv, c_deg)[idx]

    return _dispatch(curve, c, pt, kernel)


def coset_bound_abzprime(curve: CurveSpec, c: DivisorClass, pt: str = "P") -> int:
    return _dispatch(curve, c, pt, abzprime_bounds_by_residue)
