import numpy as np
import pytest

from agbounds.reports import (BoundSet, comparison_to_csv, comparison_to_doc,
                              compare_bounds, cross_tab, crosstab_to_csv,
                              optima_to_csv, optimal_by_degree,
                              universe_degrees)
from agbounds.tables import ALL_KINDS, BoundKind


def test_universe_degrees():
    assert list(universe_degrees(14, "0..2g-1")) == list(range(0, 28))
    assert list(universe_degrees(14, "1..2g")) == list(range(1, 29))
    with pytest.raises(ValueError):
        universe_degrees(14, "2..3g")


def test_universe_sizes_agree(suzuki2, bounds2):
    for universe in ("0..2g-1", "1..2g"):
        rep = compare_bounds(suzuki2, ALL_KINDS, universe, bounds2)
        assert rep.n_codes == 2 * suzuki2.genus * suzuki2.period


def test_comparison_is_consistent_with_crosstab(suzuki2, bounds2):
    rep = compare_bounds(suzuki2, ALL_KINDS, "0..2g-1", bounds2)
    ct = cross_tab(suzuki2, "0..2g-1", bounds2)
    # improvements of DP over B = everything off row 0 of the cross-tab
    assert rep.pairs[("b", "dp")][0] == int(ct.matrix[1:].sum())
    # improvements of DK over DP = everything off column 0
    assert rep.pairs[("dp", "dk")][0] == int(ct.matrix[:, 1:].sum())
    assert ct.total == rep.n_codes


def test_bound_chain_over_universe(suzuki2, bounds2):
    order = (BoundKind.B0, BoundKind.B, BoundKind.ABZP, BoundKind.DP,
             BoundKind.DK)
    vals = [bounds2.values(k, "0..2g-1") for k in order]
    for lo, hi in zip(vals, vals[1:]):
        assert (lo <= hi).all()


def test_zero_improvement_means_zero_max(suzuki2, bounds2):
    rep = compare_bounds(suzuki2, ALL_KINDS, "0..2g-1", bounds2)
    for (x, y), (count, mx) in rep.pairs.items():
        assert (count == 0) == (mx == 0)


def test_optima_argmax_canonicalized(suzuki2, bounds2):
    rows = optimal_by_degree(suzuki2, BoundKind.DK, bounds2)
    m = suzuki2.period
    for row in rows:
        assert row.excess_over_dp >= 0
        assert row.excess_over_b >= row.excess_over_dp
        assert row.argmax_cq
        for j in row.argmax_cq:
            assert j <= (row.deg_c - j) % m


def test_report_rendering_deterministic(suzuki2, bounds2):
    rep = compare_bounds(suzuki2, ALL_KINDS, "0..2g-1", bounds2)
    rep2 = compare_bounds(suzuki2, ALL_KINDS, "0..2g-1", bounds2)
    assert comparison_to_csv(rep) == comparison_to_csv(rep2)
    assert comparison_to_doc(rep) == comparison_to_doc(rep2)
    ct = cross_tab(suzuki2, "0..2g-1", bounds2)
    assert crosstab_to_csv(ct) == crosstab_to_csv(cross_tab(suzuki2, "0..2g-1", bounds2))
    rows = optimal_by_degree(suzuki2, BoundKind.DK, bounds2)
    text = optima_to_csv(rows)
    assert text == optima_to_csv(optimal_by_degree(suzuki2, BoundKind.DK, bounds2))
    assert text.startswith("deg_c,best,argmax_cq")


def test_gop_and_bpt_values(suzuki2, bounds2):
    gop = bounds2.values(BoundKind.GOP, "0..2g-1")
    bpt = bounds2.values(BoundKind.BPT, "0..2g-1")
    diff = bpt - gop
    assert diff.min() >= 0 and diff.max() <= 1
    assert (gop[:, 0] == np.arange(2 * suzuki2.genus)).all()
