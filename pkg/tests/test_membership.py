import pytest

from agbounds import (DivisorClass, in_delta_p, in_delta_q, in_gamma_p,
                      in_gamma_q, is_effective_class)


def test_gamma_q_examples(suzuki2):
    assert in_gamma_q(suzuki2, DivisorClass(0, 0))
    assert not in_gamma_q(suzuki2, DivisorClass(7, 7))     # 7 is a gap
    assert in_gamma_q(suzuki2, DivisorClass(8, 8))         # 8 is a nongap


def test_gamma_p_examples(suzuki2):
    assert in_gamma_p(suzuki2, DivisorClass(8, 0))
    assert not in_gamma_p(suzuki2, DivisorClass(1, 0))


def test_gamma_p_matches_gamma_q_reflection_on_symmetric_curve(suzuki2):
    m = suzuki2.period
    for deg in range(-3, 35):
        for jq in range(m):
            a = DivisorClass(deg, jq)
            mirror = DivisorClass(deg, (deg - jq) % m)
            assert in_gamma_p(suzuki2, a) == in_gamma_q(suzuki2, mirror)


def test_effective_class_examples(suzuki2):
    assert is_effective_class(suzuki2, DivisorClass(0, 0))
    assert not is_effective_class(suzuki2, DivisorClass(-1, 0))
    # the class of Q contains the effective divisor Q even though Q is
    # not in Gamma_Q
    assert not in_gamma_q(suzuki2, DivisorClass(1, 1))
    assert is_effective_class(suzuki2, DivisorClass(1, 1))


def test_delta_p_examples(suzuki2):
    c = DivisorClass(2, 1)
    assert in_delta_p(suzuki2, c, DivisorClass(8, 0))
    assert not in_delta_p(suzuki2, c, DivisorClass(1, 0))


def test_delta_with_zero_c_is_empty(suzuki2):
    zero = DivisorClass(0, 0)
    for deg in range(0, 30):
        for jq in range(suzuki2.period):
            a = DivisorClass(deg, jq)
            assert not in_delta_p(suzuki2, zero, a)
            assert not in_delta_q(suzuki2, zero, a)


def test_gamma_threshold_is_monotone_in_degree(suzuki2):
    m = suzuki2.period
    for jq in range(m):
        flags = [in_gamma_q(suzuki2, DivisorClass(deg, jq))
                 for deg in range(-1, 30)]
        # false then true, single threshold
        assert flags == sorted(flags)


def test_gamma_q_closed_under_adding_p(suzuki2):
    # adding a copy of P raises the degree and keeps the Q-residue
    m = suzuki2.period
    for deg in range(0, 30):
        for jq in range(m):
            if in_gamma_q(suzuki2, DivisorClass(deg, jq)):
                assert in_gamma_q(suzuki2, DivisorClass(deg + 1, jq))


def test_effective_closed_under_adding_points(suzuki2):
    m = suzuki2.period
    for deg in range(0, 30):
        for jq in range(m):
            a = DivisorClass(deg, jq)
            if is_effective_class(suzuki2, a):
                assert is_effective_class(suzuki2, DivisorClass(deg + 1, jq))
                assert is_effective_class(
                    suzuki2, DivisorClass(deg + 1, (jq + 1) % m))


def test_delta_degree_range_confinement(suzuki2):
    g, m = suzuki2.genus, suzuki2.period
    for c_deg in range(1, 2 * g + 1):
        for c_jq in range(m):
            c = DivisorClass(c_deg, c_jq)
            for deg in range(-5, c_deg + 2 * g + 5):
                for jq in range(m):
                    if in_delta_p(suzuki2, c, DivisorClass(deg, jq)):
                        assert 0 <= deg <= c_deg + 2 * g - 1


def test_everything_above_2g_is_in_both_semigroups(suzuki2):
    g, m = suzuki2.genus, suzuki2.period
    for deg in range(2 * g, 2 * g + m):
        for jq in range(m):
            assert in_gamma_p(suzuki2, DivisorClass(deg, jq))
            assert in_gamma_q(suzuki2, DivisorClass(deg, jq))
