from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jumpnum.algebra import SparsePolynomial
from jumpnum.bernstein import RootList, cor_2_4_check, largest_root_check, thm_2_1_check
from jumpnum.hypersurface import fractional_jumps

F = Fraction


def yano_roots(a, b):
    """Roots of the reduced b-function of s^a + t^b: -(i/a + j/b) for 0 < i < a, 0 < j < b, and -1."""
    return {-(F(i, a) + F(j, b)) for i in range(1, a) for j in range(1, b)} | {F(-1)}


def roots(values):
    return RootList.from_values(values)


def test_root_list_normalizes_and_drops_out_of_range(caplog):
    rl = roots(["-1", F(-1, 2), F(-1, 2), F(-3, 2)])
    assert rl.roots == (F(-1, 2), F(-1))
    assert "ignoring 1 root" in caplog.text


@pytest.mark.parametrize("values", [[], [F(-1, 2)], [F(1, 2), F(-1)]])
def test_root_list_validation(values):
    with pytest.raises(ValueError):
        RootList(tuple(values))


def test_s3_t4_jumps_are_roots():
    rl = roots(v for v in yano_roots(3, 4) if v >= -1)
    assert thm_2_1_check([F(7, 12), F(5, 6), F(11, 12), F(1)], rl)
    assert cor_2_4_check(rl)
    assert largest_root_check(F(7, 12), rl)


def test_extra_roots_are_tolerated():
    rl = roots([F(-7, 12), F(-2, 3), F(-5, 6), F(-11, 12), F(-1)])
    assert thm_2_1_check([F(7, 12), F(5, 6), F(11, 12), F(1)], rl)


def test_a_missing_root_is_reported():
    rl = roots([F(-7, 12), F(-11, 12), F(-1)])
    verdict = thm_2_1_check([F(7, 12), F(5, 6), F(11, 12)], rl)
    assert not verdict and verdict.missing == [F(-5, 6)]


def test_chain_violation_is_located():
    # r_2 = -1 lies below r_1 + r_1 = -1/2
    verdict = cor_2_4_check(roots([F(-1, 4), F(-1)]))
    assert not verdict and verdict.violations == [1]
    assert cor_2_4_check(roots([F(-1, 2), F(-3, 5), F(-1)]))
    verdict = cor_2_4_check(roots([F(-1, 5), F(-2, 5), F(-1, 2), F(-1)]))
    assert verdict.violations == [3]


def test_largest_root_mismatch():
    rl = roots([F(-2, 3), F(-1)])
    assert not largest_root_check(F(7, 12), rl)
    with pytest.raises(ValueError):
        largest_root_check(F(3, 2), rl)


def test_jumps_outside_the_unit_interval_are_rejected():
    with pytest.raises(ValueError):
        thm_2_1_check([F(3, 2)], roots([F(-1)]))


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 6), st.integers(2, 6))
def test_brieskorn_pham_jumps_against_known_roots(a, b):
    f = SparsePolynomial(2, {(a, 0): 1, (0, b): 1})
    rl = roots(v for v in yano_roots(a, b) if v >= -1)
    jumps = list(fractional_jumps(f)) + [F(1)]
    assert thm_2_1_check(jumps, rl)
    assert largest_root_check(jumps[0], rl)
    assert cor_2_4_check(rl)
