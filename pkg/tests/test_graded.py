import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jumpnum.graded import (
    DiagonalFamily,
    Mu,
    cluster_diagnostics,
    diagonal_jumps,
    diagonal_kappa,
    diagonal_member,
    hyperbola_integer_witness,
    hyperbola_jumps,
    hyperbola_member,
    hyperbola_value,
    nonperiodicity_demo,
    prop_5_8_check,
    right_stable_window,
)

F = Fraction

mus = st.fractions(min_value=F(1, 2), max_value=F(6), max_denominator=4).filter(lambda x: x > 0)


def brute_diagonal(mu, c_max):
    ranges = [range(math.ceil(c_max * m) + 2) for m in mu]
    values = {sum((F(x + 1) / m for x, m in zip(e, mu)), F(0)) for e in itertools.product(*ranges)}
    return sorted(x for x in values if x <= c_max)


def in_semigroup(target, gens, bound=40):
    """Whether target is a nonnegative integer combination of gens (bounded search)."""
    reach = {F(0)}
    for _ in range(bound):
        reach |= {r + g for r in reach for g in gens if r + g <= target}
    return target in reach


# -- diagonal family ---------------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(st.lists(mus, min_size=1, max_size=3), st.fractions(min_value=F(1), max_value=F(4), max_denominator=3))
def test_diagonal_jumps_match_box_enumeration(mu, c_max):
    assert diagonal_jumps(DiagonalFamily(mu), c_max).jumps == brute_diagonal(mu, c_max)


def test_integral_family_is_the_monomial_case():
    # mu = (2, 3): the family a_m = (s^2, t^3)^m, whose jumps are those of (s^2, t^3)
    stream = diagonal_jumps(DiagonalFamily([2, 3]), 2)
    assert stream.jumps[:3] == [F(5, 6), F(7, 6), F(4, 3)]
    assert stream.parameters[F(5, 6)] == [(0, 0)]


def test_diagonal_kappa_counts_lattice_points():
    # 1/2 + 1/2 = 1 from (0,0); 3/2 from (0,1) and (1,0)
    assert diagonal_kappa(DiagonalFamily([2, 2]), F(3, 2)) == [F(1), F(3, 2), F(3, 2)]


def test_diagonal_member_is_strict_and_respects_error_bars():
    fam = DiagonalFamily([F(3, 2)])
    assert diagonal_member(fam, (0,), F(1, 2))
    assert not diagonal_member(fam, (0,), F(2, 3))
    fuzzy = DiagonalFamily([Mu(F(3, 2), F(1, 100))])
    assert diagonal_member(fuzzy, (0,), F(2, 3)) is None
    assert diagonal_member(fuzzy, (0,), F(1, 2)) is True


def test_mu_must_be_positive():
    with pytest.raises(ValueError):
        Mu(F(0))
    with pytest.raises(ValueError):
        Mu(F(1), F(2))


@pytest.mark.parametrize(
    "mu, kind, witness",
    [([F(3, 2)], "forward", F(2, 3)), ([F(5, 2), 1], "backward", F(6, 5)), ([F(12), F(9, 5), F(4)], "none-found", None)],
)
def test_nonperiodicity_examples(mu, kind, witness):
    v = nonperiodicity_demo(DiagonalFamily(mu))
    assert v.applicable and v.kind == kind and v.witness == witness


def test_integral_family_is_not_a_counterexample():
    assert not nonperiodicity_demo(DiagonalFamily([2, 3])).applicable


@settings(max_examples=40, deadline=None)
@given(st.lists(mus.filter(lambda x: x <= 4), min_size=1, max_size=3))
def test_nonperiodicity_witnesses_are_genuine(mu):
    fam = DiagonalFamily(mu)
    v = nonperiodicity_demo(fam)
    if fam.is_integral():
        assert not v.applicable
        return
    # a forward witness exists exactly when 1 is not in the semigroup of the 1/mu_i
    assert (v.kind == "forward") == (not in_semigroup(F(1), [1 / m for m in mu]))
    if v.witness is None:
        return
    jumps = set(brute_diagonal(mu, v.witness + 1))
    if v.kind == "forward":
        assert v.witness in jumps and v.witness + 1 not in jumps
    else:
        assert v.witness + 1 in jumps and v.witness not in jumps and v.witness > len(mu) - 1


# -- hyperbola family --------------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.integers(0, 12), st.integers(0, 12), st.fractions(min_value=F(1, 10), max_value=F(8), max_denominator=10))
def test_hyperbola_value_is_the_membership_threshold(e, f, c):
    assert hyperbola_member((e, f), c) == (c < hyperbola_value(e, f))


def test_hyperbola_jumps():
    stream = hyperbola_jumps(3, 1)
    assert stream.jumps == [F(1, 2), F(2, 3), F(3, 4), F(4, 5), F(1)]
    assert stream.parameters[F(1)] == [(1, 1)]


def test_every_positive_integer_is_a_hyperbola_jump():
    for n in range(1, 6):
        e, f = hyperbola_integer_witness(n)
        assert hyperbola_value(e, f) == n


def test_cluster_diagnostics():
    rep = cluster_diagnostics(20, 2, F(1, 10))
    assert rep.left_grows
    stable = cluster_diagnostics(right_stable_window(2, F(1, 10)), 2, F(1, 10))
    assert stable.right_stable is True
    with pytest.raises(ValueError):
        cluster_diagnostics(10, 0, F(1, 10))


def test_right_side_counts_are_final_past_the_threshold():
    n, eps = 2, F(1, 10)
    w = right_stable_window(n, eps)
    count = lambda window: sum(1 for x in hyperbola_jumps(window, n + eps).jumps if n < x < n + eps)
    assert count(w) == count(3 * w)


def test_gap_bound_on_a_diagonal_stream():
    fam = DiagonalFamily([F(5, 2), 1])
    first = fam.value((0, 0))
    assert prop_5_8_check(diagonal_jumps(fam, 6), first).holds
    assert prop_5_8_check(hyperbola_jumps(30, 4), F(1, 2), margin=1).holds
