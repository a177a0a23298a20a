import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from jumpnum.algebra import MonomialIdeal, SparsePolynomial
from jumpnum.jacobian import (
    HypothesisError,
    ar_bounds,
    jac_m,
    jacobian_ideal,
    jacobian_matrix,
    milnor,
    prop_3_8_check,
    thm_4_2_check,
    tyurina,
)

X = sympy.symbols("x0:3")


def poly(terms, d=2):
    return SparsePolynomial(d, terms)


def to_sympy(f):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*(x ** k for x, k in zip(X, e))) for e, c in f.items()),
        sympy.Integer(0),
    )


def sympy_minors(gens, m):
    """All nonzero m x m minors of [gens | d gens / d x_i], computed by sympy."""
    d = gens[0].dimension
    exprs = [to_sympy(g) for g in gens]
    M = sympy.Matrix([exprs + [sympy.diff(e, X[i]) for e in exprs] for i in range(d)])
    out = set()
    for rs in itertools.combinations(range(M.rows), m):
        for cs in itertools.combinations(range(M.cols), m):
            det = sympy.expand(M.extract(list(rs), list(cs)).det())
            if det != 0:
                out.add(det)
    return out


@st.composite
def monomial_lists(draw, d):
    return draw(st.lists(st.tuples(*[st.integers(0, 3)] * d).filter(any), min_size=1, max_size=3, unique=True))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 3).flatmap(lambda d: st.tuples(st.just(d), monomial_lists(d))), st.integers(1, 3))
def test_minors_match_sympy(dg, m):
    d, exps = dg
    gens = [SparsePolynomial.monomial(e) for e in exps]
    if m > min(d, 2 * len(gens)):
        with pytest.raises(ValueError):
            jac_m(gens, m)
        return
    assert {sympy.expand(to_sympy(q)) for q in jac_m(gens, m)} == sympy_minors(gens, m)


def test_presentation_matrix_shape():
    A = jacobian_matrix([SparsePolynomial.monomial((3, 0)), SparsePolynomial.monomial((0, 4))])
    assert A.shape == (2, 4)
    assert A.entry(0, 2) == poly({(2, 0): 3})
    assert A.entry(1, 2).is_zero()


def test_jacobian_ideal_includes_f():
    f = poly({(3, 0): 1, (0, 4): 1})
    assert jacobian_ideal(f) == [f, poly({(2, 0): 3}), poly({(0, 3): 4})]


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 6), st.integers(2, 6))
def test_brieskorn_pham_milnor_and_tyurina(a, b):
    f = poly({(a, 0): 1, (0, b): 1})
    assert milnor(f) == (a - 1) * (b - 1)
    assert tyurina(f) == milnor(f)  # weighted homogeneous


@pytest.mark.parametrize(
    "terms, tau",
    [({(1, 1): 1}, 1), ({(1, 0): 1, (0, 1): 1}, 0), ({(2, 0): 1, (0, 3): 1}, 2)],
)
def test_tyurina_examples(terms, tau):
    assert tyurina(poly(terms)) == tau


def test_non_isolated_singularity_is_rejected():
    with pytest.raises(HypothesisError, match="not isolated"):
        milnor(poly({(2, 0): 1}))


def test_critical_points_away_from_origin_are_rejected():
    with pytest.raises(HypothesisError, match="away from the origin"):
        milnor(poly({(3, 0): 1, (1, 0): -1, (0, 2): 1}))


@pytest.mark.parametrize(
    "gens, m, case",
    [
        ([(1, 0), (0, 1)], 2, "ii"),
        ([(3, 0), (0, 4)], 1, "i"),
        ([(1, 1)], 1, "ii"),
        ([(1, 0), (0, 1)], 1, "i"),
        ([(1, 0, 0), (0, 1, 0)], 2, "ii"),
    ],
)
def test_thm_4_2_cases(gens, m, case):
    verdict = thm_4_2_check(MonomialIdeal(len(gens[0]), gens), m)
    assert verdict.case == case
    assert verdict.holds and not verdict.failures


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 3).flatmap(lambda d: st.tuples(st.just(d), monomial_lists(d))), st.integers(1, 3))
def test_thm_4_2_holds_on_random_monomial_ideals(dg, m):
    d, exps = dg
    if m > d:
        return
    assert thm_4_2_check(MonomialIdeal(d, exps), m).holds


def test_thm_4_2_rejects_bad_m():
    with pytest.raises(ValueError):
        thm_4_2_check(MonomialIdeal.maximal(2), 3)


def test_prop_3_8():
    v = prop_3_8_check(poly({(3, 0): 1, (0, 4): 1}))
    assert v.holds and (v.length, v.tau) == (4, 6)
    v = prop_3_8_check(poly({(2, 0): 1, (0, 3): 1}))
    assert v.holds and (v.length, v.tau) == (2, 2)


def test_prop_3_8_hypotheses():
    with pytest.raises(HypothesisError):
        prop_3_8_check(poly({(1, 1): 1}))  # term ideal (st) has infinite colength
    with pytest.raises(HypothesisError, match="degenerate"):
        prop_3_8_check(poly({(5, 0): 1, (0, 4): 1, (3, 2): 1}))


@pytest.mark.parametrize(
    "terms, bounds",
    [
        ({(3, 0): 1, (0, 4): 1}, (8, 8, 5)),
        ({(2, 0): 1, (0, 3): 1}, (4, 4, 3)),
        ({(1, 0): 1, (0, 1): 1}, (2, 2, 2)),
        ({(1, 1): 1}, (2, 3, 3)),
    ],
)
def test_ar_bounds(terms, bounds):
    assert ar_bounds(poly(terms)).as_tuple() == bounds


def test_ar_bounds_needs_two_variables():
    with pytest.raises(HypothesisError):
        ar_bounds(poly({(2,): 1}, d=1))
