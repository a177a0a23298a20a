"""Buchberger's algorithm over Q in graded reverse lexicographic order."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import DimensionError, Exponent, MonomialIdeal, SparsePolynomial

DEFAULT_STEP_CAP = 100_000

Terms = dict[Exponent, Fraction]


class StepCapExceeded(RuntimeError):
    """The reduction budget ran out before the basis was complete."""


def grevlex_key(e: Exponent) -> tuple:
    """Sort key: larger key means larger monomial (x_1 > x_2 > ... > x_d)."""
    return (sum(e), tuple(-x for x in reversed(e)))


def _lead(f: Terms) -> Exponent:
    return max(f, key=grevlex_key)


def _monic(f: Terms) -> Terms:
    lc = f[_lead(f)]
    return {e: c / lc for e, c in f.items()}


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


class _Counter:
    def __init__(self, cap: int):
        self.cap = cap
        self.steps = 0

    def tick(self) -> None:
        self.steps += 1
        if self.steps > self.cap:
            raise StepCapExceeded(f"Gröbner computation exceeded {self.cap} reduction steps")


def _reduce(f: Terms, basis: list[Terms], leads: list[Exponent], counter: _Counter) -> Terms:
    """Full normal form of ``f`` modulo ``basis``."""
    f = dict(f)
    remainder: Terms = {}
    while f:
        lt = _lead(f)
        lc = f[lt]
        for g, lg in zip(basis, leads):
            if _divides(lg, lt):
                counter.tick()
                shift = tuple(x - y for x, y in zip(lt, lg))
                q = lc / g[lg]
                for e, c in g.items():
                    m = tuple(x + y for x, y in zip(e, shift))
                    v = f.get(m, Fraction(0)) - q * c
                    if v:
                        f[m] = v
                    else:
                        f.pop(m, None)
                break
        else:
            remainder[lt] = lc
            del f[lt]
    return remainder


def _spoly(f: Terms, g: Terms) -> Terms:
    lf, lg = _lead(f), _lead(g)
    lcm = tuple(max(x, y) for x, y in zip(lf, lg))
    sf = tuple(x - y for x, y in zip(lcm, lf))
    sg = tuple(x - y for x, y in zip(lcm, lg))
    out: Terms = {}
    for e, c in f.items():
        m = tuple(x + y for x, y in zip(e, sf))
        out[m] = out.get(m, Fraction(0)) + c / f[lf]
    for e, c in g.items():
        m = tuple(x + y for x, y in zip(e, sg))
        out[m] = out.get(m, Fraction(0)) - c / g[lg]
    return {e: c for e, c in out.items() if c}


@dataclass(frozen=True)
class GroebnerBasis:
    dimension: int
    generators: tuple[SparsePolynomial, ...]
    steps: int = 0
    ordering: str = "grevlex"

    def leading_exponents(self) -> list[Exponent]:
        return [_lead(g.terms) for g in self.generators]

    def leading_ideal(self) -> MonomialIdeal:
        if not self.generators:
            return MonomialIdeal.zero(self.dimension)
        return MonomialIdeal(self.dimension, self.leading_exponents())

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.generators)

    def reduce(self, f: SparsePolynomial, cap: int = DEFAULT_STEP_CAP) -> SparsePolynomial:
        if f.dimension != self.dimension:
            raise DimensionError("polynomial and basis live in different rings")
        basis = [g.terms for g in self.generators]
        return SparsePolynomial(self.dimension, _reduce(f.terms, basis, [_lead(b) for b in basis], _Counter(cap)))

    def contains(self, f: SparsePolynomial) -> bool:
        return self.reduce(f).is_zero()


def groebner(gens: Sequence[SparsePolynomial], step_cap: int = DEFAULT_STEP_CAP) -> GroebnerBasis:
    """Reduced Gröbner basis, monic, sorted by decreasing leading monomial.

    Pairs are taken with the normal selection strategy (smallest lcm first);
    pairs with coprime leading monomials are skipped (Buchberger's first
    criterion).
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    d = gens[0].dimension
    if any(g.dimension != d for g in gens):
        raise DimensionError("generators live in different rings")
    counter = _Counter(step_cap)

    basis: list[Terms] = []
    leads: list[Exponent] = []
    pairs: set[tuple[int, int]] = set()

    def add(f: Terms) -> None:
        f = _monic(f)
        basis.append(f)
        leads.append(_lead(f))
        k = len(basis) - 1
        for i in range(k):
            pairs.add((i, k))

    for g in gens:
        r = _reduce(g.terms, basis, leads, counter)
        if r:
            add(r)

    while pairs:
        i, j = min(
            pairs,
            key=lambda p: (grevlex_key(tuple(max(x, y) for x, y in zip(leads[p[0]], leads[p[1]]))), p),
        )
        pairs.discard((i, j))
        li, lj = leads[i], leads[j]
        if all(x == 0 or y == 0 for x, y in zip(li, lj)):
            continue
        r = _reduce(_spoly(basis[i], basis[j]), basis, leads, counter)
        if r:
            add(r)

    # Drop redundant elements, then inter-reduce.
    keep = [
        k for k in range(len(basis))
        if not any(
            _divides(leads[o], leads[k]) and (leads[o] != leads[k] or o < k)
            for o in range(len(basis)) if o != k
        )
    ]
    minimal = [basis[k] for k in keep]
    reduced = []
    for k, f in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        lf = _lead(f)
        tail = {e: c for e, c in f.items() if e != lf}
        rest = _reduce(tail, others, [_lead(o) for o in others], counter)
        rest[lf] = f[lf]
        reduced.append(_monic(rest))
    reduced.sort(key=lambda f: grevlex_key(_lead(f)), reverse=True)
    return GroebnerBasis(d, tuple(SparsePolynomial(d, f) for f in reduced), counter.steps)


def s_polynomial(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    return SparsePolynomial(f.dimension, _spoly(f.terms, g.terms))


def is_groebner(basis: GroebnerBasis) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    gs = basis.generators
    for a in range(len(gs)):
        for b in range(a + 1, len(gs)):
            if not basis.reduce(s_polynomial(gs[a], gs[b])).is_zero():
                return False
    return True


def colength_zero_dim(basis: GroebnerBasis) -> int:
    """Number of standard monomials; the unit ideal has colength 0."""
    if basis.is_unit():
        return 0
    lead = basis.leading_ideal()
    if not lead.is_finite_colength():
        raise ValueError("ideal is not zero-dimensional: some variable has no pure-power leading term")
    return lead.colength()
