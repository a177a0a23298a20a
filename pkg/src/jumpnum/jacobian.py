"""Jacobian ideals, Tyurina and Milnor numbers, and their inclusions in multiplier ideals."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import DimensionError, Exponent, MonomialIdeal, SparsePolynomial
from .groebner import GroebnerBasis, colength_zero_dim, groebner
from .hypersurface import jumping_length, nondegeneracy_check, term_ideal
from .jumping import multiplier_ideal
from .newton import newton_polyhedron, xi_of


class HypothesisError(ValueError):
    """An input falls outside the range where a statement applies."""


@dataclass(frozen=True)
class PresentationMatrix:
    """``d x 2t`` matrix: generators repeated down each row, then their partials."""

    rows: tuple[tuple[SparsePolynomial, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def entry(self, i: int, j: int) -> SparsePolynomial:
        return self.rows[i][j]


def jacobian_matrix(generators: Sequence[SparsePolynomial]) -> PresentationMatrix:
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    d = gens[0].dimension
    if any(g.dimension != d for g in gens):
        raise DimensionError("generators live in different rings")
    rows = tuple(tuple(gens) + tuple(g.partial(i) for g in gens) for i in range(d))
    return PresentationMatrix(rows)


def determinant(matrix: Sequence[Sequence[SparsePolynomial]]) -> SparsePolynomial:
    """Laplace expansion along the first row."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = None
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * determinant(minor)
        term = term if j % 2 == 0 else -term
        total = term if total is None else total + term
    if total is None:
        return SparsePolynomial(matrix[0][0].dimension)
    return total


def jac_m(generators: Sequence[SparsePolynomial], m: int) -> list[SparsePolynomial]:
    """Distinct nonzero ``m x m`` minors of the presentation matrix."""
    A = jacobian_matrix(generators)
    d, cols = A.shape
    if not 1 <= m <= min(d, cols):
        raise ValueError(f"m must lie in [1, {min(d, cols)}]")
    seen: dict[SparsePolynomial, None] = {}
    for rs in itertools.combinations(range(d), m):
        for cs in itertools.combinations(range(cols), m):
            det = determinant([[A.rows[r][c] for c in cs] for r in rs])
            if not det.is_zero():
                seen.setdefault(det, None)
    return list(seen)


def jacobian_ideal(f: SparsePolynomial) -> list[SparsePolynomial]:
    """``(f, ∂f/∂x_1, ..., ∂f/∂x_d)``, with ``f`` itself included."""
    return [f] + [f.partial(i) for i in range(f.dimension)]


def partials_ideal(f: SparsePolynomial) -> list[SparsePolynomial]:
    return [f.partial(i) for i in range(f.dimension)]


def _supported_at_origin(basis: GroebnerBasis, colength: int) -> bool:
    # In an algebra of dimension n, x_i is nilpotent iff x_i^n vanishes.
    d = basis.dimension
    for i in range(d):
        e = [0] * d
        e[i] = max(colength, 1)
        if not basis.contains(SparsePolynomial.monomial(e)):
            return False
    return True


def _local_colength(gens: Sequence[SparsePolynomial], what: str) -> int:
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise HypothesisError(f"{what}: the ideal is zero")
    basis = groebner(gens)
    if basis.is_unit():
        return 0
    try:
        n = colength_zero_dim(basis)
    except ValueError as exc:
        raise HypothesisError(f"{what}: ideal is not zero-dimensional (singularity is not isolated)") from exc
    if not _supported_at_origin(basis, n):
        raise HypothesisError(f"{what}: the scheme has points away from the origin; the global colength is not local")
    return n


def tyurina(f: SparsePolynomial) -> int:
    """Colength of ``(f, partials)``; requires the scheme to sit at the origin only."""
    return _local_colength(jacobian_ideal(f), "Tyurina number")


def milnor(f: SparsePolynomial) -> int:
    return _local_colength(partials_ideal(f), "Milnor number")


@dataclass
class InclusionVerdict:
    case: str
    holds: bool
    detail: str = ""
    failures: list[Exponent] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.holds


def thm_4_2_check(ideal: MonomialIdeal, m: int) -> InclusionVerdict:
    """``Jac_m(a) ⊆ J(a^m)`` or its limit form, depending on the height of ``J(a^m)``."""
    if not ideal.is_proper_nonzero():
        raise ValueError("expected a proper nonzero monomial ideal")
    d = ideal.dimension
    if not 1 <= m <= d:
        raise ValueError(f"m must lie in [1, {d}]")
    gens = [SparsePolynomial.monomial(g) for g in ideal.generators]
    # With fewer than m columns' worth of generators every m x m minor is
    # absent, so Jac_m is the zero ideal and the inclusion is automatic.
    minors = jac_m(gens, m) if m <= 2 * len(gens) else []
    poly = newton_polyhedron(ideal)
    target = multiplier_ideal(ideal, m, poly)
    terms = sorted({e for q in minors for e in q.terms})

    if target.is_unit():
        return InclusionVerdict("i", True, "J(a^m) is the unit ideal; the inclusion is automatic")
    h = target.height()
    if h >= m + 1:
        bad = [e for e in terms if not target.member(e)]
        return InclusionVerdict("i", not bad, f"height {h} >= m+1; {len(terms)} minor terms tested for membership", bad)
    if h == m:
        bad = [e for e in terms if xi_of(poly, e) < m]
        return InclusionVerdict("ii", not bad, f"height {h} = m; tested xi(u) >= {m} on {len(terms)} minor terms", bad)
    return InclusionVerdict("hypothesis-not-met", True, f"height {h} < m = {m}")


def _isolated_hypotheses(f: SparsePolynomial) -> MonomialIdeal:
    ideal = term_ideal(f)
    if ideal.is_unit() or not ideal.is_finite_colength():
        raise HypothesisError("term ideal does not have finite colength")
    if nondegeneracy_check(f).status == "refuted":
        raise HypothesisError("f is degenerate")
    return ideal


@dataclass
class Prop38Verdict:
    limit_membership: bool
    length: int
    tau: int
    failures: list[Exponent] = field(default_factory=list)

    @property
    def length_bound(self) -> bool:
        return self.length <= self.tau + 1

    @property
    def holds(self) -> bool:
        return self.limit_membership and self.length_bound


def prop_3_8_check(f: SparsePolynomial) -> Prop38Verdict:
    """Terms of ``Jac(f)`` satisfy ``xi(u) >= 1``, and ``l(f) <= tau(f) + 1``."""
    ideal = _isolated_hypotheses(f)
    poly = newton_polyhedron(ideal)
    terms = sorted({e for g in jacobian_ideal(f) for e in g.terms})
    bad = [e for e in terms if xi_of(poly, e) < 1]
    return Prop38Verdict(not bad, jumping_length(f), tyurina(f), bad)


@dataclass(frozen=True)
class ArtinReesBounds:
    dl: int
    tau_plus_d: int
    half_mu_plus_d: int
    mu_odd: bool

    def as_tuple(self) -> tuple[int, int, int]:
        return self.dl, self.tau_plus_d, self.half_mu_plus_d


def ar_bounds(f: SparsePolynomial) -> ArtinReesBounds:
    """Three uniform Artin–Rees numbers: ``d*l``, ``tau + d`` and ``ceil(mu/2) + d``."""
    d = f.dimension
    if d < 2:
        raise HypothesisError("the Milnor-number bound needs at least two variables")
    ell = jumping_length(f)
    tau = tyurina(f)
    mu = milnor(f)
    return ArtinReesBounds(d * ell, tau + d, math.ceil(Fraction(mu, 2)) + d, mu % 2 == 1)
