"""Multiplier ideals and jump spectra of monomial ideals.

Everything here goes through Howald's description: ``t^v`` lies in the
multiplier ideal at coefficient ``c`` exactly when ``xi_v > c``, where
``xi_v`` is the minimum over Newton facets of ``l(v + 1)``.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import Exponent, MonomialIdeal, RationalLike, as_rational, format_rational
from .newton import NewtonPolyhedron, newton_polyhedron, xi_of


def _require_proper(ideal: MonomialIdeal) -> None:
    if not ideal.is_proper_nonzero():
        raise ValueError("expected a proper nonzero monomial ideal")


def ideal_digest(ideal: MonomialIdeal) -> str:
    blob = json.dumps({"dimension": ideal.dimension, "generators": [list(g) for g in ideal.generators]})
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def multiplier_ideal(ideal: MonomialIdeal, c: RationalLike, poly: NewtonPolyhedron | None = None) -> MonomialIdeal:
    """Monomial ideal spanned by the ``t^v`` with ``xi_v > c``.

    The last coordinate is solved for directly: for each prefix ``w`` the
    smallest admissible last exponent ``h(w)`` follows from the facet
    inequalities, and ``(w, h(w))`` is a minimal generator exactly when
    lowering any coordinate of ``w`` forces a larger ``h``.
    """
    _require_proper(ideal)
    c = as_rational(c)
    if c < 0:
        raise ValueError("coefficient must be nonnegative")
    d = ideal.dimension
    if c == 0:
        return MonomialIdeal.unit(d)
    if poly is None:
        poly = newton_polyhedron(ideal)
    facets = poly.facets

    # A minimal generator with v_i > 0 has v_i <= c * level / normal_i for some facet.
    bounds = []
    for i in range(d):
        cands = [math.floor(c * f.level / f.normal[i]) for f in facets if f.normal[i]]
        bounds.append(max(cands) if cands else 0)

    def lowest_last(prefix: Sequence[int]) -> int | None:
        need = 0
        for f in facets:
            partial = sum(n * (x + 1) for n, x in zip(f.normal, prefix))
            slack = c * f.level - partial  # need normal_last * (h + 1) > slack
            last = f.normal[-1]
            if last == 0:
                if slack >= 0:
                    return None
                continue
            h = math.floor(slack / last)  # smallest h with last*(h+1) > slack
            need = max(need, h)
        return need

    heights: dict[tuple[int, ...], int | None] = {}
    gens = []
    for prefix in itertools.product(*(range(b + 1) for b in bounds[:-1])):
        h = lowest_last(prefix)
        heights[prefix] = h
        if h is None:
            continue
        minimal = True
        for i, x in enumerate(prefix):
            if x:
                lower = prefix[:i] + (x - 1,) + prefix[i + 1:]
                hl = heights[lower]
                if hl is not None and hl <= h:
                    minimal = False
                    break
        if minimal:
            gens.append(prefix + (h,))
    return MonomialIdeal(d, gens)


def howald_member(poly: NewtonPolyhedron, v: Sequence[int], c: RationalLike) -> bool:
    return xi_of(poly, v) > as_rational(c)


@dataclass(frozen=True)
class JumpSpectrum:
    cutoff: Fraction
    jumps: tuple[Fraction, ...]
    multiplicities: tuple[int, ...] | None = None
    box: int = 0
    source: str = ""
    witnesses: tuple[Exponent, ...] = field(default=(), compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.jumps)

    def __iter__(self):
        return iter(self.jumps)

    def __contains__(self, value) -> bool:
        return as_rational(value) in set(self.jumps)

    def kappa(self) -> list[Fraction]:
        """Jumps repeated according to multiplicity."""
        if self.multiplicities is None:
            raise ValueError("multiplicities are only defined for finite-colength ideals")
        return [x for x, m in zip(self.jumps, self.multiplicities) for _ in range(m)]

    def to_record(self) -> dict:
        rows = []
        for i, x in enumerate(self.jumps):
            rows.append([format_rational(x), None if self.multiplicities is None else self.multiplicities[i]])
        return {
            "cutoff": format_rational(self.cutoff),
            "witness_box": self.box,
            "ideal_hash": self.source,
            "jumps": rows,
        }


def witness_box(poly: NewtonPolyhedron, c_max: Fraction) -> int:
    """Every jump ``<= c_max`` is attained by some ``v`` in ``[0, B]^d``.

    A witness with a coordinate above ``B`` can be clipped to ``B``: facets
    that involve that coordinate stay above ``c_max``, the rest are unchanged.
    """
    return math.ceil(c_max / poly.min_coefficient()) + 1


def coordinate_bounds(poly: NewtonPolyhedron, c_max: Fraction) -> tuple[int, ...]:
    """Per-coordinate refinement of :func:`witness_box`.

    Coordinate ``i`` only needs to run up to ``ceil(c_max / g_i) + 1`` where
    ``g_i`` is the smallest positive coefficient of ``x_i`` over all facets;
    a coordinate that no facet involves can be pinned to zero.
    """
    out = []
    for i in range(poly.dimension):
        coeffs = [Fraction(f.normal[i], f.level) for f in poly.facets if f.normal[i] > 0]
        out.append(math.ceil(c_max / min(coeffs)) + 1 if coeffs else 0)
    return tuple(out)


def jumps_upto(ideal: MonomialIdeal, c_max: RationalLike, box: int | None = None) -> JumpSpectrum:
    """All jumping numbers ``<= c_max`` with their witnesses.

    Multiplicities are reported only for finite colength, where every level
    set of ``xi`` is finite. Passing ``box`` forces the cube ``[0, box]^d``.
    """
    _require_proper(ideal)
    c_max = as_rational(c_max)
    if c_max <= 0:
        raise ValueError("cutoff must be positive")
    poly = newton_polyhedron(ideal)
    if box is None:
        bounds = coordinate_bounds(poly, c_max)
        box = witness_box(poly, c_max)
    else:
        bounds = (box,) * ideal.dimension
    finite = ideal.is_finite_colength()
    d = ideal.dimension
    facets = [(f.normal, f.level) for f in poly.facets]

    counts: dict[Fraction, int] = {}
    first: dict[Fraction, Exponent] = {}

    def xi(v):
        return min(Fraction(sum(n * (x + 1) for n, x in zip(nv, v)), lv) for nv, lv in facets)

    # xi is nondecreasing in each coordinate, so a prefix whose completion by
    # zeros already exceeds c_max can be abandoned.
    def walk(prefix: tuple[int, ...]) -> None:
        k = len(prefix)
        rest = (0,) * (d - k - 1)
        for x in range(bounds[k] + 1):
            v = prefix + (x,)
            value = xi(v + rest)
            if value > c_max:
                break
            if k == d - 1:
                counts[value] = counts.get(value, 0) + 1
                first.setdefault(value, v)
            else:
                walk(v)

    walk(())
    jumps = tuple(sorted(counts))
    mults = tuple(counts[x] for x in jumps) if finite else None
    return JumpSpectrum(
        cutoff=c_max,
        jumps=jumps,
        multiplicities=mults,
        box=box,
        source=ideal_digest(ideal),
        witnesses=tuple(first[x] for x in jumps),
    )


def lct(ideal: MonomialIdeal) -> Fraction:
    _require_proper(ideal)
    return xi_of(newton_polyhedron(ideal), (0,) * ideal.dimension)


def jumping_length_of_multiplier_ideal(ideal: MonomialIdeal, c: RationalLike) -> int:
    c = as_rational(c)
    if c < lct(ideal):
        return 0
    return len(jumps_upto(ideal, c))


@dataclass
class ArtinReesReport:
    description: str
    m: int
    k: int
    holds: bool
    witness: Exponent | None = None

    def __bool__(self) -> bool:
        return self.holds


def artin_rees_check(
    outer: MonomialIdeal | None,
    inner: MonomialIdeal,
    b: MonomialIdeal,
    m: int,
    k: int,
) -> ArtinReesReport:
    """Brute-force ``b^m * outer ∩ inner ⊆ b^(m-k) * inner``.

    With ``outer=None`` the left side is ``b^m ∩ inner`` (the single-ideal
    form with ``k = d * jumping length``).
    """
    if m < k:
        raise ValueError(f"need m >= k, got m={m}, k={k}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    left_factor = b ** m if outer is None else (b ** m) * outer
    lhs = left_factor & inner
    rhs = (b ** (m - k)) * inner
    witness = rhs.first_non_member(lhs)
    desc = (
        f"b^{m} ∩ J ⊆ b^{m - k}·J" if outer is None else f"b^{m}·J' ∩ J ⊆ b^{m - k}·J"
    )
    return ArtinReesReport(desc, m, k, witness is None, witness)


def consecutive_pairs(ideal: MonomialIdeal, c_max: RationalLike) -> list[tuple[Fraction, Fraction]]:
    """Pairs ``(xi_i, xi_{i+1})`` with ``xi_0 = 0`` and ``xi_{i+1} <= c_max``."""
    spec = jumps_upto(ideal, c_max)
    chain = (Fraction(0),) + spec.jumps
    return list(zip(chain, chain[1:]))


def consecutive_pair_instances(ideal: MonomialIdeal, b: MonomialIdeal, m: int, c_max: RationalLike) -> list[ArtinReesReport]:
    """Uniform Artin–Rees with ``k = d`` for every consecutive pair of multiplier ideals."""
    d = ideal.dimension
    poly = newton_polyhedron(ideal)
    out = []
    for lo, hi in consecutive_pairs(ideal, c_max):
        out.append(artin_rees_check(multiplier_ideal(ideal, lo, poly), multiplier_ideal(ideal, hi, poly), b, m, d))
    return out


def jumping_length_instance(ideal: MonomialIdeal, b: MonomialIdeal, c: RationalLike, m: int | None = None) -> ArtinReesReport:
    c = as_rational(c)
    ell = jumping_length_of_multiplier_ideal(ideal, c)
    k = ell * ideal.dimension
    return artin_rees_check(None, multiplier_ideal(ideal, c), b, k if m is None else m, k)


def skoda_check(ideal: MonomialIdeal, c: RationalLike, m: int, probe: bool = False) -> bool:
    """``J(a^(m+c+1)) == a * J(a^(m+c))``; needs ``m >= d - 1`` unless probing."""
    _require_proper(ideal)
    c = as_rational(c)
    if c <= 0:
        raise ValueError("c must be positive")
    if m < ideal.dimension - 1 and not probe:
        raise ValueError(f"m={m} is below d-1={ideal.dimension - 1}; pass probe=True for an informational run")
    poly = newton_polyhedron(ideal)
    return multiplier_ideal(ideal, m + c + 1, poly) == ideal * multiplier_ideal(ideal, m + c, poly)


@dataclass
class PeriodicityReport:
    window: Fraction
    jumps: tuple[Fraction, ...]
    dimension: int
    generators: int
    forward_violations: list[Fraction] = field(default_factory=list)
    backward_violations: list[Fraction] = field(default_factory=list)
    generator_violations: list[Fraction] = field(default_factory=list)
    boundary_examples: list[Fraction] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not (self.forward_violations or self.backward_violations or self.generator_violations)


def periodicity_check(ideal: MonomialIdeal, window: RationalLike) -> PeriodicityReport:
    """Check ``xi`` jump ⇔ ``xi + 1`` jump in the ranges where it must hold.

    ``boundary_examples`` lists non-jumps ``x <= d - 1`` with ``x + 1`` a
    jump, i.e. places where dropping the hypothesis really fails.
    """
    window = as_rational(window)
    spec = jumps_upto(ideal, window)
    jumps = set(spec.jumps)
    d, p = ideal.dimension, len(ideal.generators)
    rep = PeriodicityReport(window, spec.jumps, d, p)
    for x in spec.jumps:
        if x + 1 <= window and x + 1 not in jumps:
            rep.forward_violations.append(x)
    for y in spec.jumps:
        x = y - 1
        if x <= 0 or x in jumps:
            continue
        if x > d - 1:
            rep.backward_violations.append(x)
        elif x > p - 1:
            rep.generator_violations.append(x)
        else:
            rep.boundary_examples.append(x)
    return rep


@dataclass
class SubadditivityReport:
    window: Fraction
    jumps: tuple[Fraction, ...]
    violations: list[int] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations


def subadditivity_check(ideal: MonomialIdeal, window: RationalLike) -> SubadditivityReport:
    """For every ``xi_i`` with ``xi_i + lct <= window`` the next jump is ``<= xi_1 + xi_i``."""
    window = as_rational(window)
    first = lct(ideal)
    if window < first:
        raise ValueError("window must reach the log canonical threshold")
    spec = jumps_upto(ideal, window)
    js = spec.jumps
    rep = SubadditivityReport(window, js)
    for i, x in enumerate(js):
        if x + first > window:
            break
        nxt = js[i + 1] if i + 1 < len(js) else None
        if nxt is None or nxt > x + first:
            rep.violations.append(i + 1)
    return rep


def direct_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """The ideal generated by ``a`` and ``b`` in disjoint sets of variables."""
    d = a.dimension + b.dimension
    return a.embed(d, 0) + b.embed(d, a.dimension)


def _mi(ideal: MonomialIdeal, c: Fraction) -> MonomialIdeal:
    if c <= 0:
        return MonomialIdeal.unit(ideal.dimension)
    return multiplier_ideal(ideal, c)


def mustata_sum(a: MonomialIdeal, b: MonomialIdeal, c: RationalLike) -> MonomialIdeal:
    """``sum over lam + mu = c`` of ``J(a^lam) * J(b^mu)`` in the combined variables.

    Both factors are piecewise constant in ``lam``, so it suffices to take
    the breakpoints and one point inside each open interval between them.
    """
    c = as_rational(c)
    if c <= 0:
        raise ValueError("c must be positive")
    _require_proper(a)
    _require_proper(b)
    d = a.dimension + b.dimension
    points = {Fraction(0), c}
    points.update(jumps_upto(a, c).jumps)
    points.update(c - x for x in jumps_upto(b, c).jumps)
    pts = sorted(points)
    samples = pts + [(x + y) / 2 for x, y in zip(pts, pts[1:])]
    total = MonomialIdeal.zero(d)
    for lam in samples:
        left = _mi(a, lam).embed(d, 0)
        right = _mi(b, c - lam).embed(d, a.dimension)
        total = total + left * right
    return total


def thom_sebastiani_jumps(a: MonomialIdeal, b: MonomialIdeal, c_max: RationalLike) -> JumpSpectrum:
    """Sorted sums ``xi_i(a) + xi_j(b) <= c_max``."""
    c_max = as_rational(c_max)
    la, lb = lct(a), lct(b)
    if c_max < la + lb:
        raise ValueError("window too small to contain any sum of jumps")
    ja = jumps_upto(a, c_max - lb).jumps
    jb = jumps_upto(b, c_max - la).jumps
    sums = sorted({x + y for x in ja for y in jb if x + y <= c_max})
    return JumpSpectrum(cutoff=c_max, jumps=tuple(sums), source=f"{ideal_digest(a)}+{ideal_digest(b)}")


def _check_kappa(seq: Sequence[Fraction]) -> None:
    if any(x > y for x, y in zip(seq, seq[1:])):
        raise ValueError("κ-sequence must be nondecreasing")


def semicontinuity_compare(general: Sequence[RationalLike], special: Sequence[RationalLike]) -> bool:
    """True iff ``special[i] <= general[i]`` on every shared index.

    Sequences may include the leading ``κ_0 = 0`` or not, but both must
    use the same convention.
    """
    g = [as_rational(x) for x in general]
    s = [as_rational(x) for x in special]
    _check_kappa(g)
    _check_kappa(s)
    return all(y <= x for x, y in zip(g, s))


def kappa_sequence(ideal: MonomialIdeal, c_max: RationalLike) -> list[Fraction]:
    return jumps_upto(ideal, c_max).kappa()


def smooth_subvariety_check(e: int, d: int, c: RationalLike) -> bool:
    """``J(p^c) == p^max(0, floor(c) + 1 - e)`` for ``p = (x_1, ..., x_e)``."""
    if not 1 <= e <= d:
        raise ValueError("codimension must satisfy 1 <= e <= d")
    c = as_rational(c)
    if c <= 0:
        raise ValueError("c must be positive")
    p = MonomialIdeal.variables(d, range(e))
    return multiplier_ideal(p, c) == p ** max(0, math.floor(c) + 1 - e)


@dataclass
class DenominatorReport:
    modulus: int
    bad_jumps: list[Fraction]
    min_gap: Fraction | None

    @property
    def holds(self) -> bool:
        return not self.bad_jumps and (self.min_gap is None or self.min_gap >= Fraction(1, self.modulus))


def denominator_bound(spec: JumpSpectrum, poly: NewtonPolyhedron) -> DenominatorReport:
    m = poly.level_lcm()
    bad = [x for x in spec.jumps if m % x.denominator]
    gaps = [y - x for x, y in zip(spec.jumps, spec.jumps[1:])]
    return DenominatorReport(m, bad, min(gaps) if gaps else None)
