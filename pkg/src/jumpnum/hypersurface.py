"""Jumping numbers of principal divisors ``div(f)`` for nondegenerate ``f``.

Below 1 the multiplier ideals of ``f`` agree with those of its term ideal;
from 1 on, ``J(c f) = (f) J((c - 1) f)``. Both rules require ``f`` to be
nondegenerate with respect to its Newton polyhedron, which is certified
exactly for two variables.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import MonomialIdeal, RationalLike, SparsePolynomial, as_rational
from .groebner import DEFAULT_STEP_CAP, groebner
from .jumping import jumps_upto, multiplier_ideal
from .newton import Face, faces_2d, polyhedron_from_points

SAMPLES_PER_FACE = 64


class DegenerateError(ValueError):
    """The polynomial is not certified nondegenerate."""


def term_ideal(f: SparsePolynomial) -> MonomialIdeal:
    if f.is_zero():
        raise ValueError("the zero polynomial has no term ideal")
    return MonomialIdeal(f.dimension, f.support())


# -- univariate helpers (coefficient lists, lowest degree first) ------------

def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _derivative(p: Sequence[Fraction]) -> list[Fraction]:
    return _trim([k * c for k, c in enumerate(p)][1:])


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and a:
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for k, c in enumerate(b):
            a[shift + k] -= q * c
        _trim(a)
    return a


def _gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b)
    if not a:
        return a
    return [c / a[-1] for c in a]


def _strip_zero_roots(p: list[Fraction]) -> list[Fraction]:
    k = 0
    while k < len(p) and p[k] == 0:
        k += 1
    return p[k:]


def _has_torus_root(p: list[Fraction]) -> bool:
    return len(_strip_zero_roots(_trim(list(p)))) > 1


def _fmt_univariate(p: Sequence[Fraction], var: str = "u") -> str:
    return str(SparsePolynomial(1, {(k,): c for k, c in enumerate(p) if c}).to_string([var]))


@dataclass
class FaceRecord:
    face: str
    verdict: str  # "nondegenerate", "degenerate" or "exempt"
    detail: str


@dataclass
class NondegeneracyReport:
    status: str  # "proven", "refuted" or "assumed"
    faces: list[FaceRecord] = field(default_factory=list)
    seed: int | None = None

    @property
    def usable(self) -> bool:
        return self.status in ("proven", "assumed")


def _face_polynomial(f: SparsePolynomial, face: Face) -> SparsePolynomial:
    on = set(face.points)
    return SparsePolynomial(f.dimension, {e: c for e, c in f.terms.items() if e in on})


def _check_face_2d(f: SparsePolynomial, face: Face, step_cap: int = DEFAULT_STEP_CAP) -> FaceRecord:
    fs = _face_polynomial(f, face)
    label = face.label
    terms = sorted(fs.terms.items())
    if face.kind == "vertex":
        if not any(face.vertices[0]):
            return FaceRecord(label, "exempt", "constant term at the origin")
        return FaceRecord(label, "nondegenerate", "single monomial; its differential has no torus zero")

    if face.kind == "edge":
        a, b = face.vertices
        g = math.gcd(b[0] - a[0], a[1] - b[1])
        w = ((b[0] - a[0]) // g, (b[1] - a[1]) // g)
        h = [Fraction(0)] * (g + 1)
        for e, c in terms:
            h[(e[0] - a[0]) // w[0]] = c
        # f_sigma = monomial * h(u) with u = s^w1 t^w2; the edge misses the origin,
        # so d f_sigma vanishes on the torus iff h has a repeated nonzero root.
        common = _gcd(h, _derivative(h))
        if _has_torus_root(common):
            return FaceRecord(
                label, "degenerate",
                f"edge polynomial h(u) = {_fmt_univariate(h)} with u = s^{w[0]}*t^{w[1]} has the repeated "
                f"factor {_fmt_univariate(common)}",
            )
        return FaceRecord(label, "nondegenerate", f"edge polynomial {_fmt_univariate(h)} is squarefree on C*")

    if face.kind == "ray":
        base = face.vertices[0]
        axis = 1 if face.direction == (0, 1) else 0
        other = 1 - axis
        var = "t" if axis == 1 else "s"
        # g(x) collects the terms along the ray as a polynomial in the moving variable.
        g = [Fraction(0)] * (max(e[axis] for e, _ in terms) + 1)
        for e, c in terms:
            g[e[axis]] = c
        if base[other] > 0:
            bad = _gcd(g, _derivative(g))
            problem = _has_torus_root(bad)
            what = f"common torus factor {_fmt_univariate(bad, var)} of g and g'"
        else:
            bad = _derivative(g)
            problem = _has_torus_root(bad)
            what = f"g' = {_fmt_univariate(bad, var)} vanishes on C*"
        if problem:
            return FaceRecord(label, "degenerate", f"g({var}) = {_fmt_univariate(g, var)}: {what}")
        return FaceRecord(label, "nondegenerate", f"g({var}) = {_fmt_univariate(g, var)}")

    return _check_full_face(f, label, step_cap)


def torus_critical_ideal_is_unit(f: SparsePolynomial, step_cap: int = DEFAULT_STEP_CAP) -> bool:
    """Whether the partials of ``f`` have no common zero on the torus.

    Decided exactly: add a variable ``z`` and test ``1 ∈ (∂f, 1 - z x_1...x_d)``.
    """
    d = f.dimension
    lifted = [f.partial(i).embed(d + 1, 0) for i in range(d)]
    prod = SparsePolynomial.monomial((1,) * (d + 1))
    return groebner(lifted + [1 - prod], step_cap).is_unit()


def _check_full_face(f: SparsePolynomial, label: str, step_cap: int = DEFAULT_STEP_CAP) -> FaceRecord:
    if torus_critical_ideal_is_unit(f, step_cap):
        return FaceRecord(label, "nondegenerate", "1 lies in (∂f/∂x_i, 1 - z·∏x_i): no critical point on the torus")
    return FaceRecord(label, "degenerate", "(∂f/∂x_i, 1 - z·∏x_i) is a proper ideal: f has a critical point on the torus")


def nondegeneracy_check(f: SparsePolynomial, seed: int = 0, step_cap: int = DEFAULT_STEP_CAP) -> NondegeneracyReport:
    """Exact per-face certificate for two variables, random falsifier otherwise.

    ``step_cap`` bounds the Gröbner work of the full-face test; running out
    raises :class:`StepCapExceeded` rather than guessing.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial")
    if f.is_constant():
        return NondegeneracyReport("proven", [FaceRecord("polyhedron", "exempt", "constant polynomial")])
    if f.dimension == 2:
        support = f.support()
        if any(not any(e) for e in support):
            support_nz = [e for e in support if any(e)]
            poly = polyhedron_from_points(2, support_nz) if support_nz else None
        else:
            poly = polyhedron_from_points(2, support)
        records = []
        if poly is None:
            records.append(FaceRecord("polyhedron", "exempt", "constant polynomial"))
        else:
            if any(not any(e) for e in support):
                # With a constant term the polyhedron is the whole orthant: faces are the
                # origin, the two axes and the orthant itself.
                records.extend(_faces_with_constant(f, step_cap))
            else:
                for face in faces_2d(poly, support):
                    records.append(_check_face_2d(f, face, step_cap))
        status = "refuted" if any(r.verdict == "degenerate" for r in records) else "proven"
        return NondegeneracyReport(status, records)

    rng = random.Random(seed)
    parts = [f.partial(i) for i in range(f.dimension)]
    for _ in range(SAMPLES_PER_FACE):
        pt = [Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9)) for _ in range(f.dimension)]
        if all(p.evaluate(pt) == 0 for p in parts):
            return NondegeneracyReport(
                "refuted", [FaceRecord("polyhedron", "degenerate", f"all partials vanish at torus point {pt}")], seed
            )
    return NondegeneracyReport(
        "assumed",
        [FaceRecord("polyhedron", "nondegenerate", f"no torus critical point among {SAMPLES_PER_FACE} random samples")],
        seed,
    )


def _faces_with_constant(f: SparsePolynomial, step_cap: int = DEFAULT_STEP_CAP) -> list[FaceRecord]:
    out = [FaceRecord("vertex (0, 0)", "exempt", "constant term at the origin")]
    for axis, var in ((0, "s"), (1, "t")):
        g = [Fraction(0)] * (max(e[axis] for e in f.support()) + 1)
        for e, c in f.terms.items():
            if e[1 - axis] == 0:
                g[e[axis]] = c
        bad = _derivative(g)
        verdict = "degenerate" if _has_torus_root(bad) else "nondegenerate"
        out.append(FaceRecord(f"ray (0, 0)+R{(1, 0) if axis == 0 else (0, 1)}", verdict, f"g({var}) = {_fmt_univariate(g, var)}"))
    out.append(_check_full_face(f, "polyhedron", step_cap))
    return out


def _require_nondegenerate(f: SparsePolynomial, assume_ok: bool) -> NondegeneracyReport:
    rep = nondegeneracy_check(f)
    if rep.status == "refuted":
        raise DegenerateError("f is degenerate with respect to its Newton polyhedron: "
                              + "; ".join(r.detail for r in rep.faces if r.verdict == "degenerate"))
    if rep.status == "assumed" and not assume_ok:
        raise DegenerateError("nondegeneracy could only be sampled (d >= 3); pass assume_nondegenerate=True")
    return rep


@dataclass(frozen=True)
class DivisorJumpSpectrum:
    fractional_jumps: tuple[Fraction, ...]
    cutoff: Fraction
    jumps: tuple[Fraction, ...]
    includes_integers: bool = True

    @property
    def jumping_length(self) -> int:
        return len(self.fractional_jumps) + 1


def fractional_jumps(f: SparsePolynomial) -> tuple[Fraction, ...]:
    ideal = term_ideal(f)
    if ideal.is_unit():
        return ()
    return tuple(x for x in jumps_upto(ideal, 1).jumps if x < 1)


def divisor_jumps(f: SparsePolynomial, c_max: RationalLike, assume_nondegenerate: bool = False) -> DivisorJumpSpectrum:
    if f.is_zero():
        raise ValueError("the zero polynomial")
    if f.is_constant():
        raise ValueError("f is a unit; div(f) is empty")
    c_max = as_rational(c_max)
    _require_nondegenerate(f, assume_nondegenerate)
    frac = fractional_jumps(f)
    values = set()
    for k in range(math.floor(c_max) + 1):
        values.update(x + k for x in frac if x + k <= c_max)
        if k >= 1:
            values.add(Fraction(k))
    return DivisorJumpSpectrum(frac, c_max, tuple(sorted(values)))


def jumping_length(f: SparsePolynomial, assume_nondegenerate: bool = False) -> int:
    return divisor_jumps(f, 1, assume_nondegenerate).jumping_length


@dataclass(frozen=True)
class DivisorIdeal:
    """The ideal ``(f)^power * monomial``."""

    f: SparsePolynomial
    power: int
    monomial: MonomialIdeal

    def to_string(self) -> str:
        mono = "" if self.monomial.is_unit() else self.monomial.to_string()
        if self.power == 0:
            return mono or "(1)"
        fpart = f"({self.f.to_string()})" + (f"^{self.power}" if self.power > 1 else "")
        return fpart + (f"·{mono}" if mono else "")


def divisor_multiplier_ideal(f: SparsePolynomial, c: RationalLike, assume_nondegenerate: bool = False) -> DivisorIdeal:
    c = as_rational(c)
    if c < 0:
        raise ValueError("coefficient must be nonnegative")
    _require_nondegenerate(f, assume_nondegenerate)
    power = math.floor(c)
    rest = c - power
    ideal = term_ideal(f)
    if rest == 0 or ideal.is_unit():
        mono = MonomialIdeal.unit(f.dimension)
    else:
        mono = multiplier_ideal(ideal, rest)
    return DivisorIdeal(f, power, mono)


def divisor_multiplicities(f: SparsePolynomial, c_max: RationalLike | None = None) -> list[Fraction]:
    """κ-sequence of ``f`` below ``c_max < 1`` (everything below 1 by default)."""
    ideal = term_ideal(f)
    if ideal.is_unit() or not ideal.is_finite_colength():
        raise ValueError("term ideal does not have finite colength")
    bound = Fraction(1) if c_max is None else as_rational(c_max)
    if bound > 1:
        raise ValueError("multiplicities are read off the term ideal only below 1")
    spec = jumps_upto(ideal, bound)
    return [x for x in spec.kappa() if x < 1]
