"""Verification suites: golden cases plus seeded random instances.

Every instance draws from its own ``random.Random`` stream, keyed by suite
name, seed and instance index, so a single failing instance can be replayed
in isolation with ``--instance``. Results are always assembled in instance
order, whether or not trials run in parallel.
"""

from __future__ import annotations

import math
import random
import shlex
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .algebra import MonomialIdeal, SparsePolynomial, format_rational
from .bernstein import RootList, cor_2_4_check, largest_root_check, thm_2_1_check
from .graded import (
    DiagonalFamily,
    cluster_diagnostics,
    diagonal_jumps,
    hyperbola_integer_witness,
    hyperbola_jumps,
    hyperbola_value,
    nonperiodicity_demo,
    prop_5_8_check,
)
from .groebner import StepCapExceeded
from .hypersurface import divisor_jumps, nondegeneracy_check
from .jacobian import HypothesisError, ar_bounds, prop_3_8_check, thm_4_2_check
from .jumping import (
    artin_rees_check,
    denominator_bound,
    direct_sum,
    jumping_length_of_multiplier_ideal,
    jumps_upto,
    kappa_sequence,
    lct,
    multiplier_ideal,
    mustata_sum,
    periodicity_check,
    semicontinuity_compare,
    skoda_check,
    subadditivity_check,
    consecutive_pair_instances,
    thom_sebastiani_jumps,
)
from .newton import newton_polyhedron

SUITE_NAMES = (
    "periodicity",
    "subadditivity",
    "skoda",
    "thom-sebastiani",
    "artin-rees",
    "semicontinuity",
    "thm4-2",
    "prop3-8",
    "graded",
    "bs",
)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class InstanceResult:
    label: str
    description: str
    checks: list[Check]
    repro: str

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


@dataclass
class SuiteReport:
    suite: str
    seed: int
    trials: int
    instances: list[InstanceResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.instances)

    @property
    def check_count(self) -> int:
        return sum(len(r.checks) for r in self.instances)

    def failures(self) -> list[tuple[InstanceResult, Check]]:
        return [(r, c) for r in self.instances for c in r.checks if not c.ok]

    def to_record(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.ok,
            "instances": [
                {
                    "label": r.label,
                    "description": r.description,
                    "passed": r.ok,
                    "repro": r.repro,
                    "checks": [{"name": c.name, "passed": c.ok, "detail": c.detail} for c in r.checks],
                }
                for r in self.instances
            ],
        }


# -- random instance generators ---------------------------------------------------------

def instance_rng(suite: str, seed: int, index: int) -> random.Random:
    return random.Random(f"{suite}:{seed}:{index}")


def random_ideal(rng: random.Random, d: int, max_exp: int, max_gens: int = 4, finite: bool | None = None) -> MonomialIdeal:
    """A proper nonzero monomial ideal; ``finite`` forces (or leaves to chance) pure powers."""
    if finite is None:
        finite = rng.random() < 0.5
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        while True:
            v = tuple(rng.randint(0, max_exp) for _ in range(d))
            if any(v):
                gens.append(v)
                break
    if finite:
        for i in range(d):
            e = [0] * d
            e[i] = rng.randint(1, max_exp)
            gens.append(tuple(e))
    return MonomialIdeal(d, gens)


def random_fraction(rng: random.Random, lo: Fraction, hi: Fraction, max_den: int = 12) -> Fraction:
    """A rational in ``(lo, hi]`` with small denominator (falls back to ``hi``)."""
    q = rng.randint(1, max_den)
    lo_num = int(lo * q) + 1
    hi_num = int(hi * q)
    if lo_num > hi_num:
        return hi
    return Fraction(rng.randint(lo_num, hi_num), q)


def brieskorn_pham(a: int, b: int) -> SparsePolynomial:
    return SparsePolynomial(2, {(a, 0): 1, (0, b): 1})


def brieskorn_pham_roots(a: int, b: int) -> list[Fraction]:
    """Roots in ``[-1, 0)`` of the b-function of ``s^a + t^b``, from Yano's formula.

    This is curated external data for the consistency checks, valid only for
    this two-term family: the reduced b-function has roots ``-(i/a + j/b)``
    with ``1 <= i < a`` and ``1 <= j < b``, and ``-1`` is always a root.
    """
    roots = {Fraction(-1)}
    for i in range(1, a):
        for j in range(1, b):
            r = -(Fraction(i, a) + Fraction(j, b))
            if r >= -1:
                roots.add(r)
    return sorted(roots, reverse=True)


def _fmt(xs: Iterable[Fraction]) -> str:
    return "[" + ", ".join(format_rational(x) for x in xs) + "]"


# -- per-suite instance bodies ----------------------------------------------------------

def _periodicity_checks(ideal: MonomialIdeal, window: Fraction) -> list[Check]:
    rep = periodicity_check(ideal, window)
    return [
        Check("forward: jump x implies jump x+1", not rep.forward_violations, _fmt(rep.forward_violations)),
        Check("backward for x > d-1", not rep.backward_violations, _fmt(rep.backward_violations)),
        Check("backward for x > p-1 (p generators)", not rep.generator_violations, _fmt(rep.generator_violations)),
    ]


def _denominator_checks(ideal: MonomialIdeal, window: Fraction) -> list[Check]:
    poly = newton_polyhedron(ideal)
    rep = denominator_bound(jumps_upto(ideal, window), poly)
    return [Check(
        "denominators divide facet-level lcm and gaps >= 1/lcm",
        rep.holds,
        f"lcm={rep.modulus} bad={_fmt(rep.bad_jumps)} min_gap={rep.min_gap}",
    )]


def _periodicity_golden() -> list[tuple[str, Callable[[], list[Check]]]]:
    cases = []
    for d in (1, 2, 3):
        def body(d=d):
            m = MonomialIdeal.maximal(d)
            spec = jumps_upto(m, 6)
            expected = tuple(Fraction(k) for k in range(d, 7))
            rep = periodicity_check(m, 6)
            checks = [Check("jumps of the maximal ideal are the integers >= d", spec.jumps == expected, _fmt(spec.jumps))]
            checks += _periodicity_checks(m, Fraction(6))
            if d >= 2:
                checks.append(Check(
                    "boundary counterexample at d-1 (not a jump, d is)",
                    Fraction(d - 1) in rep.boundary_examples,
                    _fmt(rep.boundary_examples),
                ))
            return checks
        cases.append((f"maximal ideal, d={d}, window 6", body))
    return cases


def _periodicity_random(rng: random.Random):
    d = rng.randint(1, 3)
    ideal = random_ideal(rng, d, 6 if d < 3 else 4)
    window = Fraction(d + 2)
    return f"{ideal.to_string()}, window {d + 2}", lambda: _periodicity_checks(ideal, window) + _denominator_checks(ideal, window)


def _subadditivity_checks(ideal: MonomialIdeal) -> list[Check]:
    window = Fraction(ideal.dimension + 1)
    rep = subadditivity_check(ideal, window)
    return [Check("next jump <= xi_i + lct", rep.holds, f"violating indices {rep.violations}")]


def _subadditivity_golden():
    s3t4 = MonomialIdeal(2, [(3, 0), (0, 4)])
    xy = MonomialIdeal(2, [(3, 0), (0, 3), (1, 1)])
    return [
        ("(s^3, t^4)", lambda: _subadditivity_checks(s3t4) + _denominator_checks(s3t4, Fraction(3))),
        ("(x^3, y^3, xy)", lambda: _subadditivity_checks(xy) + _denominator_checks(xy, Fraction(3))),
    ]


def _subadditivity_random(rng: random.Random):
    d = rng.randint(1, 3)
    ideal = random_ideal(rng, d, 6 if d < 3 else 4)
    return ideal.to_string(), lambda: _subadditivity_checks(ideal) + _denominator_checks(ideal, Fraction(d + 1))


def _skoda_checks(ideal: MonomialIdeal, cs: list[Fraction]) -> list[Check]:
    d, p = ideal.dimension, len(ideal.generators)
    checks = []
    for c in cs:
        for m in (d - 1, d):
            checks.append(Check(f"J(a^(m+c+1)) = a J(a^(m+c)), m={m}, c={format_rational(c)}", skoda_check(ideal, c, m)))
        if p - 1 < d - 1:
            checks.append(Check(
                f"p-generator form, m={p - 1}, c={format_rational(c)}",
                skoda_check(ideal, c, p - 1, probe=True),
            ))
    return checks


def _skoda_coefficients(ideal: MonomialIdeal, rng: random.Random | None) -> list[Fraction]:
    cs = [x for x in jumps_upto(ideal, 1).jumps] if lct(ideal) <= 1 else []
    cs.append(Fraction(1, 2))
    if rng is not None:
        cs.append(random_fraction(rng, Fraction(0), Fraction(1)))
    return sorted(set(cs))[:4]


def _skoda_golden():
    out = []
    for name, ideal in (
        ("(s^3, t^4)", MonomialIdeal(2, [(3, 0), (0, 4)])),
        ("maximal ideal, d=3", MonomialIdeal.maximal(3)),
        ("principal (x y^2 z), d=3", MonomialIdeal(3, [(1, 2, 1)])),
    ):
        out.append((name, lambda ideal=ideal: _skoda_checks(ideal, _skoda_coefficients(ideal, None))))
    return out


def _skoda_random(rng: random.Random):
    d = rng.randint(1, 3)
    ideal = random_ideal(rng, d, 5 if d < 3 else 3, max_gens=3)
    cs = _skoda_coefficients(ideal, rng)
    return ideal.to_string(), lambda: _skoda_checks(ideal, cs)


def _ts_checks(a: MonomialIdeal, b: MonomialIdeal, coefficients: int, rng: random.Random | None) -> list[Check]:
    c_max = lct(a) + lct(b) + 1
    combined = direct_sum(a, b)
    ts = thom_sebastiani_jumps(a, b, c_max)
    direct = jumps_upto(combined, c_max)
    checks = [Check(
        f"sums of jumps = jumps of a+b up to {format_rational(c_max)}",
        ts.jumps == direct.jumps,
        f"sums {len(ts.jumps)} vs direct {len(direct.jumps)}",
    )]
    cs = list(direct.jumps[:3])
    while len(cs) < coefficients:
        cs.append(random_fraction(rng, Fraction(0), c_max) if rng else c_max * len(cs) / coefficients)
    bad = [c for c in cs if mustata_sum(a, b, c) != multiplier_ideal(combined, c)]
    checks.append(Check(f"summation formula at {len(cs)} coefficients", not bad, "failing c " + _fmt(bad)))
    return checks


def _ts_golden():
    s2 = MonomialIdeal(1, [(2,)])
    t3 = MonomialIdeal(1, [(3,)])
    m2 = MonomialIdeal.maximal(2)
    return [
        ("(s^2) and (t^3)", lambda: _ts_checks(s2, t3, 8, None)),
        ("maximal ideals in 2 + 1 variables", lambda: _ts_checks(m2, MonomialIdeal.maximal(1), 8, None)),
    ]


def _ts_random(rng: random.Random):
    a = random_ideal(rng, rng.randint(1, 2), 6)
    b = random_ideal(rng, rng.randint(1, 2), 6)
    return f"{a.to_string()} and {b.to_string()}", lambda: _ts_checks(a, b, 20, rng)


def _artin_rees_checks(ideal: MonomialIdeal, b: MonomialIdeal, m_pairs: int, ell: int, m_length: int) -> list[Check]:
    d = ideal.dimension
    checks = []
    for rep in consecutive_pair_instances(ideal, b, m_pairs, Fraction(2)):
        checks.append(Check(f"k=d: {rep.description}", rep.holds, f"witness {rep.witness}"))
    c = jumps_upto(ideal, max(Fraction(d + 2), lct(ideal) * (ell + 1))).jumps[ell - 1]
    k = d * jumping_length_of_multiplier_ideal(ideal, c)
    rep = artin_rees_check(None, multiplier_ideal(ideal, c), b, max(m_length, k), k)
    checks.append(Check(f"k=d*l at c={format_rational(c)}: {rep.description}", rep.holds, f"witness {rep.witness}"))
    return checks


def _artin_rees_golden():
    s3t4 = MonomialIdeal(2, [(3, 0), (0, 4)])
    m = MonomialIdeal.maximal(2)
    b = MonomialIdeal(2, [(2, 1), (0, 3)])
    return [
        ("a=(s^3,t^4), b=m, m=4", lambda: _artin_rees_checks(s3t4, m, 4, 3, 8)),
        ("a=m, b=(s^2 t, t^3), m=5", lambda: _artin_rees_checks(m, b, 5, 1, 6)),
    ]


def _artin_rees_random(rng: random.Random):
    d = rng.randint(1, 2)
    ideal = random_ideal(rng, d, 4, max_gens=3)
    b = random_ideal(rng, d, 4, max_gens=3)
    m_pairs = rng.randint(d, 8)
    ell = rng.randint(1, 8 // d)
    m_length = rng.randint(d * ell, 8)
    return (
        f"a={ideal.to_string()}, b={b.to_string()}, m={m_pairs}, l={ell}",
        lambda: _artin_rees_checks(ideal, b, m_pairs, ell, m_length),
    )


def _semicontinuity_checks(general: MonomialIdeal, special: MonomialIdeal) -> list[Check]:
    cutoff = lct(special) + 1
    g = kappa_sequence(general, cutoff)
    s = kappa_sequence(special, cutoff)
    return [Check(
        "special kappa_i <= general kappa_i",
        semicontinuity_compare(g, s),
        f"general {_fmt(g[:8])}..., special {_fmt(s[:8])}...",
    )]


def _semicontinuity_golden():
    return [
        ("(s^3, t^3) + tau (st)", lambda: _semicontinuity_checks(
            MonomialIdeal(2, [(3, 0), (0, 3), (1, 1)]), MonomialIdeal(2, [(3, 0), (0, 3)]))),
        ("m^2 + tau (s)", lambda: _semicontinuity_checks(
            MonomialIdeal(2, [(1, 0), (0, 2)]), MonomialIdeal.maximal(2) ** 2)),
    ]


def _semicontinuity_random(rng: random.Random):
    d = rng.randint(1, 2) if rng.random() < 0.8 else 3
    special = random_ideal(rng, d, 5 if d < 3 else 3, max_gens=3, finite=True)
    extra = tuple(rng.randint(0, 3) for _ in range(d))
    general = special + MonomialIdeal(d, [extra if any(extra) else (1,) + (0,) * (d - 1)])
    if general.is_unit():
        general = special
    return (
        f"special {special.to_string()}, general {general.to_string()}",
        lambda: _semicontinuity_checks(general, special),
    )


def _thm42_checks(ideal: MonomialIdeal, m: int, expect_case: str | None = None) -> list[Check]:
    v = thm_4_2_check(ideal, m)
    checks = [Check(f"Jac_{m} inclusion ({v.case})", v.holds, v.detail + (f"; failing terms {v.failures}" if v.failures else ""))]
    if expect_case is not None:
        checks.append(Check(f"dispatch to case {expect_case}", v.case == expect_case, f"got {v.case}"))
    return checks


def _thm42_golden():
    return [
        ("(s,t), m=2", lambda: _thm42_checks(MonomialIdeal.maximal(2), 2, "ii")),
        ("(s^3,t^4), m=1", lambda: _thm42_checks(MonomialIdeal(2, [(3, 0), (0, 4)]), 1, "i")),
        ("(st), m=1", lambda: _thm42_checks(MonomialIdeal(2, [(1, 1)]), 1, "ii")),
    ]


def _thm42_random(rng: random.Random):
    d = rng.randint(1, 3)
    ideal = random_ideal(rng, d, 4, max_gens=3)
    m = rng.randint(1, d)
    return f"{ideal.to_string()}, m={m}", lambda: _thm42_checks(ideal, m)


def _prop38_checks(f: SparsePolynomial, expected: tuple[int, int] | None = None) -> list[Check]:
    v = prop_3_8_check(f)
    checks = [
        Check("Jac(f) terms satisfy xi(u) >= 1", v.limit_membership, f"failing terms {v.failures}"),
        Check("l(f) <= tau(f) + 1", v.length_bound, f"l={v.length}, tau={v.tau}"),
    ]
    bounds = ar_bounds(f)
    checks.append(Check(
        "Artin-Rees bounds are consistent (d*l <= d*(tau+1))",
        bounds.dl <= f.dimension * (v.tau + 1),
        f"bounds {bounds.as_tuple()}",
    ))
    if expected is not None:
        checks.append(Check("(l, tau) match the expected values", (v.length, v.tau) == expected, f"got {(v.length, v.tau)}"))
    return checks


def _prop38_golden():
    s3t4 = SparsePolynomial(2, {(3, 0): 1, (0, 4): 1})
    cusp = SparsePolynomial(2, {(2, 0): 1, (0, 3): 1})
    saito = SparsePolynomial(2, {(5, 0): 1, (0, 4): 1, (3, 2): 1})

    def rejects_saito():
        # df vanishes on the torus (x = 10/3, y^2 = -500/27), so the whole
        # polyhedron is a degenerate face and the hypotheses are not met.
        try:
            prop_3_8_check(saito)
        except HypothesisError as exc:
            return [Check("x^5 + y^4 + x^3 y^2 is rejected as degenerate", True, str(exc))]
        return [Check("x^5 + y^4 + x^3 y^2 is rejected as degenerate", False, "no error raised")]

    return [
        ("s^3 + t^4", lambda: _prop38_checks(s3t4, (4, 6))),
        ("x^2 + y^3", lambda: _prop38_checks(cusp, (2, 2))),
        ("x^5 + y^4", lambda: _prop38_checks(brieskorn_pham(5, 4))),
        ("x^5 + y^4 + x^3 y^2", rejects_saito),
    ]


GENERATION_STEP_CAP = 3000


def random_nondegenerate(rng: random.Random, attempts: int = 20) -> SparsePolynomial:
    """A plane curve with proven nondegeneracy: a weighted-homogeneous edge plus
    occasional terms above it; falls back to ``s^a + t^b``."""
    a, b = rng.randint(2, 7), rng.randint(2, 7)
    for _ in range(attempts):
        extra = 0
        terms = {(a, 0): Fraction(rng.randint(1, 5)), (0, b): Fraction(rng.randint(1, 5))}
        for i in range(1, a):
            if (b * (a - i)) % a == 0 and extra < 2 and rng.random() < 0.5:
                terms[(i, b * (a - i) // a)] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
                extra += 1
        if rng.random() < 0.3:
            i, j = rng.randint(1, a), rng.randint(1, b)
            if Fraction(i, a) + Fraction(j, b) > 1:
                terms[(i, j)] = Fraction(rng.choice([-2, -1, 1, 2]))
        f = SparsePolynomial(2, terms)
        try:
            if nondegeneracy_check(f, step_cap=GENERATION_STEP_CAP).status == "proven":
                return f
        except StepCapExceeded:
            continue
    return brieskorn_pham(a, b)


def _prop38_random(rng: random.Random):
    f = random_nondegenerate(rng)
    return f.to_string(["s", "t"]), lambda: _prop38_checks(f)


def _graded_golden():
    def hyperbola():
        checks = []
        stream = hyperbola_jumps(20, 3)
        checks.append(Check("lct of the hyperbola family is 1/2", stream.jumps[0] == Fraction(1, 2), format_rational(stream.jumps[0])))
        checks.append(Check("value 2 is realized at (5, 2)", hyperbola_value(5, 2) == 2))
        for n in range(1, 6):
            w = hyperbola_integer_witness(n)
            checks.append(Check(f"integer {n} is a jump", w is not None and hyperbola_value(*w) == n, f"witness {w}"))
        for n in (1, 2):
            rep = cluster_diagnostics(20, n, Fraction(1, 10))
            checks.append(Check(f"left count grows near {n} (E=20->40)", rep.left_grows, f"{rep.left_counts}"))
        gap = prop_5_8_check(hyperbola_jumps(50, 4), Fraction(1, 2), Fraction(1, 2))
        checks.append(Check("successor within lct (margin 1/2)", gap.holds and gap.checked > 0,
                            f"checked {gap.checked}, failures {_fmt(gap.failures)}"))
        return checks

    def diagonal():
        v = nonperiodicity_demo(DiagonalFamily([Fraction(3, 2)]))
        integral = nonperiodicity_demo(DiagonalFamily([2, 3]))
        return [
            Check("mu=(3/2) has nonperiodicity witness 2/3", v.witness == Fraction(2, 3), f"{v}"),
            Check("integral mu=(2,3) is out of scope", not integral.applicable),
        ]

    return [("hyperbola family", hyperbola), ("diagonal family", diagonal)]


def one_in_semigroup(mus) -> bool:
    """Whether ``1 = sum e_i / mu_i`` for some nonnegative integers ``e_i`` (brute force)."""
    steps = [1 / Fraction(m) for m in mus]
    reach = {Fraction(0)}
    for st in steps:
        reach = {r + k * st for r in reach for k in range(int(1 / st) + 1) if r + k * st <= 1}
    return Fraction(1) in reach


def _graded_random(rng: random.Random):
    d = rng.randint(1, 3)
    mus = [Fraction(rng.randint(1, 8), rng.randint(1, 4)) for _ in range(d)]
    family = DiagonalFamily(mus)

    def body():
        first = family.value((0,) * d)
        cutoff = first + 2
        stream = diagonal_jumps(family, cutoff)
        gap = prop_5_8_check(stream, first)
        bound = 1
        for m in mus:
            bound *= math.ceil(cutoff * m) + 1
        checks = [
            Check("first jump equals sum of 1/mu_i", stream.jumps[0] == first, format_rational(stream.jumps[0])),
            Check("successor within lct", gap.holds, f"checked {gap.checked}, failures {_fmt(gap.failures)}"),
            Check("jump count below the box count", len(stream.jumps) <= bound, f"{len(stream.jumps)} <= {bound}"),
        ]
        if not family.is_integral():
            v = nonperiodicity_demo(family)
            expect = not one_in_semigroup(mus)
            checks.append(Check(
                "forward witness exists iff 1 is not a sum of the 1/mu_i",
                (v.kind == "forward") == expect,
                f"kind={v.kind}, witness={v.witness}",
            ))
        return checks

    return "diagonal mu=" + _fmt(mus), body


def _bs_checks(f: SparsePolynomial, roots: RootList) -> list[Check]:
    spec = divisor_jumps(f, 1)
    jumps = list(spec.jumps)
    t21 = thm_2_1_check(jumps, roots)
    c24 = cor_2_4_check(roots)
    lr = largest_root_check(jumps[0], roots)
    return [
        Check("every jump in (0,1] is minus a root", t21.holds, "missing " + _fmt(t21.missing)),
        Check("r_{i+1} >= r_i + r_1", c24.holds, f"violations at {c24.violations}"),
        Check("largest root is -lct", lr.holds, f"lct={format_rational(jumps[0])}, r_1={format_rational(roots.roots[0])}"),
    ]


def _bs_golden():
    s3t4 = brieskorn_pham(3, 4)
    roots = RootList.from_values(brieskorn_pham_roots(3, 4))

    def converse_guard():
        extra = RootList.from_values(list(roots.roots) + [Fraction(-2, 3)])
        t21 = thm_2_1_check(list(divisor_jumps(s3t4, 1).jumps), extra)
        return [Check("extra roots that are not jumps are tolerated", t21.holds)]

    def negative_control():
        short = RootList.from_values([r for r in roots.roots if r != Fraction(-5, 6)])
        t21 = thm_2_1_check(list(divisor_jumps(s3t4, 1).jumps), short)
        return [Check("removing -5/6 is detected", not t21.holds and t21.missing == [Fraction(-5, 6)], _fmt(t21.missing))]

    return [
        ("s^3 + t^4 with Yano roots", lambda: _bs_checks(s3t4, roots)),
        ("s^3 + t^4 with an extra root", converse_guard),
        ("s^3 + t^4 missing a root", negative_control),
        ("smooth s with roots {-1}", lambda: _bs_checks(SparsePolynomial.variable(2, 0), RootList((Fraction(-1),)))),
    ]


def _bs_random(rng: random.Random):
    a, b = rng.randint(2, 7), rng.randint(2, 7)
    f = brieskorn_pham(a, b)
    roots = RootList.from_values(brieskorn_pham_roots(a, b))
    return f"s^{a} + t^{b}", lambda: _bs_checks(f, roots)


@dataclass(frozen=True)
class Suite:
    golden: Callable[[], list[tuple[str, Callable[[], list[Check]]]]]
    random: Callable[[random.Random], tuple[str, Callable[[], list[Check]]]]


SUITES: dict[str, Suite] = {
    "periodicity": Suite(_periodicity_golden, _periodicity_random),
    "subadditivity": Suite(_subadditivity_golden, _subadditivity_random),
    "skoda": Suite(_skoda_golden, _skoda_random),
    "thom-sebastiani": Suite(_ts_golden, _ts_random),
    "artin-rees": Suite(_artin_rees_golden, _artin_rees_random),
    "semicontinuity": Suite(_semicontinuity_golden, _semicontinuity_random),
    "thm4-2": Suite(_thm42_golden, _thm42_random),
    "prop3-8": Suite(_prop38_golden, _prop38_random),
    "graded": Suite(_graded_golden, _graded_random),
    "bs": Suite(_bs_golden, _bs_random),
}


def _run(label: str, description: str, body: Callable[[], list[Check]], repro: str) -> InstanceResult:
    try:
        checks = body()
    except Exception as exc:  # a crash is reported as a failed check, never swallowed
        checks = [Check("instance raised", False, f"{type(exc).__name__}: {exc}")]
    return InstanceResult(label, description, checks, repro)


def run_random_instance(suite: str, seed: int, index: int) -> InstanceResult:
    description, body = SUITES[suite].random(instance_rng(suite, seed, index))
    return _run(f"random #{index}", description, body, f"jumpnum verify {suite} --seed {seed} --instance {index}")


def run_suite(
    suite: str,
    trials: int = 0,
    seed: int = 0,
    instance: int | None = None,
    golden: bool = True,
    extra: Iterable[tuple[str, Callable[[], list[Check]], str]] = (),
    jobs: int = 1,
) -> SuiteReport:
    """Golden cases, then any ``extra`` (label, body, repro) cases, then random trials.

    With ``instance`` set only that random instance runs (golden cases are skipped).
    """
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    report = SuiteReport(suite, seed, trials)
    if instance is not None:
        report.instances.append(run_random_instance(suite, seed, instance))
        return report
    if golden:
        for i, (desc, body) in enumerate(SUITES[suite].golden()):
            report.instances.append(_run(f"golden #{i}", desc, body, f"jumpnum verify {suite} --trials 0"))
    for label, body, repro in extra:
        report.instances.append(_run("input", label, body, repro))
    indices = range(trials)
    if jobs > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            report.instances.extend(pool.map(run_random_instance, [suite] * trials, [seed] * trials, indices))
    else:
        report.instances.extend(run_random_instance(suite, seed, i) for i in indices)
    return report


def bs_input_case(
    path: str, f: SparsePolynomial, roots: RootList, poly_path: str | None = None
) -> tuple[str, Callable[[], list[Check]], str]:
    repro = f"jumpnum verify bs --input {shlex.quote(path)} --trials 0"
    if poly_path is not None:
        repro += f" --poly {shlex.quote(poly_path)}"
    return (f"{f.to_string()} with roots from {path}", lambda: _bs_checks(f, roots), repro)
