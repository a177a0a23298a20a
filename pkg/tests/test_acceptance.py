"""The ten acceptance criteria, each at its stated size and time limit."""

import itertools
import random
import time
import xml.etree.ElementTree as ET
from fractions import Fraction
from io import StringIO

from jumpnum.algebra import MonomialIdeal, SparsePolynomial
from jumpnum.bernstein import RootList, cor_2_4_check, largest_root_check, thm_2_1_check
from jumpnum.cli import main
from jumpnum.graded import (
    DiagonalFamily,
    cluster_diagnostics,
    hyperbola_integer_witness,
    hyperbola_jumps,
    hyperbola_value,
    nonperiodicity_demo,
    prop_5_8_check,
)
from jumpnum.hypersurface import divisor_jumps
from jumpnum.jacobian import ar_bounds, milnor, prop_3_8_check, thm_4_2_check, tyurina
from jumpnum.jumping import jumps_upto, kappa_sequence, multiplier_ideal, witness_box
from jumpnum.newton import newton_polyhedron, xi_of
from jumpnum.suites import brieskorn_pham_roots, random_fraction, random_ideal, run_suite

F = Fraction
S3T4 = SparsePolynomial(2, {(3, 0): 1, (0, 4): 1})
SVG = {"svg": "http://www.w3.org/2000/svg"}


def cli(*argv):
    out = StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def test_criterion_1_divisor_spectrum_of_s3_t4(cases_dir, record_criterion):
    (code, text), secs = timed(lambda: cli("jumps", "poly", cases_dir / "s3t4.json", "--max", "1"))
    ok = code == 0 and text == "7/12 5/6 11/12 1, length 4\n" and secs < 1
    record_criterion(1, ok, f"jumps poly s^3+t^4 -> {text.strip()!r} in {secs:.2f}s")
    assert ok


def test_criterion_2_maximal_ideal(record_criterion):
    kappa = kappa_sequence(MonomialIdeal.maximal(2), 5)[:10]
    kappa_ok = kappa == [2, 3, 3, 4, 4, 4, 5, 5, 5, 5]
    integers_ok = all(
        jumps_upto(MonomialIdeal.maximal(d), 6).jumps == tuple(F(k) for k in range(d, 7)) for d in (1, 2, 3)
    )
    ok = kappa_ok and integers_ok
    record_criterion(2, ok, f"kappa_1..10 = {' '.join(str(x) for x in kappa)}; jumps of m in d=1,2,3 are d..6: {integers_ok}")
    assert ok


def test_criterion_3_two_ruler_figure(cases_dir, record_criterion):
    a = jumps_upto(MonomialIdeal(2, [(9, 0), (0, 10)]), 2)
    b = jumps_upto(MonomialIdeal(2, [(3, 0), (0, 30)]), 2)
    code, svg = cli(
        "jumps", "monomial", cases_dir / "ideal_s9t10.json", cases_dir / "ideal_s3t30.json", "--max", "2", "--plot", "svg"
    )
    root = ET.fromstring(svg.encode())
    ticks = [len(g.findall("svg:line[@class='tick']", SVG)) for g in root.findall("svg:g", SVG)]
    ok = code == 0 and a.jumps[0] == F(19, 90) and b.jumps[0] == F(11, 30) and ticks == [len(a.jumps), len(b.jumps)]
    record_criterion(3, ok, f"first jumps {a.jumps[0]}, {b.jumps[0]}; SVG ticks {ticks} for {len(a.jumps)}, {len(b.jumps)} jumps")
    assert ok


def test_criterion_4_thom_sebastiani(record_criterion):
    report, secs = timed(lambda: run_suite("thom-sebastiani", trials=50, seed=2024, golden=False))
    ok = report.ok and len(report.instances) == 50 and secs < 60
    record_criterion(4, ok, f"50 pairs, {report.check_count} checks, {len(report.failures())} failures, {secs:.1f}s")
    assert ok, report.failures()[:3]


def test_criterion_5_structural_suite(record_criterion):
    def run_all():
        return [run_suite(name, trials=100, seed=2024) for name in ("periodicity", "subadditivity", "skoda")]

    reports, secs = timed(run_all)
    ok = all(r.ok for r in reports) and secs < 120
    counts = ", ".join(f"{r.suite} {r.check_count}" for r in reports)
    record_criterion(5, ok, f"100 ideals per suite ({counts} checks), {secs:.1f}s")
    assert ok, [r.failures()[:3] for r in reports]


def test_criterion_6_artin_rees(record_criterion):
    report, secs = timed(lambda: run_suite("artin-rees", trials=20, seed=2024, golden=False))
    ok = report.ok and len(report.instances) == 20 and secs < 60
    record_criterion(6, ok, f"20 instances, {report.check_count} checks, {len(report.failures())} failures, {secs:.1f}s")
    assert ok, report.failures()[:3]


def test_criterion_7_jacobian_chain(record_criterion):
    tau, mu = tyurina(S3T4), milnor(S3T4)
    p38 = prop_3_8_check(S3T4)
    bounds = ar_bounds(S3T4).as_tuple()
    m2 = MonomialIdeal.maximal(2)
    traces = [
        thm_4_2_check(m2, 2),
        thm_4_2_check(MonomialIdeal(2, [(3, 0), (0, 4)]), 1),
        thm_4_2_check(MonomialIdeal(2, [(1, 1)]), 1),
    ]
    ok = (
        (tau, mu) == (6, 6)
        and p38.holds
        and (p38.length, p38.tau + 1) == (4, 7)
        and bounds == (8, 8, 5)
        and [t.case for t in traces] == ["ii", "i", "ii"]
        and all(traces)
    )
    record_criterion(
        7, ok, f"tau={tau} mu={mu}; l={p38.length} <= {p38.tau + 1}; bounds {bounds}; cases {[t.case for t in traces]}"
    )
    assert ok


def test_criterion_8_graded_systems(record_criterion):
    first = hyperbola_jumps(20, 3).jumps[0]
    integers = all(hyperbola_value(*hyperbola_integer_witness(n)) == n for n in range(1, 6))
    clusters = [cluster_diagnostics(20, n, F(1, 10)) for n in (1, 2)]
    gap = prop_5_8_check(hyperbola_jumps(50, 4), first, margin=F(1, 2))
    demo = nonperiodicity_demo(DiagonalFamily([F(3, 2)]))
    ok = (
        first == F(1, 2)
        and hyperbola_value(5, 2) == 2
        and integers
        and all(c.left_grows for c in clusters)
        and gap.holds and gap.checked > 0
        and demo.witness == F(2, 3)
    )
    lefts = "; ".join(f"n={c.n}: {c.left_counts[0]}->{c.left_counts[1]}" for c in clusters)
    record_criterion(8, ok, f"lct {first}; left counts {lefts}; gap checked {gap.checked}; witness {demo.witness}")
    assert ok


def test_criterion_9_bernstein_consistency(record_criterion):
    roots = RootList.from_values(brieskorn_pham_roots(3, 4))
    jumps = [x for x in divisor_jumps(S3T4, 1).jumps]
    checks = [thm_2_1_check(jumps, roots), cor_2_4_check(roots), largest_root_check(jumps[0], roots)]
    extra = RootList.from_values(list(roots.roots) + [F(-2, 3)])
    tolerated = thm_2_1_check(jumps, extra)
    ok = all(checks) and bool(tolerated)
    record_criterion(9, ok, f"roots {[str(r) for r in roots.roots]}; three checks {[c.holds for c in checks]}; extra root tolerated {tolerated.holds}")
    assert ok


def test_criterion_10_oracle_invariants(record_criterion):
    failures = []
    ideals = doubling = prefix = 0
    for k in range(100):
        rng = random.Random(f"criterion-10:{k}")
        d = rng.randint(1, 3)
        ideal = random_ideal(rng, d, 6)
        c = random_fraction(rng, F(1, 6), F(3))
        poly = newton_polyhedron(ideal)
        J = multiplier_ideal(ideal, c, poly)
        bad = [v for v in itertools.product(range(21), repeat=d) if J.member(v) != (xi_of(poly, v) > c)]
        if bad:
            failures.append(f"pointwise {ideal.generators} at {c}: {bad[0]}")
        ideals += 1

        c_max = random_fraction(rng, F(1), F(5, 2))
        box = witness_box(poly, c_max)
        if jumps_upto(ideal, c_max, box=box).jumps != jumps_upto(ideal, c_max, box=2 * box).jumps:
            failures.append(f"box doubling {ideal.generators} to {c_max}")
        doubling += 1

        spec = jumps_upto(ideal, c_max)
        if spec.multiplicities is not None:
            running = 0
            for x, m in zip(spec.jumps, spec.multiplicities):
                running += m
                if multiplier_ideal(ideal, x, poly).colength() != running:
                    failures.append(f"prefix sum {ideal.generators} at {x}")
            prefix += 1
    ok = not failures
    record_criterion(
        10, ok,
        f"[0,20]^d pointwise on {ideals} ideals, box doubling on {doubling}, prefix sums on {prefix} finite-colength cases; "
        f"{len(failures)} failures",
    )
    assert ok, failures[:5]
