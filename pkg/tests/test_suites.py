import random
from fractions import Fraction

import pytest

from jumpnum.hypersurface import nondegeneracy_check
from jumpnum.suites import (
    SUITE_NAMES,
    Check,
    brieskorn_pham_roots,
    instance_rng,
    one_in_semigroup,
    random_ideal,
    random_nondegenerate,
    run_random_instance,
    run_suite,
)

F = Fraction

SMALL_TRIALS = {"thom-sebastiani": 2, "prop3-8": 2, "graded": 2}


@pytest.mark.parametrize("suite", SUITE_NAMES)
def test_suite_passes_on_golden_cases_and_a_few_trials(suite):
    report = run_suite(suite, trials=SMALL_TRIALS.get(suite, 4), seed=3)
    assert report.ok, [(r.label, c) for r, c in report.failures()]
    assert report.check_count > 0


def test_instances_replay_exactly():
    full = run_suite("skoda", trials=5, seed=9, golden=False)
    for i in range(5):
        again = run_random_instance("skoda", 9, i)
        assert again == full.instances[i]
        assert again.repro == f"jumpnum verify skoda --seed 9 --instance {i}"


def test_single_instance_mode_skips_golden_cases():
    report = run_suite("periodicity", seed=2, instance=4)
    assert [r.label for r in report.instances] == [run_random_instance("periodicity", 2, 4).label]


def test_parallel_run_matches_serial_run():
    serial = run_suite("subadditivity", trials=6, seed=1, golden=False)
    parallel = run_suite("subadditivity", trials=6, seed=1, golden=False, jobs=2)
    assert serial.to_record() == parallel.to_record()


def test_exceptions_become_failed_checks():
    def broken():
        raise RuntimeError("boom")

    report = run_suite("bs", golden=False, extra=[("broken", broken, "jumpnum verify bs")])
    assert not report.ok
    ((instance, check),) = report.failures()
    assert instance.repro == "jumpnum verify bs"
    assert "boom" in check.detail


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_instance_streams_are_independent_of_order():
    a = instance_rng("skoda", 4, 7).random()
    instance_rng("skoda", 4, 6).random()
    assert instance_rng("skoda", 4, 7).random() == a
    assert instance_rng("periodicity", 4, 7).random() != a


def test_random_ideal_respects_bounds():
    rng = random.Random(0)
    for _ in range(50):
        ideal = random_ideal(rng, 3, 4, finite=True)
        assert ideal.is_finite_colength()
        assert all(max(g) <= 4 for g in ideal.generators)


def test_random_nondegenerate_polynomials_are_certified():
    rng = random.Random(5)
    for _ in range(5):
        assert nondegeneracy_check(random_nondegenerate(rng)).status == "proven"


def test_brieskorn_pham_roots():
    assert brieskorn_pham_roots(3, 4) == [F(-7, 12), F(-5, 6), F(-11, 12), F(-1)]


def test_one_in_semigroup():
    assert one_in_semigroup([F(3, 2)]) is False
    assert one_in_semigroup([F(2), F(3, 2)]) is True  # 1/2 + 1/2
    assert one_in_semigroup([F(5, 2), F(1)]) is True
    assert one_in_semigroup([F(3), F(3, 2)]) is True  # 1/3 + 2/3


def test_check_record_is_plain_data():
    assert Check("x", True, "fine") == Check("x", True, "fine")
