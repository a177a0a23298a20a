"""Asymptotic jumping numbers of two polyhedral graded families.

* the diagonal family, whose limiting Newton region is ``sum x_i / mu_i >= 1``;
* the hyperbola family on the plane, limiting region ``(a-1)(b-1) >= 1``
  (the convex branch with ``a, b > 1``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import DimensionError, RationalLike, as_rational, format_rational


@dataclass(frozen=True)
class Mu:
    """A positive exponent, either exact or an approximation within ``error``."""

    value: Fraction
    error: Fraction = Fraction(0)
    name: str = ""

    def __post_init__(self):
        if self.value - self.error <= 0:
            raise ValueError("mu must be certifiably positive")
        if self.error < 0:
            raise ValueError("error bound must be nonnegative")

    @property
    def exact(self) -> bool:
        return self.error == 0

    def reciprocal_bounds(self) -> tuple[Fraction, Fraction]:
        return 1 / (self.value + self.error), 1 / (self.value - self.error)


def _as_mu(x) -> Mu:
    return x if isinstance(x, Mu) else Mu(as_rational(x))


@dataclass(frozen=True)
class DiagonalFamily:
    mu: tuple[Mu, ...]

    def __init__(self, mu: Sequence):
        entries = tuple(_as_mu(x) for x in mu)
        if not entries:
            raise ValueError("need at least one exponent")
        object.__setattr__(self, "mu", entries)

    @property
    def dimension(self) -> int:
        return len(self.mu)

    @property
    def exact(self) -> bool:
        return all(m.exact for m in self.mu)

    def is_integral(self) -> bool:
        return self.exact and all(m.value.denominator == 1 for m in self.mu)

    def value(self, e: Sequence[int]) -> Fraction:
        """``sum (e_i + 1) / mu_i`` using the exact or central values."""
        return sum((Fraction(x + 1) / m.value for x, m in zip(e, self.mu)), Fraction(0))

    def value_bounds(self, e: Sequence[int]) -> tuple[Fraction, Fraction]:
        lo = sum((Fraction(x + 1) * m.reciprocal_bounds()[0] for x, m in zip(e, self.mu)), Fraction(0))
        hi = sum((Fraction(x + 1) * m.reciprocal_bounds()[1] for x, m in zip(e, self.mu)), Fraction(0))
        return lo, hi


def diagonal_member(family: DiagonalFamily, v: Sequence[int], c: RationalLike) -> bool | None:
    """Whether ``t^v`` lies in the asymptotic multiplier ideal at ``c``.

    Returns None when approximated exponents leave the answer undecided.
    """
    if len(v) != family.dimension:
        raise DimensionError("exponent vector has the wrong length")
    c = as_rational(c)
    lo, hi = family.value_bounds(v)
    if lo > c:
        return True
    if hi <= c:
        return False
    return None


@dataclass
class GradedJumpStream:
    family: str
    window: tuple[int, ...]
    cutoff: Fraction
    jumps: list[Fraction]
    parameters: dict[Fraction, list[tuple[int, ...]]] = field(default_factory=dict)
    exact: bool = True

    def __len__(self) -> int:
        return len(self.jumps)

    def to_record(self) -> dict:
        return {
            "family": self.family,
            "window": list(self.window),
            "cutoff": format_rational(self.cutoff),
            "exact": self.exact,
            "jumps": [
                {"value": format_rational(x), "parameters": [list(p) for p in self.parameters[x]]}
                for x in self.jumps
            ],
        }


def _collect(values: dict[Fraction, list[tuple[int, ...]]], family: str, window, c_max, exact=True) -> GradedJumpStream:
    jumps = sorted(values)
    return GradedJumpStream(family, tuple(window), c_max, jumps, {x: sorted(values[x]) for x in jumps}, exact)


def diagonal_jumps(family: DiagonalFamily, c_max: RationalLike) -> GradedJumpStream:
    """All ``sum (e_i + 1)/mu_i <= c_max``; exhaustive for exact exponents.

    Each ``e_i`` ranges up to ``ceil(c_max * mu_i)``; the value increases in
    every coordinate, so the scan of a coordinate stops at the first overshoot.
    """
    c_max = as_rational(c_max)
    if c_max <= 0:
        raise ValueError("cutoff must be positive")
    window = [math.ceil(c_max * m.value) for m in family.mu]
    steps = [1 / m.value for m in family.mu]
    d = family.dimension
    values: dict[Fraction, list[tuple[int, ...]]] = {}

    def walk(prefix: tuple[int, ...], partial: Fraction) -> None:
        k = len(prefix)
        floor = partial + sum(steps[k + 1:], Fraction(0))
        for e in range(window[k] + 1):
            x = floor + (e + 1) * steps[k]
            if x > c_max:
                break
            if k == d - 1:
                values.setdefault(x, []).append(prefix + (e,))
            else:
                walk(prefix + (e,), partial + (e + 1) * steps[k])

    walk((), Fraction(0))
    return _collect(values, "diagonal", window, c_max, family.exact)


def diagonal_kappa(family: DiagonalFamily, c_max: RationalLike) -> list[Fraction]:
    """Jumps repeated by multiplicity (number of lattice points on each level)."""
    if not family.exact:
        raise ValueError("multiplicities need exact exponents")
    stream = diagonal_jumps(family, c_max)
    return [x for x in stream.jumps for _ in stream.parameters[x]]


@dataclass
class NonperiodicityVerdict:
    applicable: bool
    witness: Fraction | None = None
    kind: str = ""  # "forward": jump x with x+1 not a jump; "backward": x+1 a jump, x > d-1 not


def nonperiodicity_demo(family: DiagonalFamily) -> NonperiodicityVerdict:
    """A witness that ``x`` jump ⇔ ``x + 1`` jump fails for this family.

    ``lct + 1`` is a jump exactly when ``1`` is a nonnegative integer
    combination of the ``1/mu_i``, and in that case ``x + 1`` is a jump for
    every jump ``x``. So a forward witness exists iff ``lct`` is one. Failing
    that, jumps ``x + 1`` with ``x > d - 1`` not a jump are searched in a
    window of ``3 * max ceil(mu_i) + d``.
    """
    if not family.exact:
        raise ValueError("the demonstration needs exact exponents")
    if family.is_integral():
        return NonperiodicityVerdict(False)
    d = family.dimension
    first = family.value((0,) * d)
    if first + 1 not in diagonal_jumps(family, first + 1).parameters:
        return NonperiodicityVerdict(True, first, "forward")
    window = 3 * max(math.ceil(m.value) for m in family.mu) + d
    jumps = diagonal_jumps(family, window + 1).jumps
    present = set(jumps)
    for y in jumps:
        x = y - 1
        if x > d - 1 and x not in present:
            return NonperiodicityVerdict(True, x, "backward")
    return NonperiodicityVerdict(True, None, "none-found")


def hyperbola_member(v: Sequence[int], c: RationalLike) -> bool:
    """``(v + 1)`` lies in the interior of ``c * N``, N the convex hyperbola branch."""
    if len(v) != 2:
        raise DimensionError("the hyperbola family lives in two variables")
    c = as_rational(c)
    if c <= 0:
        raise ValueError("c must be positive")
    a, b = Fraction(v[0] + 1) / c, Fraction(v[1] + 1) / c
    return a > 1 and b > 1 and (a - 1) * (b - 1) > 1


def hyperbola_value(e: int, f: int) -> Fraction:
    return Fraction((e + 1) * (f + 1), e + f + 2)


def hyperbola_jumps(window: int, c_max: RationalLike) -> GradedJumpStream:
    """Values ``(e+1)(f+1)/(e+f+2) <= c_max`` over ``0 <= e, f <= window``.

    This is a finite piece of an infinite set with cluster points.
    """
    if window < 0:
        raise ValueError("window must be nonnegative")
    c_max = as_rational(c_max)
    values: dict[Fraction, list[tuple[int, ...]]] = {}
    for e in range(window + 1):
        for f in range(window + 1):
            x = hyperbola_value(e, f)
            if x <= c_max:
                values.setdefault(x, []).append((e, f))
    return _collect(values, "hyperbola", (window, window), c_max)


def hyperbola_integer_witness(n: int, search: int | None = None) -> tuple[int, int] | None:
    """A lattice point whose jump is the integer ``n``, found by bounded search."""
    bound = search if search is not None else n * n + n
    for e in range(bound + 1):
        for f in range(bound + 1):
            if hyperbola_value(e, f) == n:
                return e, f
    return None


def right_stable_window(n: int, epsilon: Fraction) -> int:
    """Window beyond which the count of jumps in ``(n, n + epsilon)`` no longer changes.

    With ``a = e + 1 <= b = f + 1`` a value in that range forces
    ``n < a < 2(n + epsilon)`` and ``b < (n + epsilon) a / (a - n - epsilon)``.
    """
    top = n + epsilon
    worst = 0
    for a in range(n + 1, math.ceil(2 * top) + 1):
        if a - top <= 0:
            continue
        worst = max(worst, a, math.ceil(top * a / (a - top)))
    return worst


@dataclass
class ClusterReport:
    n: int
    epsilon: Fraction
    windows: tuple[int, int]
    left_counts: tuple[int, int]
    right_counts: tuple[int, int]
    right_threshold: int

    @property
    def left_grows(self) -> bool:
        return self.left_counts[1] > self.left_counts[0]

    @property
    def right_stable(self) -> bool | None:
        """None when the smaller window is still below the stability threshold."""
        if self.windows[0] < self.right_threshold:
            return None
        return self.right_counts[0] == self.right_counts[1]


def cluster_diagnostics(window: int, n: int, epsilon: RationalLike) -> ClusterReport:
    epsilon = as_rational(epsilon)
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not 0 < epsilon < Fraction(1, 2):
        raise ValueError("epsilon must lie in (0, 1/2)")
    lefts, rights = [], []
    for w in (window, 2 * window):
        stream = hyperbola_jumps(w, n + epsilon)
        lefts.append(sum(1 for x in stream.jumps if n - epsilon < x < n))
        rights.append(sum(1 for x in stream.jumps if n < x < n + epsilon))
    return ClusterReport(n, epsilon, (window, 2 * window), tuple(lefts), tuple(rights), right_stable_window(n, epsilon))


@dataclass
class GapVerdict:
    checked: int
    failures: list[Fraction]

    @property
    def holds(self) -> bool:
        return not self.failures


def prop_5_8_check(stream: GradedJumpStream, lct: RationalLike, margin: RationalLike = 0) -> GapVerdict:
    """Each jump ``x`` with ``x + lct <= cutoff - margin`` has a successor in ``(x, x + lct]``."""
    lct, margin = as_rational(lct), as_rational(margin)
    js = stream.jumps
    failures, checked = [], 0
    for i, x in enumerate(js):
        if x + lct > stream.cutoff - margin:
            break
        checked += 1
        if i + 1 >= len(js) or js[i + 1] > x + lct:
            failures.append(x)
    return GapVerdict(checked, failures)
