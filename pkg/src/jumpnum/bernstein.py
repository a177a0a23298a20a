"""Consistency between jumping numbers and user-supplied Bernstein–Sato roots.

Roots are inputs; nothing here computes a b-function.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import RationalLike, as_rational

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootList:
    """Distinct roots in ``[-1, 0)``, strictly decreasing, ending at ``-1``."""

    roots: tuple[Fraction, ...]

    def __post_init__(self):
        rs = self.roots
        if not rs:
            raise ValueError("root list is empty")
        if any(not (-1 <= r < 0) for r in rs):
            raise ValueError("roots must lie in [-1, 0)")
        if any(a <= b for a, b in zip(rs, rs[1:])):
            raise ValueError("roots must be strictly decreasing")
        if rs[-1] != -1:
            raise ValueError("-1 is always a root and must be listed")

    @classmethod
    def from_values(cls, values: Iterable[RationalLike]) -> RootList:
        """Keep roots in ``[-1, 0)``, dropping others with a logged notice; sort and dedupe."""
        kept, dropped = set(), []
        for v in values:
            r = as_rational(v)
            (kept.add(r) if -1 <= r < 0 else dropped.append(r))
        if dropped:
            log.warning("ignoring %d root(s) outside [-1, 0): %s", len(dropped), ", ".join(map(str, dropped)))
        return cls(tuple(sorted(kept, reverse=True)))

    def __len__(self) -> int:
        return len(self.roots)


@dataclass
class BSVerdict:
    holds: bool
    missing: list[Fraction] = field(default_factory=list)
    violations: list[int] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.holds


def thm_2_1_check(jumps_in_unit_interval: Sequence[RationalLike], roots: RootList) -> BSVerdict:
    """Every jump ``x`` in ``(0, 1]`` has ``-x`` among the roots."""
    jumps = [as_rational(x) for x in jumps_in_unit_interval]
    if any(not 0 < x <= 1 for x in jumps):
        raise ValueError("jumps must lie in (0, 1]")
    have = set(roots.roots)
    missing = [-x for x in jumps if -x not in have]
    return BSVerdict(not missing, missing=missing)


def cor_2_4_check(roots: RootList) -> BSVerdict:
    """``r_{i+1} >= r_i + r_1`` and the iterated chain ``r_i >= i * r_1``.

    Violations are reported by the 1-based index ``i`` of the pair
    ``(r_i, r_{i+1})``.
    """
    rs = roots.roots
    r1 = rs[0]
    bad = [i + 1 for i in range(len(rs) - 1) if rs[i + 1] < rs[i] + r1 or rs[i + 1] < (i + 2) * r1]
    return BSVerdict(not bad, violations=bad)


def largest_root_check(lct: RationalLike, roots: RootList) -> BSVerdict:
    lct = as_rational(lct)
    if not 0 < lct <= 1:
        raise ValueError("lct of a hypersurface lies in (0, 1]")
    ok = roots.roots[0] == -lct
    return BSVerdict(ok, missing=[] if ok else [-lct])
