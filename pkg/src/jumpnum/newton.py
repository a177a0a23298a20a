"""Newton polyhedra of monomial ideals and the jump function on lattice points.

The polyhedron ``conv(generators) + R^d_{>=0}`` is homogenized to the cone
spanned by ``(1, p)`` for each generator ``p`` and ``(0, e_i)`` for each
coordinate direction. Its facets are the extreme rays of the dual cone,
which we compute with the double description method in exact integer
arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .algebra import DimensionError, Exponent, MonomialIdeal, RationalLike, as_rational


@dataclass(frozen=True, order=True)
class FacetForm:
    """The inequality ``normal . x >= level``, i.e. ``l(x) = normal.x / level >= 1``."""

    normal: tuple[int, ...]
    level: int

    def __post_init__(self):
        if self.level <= 0:
            raise ValueError("facet level must be positive")
        if any(n < 0 for n in self.normal) or not any(self.normal):
            raise ValueError("facet normal must be nonnegative and nonzero")
        if reduce(math.gcd, self.normal, self.level) != 1:
            raise ValueError("facet (normal, level) must be primitive")

    def value(self, x: Sequence[RationalLike]) -> Fraction:
        return Fraction(sum(n * as_rational(c) for n, c in zip(self.normal, x))) / self.level

    def shifted_value(self, v: Sequence[int]) -> Fraction:
        """``l(v + 1)`` for a lattice point ``v``."""
        return Fraction(sum(n * (c + 1) for n, c in zip(self.normal, v)), self.level)

    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.level) for n in self.normal)

    def to_string(self) -> str:
        return f"{self.normal}·x >= {self.level}"


@dataclass(frozen=True)
class NewtonPolyhedron:
    dimension: int
    facets: tuple[FacetForm, ...]
    vertices: tuple[Exponent, ...]
    coordinate_facets: tuple[int, ...] = field(default=())

    def contains(self, x: Sequence[RationalLike]) -> bool:
        x = [as_rational(c) for c in x]
        if len(x) != self.dimension:
            raise DimensionError("point has the wrong length")
        return all(c >= 0 for c in x) and all(f.value(x) >= 1 for f in self.facets)

    def level_lcm(self) -> int:
        return reduce(lambda a, b: a * b // math.gcd(a, b), (f.level for f in self.facets), 1)

    def min_coefficient(self) -> Fraction:
        """Smallest positive coefficient over all facet forms."""
        return min(c for f in self.facets for c in f.coefficients() if c > 0)


def _primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = reduce(math.gcd, (abs(x) for x in vec), 0)
    if g == 0:
        return tuple(vec)
    return tuple(x // g for x in vec)


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _rank(rows: list[Sequence[int]]) -> int:
    """Exact rank by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    rank, cols = 0, len(m[0])
    for c in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                q = m[r][c]
                m[r] = [p[c] * x - q * y for x, y in zip(m[r], p)]
        rank += 1
        if rank == len(m):
            break
    return rank


def _solve_basis_inverse(rows: list[Sequence[int]]) -> list[tuple[int, ...]]:
    """Columns of ``rows^{-1}`` scaled to primitive integer vectors."""
    n = len(rows)
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        pivot = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                q = aug[r][c]
                aug[r] = [x - q * y for x, y in zip(aug[r], aug[c])]
    cols = []
    for j in range(n):
        col = [aug[i][n + j] for i in range(n)]
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (x.denominator for x in col), 1)
        cols.append(_primitive([int(x * den) for x in col]))
    return cols


def extreme_rays(constraints: list[Sequence[int]]) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{y : a . y >= 0 for a in constraints}``.

    Double description (Motzkin) with the combinatorial adjacency test.
    The constraint matrix must have full column rank.
    """
    rows = [tuple(int(x) for x in r) for r in constraints]
    n = len(rows[0])
    basis: list[int] = []
    for i, r in enumerate(rows):
        if _rank([rows[j] for j in basis] + [r]) > len(basis):
            basis.append(i)
            if len(basis) == n:
                break
    if len(basis) < n:
        raise ValueError("constraint matrix is not of full column rank; cone is not pointed")

    rays = _solve_basis_inverse([rows[i] for i in basis])
    processed = list(basis)
    for i, a in enumerate(rows):
        if i in basis:
            continue
        vals = [_dot(a, r) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zero = [k for k, v in enumerate(vals) if v == 0]
        if not neg:
            processed.append(i)
            continue
        zsets = [frozenset(j for j in processed if _dot(rows[j], r) == 0) for r in rays]
        new = [rays[k] for k in pos + zero]
        for p in pos:
            for q in neg:
                common = zsets[p] & zsets[q]
                if len(common) < n - 2:
                    continue
                if any(k not in (p, q) and common <= zsets[k] for k in range(len(rays))):
                    continue
                combo = [vals[p] * y - vals[q] * x for x, y in zip(rays[p], rays[q])]
                new.append(_primitive(combo))
        rays = list(dict.fromkeys(new))
        processed.append(i)
    return rays


def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    """Irredundant facets ``l(x) >= 1`` and vertices of the Newton polyhedron."""
    if not ideal.is_proper_nonzero():
        raise ValueError("the Newton polyhedron needs a proper nonzero ideal")
    return polyhedron_from_points(ideal.dimension, ideal.generators)


def polyhedron_from_points(d: int, points: Iterable[Sequence[int]]) -> NewtonPolyhedron:
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise ValueError("no points")
    if any(len(p) != d for p in pts):
        raise DimensionError("points of mixed dimension")
    if any(not any(p) for p in pts):
        raise ValueError("the origin is among the points; the polyhedron is the whole orthant")
    gens = [(1,) + p for p in pts] + [(0,) + tuple(int(i == j) for j in range(d)) for i in range(d)]
    duals = extreme_rays(gens)

    facets, coords = [], []
    for a in duals:
        a0, normal = a[0], a[1:]
        if a0 < 0:
            facets.append(FacetForm(tuple(normal), -a0))
        elif a0 == 0 and sum(1 for x in normal if x) == 1:
            coords.append(next(i for i, x in enumerate(normal) if x))
    facets.sort()

    vertices = []
    for p in pts:
        tight = [a for a in duals if _dot(a, (1,) + p) == 0]
        if _rank(tight) == d:
            vertices.append(p)
    return NewtonPolyhedron(d, tuple(facets), tuple(vertices), tuple(sorted(coords)))


def xi_of(poly: NewtonPolyhedron, v: Sequence[int]) -> Fraction:
    """``min over facets of l(v + 1)``: the coefficient at which ``t^v`` leaves."""
    if len(v) != poly.dimension:
        raise DimensionError("exponent vector has the wrong length")
    if not poly.facets:
        raise ValueError("polyhedron has no positive-level facets")
    return min(f.shifted_value(v) for f in poly.facets)


def in_interior_scaled(poly: NewtonPolyhedron, u: Sequence[RationalLike], c: RationalLike) -> bool:
    """Whether a strictly positive point ``u`` lies in the interior of ``c * P``."""
    if len(u) != poly.dimension:
        raise DimensionError("point has the wrong length")
    u = [as_rational(x) for x in u]
    if any(x <= 0 for x in u):
        raise ValueError("point must have strictly positive entries")
    c = as_rational(c)
    return all(f.value(u) > c for f in poly.facets)


@dataclass(frozen=True)
class Face:
    kind: str  # "vertex", "edge", "ray" or "polyhedron"
    points: tuple[Exponent, ...]
    vertices: tuple[Exponent, ...]
    direction: tuple[int, ...] | None = None

    @property
    def label(self) -> str:
        if self.kind == "vertex":
            return f"vertex {self.vertices[0]}"
        if self.kind == "edge":
            return f"edge {self.vertices[0]}-{self.vertices[1]}"
        if self.kind == "ray":
            return f"ray {self.vertices[0]}+R{self.direction}"
        return "polyhedron"


def faces_2d(poly: NewtonPolyhedron, points: MonomialIdeal | Iterable[Sequence[int]] | None = None) -> list[Face]:
    """Vertices, bounded edges, the two unbounded edges and the whole polyhedron.

    ``points`` is the generating set whose members on each face are recorded
    (an ideal's generators, or the full support of a polynomial).
    """
    if poly.dimension != 2:
        raise ValueError("face enumeration is implemented for d = 2 only")
    if points is None:
        pts = list(poly.vertices)
    elif isinstance(points, MonomialIdeal):
        pts = list(points.generators)
    else:
        pts = [tuple(p) for p in points]
    pts = sorted(set(pts))
    verts = sorted(poly.vertices)  # increasing x, hence decreasing y

    faces = [Face("vertex", tuple(p for p in pts if p == v), (v,)) for v in verts]
    for a, b in zip(verts, verts[1:]):
        on = []
        for p in pts:
            cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
            if cross == 0 and a[0] <= p[0] <= b[0]:
                on.append(p)
        faces.append(Face("edge", tuple(on), (a, b)))
    top, bottom = verts[0], verts[-1]
    faces.append(Face("ray", tuple(p for p in pts if p[0] == top[0] and p[1] >= top[1]), (top,), (0, 1)))
    faces.append(Face("ray", tuple(p for p in pts if p[1] == bottom[1] and p[0] >= bottom[0]), (bottom,), (1, 0)))
    faces.append(Face("polyhedron", tuple(pts), tuple(verts)))
    return faces
