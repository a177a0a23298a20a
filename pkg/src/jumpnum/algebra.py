"""Exact scalars, sparse polynomials and monomial ideal arithmetic.

Monomial ideals are stored as their minimal generating antichain (the
corners of the staircase). Every ideal operation below has a closed form
on generators, which is what makes brute-force containment checks cheap.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Rational = Fraction
Exponent = tuple[int, ...]
RationalLike = Union[Fraction, int, str]


class DimensionError(ValueError):
    """Operands live in different numbers of variables."""


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimal points are rejected to stay exact."""
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"rational {text!r} must be written as p/q, not as a decimal")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Serialize as ``"p/q"`` with ``q > 0`` and ``gcd(p, q) = 1``."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _check_vector(v: Sequence[int], d: int) -> Exponent:
    v = tuple(int(x) for x in v)
    if len(v) != d:
        raise DimensionError(f"exponent vector {v} has length {len(v)}, expected {d}")
    if any(x < 0 for x in v):
        raise ValueError(f"exponent vector {v} has a negative entry")
    return v


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise ``a <= b``, i.e. the monomial ``t^a`` divides ``t^b``."""
    return all(x <= y for x, y in zip(a, b))


def _add(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _lcm(a: Sequence[int], b: Sequence[int]) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


class SparsePolynomial:
    """Multivariate polynomial over Q as a map exponent -> nonzero coefficient.

    Instances are immutable; arithmetic returns new objects.
    """

    __slots__ = ("_dim", "_terms")

    def __init__(self, dimension: int, terms: Mapping[Sequence[int], RationalLike] | None = None):
        if dimension < 1:
            raise ValueError("dimension must be positive")
        acc: dict[Exponent, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            e = _check_vector(exp, dimension)
            acc[e] = acc.get(e, Fraction(0)) + as_rational(coeff)
        self._dim = dimension
        self._terms = {e: c for e, c in acc.items() if c != 0}

    @classmethod
    def _raw(cls, dimension: int, terms: dict[Exponent, Fraction]) -> SparsePolynomial:
        obj = cls.__new__(cls)
        obj._dim = dimension
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, dimension: int, value: RationalLike) -> SparsePolynomial:
        return cls(dimension, {(0,) * dimension: value})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: RationalLike = 1) -> SparsePolynomial:
        return cls(len(exponent), {tuple(exponent): coeff})

    @classmethod
    def variable(cls, dimension: int, i: int) -> SparsePolynomial:
        e = [0] * dimension
        e[i] = 1
        return cls.monomial(e)

    @property
    def dimension(self) -> int:
        return self._dim

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def support(self) -> list[Exponent]:
        return sorted(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def _coerce(self, other) -> SparsePolynomial:
        if isinstance(other, SparsePolynomial):
            if other._dim != self._dim:
                raise DimensionError(f"polynomials in {self._dim} and {other._dim} variables")
            return other
        return SparsePolynomial.constant(self._dim, as_rational(other))

    def __add__(self, other) -> SparsePolynomial:
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return SparsePolynomial._raw(self._dim, out)

    __radd__ = __add__

    def __neg__(self) -> SparsePolynomial:
        return SparsePolynomial._raw(self._dim, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> SparsePolynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> SparsePolynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> SparsePolynomial:
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add(e1, e2)
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return SparsePolynomial._raw(self._dim, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> SparsePolynomial:
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = SparsePolynomial.constant(self._dim, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def partial(self, i: int) -> SparsePolynomial:
        """Formal partial derivative with respect to variable ``i``."""
        if not 0 <= i < self._dim:
            raise IndexError(f"variable index {i} out of range for dimension {self._dim}")
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                lowered = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[lowered] = c * e[i]
        return SparsePolynomial._raw(self._dim, out)

    def evaluate(self, point: Sequence[RationalLike]) -> Fraction:
        if len(point) != self._dim:
            raise DimensionError("evaluation point has the wrong length")
        pt = [as_rational(x) for x in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for x, k in zip(pt, e):
                if k:
                    term *= x ** k
            total += term
        return total

    def embed(self, dimension: int, offset: int) -> SparsePolynomial:
        """Same polynomial in ``dimension`` variables, its own starting at ``offset``."""
        if offset < 0 or offset + self._dim > dimension:
            raise DimensionError("embedding does not fit")
        pad_l, pad_r = (0,) * offset, (0,) * (dimension - offset - self._dim)
        return SparsePolynomial._raw(dimension, {pad_l + e + pad_r: c for e, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePolynomial):
            return self._dim == other._dim and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == SparsePolynomial.constant(self._dim, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._dim, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"SparsePolynomial({self._dim}, {self.to_string()!r})"

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        if names is None:
            names = default_names(self._dim)
        pieces = []
        for e, c in sorted(self._terms.items(), key=lambda t: (-sum(t[0]), [-x for x in t[0]])):
            mono = "*".join(
                (n if k == 1 else f"{n}^{k}") for n, k in zip(names, e) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def default_names(d: int) -> list[str]:
    if d == 1:
        return ["t"]
    if d == 2:
        return ["s", "t"]
    if d == 3:
        return ["x", "y", "z"]
    return [f"x{i + 1}" for i in range(d)]


def partial_derivative(f: SparsePolynomial, i: int) -> SparsePolynomial:
    return f.partial(i)


class MonomialIdeal:
    """Monomial ideal in ``dimension`` variables, kept as a minimal antichain.

    The zero ideal has no generators; the unit ideal has the single
    generator ``(0, ..., 0)``.
    """

    __slots__ = ("_dim", "_gens")

    def __init__(self, dimension: int, generators: Iterable[Sequence[int]] = ()):
        if dimension < 1:
            raise ValueError("dimension must be positive")
        self._dim = dimension
        self._gens = _antichain([_check_vector(g, dimension) for g in generators])

    @classmethod
    def _from_antichain(cls, dimension: int, gens: tuple[Exponent, ...]) -> MonomialIdeal:
        obj = cls.__new__(cls)
        obj._dim = dimension
        obj._gens = gens
        return obj

    @classmethod
    def unit(cls, dimension: int) -> MonomialIdeal:
        return cls._from_antichain(dimension, ((0,) * dimension,))

    @classmethod
    def zero(cls, dimension: int) -> MonomialIdeal:
        return cls._from_antichain(dimension, ())

    @classmethod
    def maximal(cls, dimension: int) -> MonomialIdeal:
        return cls.variables(dimension, range(dimension))

    @classmethod
    def variables(cls, dimension: int, indices: Iterable[int]) -> MonomialIdeal:
        gens = []
        for i in indices:
            e = [0] * dimension
            e[i] = 1
            gens.append(e)
        return cls(dimension, gens)

    @property
    def dimension(self) -> int:
        return self._dim

    @property
    def generators(self) -> tuple[Exponent, ...]:
        return self._gens

    def __len__(self) -> int:
        return len(self._gens)

    def is_zero(self) -> bool:
        return not self._gens

    def is_unit(self) -> bool:
        return self._gens == ((0,) * self._dim,)

    def is_proper_nonzero(self) -> bool:
        return not (self.is_zero() or self.is_unit())

    def _same(self, other: MonomialIdeal) -> None:
        if not isinstance(other, MonomialIdeal):
            raise TypeError(f"expected a MonomialIdeal, got {type(other).__name__}")
        if other._dim != self._dim:
            raise DimensionError(f"ideals in {self._dim} and {other._dim} variables")

    def member(self, v: Sequence[int]) -> bool:
        v = _check_vector(v, self._dim)
        return any(divides(g, v) for g in self._gens)

    __contains__ = member

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same(other)
        return MonomialIdeal._from_antichain(self._dim, _antichain(self._gens + other._gens))

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same(other)
        return MonomialIdeal._from_antichain(
            self._dim, _antichain([_add(a, b) for a in self._gens for b in other._gens])
        )

    def __pow__(self, m: int) -> MonomialIdeal:
        if m < 0:
            raise ValueError("ideal power must be nonnegative")
        result = MonomialIdeal.unit(self._dim)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._same(other)
        return MonomialIdeal._from_antichain(
            self._dim, _antichain([_lcm(a, b) for a in self._gens for b in other._gens])
        )

    intersection = __and__

    def contains(self, other: MonomialIdeal) -> bool:
        """``self ⊇ other``."""
        self._same(other)
        return all(any(divides(g, h) for g in self._gens) for h in other._gens)

    def first_non_member(self, other: MonomialIdeal) -> Exponent | None:
        """A generator of ``other`` outside ``self``, or None if ``self ⊇ other``."""
        self._same(other)
        for h in other._gens:
            if not any(divides(g, h) for g in self._gens):
                return h
        return None

    def is_finite_colength(self) -> bool:
        if self.is_zero():
            raise ValueError("the zero ideal has no colength")
        for i in range(self._dim):
            if not any(g[i] > 0 and sum(g) == g[i] for g in self._gens) and not self.is_unit():
                return False
        return True

    def pure_power_bounds(self) -> tuple[int, ...]:
        """For each variable the least ``k`` with ``x_i^k`` in the ideal."""
        if not self.is_finite_colength():
            raise ValueError("ideal does not have finite colength")
        if self.is_unit():
            return (0,) * self._dim
        out = []
        for i in range(self._dim):
            out.append(min(g[i] for g in self._gens if g[i] > 0 and sum(g) == g[i]))
        return tuple(out)

    def colength(self) -> int:
        """Number of lattice points outside the ideal (its staircase size)."""
        bounds = self.pure_power_bounds()
        return sum(
            1
            for v in itertools.product(*(range(b) for b in bounds))
            if not any(divides(g, v) for g in self._gens)
        )

    def standard_monomials(self) -> list[Exponent]:
        bounds = self.pure_power_bounds()
        return [
            v for v in itertools.product(*(range(b) for b in bounds))
            if not any(divides(g, v) for g in self._gens)
        ]

    def height(self) -> int:
        """Smallest set of variables meeting the support of every generator."""
        if not self.is_proper_nonzero():
            raise ValueError("height is defined here for proper nonzero ideals only")
        supports = [frozenset(i for i, x in enumerate(g) if x) for g in self._gens]
        for size in range(1, self._dim + 1):
            for cover in itertools.combinations(range(self._dim), size):
                chosen = set(cover)
                if all(s & chosen for s in supports):
                    return size
        raise AssertionError("unreachable: all variables always cover a proper ideal")

    def embed(self, dimension: int, offset: int) -> MonomialIdeal:
        """Extend to ``dimension`` variables, own variables starting at ``offset``."""
        if offset < 0 or offset + self._dim > dimension:
            raise DimensionError("embedding does not fit")
        pad_l, pad_r = (0,) * offset, (0,) * (dimension - offset - self._dim)
        return MonomialIdeal._from_antichain(
            dimension, tuple(sorted(pad_l + g + pad_r for g in self._gens))
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self._dim == other._dim and self._gens == other._gens

    def __hash__(self) -> int:
        return hash((self._dim, self._gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal({self._dim}, {list(self._gens)})"

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if self.is_zero():
            return "(0)"
        if names is None:
            names = default_names(self._dim)
        parts = []
        for g in sorted(self._gens, reverse=True):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, g) if k)
            parts.append(mono or "1")
        return "(" + ", ".join(parts) + ")"


def _antichain(vectors: Sequence[Exponent]) -> tuple[Exponent, ...]:
    # Sorting by total degree means a divisor is always seen before its multiples.
    kept: list[Exponent] = []
    for v in sorted(set(vectors), key=lambda e: (sum(e), e)):
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    return tuple(sorted(kept))


def minimalize(raw_generators: Iterable[Sequence[int]], d: int) -> MonomialIdeal:
    return MonomialIdeal(d, raw_generators)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return a + b


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return a * b


def ideal_power(a: MonomialIdeal, m: int) -> MonomialIdeal:
    return a ** m


def ideal_intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return a & b


def monomial_polynomial(exponent: Sequence[int]) -> SparsePolynomial:
    return SparsePolynomial.monomial(exponent)
