"""Exact arithmetic in the cyclotomic field Q(zeta_8), plus the float bridge.

An element is ``(c0 + c1 z + c2 z^2 + c3 z^3) / den`` with ``z = exp(i pi/4)``
and integer ``c0..c3``.  Storing one common denominator keeps multiplication
to plain integer work; the per-coefficient rationals are still available
(and canonical) through :meth:`ExactScalar.coefficients`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Union

__all__ = [
    "ExactScalar",
    "PiFraction",
    "to_float",
    "exact_cos_sin",
    "ZERO",
    "ONE",
    "ZETA",
    "I",
    "SQRT2",
    "INV_SQRT2",
    "QUARTER_PI",
]

_HALF_SQRT2 = math.sqrt(2.0) / 2.0

Number = Union[int, Fraction, "ExactScalar"]


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


class ExactScalar:
    """Element of Q(zeta_8) in canonical form.

    Canonical means ``den > 0`` and ``gcd(c0, c1, c2, c3, den) == 1``, which
    makes equality and hashing structural.
    """

    __slots__ = ("_n", "_d")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        coeffs = [Fraction(c) if not isinstance(c, str) else _parse_fraction(c) for c in (c0, c1, c2, c3)]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = tuple(int(c * den) for c in coeffs)
        self._n, self._d = _normalize(nums, den)

    @classmethod
    def _raw(cls, nums: tuple[int, int, int, int], den: int) -> "ExactScalar":
        obj = object.__new__(cls)
        obj._n, obj._d = _normalize(nums, den)
        return obj

    @classmethod
    def coerce(cls, value) -> "ExactScalar":
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, (int, Rational)) and not isinstance(value, bool):
            f = Fraction(value)
            return cls._raw((f.numerator, 0, 0, 0), f.denominator)
        raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")

    @classmethod
    def zeta_power(cls, k: int) -> "ExactScalar":
        """``exp(i pi k / 4)`` exactly."""
        k %= 8
        sign = 1 if k < 4 else -1
        nums = [0, 0, 0, 0]
        nums[k % 4] = sign
        return cls._raw(tuple(nums), 1)

    # -- structure ---------------------------------------------------------

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(n, self._d) for n in self._n)

    @property
    def numerators(self) -> tuple[int, int, int, int]:
        return self._n

    @property
    def denominator(self) -> int:
        return self._d

    def is_zero(self) -> bool:
        return not any(self._n)

    def is_rational(self) -> bool:
        return not any(self._n[1:])

    def __eq__(self, other):
        if isinstance(other, ExactScalar):
            return self._n == other._n and self._d == other._d
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self):
        return hash((self._n, self._d))

    def __bool__(self):
        return not self.is_zero()

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a, da = self._n, self._d
        b, db = other._n, other._d
        if da == db:
            return ExactScalar._raw(tuple(x + y for x, y in zip(a, b)), da)
        return ExactScalar._raw(tuple(x * db + y * da for x, y in zip(a, b)), da * db)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar._raw(tuple(-x for x in self._n), self._d)

    def __sub__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return ExactScalar.coerce(other) - self

    def __mul__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        a0, a1, a2, a3 = self._n
        b0, b1, b2, b3 = other._n
        # z^4 = -1 folds the upper half of the convolution back with a sign
        c0 = a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1
        c1 = a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2
        c2 = a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3
        c3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
        return ExactScalar._raw((c0, c1, c2, c3), self._d * other._d)

    __rmul__ = __mul__

    def conj(self) -> "ExactScalar":
        # conj(z^k) = z^-k = -z^(4-k)
        n0, n1, n2, n3 = self._n
        return ExactScalar._raw((n0, -n3, -n2, -n1), self._d)

    def galois(self, k: int) -> "ExactScalar":
        """Apply the automorphism ``z -> z^k`` (``k`` odd)."""
        if k % 2 == 0:
            raise ValueError("Galois automorphisms of Q(zeta_8) need odd k")
        nums = [0, 0, 0, 0]
        for i, n in enumerate(self._n):
            e = (i * k) % 8
            nums[e % 4] += n if e < 4 else -n
        return ExactScalar._raw(tuple(nums), self._d)

    def norm(self) -> Fraction:
        """Field norm down to Q (product of all four conjugates)."""
        prod = self * self.galois(3) * self.galois(5) * self.galois(7)
        assert prod.is_rational()
        return prod.coefficients()[0]

    def inverse(self) -> "ExactScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_8)")
        cofactor = self.galois(3) * self.galois(5) * self.galois(7)
        return cofactor * (1 / self.norm())

    def __truediv__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_rational():
            f = other.coefficients()[0]
            if f == 0:
                raise ZeroDivisionError("division by zero in Q(zeta_8)")
            return ExactScalar._raw(tuple(n * f.denominator for n in self._n), self._d * f.numerator)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return ExactScalar.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def real(self) -> "ExactScalar":
        return (self + self.conj()) / 2

    def imag(self) -> "ExactScalar":
        return (self - self.conj()) / (2 * I)

    def abs2(self) -> "ExactScalar":
        return self * self.conj()

    # -- conversion --------------------------------------------------------

    def __complex__(self):
        n0, n1, n2, n3 = self._n
        re = n0 + _HALF_SQRT2 * (n1 - n3)
        im = n2 + _HALF_SQRT2 * (n1 + n3)
        return complex(re / self._d, im / self._d)

    def to_json(self) -> dict[str, str]:
        return {f"c{k}": f"{c.numerator}/{c.denominator}" for k, c in enumerate(self.coefficients())}

    @classmethod
    def from_json(cls, data: dict[str, str]) -> "ExactScalar":
        return cls(*(data.get(f"c{k}", "0") for k in range(4)))

    def __repr__(self):
        return f"ExactScalar({', '.join(repr(str(c)) for c in self.coefficients())})"

    def __str__(self):
        # render over the basis {1, sqrt2, i, sqrt2 i}: easier to read than powers of zeta
        c0, c1, c2, c3 = self.coefficients()
        parts = (c0, (c1 - c3) / 2, c2, (c1 + c3) / 2)
        terms = []
        for k, c in enumerate(parts):
            if c == 0:
                continue
            unit = ("", "√2", "i", "√2i")[k]
            if unit and abs(c) == 1:
                mag = unit
            else:
                mag = f"{abs(c)}{unit}" if c.denominator == 1 else f"({abs(c)}){unit}"
            terms.append(("-" if c < 0 else "+", mag))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mag in terms[1:]:
            out += f" {sign} {mag}"
        return out


def _normalize(nums, den):
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    g = math.gcd(*nums, den)
    if den < 0:
        g = -g
    if g != 1:
        nums = tuple(n // g for n in nums)
        den //= g
    return nums, den


def to_float(a: ExactScalar) -> complex:
    return complex(a)


class PiFraction:
    """An angle given as a rational multiple of pi, so exact trig is possible."""

    __slots__ = ("turns",)

    def __init__(self, turns):
        self.turns = Fraction(turns)

    def __float__(self):
        return float(self.turns) * math.pi

    def __neg__(self):
        return PiFraction(-self.turns)

    def __mul__(self, k):
        return PiFraction(self.turns * Fraction(k))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PiFraction) and other.turns == self.turns

    def __hash__(self):
        return hash(("pi", self.turns))

    def __repr__(self):
        return f"PiFraction({self.turns})"


def exact_cos_sin(angle: PiFraction) -> tuple[ExactScalar, ExactScalar] | None:
    """``(cos, sin)`` in Q(zeta_8), or ``None`` when they fall outside the field."""
    eighths = angle.turns * 4
    if eighths.denominator != 1:
        return None
    z = ExactScalar.zeta_power(int(eighths))
    return z.real(), z.imag()


ZERO = ExactScalar()
ONE = ExactScalar(1)
ZETA = ExactScalar(0, 1)
I = ExactScalar(0, 0, 1)
SQRT2 = ExactScalar(0, 1, 0, -1)
INV_SQRT2 = ExactScalar(0, Fraction(1, 2), 0, Fraction(-1, 2))
QUARTER_PI = PiFraction(Fraction(1, 4))
