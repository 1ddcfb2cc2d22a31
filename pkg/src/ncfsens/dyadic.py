"""Exact dyadic rationals, i.e. ``numerator / 2**log2_denominator``.

Every Fourier coefficient, influence and average sensitivity of a Boolean
function on the uniform cube is of this form, so checks built on top of
:class:`Dyadic` are plain equality tests.
"""

from __future__ import annotations

import numbers
from fractions import Fraction


def _canonical(num: int, e: int) -> tuple[int, int]:
    if num == 0:
        return 0, 0
    if e < 0:
        return num << -e, 0
    tz = (num & -num).bit_length() - 1
    shift = min(tz, e)
    return num >> shift, e - shift


class Dyadic:
    """Immutable exact value ``numerator * 2**-log2_denominator``.

    The stored form is canonical: the numerator is odd (or the value is zero,
    in which case ``log2_denominator == 0``), so structural and numeric
    equality coincide.
    """

    __slots__ = ("_num", "_e")

    def __init__(self, numerator: int = 0, log2_denominator: int = 0):
        self._num, self._e = _canonical(int(numerator), int(log2_denominator))

    @classmethod
    def from_rational(cls, value) -> "Dyadic":
        if isinstance(value, Dyadic):
            return value
        q = Fraction(value)
        den = q.denominator
        if den & (den - 1):
            raise ValueError(f"{value!r} is not dyadic")
        return cls(q.numerator, den.bit_length() - 1)

    @property
    def numerator(self) -> int:
        return self._num

    @property
    def log2_denominator(self) -> int:
        return self._e

    @property
    def denominator(self) -> int:
        return 1 << self._e

    def to_fraction(self) -> Fraction:
        return Fraction(self._num, 1 << self._e)

    # arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, Dyadic):
            return other
        if isinstance(other, int):
            return Dyadic(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented if not isinstance(other, numbers.Rational) else self.to_fraction() + other
        e = max(self._e, o._e)
        return Dyadic((self._num << (e - self._e)) + (o._num << (e - o._e)), e)

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self._num, self._e)

    def __pos__(self):
        return self

    def __abs__(self):
        return Dyadic(abs(self._num), self._e)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented if not isinstance(other, numbers.Rational) else self.to_fraction() - other
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented if not isinstance(other, numbers.Rational) else self.to_fraction() * other
        return Dyadic(self._num * o._num, self._e + o._e)

    __rmul__ = __mul__

    def halve(self, times: int = 1) -> "Dyadic":
        """Multiply by ``2**-times``."""
        return Dyadic(self._num, self._e + times)

    def __truediv__(self, other):
        if isinstance(other, int) and other > 0 and other & (other - 1) == 0:
            return self.halve(other.bit_length() - 1)
        return self.to_fraction() / other

    # comparison

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self._num == other._num and self._e == other._e
        if isinstance(other, numbers.Rational):
            return self.to_fraction() == other
        if isinstance(other, float):
            return self.to_fraction() == other
        return NotImplemented

    def __hash__(self):
        return hash(self.to_fraction())

    def _cmp_key(self, other):
        if isinstance(other, Dyadic):
            return other.to_fraction()
        if isinstance(other, (numbers.Rational, float)):
            return other
        raise TypeError(f"cannot compare Dyadic with {type(other).__name__}")

    def __lt__(self, other):
        return self.to_fraction() < self._cmp_key(other)

    def __le__(self, other):
        return self.to_fraction() <= self._cmp_key(other)

    def __gt__(self, other):
        return self.to_fraction() > self._cmp_key(other)

    def __ge__(self, other):
        return self.to_fraction() >= self._cmp_key(other)

    def __bool__(self):
        return self._num != 0

    def __float__(self):
        return self._num / (1 << self._e) if self._e < 1000 else float(self.to_fraction())

    def sign(self) -> int:
        return (self._num > 0) - (self._num < 0)

    # presentation

    def __repr__(self):
        return f"Dyadic({self._num}, {self._e})"

    def __str__(self):
        return f"{self._num}/{1 << self._e}"

    def to_json(self) -> dict:
        return {"num": self._num, "log2den": self._e, "float": float(self)}


numbers.Rational.register(Dyadic)

ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)


def rational_str(value) -> str:
    """Render an exact rational as ``"num/den"``."""
    q = Fraction(value) if not isinstance(value, Dyadic) else value.to_fraction()
    return f"{q.numerator}/{q.denominator}"
