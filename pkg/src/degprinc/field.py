"""Exact arithmetic in the quadratic field Q(sqrt5).

Elements are stored as ``(a + b*sqrt5) / d`` with integer ``a``, ``b`` and a
positive integer ``d``, kept in lowest terms.  Rational numbers are the
elements with ``b == 0``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

SQRT5 = math.sqrt(5.0)


class Coefficient:
    """An element ``a + b*sqrt5`` of Q(sqrt5)."""

    __slots__ = ("_a", "_b", "_d", "_hash")

    def __init__(self, a=0, b=0):
        a = Fraction(a)
        b = Fraction(b)
        d = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        self._set(a.numerator * (d // a.denominator), b.numerator * (d // b.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(a, b, d)
        if g > 1:
            a //= g
            b //= g
            d //= g
        self._a = a
        self._b = b
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "Coefficient":
        obj = cls.__new__(cls)
        obj._set(a, b, d)
        return obj

    @classmethod
    def coerce(cls, x) -> "Coefficient":
        if isinstance(x, Coefficient):
            return x
        if isinstance(x, int):
            return cls._raw(x, 0, 1)
        if isinstance(x, Rational):
            return cls._raw(x.numerator, 0, x.denominator)
        if isinstance(x, str):
            return cls(Fraction(x))
        raise TypeError(f"cannot represent {x!r} exactly in Q(sqrt5)")

    # -- accessors -------------------------------------------------------
    @property
    def a(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def b(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_rational(self) -> bool:
        return self._b == 0

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def to_fraction(self) -> Fraction:
        if self._b:
            raise ValueError(f"{self} is irrational")
        return Fraction(self._a, self._d)

    def conjugate(self) -> "Coefficient":
        return Coefficient._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - 5 b^2``."""
        return Fraction(self._a * self._a - 5 * self._b * self._b, self._d * self._d)

    def sign(self) -> int:
        """Exact sign of the real number ``a + b*sqrt5``."""
        a, b = self._a, self._b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: compare a^2 with 5 b^2
        s = a * a - 5 * b * b
        return (1 if a > 0 else -1) * ((s > 0) - (s < 0))

    def __float__(self) -> float:
        if self._b == 0:
            return self._a / self._d
        return (self._a + self._b * SQRT5) / self._d

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        try:
            o = Coefficient.coerce(other)
        except TypeError:
            return NotImplemented
        if self._d == o._d:
            return Coefficient._raw(self._a + o._a, self._b + o._b, self._d)
        return Coefficient._raw(
            self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __neg__(self):
        return Coefficient._raw(-self._a, -self._b, self._d)

    def __sub__(self, other):
        try:
            o = Coefficient.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return Coefficient.coerce(other) - self

    def __mul__(self, other):
        try:
            o = Coefficient.coerce(other)
        except TypeError:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        if b1 == 0 and b2 == 0:
            return Coefficient._raw(a1 * a2, 0, self._d * o._d)
        return Coefficient._raw(a1 * a2 + 5 * b1 * b2, a1 * b2 + a2 * b1, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "Coefficient":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(sqrt5)")
        n = self._a * self._a - 5 * self._b * self._b
        # (a + b r)/d inverse = d (a - b r) / (a^2 - 5 b^2)
        return Coefficient._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other):
        try:
            o = Coefficient.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Coefficient.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        try:
            o = Coefficient.coerce(other)
        except TypeError:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return not self.is_zero()

    def __hash__(self):
        if self._hash is None:
            if self._b == 0:
                self._hash = hash(Fraction(self._a, self._d))
            else:
                self._hash = hash((self._a, self._b, self._d))
        return self._hash

    def __repr__(self):
        return f"Coefficient({self.a!s}, {self.b!s})"

    def __str__(self):
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        bs = "sqrt5" if b == 1 else "-sqrt5" if b == -1 else f"{b}*sqrt5"
        if a == 0:
            return bs
        return f"{a} + {bs}" if b > 0 else f"{a} - {bs.lstrip('-')}"

    def to_json(self):
        """Serialize as ``"p/q"`` when rational, else ``{"a": .., "b": ..}``."""
        if self._b == 0:
            return str(self.a)
        return {"a": str(self.a), "b": str(self.b)}


ZERO = Coefficient._raw(0, 0, 1)
ONE = Coefficient._raw(1, 0, 1)
SQRT5_EXACT = Coefficient._raw(0, 1, 1)
#: golden ratio (1 + sqrt5) / 2
PHI = Coefficient._raw(1, 1, 2)
