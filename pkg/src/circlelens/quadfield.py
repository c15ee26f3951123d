"""Numbers and points in a quadratic extension Q(sqrt(delta)) of the rationals.

A :class:`QuadNum` is stored canonically as ``a + b*sqrt(delta)`` with a, b
rational and delta a square-free positive integer (delta == 0 for rational
values).  Canonical storage makes structural equality and hashing agree with
numeric equality, even across values built from different radicands.
"""

from __future__ import annotations

from fractions import Fraction

from .radicals import Rad, sqrt_fraction


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class QuadNum:
    """Exact number a + b*sqrt(delta); delta square-free, 0 iff rational."""

    __slots__ = ("a", "b", "delta")

    def __init__(self, a, b=0, delta=0):
        a, b = frac(a), frac(b)
        if b == 0 or delta == 0:
            self.a, self.b, self.delta = a, Fraction(0), 0
            return
        delta = frac(delta)
        if delta < 0:
            raise ValueError("radicand must be nonnegative")
        coeff, d = sqrt_fraction(delta)
        if d == 1:
            self.a, self.b, self.delta = a + b * coeff, Fraction(0), 0
        else:
            self.a, self.b, self.delta = a, b * coeff, d

    # -- construction helpers -------------------------------------------------

    @classmethod
    def of(cls, value) -> "QuadNum":
        if isinstance(value, QuadNum):
            return value
        return cls(frac(value))

    @classmethod
    def sqrt(cls, radicand) -> "QuadNum":
        """Exact square root of a nonnegative rational."""
        return cls(0, 1, radicand)

    @property
    def is_rational(self) -> bool:
        return self.delta == 0

    def to_rad(self) -> Rad:
        return Rad({1: self.a, self.delta if self.delta else 1: self.b}) \
            if self.delta else Rad.rational(self.a)

    # -- field arithmetic (same radicand, or one side rational) ---------------

    def _join(self, other: "QuadNum") -> int:
        if self.delta == 0:
            return other.delta
        if other.delta == 0 or other.delta == self.delta:
            return self.delta
        raise ValueError("mixed radicands in QuadNum arithmetic")

    def __add__(self, other):
        other = QuadNum.of(other)
        d = self._join(other)
        return QuadNum(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self.a, -self.b, self.delta)

    def __sub__(self, other):
        return self + (-QuadNum.of(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = QuadNum.of(other)
        d = self._join(other)
        dd = frac(d)
        return QuadNum(self.a * other.a + self.b * other.b * dd,
                       self.a * other.b + self.b * other.a, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadNum":
        norm = self.a * self.a - self.b * self.b * self.delta
        if norm == 0:
            if self.a == 0 and self.b == 0:
                raise ZeroDivisionError("QuadNum division by zero")
            # cannot happen for canonical nonzero values (delta square-free)
            raise ZeroDivisionError("QuadNum with zero norm")
        return QuadNum(self.a / norm, -self.b / norm, self.delta)

    def __truediv__(self, other):
        return self * QuadNum.of(other).inverse()

    def __rtruediv__(self, other):
        return QuadNum.of(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = QuadNum(1)
        for _ in range(exponent):
            out = out * self
        return out

    # -- ordering and equality ------------------------------------------------

    def sign(self) -> int:
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        sa = 1 if self.a > 0 else -1
        sb = 1 if self.b > 0 else -1
        if sa == sb:
            return sa
        t = self.a * self.a - self.b * self.b * self.delta
        s = (t > 0) - (t < 0)
        return s if sa > 0 else -s

    def compare(self, other) -> int:
        """Exact three-way comparison; works across different radicands."""
        other = QuadNum.of(other)
        if self.delta == 0 or other.delta == 0 or self.delta == other.delta:
            return (self - other).sign()
        return (self.to_rad() - other.to_rad()).sign()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadNum.of(other)
        if not isinstance(other, QuadNum):
            return NotImplemented
        # canonical form: structural equality is numeric equality
        return (self.a, self.b, self.delta) == (other.a, other.b, other.delta)

    def __hash__(self):
        if self.delta == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.delta))

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * self.delta ** 0.5

    def __repr__(self):
        return f"QuadNum({self.a!r}, {self.b!r}, {self.delta!r})"

    def __str__(self):
        if self.delta == 0:
            return str(self.a)
        head = f"{self.a}" if self.a else ""
        sgn = "+" if self.b > 0 and head else ""
        return f"{head}{sgn}{self.b}*sqrt({self.delta})"


ZERO = QuadNum(0)
ONE = QuadNum(1)


class QuadPoint:
    """A planar point with both coordinates in one quadratic field."""

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        x, y = QuadNum.of(x), QuadNum.of(y)
        if x.delta and y.delta and x.delta != y.delta:
            raise ValueError("QuadPoint coordinates must share one radicand")
        self.x, self.y = x, y

    @classmethod
    def of(cls, value) -> "QuadPoint":
        if isinstance(value, QuadPoint):
            return value
        x, y = value
        return cls(x, y)

    @property
    def delta(self) -> int:
        return self.x.delta or self.y.delta

    @property
    def is_rational(self) -> bool:
        return self.x.is_rational and self.y.is_rational

    def compare(self, other: "QuadPoint") -> int:
        c = self.x.compare(other.x)
        return c if c else self.y.compare(other.y)

    def __eq__(self, other):
        if not isinstance(other, QuadPoint):
            try:
                other = QuadPoint.of(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __iter__(self):
        return iter((self.x, self.y))

    def __repr__(self):
        return f"QuadPoint({self.x!r}, {self.y!r})"

    def __str__(self):
        return f"({self.x}, {self.y})"
