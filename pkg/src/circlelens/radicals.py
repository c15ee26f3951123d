"""Exact arithmetic on Q-linear combinations of square roots of integers.

A :class:`Rad` value is a finite sum ``sum(c_d * sqrt(d))`` over square-free
positive integers ``d`` with rational coefficients.  Distinct square-free
radicals are linearly independent over Q, so a value is zero exactly when it
has no terms, and sign evaluation can be done exactly by recursively splitting
off one prime of the radicand support and squaring.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from sympy import factorint


@lru_cache(maxsize=None)
def square_free(n: int) -> tuple[int, int]:
    """Decompose a positive integer as n = s*s*d with d square-free.

    Returns (s, d).
    """
    if n <= 0:
        raise ValueError("square_free requires a positive integer")
    r = isqrt(n)
    if r * r == n:
        return r, 1
    s, d = 1, 1
    for p, e in factorint(n).items():
        s *= int(p) ** (e // 2)
        if e % 2:
            d *= int(p)
    return s, d


def sqrt_fraction(q) -> tuple[Fraction, int]:
    """sqrt(q) written as coeff * sqrt(d) with d square-free.

    q must be a nonnegative rational.  Returns (coeff, d); d == 1 means the
    root is rational.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError("sqrt_fraction requires a nonnegative rational")
    if q == 0:
        return Fraction(0), 1
    # sqrt(p/q) = sqrt(p*q)/q
    s, d = square_free(q.numerator * q.denominator)
    return Fraction(s, q.denominator), d


@lru_cache(maxsize=None)
def _least_prime_factor(n: int) -> int:
    return int(min(factorint(n)))


class Rad:
    """An exact real number of the form sum(coeff * sqrt(d)), d square-free."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        self.terms = {d: c for d, c in dict(terms).items() if c}

    @classmethod
    def rational(cls, q) -> "Rad":
        return cls({1: Fraction(q)})

    @classmethod
    def root_term(cls, coeff, radicand) -> "Rad":
        """coeff * sqrt(radicand) for any nonnegative rational radicand."""
        coeff = Fraction(coeff)
        extra, d = sqrt_fraction(radicand)
        return cls({d: coeff * extra})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __neg__(self) -> "Rad":
        return Rad({d: -c for d, c in self.terms.items()})

    def __add__(self, other) -> "Rad":
        if isinstance(other, (int, Fraction)):
            other = Rad.rational(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out.get(d, Fraction(0)) + c
        return Rad(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Rad":
        if isinstance(other, (int, Fraction)):
            other = Rad.rational(other)
        return self + (-other)

    def __rsub__(self, other) -> "Rad":
        return (-self) + other

    def __mul__(self, other) -> "Rad":
        if isinstance(other, (int, Fraction)):
            return Rad({d: c * other for d, c in self.terms.items()})
        out: dict[int, Fraction] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                g = gcd(d1, d2)
                d = (d1 // g) * (d2 // g)
                out[d] = out.get(d, Fraction(0)) + c1 * c2 * g
        return Rad(out)

    __rmul__ = __mul__

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}."""
        terms = self.terms
        if not terms:
            return 0
        if len(terms) == 1:
            ((_, c),) = terms.items()
            return 1 if c > 0 else -1
        # Split off one prime p of the radicand support: S = U + V*sqrt(p)
        # with U, V free of p; compare U^2 against p*V^2 when signs disagree.
        p = _least_prime_factor(max(d for d in terms if d > 1))
        u = Rad({d: c for d, c in terms.items() if d % p})
        v = Rad({d // p: c for d, c in terms.items() if d % p == 0})
        su, sv = u.sign(), v.sign()
        if sv == 0:
            return su
        if su == 0:
            return sv
        if su == sv:
            return su
        s = (u * u - v * v * p).sign()
        return s if su > 0 else -s

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Rad.rational(other)
        if not isinstance(other, Rad):
            return NotImplemented
        return (self - other).is_zero

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __float__(self) -> float:
        return float(sum(float(c) * d ** 0.5 for d, c in self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "Rad(0)"
        parts = [f"{c}*sqrt({d})" if d != 1 else str(c)
                 for d, c in sorted(self.terms.items())]
        return "Rad(" + " + ".join(parts) + ")"
