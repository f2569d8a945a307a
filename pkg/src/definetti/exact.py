"""Exact real scalars of the form sign * sqrt(p/q).

Coupling coefficients are square roots of rationals.  Keeping them as
(sign, radicand) pairs instead of floats lets overlap sums come out as
exact fractions, which the verification suites compare literally.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, sqrt


def split_square(n: int) -> tuple[int, int]:
    """Factor n = a*a*f with f squarefree; returns (a, f).

    Complete for every positive integer (trial division runs to sqrt of the
    unfactored part), fast for the smooth integers produced by factorial
    ratios.
    """
    if n <= 0:
        raise ValueError(f"split_square needs a positive integer, got {n}")
    r = isqrt(n)
    if r * r == n:
        return r, 1
    a, f = 1, 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            a *= p ** (e // 2)
            if e % 2:
                f *= p
            r = isqrt(m)
            if r * r == m:
                # remaining part is a perfect square, done
                a *= r
                m = 1
                break
        p += 1 if p == 2 else 2
    # leftover m is 1 or prime
    return a, f * m


class ExactReal:
    """An exact real sign * sqrt(radicand), radicand a nonnegative rational.

    Internally stored as coeff * sqrt(core) with core a squarefree positive
    integer and coeff a positive rational, so multiplication and squaring
    never need to refactor large integers.
    """

    __slots__ = ("_sign", "_coeff", "_core")

    def __init__(self, sign: int, radicand) -> None:
        radicand = Fraction(radicand)
        if radicand < 0:
            raise ValueError("radicand must be nonnegative")
        if sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {sign!r}")
        if (sign == 0) != (radicand == 0):
            raise ValueError("sign is 0 exactly when the radicand is 0")
        if sign == 0:
            self._sign, self._coeff, self._core = 0, Fraction(0), 1
            return
        other = _canonical(Fraction(sign), radicand)
        self._sign, self._coeff, self._core = other._sign, other._coeff, other._core

    @classmethod
    def _raw(cls, sign: int, coeff: Fraction, core: int) -> "ExactReal":
        self = cls.__new__(cls)
        self._sign, self._coeff, self._core = sign, coeff, core
        return self

    @classmethod
    def zero(cls) -> "ExactReal":
        return cls._raw(0, Fraction(0), 1)

    @classmethod
    def of(cls, q) -> "ExactReal":
        """The rational q as an exact real."""
        q = Fraction(q)
        if q == 0:
            return cls.zero()
        return cls._raw(1 if q > 0 else -1, abs(q), 1)

    @classmethod
    def sqrt(cls, q) -> "ExactReal":
        """The principal square root of a nonnegative rational."""
        q = Fraction(q)
        if q < 0:
            raise ValueError("square root of a negative rational")
        if q == 0:
            return cls.zero()
        return _canonical(Fraction(1), q)

    @classmethod
    def coeff_sqrt(cls, coeff, radicand) -> "ExactReal":
        """coeff * sqrt(radicand), both exact rationals."""
        coeff = Fraction(coeff)
        radicand = Fraction(radicand)
        if radicand < 0:
            raise ValueError("square root of a negative rational")
        if coeff == 0 or radicand == 0:
            return cls.zero()
        return _canonical(coeff, radicand)

    @property
    def sign(self) -> int:
        return self._sign

    @property
    def radicand(self) -> Fraction:
        """The rational whose square root this is (in lowest terms)."""
        return self._coeff * self._coeff * self._core

    @property
    def coeff(self) -> Fraction:
        """Positive rational part of the canonical coeff*sqrt(core) form."""
        return self._coeff

    @property
    def core(self) -> int:
        """Squarefree part of the canonical coeff*sqrt(core) form."""
        return self._core

    def is_zero(self) -> bool:
        return self._sign == 0

    def square(self) -> Fraction:
        return self._coeff * self._coeff * self._core

    def value(self) -> float:
        if self._sign == 0:
            return 0.0
        return self._sign * sqrt(float(self.radicand))

    def __float__(self) -> float:
        return self.value()

    def __bool__(self) -> bool:
        return self._sign != 0

    def __neg__(self) -> "ExactReal":
        return ExactReal._raw(-self._sign, self._coeff, self._core)

    def __mul__(self, other) -> "ExactReal":
        if isinstance(other, (int, Fraction)):
            other = ExactReal.of(other)
        if not isinstance(other, ExactReal):
            return NotImplemented
        if self._sign == 0 or other._sign == 0:
            return ExactReal.zero()
        g = gcd(self._core, other._core)
        core = (self._core // g) * (other._core // g)
        coeff = self._coeff * other._coeff * g
        return ExactReal._raw(self._sign * other._sign, coeff, core)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ExactReal.of(other)
        if not isinstance(other, ExactReal):
            return NotImplemented
        return (
            self._sign == other._sign
            and self._coeff == other._coeff
            and self._core == other._core
        )

    def __hash__(self) -> int:
        return hash((self._sign, self._coeff, self._core))

    def __repr__(self) -> str:
        if self._sign == 0:
            return "ExactReal(0)"
        s = "-" if self._sign < 0 else ""
        if self._core == 1:
            return f"ExactReal({s}{self._coeff})"
        if self._coeff == 1:
            return f"ExactReal({s}sqrt({self._core}))"
        return f"ExactReal({s}{self._coeff}*sqrt({self._core}))"


def _canonical(coeff: Fraction, radicand: Fraction) -> ExactReal:
    """Build coeff*sqrt(radicand) in canonical squarefree-core form."""
    an, fn = split_square(radicand.numerator)
    ad, fd = split_square(radicand.denominator)
    # sqrt(p/q) = (an / (ad*fd)) * sqrt(fn*fd); fn, fd coprime so the core
    # stays squarefree.
    core = fn * fd
    c = coeff * Fraction(an, ad * fd)
    sign = 1 if c > 0 else -1
    return ExactReal._raw(sign, abs(c), core)
