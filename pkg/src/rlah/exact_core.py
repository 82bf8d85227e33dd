"""Exact scalar primitives shared by every other module.

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``;
both are arbitrary precision, so nothing here ever rounds or overflows.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial needs n >= 0, got {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the edge convention the r-Lah closed form needs.

    ``binomial(-1, -1) == 1`` and ``binomial(m, -1) == 0`` for ``m >= 0``, so
    that ``n!/k! * C(n+2r-1, k+2r-1)`` gives ``L_0(0, 0) = 1`` and
    ``L_0(n, 0) = 0`` for ``n >= 1``. Upper indices below -1 are rejected.
    """
    if n < -1:
        raise ValueError(f"binomial upper index must be >= -1, got {n}")
    if n == k:
        return 1
    if n == -1 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling(x: Rational, n: int) -> Rational:
    """(x)_n = x(x-1)...(x-n+1), with (x)_0 = 1."""
    if n < 0:
        raise ValueError(f"falling factorial needs n >= 0, got {n}")
    out: Rational = 1
    for i in range(n):
        out *= x - i
    return out


def rising(x: Rational, n: int) -> Rational:
    """<x>_n = x(x+1)...(x+n-1), with <x>_0 = 1."""
    if n < 0:
        raise ValueError(f"rising factorial needs n >= 0, got {n}")
    out: Rational = 1
    for i in range(n):
        out *= x + i
    return out


def as_fraction(value) -> Fraction:
    """Parse ints, Fractions and strings such as ``"7/3"`` or ``"0.5"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    return Fraction(value)


def frac_str(value: Rational) -> str:
    """Render an exact rational as ``"p/q"`` (integers get ``/1``)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def frac_decimal(value: Rational, digits: int = 30) -> str:
    """Decimal rendering to ``digits`` significant digits, for humans only."""
    from decimal import Context, Decimal

    value = Fraction(value)
    ctx = Context(prec=digits)
    return str(ctx.divide(Decimal(value.numerator), Decimal(value.denominator)))
