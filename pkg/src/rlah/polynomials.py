"""Exact univariate polynomials in the monomial basis.

Factorial bases, Lah-Bell and Bell polynomials are materialized as
:class:`ExactPoly` values so that identities reduce to coefficient equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact_core import Rational, frac_str
from .tables import r_lah_triangle, stirling1_triangle, stirling2_triangle


class ExactPoly:
    """Polynomial with Fraction coefficients; ``coeffs[i]`` multiplies x**i.

    Trailing zeros are stripped on construction, so the zero polynomial has
    an empty coefficient tuple and ``==`` is plain coefficient comparison.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Rational) -> "ExactPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "ExactPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ExactPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"ExactPoly({[str(c) for c in self.coeffs]})"

    def __add__(self, other) -> "ExactPoly":
        other = _lift(other)
        size = max(len(self), len(other))
        return ExactPoly(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "ExactPoly":
        return ExactPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "ExactPoly":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "ExactPoly":
        return _lift(other) - self

    def __mul__(self, other) -> "ExactPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, ExactPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ExactPoly()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ExactPoly(out)

    __rmul__ = __mul__

    def scale(self, c: Rational) -> "ExactPoly":
        return ExactPoly(c * a for a in self.coeffs)

    def eval_at(self, x: Rational) -> Fraction:
        """Horner evaluation, exact."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = eval_at

    def to_json(self) -> list[str]:
        return [frac_str(c) for c in self.coeffs]


def _lift(value) -> ExactPoly:
    if isinstance(value, ExactPoly):
        return value
    return ExactPoly([value])


def linear_combination(weights: Sequence[Rational], basis: Sequence[ExactPoly]) -> ExactPoly:
    out = ExactPoly()
    for w, p in zip(weights, basis):
        if w:
            out = out + p.scale(w)
    return out


def falling_basis(n: int) -> ExactPoly:
    """(x)_n expanded into monomials."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    out = ExactPoly.constant(1)
    for i in range(n):
        out = out * ExactPoly([-i, 1])
    return out


def rising_shifted(n: int, shift: int) -> ExactPoly:
    """<x + shift>_n expanded into monomials."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    out = ExactPoly.constant(1)
    for i in range(n):
        out = out * ExactPoly([shift + i, 1])
    return out


def lemma1_sides(n: int, r: int) -> tuple[ExactPoly, ExactPoly]:
    """Both sides of <x+2r>_n = sum_k L_r(n,k) (x)_k as monomial polynomials."""
    lhs = rising_shifted(n, 2 * r)
    row = r_lah_triangle(n, r).row(n)
    rhs = linear_combination(row, [falling_basis(k) for k in range(n + 1)])
    return lhs, rhs


def r_lah_bell_poly(n: int, r: int) -> ExactPoly:
    return ExactPoly(r_lah_triangle(n, r).row(n))


def lah_bell_poly(n: int) -> ExactPoly:
    return r_lah_bell_poly(n, 0)


def bell_poly(n: int) -> ExactPoly:
    return ExactPoly(stirling2_triangle(n).row(n))


def stirling2_expansion(n: int) -> ExactPoly:
    """sum_k S_2(n,k) (x)_k; equals x**n."""
    row = stirling2_triangle(n).row(n)
    return linear_combination(row, [falling_basis(k) for k in range(n + 1)])


def eq40_weights(n: int, r: int) -> list[int]:
    """c_l = sum_{k=l..n} L_r(n,k) S_1(k,l), the weights on B_l(x) in Eq. (40) form."""
    lr = r_lah_triangle(n, r)
    s1 = stirling1_triangle(n)
    return [sum(lr[n, k] * s1[k, l] for k in range(l, n + 1)) for l in range(n + 1)]


def eq40_poly(n: int, r: int) -> ExactPoly:
    """sum_l c_l B_l(x), which must reproduce B^L_{n,r}(x)."""
    weights = eq40_weights(n, r)
    return linear_combination(weights, [bell_poly(l) for l in range(n + 1)])
