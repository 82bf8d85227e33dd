"""Certified evaluation of the Dobinski-like series for B^L_{n,r}(x).

    B^L_{n,r}(x) = e^{-x} * sum_{k>=0} <k+2r>_n x^k / k!

Partial sums and tail bounds are exact rationals. The irrational factor e^x
is handled through a rational enclosure [E_lo, E_hi], so the final interval
for B^L_{n,r}(x) is [S / E_hi, (S + tail) / E_lo].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact_core import Rational, as_fraction, frac_decimal, frac_str, rising
from .polynomials import r_lah_bell_poly


@dataclass(frozen=True)
class Enclosure:
    lo: Fraction
    hi: Fraction

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def exp_enclosure(x: Rational, rel_tol: Rational) -> Enclosure:
    """Rational bounds on e^x for x >= 0 from its Taylor series.

    After the term x^J/J!, the remainder is at most
    x^{J+1}/(J+1)! * (J+2)/(J+2-x) once J+2 > x (geometric majorant).
    """
    x = as_fraction(x)
    rel_tol = as_fraction(rel_tol)
    if x < 0:
        raise ValueError("exp_enclosure expects x >= 0")
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    total = Fraction(1)
    term = Fraction(1)
    j = 0
    while True:
        j += 1
        term = term * x / j
        total += term
        if j + 2 > x:
            nxt = term * x / (j + 1)
            remainder = nxt * (j + 2) / (j + 2 - x)
            if remainder <= rel_tol * total:
                return Enclosure(total, total + remainder)


def term(k: int, n: int, r: int, x: Fraction) -> Fraction:
    """t_k = <k+2r>_n x^k / k!."""
    return Fraction(rising(k + 2 * r, n)) * x**k / math.factorial(k)


def term_ratio(j: int, n: int, r: int, x: Rational) -> Fraction:
    """t_{j+1}/t_j = x (j+2r+n) / ((j+2r)(j+1)); needs j + 2r > 0."""
    x = as_fraction(x)
    return x * (j + 2 * r + n) / ((j + 2 * r) * (j + 1))


def contraction_index(n: int, r: int, x: Rational) -> int:
    """First index from which every term ratio is at most 1/2: ceil(2x + n + 2r)."""
    x = as_fraction(x)
    return max(1, math.ceil(2 * x + n + 2 * r))


def tail_bound(k: int, n: int, r: int, x: Rational) -> Fraction:
    """Upper bound on sum_{j>k} t_j, valid for k >= contraction_index.

    Ratios are nonincreasing past the threshold, so the tail is dominated by
    the geometric series t_k (rho + rho^2 + ...) with rho = t_{k+1}/t_k <= 1/2,
    which is itself at most t_k.
    """
    x = as_fraction(x)
    if k < contraction_index(n, r, x):
        raise ValueError(
            f"ratio not yet contractive at k={k} (threshold {contraction_index(n, r, x)})"
        )
    rho = term_ratio(k, n, r, x)
    return term(k, n, r, x) * rho / (1 - rho)


@dataclass(frozen=True)
class DobinskiResult:
    n: int
    r: int
    x: Fraction
    partial_sum: Fraction
    terms_used: int
    tail_bound: Fraction
    exp_bounds: Enclosure
    exact_reference: Fraction

    @property
    def enclosure(self) -> Enclosure:
        """Interval certified to contain e^{-x} * (full series)."""
        return Enclosure(
            self.partial_sum / self.exp_bounds.hi,
            (self.partial_sum + self.tail_bound) / self.exp_bounds.lo,
        )

    @property
    def contains_exact(self) -> bool:
        # S <= value * e^x <= S + tail, with e^x in [E_lo, E_hi]
        v = self.exact_reference
        e = self.exp_bounds
        return v * e.lo <= self.partial_sum + self.tail_bound and self.partial_sum <= v * e.hi

    def to_json(self, digits: int = 30) -> dict:
        enc = self.enclosure
        return {
            "n": self.n,
            "r": self.r,
            "x": frac_str(self.x),
            "partial_sum": frac_str(self.partial_sum),
            "terms_used": self.terms_used,
            "tail_bound": frac_str(self.tail_bound),
            "exp_lo": frac_str(self.exp_bounds.lo),
            "exp_hi": frac_str(self.exp_bounds.hi),
            "enclosure": [frac_str(enc.lo), frac_str(enc.hi)],
            "exact_reference": frac_str(self.exact_reference),
            "contains_exact": self.contains_exact,
            "decimal": {
                "enclosure": [frac_decimal(enc.lo, digits), frac_decimal(enc.hi, digits)],
                "exact_reference": frac_decimal(self.exact_reference, digits),
            },
        }


def dobinski_sum(n: int, r: int, x: Rational = 1, tol: Rational = Fraction(1, 10**12)) -> DobinskiResult:
    """Sum t_k exactly until the tail bound falls below tol * partial_sum.

    ``tol`` is also the relative accuracy requested for the e^x enclosure.
    """
    x = as_fraction(x)
    tol = as_fraction(tol)
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    if tol == 0:
        raise ValueError("nonterminating: tol must be positive")
    if tol < 0:
        raise ValueError("tol must be positive")
    if x <= 0:
        raise ValueError("x must be positive")

    j0 = contraction_index(n, r, x)
    partial = Fraction(0)
    k = 0
    t = term(0, n, r, x)
    while True:
        partial += t
        if k >= j0:
            tail = tail_bound(k, n, r, x)
            if tail < tol * partial:
                break
        k += 1
        if k - 1 + 2 * r > 0 and t != 0:
            t = t * term_ratio(k - 1, n, r, x)
        else:
            t = term(k, n, r, x)

    return DobinskiResult(
        n=n,
        r=r,
        x=x,
        partial_sum=partial,
        terms_used=k + 1,
        tail_bound=tail,
        exp_bounds=exp_enclosure(x, tol),
        exact_reference=r_lah_bell_poly(n, r).eval_at(x),
    )
