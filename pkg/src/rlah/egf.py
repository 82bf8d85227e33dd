"""Truncated power series over the rationals.

Series are stored by ordinary coefficients c_0..c_N (meaning sum c_n t^n mod
t^{N+1}); :meth:`TruncSeries.egf` turns them into EGF coefficients c_n n!.
All operations are exact, so two series built along different routes can
be compared with ``==``.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable

from .exact_core import Rational, factorial, frac_str

DEFAULT_ORDER = 25


class SeriesError(ValueError):
    pass


class TruncSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise SeriesError(f"order must be >= 0, got {order}")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise SeriesError("a truncated series needs at least one coefficient")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([1], order)

    @classmethod
    def t(cls, order: int) -> "TruncSeries":
        return cls([0, 1], order)

    @classmethod
    def from_egf(cls, values: Iterable[Rational], order: int) -> "TruncSeries":
        """Series whose EGF coefficients are ``values``."""
        return cls((Fraction(v) / factorial(n) for n, v in enumerate(values)), order)

    # -- accessors ------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def egf(self, n: int | None = None):
        """EGF coefficient c_n n!, or the whole list when ``n`` is None."""
        if n is None:
            return [c * factorial(i) for i, c in enumerate(self.coeffs)]
        return self.coeffs[n] * factorial(n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncSeries(order={self.order}, {[str(c) for c in self.coeffs]})"

    def to_json(self, egf: bool = False) -> list[str]:
        values = self.egf() if egf else self.coeffs
        return [frac_str(c) for c in values]

    # -- ring operations ------------------------------------------------

    def _coerce(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            if other.order != self.order:
                raise SeriesError(f"order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return TruncSeries([other], self.order)
        raise TypeError(f"cannot combine TruncSeries with {type(other).__name__}")

    def __add__(self, other) -> "TruncSeries":
        other = self._coerce(other)
        return TruncSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(-a for a in self.coeffs)

    def __sub__(self, other) -> "TruncSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "TruncSeries":
        if isinstance(other, (int, Fraction)):
            return TruncSeries(a * other for a in self.coeffs)
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        size = len(a)
        out = [Fraction(0)] * size
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j in range(size - i):
                out[i + j] += ai * b[j]
        return TruncSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncSeries":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self * self._coerce(other).reciprocal()

    def __pow__(self, k: int) -> "TruncSeries":
        if not isinstance(k, int) or k < 0:
            raise SeriesError("only nonnegative integer powers are supported")
        result = TruncSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def reciprocal(self) -> "TruncSeries":
        a = self.coeffs
        if a[0] == 0:
            raise SeriesError("not invertible: zero constant term")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, len(a)):
            acc = sum((a[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out.append(-acc * inv0)
        return TruncSeries(out)

    def derivative(self) -> "TruncSeries":
        """Formal derivative, padded with a zero so the order is preserved."""
        return TruncSeries([n * c for n, c in enumerate(self.coeffs)][1:] + [0])

    # -- transcendental operations -------------------------------------

    def exp(self) -> "TruncSeries":
        """exp of a series with zero constant term, via n g_n = sum k f_k g_{n-k}."""
        f = self.coeffs
        if f[0] != 0:
            raise SeriesError("constant-term constraint: exp needs c_0 = 0")
        g = [Fraction(1)]
        for n in range(1, len(f)):
            acc = sum((k * f[k] * g[n - k] for k in range(1, n + 1)), Fraction(0))
            g.append(acc / n)
        return TruncSeries(g)

    def log(self) -> "TruncSeries":
        """log of a series with constant term 1, via s l' = s'."""
        s = self.coeffs
        if s[0] != 1:
            raise SeriesError("constant-term constraint: log needs c_0 = 1")
        l = [Fraction(0)]
        for n in range(1, len(s)):
            acc = sum((k * l[k] * s[n - k] for k in range(1, n)), Fraction(0))
            l.append((n * s[n] - acc) / n)
        return TruncSeries(l)

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """self(inner(t)) mod t^{N+1}, by Horner over the series ring."""
        inner = self._coerce(inner)
        if inner.coeffs[0] != 0:
            raise SeriesError("composition requires zero constant term")
        result = TruncSeries.zero(self.order)
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    __call__ = compose


def series_exp(s: TruncSeries) -> TruncSeries:
    return s.exp()


def series_log(s: TruncSeries) -> TruncSeries:
    return s.log()


def series_compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    return outer.compose(inner)


# -- named building blocks --------------------------------------------


def geometric(order: int) -> TruncSeries:
    """1/(1-t)."""
    return TruncSeries([1, -1], order).reciprocal()


def exp_t(order: int, scale: Rational = 1) -> TruncSeries:
    """e^{scale * t}."""
    return (TruncSeries.t(order) * Fraction(scale)).exp()


def neg_log_one_minus_t(order: int) -> TruncSeries:
    """-log(1-t), the substitution turning e^t into 1/(1-t)."""
    return -TruncSeries([1, -1], order).log()


def one_minus_exp_neg_t(order: int) -> TruncSeries:
    """1 - e^{-t}, the inverse substitution of -log(1-t)."""
    return 1 - exp_t(order, -1)


class EgfFamily(str, enum.Enum):
    LAH_COLUMN = "lah_column"
    RLAH_COLUMN = "rlah_column"
    RLAH_BELL = "rlah_bell"
    RLAH_BELL_POLY = "rlah_bell_poly"
    STIRLING1_COLUMN = "stirling1_column"
    STIRLING2_COLUMN = "stirling2_column"
    STIRLING2_SHIFTED_COLUMN = "stirling2_shifted_column"
    BELL_POLY = "bell_poly"
    RBELL = "rbell"


def egf_of(
    family: EgfFamily | str,
    r: int = 0,
    k: int = 0,
    x: Rational = 1,
    order: int = DEFAULT_ORDER,
) -> TruncSeries:
    """Materialize a named generating function to order ``order``.

    ``k`` selects the column for the column families and ``x`` is the
    polynomial argument (Lah-Bell / Bell polynomials) or the shift of the
    shifted Stirling column. ``r`` is the r-Lah / r-Bell parameter.
    """
    family = EgfFamily(family)
    if r < 0 or k < 0 or order < 0:
        raise SeriesError("r, k and order must be nonnegative")
    geo = geometric(order)
    lah_base = geo - 1  # 1/(1-t) - 1 = t/(1-t)

    if family is EgfFamily.LAH_COLUMN:
        return lah_base**k / factorial(k)
    if family is EgfFamily.RLAH_COLUMN:
        return lah_base**k * geo ** (2 * r) / factorial(k)
    if family is EgfFamily.RLAH_BELL:
        return lah_base.exp() * geo ** (2 * r)
    if family is EgfFamily.RLAH_BELL_POLY:
        return (lah_base * Fraction(x)).exp() * geo ** (2 * r)
    if family is EgfFamily.STIRLING1_COLUMN:
        return TruncSeries([1, 1], order).log() ** k / factorial(k)
    if family is EgfFamily.STIRLING2_COLUMN:
        return (exp_t(order) - 1) ** k / factorial(k)
    if family is EgfFamily.STIRLING2_SHIFTED_COLUMN:
        return exp_t(order, x) * (exp_t(order) - 1) ** k / factorial(k)
    if family is EgfFamily.BELL_POLY:
        return ((exp_t(order) - 1) * Fraction(x)).exp()
    if family is EgfFamily.RBELL:
        return (exp_t(order) - 1 + TruncSeries.t(order) * r).exp()
    raise SeriesError(f"unknown family {family}")
