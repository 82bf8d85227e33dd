"""Number triangles and sequences: Lah, r-Lah, Stirling, Bell and Lah-Bell.

The r-Lah triangle is built from its three-term recurrence; the closed form
is kept alongside as an independent cross-check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .exact_core import binomial, factorial


class TriangleFamily(str, enum.Enum):
    LAH = "lah"
    RLAH = "rlah"
    STIRLING1 = "s1"
    STIRLING2 = "s2"
    STIRLING2_SHIFTED = "s2shift"


class SequenceFamily(str, enum.Enum):
    BELL = "bell"
    RBELL = "rbell"
    LAHBELL = "lahbell"
    RLAHBELL = "rlahbell"


@dataclass(frozen=True)
class NumberTriangle:
    """Dense lower-triangular table; ``rows[n][k]`` holds entry (n, k)."""

    family: TriangleFamily
    rows: tuple[tuple[int, ...], ...]
    param_r: int = 0
    shift_x: int = 0

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if n < 0 or k < 0 or k > n:
            return 0
        if n > self.n_max:
            raise IndexError(f"row {n} beyond n_max={self.n_max}")
        return self.rows[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]

    def matrix(self) -> list[list[int]]:
        """Square (n_max+1) x (n_max+1) matrix with zeros above the diagonal."""
        size = self.n_max + 1
        return [[self[n, k] for k in range(size)] for n in range(size)]


@dataclass(frozen=True)
class NumberSequence:
    family: SequenceFamily
    values: tuple[int, ...]
    param_r: int = 0

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def _check_n_max(n_max: int) -> None:
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")


def _check_r(r: int) -> None:
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")


def lah_closed(n: int, k: int) -> int:
    """L(n, k) = C(n-1, k-1) n!/k!."""
    if k < 0 or k > n:
        return 0
    return binomial(n - 1, k - 1) * factorial(n) // factorial(k)


def r_lah_closed(n: int, k: int, r: int) -> int:
    """L_r(n, k) = n!/k! * C(n+2r-1, k+2r-1); zero when k > n."""
    _check_r(r)
    if n < 0 or k < 0 or k > n:
        return 0
    return factorial(n) // factorial(k) * binomial(n + 2 * r - 1, k + 2 * r - 1)


def r_lah_triangle(n_max: int, r: int) -> NumberTriangle:
    """L_r(n+1, k) = L_r(n, k-1) + (n + 2r + k) L_r(n, k), from L_r(0, 0) = 1."""
    _check_n_max(n_max)
    _check_r(r)
    rows = [(1,)]
    for n in range(n_max):
        prev = rows[-1]
        new = []
        for k in range(n + 2):
            left = prev[k - 1] if k >= 1 else 0
            here = prev[k] if k <= n else 0
            new.append(left + (n + 2 * r + k) * here)
        rows.append(tuple(new))
    family = TriangleFamily.LAH if r == 0 else TriangleFamily.RLAH
    return NumberTriangle(family, tuple(rows), param_r=r)


def lah_triangle(n_max: int) -> NumberTriangle:
    return r_lah_triangle(n_max, 0)


def stirling1_triangle(n_max: int) -> NumberTriangle:
    """Signed S_1: the monomial coefficients of the falling factorial (x)_n."""
    _check_n_max(n_max)
    rows = [(1,)]
    for n in range(n_max):
        prev = rows[-1]
        new = []
        for k in range(n + 2):
            left = prev[k - 1] if k >= 1 else 0
            here = prev[k] if k <= n else 0
            new.append(left - n * here)
        rows.append(tuple(new))
    return NumberTriangle(TriangleFamily.STIRLING1, tuple(rows))


def stirling2_triangle(n_max: int) -> NumberTriangle:
    _check_n_max(n_max)
    rows = [(1,)]
    for n in range(n_max):
        prev = rows[-1]
        new = []
        for k in range(n + 2):
            left = prev[k - 1] if k >= 1 else 0
            here = prev[k] if k <= n else 0
            new.append(left + k * here)
        rows.append(tuple(new))
    return NumberTriangle(TriangleFamily.STIRLING2, tuple(rows))


def stirling2_shifted_triangle(n_max: int, x: int) -> NumberTriangle:
    """S_2(n, k | x) = sum_m C(n, m) x^(n-m) S_2(m, k), the EGF e^{xt}(e^t-1)^k/k!."""
    s2 = stirling2_triangle(n_max)
    rows = []
    for n in range(n_max + 1):
        rows.append(
            tuple(
                sum(binomial(n, m) * x ** (n - m) * s2[m, k] for m in range(k, n + 1))
                for k in range(n + 1)
            )
        )
    return NumberTriangle(TriangleFamily.STIRLING2_SHIFTED, tuple(rows), shift_x=x)


def bell_numbers(n_max: int) -> NumberSequence:
    s2 = stirling2_triangle(n_max)
    return NumberSequence(SequenceFamily.BELL, tuple(sum(row) for row in s2.rows))


def r_bell_numbers(n_max: int, r: int) -> NumberSequence:
    """B_{n,r} = sum_m C(n, m) r^(n-m) B_m, i.e. the EGF e^{rt} e^{e^t - 1}."""
    _check_r(r)
    bell = bell_numbers(n_max)
    values = tuple(
        sum(binomial(n, m) * r ** (n - m) * bell[m] for m in range(n + 1))
        for n in range(n_max + 1)
    )
    return NumberSequence(SequenceFamily.RBELL, values, param_r=r)


def r_lah_bell_numbers(n_max: int, r: int) -> NumberSequence:
    """Row sums of the r-Lah triangle; r = 0 gives the Lah-Bell numbers."""
    tri = r_lah_triangle(n_max, r)
    family = SequenceFamily.LAHBELL if r == 0 else SequenceFamily.RLAHBELL
    return NumberSequence(family, tuple(sum(row) for row in tri.rows), param_r=r)


def lah_bell_numbers(n_max: int) -> NumberSequence:
    return r_lah_bell_numbers(n_max, 0)

