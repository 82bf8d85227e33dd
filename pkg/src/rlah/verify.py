"""Identity harness.

Every suite evaluates both sides of one identity over a parameter grid, using
computation routes that only share the scalar primitives in ``exact_core``,
and collects the mismatches. Reports serialize deterministically: cases are
produced in sorted parameter order and timings are kept out of the JSON.
"""

from __future__ import annotations

import dataclasses
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from . import egf as E
from .dobinski import dobinski_sum
from .exact_core import binomial, frac_str, rising
from .oracle import ORACLE_CAP, enumerate_ordered_partitions
from .poisson_lab import (
    MAX_SAMPLER_ALPHA,
    MAX_STATISTIC_N,
    PoissonSpec,
    draw_samples,
    exact_moment,
    mc_moment,
    moment_via_eq40,
    pmf_check,
    series_moment,
)
from .polynomials import (
    ExactPoly,
    eq40_poly,
    lemma1_sides,
    r_lah_bell_poly,
)
from .tables import (
    lah_closed,
    r_bell_numbers,
    r_lah_bell_numbers,
    r_lah_closed,
    r_lah_triangle,
    stirling1_triangle,
    stirling2_shifted_triangle,
    stirling2_triangle,
)

Z_GATE = 5.0
MAX_LISTED_FAILURES = 20

# hard caps; grids beyond these are refused rather than silently clipped
CAPS = {
    "n_max": 60,
    "r_max": 12,
    "order": 40,
    "samples": 10**7,
    "mc_n": MAX_STATISTIC_N,
    "dobinski_n": 30,
    "oracle": ORACLE_CAP,
}


class GridError(ValueError):
    """Grid outside a hard cap or empty; ``flag`` names the CLI option at fault."""

    def __init__(self, message: str, flag: str = ""):
        super().__init__(message)
        self.flag = flag


@dataclass(frozen=True)
class Grid:
    n_max: int
    r_max: int = 0
    order: int = E.DEFAULT_ORDER
    tol: Fraction = Fraction(1, 10**12)
    samples: int = 10**6
    seed: int = 42
    points: tuple[Fraction, ...] = ()


@dataclass(frozen=True)
class VerifyConfig:
    """Overrides applied on top of each suite's default grid; None keeps the default."""

    suites: tuple[str, ...] = ()
    n_max: int | None = None
    r_max: int | None = None
    order: int | None = None
    tol: Fraction | None = None
    samples: int | None = None
    seed: int | None = None

    def grid_for(self, suite_id: str) -> Grid:
        grid = SUITES[suite_id].default_grid
        changes = {
            name: getattr(self, name)
            for name in ("n_max", "r_max", "order", "tol", "samples", "seed")
            if getattr(self, name) is not None
        }
        return dataclasses.replace(grid, **changes)


@dataclass
class Case:
    params: dict
    lhs: object
    rhs: object
    ok: bool


@dataclass
class VerifyReport:
    suite: str
    statement: str
    paths: tuple[str, str]
    cases: int
    failures: list[Case]
    verdict: str
    elapsed: float = 0.0
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict in ("pass", "expected-fail")

    def to_json(self, include_timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "statement": self.statement,
            "paths": list(self.paths),
            "cases": self.cases,
            "failure_count": len(self.failures),
            "failures": [
                {"params": f.params, "lhs": render(f.lhs), "rhs": render(f.rhs)}
                for f in self.failures[:MAX_LISTED_FAILURES]
            ],
            "verdict": self.verdict,
        }
        if self.note:
            out["note"] = self.note
        if include_timing:
            out["elapsed_s"] = round(self.elapsed, 3)
        return out


def render(value):
    """JSON-safe rendering that keeps rationals exact."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return frac_str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, (ExactPoly, E.TruncSeries)):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render(v) for v in value]
    return str(value)


@dataclass(frozen=True)
class Suite:
    id: str
    statement: str
    paths: tuple[str, str]
    default_grid: Grid
    cases: Callable[[Grid], Iterator[Case]]
    check_grid: Callable[[Grid], None] = lambda grid: None
    expect_fail: Callable[[Grid], bool] = lambda grid: False
    note: str = ""


def _case(params: dict, lhs, rhs) -> Case:
    return Case(params, lhs, rhs, lhs == rhs)


def _signed(n: int, k: int) -> int:
    return -1 if (n - k) % 2 else 1


def _pts(*values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


# -- suite bodies -------------------------------------------------------


def _lemma1(g: Grid) -> Iterator[Case]:
    for n in range(g.n_max + 1):
        for r in range(g.r_max + 1):
            lhs, rhs = lemma1_sides(n, r)
            yield _case({"n": n, "r": r}, lhs, rhs)


def _prop2(g: Grid) -> Iterator[Case]:
    for r in range(g.r_max + 1):
        tri = r_lah_triangle(g.n_max, r)
        for n in range(g.n_max + 1):
            closed = [r_lah_closed(n, k, r) for k in range(n + 1)]
            yield _case({"r": r, "n": n, "via": "closed_form"}, list(tri.row(n)), closed)
        order = min(g.order, g.n_max)
        for k in range(order + 1):
            column = E.egf_of(E.EgfFamily.RLAH_COLUMN, r=r, k=k, order=order).egf()
            expected = [Fraction(tri[n, k]) for n in range(order + 1)]
            yield _case({"r": r, "k": k, "via": "egf_column"}, expected, column)


def _thm3(g: Grid) -> Iterator[Case]:
    order = g.order
    for r in range(g.r_max + 1):
        closed = E.egf_of(E.EgfFamily.RLAH_BELL, r=r, order=order)
        sums = r_lah_bell_numbers(order, r)
        yield _case({"r": r, "via": "row_sums"}, [Fraction(v) for v in sums.values], closed.egf())
        columns = E.TruncSeries.zero(order)
        for k in range(order + 1):
            columns = columns + E.egf_of(E.EgfFamily.RLAH_COLUMN, r=r, k=k, order=order)
        yield _case({"r": r, "via": "column_sum"}, columns, closed)


def _dobinski_cases(g: Grid, points: Iterable[Fraction], numbers: bool) -> Iterator[Case]:
    for x in points:
        for r in range(g.r_max + 1):
            values = r_lah_bell_numbers(g.n_max, r) if numbers else None
            for n in range(g.n_max + 1):
                res = dobinski_sum(n, r, x, g.tol)
                exact = Fraction(values[n]) if numbers else r_lah_bell_poly(n, r).eval_at(x)
                enc = res.enclosure
                ok = exact in enc
                yield Case({"x": frac_str(x), "r": r, "n": n}, exact, [enc.lo, enc.hi], ok)


def _thm4(g: Grid) -> Iterator[Case]:
    yield from _dobinski_cases(g, g.points or _pts(1), numbers=True)


def _thm5(g: Grid) -> Iterator[Case]:
    yield from _dobinski_cases(g, g.points, numbers=False)


def _signed_transform(matrix, seq) -> list[int]:
    n_max = len(seq) - 1
    return [
        sum(_signed(n, k) * matrix[n, k] * seq[k] for k in range(n + 1)) for n in range(n_max + 1)
    ]


def _substitution_order(g: Grid) -> int:
    return min(g.order, 20)


def _thm6_fwd(g: Grid) -> Iterator[Case]:
    s1 = stirling1_triangle(g.n_max)
    for r in range(g.r_max + 1):
        lahbell = r_lah_bell_numbers(g.n_max, r).values
        rbell = r_bell_numbers(g.n_max, 2 * r).values
        transformed = _signed_transform(s1, rbell)
        for n in range(g.n_max + 1):
            yield _case({"r": r, "n": n}, lahbell[n], transformed[n])
    order = _substitution_order(g)
    inner = E.neg_log_one_minus_t(order)
    for r in range(g.r_max + 1):
        lhs = E.egf_of(E.EgfFamily.RLAH_BELL, r=r, order=order)
        rhs = E.egf_of(E.EgfFamily.RBELL, r=2 * r, order=order).compose(inner)
        yield _case({"r": r, "via": "egf_substitution"}, lhs, rhs)


def _thm6_inv(g: Grid) -> Iterator[Case]:
    s1 = stirling1_triangle(g.n_max)
    s2 = stirling2_triangle(g.n_max)
    for r in range(g.r_max + 1):
        lahbell = r_lah_bell_numbers(g.n_max, r).values
        rbell = r_bell_numbers(g.n_max, 2 * r).values
        transformed = _signed_transform(s2, lahbell)
        for n in range(g.n_max + 1):
            yield _case({"r": r, "n": n}, rbell[n], transformed[n])
    # composing the two transforms in either order is the identity
    generic = [(-1) ** n * (n * n + 3 * n + 7) for n in range(g.n_max + 1)]
    for r in range(g.r_max + 1):
        lahbell = list(r_lah_bell_numbers(g.n_max, r).values)
        rbell = list(r_bell_numbers(g.n_max, 2 * r).values)
        yield _case(
            {"r": r, "via": "compose_fwd_inv"},
            lahbell,
            _signed_transform(s1, _signed_transform(s2, lahbell)),
        )
        yield _case(
            {"r": r, "via": "compose_inv_fwd"},
            rbell,
            _signed_transform(s2, _signed_transform(s1, rbell)),
        )
    yield _case({"via": "compose_generic"}, generic, _signed_transform(s1, _signed_transform(s2, generic)))
    order = _substitution_order(g)
    inner = E.one_minus_exp_neg_t(order)
    for r in range(g.r_max + 1):
        lhs = E.egf_of(E.EgfFamily.RBELL, r=2 * r, order=order)
        rhs = E.egf_of(E.EgfFamily.RLAH_BELL, r=r, order=order).compose(inner)
        yield _case({"r": r, "via": "egf_substitution"}, lhs, rhs)


def _lemma7(g: Grid) -> Iterator[Case]:
    for r in range(g.r_max + 1):
        tri = r_lah_triangle(g.n_max, r)
        for n in range(g.n_max + 1):
            rhs = [
                sum(
                    binomial(n, m) * lah_closed(m, k) * rising(2 * r, n - m)
                    for m in range(k, n + 1)
                )
                for k in range(n + 1)
            ]
            yield _case({"r": r, "n": n}, list(tri.row(n)), rhs)


def _thm8(g: Grid) -> Iterator[Case]:
    s1 = stirling1_triangle(g.n_max)
    for r in range(g.r_max + 1):
        s2x = stirling2_shifted_triangle(g.n_max, 2 * r)
        for n in range(g.n_max + 1):
            lhs = [r_lah_closed(n, k, r) for k in range(n + 1)]
            rhs = [
                sum(_signed(n, m) * s2x[m, k] * s1[n, m] for m in range(k, n + 1))
                for k in range(n + 1)
            ]
            yield _case({"r": r, "n": n}, lhs, rhs)
    order = _substitution_order(g)
    inner = E.neg_log_one_minus_t(order)
    for r in range(g.r_max + 1):
        for k in range(order + 1):
            lhs = E.egf_of(E.EgfFamily.RLAH_COLUMN, r=r, k=k, order=order)
            outer = E.egf_of(E.EgfFamily.STIRLING2_SHIFTED_COLUMN, k=k, x=2 * r, order=order)
            yield _case({"r": r, "k": k, "via": "egf_substitution"}, lhs, outer.compose(inner))


def _cor9(g: Grid, literal: bool) -> Iterator[Case]:
    s2 = stirling2_triangle(g.n_max)
    for n in range(g.n_max + 1):
        for r in range(g.r_max + 1):
            lr = r_lah_triangle(g.n_max, r)
            s2x = stirling2_shifted_triangle(n, 2 * r)
            lhs = list(s2x.row(n))
            rhs = [
                sum(
                    (1 if literal else _signed(n, m)) * s2[n, m] * lr[m, k]
                    for m in range(k, n + 1)
                )
                for k in range(n + 1)
            ]
            yield _case({"n": n, "r": r}, lhs, rhs)
    if literal:
        return
    order = _substitution_order(g)
    inner = E.one_minus_exp_neg_t(order)
    for r in range(g.r_max + 1):
        for k in range(order + 1):
            lhs = E.egf_of(E.EgfFamily.STIRLING2_SHIFTED_COLUMN, k=k, x=2 * r, order=order)
            outer = E.egf_of(E.EgfFamily.RLAH_COLUMN, r=r, k=k, order=order)
            yield _case({"r": r, "k": k, "via": "egf_substitution"}, lhs, outer.compose(inner))


def _thm10(g: Grid) -> Iterator[Case]:
    for r in range(g.r_max + 1):
        lr = r_lah_triangle(g.n_max, r)
        for n in range(2, g.n_max + 1):
            for m in range(1, n):
                for k in range(1, n - m + 1):
                    lhs = binomial(m + k, m) * r_lah_closed(n, m + k, 2 * r)
                    rhs = sum(
                        binomial(n, l) * lr[l, m] * lr[n - l, k] for l in range(m, n - k + 1)
                    )
                    yield _case({"r": r, "n": n, "m": m, "k": k}, lhs, rhs)
    order = _substitution_order(g)
    for r in range(g.r_max + 1):
        cols = [E.egf_of(E.EgfFamily.RLAH_COLUMN, r=r, k=k, order=order) for k in range(order + 1)]
        cols2 = [
            E.egf_of(E.EgfFamily.RLAH_COLUMN, r=2 * r, k=k, order=order) for k in range(order + 1)
        ]
        for m in range(1, order):
            for k in range(1, order - m + 1):
                yield _case(
                    {"r": r, "m": m, "k": k, "via": "egf_product"},
                    cols[m] * cols[k],
                    cols2[m + k] * binomial(m + k, m),
                )


def _thm11_exact(g: Grid) -> Iterator[Case]:
    for alpha in g.points:
        for r in range(g.r_max + 1):
            for n in range(g.n_max + 1):
                yield _case(
                    {"alpha": frac_str(alpha), "r": r, "n": n},
                    exact_moment(n, r, alpha),
                    moment_via_eq40(n, r, alpha),
                )


def _thm11_series(g: Grid) -> Iterator[Case]:
    for alpha in g.points:
        for r in range(g.r_max + 1):
            for n in range(g.n_max + 1):
                exact = moment_via_eq40(n, r, alpha)
                enc = series_moment(n, r, alpha, g.tol)
                yield Case(
                    {"alpha": frac_str(alpha), "r": r, "n": n},
                    exact,
                    [enc.lo, enc.hi],
                    exact in enc,
                )


def _thm11_mc(g: Grid) -> Iterator[Case]:
    for alpha in g.points:
        spec = PoissonSpec(alpha, seed=g.seed, samples=g.samples)
        xs = draw_samples(spec)
        for r in range(g.r_max + 1):
            for n in range(g.n_max + 1):
                rep = mc_moment(n, r, spec, g.tol, xs=xs)
                yield Case(
                    {"alpha": frac_str(alpha), "r": r, "n": n},
                    {"estimate": rep.mc_estimate, "stderr": rep.mc_stderr, "z": rep.z_score},
                    rep.exact_value,
                    abs(rep.z_score) <= Z_GATE,
                )
    spec = PoissonSpec(1, seed=g.seed, samples=g.samples)
    for bucket in pmf_check(spec, i_max=8):
        yield Case(
            {"alpha": "1/1", "pmf_bucket": bucket.i},
            {"observed": bucket.observed, "z": bucket.z_score},
            bucket.expected,
            abs(bucket.z_score) <= Z_GATE,
        )


def _eq40(g: Grid) -> Iterator[Case]:
    for r in range(g.r_max + 1):
        for n in range(g.n_max + 1):
            direct = r_lah_bell_poly(n, r)
            expanded = eq40_poly(n, r)
            yield _case({"r": r, "n": n, "via": "coefficients"}, direct, expanded)
            for x in g.points:
                yield _case(
                    {"r": r, "n": n, "x": frac_str(x)}, direct.eval_at(x), expanded.eval_at(x)
                )


def _s1s2_inverse(g: Grid) -> Iterator[Case]:
    size = g.n_max + 1
    a = stirling1_triangle(g.n_max).matrix()
    b = stirling2_triangle(g.n_max).matrix()
    ident = [[int(i == j) for j in range(size)] for i in range(size)]

    def matmul(x, y):
        return [[sum(x[i][l] * y[l][j] for l in range(size)) for j in range(size)] for i in range(size)]

    yield _case({"product": "S1*S2"}, matmul(a, b), ident)
    yield _case({"product": "S2*S1"}, matmul(b, a), ident)


def _oracle_match(g: Grid) -> Iterator[Case]:
    # n_max bounds n + r here
    for total in range(g.n_max + 1):
        for r in range(min(total, g.r_max) + 1):
            n = total - r
            count = enumerate_ordered_partitions(n, r)
            tri = r_lah_triangle(n, r)
            by_k = [count.counts_by_k.get(k, 0) for k in range(n + 1)]
            yield _case({"n": n, "r": r, "via": "counts_by_k"}, by_k, list(tri.row(n)))
            yield _case(
                {"n": n, "r": r, "via": "total"}, count.total, r_lah_bell_numbers(n, r)[n]
            )


# -- grid checks --------------------------------------------------------


def _check_common(g: Grid) -> None:
    if g.n_max < 0 or g.r_max < 0:
        raise GridError("empty grid: n_max and r_max must be >= 0", "--n-max/--r-max")
    if g.n_max > CAPS["n_max"]:
        raise GridError(f"n_max={g.n_max} exceeds cap n_max<={CAPS['n_max']}", "--n-max")
    if g.r_max > CAPS["r_max"]:
        raise GridError(f"r_max={g.r_max} exceeds cap r_max<={CAPS['r_max']}", "--r-max")
    if not 0 <= g.order <= CAPS["order"]:
        raise GridError(f"order={g.order} outside 0..{CAPS['order']}", "--order")
    if g.tol <= 0:
        raise GridError("tol must be positive", "--tol")


def _check_dobinski(g: Grid) -> None:
    _check_common(g)
    if g.n_max > CAPS["dobinski_n"]:
        raise GridError(f"n_max={g.n_max} exceeds cap dobinski_n<={CAPS['dobinski_n']}", "--n-max")


def _check_points(g: Grid) -> None:
    if not g.points:
        raise GridError("empty grid: no evaluation points", "--suite")


def _check_mc(g: Grid) -> None:
    _check_common(g)
    _check_points(g)
    if g.n_max > CAPS["mc_n"]:
        raise GridError(f"n_max={g.n_max} exceeds cap mc_n<={CAPS['mc_n']}", "--n-max")
    if not 1 <= g.samples <= CAPS["samples"]:
        raise GridError(f"samples={g.samples} outside 1..{CAPS['samples']}", "--samples")
    if any(a > MAX_SAMPLER_ALPHA for a in g.points):
        raise GridError(f"alpha exceeds sampler cap {MAX_SAMPLER_ALPHA}", "--suite")


def _check_oracle(g: Grid) -> None:
    _check_common(g)
    if g.n_max > CAPS["oracle"]:
        raise GridError(f"n_max={g.n_max} exceeds cap oracle n+r<={CAPS['oracle']}", "--n-max")


def _check_with_points(g: Grid) -> None:
    _check_common(g)
    _check_points(g)


# -- registry -----------------------------------------------------------

_EXACT = Grid(n_max=25, r_max=4, order=25)
_COR9_NOTE = (
    "literal sign factor (-1)^(m-m) is identically 1; the substitution t -> 1-e^{-t} "
    "produces (-1)^(n-m), which is what cor9_corrected checks"
)

SUITES: dict[str, Suite] = {
    s.id: s
    for s in [
        Suite(
            "lemma1",
            "<x+2r>_n = sum_k L_r(n,k) (x)_k",
            ("expanded rising factorial", "r-Lah recurrence row times falling-factorial basis"),
            Grid(n_max=20, r_max=4),
            _lemma1,
            _check_common,
        ),
        Suite(
            "prop2",
            "L_r(n+1,k) = L_r(n,k-1) + (n+2r+k) L_r(n,k)",
            ("recurrence triangle", "closed form n!/k! C(n+2r-1,k+2r-1) and EGF column extraction"),
            _EXACT,
            _prop2,
            _check_common,
        ),
        Suite(
            "thm3",
            "exp(1/(1-t)-1) (1-t)^(-2r) = sum_n B^L_{n,r} t^n/n!",
            ("truncated series exp and powers", "recurrence row sums and summed column EGFs"),
            _EXACT,
            _thm3,
            _check_common,
        ),
        Suite(
            "thm4",
            "B^L_{n,r} = e^{-1} sum_k <k+2r>_n / k!",
            ("certified Dobinski enclosure", "recurrence row sums"),
            Grid(n_max=12, r_max=3, points=_pts(1)),
            _thm4,
            _check_dobinski,
        ),
        Suite(
            "thm5",
            "B^L_{n,r}(x) = e^{-x} sum_k <k+2r>_n x^k / k!",
            ("certified Dobinski enclosure", "Lah-Bell polynomial evaluation"),
            Grid(n_max=12, r_max=3, points=_pts("1/2", 1, 2)),
            _thm5,
            _check_with_points,
        ),
        Suite(
            "thm6_fwd",
            "B^L_{n,r} = sum_k (-1)^(n-k) S_1(n,k) B_{k,2r}",
            ("r-Lah row sums", "signed Stirling-1 transform of r-Bell numbers; EGF substitution t -> -log(1-t)"),
            Grid(n_max=25, r_max=5, order=20),
            _thm6_fwd,
            _check_common,
        ),
        Suite(
            "thm6_inv",
            "B_{n,2r} = sum_k (-1)^(n-k) S_2(n,k) B^L_{k,r}",
            ("r-Bell binomial expansion", "signed Stirling-2 transform of r-Lah-Bell numbers; EGF substitution t -> 1-e^{-t}"),
            Grid(n_max=25, r_max=5, order=20),
            _thm6_inv,
            _check_common,
        ),
        Suite(
            "lemma7",
            "L_r(n,k) = sum_m C(n,m) L(m,k) <2r>_(n-m)",
            ("r-Lah recurrence", "Lah closed form convolved with rising factorials"),
            Grid(n_max=25, r_max=5),
            _lemma7,
            _check_common,
        ),
        Suite(
            "thm8",
            "L_r(n,k) = sum_m (-1)^(n-m) S_2(m,k|2r) S_1(n,m)",
            ("r-Lah closed form", "shifted Stirling-2 and signed Stirling-1 tables; EGF substitution t -> -log(1-t)"),
            Grid(n_max=25, r_max=5, order=20),
            _thm8,
            _check_common,
        ),
        Suite(
            "cor9_corrected",
            "S_2(n,k|2r) = sum_m (-1)^(n-m) S_2(n,m) L_r(m,k)",
            ("shifted Stirling-2 binomial expansion", "Stirling-2 times r-Lah recurrence; EGF substitution t -> 1-e^{-t}"),
            Grid(n_max=25, r_max=5, order=20),
            lambda g: _cor9(g, literal=False),
            _check_common,
        ),
        Suite(
            "cor9_literal",
            "S_2(n,k|2r) = sum_m (-1)^(m-m) S_2(n,m) L_r(m,k)",
            ("shifted Stirling-2 binomial expansion", "unsigned Stirling-2 times r-Lah recurrence"),
            Grid(n_max=25, r_max=5),
            lambda g: _cor9(g, literal=True),
            _check_common,
            expect_fail=lambda g: g.n_max >= 2,
            note=_COR9_NOTE,
        ),
        Suite(
            "thm10",
            "C(m+k,m) L_{2r}(n,m+k) = sum_l C(n,l) L_r(l,m) L_r(n-l,k)",
            ("r-Lah closed form at 2r", "binomial convolution of r-Lah recurrence rows; EGF column products"),
            Grid(n_max=20, r_max=3, order=20),
            _thm10,
            _check_common,
        ),
        Suite(
            "thm11_exact",
            "E[<X+2r>_n] = B^L_{n,r}(alpha)",
            ("Lah-Bell polynomial at alpha", "Stirling-1 weights on Bell polynomials (Poisson moments)"),
            Grid(n_max=15, r_max=3, points=_pts("1/2", 1, 2, 10)),
            _thm11_exact,
            _check_with_points,
        ),
        Suite(
            "thm11_series",
            "e^{-alpha} sum_i <i+2r>_n alpha^i/i! = B^L_{n,r}(alpha)",
            ("certified Poisson expectation series", "Stirling-1 weights on Bell polynomials"),
            Grid(n_max=15, r_max=3, points=_pts("1/2", 1, 2, 10)),
            _thm11_series,
            _check_with_points,
        ),
        Suite(
            "thm11_mc",
            "Monte Carlo mean of <X+2r>_n within 5 sigma of B^L_{n,r}(alpha)",
            ("seeded Poisson sampling", "certified series midpoint"),
            Grid(n_max=6, r_max=2, points=_pts(1, 4), samples=10**6, seed=42),
            _thm11_mc,
            _check_mc,
        ),
        Suite(
            "eq40",
            "B^L_{n,r}(x) = sum_l (sum_k L_r(n,k) S_1(k,l)) B_l(x)",
            ("r-Lah row as polynomial", "Stirling-1 weighted Bell polynomials"),
            Grid(n_max=15, r_max=3, points=_pts("1/2", 1, 2, "7/3")),
            _eq40,
            _check_with_points,
        ),
        Suite(
            "s1s2_inverse",
            "[S_1(n,k)] and [S_2(n,k)] are mutually inverse",
            ("Stirling-1 recurrence", "Stirling-2 recurrence"),
            Grid(n_max=25),
            _s1s2_inverse,
            _check_common,
        ),
        Suite(
            "oracle_match",
            "brute-force ordered-block partition counts equal L_r(n,k) and B^L_{n,r}",
            ("restricted-growth-string enumeration", "r-Lah recurrence"),
            Grid(n_max=8, r_max=8),
            _oracle_match,
            _check_oracle,
        ),
    ]
}

SUITE_IDS = tuple(SUITES)


def run_suite(suite_id: str, grid: Grid | None = None) -> VerifyReport:
    if suite_id not in SUITES:
        raise KeyError(f"unknown suite {suite_id!r}")
    suite = SUITES[suite_id]
    grid = grid or suite.default_grid
    suite.check_grid(grid)
    start = time.perf_counter()
    count = 0
    failures = []
    for case in suite.cases(grid):
        count += 1
        if not case.ok:
            failures.append(case)
    if count == 0:
        raise GridError(f"empty grid: suite {suite_id} produced no cases", "--n-max")
    if suite.expect_fail(grid):
        verdict = "expected-fail" if failures else "fail"
    else:
        verdict = "fail" if failures else "pass"
    return VerifyReport(
        suite=suite_id,
        statement=suite.statement,
        paths=suite.paths,
        cases=count,
        failures=failures,
        verdict=verdict,
        elapsed=time.perf_counter() - start,
        note=suite.note,
    )


def run_all(config: VerifyConfig | None = None) -> list[VerifyReport]:
    config = config or VerifyConfig()
    ids = config.suites or SUITE_IDS
    unknown = [s for s in ids if s not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    grids = {s: config.grid_for(s) for s in ids}
    # validate everything before spending time on any suite
    for s in ids:
        SUITES[s].check_grid(grids[s])
    return [run_suite(s, grids[s]) for s in ids]


def all_passed(reports: Iterable[VerifyReport]) -> bool:
    return all(r.passed for r in reports)
