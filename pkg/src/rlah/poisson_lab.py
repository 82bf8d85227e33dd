"""Rising factorial moments of a shifted Poisson variable.

For X ~ Poisson(alpha), E[<X+2r>_n] equals B^L_{n,r}(alpha). This module
computes that moment three ways: exactly (polynomial evaluation, or the
Stirling/Bell expansion), as a certified series enclosure, and by seeded
Monte Carlo.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .dobinski import Enclosure, dobinski_sum
from .exact_core import Rational, as_fraction, frac_str, rising
from .polynomials import bell_poly, eq40_weights, r_lah_bell_poly

MAX_SAMPLER_ALPHA = 30
MAX_STATISTIC_N = 20
DEFAULT_TOL = Fraction(1, 10**12)


@dataclass(frozen=True)
class PoissonSpec:
    alpha: Fraction
    seed: int = 42
    samples: int = 10**6

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        if self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class MomentReport:
    n: int
    r: int
    alpha: Fraction
    exact_value: Fraction
    series_value: Enclosure
    mc_estimate: float
    mc_stderr: float
    z_score: float
    samples: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "alpha": frac_str(self.alpha),
            "exact_value": frac_str(self.exact_value),
            "series_value": [frac_str(self.series_value.lo), frac_str(self.series_value.hi)],
            "mc_estimate": self.mc_estimate,
            "mc_stderr": self.mc_stderr,
            "z_score": self.z_score,
            "samples": self.samples,
        }


def exact_moment(n: int, r: int, alpha: Rational) -> Fraction:
    """E[<X+2r>_n] = B^L_{n,r}(alpha), by evaluating the Lah-Bell polynomial."""
    alpha = as_fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    return r_lah_bell_poly(n, r).eval_at(alpha)


def moment_via_eq40(n: int, r: int, alpha: Rational) -> Fraction:
    """sum_l (sum_k L_r(n,k) S_1(k,l)) E[X^l], with E[X^l] = B_l(alpha)."""
    alpha = as_fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    weights = eq40_weights(n, r)
    return sum((c * bell_poly(l).eval_at(alpha) for l, c in enumerate(weights)), Fraction(0))


def series_moment(n: int, r: int, alpha: Rational, tol: Rational = DEFAULT_TOL) -> Enclosure:
    """Certified enclosure of e^{-alpha} sum_i <i+2r>_n alpha^i / i!."""
    return dobinski_sum(n, r, alpha, tol).enclosure


def poisson_cdf_table(alpha: float) -> np.ndarray:
    """Cumulative pmf in double precision, long enough that the tail underflows."""
    if not 0 < alpha <= MAX_SAMPLER_ALPHA:
        raise ValueError(f"sampler supports 0 < alpha <= {MAX_SAMPLER_ALPHA}")
    size = int(alpha + 12 * math.sqrt(alpha) + 40)
    pmf = np.empty(size)
    p = math.exp(-alpha)
    for i in range(size):
        pmf[i] = p
        p = p * alpha / (i + 1)
    return np.cumsum(pmf)


def sample_poisson(alpha: Rational, size: int, rng: np.random.Generator) -> np.ndarray:
    """Inversion: X = min{i : U < F(i)} for uniform U."""
    cdf = poisson_cdf_table(float(as_fraction(alpha)))
    u = rng.random(size)
    x = np.searchsorted(cdf, u, side="right")
    # U beyond the last representable cdf value: mass below double precision
    return np.minimum(x, len(cdf) - 1)


def _worker_sizes(samples: int, workers: int) -> list[int]:
    base, extra = divmod(samples, workers)
    return [base + (1 if i < extra else 0) for i in range(workers)]


def draw_samples(spec: PoissonSpec, workers: int = 1) -> np.ndarray:
    """All variates for ``spec``; worker i uses substream i of the seed.

    The result depends only on (seed, samples, workers).
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    streams = np.random.SeedSequence(spec.seed).spawn(workers)
    sizes = _worker_sizes(spec.samples, workers)

    def run(i: int) -> np.ndarray:
        return sample_poisson(spec.alpha, sizes[i], np.random.default_rng(streams[i]))

    if workers == 1:
        return run(0)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(run, range(workers)))
    return np.concatenate(parts)


def rising_statistic(xs: np.ndarray, n: int, r: int) -> np.ndarray:
    """<X_j + 2r>_n per sample: exact integers per value, then converted to float."""
    if n > MAX_STATISTIC_N:
        raise ValueError(f"n must be <= {MAX_STATISTIC_N} for the sampled statistic")
    top = int(xs.max()) if xs.size else 0
    table = np.array([float(rising(i + 2 * r, n)) for i in range(top + 1)])
    return table[xs]


def mc_moment(
    n: int,
    r: int,
    spec: PoissonSpec,
    tol: Rational = DEFAULT_TOL,
    workers: int = 1,
    xs: np.ndarray | None = None,
) -> MomentReport:
    """Monte Carlo estimate of E[<X+2r>_n] with its z-score.

    ``xs`` lets callers reuse one batch of variates across several (n, r);
    it must have been drawn for ``spec``.
    """
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    if xs is None:
        xs = draw_samples(spec, workers)
    values = rising_statistic(xs, n, r)
    count = values.size
    estimate = float(values.mean())
    stderr = float(values.std(ddof=1) / math.sqrt(count)) if count > 1 else 0.0

    exact = exact_moment(n, r, spec.alpha)
    enclosure = series_moment(n, r, spec.alpha, tol)
    if stderr > 0:
        z = (estimate - float(enclosure.midpoint)) / stderr
    elif estimate == float(exact):
        z = 0.0
    else:
        z = math.copysign(math.inf, estimate - float(exact))
    return MomentReport(
        n=n,
        r=r,
        alpha=spec.alpha,
        exact_value=exact,
        series_value=enclosure,
        mc_estimate=estimate,
        mc_stderr=stderr,
        z_score=z,
        samples=count,
    )


@dataclass(frozen=True)
class PmfBucket:
    i: int
    observed: float
    expected: float
    z_score: float


def pmf_check(spec: PoissonSpec, i_max: int = 8, workers: int = 1) -> list[PmfBucket]:
    """Empirical frequency of each value i <= i_max against e^{-alpha} alpha^i / i!.

    Each bucket is a binomial proportion, so its sigma is sqrt(p(1-p)/N).
    """
    xs = draw_samples(spec, workers)
    alpha = float(spec.alpha)
    total = xs.size
    counts = np.bincount(xs, minlength=i_max + 1)
    out = []
    for i in range(i_max + 1):
        p = math.exp(-alpha) * alpha**i / math.factorial(i)
        observed = counts[i] / total
        sigma = math.sqrt(p * (1 - p) / total)
        out.append(PmfBucket(i, float(observed), p, float((observed - p) / sigma)))
    return out
