import math
from fractions import Fraction

import numpy as np
import pytest

from rlah.poisson_lab import (
    PoissonSpec,
    draw_samples,
    exact_moment,
    mc_moment,
    moment_via_eq40,
    pmf_check,
    poisson_cdf_table,
    rising_statistic,
    series_moment,
)

TOL = Fraction(1, 10**12)
ALPHAS = [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(10)]


def test_exact_moment_examples():
    assert exact_moment(1, 1, 1) == 3
    for r in range(4):
        assert exact_moment(0, r, Fraction(7, 3)) == 1
    assert exact_moment(1, 0, 2) == 2
    with pytest.raises(ValueError):
        exact_moment(1, 0, 0)


def test_exact_moment_by_direct_expectation_oracle():
    # E[<X+2r>_n] via the pmf with a long truncated sum, compared in floats
    for n, r, alpha in [(3, 1, 2.0), (4, 0, 1.0), (2, 2, 0.5)]:
        total = 0.0
        p = math.exp(-alpha)
        for i in range(120):
            val = 1
            for j in range(n):
                val *= i + 2 * r + j
            total += val * p
            p *= alpha / (i + 1)
        assert float(exact_moment(n, r, Fraction(alpha))) == pytest.approx(total, rel=1e-12)


def test_moment_via_eq40_examples():
    assert moment_via_eq40(1, 1, 1) == 3
    assert moment_via_eq40(0, 2, 5) == 1
    assert moment_via_eq40(2, 0, 1) == 3


def test_exact_forms_agree_on_grid():
    for alpha in ALPHAS:
        for r in range(4):
            for n in range(16):
                assert exact_moment(n, r, alpha) == moment_via_eq40(n, r, alpha)


def test_series_moment_examples():
    assert 3 in series_moment(2, 0, 1, TOL)
    assert 3 in series_moment(1, 1, 1, TOL)
    assert 1 in series_moment(0, 2, Fraction(1, 2), Fraction(1, 10**6))


def test_series_moment_contains_exact_on_grid():
    for alpha in ALPHAS:
        for r in range(4):
            for n in range(16):
                assert exact_moment(n, r, alpha) in series_moment(n, r, alpha, TOL)


def test_spec_validation():
    with pytest.raises(ValueError):
        PoissonSpec(0)
    with pytest.raises(ValueError):
        PoissonSpec(1, samples=0)
    with pytest.raises(ValueError):
        PoissonSpec(1, seed=2**64)
    assert PoissonSpec("1/2").alpha == Fraction(1, 2)


def test_cdf_table():
    cdf = poisson_cdf_table(4.0)
    assert cdf[0] == pytest.approx(math.exp(-4))
    assert cdf[-1] == pytest.approx(1.0, abs=1e-15)
    assert np.all(np.diff(cdf) >= 0)
    with pytest.raises(ValueError):
        poisson_cdf_table(31.0)


def test_sampling_is_deterministic_per_seed_and_workers():
    spec = PoissonSpec(3, seed=7, samples=10_000)
    a = draw_samples(spec)
    b = draw_samples(spec)
    assert np.array_equal(a, b)
    c = draw_samples(spec, workers=4)
    d = draw_samples(spec, workers=4)
    assert np.array_equal(c, d)
    assert c.size == 10_000
    assert not np.array_equal(a, draw_samples(PoissonSpec(3, seed=8, samples=10_000)))


def test_rising_statistic_uses_exact_values():
    xs = np.array([0, 1, 2, 5])
    assert list(rising_statistic(xs, 3, 1)) == [2 * 3 * 4, 3 * 4 * 5, 4 * 5 * 6, 7 * 8 * 9]


def test_mc_examples():
    rep = mc_moment(1, 0, PoissonSpec(1, seed=42, samples=10**6))
    assert abs(rep.mc_estimate - 1) <= 5 * rep.mc_stderr
    const = mc_moment(0, 3, PoissonSpec(Fraction(5, 2), seed=1, samples=1000))
    assert const.mc_estimate == 1.0 and const.mc_stderr == 0.0 and const.z_score == 0.0
    rep = mc_moment(2, 1, PoissonSpec(2, seed=42, samples=10**6))
    assert rep.exact_value == 22
    assert abs(rep.mc_estimate - 22) <= 5 * rep.mc_stderr


def test_mc_z_score_definition():
    rep = mc_moment(3, 1, PoissonSpec(4, seed=3, samples=200_000))
    mid = float(rep.series_value.midpoint)
    assert rep.z_score == pytest.approx((rep.mc_estimate - mid) / rep.mc_stderr)
    assert rep.exact_value in rep.series_value


def test_mc_with_workers_reproducible():
    spec = PoissonSpec(2, seed=11, samples=100_000)
    a = mc_moment(2, 1, spec, workers=3)
    b = mc_moment(2, 1, spec, workers=3)
    assert a == b


def test_pmf_buckets_within_five_sigma():
    buckets = pmf_check(PoissonSpec(1, seed=42, samples=10**6), i_max=8)
    assert [b.i for b in buckets] == list(range(9))
    assert all(abs(b.z_score) <= 5 for b in buckets)
    assert buckets[0].expected == pytest.approx(math.exp(-1))
