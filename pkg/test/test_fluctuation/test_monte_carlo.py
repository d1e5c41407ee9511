import math

import numpy as np
import pytest
from scipy import integrate, special, stats

from rogerswh._helpers import OutOfRange
from rogerswh.catalog import stable_convert
from rogerswh.fluctuation import mc_sup, stable1_sup_density, stable_sup_laplace
from rogerswh.fluctuation._monte_carlo import increments
from test import testtools


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(t=1.0, n_paths=10, n_steps=3),
        dict(t=1.0, n_paths=10, n_steps=1),
        dict(t=1.0, n_paths=1, n_steps=8),
        dict(t=0.0, n_paths=10, n_steps=8),
    ],
)
def test_mc_sup__out_of_range(gaussian_params, kwargs):
    with pytest.raises(OutOfRange):
        mc_sup(gaussian_params, seed=0, **kwargs)


def test_mc_sup__reproducible(gaussian_params):
    first = mc_sup(gaussian_params, 1.0, 200, 64, seed=7, xis=(0.5, 2.0), levels=(1.0,))
    second = mc_sup(gaussian_params, 1.0, 200, 64, seed=7, xis=(0.5, 2.0), levels=(1.0,))
    assert first == second
    other = mc_sup(gaussian_params, 1.0, 200, 64, seed=8, xis=(0.5, 2.0), levels=(1.0,))
    assert other.estimates != first.estimates


def test_mc_sup__independent_of_workers(gaussian_params):
    # 130 paths of 2^16 steps are split into three chunks
    serial = mc_sup(gaussian_params, 1.0, 130, 1 << 16, seed=3, workers=1)
    parallel = mc_sup(gaussian_params, 1.0, 130, 1 << 16, seed=3, workers=4)
    assert serial.estimates == parallel.estimates


def test_mc_sup__bounds():
    summary = mc_sup(stable_convert(1.5, rho=0.6), 2.0, 500, 32, seed=1, xis=(0.0, 1.0), levels=(0.0,))
    assert summary.estimates[0].value == pytest.approx(1.0)
    assert summary.estimates[0].stderr == pytest.approx(0.0, abs=1e-12)
    assert 0 < summary.estimates[1].value < 1
    assert summary.estimates[1].stderr > 0


def test_summary_to_dict(gaussian_params):
    summary = mc_sup(gaussian_params, 1.0, 50, 16, seed=0, xis=(1.0,), levels=(0.5, 1.0), side="down")
    data = summary.to_dict()
    assert set(data) == {"n_paths", "n_steps", "seed", "estimates", "cdf"}
    assert data["n_paths"] == 50 and data["n_steps"] == 16 and data["seed"] == 0
    assert [e["x"] for e in data["cdf"]] == [0.5, 1.0]
    assert set(data["estimates"][0]) == {"xi", "value", "stderr"}


def test_increments__gaussian_variance(gaussian_params):
    rng = np.random.default_rng(11)
    sample = increments(gaussian_params, 0.25, (200_000,), rng)
    assert np.var(sample) == pytest.approx(0.25, rel=2e-2)
    assert stats.kurtosis(sample) == pytest.approx(0.0, abs=0.05)


def test_increments__cauchy_drift():
    p = stable_convert(1.0, c=1.0, b=0.5)
    rng = np.random.default_rng(5)
    sample = increments(p, 2.0, (100_001,), rng)
    assert np.median(sample) == pytest.approx(-p.a.imag * 2.0, abs=0.05)


@testtools.slow
def test_mc_sup__brownian_laws(gaussian_params):
    """sup_{s <= 1} B_s has the law of |B_1|"""
    summary = mc_sup(gaussian_params, 1.0, 100_000, 1 << 13, seed=2024, xis=(1.0,), levels=(1.0,))
    laplace, cdf = summary.estimates[0], summary.cdf[0]
    assert abs(laplace.value - special.erfcx(1 / math.sqrt(2))) < 4 * laplace.stderr
    assert abs(cdf.value - special.erf(1 / math.sqrt(2))) < 4 * cdf.stderr


@testtools.slow
def test_mc_sup__cauchy_laws():
    p = stable_convert(1.0, c=1.0)
    laplace_exact = stable_sup_laplace(p, 1.0, 1.0)
    cdf_exact, _ = integrate.quad(lambda x: stable1_sup_density(p, 1.0, x), 0.0, 1.0, epsabs=1e-10)
    assert laplace_exact == pytest.approx(0.55136, abs=5e-4)
    assert cdf_exact == pytest.approx(0.67069, abs=5e-4)
    summary = mc_sup(p, 1.0, 100_000, 1 << 13, seed=2024, xis=(1.0,), levels=(1.0,))
    laplace, cdf = summary.estimates[0], summary.cdf[0]
    assert abs(laplace.value - laplace_exact) < 4 * laplace.stderr
    assert abs(cdf.value - cdf_exact) < 4 * cdf.stderr
