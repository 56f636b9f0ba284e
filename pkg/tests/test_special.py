import math

import mpmath
import numpy as np
import pytest

from tangent_casimir import DomainError, dilogarithm
from tangent_casimir.special import gamma_int_half, zeta_int


def test_dilog_zero():
    assert dilogarithm(0.0) == 0.0


def test_dilog_minus_one_against_series():
    # alternating series oracle: Li2(-1) = sum (-1)^k / k^2, 10^6 terms
    k = np.arange(1, 1_000_001, dtype=float)
    oracle = np.sum((-1.0) ** k / k**2)
    assert dilogarithm(-1.0) == pytest.approx(oracle, abs=2e-12)
    assert dilogarithm(-1.0) == pytest.approx(-math.pi**2 / 12.0, abs=1e-15)


def test_dilog_one_against_zeta_series():
    # zeta(2) series with integral tail correction: sum_{k<=N} + 1/N - 1/(2N^2)
    n = 1_000_000
    k = np.arange(1, n + 1, dtype=float)
    oracle = np.sum(1.0 / k**2) + 1.0 / n - 1.0 / (2.0 * n * n)
    assert dilogarithm(1.0) == pytest.approx(oracle, abs=1e-12)
    assert dilogarithm(1.0) == pytest.approx(math.pi**2 / 6.0, abs=1e-15)


@pytest.mark.parametrize(
    "x", [-25.0, -7.3, -2.0, -1.0, -0.999, -0.75, -0.5, -0.2, 0.0, 0.3, 0.5, 0.62, 0.9, 0.999, 1.0]
)
def test_dilog_grid_against_mpmath(x):
    oracle = float(mpmath.polylog(2, x))
    assert dilogarithm(x) == pytest.approx(oracle, abs=1e-14, rel=1e-14)


def test_dilog_domain():
    with pytest.raises(DomainError):
        dilogarithm(1.0 + 1e-12)


def test_zeta_exact_values():
    assert zeta_int(2) == pytest.approx(math.pi**2 / 6.0, rel=1e-15)
    assert zeta_int(4) == pytest.approx(math.pi**4 / 90.0, rel=1e-15)


@pytest.mark.parametrize("s", [3, 5, 7, 9, 12])
def test_zeta_against_mpmath(s):
    assert zeta_int(s) == pytest.approx(float(mpmath.zeta(s)), rel=1e-14)


def test_zeta_domain():
    with pytest.raises(DomainError):
        zeta_int(1)


@pytest.mark.parametrize("x", [0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.5, 6.0])
def test_gamma_against_math(x):
    assert gamma_int_half(x) == pytest.approx(math.gamma(x), rel=1e-14)


def test_gamma_domain():
    with pytest.raises(DomainError):
        gamma_int_half(0.75)
    with pytest.raises(DomainError):
        gamma_int_half(-1.0)
