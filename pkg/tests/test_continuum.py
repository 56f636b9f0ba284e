import math

import mpmath
import pytest
from scipy.integrate import quad

from tangent_casimir import (
    BarrierConfig,
    DomainError,
    LatticeParams,
    asymptote_table,
    continuum_free_energy_1d,
    continuum_free_energy_2d,
    continuum_free_energy_spike,
    free_energy_spike_large_l,
    free_energy_zero_t_1d,
    large_l_asymptote,
    radial_asymptote_integral,
)

# Apery's constant zeta(3), frozen from an independent high-precision oracle.
ZETA3 = 1.2020569031595942854


class TestContinuum1D:
    def test_zero_mass(self):
        assert continuum_free_energy_1d(0.0, 1.0, 5.0, 1.0) == 0.0

    def test_infinite_mass_asymptote(self):
        # mu -> inf recovers -pi/24 v_f/L
        val = continuum_free_energy_1d(1e7, 1e7, 1.0, 1.0)
        assert val == pytest.approx(-math.pi / 24.0, rel=1e-5)

    @pytest.mark.parametrize("steps", [20, 40])
    def test_matches_lattice_at_unit_gamma(self, unit, steps):
        cfg = BarrierConfig(mu_l=1.0, mu_r=1.0, l_mu=math.inf, l=float(steps))
        lattice = free_energy_zero_t_1d(cfg, unit).value
        cont = continuum_free_energy_1d(1.0, 1.0, float(steps), 1.0)
        assert lattice == pytest.approx(cont, rel=0.01)

    def test_against_mpmath_oracle(self):
        mu_l, mu_r, l = 1.3, 0.7, 6.0

        def f(w):
            bl = (w - mpmath.sqrt(mu_l**2 + w * w)) / mu_l
            br = (w - mpmath.sqrt(mu_r**2 + w * w)) / mu_r
            return mpmath.log(1 + bl * br * mpmath.exp(-2 * w * l))

        oracle = float(-mpmath.quad(f, [0, 1, mpmath.inf]) / mpmath.pi)
        assert continuum_free_energy_1d(mu_l, mu_r, l, 1.0) == pytest.approx(oracle, rel=1e-9)


class TestContinuum2D:
    def test_zero_mass(self):
        assert continuum_free_energy_2d(0.0, 1.0, 5.0, 1.0, 1.0) == 0.0

    @pytest.mark.parametrize(
        "sign,d_sign",
        [(+1, +1), (-1, -1)],
    )
    def test_large_l_asymptote(self, sign, d_sign):
        val = continuum_free_energy_2d(1.0, sign * 1.0, 400.0, 1.0, 1.0)
        assert 400.0**2 * val == pytest.approx(large_l_asymptote(2, d_sign), rel=0.01)

    def test_against_literal_double_integral(self):
        # independent oracle: the raw (omega, ky) double integral without the
        # polar reduction
        mu_l, mu_r, l, v_f = 1.0, 1.0, 3.0, 1.0

        def bracket(s, mu):
            return (s - math.sqrt(mu * mu + s * s)) / mu

        def inner(ky):
            def f(w):
                s = math.hypot(w, v_f * ky)
                return math.log1p(
                    bracket(s, mu_l) * bracket(s, mu_r) * math.exp(-2.0 * l * s / v_f)
                )

            return quad(f, 0, math.inf, epsabs=1e-13, epsrel=1e-12, limit=400)[0]

        outer = quad(inner, 0, math.inf, epsabs=1e-12, epsrel=1e-10, limit=400)[0]
        oracle = -2.0 * outer / (2.0 * math.pi**2)  # W = 1
        got = continuum_free_energy_2d(mu_l, mu_r, l, 1.0, v_f)
        assert got == pytest.approx(oracle, rel=1e-8)


class TestContinuumSpike:
    def test_zero_weight(self):
        assert continuum_free_energy_spike(0.0, 5.0, 1.0) == 0.0

    def test_infinite_weight(self):
        # tanh^2 -> 1 gives Li2(-1) = -pi^2/12
        val = continuum_free_energy_spike(50.0, 10.0, 1.0)
        assert val == pytest.approx(-math.pi / 240.0, rel=1e-12)

    @pytest.mark.parametrize("x", [0.02, 0.05, 0.1])
    def test_lattice_agreement_small_mass(self, unit, x):
        # one-site lattice spikes agree with the continuum delta profile for
        # a mu0 << v_f at large separation
        l = 1000.0
        lattice = free_energy_spike_large_l(x, x, l, unit)
        cont = continuum_free_energy_spike(x, l, 1.0)
        assert lattice == pytest.approx(cont, rel=0.01)


class TestAsymptotes:
    def test_table_against_exact_expressions(self):
        want = {
            (1, +1): -math.pi / 24.0,
            (1, -1): math.pi / 12.0,
            (2, +1): -3.0 * ZETA3 / (32.0 * math.pi),
            (2, -1): ZETA3 / (8.0 * math.pi),
            (3, +1): -7.0 * math.pi**2 / 5760.0,
            (3, -1): math.pi**2 / 720.0,
        }
        for entry in asymptote_table():
            assert entry.c == pytest.approx(want[(entry.d, entry.sign)], abs=1e-14)
            assert (entry.c < 0) == (entry.sign == +1)

    @pytest.mark.parametrize("d", [1, 2, 3])
    @pytest.mark.parametrize("sign", [+1, -1])
    def test_radial_integral_matches_closed_form(self, d, sign):
        assert radial_asymptote_integral(d, sign) == pytest.approx(
            large_l_asymptote(d, sign), abs=1e-8
        )

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 6])
    def test_repulsive_attractive_ratio(self, d):
        # opposite-sign coefficients: the ratio is -2^d/(2^d - 1) exactly
        ratio = large_l_asymptote(d, -1) / large_l_asymptote(d, +1)
        assert ratio == pytest.approx(-(2.0**d) / (2.0**d - 1.0), rel=1e-14)

    def test_domain(self):
        with pytest.raises(DomainError):
            large_l_asymptote(0, +1)
        with pytest.raises(DomainError):
            large_l_asymptote(2, 0)
