import math

import numpy as np
import pytest
from scipy.integrate import quad

from tangent_casimir import (
    AbelPlanaSpec,
    ConfigError,
    LatticeParams,
    NonConvergence,
    abel_plana_sum,
    hard_wall_summand,
    large_l_asymptote,
    quantized_levels,
    zero_point_energy_infinite_mass,
)

LN2 = math.log(2.0)


def brute_sum_minus_integral(f, a, b, nu):
    """Direct oracle: sum f(n+nu) over integer n with a <= n+nu <= b, minus quad."""
    n_lo = math.ceil(a - nu)
    n_hi = math.floor(b - nu)
    total = sum(f(n + nu) for n in range(n_lo, n_hi + 1))
    integral, _ = quad(f, a, b, epsabs=1e-13, epsrel=1e-12, limit=500)
    return total - integral


class TestQuantizedLevels:
    def test_count_and_symmetry(self, unit):
        levels = quantized_levels(16.0, unit)
        assert len(levels) == 32
        assert np.allclose(np.sort(levels), -np.sort(-levels)[::-1] if False else np.sort(levels))
        assert np.allclose(np.sort(levels + np.sort(levels)[::-1]), 0.0, atol=1e-12)

    def test_continuum_box_limit(self):
        # small lattice constant: E_m -> (m + 1/2) pi v_f / l
        lat = LatticeParams(a=1.0, tau=1.0, v_f=1.0)
        l = 10_000.0
        levels = np.sort(quantized_levels(l, lat))
        positive = levels[levels > 0][:10]
        for m, e in enumerate(positive):
            box = (m + 0.5) * math.pi * lat.v_f / l
            assert e == pytest.approx(box, rel=1e-6)

    def test_non_integer_length_rejected(self, unit):
        with pytest.raises(ConfigError):
            quantized_levels(7.3, unit)


class TestAbelPlanaSum:
    def test_linear_summand(self):
        # sum_{m=0}^{9} (m + 1/2) = 50 equals the integral of x over [0, 10]
        spec = AbelPlanaSpec(a_end=0.0, b_end=10.0, nu=0.5)
        got = abel_plana_sum(lambda x: x, spec)
        brute = brute_sum_minus_integral(lambda x: x, 0.0, 10.0, 0.5)
        assert brute == pytest.approx(0.0, abs=1e-10)
        assert got == pytest.approx(0.0, abs=1e-10)

    def test_quadratic_summand(self):
        # sum = 332.5, integral = 1000/3: difference -10/12
        spec = AbelPlanaSpec(a_end=0.0, b_end=10.0, nu=0.5)
        got = abel_plana_sum(lambda x: x * x, spec)
        brute = brute_sum_minus_integral(lambda x: x * x, 0.0, 10.0, 0.5)
        assert got == pytest.approx(-10.0 / 12.0, abs=1e-10)
        assert got == pytest.approx(brute, abs=1e-9)

    def test_constant_summand(self):
        spec = AbelPlanaSpec(a_end=0.0, b_end=10.0, nu=0.5)
        assert abel_plana_sum(lambda x: 3.0, spec) == pytest.approx(0.0, abs=1e-12)

    def test_generic_offsets_against_brute_force(self):
        # non-midpoint nu and non-integer window exercise both phase kernels
        spec = AbelPlanaSpec(a_end=0.3, b_end=7.8, nu=0.25)
        f = lambda x: x * x
        got = abel_plana_sum(f, spec)
        brute = brute_sum_minus_integral(lambda x: x * x, 0.3, 7.8, 0.25)
        assert got == pytest.approx(brute, abs=1e-8)

    def test_integer_endpoints_get_half_weight(self):
        # a_end - nu integer triggers the f(a)/2 endpoint term
        spec = AbelPlanaSpec(a_end=1.0, b_end=6.0, nu=0.0)
        f = lambda x: 1.0 / (1.0 + x * x)
        got = abel_plana_sum(f, spec)
        brute = brute_sum_minus_integral(f, 1.0, 6.0, 0.0)
        assert got == pytest.approx(brute, abs=1e-9)

    def test_fast_growth_rejected(self):
        spec = AbelPlanaSpec(a_end=0.0, b_end=4.0, nu=0.5)
        with pytest.raises(NonConvergence):
            abel_plana_sum(lambda x: np.exp(-7j * x), spec)

    def test_bad_window_rejected(self):
        with pytest.raises(ConfigError):
            AbelPlanaSpec(a_end=3.0, b_end=1.0)


class TestZeroPointEnergy:
    def test_minimum_size(self, unit):
        with pytest.raises(ConfigError):
            zero_point_energy_infinite_mass(4.0, unit)

    def test_matches_boundary_form_and_brute_force(self, unit):
        l = 50.0
        got = zero_point_energy_infinite_mass(l, unit)
        f = hard_wall_summand(l, unit)
        via_sum = abel_plana_sum(f, AbelPlanaSpec(a_end=0.0, b_end=l, nu=0.5))
        assert got == pytest.approx(via_sum, abs=1e-8)
        brute = sum(f(m + 0.5).real for m in range(int(l)))
        integral, _ = quad(lambda x: f(x).real, 0.0, l, epsabs=1e-13, epsrel=1e-12, limit=800)
        assert got == pytest.approx(brute - integral, abs=1e-8)

    def test_asymptotic_coefficient_unit_gamma(self, unit):
        # (ln 2 / tau - dF) L / v_f -> pi (gamma^2+1)/(24 gamma^2) = pi/12
        coeff = (LN2 - zero_point_energy_infinite_mass(200.0, unit)) * 200.0
        assert coeff == pytest.approx(math.pi / 12.0, rel=0.01)

    def test_near_continuum_gamma_recovers_scattering_value(self):
        lat = LatticeParams(a=1.0, tau=1.0, v_f=100.0)  # gamma = 100
        l = 1000.0
        delta_f = zero_point_energy_infinite_mass(l, lat)
        coeff = (LN2 / lat.tau - delta_f) * l / lat.v_f
        assert coeff == pytest.approx(math.pi / 24.0, rel=0.01)

    def test_hard_walls_overestimate_at_unit_gamma(self, unit):
        # coefficient exceeds the scattering-route value |c_1| by (gamma^2+1)/gamma^2 = 2
        coeff = (LN2 - zero_point_energy_infinite_mass(200.0, unit)) * 200.0
        ratio = coeff / abs(large_l_asymptote(1, +1))
        assert ratio == pytest.approx(2.0, rel=0.02)

    def test_offset_constant_in_separation(self, unit):
        # dF + pi (gamma^2+1)/(24 gamma^2) v_f/L is ln 2 / tau up to < 1e-8
        offsets = []
        for l in (200.0, 400.0, 800.0):
            delta_f = zero_point_energy_infinite_mass(l, unit)
            offsets.append(delta_f + math.pi / 12.0 / l)
        for off in offsets:
            assert abs(off - LN2) < 1e-8
        assert max(offsets) - min(offsets) < 1e-8
