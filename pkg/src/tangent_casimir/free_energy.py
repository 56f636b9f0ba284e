"""Casimir free energy and force from the scattering amplitudes.

The separation-dependent free energy follows from the round-trip amplitude
Xi(E) = r_L(E) r_R(E) t(E)^2 evaluated on the positive imaginary energy axis:
a finite Matsubara sum at nonzero temperature, and at T = 0 the integral

    F = -(1/pi tau) Re int_0^pi dw ln[1 - Xi(2i tan(w/2) / tau)],

computed through the substitution xi = 2 tan(w/2) which maps [0, pi) to the
half line with weight 4/(4+xi^2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import replace

from .constants import DEFAULT_DOS_ETA, LOG1P_THRESHOLD
from .errors import ConfigError
from .lattice import BarrierConfig, FreeEnergyResult, LatticeParams, MatsubaraGrid, QuadratureSpec
from .quadrature import adaptive_quad
from .scattering import penetration_depth, reflection_barrier, transmission_free
from .special import dilogarithm


def casimir_kernel(e: complex, cfg: BarrierConfig, ky: float, lat: LatticeParams) -> complex:
    """Round-trip amplitude Xi = r_L r_R t^2 for the configured barrier pair."""
    if cfg.mu_l == 0.0 or cfg.mu_r == 0.0:
        return 0.0 + 0.0j
    r_l = reflection_barrier(e, cfg.mu_l, cfg.l_mu, ky, lat)
    r_r = reflection_barrier(e, cfg.mu_r, cfg.l_mu, ky, lat)
    t = transmission_free(e, cfg.l, ky, lat)
    return r_l * r_r * t * t


def re_log_one_minus(z: complex) -> float:
    """Re ln(1 - z), via log1p for small |z| where the direct log loses digits."""
    if abs(z) < LOG1P_THRESHOLD:
        return 0.5 * math.log1p(-2.0 * z.real + abs(z) ** 2)
    return math.log(abs(1.0 - z))


def density_of_states(
    e: float, eta: float | None, cfg: BarrierConfig, lat: LatticeParams
) -> float:
    """Separation-dependent density of states -(1/pi) Im d/dE ln(1 - Xi(E + i eta)).

    The derivative is taken by a central difference with step eta/20, so eta
    sets both the resonance broadening and the resolution.  eta = None selects
    the default 1e-3 v_f/a.
    """
    if eta is None:
        eta = DEFAULT_DOS_ETA * lat.v_f / lat.a
    if eta <= 0:
        raise ConfigError("eta must be positive")
    if cfg.mu_l == 0.0 or cfg.mu_r == 0.0:
        return 0.0
    h = eta / 20.0
    g_plus = cmath.log(1.0 - casimir_kernel(e + h + 1j * eta, cfg, 0.0, lat))
    g_minus = cmath.log(1.0 - casimir_kernel(e - h + 1j * eta, cfg, 0.0, lat))
    return -((g_plus - g_minus) / (2.0 * h)).imag / math.pi


def _zero_result() -> FreeEnergyResult:
    return FreeEnergyResult(value=0.0, abs_error_estimate=0.0, nodes_used=0)


def free_energy_zero_t_1d(
    cfg: BarrierConfig, lat: LatticeParams, q: QuadratureSpec = QuadratureSpec()
) -> FreeEnergyResult:
    """Zero-temperature free energy of the 1D barrier pair.

    Requires v0 = 0 (see free_energy_staggered for the staggered case).
    """
    cfg.validate(lat)
    if cfg.v0 != 0.0:
        raise ConfigError("free_energy_zero_t_1d requires v0 = 0")
    if cfg.mu_l == 0.0 or cfg.mu_r == 0.0:
        return _zero_result()

    def integrand(xi: float) -> float:
        kernel = casimir_kernel(1j * xi / lat.tau, cfg, 0.0, lat)
        return (4.0 / (4.0 + xi * xi)) * re_log_one_minus(kernel)

    total, err, nodes = adaptive_quad(integrand, 0.0, math.inf, q, points=(2.0 * lat.gamma,))
    scale = 1.0 / (math.pi * lat.tau)
    return FreeEnergyResult(value=-scale * total, abs_error_estimate=scale * err, nodes_used=nodes)


def free_energy_finite_t(cfg: BarrierConfig, lat: LatticeParams, beta: float) -> FreeEnergyResult:
    """Free energy at inverse temperature beta as a finite Matsubara sum.

    F = -(2/beta) Re sum_n ln[1 - Xi(i xi_n)] over the xi_n > 0 frequencies.
    Deterministic: no quadrature is involved.
    """
    cfg.validate(lat)
    if cfg.v0 != 0.0:
        raise ConfigError("free_energy_finite_t requires v0 = 0")
    grid = MatsubaraGrid(beta=beta, tau=lat.tau)
    if grid.n_slices < 4:
        raise ConfigError("beta/tau must be at least 4")
    if cfg.mu_l == 0.0 or cfg.mu_r == 0.0:
        return _zero_result()
    total = 0.0
    xi_values = grid.positive_xi()
    for xi in xi_values:
        total += re_log_one_minus(casimir_kernel(1j * xi, cfg, 0.0, lat))
    return FreeEnergyResult(
        value=-(2.0 / beta) * total, abs_error_estimate=0.0, nodes_used=len(xi_values)
    )


def free_energy_zero_t_2d(
    cfg: BarrierConfig, lat: LatticeParams, q: QuadratureSpec = QuadratureSpec()
) -> FreeEnergyResult:
    """Zero-temperature free energy of extended barriers on a 2D surface.

    Double integral over the frequency variable xi and the transverse-momentum
    variable xi_y = 2 tan(a ky / 2), both on tangent-substituted half lines.
    Requires l_mu = inf and a transverse width w.
    """
    cfg.validate(lat)
    if not math.isinf(cfg.l_mu):
        raise ConfigError("the 2D free energy is implemented for extended barriers (l_mu = inf)")
    if cfg.w is None:
        raise ConfigError("the 2D free energy requires the transverse width w")
    if cfg.mu_l == 0.0 or cfg.mu_r == 0.0:
        return _zero_result()

    gamma = lat.gamma
    mul_t = cfg.mu_l * lat.tau
    mur_t = cfg.mu_r * lat.tau
    two_steps = 2 * cfg.steps(lat)
    nodes = 0
    inner_spec = replace(q, abs_tol=q.abs_tol, rel_tol=min(q.rel_tol, 1e-11))

    def inner(xi_y: float) -> float:
        nonlocal nodes
        gxy2 = (gamma * xi_y) ** 2

        def integrand(xi: float) -> float:
            s = math.sqrt(gxy2 + xi * xi)
            b_l = (s - math.sqrt(mul_t * mul_t + s * s)) / mul_t
            b_r = (s - math.sqrt(mur_t * mur_t + s * s)) / mur_t
            prop = ((2.0 * gamma - s) / (2.0 * gamma + s)) ** two_steps
            return (4.0 / (4.0 + xi * xi)) * math.log1p(b_l * b_r * prop)

        crossing2 = (2.0 * gamma) ** 2 - gxy2
        cuts = (math.sqrt(crossing2),) if crossing2 > 0 else ()
        val, _, n = adaptive_quad(integrand, 0.0, math.inf, inner_spec, points=cuts)
        nodes += n
        return val

    def outer(xi_y: float) -> float:
        return (4.0 / (4.0 + xi_y * xi_y)) * inner(xi_y)

    total, err, _ = adaptive_quad(outer, 0.0, math.inf, q, points=(2.0 * gamma,))
    scale = cfg.w / (math.pi**2 * lat.tau * lat.a)
    return FreeEnergyResult(value=-scale * total, abs_error_estimate=scale * err, nodes_used=nodes)


def free_energy_extended_interp(
    mu_l: float,
    mu_r: float,
    l: float,
    lat: LatticeParams,
    q: QuadratureSpec = QuadratureSpec(),
) -> float:
    """Extended-barrier zero-T free energy with l treated as continuous.

    Analytic continuation of the propagation factor to non-integer l/a;
    coincides with free_energy_zero_t_1d (l_mu = inf) on the lattice points.
    Serves as the reference curve for the effective-length collapse, where
    l_eff is generally not a lattice multiple.
    """
    if l <= 0:
        raise ConfigError("separation l must be positive")
    if mu_l == 0.0 or mu_r == 0.0:
        return 0.0
    gamma = lat.gamma
    mul_t = mu_l * lat.tau
    mur_t = mu_r * lat.tau
    exponent = 2.0 * l / lat.a

    def integrand(xi: float) -> float:
        b_l = (xi - math.sqrt(mul_t * mul_t + xi * xi)) / mul_t
        b_r = (xi - math.sqrt(mur_t * mur_t + xi * xi)) / mur_t
        prop = cmath.exp(exponent * cmath.log(complex(2.0 * gamma - xi) / (2.0 * gamma + xi)))
        # Xi(i xi/tau) = (i b_l)(i b_r) t^2 = -b_l b_r t^2
        return (4.0 / (4.0 + xi * xi)) * re_log_one_minus(-b_l * b_r * prop)

    total, _, _ = adaptive_quad(integrand, 0.0, math.inf, q, points=(2.0 * gamma,))
    return -total / (math.pi * lat.tau)


def free_energy_spike_large_l(mu_l: float, mu_r: float, l: float, lat: LatticeParams) -> float:
    """Large-separation free energy of two one-site mass spikes.

    F = (v_f / 2 pi l) Li2(-M_L M_R) with M = 4 (a mu / v_f) / (4 + (a mu / v_f)^2).
    """
    if l <= 0:
        raise ConfigError("separation l must be positive")
    m_l = _spike_strength(mu_l, lat)
    m_r = _spike_strength(mu_r, lat)
    return lat.v_f / (2.0 * math.pi * l) * dilogarithm(-m_l * m_r)


def free_energy_spike_mu_eff(mu0: float, l: float, lat: LatticeParams) -> float:
    """Equivalent effective-mass form for two identical spikes.

    F = (v_f / 2 pi l) Li2(-tanh^2(a mu_eff / v_f)) with mu_eff = v_f / xi_mu,
    xi_mu the zero-energy penetration depth; identical to
    free_energy_spike_large_l(mu0, mu0, ...) for every mu0.
    """
    if l <= 0:
        raise ConfigError("separation l must be positive")
    if mu0 == 0.0:
        return 0.0
    mu_eff = lat.v_f / penetration_depth(mu0, lat)
    return lat.v_f / (2.0 * math.pi * l) * dilogarithm(-math.tanh(lat.a * mu_eff / lat.v_f) ** 2)


def _spike_strength(mu: float, lat: LatticeParams) -> float:
    x = lat.a * mu / lat.v_f
    return 4.0 * x / (4.0 + x * x)


def casimir_force(
    cfg: BarrierConfig, lat: LatticeParams, q: QuadratureSpec = QuadratureSpec()
) -> float:
    """Casimir force -dF/dL by the symmetric lattice difference with step a.

    The separation is only defined on the lattice, so no smaller step is used.
    """
    if cfg.l < 2 * lat.a:
        raise ConfigError("force difference needs l >= 2a")
    f_plus = free_energy_zero_t_1d(replace(cfg, l=cfg.l + lat.a), lat, q).value
    f_minus = free_energy_zero_t_1d(replace(cfg, l=cfg.l - lat.a), lat, q).value
    return -(f_plus - f_minus) / (2.0 * lat.a)
