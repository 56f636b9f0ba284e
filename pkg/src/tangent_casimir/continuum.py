"""Continuum Casimir formulas and exact large-separation asymptotes.

Ground truth for the lattice results: the a -> 0, tau -> 0 free energies in
1D and 2D, the delta-function (spike) closed form, and the dimension-d
asymptote coefficients c_d for widely separated barriers,

    F -> c_d * v_f / L^d,   c_d = zeta(d+1) Gamma(d) / (2^(3d-1) pi^(d/2) Gamma(d/2))
                                  * (1 - 2^d)  [equal mass signs]
                                  *  2^d       [opposite mass signs].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigError, DomainError
from .lattice import QuadratureSpec
from .quadrature import adaptive_quad
from .special import dilogarithm, gamma_int_half, zeta_int


@dataclass(frozen=True)
class AsymptoteCoefficient:
    """Coefficient of v_f / L^d in the large-separation free energy."""

    d: int
    sign: int
    c: float


def _mirror_factor(omega: float, mu: float) -> float:
    """Imaginary-axis reflection factor (omega - sqrt(mu^2 + omega^2)) / mu."""
    return (omega - math.sqrt(mu * mu + omega * omega)) / mu


def continuum_free_energy_1d(
    mu_l: float, mu_r: float, l: float, v_f: float, q: QuadratureSpec = QuadratureSpec()
) -> float:
    """Continuum free energy of two extended mass barriers on a line."""
    if l <= 0 or v_f <= 0:
        raise ConfigError("l and v_f must be positive")
    if mu_l == 0.0 or mu_r == 0.0:
        return 0.0

    def integrand(u: float) -> float:
        omega = u * v_f / l
        return math.log1p(_mirror_factor(omega, mu_l) * _mirror_factor(omega, mu_r) * math.exp(-2.0 * u))

    total, _, _ = adaptive_quad(integrand, 0.0, math.inf, q)
    return -(v_f / (math.pi * l)) * total


def continuum_free_energy_2d(
    mu_l: float, mu_r: float, l: float, w: float, v_f: float, q: QuadratureSpec = QuadratureSpec()
) -> float:
    """Continuum free energy of two extended mass barriers on a plane.

    Double integral over frequency and transverse momentum; the integrand
    depends on them only through s = sqrt(omega^2 + (v_f ky)^2), so it is
    evaluated in polar coordinates.
    """
    if l <= 0 or v_f <= 0 or w <= 0:
        raise ConfigError("l, w and v_f must be positive")
    if mu_l == 0.0 or mu_r == 0.0:
        return 0.0

    def integrand(u: float) -> float:
        s = u * v_f / (2.0 * l)
        return u * math.log1p(_mirror_factor(s, mu_l) * _mirror_factor(s, mu_r) * math.exp(-u))

    total, _, _ = adaptive_quad(integrand, 0.0, math.inf, q)
    return -(w * v_f / (8.0 * math.pi * l * l)) * total


def continuum_free_energy_spike(m: float, l: float, v_f: float) -> float:
    """Continuum free energy of two delta-function mass spikes of weight m.

    F = (v_f / 2 pi l) Li2(-tanh^2(m / v_f)).
    """
    if l <= 0 or v_f <= 0:
        raise ConfigError("l and v_f must be positive")
    if m == 0.0:
        return 0.0
    return v_f / (2.0 * math.pi * l) * dilogarithm(-math.tanh(m / v_f) ** 2)


def large_l_asymptote(d: int, sign: int) -> float:
    """Coefficient c_d of v_f/L^d for equal (sign=+1) or opposite (sign=-1) masses."""
    if d < 1:
        raise DomainError(f"dimension d must be at least 1, got {d}")
    if sign not in (+1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    base = zeta_int(d + 1) * gamma_int_half(d) / (
        2.0 ** (3 * d - 1) * math.pi ** (d / 2.0) * gamma_int_half(d / 2.0)
    )
    return base * ((1.0 - 2.0**d) if sign > 0 else 2.0**d)


def asymptote_table() -> list[AsymptoteCoefficient]:
    """The six tabulated coefficients for d = 1, 2, 3."""
    return [
        AsymptoteCoefficient(d=d, sign=s, c=large_l_asymptote(d, s))
        for d in (1, 2, 3)
        for s in (+1, -1)
    ]


def radial_asymptote_integral(d: int, sign: int, q: QuadratureSpec = QuadratureSpec()) -> float:
    """c_d by direct quadrature of the d-dimensional spherical integral.

    -(2 pi^(d/2) / ((2 pi)^d Gamma(d/2))) int_0^inf r^(d-1) ln(1 + sign e^(-2r)) dr;
    independent numerical route used to validate large_l_asymptote.
    """
    if d < 1:
        raise DomainError(f"dimension d must be at least 1, got {d}")
    if sign not in (+1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")

    def integrand(r: float) -> float:
        return r ** (d - 1) * math.log1p(sign * math.exp(-2.0 * r))

    total, _, _ = adaptive_quad(integrand, 0.0, math.inf, q)
    prefactor = 2.0 * math.pi ** (d / 2.0) / ((2.0 * math.pi) ** d * gamma_int_half(d / 2.0))
    return -prefactor * total
