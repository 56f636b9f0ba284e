"""Domain types: lattice geometry, barrier configuration, quadrature contracts.

Public functions accept physical units (hbar = 1); internally everything is
nondimensionalized with energies in units of v_F/a and frequencies in 1/tau.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError

_INT_TOL = 1e-9


def _as_count(x: float, name: str) -> int:
    """Round x to an integer lattice count, rejecting non-integers."""
    n = round(x)
    if abs(x - n) > _INT_TOL * max(1.0, abs(x)):
        raise ConfigError(f"{name} = {x} is not an integer multiple of the lattice constant")
    return int(n)


@dataclass(frozen=True)
class LatticeParams:
    """Space step a, imaginary-time step tau and Fermi velocity v_f.

    The dimensionless ratio gamma = v_f * tau / a controls how close the
    discretization is to the continuum (gamma -> infinity at fixed v_f).
    """

    a: float
    tau: float
    v_f: float

    def __post_init__(self) -> None:
        if self.a <= 0 or self.tau <= 0 or self.v_f <= 0:
            raise ConfigError("a, tau and v_f must all be positive")

    @property
    def gamma(self) -> float:
        return self.v_f * self.tau / self.a


@dataclass(frozen=True)
class BarrierConfig:
    """Two mass barriers of length l_mu separated by l, with optional extras.

    mu_l, mu_r   barrier masses (energy units); opposite signs give repulsion
    l_mu         barrier length; math.inf selects the extended-barrier limit
    l            separation between the barriers
    v0           staggered on-site potential amplitude in the gap region
    w            transverse width, used by the 2D free energy only
    """

    mu_l: float
    mu_r: float
    l_mu: float
    l: float
    v0: float = 0.0
    w: float | None = None

    def __post_init__(self) -> None:
        if self.l <= 0:
            raise ConfigError("separation l must be positive")
        if self.l_mu < 0:
            raise ConfigError("barrier length l_mu must be nonnegative (or math.inf)")
        if self.v0 < 0:
            raise ConfigError("staggered amplitude v0 must be nonnegative")
        if self.w is not None and self.w <= 0:
            raise ConfigError("transverse width w must be positive")

    def steps(self, lat: LatticeParams) -> int:
        """Separation in lattice units, validated to be a positive integer."""
        n = _as_count(self.l / lat.a, "l/a")
        if n < 1:
            raise ConfigError("l must be at least one lattice constant")
        if self.v0 > 0 and n % 2:
            raise ConfigError("staggered potential requires an even l/a")
        return n

    def barrier_steps(self, lat: LatticeParams) -> float:
        """Barrier length in lattice units (may be math.inf)."""
        if math.isinf(self.l_mu):
            return math.inf
        return _as_count(self.l_mu / lat.a, "l_mu/a")

    def validate(self, lat: LatticeParams) -> None:
        self.steps(lat)
        self.barrier_steps(lat)


@dataclass(frozen=True)
class QuadratureSpec:
    """Error-control contract for all adaptive integrals."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 2000

    def __post_init__(self) -> None:
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ConfigError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ConfigError("max_subdivisions must be at least 1")


@dataclass(frozen=True)
class FreeEnergyResult:
    """Free energy value together with its quadrature error estimate."""

    value: float
    abs_error_estimate: float
    nodes_used: int


@dataclass(frozen=True)
class MatsubaraGrid:
    """Odd Matsubara frequencies on the imaginary-time lattice.

    omega_n = (2n+1) pi / beta for n = 0 .. beta/tau - 1, and the lattice
    frequency variable xi_n = (2/tau) tan(omega_n tau / 2).  The pole of the
    tangent is avoided by requiring beta/tau to be an even integer.
    """

    beta: float
    tau: float
    _n_slices: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.beta <= 0 or self.tau <= 0:
            raise ConfigError("beta and tau must be positive")
        n = _as_count(self.beta / self.tau, "beta/tau")
        if n % 2:
            raise ConfigError("beta/tau must be an even integer")
        object.__setattr__(self, "_n_slices", n)

    @property
    def n_slices(self) -> int:
        return self._n_slices

    def frequencies(self) -> np.ndarray:
        n = np.arange(self._n_slices)
        return (2 * n + 1) * math.pi / self.beta

    def xi(self) -> np.ndarray:
        return (2.0 / self.tau) * np.tan(self.frequencies() * self.tau / 2.0)

    def positive_xi(self) -> np.ndarray:
        """The xi_n > 0 branch, n = 0 .. beta/(2 tau) - 1."""
        return self.xi()[: self._n_slices // 2]
