"""Casimir free energy and force for massless lattice fermions.

Scattering amplitudes, quadrature/summation engines, continuum references,
large-separation asymptotes and a staggered-potential protection probe for a
Dirac field discretized on a space-time lattice with tangent dispersion.
"""

from .abel_plana import (
    AbelPlanaSpec,
    abel_plana_sum,
    hard_wall_summand,
    quantized_levels,
    zero_point_energy_infinite_mass,
)
from .continuum import (
    AsymptoteCoefficient,
    asymptote_table,
    continuum_free_energy_1d,
    continuum_free_energy_2d,
    continuum_free_energy_spike,
    large_l_asymptote,
    radial_asymptote_integral,
)
from .errors import (
    CasimirError,
    ConfigError,
    DomainError,
    NonConvergence,
    NumericalError,
    QuadratureFailure,
    SingularBarrier,
    SingularBarrierWarning,
    SingularFactor,
)
from .free_energy import (
    casimir_force,
    casimir_kernel,
    density_of_states,
    free_energy_extended_interp,
    free_energy_finite_t,
    free_energy_spike_large_l,
    free_energy_spike_mu_eff,
    free_energy_zero_t_1d,
    free_energy_zero_t_2d,
)
from .lattice import (
    BarrierConfig,
    FreeEnergyResult,
    LatticeParams,
    MatsubaraGrid,
    QuadratureSpec,
)
from .protection import (
    FermionKind,
    effective_length,
    free_energy_staggered,
    gap_closed_form,
    gap_numerical,
    transmission_staggered,
)
from .scattering import (
    ScatteringMatrix,
    TransferMatrix,
    penetration_depth,
    reflection_barrier,
    reflection_infinite,
    reflection_spike,
    scattering_matrix,
    transfer_matrix_step,
    transmission_barrier,
    transmission_free,
)
from .special import dilogarithm

__version__ = "0.1.0"

__all__ = [
    "AbelPlanaSpec",
    "AsymptoteCoefficient",
    "BarrierConfig",
    "CasimirError",
    "ConfigError",
    "DomainError",
    "FermionKind",
    "FreeEnergyResult",
    "LatticeParams",
    "MatsubaraGrid",
    "NonConvergence",
    "NumericalError",
    "QuadratureFailure",
    "QuadratureSpec",
    "ScatteringMatrix",
    "SingularBarrier",
    "SingularBarrierWarning",
    "SingularFactor",
    "TransferMatrix",
    "abel_plana_sum",
    "asymptote_table",
    "casimir_force",
    "casimir_kernel",
    "continuum_free_energy_1d",
    "continuum_free_energy_2d",
    "continuum_free_energy_spike",
    "density_of_states",
    "dilogarithm",
    "effective_length",
    "free_energy_finite_t",
    "free_energy_extended_interp",
    "free_energy_spike_large_l",
    "free_energy_spike_mu_eff",
    "free_energy_staggered",
    "free_energy_zero_t_1d",
    "free_energy_zero_t_2d",
    "gap_closed_form",
    "gap_numerical",
    "hard_wall_summand",
    "large_l_asymptote",
    "penetration_depth",
    "quantized_levels",
    "radial_asymptote_integral",
    "reflection_barrier",
    "reflection_infinite",
    "reflection_spike",
    "scattering_matrix",
    "transfer_matrix_step",
    "transmission_barrier",
    "transmission_free",
    "transmission_staggered",
    "zero_point_energy_infinite_mass",
]
