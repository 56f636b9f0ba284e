"""Exception types shared across the package."""


class CasimirError(Exception):
    """Base class for all errors raised by tangent_casimir."""


class ConfigError(CasimirError):
    """Invalid parameter combination (non-integer lattice counts, odd sums, ...)."""


class DomainError(CasimirError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class SingularFactor(CasimirError):
    """The local transfer-matrix factor is not invertible (lattice resonance)."""


class SingularBarrier(CasimirError):
    """Barrier parameters sit on the singular point of the closed-form amplitudes."""


class QuadratureFailure(CasimirError):
    """Adaptive integration could not reach the requested tolerance."""


class NonConvergence(CasimirError):
    """Summand grows too fast for the boundary-integral sum formula."""


class NumericalError(CasimirError):
    """A dense linear-algebra routine failed to converge."""


class SingularBarrierWarning(UserWarning):
    """Emitted when a barrier is evaluated exactly at its perfect-reflector point."""
