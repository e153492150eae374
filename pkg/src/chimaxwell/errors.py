"""Exception types shared across the library."""


class ChiMaxwellError(ValueError):
    """Base class for all library-specific errors."""


class PreconditionViolated(ChiMaxwellError):
    """An input that a residual check requires to be a solution is not one."""


class ZeroMomentum(ChiMaxwellError):
    """Spatial momentum is zero where a propagation direction is required."""


class NonpositiveMass(ChiMaxwellError):
    """Mass must be strictly positive; the massless limit is probed by scans."""


class DegenerateMode(ChiMaxwellError):
    """A field triplet vanishes identically, so a phase ratio is undefined."""


class CFLViolation(ChiMaxwellError):
    """Requested time step exceeds the stability bound of the integrator."""


class InconsistentScenario(ChiMaxwellError):
    """Initial data violates the divergence constraints beyond tolerance."""
