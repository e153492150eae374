"""chimaxwell: scalar-extended Maxwell equations as testable numerics.

Subpackages
-----------
spin_algebra   spin-1 matrices and the identities their manipulation rests on
planewaves     factorized momentum-space system and its chi-extended solutions
polarization   massive vector polarization modes, field triplets, gauge freedom
chi_solver     periodic pseudo-spectral time-domain solver with constraint
               diagnostics
verify         seeded residual suites producing a deterministic report
cli            command-line front end (verify, polarization-table,
               massless-scan, planewave, simulate)
"""

from .errors import (
    CFLViolation,
    ChiMaxwellError,
    DegenerateMode,
    InconsistentScenario,
    NonpositiveMass,
    PreconditionViolated,
    ZeroMomentum,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "ChiMaxwellError",
    "PreconditionViolated",
    "ZeroMomentum",
    "NonpositiveMass",
    "DegenerateMode",
    "CFLViolation",
    "InconsistentScenario",
]
