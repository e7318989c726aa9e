from __future__ import annotations

"""
Domain Exception Hierarchy.

Every failure raised by the library derives from HolomeraError. The three
families map onto CLI exit codes: configuration (2), capacity (3) and
numerical-check (4) failures.
"""

from typing import Any, Dict, Sequence


class HolomeraError(Exception):
    """Base class for all library errors."""

    exit_code: int = 1

    def to_dict(self) -> Dict[str, Any]:
        """Machine-readable representation used for CLI error reporting."""
        return {
            "error": type(self).__name__,
            "message": str(self),
            "exit_code": self.exit_code,
        }


# -----------------------------------------------------------------------------
# FAMILIES
# -----------------------------------------------------------------------------

class ConfigError(HolomeraError, ValueError):
    """Invalid experiment configuration or parameter."""

    exit_code = 2


class CapacityError(HolomeraError):
    """Requested size exceeds what the implementation supports."""

    exit_code = 3


class NumericalCheckError(HolomeraError):
    """A numerical invariant or cross-check failed."""

    exit_code = 4


# -----------------------------------------------------------------------------
# TENSOR ARITHMETIC
# -----------------------------------------------------------------------------

class ContractShapeError(NumericalCheckError):
    """Paired legs have different dimensions or do not exist."""


class DuplicateLegError(NumericalCheckError):
    """A leg appears more than once in a contraction."""


class LegPartitionError(NumericalCheckError):
    """In/out legs do not partition the tensor legs."""


# -----------------------------------------------------------------------------
# MODEL AND NETWORK
# -----------------------------------------------------------------------------

class SiteIndexError(ConfigError, IndexError):
    """Site or bulk coordinate out of range."""


class ParameterError(ConfigError):
    """Physical parameter outside its domain."""


class SolverError(NumericalCheckError):
    """An eigensolver failed to converge."""


class DuplicateInsertionError(ConfigError):
    """Two insertions share the same bulk coordinate."""


class NonHermitianError(NumericalCheckError):
    """An operator expected to be Hermitian is not."""


class SingularCentrifugalError(ParameterError):
    """Angular momentum at the origin of AdS."""


# -----------------------------------------------------------------------------
# SPECTRA
# -----------------------------------------------------------------------------

class NoSuchDimensionError(NumericalCheckError):
    """No eigenvalue group at the requested scaling dimension."""


class DegeneracyError(NumericalCheckError):
    """An eigenvalue group has the wrong multiplicity for the protocol."""


class LabelingRequiredError(NumericalCheckError):
    """Degenerate operators were not labeled before use."""


class SpectrumDegeneracyWarning(UserWarning):
    """A near-defective eigenvalue cluster was found during decomposition."""

    def __init__(self, message: str, cluster: Sequence[complex]) -> None:
        super().__init__(message)
        self.cluster = tuple(cluster)


# -----------------------------------------------------------------------------
# FITTING
# -----------------------------------------------------------------------------

class FitDomainError(NumericalCheckError):
    """Input data outside the domain of the fit model."""


class ConditioningError(NumericalCheckError):
    """Ill-conditioned least-squares design matrix."""


class AlignmentError(NumericalCheckError):
    """Curves do not share a usable common grid."""
