"""Exception types raised across the package."""


class SymPPTError(Exception):
    """Base class for all package errors."""


class DomainError(SymPPTError, ValueError):
    """An argument lies outside the domain of an operation (bad N, r, k, ...)."""


class ValidationError(SymPPTError, ValueError):
    """Input data violates a structural invariant (Hermiticity, trace, ...)."""


class ConsistencyError(SymPPTError, RuntimeError):
    """An internal numerical identity failed beyond tolerance."""
