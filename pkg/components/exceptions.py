"""
Custom Exception Hierarchy for the Spin Helix Toolkit

Provides specific exception types for better error handling and debugging.
"""

from typing import Optional, Sequence


class HelixError(Exception):
    """Base exception for all spin helix toolkit errors."""
    pass


class ConfigurationError(HelixError):
    """Raised when a run configuration is invalid or missing."""
    pass


class InvalidNome(HelixError):
    """Raised when a theta series is requested with |nome| >= 1."""
    pass


class NonConvergent(HelixError):
    """Raised when a theta series hits max_terms before its tail bound."""
    pass


class NearPole(HelixError):
    """Raised when a ratio is evaluated too close to a zero of its denominator."""
    pass


class InvalidSpin(HelixError):
    """Raised when the spin representation is requested with twice_s < 1."""
    pass


class InvalidDims(HelixError):
    """Raised when lattice dimensions are unusable."""
    pass


class RangeTooLarge(HelixError):
    """Raised when a k-th neighbor range wraps ambiguously around a periodic axis."""
    pass


class DimensionMismatch(HelixError):
    """Raised when a state does not match the Hilbert space of a model."""
    pass


class NotCommensurate(HelixError):
    """Raised when L*eta is not on the lattice 2p*tau + 2q for some axis."""

    def __init__(
        self,
        message: str,
        residuals: Sequence[float] = (),
        p: Optional[Sequence[int]] = None,
        q: Optional[Sequence[int]] = None
    ):
        super().__init__(message)
        self.residuals = list(residuals)
        self.p = list(p) if p is not None else []
        self.q = list(q) if q is not None else []


class WrongLength(HelixError):
    """Raised when a lattice length violates a variant's divisibility rule."""
    pass


class DegenerateArgument(HelixError):
    """Raised when both local vector components vanish."""
    pass


class OutOfRange(HelixError):
    """Raised when a magnon number or subsystem size is outside its range."""
    pass


class TooLarge(HelixError):
    """Raised when a dense construction exceeds its size gate."""
    pass


class ModelError(HelixError):
    """Raised when a model variant is combined with unsupported parameters."""
    pass


class OutputError(HelixError):
    """Raised when writing a report or data file fails."""
    pass
