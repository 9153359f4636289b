"""
Verification layer: residual checks, degeneracy scans and their reports.
"""

from .reports import DegeneracyReport, VerificationReport, jsonable
from .checks import (
    check_divergence,
    check_eigenstate,
    check_entropy,
    check_trig_limit,
    check_u_independence,
    rayleigh_residual,
)
from .degeneracy import degeneracy_scan, predicted_tower_dimension, span_dimension, spectrum

__all__ = [
    'DegeneracyReport',
    'VerificationReport',
    'jsonable',
    'check_divergence',
    'check_eigenstate',
    'check_entropy',
    'check_trig_limit',
    'check_u_independence',
    'rayleigh_residual',
    'degeneracy_scan',
    'predicted_tower_dimension',
    'span_dimension',
    'spectrum',
]
