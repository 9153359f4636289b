"""
Core numerical services.

Theta functions, identity catalogue, spin algebra and lattice geometry.
"""

from .elliptic import EllipticContext, ThetaValue, theta
from .identity_suite import IdentityReport, IdentityResult, identity_suite
from .spin_algebra import LocalOperator, SpinRep, build_spin_rep, spin_matrix
from .lattice import Bond, ChiralityVector, Lattice, axial_neighbors, build_lattice, phase

__all__ = [
    'EllipticContext',
    'ThetaValue',
    'theta',
    'IdentityReport',
    'IdentityResult',
    'identity_suite',
    'LocalOperator',
    'SpinRep',
    'build_spin_rep',
    'spin_matrix',
    'Bond',
    'ChiralityVector',
    'Lattice',
    'axial_neighbors',
    'build_lattice',
    'phase',
]
