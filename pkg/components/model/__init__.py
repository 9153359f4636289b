"""
Model layer: η parameters, couplings, model specifications, dense states
and the Hamiltonian kernels.
"""

from .parameters import EtaParameter
from .couplings import Couplings, couplings_xxz, couplings_xyz
from .helper_functions import HelixFunctions
from .model_spec import VARIANTS, ModelSpec, build_model
from .states import DenseState, gram_matrix, product_amplitudes
from .hamiltonian import (
    apply_hamiltonian,
    bond_operator,
    dense_hamiltonian,
    hamiltonian_operator,
    sparse_hamiltonian,
)

__all__ = [
    'EtaParameter',
    'Couplings',
    'couplings_xxz',
    'couplings_xyz',
    'HelixFunctions',
    'VARIANTS',
    'ModelSpec',
    'build_model',
    'DenseState',
    'gram_matrix',
    'product_amplitudes',
    'apply_hamiltonian',
    'bond_operator',
    'dense_hamiltonian',
    'hamiltonian_operator',
    'sparse_hamiltonian',
]
