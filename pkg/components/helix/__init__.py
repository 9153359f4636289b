"""
Helix layer: coherent local vectors, spin-helix product states, tower
states, Q/P expansion states and XY-model states.
"""

from .local_vector import (
    LocalVector,
    analytic_normalization,
    highest_weight_operator,
    local_expectations,
    local_vector,
    trig_local_vector,
)
from .product_state import (
    CommensurabilityWitness,
    ProductState,
    build_shs,
    commensurability,
    commensurability_xxz,
    shs_energy,
    texture,
    variant_witness,
)
from .tower import TowerState, asymptotic_entropy, tower_entropy, tower_family, tower_state
from .expansion import ExpansionFit, expansion_states, fit_expansion_coefficients, qp_functions
from .xy_states import spin1_xy_state, xy_cycle_references

__all__ = [
    'LocalVector',
    'analytic_normalization',
    'highest_weight_operator',
    'local_expectations',
    'local_vector',
    'trig_local_vector',
    'CommensurabilityWitness',
    'ProductState',
    'build_shs',
    'commensurability',
    'commensurability_xxz',
    'shs_energy',
    'texture',
    'variant_witness',
    'TowerState',
    'asymptotic_entropy',
    'tower_entropy',
    'tower_family',
    'tower_state',
    'ExpansionFit',
    'expansion_states',
    'fit_expansion_coefficients',
    'qp_functions',
    'spin1_xy_state',
    'xy_cycle_references',
]
