"""
XXZ Tower States

(J⁻_ε)ⁿ|Ω⟩/n! built by direct enumeration, the closed-form entanglement
entropy of a tower state and its large-volume asymptotic.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional

import numpy as np

from ..core.lattice import ChiralityVector, phases
from ..exceptions import ModelError, OutOfRange
from ..model.model_spec import ModelSpec
from ..model.states import DenseState
from .product_state import variant_witness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TowerState:
    """Tower state with n lowered quanta in chirality sector epsilon."""
    n: int
    epsilon: ChiralityVector
    amplitudes: DenseState


def tower_state(
    n: int,
    epsilon: ChiralityVector,
    spec: ModelSpec,
    enforce_commensurability: bool = True
) -> TowerState:
    """
    Amplitude of the configuration with local indices k_j is
    Π_j κ_{k_j} e^{iπη (ε·n_j) k_j} when Σ_j k_j = n, and zero otherwise.

    Raises:
        ModelError: If spec is not the xxz variant
        OutOfRange: If n is outside 0..2sV
        NotCommensurate: If L_α η is not an even integer (when enforced)
    """
    if spec.variant != "xxz":
        raise ModelError(f"Tower states exist for the xxz variant only, got '{spec.variant}'")
    total = spec.spin.twice_s * spec.volume
    if not 0 <= n <= total:
        raise OutOfRange(f"Tower index n must be in 0..{total}, got {n}")
    if enforce_commensurability:
        variant_witness(spec)

    dim = spec.dim
    kappa = spec.spin.kappa
    k = np.arange(dim)
    eta = spec.eta_value

    amplitudes = np.ones(1, dtype=complex)
    index_sum = np.zeros(1, dtype=int)
    for phi in phases(spec.lattice, epsilon):
        weights = kappa * np.exp(1j * math.pi * eta * int(phi) * k)
        amplitudes = np.kron(amplitudes, weights)
        index_sum = (index_sum[:, None] + k[None, :]).reshape(-1)
    amplitudes = np.where(index_sum == n, amplitudes, 0.0)

    return TowerState(n, epsilon, DenseState(amplitudes, dim, spec.volume))


def tower_family(
    spec: ModelSpec,
    epsilons: Iterable[ChiralityVector],
    levels: Optional[Iterable[int]] = None
) -> List[TowerState]:
    """Tower states for every requested n (default 0..2sV) and chirality."""
    total = spec.spin.twice_s * spec.volume
    levels = list(range(total + 1)) if levels is None else list(levels)
    return [tower_state(n, eps, spec) for eps in epsilons for n in levels]


def tower_entropy(n: int, va: int, twice_s: int, volume: int) -> float:
    """
    Entanglement entropy of a tower state across a cut of va sites.

    Hypergeometric weights C(2s·va, j) C(2s(V-va), n-j) / C(2sV, n) over
    their full support, with 0·ln 0 = 0.

    Raises:
        OutOfRange: If n or va is outside its admissible range
    """
    total = twice_s * volume
    if not 0 <= n <= total:
        raise OutOfRange(f"Tower index n must be in 0..{total}, got {n}")
    if not 1 <= va < volume:
        raise OutOfRange(f"Subsystem volume must be in 1..{volume - 1}, got {va}")
    part_a = twice_s * va
    part_b = total - part_a
    denominator = math.comb(total, n)
    entropy = 0.0
    for j in range(max(0, n - part_b), min(n, part_a) + 1):
        weight = math.comb(part_a, j) * math.comb(part_b, n - j) / denominator
        if weight > 0.0:
            entropy -= weight * math.log(weight)
    return entropy


def asymptotic_entropy(twice_s: int, volume: int) -> float:
    """½ ln(sπV/4) + ½, the half-filling large-V form."""
    s = twice_s / 2.0
    return 0.5 * math.log(s * math.pi * volume / 4.0) + 0.5


def omega_states(spec: ModelSpec):
    """Fully polarized |Ω⟩ = |s...s⟩ and |Ω̄⟩ = |-s...-s⟩."""
    size = spec.hilbert_dim
    top = np.zeros(size, dtype=complex)
    bottom = np.zeros(size, dtype=complex)
    top[0] = 1.0
    bottom[-1] = 1.0
    return DenseState(top, spec.dim, spec.volume), DenseState(bottom, spec.dim, spec.volume)

