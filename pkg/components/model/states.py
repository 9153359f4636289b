"""
Dense States

Complex amplitude vectors over the product S^z basis, site 0 slowest and
local index i <-> m = s - i.
"""

import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy import linalg

from ..exceptions import DimensionMismatch, OutOfRange

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DenseState:
    """Read-only amplitude vector of length local_dim ** sites."""
    amplitudes: np.ndarray = field(compare=False)
    local_dim: int
    sites: int

    def __post_init__(self):
        amplitudes = np.ascontiguousarray(self.amplitudes, dtype=complex).reshape(-1)
        expected = self.local_dim ** self.sites
        if amplitudes.size != expected:
            raise DimensionMismatch(
                f"Expected {expected} amplitudes for {self.sites} sites of dim {self.local_dim}, "
                f"got {amplitudes.size}"
            )
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @property
    def size(self) -> int:
        return self.amplitudes.size

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "DenseState":
        norm = self.norm()
        if norm == 0.0:
            return self
        return DenseState(self.amplitudes / norm, self.local_dim, self.sites)

    def vdot(self, other: "DenseState") -> complex:
        """⟨self|other⟩."""
        if other.size != self.size:
            raise DimensionMismatch(f"Cannot pair states of size {self.size} and {other.size}")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to one axis per site."""
        return self.amplitudes.reshape((self.local_dim,) * self.sites)

    def entanglement_entropy(self, subsystem_sites: int) -> float:
        """
        Von Neumann entropy of the first `subsystem_sites` sites.

        Raises:
            OutOfRange: If the cut is not strictly inside the system
        """
        if not 1 <= subsystem_sites < self.sites:
            raise OutOfRange(f"Subsystem size must be in 1..{self.sites - 1}, got {subsystem_sites}")
        matrix = self.normalized().amplitudes.reshape(self.local_dim ** subsystem_sites, -1)
        weights = linalg.svdvals(matrix) ** 2
        weights = weights[weights > 0.0]
        return float(-np.sum(weights * np.log(weights)))


def product_amplitudes(local_vectors: Sequence[np.ndarray]) -> np.ndarray:
    """Kronecker product of per-site vectors in site order."""
    result = np.ones(1, dtype=complex)
    for vector in local_vectors:
        result = np.kron(result, np.asarray(vector, dtype=complex))
    return result


def basis_state(local_indices: Sequence[int], local_dim: int) -> DenseState:
    """|i_0 i_1 ...⟩ for the given local indices."""
    amplitudes = np.zeros(local_dim ** len(local_indices), dtype=complex)
    index = 0
    for i in local_indices:
        index = index * local_dim + int(i)
    amplitudes[index] = 1.0
    return DenseState(amplitudes, local_dim, len(local_indices))


def gram_matrix(states: Sequence[DenseState]) -> np.ndarray:
    """G[i, j] = ⟨states[i]|states[j]⟩."""
    if not states:
        return np.zeros((0, 0), dtype=complex)
    stacked = np.stack([s.amplitudes for s in states], axis=1)
    return stacked.conj().T @ stacked
