"""
Spin Algebra

Spin-s representation in the S^z basis |s>, |s-1>, ..., |-s> with ladder
coefficients, binomial weights and dense spin matrices. Spin is carried as
the integer twice_s throughout.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict

import numpy as np

from ..exceptions import InvalidSpin

logger = logging.getLogger(__name__)

AXES = ("x", "y", "z", "+", "-")


@dataclass(frozen=True)
class LocalOperator:
    """Dense dim x dim matrix acting on one site (or dim^2 on a bond)."""
    dim: int
    entries: np.ndarray = field(compare=False)

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=complex)
        if entries.shape != (self.dim, self.dim):
            raise ValueError(f"Expected a {self.dim}x{self.dim} matrix, got {entries.shape}")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def is_hermitian(self) -> bool:
        return bool(np.allclose(self.entries, self.entries.conj().T, atol=1e-14))

    def __matmul__(self, other: "LocalOperator") -> "LocalOperator":
        return LocalOperator(self.dim, self.entries @ other.entries)


@dataclass(frozen=True)
class SpinRep:
    """
    Spin-s representation data.

    Index i of every vector corresponds to m = s - i, and kappa[n] is the
    binomial weight of |s - n>.
    """
    twice_s: int
    dim: int = field(init=False)
    sz_diag: np.ndarray = field(init=False, compare=False, repr=False)
    lambda_plus: np.ndarray = field(init=False, compare=False, repr=False)
    lambda_minus: np.ndarray = field(init=False, compare=False, repr=False)
    kappa: np.ndarray = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        two_s = self.twice_s
        if not isinstance(two_s, (int, np.integer)) or two_s < 1:
            raise InvalidSpin(f"twice_s must be a positive integer, got {two_s!r}")
        s = two_s / 2.0
        m = s - np.arange(two_s + 1)
        lam_plus = np.sqrt(np.clip((s - m) * (s + m + 1.0), 0.0, None))
        lam_minus = np.sqrt(np.clip((s + m) * (s - m + 1.0), 0.0, None))

        # κ_n² = C(2s, n) by the ratio recurrence, mirrored for n > s
        squares = np.ones(two_s + 1)
        for n in range(two_s):
            squares[n + 1] = squares[n] * (two_s - n) / (n + 1)
        half = two_s // 2
        for n in range(half + 1, two_s + 1):
            squares[n] = squares[two_s - n]
        kappa = np.sqrt(squares)

        for name, value in (("sz_diag", m), ("lambda_plus", lam_plus),
                            ("lambda_minus", lam_minus), ("kappa", kappa)):
            value.setflags(write=False)
            object.__setattr__(self, name, value)
        object.__setattr__(self, "dim", int(two_s) + 1)

    @property
    def s(self) -> float:
        return self.twice_s / 2.0

    def index_of(self, twice_m: int) -> int:
        """Basis index of |m> given 2m."""
        if (self.twice_s - twice_m) % 2 or abs(twice_m) > self.twice_s:
            raise ValueError(f"2m={twice_m} is not a weight of spin {self.twice_s}/2")
        return (self.twice_s - twice_m) // 2

    def lambda_plus_at(self, twice_m: int) -> float:
        return float(self.lambda_plus[self.index_of(twice_m)])

    def lambda_minus_at(self, twice_m: int) -> float:
        return float(self.lambda_minus[self.index_of(twice_m)])

    def kappa_at(self, n: int) -> float:
        if n < 0 or n > self.twice_s:
            return 0.0
        return float(self.kappa[n])


@lru_cache(maxsize=32)
def build_spin_rep(twice_s: int) -> SpinRep:
    """
    Build the spin representation for 2s = twice_s.

    Raises:
        InvalidSpin: If twice_s < 1
    """
    if isinstance(twice_s, np.integer):
        twice_s = int(twice_s)
    return SpinRep(twice_s)


def _ladder(rep: SpinRep, raising: bool) -> np.ndarray:
    dim = rep.dim
    matrix = np.zeros((dim, dim), dtype=complex)
    for i in range(dim):
        if raising and i > 0:
            matrix[i - 1, i] = rep.lambda_plus[i]
        elif not raising and i < dim - 1:
            matrix[i + 1, i] = rep.lambda_minus[i]
    return matrix


@lru_cache(maxsize=256)
def _spin_matrices(twice_s: int) -> Dict[str, LocalOperator]:
    rep = build_spin_rep(twice_s)
    plus = _ladder(rep, raising=True)
    minus = _ladder(rep, raising=False)
    return {
        "z": LocalOperator(rep.dim, np.diag(rep.sz_diag).astype(complex)),
        "+": LocalOperator(rep.dim, plus),
        "-": LocalOperator(rep.dim, minus),
        "x": LocalOperator(rep.dim, (plus + minus) / 2.0),
        "y": LocalOperator(rep.dim, (plus - minus) / 2.0j),
    }


def spin_matrix(rep: SpinRep, axis: str) -> LocalOperator:
    """
    Dense matrix of S^axis for the given representation.

    Args:
        rep: Spin representation
        axis: One of 'x', 'y', 'z', '+', '-'

    Returns:
        LocalOperator with the matrix entries
    """
    if axis not in AXES:
        raise ValueError(f"Unknown spin axis '{axis}'. Available axes: {', '.join(AXES)}")
    return _spin_matrices(rep.twice_s)[axis]


def casimir(rep: SpinRep) -> np.ndarray:
    """(S^x)² + (S^y)² + (S^z)² as a dense matrix."""
    return sum(spin_matrix(rep, a).entries @ spin_matrix(rep, a).entries for a in "xyz")


def binomial_weight(twice_s: int, n: int) -> float:
    """κ_n computed from the exact integer binomial, for cross-checks."""
    return math.sqrt(math.comb(twice_s, n))
