"""
Lattice Service

d-dimensional hypercubic lattices with periodic or open boundaries,
nearest and k-th axial-neighbor bond lists and the helix phase ε·n_j.
Sites are linearized with axis 1 fastest.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from ..exceptions import DimensionMismatch, InvalidDims, ModelError, RangeTooLarge

logger = logging.getLogger(__name__)

BOUNDARIES = ("periodic", "open")


@dataclass(frozen=True)
class Bond:
    """Pair of sites displaced by `range` along axis `direction`."""
    site_a: int
    site_b: int
    direction: int
    range: int = 1
    wraps: bool = False


@dataclass(frozen=True)
class ChiralityVector:
    """Winding direction per axis, each entry ±1."""
    epsilon: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(e) for e in self.epsilon)
        if not values or any(e not in (1, -1) for e in values):
            raise ModelError(f"Chirality entries must be +1 or -1, got {self.epsilon}")
        object.__setattr__(self, "epsilon", values)

    @classmethod
    def uniform(cls, d: int, sign: int = 1) -> "ChiralityVector":
        return cls(tuple([sign] * d))

    def __len__(self) -> int:
        return len(self.epsilon)

    def __iter__(self) -> Iterator[int]:
        return iter(self.epsilon)

    def as_array(self) -> np.ndarray:
        return np.array(self.epsilon, dtype=int)


@dataclass(frozen=True)
class Lattice:
    """Hypercubic lattice geometry."""
    dims: Tuple[int, ...]
    boundary: str = "periodic"
    strides: Tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        dims = tuple(int(L) for L in self.dims)
        if not dims:
            raise InvalidDims("Lattice needs at least one dimension")
        if any(L < 1 for L in dims):
            raise InvalidDims(f"All lengths must be >= 1, got {dims}")
        if self.boundary not in BOUNDARIES:
            raise InvalidDims(
                f"Unknown boundary '{self.boundary}'. Available: {', '.join(BOUNDARIES)}"
            )
        if self.boundary == "periodic" and any(L == 1 for L in dims):
            raise InvalidDims(f"Periodic axes need length >= 2, got {dims}")
        strides = tuple(int(np.prod(dims[:a])) for a in range(len(dims)))
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "strides", strides)

    @property
    def d(self) -> int:
        return len(self.dims)

    @property
    def volume(self) -> int:
        return int(np.prod(self.dims))

    @property
    def is_periodic(self) -> bool:
        return self.boundary == "periodic"

    @cached_property
    def site_coords(self) -> np.ndarray:
        """Array of shape (V, d); row j holds n_j."""
        j = np.arange(self.volume)
        coords = np.stack([(j // s) % L for s, L in zip(self.strides, self.dims)], axis=1)
        coords.setflags(write=False)
        return coords

    def coords(self, j: int) -> Tuple[int, ...]:
        return tuple(int(c) for c in self.site_coords[j])

    def index(self, coords: Sequence[int]) -> int:
        if len(coords) != self.d:
            raise InvalidDims(f"Expected {self.d} coordinates, got {len(coords)}")
        return int(sum((int(c) % L) * s for c, L, s in zip(coords, self.dims, self.strides)))

    def _shifted_bonds(self, k: int) -> List[Bond]:
        bonds = []
        for axis, (L, stride) in enumerate(zip(self.dims, self.strides)):
            column = self.site_coords[:, axis]
            for j in range(self.volume):
                n = int(column[j])
                if n + k < L:
                    bonds.append(Bond(j, j + k * stride, axis, k, False))
                elif self.is_periodic:
                    bonds.append(Bond(j, j + (k - L) * stride, axis, k, True))
        return bonds

    @cached_property
    def bonds(self) -> Tuple[Bond, ...]:
        """Nearest-neighbor bonds ordered by (axis, site)."""
        return tuple(self._shifted_bonds(1))

    def seam_count(self, axis: int, k: int = 1) -> int:
        return sum(1 for b in axial_neighbors(self, k) if b.direction == axis and b.wraps)


def build_lattice(dims: Sequence[int], boundary: str = "periodic") -> Lattice:
    """
    Build a lattice and materialize its coordinate map and bond list.

    Raises:
        InvalidDims: If a length is below 1, or 1 along a periodic axis
    """
    lattice = Lattice(tuple(dims), boundary)
    logger.debug(
        f"Built {lattice.boundary} lattice {lattice.dims}: V={lattice.volume}, "
        f"{len(lattice.bonds)} bonds"
    )
    return lattice


def phase(lattice: Lattice, epsilon: ChiralityVector, j: int) -> int:
    """Signed integer ε·n_j."""
    if len(epsilon) != lattice.d:
        raise DimensionMismatch(f"Chirality has {len(epsilon)} entries, lattice has d={lattice.d}")
    return int(np.dot(epsilon.as_array(), lattice.site_coords[j]))


def phases(lattice: Lattice, epsilon: ChiralityVector) -> np.ndarray:
    """ε·n_j for all sites at once."""
    if len(epsilon) != lattice.d:
        raise DimensionMismatch(f"Chirality has {len(epsilon)} entries, lattice has d={lattice.d}")
    return lattice.site_coords @ epsilon.as_array()


def axial_neighbors(lattice: Lattice, k: int) -> List[Bond]:
    """
    All pairs displaced by k along one axis, ordered by (axis, site).

    Raises:
        RangeTooLarge: If 2k >= L_α on a periodic axis
    """
    if k < 1:
        raise RangeTooLarge(f"Range must be >= 1, got {k}")
    if lattice.is_periodic:
        for L in lattice.dims:
            if 2 * k >= L:
                raise RangeTooLarge(f"Range k={k} wraps ambiguously on an axis of length {L}")
    return lattice._shifted_bonds(k)
