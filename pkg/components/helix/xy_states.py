"""
XY-Model States

The spin-1 alternative helix Φ(u) of the η = ½ XY model and the four
in-plane reference states |±s⟩_x, |±s⟩_y visited by the XY helix.
"""

import logging
from typing import List, Tuple

import numpy as np
from scipy import linalg

from ..core.lattice import ChiralityVector
from ..core.spin_algebra import SpinRep, spin_matrix
from ..exceptions import ModelError, WrongLength
from ..model.model_spec import ModelSpec
from .local_vector import LocalVector
from .product_state import ProductState

logger = logging.getLogger(__name__)


def spin1_local(u: complex, ctx) -> LocalVector:
    """φ(u) = ℓ̄1(u)²|1⟩ − ℓ̄4(u)²|−1⟩, normalized; no |0⟩ component."""
    u = complex(u)
    t1 = ctx.bell(1, u).value
    t4 = ctx.bell(4, u).value
    scale = max(abs(t1), abs(t4))
    coeffs = np.array([(t1 / scale) ** 2, 0.0, -(t4 / scale) ** 2], dtype=complex)
    return LocalVector(coeffs / np.linalg.norm(coeffs), u)


def spin1_xy_state(u: complex, spec: ModelSpec) -> ProductState:
    """
    ⊗_j φ(u + (n_{j,1} + ... + n_{j,d})/2) for the spin-1 XY model at η = ½.

    Raises:
        ModelError: Unless spec is the xy_a variant with 2s = 2
        WrongLength: If some L_α is odd
    """
    if spec.variant != "xy_a" or spec.spin.twice_s != 2:
        raise ModelError(
            f"The spin-1 XY state needs variant xy_a with twice_s=2, "
            f"got {spec.variant} with twice_s={spec.spin.twice_s}"
        )
    if any(L % 2 for L in spec.lattice.dims):
        raise WrongLength(f"The spin-1 XY state needs even lengths, got {spec.lattice.dims}")
    offsets = spec.lattice.site_coords.sum(axis=1) / 2.0
    locals_ = tuple(spin1_local(complex(u) + offset, spec.ctx) for offset in offsets)
    return ProductState(locals_, complex(u), ChiralityVector.uniform(spec.d),
                        tuple([0.5 + 0j] * spec.d))


def axis_eigenvector(spin: SpinRep, axis: str, top: bool = True) -> np.ndarray:
    """Unit eigenvector of S^axis with eigenvalue s (top) or -s."""
    values, vectors = linalg.eigh(spin_matrix(spin, axis).entries)
    return vectors[:, -1] if top else vectors[:, 0]


def xy_cycle_references(spin: SpinRep) -> List[Tuple[str, np.ndarray]]:
    """|s⟩_x, |s⟩_y, |−s⟩_x, |−s⟩_y in cycle order."""
    return [
        ("+x", axis_eigenvector(spin, "x", True)),
        ("+y", axis_eigenvector(spin, "y", True)),
        ("-x", axis_eigenvector(spin, "x", False)),
        ("-y", axis_eigenvector(spin, "y", False)),
    ]


def parallel_overlap(a: np.ndarray, b: np.ndarray) -> float:
    """|⟨a|b⟩| / (‖a‖‖b‖); 1 when the vectors are parallel."""
    return float(abs(np.vdot(a, b)) / (np.linalg.norm(a) * np.linalg.norm(b)))
