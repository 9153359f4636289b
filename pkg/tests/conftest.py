"""Shared fixtures for the spin helix test suites."""

import numpy as np
import pytest

from components.core.elliptic import EllipticContext
from components.core.lattice import build_lattice
from components.core.spin_algebra import build_spin_rep
from components.model.model_spec import build_model


@pytest.fixture
def ctx_08():
    """τ = 0.8i, the nome of the reference XYZ chain."""
    return EllipticContext(0.8j)


@pytest.fixture
def ctx_07():
    return EllipticContext(0.7j)


@pytest.fixture
def ctx_09():
    return EllipticContext(0.9j)


@pytest.fixture
def ctx_unit():
    return EllipticContext(1j)


@pytest.fixture
def rng():
    return np.random.default_rng(7)


@pytest.fixture
def spin_half():
    return build_spin_rep(1)


@pytest.fixture
def xyz_chain_11(ctx_08, spin_half):
    """Spin-½ XYZ chain, L=11, η=2/11, τ=0.8i."""
    return build_model("xyz", spin_half, build_lattice((11,)), "2/11", ctx_08)


@pytest.fixture
def xxz_chain_6(spin_half):
    """Spin-½ XXZ chain, L=6, η=1/3."""
    return build_model("xxz", spin_half, build_lattice((6,)), "1/3")
