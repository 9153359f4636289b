"""Spin-1 XY helix and the in-plane reference states."""

import numpy as np
import pytest

from components.core.lattice import build_lattice
from components.core.spin_algebra import build_spin_rep, spin_matrix
from components.exceptions import ModelError, WrongLength
from components.helix.xy_states import (
    axis_eigenvector,
    parallel_overlap,
    spin1_local,
    spin1_xy_state,
    xy_cycle_references,
)
from components.model.model_spec import build_model
from components.verification.checks import rayleigh_residual


@pytest.fixture
def spin_one():
    return build_spin_rep(2)


@pytest.fixture
def xy_chain(spin_one, ctx_08):
    return build_model("xy_a", spin_one, build_lattice((4,)), None, ctx_08)


class TestSpinOneXY:

    @pytest.mark.parametrize("u", [0.1, 0.3 + 0.2j, -0.2 + 0.35j, 0.45 - 0.1j, 0.05 + 0.4j])
    def test_zero_energy_eigenstate(self, xy_chain, u):
        state = spin1_xy_state(u, xy_chain)
        energy, residual = rayleigh_residual(xy_chain, state.to_dense())
        assert residual < 1e-10
        assert abs(energy) < 1e-10

    def test_no_middle_component(self, ctx_08):
        vector = spin1_local(0.2 + 0.3j, ctx_08)
        assert vector.coeffs[1] == 0.0
        assert np.linalg.norm(vector.coeffs) == pytest.approx(1.0)

    def test_spin_half_rejected(self, spin_half, ctx_08):
        spec = build_model("xy_a", spin_half, build_lattice((4,)), None, ctx_08)
        with pytest.raises(ModelError):
            spin1_xy_state(0.1, spec)

    def test_odd_length_rejected(self, spin_one, ctx_08):
        spec = build_model("xy_a", spin_one, build_lattice((5,)), None, ctx_08)
        with pytest.raises(WrongLength):
            spin1_xy_state(0.1, spec)


class TestReferences:

    @pytest.mark.parametrize("twice_s", [1, 2, 3])
    def test_axis_eigenvectors(self, twice_s):
        spin = build_spin_rep(twice_s)
        for axis in ("x", "y"):
            matrix = spin_matrix(spin, axis).entries
            top = axis_eigenvector(spin, axis, True)
            bottom = axis_eigenvector(spin, axis, False)
            np.testing.assert_allclose(matrix @ top, spin.s * top, atol=1e-12)
            np.testing.assert_allclose(matrix @ bottom, -spin.s * bottom, atol=1e-12)

    def test_cycle_order(self, spin_half):
        labels = [label for label, _ in xy_cycle_references(spin_half)]
        assert labels == ["+x", "+y", "-x", "-y"]

    def test_parallel_overlap_ignores_phase(self):
        a = np.array([1.0, 1j])
        assert parallel_overlap(a, 3j * a) == pytest.approx(1.0)
        assert parallel_overlap(np.array([1.0, 0.0]), np.array([0.0, 1.0])) == 0.0
