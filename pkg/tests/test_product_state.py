"""Commensurability, helix product states, energies and textures."""

import math

import numpy as np
import pytest

from components.core.elliptic import EllipticContext
from components.core.lattice import ChiralityVector, build_lattice
from components.core.spin_algebra import build_spin_rep
from components.exceptions import ModelError, NotCommensurate, WrongLength
from components.helix.local_vector import local_vector
from components.helix.product_state import (
    build_shs,
    commensurability,
    commensurability_xxz,
    shs_energy,
    texture,
    variant_witness,
)
from components.helix.xy_states import parallel_overlap, xy_cycle_references
from components.model.model_spec import build_model
from components.model.parameters import EtaParameter
from components.verification.checks import rayleigh_residual

U_VALUES = [0.28, 0.28 + 0.4j, 0.13 - 0.21j, 0.71 + 0.05j, -0.37 + 0.33j]
PLUS, MINUS = ChiralityVector((1,)), ChiralityVector((-1,))


def _residual_and_energy(spec, state):
    energy, residual = rayleigh_residual(spec, state.to_dense())
    return residual, energy


class TestCommensurability:

    def test_real_eta(self):
        witness = commensurability(EtaParameter.parse("2/11"), 0.8j, (11,))
        assert (witness.p, witness.q) == ((0,), (1,))
        assert witness.exact

    def test_tau_multiple(self):
        witness = commensurability(EtaParameter.parse("10/27*tau"), 0.7j, (27,))
        assert (witness.p, witness.q) == ((5,), (0,))

    def test_floating_input(self):
        witness = commensurability(0.2 + 0.16j, 0.8j, (10,))
        assert (witness.p, witness.q) == ((1,), (1,))
        assert witness.residuals[0] < 1e-12
        assert not witness.exact

    def test_not_commensurate(self):
        with pytest.raises(NotCommensurate) as excinfo:
            commensurability(0.1 + 0.1j, 0.8j, (10,))
        assert excinfo.value.p == [1]
        assert excinfo.value.residuals[0] > 0.1

    def test_per_axis(self):
        witness = commensurability([EtaParameter.parse("1/2"), EtaParameter.parse("2/3")],
                                   0.8j, (4, 3))
        assert witness.q == (1, 1)

    def test_xxz_root_of_unity(self):
        assert commensurability_xxz(EtaParameter.parse("1/3"), (6,)).q == (1,)
        with pytest.raises(NotCommensurate):
            commensurability_xxz(EtaParameter.parse("1/4"), (6,))

    def test_open_chain_has_no_witness(self, spin_half, ctx_08):
        spec = build_model("open_chain_1d", spin_half, build_lattice((6,), "open"), "1/5",
                           ctx_08, u0=0.25)
        assert variant_witness(spec) is None


class TestXYZChain:

    @pytest.mark.parametrize("epsilon", [PLUS, MINUS])
    def test_eigenstate_at_every_u(self, xyz_chain_11, epsilon):
        for u in U_VALUES:
            state = build_shs(u, epsilon, xyz_chain_11)
            expected = shs_energy(xyz_chain_11, state.witness)
            residual, energy = _residual_and_energy(xyz_chain_11, state)
            assert residual < 1e-10
            assert abs(energy - expected) < 1e-9

    def test_locals_follow_the_helix(self, xyz_chain_11, ctx_08, spin_half):
        state = build_shs(0.28, PLUS, xyz_chain_11)
        for j, vector in enumerate(state.locals):
            expected = local_vector(0.28 + j * 2 / 11, spin_half, ctx_08)
            np.testing.assert_allclose(vector.coeffs, expected.coeffs, atol=1e-14)

    def test_wrap_consistency(self, ctx_08, spin_half):
        first = local_vector(0.3 + 0.1j, spin_half, ctx_08).coeffs
        wrapped = local_vector(0.3 + 0.1j + 11 * 2 / 11, spin_half, ctx_08).coeffs
        assert parallel_overlap(first, wrapped) == pytest.approx(1.0, abs=1e-12)

    def test_not_commensurate(self, spin_half, ctx_08):
        spec = build_model("xyz", spin_half, build_lattice((11,)), "1/5", ctx_08)
        with pytest.raises(NotCommensurate):
            build_shs(0.28, PLUS, spec)

    def test_negative_control(self, spin_half, ctx_08):
        spec = build_model("xyz", spin_half, build_lattice((11,)), [2 / 11 + 1e-3, 0.0], ctx_08)
        state = build_shs(0.28, PLUS, spec, enforce_commensurability=False)
        assert state.witness is None
        residual, _ = _residual_and_energy(spec, state)
        assert residual > 1e-5

    def test_xz_plane_texture(self, xyz_chain_11, spin_half):
        triples = np.array(texture(build_shs(0.28, PLUS, xyz_chain_11), spin_half))
        np.testing.assert_allclose(triples[:, 1], 0.0, atol=1e-10)

    def test_xy_plane_texture(self, xyz_chain_11, spin_half, ctx_08):
        state = build_shs(0.28 + ctx_08.tau / 2, PLUS, xyz_chain_11)
        triples = np.array(texture(state, spin_half))
        np.testing.assert_allclose(triples[:, 2], 0.0, atol=1e-10)

    def test_texture_has_length_s(self, xyz_chain_11, spin_half):
        triples = np.array(texture(build_shs(0.13 - 0.21j, PLUS, xyz_chain_11), spin_half))
        np.testing.assert_allclose(np.linalg.norm(triples, axis=1), 0.5, atol=1e-12)

    def test_describe(self, xyz_chain_11):
        data = build_shs(0.28, PLUS, xyz_chain_11).describe()
        assert data["epsilon"] == [1]
        assert data["witness"]["q"] == [1]


class TestOtherVariants:

    @pytest.mark.parametrize("epsilon", [ChiralityVector((1, 1)), ChiralityVector((1, -1))])
    def test_xxz_square_lattice(self, spin_half, epsilon):
        spec = build_model("xxz", spin_half, build_lattice((4, 4)), "1/2")
        state = build_shs(0.2, epsilon, spec)
        residual, energy = _residual_and_energy(spec, state)
        assert residual < 1e-10
        assert abs(energy) < 1e-10
        assert shs_energy(spec, state.witness) == pytest.approx(0.0, abs=1e-15)

    def test_xxz_transverse_helix(self, xxz_chain_6, spin_half):
        state = build_shs(0.1, PLUS, xxz_chain_6)
        np.testing.assert_allclose([v.gamma for v in state.locals], math.pi / 2, atol=1e-14)
        np.testing.assert_allclose(np.diff([v.beta for v in state.locals]), math.pi / 3, atol=1e-12)
        assert shs_energy(xxz_chain_6, state.witness) == pytest.approx(0.75)

    def test_spin_one_complex_eta(self, ctx_08):
        spec = build_model("xyz", build_spin_rep(2), build_lattice((6,)), "1/3*tau", ctx_08)
        state = build_shs(0.3 + 0.1j, PLUS, spec)
        assert state.witness.p == (1,)
        residual, energy = _residual_and_energy(spec, state)
        assert residual < 1e-9
        expected = shs_energy(spec, state.witness)
        assert abs(energy - expected) < 1e-8 * max(1.0, abs(expected))

    def test_open_chain(self, spin_half, ctx_08):
        spec = build_model("open_chain_1d", spin_half, build_lattice((6,), "open"), "1/3*tau",
                           ctx_08, u0=0.25)
        state = build_shs(None, PLUS, spec)
        residual, energy = _residual_and_energy(spec, state)
        assert residual < 1e-9
        assert energy == pytest.approx(shs_energy(spec, None), rel=1e-9, abs=1e-9)

    def test_open_chain_rejects_other_phase(self, spin_half, ctx_08):
        spec = build_model("open_chain_1d", spin_half, build_lattice((6,), "open"), "1/5",
                           ctx_08, u0=0.25)
        with pytest.raises(ModelError):
            build_shs(0.5, PLUS, spec)

    def test_direction_dependent(self, spin_half, ctx_08):
        spec = build_model("direction_dependent", spin_half, build_lattice((4, 3)), None, ctx_08,
                           eta_per_axis=["1/2", "2/3"])
        state = build_shs(0.2 + 0.1j, ChiralityVector((1, -1)), spec)
        residual, energy = _residual_and_energy(spec, state)
        assert residual < 1e-9
        assert energy == pytest.approx(shs_energy(spec, state.witness), rel=1e-9, abs=1e-9)

    def test_long_range(self, spin_half, ctx_08):
        spec = build_model("long_range", spin_half, build_lattice((6,)), "1/3", ctx_08,
                           long_range_weights=[[1, 1.0], [2, 0.5]])
        state = build_shs(0.2 + 0.1j, PLUS, spec)
        residual, energy = _residual_and_energy(spec, state)
        assert residual < 1e-9
        assert energy == pytest.approx(shs_energy(spec, state.witness), rel=1e-9, abs=1e-9)


class TestXYSector:

    @pytest.mark.parametrize("twice_s, length", [(2, 4), (3, 8)])
    def test_zero_energy(self, ctx_08, twice_s, length):
        spec = build_model("xy_a", build_spin_rep(twice_s), build_lattice((length,)), None, ctx_08)
        state = build_shs(0.21 + 0.17j, PLUS, spec)
        residual, energy = _residual_and_energy(spec, state)
        assert residual < 1e-10
        assert abs(energy) < 1e-10
        assert abs(shs_energy(spec, state.witness)) < 1e-12

    def test_xy_b(self, ctx_08):
        spec = build_model("xy_b", build_spin_rep(2), build_lattice((4,)), None, ctx_08)
        state = build_shs(0.21 + 0.17j, PLUS, spec)
        residual, energy = _residual_and_energy(spec, state)
        assert residual < 1e-9
        assert energy == pytest.approx(shs_energy(spec, state.witness), abs=1e-9)

    def test_length_must_be_multiple_of_four(self, ctx_08):
        spec = build_model("xy_a", build_spin_rep(2), build_lattice((6,)), None, ctx_08)
        with pytest.raises(WrongLength):
            build_shs(0.2, PLUS, spec)

    @pytest.mark.parametrize("twice_s", [1, 2, 3])
    def test_fundamental_cycle(self, twice_s):
        ctx = EllipticContext(0.8j)
        spin = build_spin_rep(twice_s)
        spec = build_model("xy_a", spin, build_lattice((8,)), None, ctx)
        state = build_shs((1 + ctx.tau) / 2, PLUS, spec)
        references = [vector for _, vector in xy_cycle_references(spin)]
        for j, local in enumerate(state.locals):
            assert parallel_overlap(local.coeffs, references[j % 4]) == pytest.approx(1.0, abs=1e-12)
