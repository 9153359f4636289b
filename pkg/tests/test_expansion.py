"""Q/P expansion states of the spin-½ XYZ helix."""

import numpy as np
import pytest

from components.core.lattice import build_lattice
from components.core.spin_algebra import build_spin_rep
from components.exceptions import ModelError, NearPole, TooLarge
from components.helix.expansion import (
    LEVELS,
    expansion_states,
    fit_expansion_coefficients,
    q_half,
    qp_functions,
    site_weights,
)
from components.model.model_spec import build_model
from components.verification.checks import rayleigh_residual

SAMPLE_U = [0.13 + 0.21j, -0.32 + 0.05j, 0.41 - 0.27j]


@pytest.fixture
def pole_free_chain(ctx_09, spin_half):
    """L=5, η=2τ/5: no site argument ±nη hits a zero of ℓ̄4."""
    return build_model("xyz", spin_half, build_lattice((5,)), "2/5*tau", ctx_09)


@pytest.fixture
def real_eta_chain(ctx_08, spin_half):
    return build_model("xyz", spin_half, build_lattice((4,)), "1/2", ctx_08)


class TestQP:

    def test_q_vanishes_at_origin(self, ctx_08):
        q, p = qp_functions(0.0, ctx_08)
        assert q == pytest.approx(0.0, abs=1e-15)
        assert p == pytest.approx(1.0, rel=1e-12)

    @pytest.mark.parametrize("u", SAMPLE_U)
    def test_p_squared(self, ctx_08, u):
        q, p = qp_functions(u, ctx_08)
        k = q_half(ctx_08) ** 2
        assert p * p == pytest.approx((1 - q * q / k) * (1 - k * q * q), rel=1e-10)

    @pytest.mark.parametrize("u", SAMPLE_U)
    def test_reflection(self, ctx_08, u):
        q, p = qp_functions(u, ctx_08)
        q_ref, p_ref = qp_functions(1 - u, ctx_08)
        assert q_ref == pytest.approx(q, rel=1e-12)
        assert p_ref == pytest.approx(-p, rel=1e-12)

    def test_pole(self, ctx_08):
        with pytest.raises(NearPole):
            qp_functions(ctx_08.tau, ctx_08)


class TestExpansionStates:

    @pytest.mark.parametrize("sign", [1, -1])
    @pytest.mark.parametrize("level", list(LEVELS))
    def test_levels_are_eigenstates(self, pole_free_chain, level, sign):
        state = expansion_states(level, sign, pole_free_chain)
        assert state.norm() > 0.0
        _, residual = rayleigh_residual(pole_free_chain, state)
        assert residual < 1e-9

    def test_relative_weights_fix_all_down(self, pole_free_chain):
        state = expansion_states("tilde0", 1, pole_free_chain)
        assert state.amplitudes[2 ** 5 - 1] == pytest.approx(1.0)

    @pytest.mark.parametrize("level", list(LEVELS))
    def test_parity(self, pole_free_chain, level):
        parity, order = LEVELS[level]
        amplitudes = expansion_states(level, 1, pole_free_chain).amplitudes
        flips = np.array([5 - bin(i).count("1") for i in range(2 ** 5)])
        assert np.all(amplitudes[(flips % 2) != (parity + order) % 2] == 0.0)

    def test_normalizations_are_proportional(self, pole_free_chain):
        relative = expansion_states("bar0", -1, pole_free_chain, "relative").amplitudes
        homogeneous = expansion_states("bar0", -1, pole_free_chain, "homogeneous").amplitudes
        scale = np.prod(site_weights(pole_free_chain, -1).c)
        np.testing.assert_allclose(homogeneous, scale * relative,
                                   atol=1e-12 * np.linalg.norm(homogeneous))

    @pytest.mark.parametrize("sign", [1, -1])
    def test_pole_sites_use_limiting_states(self, ctx_09, spin_half, sign):
        spec = build_model("xyz", spin_half, build_lattice((6,)), "1/3*tau", ctx_09)
        assert site_weights(spec, sign).poles == (2,)
        for level in LEVELS:
            state = expansion_states(level, sign, spec)
            assert state.norm() > 0.0
            assert np.all(np.isfinite(state.amplitudes))
            _, residual = rayleigh_residual(spec, state)
            assert residual < 1e-9


class TestFit:

    def test_lowest_coefficients_match_states(self, real_eta_chain):
        fit = fit_expansion_coefficients(real_eta_chain, 1)
        assert fit.residual < 1e-8
        assert fit.degree == 8
        tilde0 = expansion_states("tilde0", 1, real_eta_chain, "homogeneous").amplitudes
        bar0 = expansion_states("bar0", 1, real_eta_chain, "homogeneous").amplitudes
        np.testing.assert_allclose(fit.a[0], tilde0, atol=1e-10 * np.linalg.norm(tilde0))
        np.testing.assert_allclose(fit.b[0], bar0, atol=1e-10 * np.linalg.norm(bar0))

    def test_too_few_samples(self, real_eta_chain):
        with pytest.raises(ModelError):
            fit_expansion_coefficients(real_eta_chain, 1, u_samples=[0.1 + 0.4j, 0.2 + 0.4j])


class TestGuards:

    def test_spin_one_rejected(self, ctx_08):
        spec = build_model("xyz", build_spin_rep(2), build_lattice((4,)), "1/2", ctx_08)
        with pytest.raises(ModelError):
            expansion_states("tilde0", 1, spec)

    def test_size_limit(self, ctx_08, spin_half):
        spec = build_model("xyz", spin_half, build_lattice((17,)), "2/17", ctx_08)
        with pytest.raises(TooLarge):
            expansion_states("tilde0", 1, spec)

    def test_unknown_level_and_normalization(self, real_eta_chain):
        with pytest.raises(ModelError):
            expansion_states("tilde2", 1, real_eta_chain)
        with pytest.raises(ModelError):
            expansion_states("tilde0", 1, real_eta_chain, normalization="unit")
        with pytest.raises(ModelError):
            expansion_states("tilde0", 0, real_eta_chain)
