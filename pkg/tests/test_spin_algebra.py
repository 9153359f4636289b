"""su(2) representation data and spin matrices."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from components.core.spin_algebra import (
    binomial_weight,
    build_spin_rep,
    casimir,
    spin_matrix,
)
from components.exceptions import InvalidSpin

ATOL = 1e-12

spins = st.integers(min_value=1, max_value=8)


def _commutator(a, b):
    return a @ b - b @ a


class TestRepresentation:

    @pytest.mark.parametrize("twice_s, dim", [(1, 2), (2, 3), (3, 4), (4, 5)])
    def test_dimension(self, twice_s, dim):
        rep = build_spin_rep(twice_s)
        assert rep.dim == dim
        assert rep.s == twice_s / 2

    @pytest.mark.parametrize("twice_s", [0, -1])
    def test_invalid_spin(self, twice_s):
        with pytest.raises(InvalidSpin):
            build_spin_rep(twice_s)

    def test_sz_diagonal_order(self):
        rep = build_spin_rep(3)
        np.testing.assert_allclose(rep.sz_diag, [1.5, 0.5, -0.5, -1.5])

    def test_index_of(self):
        rep = build_spin_rep(2)
        assert rep.index_of(2) == 0
        assert rep.index_of(0) == 1
        assert rep.index_of(-2) == 2
        with pytest.raises(ValueError):
            rep.index_of(1)

    def test_ladder_edges_vanish(self):
        rep = build_spin_rep(4)
        assert rep.lambda_plus_at(4) == 0.0
        assert rep.lambda_minus_at(-4) == 0.0
        assert rep.lambda_plus_at(0) == pytest.approx(math.sqrt(6.0))

    @given(twice_s=spins)
    @settings(max_examples=20, deadline=None)
    def test_kappa_is_binomial(self, twice_s):
        rep = build_spin_rep(twice_s)
        expected = [binomial_weight(twice_s, n) for n in range(twice_s + 1)]
        np.testing.assert_allclose(rep.kappa, expected, rtol=1e-13)
        assert rep.kappa_at(-1) == 0.0
        assert rep.kappa_at(twice_s + 1) == 0.0


class TestSpinMatrices:

    @given(twice_s=spins)
    @settings(max_examples=20, deadline=None)
    def test_commutation_relations(self, twice_s):
        rep = build_spin_rep(twice_s)
        sx, sy, sz = (spin_matrix(rep, a).entries for a in "xyz")
        np.testing.assert_allclose(_commutator(sx, sy), 1j * sz, atol=ATOL)
        np.testing.assert_allclose(_commutator(sy, sz), 1j * sx, atol=ATOL)
        np.testing.assert_allclose(_commutator(sz, sx), 1j * sy, atol=ATOL)

    @given(twice_s=spins)
    @settings(max_examples=20, deadline=None)
    def test_casimir(self, twice_s):
        rep = build_spin_rep(twice_s)
        s = rep.s
        np.testing.assert_allclose(casimir(rep), s * (s + 1) * np.eye(rep.dim), atol=1e-11)

    @pytest.mark.parametrize("axis", ["x", "y", "z"])
    def test_hermitian(self, axis):
        assert spin_matrix(build_spin_rep(3), axis).is_hermitian

    def test_ladder_relation(self):
        rep = build_spin_rep(2)
        plus, minus = spin_matrix(rep, "+").entries, spin_matrix(rep, "-").entries
        sz = spin_matrix(rep, "z").entries
        np.testing.assert_allclose(_commutator(plus, minus), 2 * sz, atol=ATOL)
        np.testing.assert_allclose(plus.conj().T, minus, atol=ATOL)

    def test_unknown_axis(self):
        with pytest.raises(ValueError):
            spin_matrix(build_spin_rep(1), "w")

    def test_entries_read_only(self):
        entries = spin_matrix(build_spin_rep(1), "x").entries
        with pytest.raises(ValueError):
            entries[0, 0] = 1.0
