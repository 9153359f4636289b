"""
Hamiltonian Service

Two-site bond operators, matrix-free application of the full Hamiltonian,
a scipy LinearOperator wrapper and an independent sparse Kronecker build
used for exact diagonalization.
"""

import logging
from typing import Dict, Tuple

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import LinearOperator

from ..core.spin_algebra import LocalOperator, SpinRep, spin_matrix
from ..exceptions import DimensionMismatch, TooLarge
from .couplings import Couplings
from .model_spec import ModelSpec
from .states import DenseState

logger = logging.getLogger(__name__)

DENSE_LIMIT = 4096
MATRIX_FREE_LIMIT = 2 ** 24


def coupling_matrix(couplings: Couplings, spin: SpinRep) -> LocalOperator:
    """J_x SxSx + J_y SySy + J_z SzSz on the two-site space (first factor = site a)."""
    entries = np.zeros((spin.dim ** 2, spin.dim ** 2), dtype=complex)
    for axis, j in zip("xyz", couplings.as_tuple()):
        if j == 0:
            continue
        op = spin_matrix(spin, axis).entries
        entries += j * np.kron(op, op)
    return LocalOperator(spin.dim ** 2, entries)


def bond_operator(spec: ModelSpec, range_k: int = 1) -> LocalOperator:
    """
    Dense dim²×dim² bond matrix with the variant's couplings.

    For long_range the couplings are evaluated at kη and weighted by F_k;
    for direction_dependent the first axis is used (see axis_couplings).
    """
    if spec.variant == "long_range":
        weights = dict(spec.long_range_weights)
        couplings = spec.couplings(range_k).scaled(weights.get(range_k, 0.0))
    else:
        couplings = spec.couplings(range_k)
    return coupling_matrix(couplings, spec.spin)


def _check_budget(spec: ModelSpec, limit: int, path: str) -> None:
    if spec.hilbert_dim > limit:
        raise TooLarge(
            f"{path} needs dim^V={spec.hilbert_dim} amplitudes, limit is {limit}"
        )


def _apply_array(spec: ModelSpec, vector: np.ndarray, adjoint: bool = False) -> np.ndarray:
    dim, sites = spec.dim, spec.volume
    psi = np.asarray(vector, dtype=complex).reshape((dim,) * sites)
    out = np.zeros_like(psi)
    cache: Dict[Tuple[complex, complex, complex], np.ndarray] = {}

    for bond, couplings in spec.bond_terms():
        key = couplings.as_tuple()
        if key not in cache:
            matrix = coupling_matrix(couplings, spec.spin).entries
            cache[key] = matrix.conj().T if adjoint else matrix
        h = cache[key]
        axes = (bond.site_a, bond.site_b)
        moved = np.moveaxis(psi, axes, (0, 1))
        rest = moved.shape[2:]
        acted = (h @ moved.reshape(dim * dim, -1)).reshape((dim, dim) + rest)
        out += np.moveaxis(acted, (0, 1), axes)

    sz = spec.spin.sz_diag
    for site, coefficient in spec.boundary_fields():
        if adjoint:
            coefficient = np.conj(coefficient)
        shape = [1] * sites
        shape[site] = dim
        out += coefficient * sz.reshape(shape) * psi

    return out.reshape(-1)


def apply_hamiltonian(spec: ModelSpec, state: DenseState) -> DenseState:
    """
    H|state⟩ accumulated bond by bond in a fixed order.

    Raises:
        DimensionMismatch: If the state does not live on spec's Hilbert space
        TooLarge: Beyond the matrix-free budget
    """
    if state.local_dim != spec.dim or state.sites != spec.volume:
        raise DimensionMismatch(
            f"State has {state.sites} sites of dim {state.local_dim}, "
            f"model has {spec.volume} sites of dim {spec.dim}"
        )
    _check_budget(spec, MATRIX_FREE_LIMIT, "Matrix-free application")
    return DenseState(_apply_array(spec, state.amplitudes), spec.dim, spec.volume)


def hamiltonian_operator(spec: ModelSpec) -> LinearOperator:
    """scipy LinearOperator view of the matrix-free application."""
    _check_budget(spec, MATRIX_FREE_LIMIT, "Matrix-free application")
    n = spec.hilbert_dim
    return LinearOperator(
        (n, n),
        matvec=lambda x: _apply_array(spec, x),
        rmatvec=lambda x: _apply_array(spec, x, adjoint=True),
        dtype=complex,
    )


def _embed(ops: Dict[int, np.ndarray], dim: int, sites: int) -> sparse.csr_matrix:
    result = sparse.identity(1, dtype=complex, format="csr")
    identity = sparse.identity(dim, dtype=complex, format="csr")
    for site in range(sites):
        factor = sparse.csr_matrix(ops[site]) if site in ops else identity
        result = sparse.kron(result, factor, format="csr")
    return result


def sparse_hamiltonian(spec: ModelSpec) -> sparse.csr_matrix:
    """
    CSR matrix of H from Kronecker embeddings of single-site spin matrices.

    Shares no code with the matrix-free path apart from spin_matrix.
    """
    _check_budget(spec, MATRIX_FREE_LIMIT, "Sparse construction")
    dim, sites = spec.dim, spec.volume
    matrices = {axis: spin_matrix(spec.spin, axis).entries for axis in "xyz"}
    total = sparse.csr_matrix((spec.hilbert_dim, spec.hilbert_dim), dtype=complex)

    for bond, couplings in spec.bond_terms():
        for axis, j in zip("xyz", couplings.as_tuple()):
            if j == 0:
                continue
            op = matrices[axis]
            total = total + j * _embed({bond.site_a: op, bond.site_b: op}, dim, sites)

    for site, coefficient in spec.boundary_fields():
        total = total + coefficient * _embed({site: matrices["z"]}, dim, sites)

    logger.debug(f"Sparse Hamiltonian: shape={total.shape}, nnz={total.nnz}")
    return total.tocsr()


def dense_hamiltonian(spec: ModelSpec) -> np.ndarray:
    """
    Dense matrix for exact diagonalization.

    Raises:
        TooLarge: If dim^V exceeds the dense budget
    """
    _check_budget(spec, DENSE_LIMIT, "Dense construction")
    return sparse_hamiltonian(spec).toarray()
