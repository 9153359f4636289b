"""
Degeneracy Scan

Exact diagonalization of a small model, the eigenvalue cluster around a
target energy, and the linear span of a family of constructed states.
"""

import logging
import time
from typing import Optional, Sequence

import numpy as np
from scipy import linalg

from ..exceptions import ModelError
from ..model.hamiltonian import apply_hamiltonian, dense_hamiltonian
from ..model.model_spec import ModelSpec
from ..model.states import DenseState
from .reports import DegeneracyReport

logger = logging.getLogger(__name__)


def predicted_tower_dimension(d: int, twice_s: int, volume: int) -> int:
    """Independent tower states 2^d(2sV − 1) + 2 for generic commensurate η."""
    return 2 ** d * (twice_s * volume - 1) + 2


def span_dimension(states: Sequence[DenseState], rank_tol: float = 1e-8) -> int:
    """Numerical rank of the normalized states, relative to the largest singular value."""
    vectors = [s.amplitudes / s.norm() for s in states if s.norm() > 0.0]
    if not vectors:
        return 0
    singular = linalg.svdvals(np.stack(vectors, axis=1))
    return int(np.sum(singular > rank_tol * singular[0]))


def spectrum(spec: ModelSpec):
    """
    All eigenvalues of the dense Hamiltonian, sorted by (re, im), and whether
    the Hermitian solver was used.

    Raises:
        TooLarge: Beyond the dense diagonalization budget
    """
    matrix = dense_hamiltonian(spec)
    scale = max(float(np.max(np.abs(matrix))), 1.0)
    hermitian = bool(np.allclose(matrix, matrix.conj().T, atol=1e-12 * scale, rtol=0.0))
    if hermitian:
        eigenvalues = linalg.eigvalsh(matrix).astype(complex)
    else:
        logger.info("Hamiltonian is not Hermitian; using the general eigensolver")
        eigenvalues = linalg.eigvals(matrix)
    return np.sort_complex(eigenvalues), hermitian


def target_residual(spec: ModelSpec, state: DenseState, target: complex) -> float:
    """‖Hx − Ex‖/‖x‖ at a fixed energy E."""
    h_state = apply_hamiltonian(spec, state).amplitudes
    return float(np.linalg.norm(h_state - target * state.amplitudes) / state.norm())


def degeneracy_scan(
    spec: ModelSpec,
    target_energy: complex,
    states: Sequence[DenseState],
    predicted_dimension: Optional[int] = None,
    cluster_tol: float = 1e-8,
    rank_tol: float = 1e-8,
    eigenvalues: Optional[np.ndarray] = None,
    hermitian: Optional[bool] = None
) -> DegeneracyReport:
    """
    Compare the eigenvalue cluster at target_energy with the span of states.

    Eigenvalues within cluster_tol·max(1, spectral range) of the target form
    the cluster. A precomputed spectrum may be passed in together with the
    hermitian flag it was computed with.

    Raises:
        TooLarge: Beyond the dense diagonalization budget
        ModelError: If no states are given or all of them vanish
    """
    start = time.perf_counter()
    if not states:
        raise ModelError("degeneracy_scan needs at least one constructed state")
    nonzero = [state for state in states if state.norm() > 0.0]
    if not nonzero:
        raise ModelError("degeneracy_scan: every constructed state has zero norm")
    if eigenvalues is None:
        eigenvalues, hermitian = spectrum(spec)
    eigenvalues = np.asarray(eigenvalues, dtype=complex)

    spread = float(np.hypot(np.ptp(eigenvalues.real), np.ptp(eigenvalues.imag)))
    window = cluster_tol * max(1.0, spread)
    target = complex(target_energy)
    cluster = [complex(e) for e in eigenvalues if abs(e - target) <= window]

    span = span_dimension(states, rank_tol)
    max_residual = max(target_residual(spec, state, target) for state in nonzero)
    report = DegeneracyReport(
        target_energy=target,
        eigenvalue_cluster=cluster,
        span_dimension=span,
        predicted_dimension=predicted_dimension,
        max_state_residual=max_residual,
        hermitian=bool(hermitian),
        parameters={"model": spec.to_dict(), "state_count": len(states),
                    "cluster_tol": cluster_tol, "rank_tol": rank_tol},
        wall_time=time.perf_counter() - start,
    )
    logger.info(f"Degeneracy at E={target:.6g}: cluster={report.cluster_size}, "
                f"span={span}, predicted={predicted_dimension}")
    return report
