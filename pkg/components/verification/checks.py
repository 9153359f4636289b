"""
Verification Checks

Residual-based checks: the two-site divergence condition, eigenstate
residuals with Rayleigh quotients, tower-state entropies against Schmidt
decompositions, trigonometric-limit convergence and u-independence of the
helix energy.
"""

import logging
import math
import time
from itertools import combinations
from typing import Optional, Sequence, Union

import numpy as np

from ..core.elliptic import EllipticContext
from ..core.lattice import ChiralityVector
from ..core.spin_algebra import SpinRep, spin_matrix
from ..exceptions import ModelError, TooLarge
from ..model.couplings import complex_pair, couplings_xyz
from ..model.hamiltonian import apply_hamiltonian, coupling_matrix
from ..model.helper_functions import HelixFunctions
from ..model.model_spec import ModelSpec
from ..model.states import DenseState
from ..helix.local_vector import local_vector
from ..helix.product_state import ProductState, build_shs
from ..helix.tower import asymptotic_entropy, tower_entropy, tower_state
from .reports import VerificationReport

logger = logging.getLogger(__name__)

SCHMIDT_LIMIT = 2 ** 20

StateLike = Union[DenseState, ProductState]


def _log_outcome(report: VerificationReport) -> VerificationReport:
    status = "PASS" if report.passed else "FAIL"
    logger.info(f"{status} {report.check_name}: residual={report.residual:.3e} "
                f"(tol {report.tolerance:.1e})")
    return report


def check_divergence(
    spin: SpinRep,
    eta: complex,
    tau: complex,
    u: complex,
    sign: int = 1,
    ctx: Optional[EllipticContext] = None,
    tolerance: float = 1e-10
) -> VerificationReport:
    """
    Two-site identity
        H_ij ψ(u)ψ(u±η) = s²b(±u) ψψ ± s[a(u)S_i^z − a(u±η)S_j^z] ψψ.

    The minus branch is evaluated as the plus branch with η → −η.

    Raises:
        NearPole: If u or u±η sits on a zero of ℓ1
    """
    start = time.perf_counter()
    if sign not in (1, -1):
        raise ModelError(f"sign must be +1 or -1, got {sign}")
    ctx = ctx if ctx is not None else EllipticContext(tau)
    eta, u = complex(eta), complex(u)
    shifted = u + sign * eta

    pair = np.kron(local_vector(u, spin, ctx).coeffs, local_vector(shifted, spin, ctx).coeffs)
    lhs = coupling_matrix(couplings_xyz(eta, ctx), spin).entries @ pair

    helper = HelixFunctions(sign * eta, ctx)
    sz = spin_matrix(spin, "z").entries
    identity = np.eye(spin.dim)
    field = helper.a(u) * np.kron(sz, identity) - helper.a(shifted) * np.kron(identity, sz)
    rhs = spin.s ** 2 * helper.b(u) * pair + spin.s * (field @ pair)

    scale = max(np.linalg.norm(lhs), np.linalg.norm(rhs), 1e-300)
    residual = float(np.linalg.norm(lhs - rhs) / scale)
    report = VerificationReport(
        check_name="divergence",
        parameters={"twice_s": spin.twice_s, "eta": complex_pair(eta), "tau": complex_pair(tau),
                    "u": complex_pair(u), "sign": sign},
        residual=residual,
        passed=residual <= tolerance,
        tolerance=tolerance,
        wall_time=time.perf_counter() - start,
    )
    return _log_outcome(report)


def rayleigh_residual(spec: ModelSpec, state: DenseState):
    """(λ, ‖Hx − λx‖/‖x‖) with λ = ⟨x|H|x⟩/⟨x|x⟩."""
    norm = state.norm()
    if norm == 0.0:
        return complex("nan"), math.inf
    h_state = apply_hamiltonian(spec, state).amplitudes
    x = state.amplitudes
    energy = complex(np.vdot(x, h_state) / norm ** 2)
    residual = float(np.linalg.norm(h_state - energy * x) / norm)
    return energy, residual


def check_eigenstate(
    spec: ModelSpec,
    state: StateLike,
    expected_energy: Optional[complex] = None,
    tolerance: float = 1e-9,
    check_name: str = "eigenstate",
    parameters: Optional[dict] = None
) -> VerificationReport:
    """
    Residual ‖Hx − λx‖/‖x‖ at the Rayleigh quotient λ.

    With an expected energy the check also requires
    |λ − E| <= tolerance·max(1, |E|).

    Raises:
        TooLarge: Beyond the matrix-free budget
    """
    start = time.perf_counter()
    dense = state.to_dense() if isinstance(state, ProductState) else state
    energy, residual = rayleigh_residual(spec, dense)
    passed = residual <= tolerance
    details = {}
    if expected_energy is not None:
        deviation = abs(energy - complex(expected_energy))
        details["energy_deviation"] = deviation
        passed = passed and deviation <= tolerance * max(1.0, abs(expected_energy))
    params = {"model": spec.to_dict()}
    if isinstance(state, ProductState):
        params["state"] = state.describe()
    params.update(parameters or {})
    report = VerificationReport(
        check_name=check_name,
        parameters=params,
        residual=residual,
        passed=bool(passed),
        tolerance=tolerance,
        measured_energy=energy,
        expected_energy=expected_energy,
        details=details,
        wall_time=time.perf_counter() - start,
    )
    return _log_outcome(report)


def check_entropy(
    spec: ModelSpec,
    n: int,
    va: int,
    tolerance: float = 1e-12
) -> VerificationReport:
    """
    Closed-form tower entropy against the Schmidt spectrum of the first va sites.

    Raises:
        TooLarge: If dim^V exceeds the Schmidt budget
        OutOfRange: For n or va outside their ranges
    """
    start = time.perf_counter()
    if spec.hilbert_dim > SCHMIDT_LIMIT:
        raise TooLarge(f"Schmidt decomposition needs dim^V={spec.hilbert_dim} <= {SCHMIDT_LIMIT}")
    formula = tower_entropy(n, va, spec.spin.twice_s, spec.volume)
    state = tower_state(n, ChiralityVector.uniform(spec.d), spec).amplitudes
    schmidt = state.entanglement_entropy(va)
    residual = abs(formula - schmidt)
    report = VerificationReport(
        check_name="entropy",
        parameters={"model": spec.to_dict(), "n": n, "va": va},
        residual=residual,
        passed=residual <= tolerance,
        tolerance=tolerance,
        details={"formula": formula, "schmidt": schmidt,
                 "asymptotic": asymptotic_entropy(spec.spin.twice_s, spec.volume)},
        wall_time=time.perf_counter() - start,
    )
    return _log_outcome(report)


def _limit_overlaps(ctx: EllipticContext, eta: float, spin: SpinRep, sites: int = 4):
    """
    |⟨Ω|Ψ⟩| at u = 0.9τ and |⟨Ω̄|Ψ⟩| at u = 0.1τ for a short helix.
    """
    def polarized_overlap(u: complex, index: int) -> float:
        overlap = 1.0
        for j in range(sites):
            overlap *= abs(local_vector(u + j * eta, spin, ctx).coeffs[index])
        return overlap

    return (polarized_overlap(0.9 * ctx.tau + 0.2, 0),
            polarized_overlap(0.1 * ctx.tau + 0.2, spin.dim - 1))


def check_trig_limit(
    eta: float,
    im_tau_sequence: Sequence[float],
    samples: int = 16,
    tolerance: float = 1e-6,
    spin: Optional[SpinRep] = None
) -> VerificationReport:
    """
    On u = v + (1+τ)/2 the functions b(u), a(u) and ℓ̄4(u)/ℓ̄1(u) approach
    cos πη, −i sin πη and e^{iπv}; the worst deviation must decrease along
    the τ-sequence and end below tolerance.
    """
    start = time.perf_counter()
    eta = float(eta)
    v_values = (np.arange(samples) + 0.25) / samples
    deviations = []
    ctx = None
    for im_tau in im_tau_sequence:
        ctx = EllipticContext(1j * float(im_tau))
        helper = HelixFunctions(eta, ctx)
        worst = 0.0
        for v in v_values:
            u = v + (1.0 + ctx.tau) / 2.0
            ratio = ctx.bell(4, u).value / ctx.bell(1, u).value
            worst = max(
                worst,
                abs(helper.b(u) - math.cos(math.pi * eta)),
                abs(helper.a(u) + 1j * math.sin(math.pi * eta)),
                abs(ratio - np.exp(1j * math.pi * v)),
            )
        deviations.append(worst)
        logger.debug(f"Trigonometric limit at Im(tau)={im_tau}: max deviation {worst:.3e}")

    monotone = all(b < a for a, b in zip(deviations, deviations[1:]))
    final = deviations[-1] if deviations else math.inf
    details = {"deviations": deviations, "monotone": monotone}
    if ctx is not None and spin is not None:
        omega, omega_bar = _limit_overlaps(ctx, eta, spin)
        details["overlap_omega"] = omega
        details["overlap_omega_bar"] = omega_bar
    report = VerificationReport(
        check_name="trig_limit",
        parameters={"eta": eta, "im_tau_sequence": list(im_tau_sequence), "samples": samples},
        residual=final,
        passed=bool(monotone and final <= tolerance),
        tolerance=tolerance,
        details=details,
        wall_time=time.perf_counter() - start,
    )
    return _log_outcome(report)


def check_u_independence(
    spec: ModelSpec,
    epsilon: ChiralityVector,
    u_values: Sequence[complex],
    tolerance: float = 1e-9
) -> VerificationReport:
    """Rayleigh quotients of the helix at several u agree pairwise."""
    start = time.perf_counter()
    energies = [rayleigh_residual(spec, build_shs(u, epsilon, spec).to_dense())[0]
                for u in u_values]
    spread = max((abs(a - b) for a, b in combinations(energies, 2)), default=0.0)
    scale = max([1.0] + [abs(e) for e in energies])
    report = VerificationReport(
        check_name="u_independence",
        parameters={"model": spec.to_dict(), "epsilon": list(epsilon),
                    "u_values": [complex_pair(u) for u in u_values]},
        residual=spread / scale,
        passed=spread <= tolerance * scale,
        tolerance=tolerance,
        measured_energy=energies[0] if energies else None,
        details={"energies": energies},
        wall_time=time.perf_counter() - start,
    )
    return _log_outcome(report)
