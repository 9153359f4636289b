"""
Spin-Helix Product States

Commensurability witnesses, helix product states for every model variant,
closed-form energies and spin textures.
"""

import cmath
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..core.lattice import ChiralityVector
from ..exceptions import ModelError, NotCommensurate, WrongLength
from ..model.couplings import complex_pair
from ..model.model_spec import XY_VARIANTS, ModelSpec
from ..model.parameters import EtaParameter
from ..model.states import DenseState, product_amplitudes
from .local_vector import LocalVector, local_expectations, local_vector, trig_local_vector

logger = logging.getLogger(__name__)

DEFAULT_COMMENSURABILITY_TOL = 1e-9

EtaInput = Union[complex, EtaParameter]


@dataclass(frozen=True)
class CommensurabilityWitness:
    """Integers with L_α η_α = 2p_α τ + 2q_α, one pair per axis."""
    p: Tuple[int, ...]
    q: Tuple[int, ...]
    residuals: Tuple[float, ...]
    exact: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {"p": list(self.p), "q": list(self.q),
                "residuals": list(self.residuals), "exact": self.exact}


def _as_axis_list(eta: Union[EtaInput, Sequence[EtaInput]], d: int) -> List[EtaInput]:
    if isinstance(eta, (list, tuple)):
        if len(eta) != d:
            raise ModelError(f"Expected {d} per-axis eta values, got {len(eta)}")
        return list(eta)
    return [eta] * d


def _exact_pair(eta: EtaParameter, length: int) -> Optional[Tuple[int, int]]:
    p = Fraction(length) * eta.tau_part / 2
    q = Fraction(length) * eta.real_part / 2
    if p.denominator == 1 and q.denominator == 1:
        return int(p), int(q)
    return None


def commensurability(
    eta: Union[EtaInput, Sequence[EtaInput]],
    tau: complex,
    dims: Sequence[int],
    tolerance: float = DEFAULT_COMMENSURABILITY_TOL
) -> CommensurabilityWitness:
    """
    Solve L_α η_α = 2p_α τ + 2q_α per axis.

    Exact η inputs are decided in rational arithmetic; floating inputs are
    rounded to the nearest lattice point and judged by the residual.

    Raises:
        NotCommensurate: With the per-axis residuals and nearest (p, q)
    """
    tau = complex(tau)
    etas = _as_axis_list(eta, len(dims))
    ps, qs, residuals = [], [], []
    all_exact = True
    for length, eta_axis in zip(dims, etas):
        exact = None
        if isinstance(eta_axis, EtaParameter) and eta_axis.is_exact:
            exact = _exact_pair(eta_axis, length)
        value = eta_axis.resolve(tau) if isinstance(eta_axis, EtaParameter) else complex(eta_axis)
        if exact is not None:
            p, q = exact
            residual = 0.0
        else:
            all_exact = False
            target = length * value
            p = int(round(target.imag / (2.0 * tau.imag)))
            q = int(round((target.real - 2.0 * p * tau.real) / 2.0))
            residual = abs(target - 2.0 * p * tau - 2.0 * q)
        ps.append(p)
        qs.append(q)
        residuals.append(residual)

    if any(r > tolerance for r in residuals):
        raise NotCommensurate(
            f"L*eta is not on the lattice 2p*tau + 2q (residuals {residuals}, "
            f"nearest p={ps}, q={qs})",
            residuals=residuals, p=ps, q=qs,
        )
    witness = CommensurabilityWitness(tuple(ps), tuple(qs), tuple(residuals), all_exact)
    logger.debug(f"Commensurability witness: {witness}")
    return witness


def commensurability_xxz(
    eta: EtaInput,
    dims: Sequence[int],
    tolerance: float = DEFAULT_COMMENSURABILITY_TOL
) -> CommensurabilityWitness:
    """
    Root-of-unity condition L_α η = 2q_α.

    Raises:
        NotCommensurate: If some L_α η is not an even integer
    """
    ps, qs, residuals = [], [], []
    exact_eta = isinstance(eta, EtaParameter) and eta.is_exact and eta.tau_part == 0
    for length in dims:
        if exact_eta and (Fraction(length) * eta.real_part / 2).denominator == 1:
            q = int(Fraction(length) * eta.real_part / 2)
            residual = 0.0
        else:
            value = eta.resolve(None) if isinstance(eta, EtaParameter) else complex(eta)
            q = int(round(length * value.real / 2.0))
            residual = abs(length * value - 2.0 * q)
        ps.append(0)
        qs.append(q)
        residuals.append(residual)
    if any(r > tolerance for r in residuals):
        raise NotCommensurate(
            f"L*eta is not an even integer (residuals {residuals}, nearest q={qs})",
            residuals=residuals, p=ps, q=qs,
        )
    return CommensurabilityWitness(tuple(ps), tuple(qs), tuple(residuals), exact_eta)


def variant_witness(
    spec: ModelSpec,
    tolerance: float = DEFAULT_COMMENSURABILITY_TOL
) -> Optional[CommensurabilityWitness]:
    """
    Witness of the periodicity condition for spec's variant; None for the open chain.

    Raises:
        NotCommensurate: If the condition fails
        WrongLength: For XY variants with a length not divisible by 4
    """
    dims = spec.lattice.dims
    if spec.variant == "open_chain_1d":
        return None
    if spec.variant == "xxz":
        return commensurability_xxz(spec.eta_canonical, dims, tolerance)
    if spec.variant in XY_VARIANTS:
        bad = [L for L in dims if L % 4]
        if bad:
            raise WrongLength(f"XY helix states need every length divisible by 4, got {dims}")
    if spec.variant == "direction_dependent":
        return commensurability(list(spec.axis_eta_canonical), spec.tau, dims, tolerance)
    return commensurability(spec.eta_canonical, spec.tau, dims, tolerance)


@dataclass(frozen=True)
class ProductState:
    """Tensor product of site-indexed local vectors."""
    locals: Tuple[LocalVector, ...]
    u: complex
    epsilon: ChiralityVector
    eta_used: Tuple[complex, ...]
    witness: Optional[CommensurabilityWitness] = None
    dense: Optional[DenseState] = field(default=None, compare=False, repr=False)

    @property
    def sites(self) -> int:
        return len(self.locals)

    @property
    def local_dim(self) -> int:
        return self.locals[0].dim

    def to_dense(self) -> DenseState:
        if self.dense is None:
            amplitudes = product_amplitudes([v.coeffs for v in self.locals])
            object.__setattr__(self, "dense", DenseState(amplitudes, self.local_dim, self.sites))
        return self.dense

    def describe(self) -> Dict[str, Any]:
        data = {
            "u": complex_pair(self.u),
            "epsilon": list(self.epsilon),
            "eta_used": [complex_pair(e) for e in self.eta_used],
        }
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        return data


def site_arguments(u: complex, epsilon: ChiralityVector, spec: ModelSpec) -> np.ndarray:
    """
    Phase arguments per site: u + Σ_α ε_α η_α n_{j,α}.

    The open chain uses u0 + (j+1)η instead.
    """
    lattice = spec.lattice
    if spec.variant == "open_chain_1d":
        return spec.u0 + spec.eta_value * (np.arange(lattice.volume) + 1)
    if len(epsilon) != lattice.d:
        raise ModelError(f"Chirality has {len(epsilon)} entries, lattice has d={lattice.d}")
    steps = epsilon.as_array() * np.asarray(spec.axis_eta_values, dtype=complex)
    return complex(u) + lattice.site_coords @ steps


def build_shs(
    u: Optional[complex],
    epsilon: ChiralityVector,
    spec: ModelSpec,
    enforce_commensurability: bool = True,
    tolerance: float = DEFAULT_COMMENSURABILITY_TOL
) -> ProductState:
    """
    Spin-helix product state for the model in spec.

    XXZ uses the trigonometric local vector. The open chain ignores epsilon
    and takes its phase from spec.u0 (u, if given, must agree).

    Raises:
        NotCommensurate: If the periodicity condition fails and is enforced
        WrongLength: For XY variants with a length not divisible by 4
    """
    if spec.variant == "open_chain_1d":
        if u is not None and abs(complex(u) - spec.u0) > 1e-14:
            raise ModelError(f"Open chain phase is fixed by u0={spec.u0}, got u={u}")
        u = spec.u0
        epsilon = ChiralityVector.uniform(1)
    elif u is None:
        raise ModelError("build_shs needs a phase u")

    witness = None
    if enforce_commensurability:
        witness = variant_witness(spec, tolerance)
    else:
        logger.warning("Commensurability enforcement disabled; state may not be an eigenstate")

    arguments = site_arguments(u, epsilon, spec)
    if spec.is_trigonometric:
        locals_ = tuple(trig_local_vector(x, spec.spin) for x in arguments)
    else:
        locals_ = tuple(local_vector(x, spec.spin, spec.ctx) for x in arguments)

    logger.debug(f"Built SHS: variant={spec.variant}, u={u}, epsilon={tuple(epsilon)}")
    return ProductState(locals_, complex(u), epsilon, spec.axis_eta_values, witness)


def shs_energy(spec: ModelSpec, witness: Optional[CommensurabilityWitness]) -> complex:
    """
    Closed-form helix energy.

    xxz: d s² cos(πη) V. xyz and xy: d s² V ℓ1'(η)/ℓ1'(0) plus
    4πi s² ℓ1(η)/ℓ1'(0) Σ_α p_α V/L_α. long_range and direction_dependent
    sum the same two terms over distances and axes. open_chain_1d:
    s² Σ_{n=1}^{L-1} b(u0 + nη).
    """
    s2 = spec.s ** 2
    dims = spec.lattice.dims
    volume = spec.volume

    if spec.variant == "xxz":
        return spec.d * s2 * cmath.cos(math.pi * spec.eta_value) * volume

    if spec.variant == "open_chain_1d":
        helper = spec.functions()
        return s2 * sum(helper.b(spec.u0 + n * spec.eta_value) for n in range(1, dims[0]))

    if witness is None:
        raise ModelError(f"Energy of variant '{spec.variant}' needs a commensurability witness")

    ctx = spec.ctx
    ell1_prime_zero = ctx.ell_zero(1).derivative

    def axis_term(eta: complex, p: int, length: int, k: int = 1) -> complex:
        ell = ctx.ell(1, k * eta)
        return (volume * ell.derivative / ell1_prime_zero
                + 4j * math.pi * k * p * (volume / length) * ell.value / ell1_prime_zero)

    if spec.variant == "direction_dependent":
        return s2 * sum(axis_term(eta, p, L) for eta, p, L in
                        zip(spec.axis_eta_values, witness.p, dims))

    if spec.variant == "long_range":
        return s2 * sum(
            weight * sum(axis_term(spec.eta_value, p, L, k) for p, L in zip(witness.p, dims))
            for k, weight in spec.long_range_weights
        )

    return s2 * sum(axis_term(spec.eta_value, p, L) for p, L in zip(witness.p, dims))


def texture(state: ProductState, spin) -> List[Tuple[float, float, float]]:
    """Per-site (⟨Sx⟩, ⟨Sy⟩, ⟨Sz⟩)."""
    return [local_expectations(v, spin) for v in state.locals]
