"""
Q/P Expansion States

Spin-½ chains only. Q(u) = ℓ̄1(u)/ℓ̄4(u) and P(u) = Q'(u)/(π ℓ̄2(0)ℓ̄3(0))
parameterize the helix state, which expands as Σ Qⁿ|Φ̃ₙ⟩ + P Σ Qⁿ|Φ̄ₙ⟩.
This module builds the four lowest coefficient states by subset
enumeration and recovers the expansion numerically by a polynomial fit.

Every site n = 1..L enters through the finite weights
    A = ℓ̄1(x)ℓ̄4(x),  B = ℓ̄4(x)² P(x),  C = ℓ̄4(x)²,  D = ℓ̄1(x)²,  x = ±nη,
so that the site factor of the helix state is
    (Q(u)B + A P(u)) |↑⟩ + (C − Q(u)² D) |↓⟩.
Dividing by C gives the usual Q(±nη), P(±nη) weights; sites with
ℓ̄4(±nη) = 0 (x ≡ τ mod 2, 2τ) are handled as the limit Q(x) → ∞.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from ..core.elliptic import EllipticContext
from ..core.lattice import ChiralityVector
from ..exceptions import ModelError, NearPole, TooLarge
from ..model.model_spec import ModelSpec
from ..model.states import DenseState, product_amplitudes
from .product_state import build_shs, variant_witness

logger = logging.getLogger(__name__)

MAX_SITES = 16
SITE_POLE_TOL = 1e-8

LEVELS = {
    "tilde0": (0, 0),
    "bar0": (1, 0),
    "tilde1": (0, 1),
    "bar1": (1, 1),
}
NORMALIZATIONS = ("relative", "homogeneous")


def qp_functions(u: complex, ctx: EllipticContext) -> Tuple[complex, complex]:
    """
    (Q(u), P(u)); P from the quotient rule on the analytic derivatives.

    Raises:
        NearPole: If ℓ̄4(u) vanishes numerically
    """
    u = complex(u)
    t1 = ctx.bell(1, u)
    t4 = ctx.bell(4, u)
    if abs(t4.value) < ctx.pole_eps * abs(ctx.bell_zero(4).value):
        raise NearPole(f"Q has a pole at u={u}")
    q = t1.value / t4.value
    dq = (t1.derivative * t4.value - t1.value * t4.derivative) / t4.value ** 2
    return q, dq / _p_scale(ctx)


def _p_scale(ctx: EllipticContext) -> complex:
    return math.pi * ctx.bell_zero(2).value * ctx.bell_zero(3).value


def q_half(ctx: EllipticContext) -> complex:
    return qp_functions(0.5, ctx)[0]


@dataclass(frozen=True)
class SiteWeights:
    """Per-site finite weights A, B, C, D and the sites where ℓ̄4 vanishes."""
    a: np.ndarray = field(compare=False)
    b: np.ndarray = field(compare=False)
    c: np.ndarray = field(compare=False)
    d: np.ndarray = field(compare=False)
    poles: Tuple[int, ...] = ()


def site_weights(spec: ModelSpec, epsilon_sign: int) -> SiteWeights:
    ctx = spec.ctx
    scale = _p_scale(ctx)
    reference = abs(ctx.bell_zero(4).value)
    rows, poles = [], []
    for j in range(spec.volume):
        x = epsilon_sign * (j + 1) * spec.eta_value
        t1 = ctx.bell(1, x)
        t4 = ctx.bell(4, x)
        rows.append((
            t1.value * t4.value,
            (t1.derivative * t4.value - t1.value * t4.derivative) / scale,
            t4.value ** 2,
            t1.value ** 2,
        ))
        if abs(t4.value) < SITE_POLE_TOL * reference:
            poles.append(j)
    a, b, c, d = (np.array(column, dtype=complex) for column in zip(*rows))
    return SiteWeights(a, b, c, d, tuple(poles))


def _up_mask(sites: int) -> np.ndarray:
    """mask[b, j] is True when site j of basis state b is |↑⟩ (local index 0)."""
    index = np.arange(2 ** sites)
    shifts = sites - 1 - np.arange(sites)
    return ((index[:, None] >> shifts[None, :]) & 1) == 0


def _enumerate(
    up: np.ndarray,
    up_weight: np.ndarray,
    down_weight: np.ndarray,
    p_weight: Optional[np.ndarray],
    parity: int
) -> np.ndarray:
    """
    Σ over flipped sets with |S| ≡ parity of Π_S up · Π_rest down, or, with
    p_weight, the same sum with one extra flipped site k ∉ S weighted p_k.
    """
    factors = np.where(up, up_weight[None, :], down_weight[None, :])
    count = up.sum(axis=1)
    if p_weight is None:
        return np.where(count % 2 == parity, np.prod(factors, axis=1), 0.0)
    sites = up.shape[1]
    amplitudes = np.zeros(up.shape[0], dtype=complex)
    for k in range(sites):
        others = np.prod(np.delete(factors, k, axis=1), axis=1)
        amplitudes += np.where(up[:, k], p_weight[k], 0.0) * others
    return np.where((count - 1) % 2 == parity, amplitudes, 0.0)


def _validate(spec: ModelSpec, epsilon_sign: int) -> None:
    if spec.spin.twice_s != 1 or spec.d != 1:
        raise ModelError("Expansion states are defined for spin-1/2 chains")
    if spec.ctx is None or spec.variant not in ("xyz", "xy_a", "xy_b"):
        raise ModelError(f"Expansion states need a uniform elliptic model, got '{spec.variant}'")
    if epsilon_sign not in (1, -1):
        raise ModelError(f"epsilon_sign must be +1 or -1, got {epsilon_sign}")
    if spec.volume > MAX_SITES:
        raise TooLarge(f"Expansion states enumerate 2^L amplitudes; L={spec.volume} > {MAX_SITES}")


def expansion_states(
    level: str,
    epsilon_sign: int,
    spec: ModelSpec,
    normalization: str = "relative",
    enforce_commensurability: bool = True
) -> DenseState:
    """
    One of Φ̃₀, Φ̄₀, Φ̃₁, Φ̄₁ ('tilde0', 'bar0', 'tilde1', 'bar1').

    'relative' weights flips by Q(±nη) and P(±nη) relative to the all-down
    state; 'homogeneous' uses the finite A, B, C weights and equals the
    fitted expansion coefficients of fit_expansion_coefficients exactly.

    Raises:
        ModelError: For spin or dimension other than spin-½ chains
        TooLarge: If L > 16
        NotCommensurate: If the periodicity condition fails (when enforced)
    """
    if level not in LEVELS:
        raise ModelError(f"Unknown level '{level}'. Available: {', '.join(LEVELS)}")
    if normalization not in NORMALIZATIONS:
        raise ModelError(f"Unknown normalization '{normalization}'")
    _validate(spec, epsilon_sign)
    if enforce_commensurability:
        variant_witness(spec)

    parity, order = LEVELS[level]
    weights = site_weights(spec, epsilon_sign)
    up = _up_mask(spec.volume)

    if normalization == "homogeneous":
        amplitudes = _enumerate(up, weights.a, weights.c,
                                weights.b if order else None, parity)
    elif not weights.poles:
        amplitudes = _enumerate(up, weights.a / weights.c, np.ones(spec.volume),
                                (weights.b / weights.c) if order else None, parity)
    else:
        # Q(±nη) → ∞ on pole sites: the dominant terms flip every pole site,
        # and at order one the extra P factor sits on a pole site.
        logger.info(f"Sites {weights.poles} sit on poles of Q; using the limiting states")
        pole = np.zeros(spec.volume, dtype=bool)
        pole[list(weights.poles)] = True
        safe_c = np.where(pole, 1.0, weights.c)
        up_weight = np.where(pole, 1.0, weights.a / safe_c)
        down_weight = np.where(pole, 0.0, 1.0)
        amplitudes = _enumerate(up, up_weight, down_weight, None, (parity + order) % 2)

    return DenseState(amplitudes, 2, spec.volume)


@dataclass(frozen=True)
class ExpansionFit:
    """
    Coefficient vectors of the helix state as A(Q) + P·B(Q).

    a[m] multiplies Q(u)^m and b[m] multiplies P(u)Q(u)^m.
    """
    a: np.ndarray = field(compare=False)
    b: np.ndarray = field(compare=False)
    degree: int
    residual: float
    rank: int


def default_fit_samples(spec: ModelSpec) -> np.ndarray:
    """
    Pairs u, 1 - u on the line Im u = Im τ/2.

    Q(1 - u) = Q(u) while P(1 - u) = -P(u), so each pair separates A and B.
    """
    count = 2 * spec.volume + 4
    x = 2.0 * (np.arange(count) + 0.5) / count
    u = x + spec.tau / 2.0
    return np.concatenate([u, 1.0 - u])


def helix_polynomial_form(
    spec: ModelSpec,
    epsilon_sign: int,
    u: complex,
    weights: Optional[SiteWeights] = None
) -> np.ndarray:
    """
    Helix state at u rescaled site by site to (Q B + A P, C − Q² D).

    Sites carry arguments u ± nη, n = 1..L.
    """
    if weights is None:
        weights = site_weights(spec, epsilon_sign)
    q, _ = qp_functions(u, spec.ctx)
    shifted = complex(u) + epsilon_sign * spec.eta_value
    state = build_shs(shifted, ChiralityVector((epsilon_sign,)), spec)
    factors = []
    for j, vector in enumerate(state.locals):
        down_target = weights.c[j] - q * q * weights.d[j]
        factors.append(vector.coeffs * (down_target / vector.coeffs[1]))
    return product_amplitudes(factors)


def fit_expansion_coefficients(
    spec: ModelSpec,
    epsilon_sign: int,
    u_samples: Optional[Sequence[complex]] = None,
    degree: Optional[int] = None
) -> ExpansionFit:
    """
    Least-squares fit of the rescaled helix state as Σ a_m Q^m + P Σ b_m Q^m.

    Q is rescaled by its largest sampled modulus before building the design
    matrix.

    Raises:
        ModelError: For anything but spin-½ chains
        TooLarge: If L > 16
        NotCommensurate: If the periodicity condition fails
    """
    _validate(spec, epsilon_sign)
    degree = 2 * spec.volume if degree is None else int(degree)
    samples = default_fit_samples(spec) if u_samples is None else np.asarray(u_samples, dtype=complex)
    unknowns = 2 * (degree + 1)
    if samples.size < unknowns:
        raise ModelError(f"Fit needs at least {unknowns} samples, got {samples.size}")

    qp = np.array([qp_functions(u, spec.ctx) for u in samples])
    q, p = qp[:, 0], qp[:, 1]
    rho = max(float(np.max(np.abs(q))), 1e-300)
    powers = (q[:, None] / rho) ** np.arange(degree + 1)[None, :]
    design = np.hstack([powers, p[:, None] * powers])
    weights = site_weights(spec, epsilon_sign)
    targets = np.stack([helix_polynomial_form(spec, epsilon_sign, u, weights) for u in samples])

    solution, _, rank, _ = linalg.lstsq(design, targets)
    if rank < unknowns:
        logger.warning(f"Expansion fit is rank deficient: rank {rank} < {unknowns}")
    residual = float(np.linalg.norm(design @ solution - targets) / np.linalg.norm(targets))

    rescale = rho ** -np.arange(degree + 1)
    a = solution[: degree + 1] * rescale[:, None]
    b = solution[degree + 1:] * rescale[:, None]
    logger.debug(f"Expansion fit: degree={degree}, rank={rank}, residual={residual:.3e}")
    return ExpansionFit(a, b, degree, residual, int(rank))
