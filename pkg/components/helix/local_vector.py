"""
Local Coherent Vectors

Single-site spin-s coherent vectors built from the theta pair
(ℓ̄1(u), ℓ̄4(u)), their trigonometric counterpart, Bloch angles and
expectation values.
"""

import cmath
import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from ..core.elliptic import EllipticContext
from ..core.spin_algebra import LocalOperator, SpinRep, spin_matrix
from ..exceptions import DegenerateArgument

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalVector:
    """
    Unit vector over |s>, |s-1>, ..., |-s>.

    gamma and beta are the Bloch angles of the coherent state; both are
    None for local states that are not spin-coherent.
    """
    coeffs: np.ndarray = field(compare=False)
    u: complex
    gamma: Optional[float] = None
    beta: Optional[float] = None

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=complex).copy()
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def dim(self) -> int:
        return self.coeffs.size

    @property
    def is_coherent(self) -> bool:
        return self.gamma is not None and self.beta is not None


def coherent_coefficients(t1: complex, t4: complex, spin: SpinRep) -> np.ndarray:
    """
    κ_n t1^{2s-n} t4^n for n = 0..2s, normalized to unit norm.

    The pair is rescaled by max(|t1|, |t4|) first so high spins cannot
    overflow.
    """
    scale = max(abs(t1), abs(t4))
    a, b = t1 / scale, t4 / scale
    two_s = spin.twice_s
    powers_a = np.concatenate(([1.0 + 0j], np.cumprod(np.full(two_s, a))))
    powers_b = np.concatenate(([1.0 + 0j], np.cumprod(np.full(two_s, b))))
    coeffs = spin.kappa * powers_a[::-1] * powers_b
    return coeffs / np.linalg.norm(coeffs)


def local_vector(
    u: complex,
    spin: SpinRep,
    ctx: EllipticContext,
    pole_eps: Optional[float] = None
) -> LocalVector:
    """
    Coherent vector ψ(u) with coefficients κ_n ℓ̄1(u)^{2s-n} ℓ̄4(u)^n.

    Raises:
        DegenerateArgument: If ℓ̄1(u) and ℓ̄4(u) both vanish numerically
    """
    u = complex(u)
    t1 = ctx.bell(1, u).value
    t4 = ctx.bell(4, u).value
    eps = ctx.pole_eps if pole_eps is None else pole_eps
    if max(abs(t1), abs(t4)) < eps * abs(ctx.bell_zero(4).value):
        raise DegenerateArgument(f"l1bar and l4bar both vanish at u={u}")
    gamma = 2.0 * math.atan2(abs(t4), abs(t1))
    beta = cmath.phase(t4 * t1.conjugate())
    return LocalVector(coherent_coefficients(t1, t4, spin), u, gamma, beta)


def trig_local_vector(u: complex, spin: SpinRep) -> LocalVector:
    """
    Trigonometric coherent vector with coefficients κ_n e^{iπnu}.

    γ = 2 arctan(e^{-π Im u}) and β = π Re u.
    """
    u = complex(u)
    t4 = cmath.exp(1j * math.pi * u)
    gamma = 2.0 * math.atan(math.exp(-math.pi * u.imag))
    beta = math.pi * u.real
    return LocalVector(coherent_coefficients(1.0 + 0j, t4, spin), u, gamma, beta)


def analytic_normalization(u: complex, spin: SpinRep, ctx: EllipticContext) -> complex:
    """
    Closed-form norm [ℓ4(Re u) ℓ3(i Im u)]^s of the unnormalized vector.

    Matches (|ℓ̄1|² + |ℓ̄4|²)^s when Re τ = 0.
    """
    u = complex(u)
    base = ctx.ell(4, u.real).value * ctx.ell(3, 1j * u.imag).value
    return complex(base) ** spin.s


def raw_norm(u: complex, spin: SpinRep, ctx: EllipticContext) -> float:
    """Norm (|ℓ̄1(u)|² + |ℓ̄4(u)|²)^s of the unnormalized coefficient vector."""
    u = complex(u)
    return (abs(ctx.bell(1, u).value) ** 2 + abs(ctx.bell(4, u).value) ** 2) ** spin.s


def highest_weight_operator(gamma: float, beta: float, spin: SpinRep) -> LocalOperator:
    """sinγ cosβ S^x + sinγ sinβ S^y + cosγ S^z."""
    entries = (math.sin(gamma) * math.cos(beta) * spin_matrix(spin, "x").entries
               + math.sin(gamma) * math.sin(beta) * spin_matrix(spin, "y").entries
               + math.cos(gamma) * spin_matrix(spin, "z").entries)
    return LocalOperator(spin.dim, entries)


def direct_expectations(vector: LocalVector, spin: SpinRep) -> Tuple[float, float, float]:
    """⟨v|S^α|v⟩/⟨v|v⟩ from the spin matrices."""
    v = vector.coeffs
    norm2 = float(np.vdot(v, v).real)
    return tuple(
        float(np.vdot(v, spin_matrix(spin, axis).entries @ v).real) / norm2 for axis in "xyz"
    )


def local_expectations(vector: LocalVector, spin: SpinRep) -> Tuple[float, float, float]:
    """
    (⟨Sx⟩, ⟨Sy⟩, ⟨Sz⟩) = s(sinγ cosβ, sinγ sinβ, cosγ) for coherent vectors.

    Non-coherent vectors fall back to matrix elements.
    """
    if not vector.is_coherent:
        return direct_expectations(vector, spin)
    s = spin.s
    gamma, beta = vector.gamma, vector.beta
    return (s * math.sin(gamma) * math.cos(beta),
            s * math.sin(gamma) * math.sin(beta),
            s * math.cos(gamma))
