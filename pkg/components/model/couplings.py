"""
Coupling Service

Theta-parameterized XYZ couplings and their trigonometric XXZ limit.
"""

import cmath
import logging
from dataclasses import dataclass
from typing import Dict, List

from ..core.elliptic import EllipticContext

logger = logging.getLogger(__name__)


def complex_pair(z: complex) -> List[float]:
    """Serialize a complex number as [re, im]."""
    z = complex(z)
    return [z.real, z.imag]


@dataclass(frozen=True)
class Couplings:
    """Exchange constants (J_x, J_y, J_z)."""
    jx: complex
    jy: complex
    jz: complex

    @property
    def j_plus(self) -> complex:
        return self.jx + self.jy

    @property
    def j_minus(self) -> complex:
        return self.jx - self.jy

    def scaled(self, factor: complex) -> "Couplings":
        return Couplings(self.jx * factor, self.jy * factor, self.jz * factor)

    def is_real(self, atol: float = 1e-12) -> bool:
        return all(abs(complex(j).imag) <= atol for j in (self.jx, self.jy, self.jz))

    def as_tuple(self):
        return (self.jx, self.jy, self.jz)

    def to_dict(self) -> Dict[str, List[float]]:
        return {"jx": complex_pair(self.jx), "jy": complex_pair(self.jy), "jz": complex_pair(self.jz)}


def couplings_xyz(eta: complex, ctx: EllipticContext) -> Couplings:
    """
    XYZ couplings (ℓ4(η)/ℓ4(0), ℓ3(η)/ℓ3(0), ℓ2(η)/ℓ2(0)).

    Args:
        eta: Anisotropy parameter (floating value)
        ctx: Elliptic context providing τ

    Returns:
        Couplings for the given η and τ
    """
    eta = complex(eta)
    jx = ctx.ell(4, eta).value / ctx.ell_zero(4).value
    jy = ctx.ell(3, eta).value / ctx.ell_zero(3).value
    jz = ctx.ell(2, eta).value / ctx.ell_zero(2).value
    logger.debug(f"couplings_xyz(eta={eta}, tau={ctx.tau}) -> ({jx}, {jy}, {jz})")
    return Couplings(jx, jy, jz)


def couplings_xxz(eta: complex) -> Couplings:
    """Trigonometric limit (1, 1, cos πη); no τ involved."""
    return Couplings(1.0 + 0j, 1.0 + 0j, cmath.cos(cmath.pi * complex(eta)))


def j_plus_minus_closed_form(eta: complex, ctx: EllipticContext):
    """
    Closed forms J₊ = 2ℓ̄4²(η)/ℓ̄4²(0) and J₋ = 2ℓ̄1²(η)/ℓ̄4²(0).

    Used to cross-check couplings_xyz.
    """
    eta = complex(eta)
    denominator = ctx.bell_zero(4).value ** 2
    j_plus = 2.0 * ctx.bell(4, eta).value ** 2 / denominator
    j_minus = 2.0 * ctx.bell(1, eta).value ** 2 / denominator
    return j_plus, j_minus
