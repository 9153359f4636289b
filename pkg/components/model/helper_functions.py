"""
Divergence-Condition Helper Functions

a(u), g(u) and b(u) for a fixed η. They appear in the two-site reduction of
the bond Hamiltonian, in the open-chain boundary fields and in the
trigonometric-limit checks.
"""

import logging
from dataclasses import dataclass

from ..core.elliptic import EllipticContext

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HelixFunctions:
    """a, b, g bound to (η, τ)."""
    eta: complex
    ctx: EllipticContext

    def __post_init__(self):
        object.__setattr__(self, "eta", complex(self.eta))

    @property
    def _ell1_eta(self) -> complex:
        return self.ctx.ell(1, self.eta).value

    @property
    def _ell1_prime_zero(self) -> complex:
        return self.ctx.ell_zero(1).derivative

    def a(self, u: complex) -> complex:
        """
        a(u) = ℓ1(η)ℓ2(u) / (ℓ2(0)ℓ1(u)).

        Raises:
            NearPole: If u sits on a zero of ℓ1
        """
        u = complex(u)
        # zeta() performs the pole guard on ℓ1(u)
        self.ctx.zeta(u)
        return (self._ell1_eta * self.ctx.ell(2, u).value
                / (self.ctx.ell_zero(2).value * self.ctx.ell(1, u).value))

    def g(self, u: complex) -> complex:
        """
        g(u) = ℓ1(η)ζ(u)/ℓ1'(0).

        At u = η the removable form ℓ1'(η)/ℓ1'(0) is used, so that η = 0 is
        covered as well.
        """
        u = complex(u)
        if u == self.eta:
            return self.ctx.ell(1, self.eta).derivative / self._ell1_prime_zero
        return self._ell1_eta * self.ctx.zeta(u) / self._ell1_prime_zero

    def b(self, u: complex) -> complex:
        """b(u) = g(η) + g(u) − g(u + η)."""
        u = complex(u)
        if self.eta == 0:
            # g ≡ 0 apart from g(0) = 1
            return 1.0 + 0j
        return self.g(self.eta) + self.g(u) - self.g(u + self.eta)


def helix_functions(eta: complex, ctx: EllipticContext) -> HelixFunctions:
    return HelixFunctions(complex(eta), ctx)
