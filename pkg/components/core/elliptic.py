"""
Elliptic Service

Evaluates the four Jacobi theta functions by their Fourier series, the
shorthand forms ell (nome e^{iπτ}) and bell (nome e^{2iπτ}) with the
argument scaled by π, analytic u-derivatives and the zeta ratios.
"""

import cmath
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional, Tuple

from ..exceptions import InvalidNome, NearPole, NonConvergent

logger = logging.getLogger(__name__)

DEFAULT_TRUNCATION_EPS = 1e-15
DEFAULT_MAX_TERMS = 64
DEFAULT_POLE_EPS = 1e-12
MIN_IM_TAU = 0.05

# Sign picked up under u -> u+1 and under u -> u+τ (with the exponential factor).
_SHIFT_ONE_SIGN = {1: -1, 2: -1, 3: 1, 4: 1}
_SHIFT_TAU_SIGN = {1: -1, 2: 1, 3: 1, 4: -1}


@dataclass(frozen=True)
class ThetaValue:
    """Value of a theta function together with its u-derivative."""
    value: complex
    derivative: complex = 0j


def theta(
    alpha: int,
    u: complex,
    nome: Optional[complex] = None,
    ctx: Optional["EllipticContext"] = None,
    *,
    log_nome: Optional[complex] = None
) -> ThetaValue:
    """
    Evaluate θ_alpha(u, q) and its derivative by direct summation.

    The nome may be given either as q or as log q. Passing log q fixes the
    branch of the fractional powers q^{(n+1/2)^2} used by θ1 and θ2; with a
    bare nome the principal logarithm is used.

    Args:
        alpha: Theta index 1..4
        u: Complex argument
        nome: Nome q with |q| < 1
        ctx: Optional context providing truncation_eps and max_terms
        log_nome: Logarithm of the nome (takes precedence over nome)

    Returns:
        ThetaValue with the series value and term-wise derivative

    Raises:
        InvalidNome: If |q| >= 1
        NonConvergent: If max_terms is reached before the tail bound
    """
    if alpha not in (1, 2, 3, 4):
        raise ValueError(f"Theta index must be 1..4, got {alpha}")

    if log_nome is None:
        if nome is None:
            raise ValueError("Either nome or log_nome must be given")
        nome = complex(nome)
        if abs(nome) >= 1.0:
            raise InvalidNome(f"|nome| must be < 1, got {abs(nome)}")
        if nome == 0:
            return ThetaValue(1.0 + 0j, 0j) if alpha in (3, 4) else ThetaValue(0j, 0j)
        log_nome = cmath.log(nome)
    log_nome = complex(log_nome)
    if log_nome.real >= 0.0:
        raise InvalidNome(f"|nome| must be < 1, got exp({log_nome.real})")

    eps = ctx.truncation_eps if ctx is not None else DEFAULT_TRUNCATION_EPS
    max_terms = ctx.max_terms if ctx is not None else DEFAULT_MAX_TERMS

    u = complex(u)
    decay = log_nome.real
    growth = abs(u.imag)
    # Bound exponents are concave in the summation index; stop only past the peak.
    peak = growth / -decay

    value = 0j
    derivative = 0j

    if alpha in (1, 2):
        for n in range(max_terms):
            h = n + 0.5
            k = 2 * n + 1
            bound = 2.0 * math.exp(min(decay * h * h + k * growth, 700.0))
            if (h > peak and bound < eps * (1.0 + abs(value))
                    and k * bound < eps * (1.0 + abs(derivative))):
                return ThetaValue(value, derivative)
            weight = 2.0 * cmath.exp(log_nome * h * h)
            if alpha == 1:
                sign = -1.0 if n % 2 else 1.0
                value += sign * weight * cmath.sin(k * u)
                derivative += sign * weight * k * cmath.cos(k * u)
            else:
                value += weight * cmath.cos(k * u)
                derivative -= weight * k * cmath.sin(k * u)
    else:
        value = 1.0 + 0j
        for n in range(1, max_terms + 1):
            k = 2 * n
            bound = 2.0 * math.exp(min(decay * n * n + k * growth, 700.0))
            if (n > peak and bound < eps * (1.0 + abs(value))
                    and k * bound < eps * (1.0 + abs(derivative))):
                return ThetaValue(value, derivative)
            weight = 2.0 * cmath.exp(log_nome * n * n)
            if alpha == 4 and n % 2:
                weight = -weight
            value += weight * cmath.cos(k * u)
            derivative -= weight * k * cmath.sin(k * u)

    raise NonConvergent(
        f"theta_{alpha} did not converge within {max_terms} terms at u={u}"
    )


@dataclass(frozen=True)
class EllipticContext:
    """
    Modular parameter τ with the truncation policy for every theta evaluation.

    Immutable; all evaluation methods are pure.
    """
    tau: complex
    truncation_eps: float = DEFAULT_TRUNCATION_EPS
    max_terms: int = DEFAULT_MAX_TERMS
    pole_eps: float = DEFAULT_POLE_EPS
    nome_q: complex = field(init=False)
    nome_q2: complex = field(init=False)

    def __post_init__(self):
        tau = complex(self.tau)
        if tau.imag <= 0.0:
            raise InvalidNome(f"Im(tau) must be positive, got tau={tau}")
        if self.truncation_eps <= 0.0:
            raise ValueError(f"truncation_eps must be positive, got {self.truncation_eps}")
        if self.max_terms < 4:
            raise ValueError(f"max_terms must be at least 4, got {self.max_terms}")
        if tau.imag < MIN_IM_TAU:
            logger.warning(
                f"Im(tau)={tau.imag} is below {MIN_IM_TAU}; double precision series may degrade"
            )
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "nome_q", cmath.exp(1j * math.pi * tau))
        object.__setattr__(self, "nome_q2", cmath.exp(2j * math.pi * tau))

    @property
    def log_q(self) -> complex:
        return 1j * math.pi * self.tau

    @property
    def log_q2(self) -> complex:
        return 2j * math.pi * self.tau

    def ell(self, alpha: int, u: complex) -> ThetaValue:
        """ℓ_α(u) = θ_α(πu, e^{iπτ}); derivative taken with respect to u."""
        raw = theta(alpha, math.pi * complex(u), ctx=self, log_nome=self.log_q)
        return ThetaValue(raw.value, math.pi * raw.derivative)

    def bell(self, alpha: int, u: complex) -> ThetaValue:
        """ℓ̄_α(u) = θ_α(πu, e^{2iπτ}); derivative taken with respect to u."""
        raw = theta(alpha, math.pi * complex(u), ctx=self, log_nome=self.log_q2)
        return ThetaValue(raw.value, math.pi * raw.derivative)

    @lru_cache(maxsize=16)
    def ell_zero(self, alpha: int) -> ThetaValue:
        return self.ell(alpha, 0.0)

    @lru_cache(maxsize=16)
    def bell_zero(self, alpha: int) -> ThetaValue:
        return self.bell(alpha, 0.0)

    def zeta(self, u: complex) -> complex:
        """
        Logarithmic derivative ζ(u) = ℓ1'(u)/ℓ1(u).

        Raises:
            NearPole: If |ℓ1(u)| is below pole_eps times |ℓ2(0)|
        """
        v = self.ell(1, u)
        scale = abs(self.ell_zero(2).value)
        if abs(v.value) < self.pole_eps * scale:
            raise NearPole(f"zeta evaluated at a zero of ell_1: u={u}")
        return v.derivative / v.value

    def zeta_tilde(self, u: complex) -> complex:
        """Logarithmic derivative ζ̃(u) = ℓ̄1'(u)/ℓ̄1(u)."""
        v = self.bell(1, u)
        scale = abs(self.bell_zero(2).value)
        if abs(v.value) < self.pole_eps * scale:
            raise NearPole(f"zeta_tilde evaluated at a zero of bell_1: u={u}")
        return v.derivative / v.value

    # Quasi-periodic reduction

    @staticmethod
    def reduce_argument(u: complex, period: complex) -> Tuple[complex, int, int]:
        """
        Split u = u0 + k + l*period with u0 in the centred period cell.

        Args:
            u: Complex argument
            period: Second period (τ for ell, 2τ for bell)

        Returns:
            Tuple (u0, k, l)
        """
        u = complex(u)
        period = complex(period)
        l = int(round(u.imag / period.imag))
        shifted = u - l * period
        k = int(round(shifted.real))
        return shifted - k, k, l

    def ell_reduced(self, alpha: int, u: complex) -> ThetaValue:
        """ℓ_α(u) evaluated at the reduced argument with quasi-periodicity factors."""
        return self._reduced(alpha, u, self.tau, self.ell)

    def bell_reduced(self, alpha: int, u: complex) -> ThetaValue:
        """ℓ̄_α(u) evaluated at the reduced argument (second period 2τ)."""
        return self._reduced(alpha, u, 2.0 * self.tau, self.bell)

    @staticmethod
    def _reduced(
        alpha: int,
        u: complex,
        period: complex,
        evaluate: Callable[[int, complex], ThetaValue]
    ) -> ThetaValue:
        u0, k, l = EllipticContext.reduce_argument(u, period)
        base = evaluate(alpha, u0)
        factor = (
            _SHIFT_ONE_SIGN[alpha] ** (k % 2)
            * _SHIFT_TAU_SIGN[alpha] ** (l % 2)
            * cmath.exp(-1j * math.pi * (2 * l * u0 + l * l * period))
        )
        return ThetaValue(
            factor * base.value,
            factor * (base.derivative - 2j * math.pi * l * base.value)
        )
