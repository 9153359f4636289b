"""
Identity Suite

Checks the catalogue of theta-function identities (parity, quasi-periodicity,
half-period translations, Landen relations, product identities and the zeta
relations) at seeded random points and reports the worst relative residual
per identity.
"""

import cmath
import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import NearPole
from .elliptic import EllipticContext

logger = logging.getLogger(__name__)

DEFAULT_IDENTITY_TOLERANCE = 1e-11
BOX_REAL_HALF_WIDTH = 0.5
BOX_IMAG_FRACTION = 0.35

# (lhs, rhs, scale) for one sample triple (u, v, w)
IdentityCheck = Callable[[EllipticContext, complex, complex, complex], Tuple[complex, complex, float]]


@dataclass
class IdentityResult:
    """Worst residual of one identity over all samples."""
    name: str
    max_residual: float
    samples: int
    excluded: int
    passed: bool

    def to_dict(self) -> Dict:
        return asdict(self)


@dataclass
class IdentityReport:
    """Outcome of a full identity sweep."""
    tau: complex
    sample_count: int
    seed: int
    tolerance: float
    results: List[IdentityResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> List[IdentityResult]:
        return [r for r in self.results if not r.passed]

    def max_residual(self) -> float:
        return max((r.max_residual for r in self.results), default=0.0)

    def to_dict(self) -> Dict:
        return {
            "tau": [self.tau.real, self.tau.imag],
            "sample_count": self.sample_count,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "max_residual": self.max_residual(),
            "results": [r.to_dict() for r in self.results],
        }


def _max_scale(lhs: complex, rhs: complex) -> float:
    return max(abs(lhs), abs(rhs))


def _parity(alpha: int, shorthand: str) -> IdentityCheck:
    sign = -1.0 if alpha == 1 else 1.0

    def check(ctx, u, v, w):
        f = getattr(ctx, shorthand)
        lhs = f(alpha, -u).value
        rhs = sign * f(alpha, u).value
        return lhs, rhs, _max_scale(lhs, rhs)
    return check


def _shift_one(alpha: int, shorthand: str) -> IdentityCheck:
    sign = -1.0 if alpha in (1, 2) else 1.0

    def check(ctx, u, v, w):
        f = getattr(ctx, shorthand)
        lhs = f(alpha, u + 1.0).value
        rhs = sign * f(alpha, u).value
        return lhs, rhs, _max_scale(lhs, rhs)
    return check


def _shift_tau(alpha: int, shorthand: str) -> IdentityCheck:
    sign = -1.0 if alpha in (1, 4) else 1.0

    def check(ctx, u, v, w):
        f = getattr(ctx, shorthand)
        period = ctx.tau if shorthand == "ell" else 2.0 * ctx.tau
        lhs = f(alpha, u + period).value
        rhs = sign * cmath.exp(-1j * math.pi * (2.0 * u + period)) * f(alpha, u).value
        return lhs, rhs, _max_scale(lhs, rhs)
    return check


def _reduction(alpha: int, shorthand: str) -> IdentityCheck:
    def check(ctx, u, v, w):
        period = ctx.tau if shorthand == "ell" else 2.0 * ctx.tau
        point = u + 3.0 - 2.0 * period
        lhs = getattr(ctx, shorthand)(alpha, point).value
        rhs = getattr(ctx, f"{shorthand}_reduced")(alpha, point).value
        return lhs, rhs, _max_scale(lhs, rhs)
    return check


def _half_period_2(ctx, u, v, w):
    lhs = ctx.ell(2, u).value
    rhs = ctx.ell(1, u + 0.5).value
    return lhs, rhs, _max_scale(lhs, rhs)


def _half_period_3(ctx, u, v, w):
    tau = ctx.tau
    lhs = ctx.ell(3, u).value
    rhs = cmath.exp(1j * math.pi * (u + tau / 4.0)) * ctx.ell(1, u + (1.0 + tau) / 2.0).value
    return lhs, rhs, _max_scale(lhs, rhs)


def _half_period_4(ctx, u, v, w):
    tau = ctx.tau
    lhs = ctx.ell(4, u).value
    rhs = -cmath.exp(1j * math.pi * (u + tau / 4.0 + 0.5)) * ctx.ell(1, u + tau / 2.0).value
    return lhs, rhs, _max_scale(lhs, rhs)


def _landen_bell_1(ctx, u, v, w):
    lhs = ctx.bell(1, 2.0 * u).value * ctx.ell_zero(3).value * ctx.ell_zero(4).value
    rhs = ctx.ell(1, u).value * ctx.ell(2, u).value * ctx.bell_zero(4).value
    return lhs, rhs, _max_scale(lhs, rhs)


def _landen_bell_4(ctx, u, v, w):
    lhs = ctx.bell(4, 2.0 * u).value * ctx.ell_zero(3).value * ctx.ell_zero(4).value
    rhs = ctx.ell(3, u).value * ctx.ell(4, u).value * ctx.bell_zero(4).value
    return lhs, rhs, _max_scale(lhs, rhs)


def _landen_ell_1(ctx, u, v, w):
    lhs = ctx.ell(1, u).value * ctx.bell_zero(2).value * ctx.bell_zero(3).value
    rhs = ctx.bell(1, u).value * ctx.bell(4, u).value * ctx.ell_zero(2).value
    return lhs, rhs, _max_scale(lhs, rhs)


def _addition_bell_11(ctx, u, v, w):
    b = ctx.bell
    b40 = ctx.bell_zero(4).value
    lhs = b(1, u + v).value * b(1, u - v).value * b40 ** 2
    first = b(1, u).value ** 2 * b(4, v).value ** 2
    second = b(1, v).value ** 2 * b(4, u).value ** 2
    return lhs, first - second, abs(first) + abs(second)


def _addition_bell_44(ctx, u, v, w):
    b = ctx.bell
    b40 = ctx.bell_zero(4).value
    lhs = b(4, u + v).value * b(4, u - v).value * b40 ** 2
    first = b(4, u).value ** 2 * b(4, v).value ** 2
    second = b(1, v).value ** 2 * b(1, u).value ** 2
    return lhs, first - second, abs(first) + abs(second)


def _mixed_nome_11(ctx, u, v, w):
    lhs = 2.0 * ctx.bell(1, u + v).value * ctx.bell(1, u - v).value
    first = ctx.ell(4, u).value * ctx.ell(3, v).value
    second = ctx.ell(4, v).value * ctx.ell(3, u).value
    return lhs, first - second, abs(first) + abs(second)


def _mixed_nome_44(ctx, u, v, w):
    lhs = 2.0 * ctx.bell(4, u + v).value * ctx.bell(4, u - v).value
    first = ctx.ell(4, u).value * ctx.ell(3, v).value
    second = ctx.ell(4, v).value * ctx.ell(3, u).value
    return lhs, first + second, abs(first) + abs(second)


def _mixed_nome_41(ctx, u, v, w):
    lhs = 2.0 * ctx.bell(4, u + v).value * ctx.bell(1, u - v).value
    first = ctx.ell(1, u).value * ctx.ell(2, v).value
    second = ctx.ell(1, v).value * ctx.ell(2, u).value
    return lhs, first - second, abs(first) + abs(second)


def _zeta_odd(ctx, u, v, w):
    lhs = ctx.zeta(-u)
    rhs = -ctx.zeta(u)
    return lhs, rhs, _max_scale(lhs, rhs)


def _zeta_shift_one(ctx, u, v, w):
    lhs = ctx.zeta(u + 1.0)
    rhs = ctx.zeta(u)
    return lhs, rhs, _max_scale(lhs, rhs)


def _zeta_shift_tau(ctx, u, v, w):
    lhs = ctx.zeta(u + ctx.tau)
    rhs = ctx.zeta(u) - 2j * math.pi
    return lhs, rhs, _max_scale(lhs, rhs)


def _zeta_tilde_odd(ctx, u, v, w):
    lhs = ctx.zeta_tilde(-u)
    rhs = -ctx.zeta_tilde(u)
    return lhs, rhs, _max_scale(lhs, rhs)


def _zeta_tilde_shift_one(ctx, u, v, w):
    lhs = ctx.zeta_tilde(u + 1.0)
    rhs = ctx.zeta_tilde(u)
    return lhs, rhs, _max_scale(lhs, rhs)


def _zeta_tilde_shift_two_tau(ctx, u, v, w):
    lhs = ctx.zeta_tilde(u + 2.0 * ctx.tau)
    rhs = ctx.zeta_tilde(u) - 2j * math.pi
    return lhs, rhs, _max_scale(lhs, rhs)


def _zeta_tilde_duplication(ctx, u, v, w):
    lhs = 2.0 * ctx.zeta_tilde(2.0 * u)
    a, b = ctx.zeta(u), ctx.zeta(u + 0.5)
    return lhs, a + b, abs(a) + abs(b)


def _zeta_split(ctx, u, v, w):
    lhs = ctx.zeta(u)
    a, b = ctx.zeta_tilde(u), ctx.zeta_tilde(u + ctx.tau)
    return lhs, 1j * math.pi + a + b, math.pi + abs(a) + abs(b)


def _zeta_quadruplication(ctx, u, v, w):
    tau = ctx.tau
    lhs = 2.0 * ctx.zeta(u)
    terms = [
        ctx.zeta(u / 2.0),
        ctx.zeta((u + 1.0) / 2.0),
        ctx.zeta((u + tau) / 2.0),
        ctx.zeta((u + tau + 1.0) / 2.0),
    ]
    return lhs, 2j * math.pi + sum(terms), 2.0 * math.pi + sum(abs(t) for t in terms)


def _zeta_sigma_ratio(ctx, u, v, w):
    # ctx.zeta guards the zero of ell_1 before it is used as a denominator
    terms = [-ctx.zeta(u), ctx.zeta(u / 2.0), ctx.zeta((u + 1.0) / 2.0)]
    lhs = ctx.ell(2, u).value / ctx.ell(1, u).value
    prefactor = ctx.ell_zero(2).value / ctx.ell_zero(1).derivative
    return lhs, prefactor * sum(terms), abs(prefactor) * sum(abs(t) for t in terms)


def _zeta_sigma_product(ctx, x1, x2, eta):
    terms = [
        ctx.zeta_tilde(x1),
        ctx.zeta_tilde(x2),
        ctx.zeta_tilde(eta),
        -ctx.zeta_tilde(x1 + x2 + eta),
    ]
    b = ctx.bell
    numerator = (b(4, eta).value * b(1, x1 + x2).value
                 * b(1, x1 + eta).value * b(1, x2 + eta).value)
    denominator = (ctx.bell_zero(4).value * b(1, x1).value
                   * b(1, x2).value * b(1, x1 + x2 + eta).value)
    lhs = numerator / denominator
    prefactor = ctx.ell(1, eta).value / ctx.ell_zero(1).derivative
    return lhs, prefactor * sum(terms), abs(prefactor) * sum(abs(t) for t in terms)


def _catalogue() -> List[Tuple[str, IdentityCheck]]:
    entries: List[Tuple[str, IdentityCheck]] = []
    for shorthand in ("ell", "bell"):
        for alpha in (1, 2, 3, 4):
            entries.append((f"parity_{shorthand}_{alpha}", _parity(alpha, shorthand)))
            entries.append((f"shift_one_{shorthand}_{alpha}", _shift_one(alpha, shorthand)))
            entries.append((f"shift_period_{shorthand}_{alpha}", _shift_tau(alpha, shorthand)))
            entries.append((f"reduction_{shorthand}_{alpha}", _reduction(alpha, shorthand)))
    entries.extend([
        ("half_period_ell_2", _half_period_2),
        ("half_period_ell_3", _half_period_3),
        ("half_period_ell_4", _half_period_4),
        ("landen_bell_1", _landen_bell_1),
        ("landen_bell_4", _landen_bell_4),
        ("landen_ell_1", _landen_ell_1),
        ("addition_bell_11", _addition_bell_11),
        ("addition_bell_44", _addition_bell_44),
        ("mixed_nome_11", _mixed_nome_11),
        ("mixed_nome_44", _mixed_nome_44),
        ("mixed_nome_41", _mixed_nome_41),
        ("zeta_odd", _zeta_odd),
        ("zeta_shift_one", _zeta_shift_one),
        ("zeta_shift_tau", _zeta_shift_tau),
        ("zeta_tilde_odd", _zeta_tilde_odd),
        ("zeta_tilde_shift_one", _zeta_tilde_shift_one),
        ("zeta_tilde_shift_two_tau", _zeta_tilde_shift_two_tau),
        ("zeta_tilde_duplication", _zeta_tilde_duplication),
        ("zeta_split", _zeta_split),
        ("zeta_quadruplication", _zeta_quadruplication),
        ("zeta_sigma_ratio", _zeta_sigma_ratio),
        ("zeta_sigma_product", _zeta_sigma_product),
    ])
    return entries


IDENTITY_CATALOGUE: Dict[str, IdentityCheck] = dict(_catalogue())


def sample_box(ctx: EllipticContext, count: int, rng: np.random.Generator) -> np.ndarray:
    """Draw complex points uniformly from the fixed sampling box."""
    re = rng.uniform(-BOX_REAL_HALF_WIDTH, BOX_REAL_HALF_WIDTH, size=count)
    im = rng.uniform(-BOX_IMAG_FRACTION, BOX_IMAG_FRACTION, size=count) * ctx.tau.imag
    return re + 1j * im


def identity_suite(
    ctx: EllipticContext,
    sample_count: int = 100,
    rng_seed: int = 7,
    tolerance: float = DEFAULT_IDENTITY_TOLERANCE,
    points: Optional[Sequence[complex]] = None,
    names: Optional[Sequence[str]] = None
) -> IdentityReport:
    """
    Evaluate every catalogued identity on seeded random samples.

    Samples that hit a pole, or a common zero of both sides, are counted
    as excluded instead of evaluated.

    Args:
        ctx: Elliptic context
        sample_count: Number of random sample triples
        rng_seed: Seed for numpy's default generator
        tolerance: Pass threshold for the relative residual
        points: Optional explicit first arguments (replaces the random u)
        names: Optional subset of identity names

    Returns:
        IdentityReport with one entry per identity
    """
    rng = np.random.default_rng(rng_seed)
    if points is not None:
        first = np.asarray(points, dtype=complex)
        count = len(first)
    else:
        count = sample_count
        first = sample_box(ctx, count, rng)
    second = sample_box(ctx, count, rng)
    third = sample_box(ctx, count, rng)

    selected = list(names) if names is not None else list(IDENTITY_CATALOGUE)
    report = IdentityReport(tau=ctx.tau, sample_count=count, seed=rng_seed, tolerance=tolerance)

    for name in selected:
        check = IDENTITY_CATALOGUE[name]
        worst = 0.0
        excluded = 0
        for u, v, w in zip(first, second, third):
            try:
                lhs, rhs, scale = check(ctx, complex(u), complex(v), complex(w))
            except NearPole:
                excluded += 1
                continue
            if scale < ctx.pole_eps:
                # both sides sit on a common zero; no relative residual exists
                excluded += 1
                continue
            residual = abs(lhs - rhs) / scale
            worst = max(worst, residual)
        evaluated = count - excluded
        result = IdentityResult(
            name=name,
            max_residual=worst,
            samples=evaluated,
            excluded=excluded,
            passed=worst <= tolerance
        )
        if excluded:
            logger.debug(f"{name}: {excluded} samples excluded near poles")
        if not result.passed:
            logger.warning(f"Identity {name} failed: residual {worst:.3e} > {tolerance:.1e}")
        report.results.append(result)

    logger.info(
        f"Identity suite: {len(report.results)} identities, max residual {report.max_residual():.3e}"
    )
    return report
