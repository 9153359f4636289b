"""
Modulation Parameter

η is either an exact combination r0 + r1·τ of rationals (so that
commensurability can be decided exactly) or a plain complex number.
"""

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Union

from ..exceptions import ConfigurationError

logger = logging.getLogger(__name__)

_TERM_SPLIT = re.compile(r"(?<![eE])(?=[+-])")


def _parse_rational_product(text: str) -> Fraction:
    tokens = re.split(r"([*/])", text.replace(" ", ""))
    if not tokens or tokens[0] == "":
        raise ValueError(f"Empty factor in '{text}'")
    result = Fraction(tokens[0])
    for op, operand in zip(tokens[1::2], tokens[2::2]):
        factor = Fraction(operand)
        result = result * factor if op == "*" else result / factor
    return result


def _fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class EtaParameter:
    """
    Anisotropy parameter η.

    Exact form: real_part + tau_part·τ with Fractions (value is None).
    Floating form: value holds the complex number.
    """
    real_part: Fraction = Fraction(0)
    tau_part: Fraction = Fraction(0)
    value: Optional[complex] = None

    @classmethod
    def exact(cls, real_part: Union[Fraction, int, str] = 0,
              tau_part: Union[Fraction, int, str] = 0) -> "EtaParameter":
        return cls(Fraction(real_part), Fraction(tau_part), None)

    @classmethod
    def numeric(cls, value: complex) -> "EtaParameter":
        return cls(Fraction(0), Fraction(0), complex(value))

    @classmethod
    def parse(cls, raw: Any) -> "EtaParameter":
        """
        Parse an η given as "2/11", "10/27*tau", "1/2-tau", [re, im] or a number.

        Raises:
            ConfigurationError: If the input cannot be interpreted
        """
        if isinstance(raw, EtaParameter):
            return raw
        if isinstance(raw, Fraction):
            return cls.exact(raw)
        if isinstance(raw, bool):
            raise ConfigurationError(f"Cannot interpret {raw!r} as eta")
        if isinstance(raw, int):
            return cls.exact(raw)
        if isinstance(raw, (float, complex)):
            return cls.numeric(raw)
        if isinstance(raw, (list, tuple)):
            if len(raw) != 2:
                raise ConfigurationError(f"Complex eta must be [re, im], got {raw!r}")
            try:
                return cls.numeric(complex(float(raw[0]), float(raw[1])))
            except (TypeError, ValueError) as e:
                raise ConfigurationError(f"Invalid complex eta {raw!r}: {e}") from e
        if isinstance(raw, str):
            return cls._parse_text(raw)
        raise ConfigurationError(f"Cannot interpret {raw!r} as eta")

    @classmethod
    def _parse_text(cls, text: str) -> "EtaParameter":
        cleaned = text.replace(" ", "").lower()
        if not cleaned:
            raise ConfigurationError("Empty eta string")
        real_part = Fraction(0)
        tau_part = Fraction(0)
        try:
            for term in filter(None, _TERM_SPLIT.split(cleaned)):
                sign = -1 if term.startswith("-") else 1
                body = term.lstrip("+-")
                if "tau" in body:
                    body = body.replace("tau", "1")
                    tau_part += sign * _parse_rational_product(body)
                else:
                    real_part += sign * _parse_rational_product(body)
        except (ValueError, ZeroDivisionError) as e:
            raise ConfigurationError(f"Invalid eta expression '{text}': {e}") from e
        return cls.exact(real_part, tau_part)

    @property
    def is_exact(self) -> bool:
        return self.value is None

    @property
    def uses_tau(self) -> bool:
        return self.is_exact and self.tau_part != 0

    def resolve(self, tau: Optional[complex] = None) -> complex:
        """Floating value of η; τ is needed only when tau_part is nonzero."""
        if not self.is_exact:
            return complex(self.value)
        if self.tau_part != 0:
            if tau is None:
                raise ConfigurationError(f"eta={self} involves tau but no tau is available")
            return float(self.real_part) + float(self.tau_part) * complex(tau)
        return complex(float(self.real_part), 0.0)

    def scaled(self, k: int) -> "EtaParameter":
        if self.is_exact:
            return EtaParameter.exact(self.real_part * k, self.tau_part * k)
        return EtaParameter.numeric(self.value * k)

    def canonical(self, tau: Optional[complex]) -> "EtaParameter":
        """
        Move η into 0 <= Re η < 2, 0 <= Im η < 2 Im τ by shifts of 2 and 2τ.

        Without τ only the real shift is applied.
        """
        if self.is_exact:
            tau_part = self.tau_part
            real_part = self.real_part
            if tau is not None:
                tau_part = tau_part - 2 * math.floor(tau_part / 2)
                re_value = float(real_part) + float(tau_part) * complex(tau).real
                real_part = real_part - 2 * math.floor(re_value / 2.0)
            else:
                real_part = real_part - 2 * math.floor(real_part / 2)
            return EtaParameter.exact(real_part, tau_part)

        value = complex(self.value)
        if tau is not None:
            tau = complex(tau)
            shifts = math.floor(value.imag / (2.0 * tau.imag))
            value -= 2.0 * shifts * tau
        value -= 2.0 * math.floor(value.real / 2.0)
        return EtaParameter.numeric(value)

    def to_config(self) -> Union[str, List[float]]:
        """Serialized form accepted back by parse()."""
        if not self.is_exact:
            return [self.value.real, self.value.imag]
        parts = []
        if self.real_part != 0 or self.tau_part == 0:
            parts.append(_fraction_text(self.real_part))
        if self.tau_part != 0:
            coefficient = self.tau_part
            prefix = "-" if coefficient < 0 else ("+" if parts else "")
            magnitude = abs(coefficient)
            term = "tau" if magnitude == 1 else f"{_fraction_text(magnitude)}*tau"
            parts.append(f"{prefix}{term}")
        return "".join(parts)

    def __str__(self) -> str:
        serialized = self.to_config()
        return serialized if isinstance(serialized, str) else f"{complex(*serialized)}"
