"""Parsing, canonicalization and serialization of η."""

from fractions import Fraction

import pytest

from components.exceptions import ConfigurationError
from components.model.parameters import EtaParameter


class TestParse:

    @pytest.mark.parametrize("text, real_part, tau_part", [
        ("2/11", Fraction(2, 11), Fraction(0)),
        ("10/27*tau", Fraction(0), Fraction(10, 27)),
        ("1/2-tau", Fraction(1, 2), Fraction(-1)),
        ("1/3+1/3*tau", Fraction(1, 3), Fraction(1, 3)),
        ("tau", Fraction(0), Fraction(1)),
        ("2*tau/6", Fraction(0), Fraction(1, 3)),
    ])
    def test_exact_forms(self, text, real_part, tau_part):
        eta = EtaParameter.parse(text)
        assert eta.is_exact
        assert eta.real_part == real_part
        assert eta.tau_part == tau_part

    @pytest.mark.parametrize("text", ["2/11", "10/27*tau", "1/2-tau", "1/3+1/3*tau", "tau", "0"])
    def test_serialized_back_to_the_same_string(self, text):
        assert EtaParameter.parse(text).to_config() == text

    def test_complex_pair(self):
        eta = EtaParameter.parse([0.1, 0.2])
        assert not eta.is_exact
        assert eta.resolve() == 0.1 + 0.2j
        assert eta.to_config() == [0.1, 0.2]

    def test_numbers(self):
        assert EtaParameter.parse(3).real_part == 3
        assert EtaParameter.parse(0.25).resolve() == 0.25

    @pytest.mark.parametrize("raw", ["abc", "", "1/0", [1.0], True, None])
    def test_invalid(self, raw):
        with pytest.raises(ConfigurationError):
            EtaParameter.parse(raw)


class TestResolve:

    def test_tau_multiple_needs_tau(self):
        with pytest.raises(ConfigurationError):
            EtaParameter.parse("1/3*tau").resolve()

    def test_resolve(self):
        assert EtaParameter.parse("1/2-tau").resolve(0.8j) == pytest.approx(0.5 - 0.8j)
        assert EtaParameter.parse("2/11").resolve() == pytest.approx(2 / 11)

    def test_scaled(self):
        assert EtaParameter.parse("1/3*tau").scaled(3).to_config() == "tau"


class TestCanonical:

    def test_real_shift(self):
        assert EtaParameter.parse("5/2").canonical(1j).to_config() == "1/2"

    def test_tau_shift(self):
        assert EtaParameter.parse("1/2-tau").canonical(1j).to_config() == "1/2+tau"

    def test_without_tau(self):
        assert EtaParameter.parse("-1/3").canonical(None).to_config() == "5/3"

    def test_numeric(self):
        value = EtaParameter.numeric(2.5 - 0.3j).canonical(1j).resolve()
        assert value == pytest.approx(0.5 + 1.7j)

    def test_canonical_is_idempotent(self):
        eta = EtaParameter.parse("7/3-5/2*tau").canonical(0.8j)
        assert eta.canonical(0.8j) == eta
