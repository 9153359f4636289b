"""
Configuration Provider - Centralized run configuration.

Resolves a RunConfig (JSON file, dict, CLI overrides) into a fully
populated dictionary with every default filled in, and builds the model
objects the commands need from it. Resolution is idempotent: feeding
to_dict() back into the constructor yields the same dictionary.
"""

import copy
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

from ..core.elliptic import EllipticContext
from ..core.lattice import ChiralityVector, Lattice, build_lattice
from ..core.spin_algebra import SpinRep, build_spin_rep
from ..exceptions import ConfigurationError, HelixError
from ..model.couplings import complex_pair
from ..model.model_spec import VARIANTS, ModelSpec, build_model
from ..model.parameters import EtaParameter

logger = logging.getLogger(__name__)

COMMANDS = (
    "couplings", "identities", "verify-shs", "texture",
    "spectrum", "entropy", "divergence", "towers",
)
CSV_COMMANDS = ("texture", "spectrum")
OUTPUT_FORMATS = ("json", "csv")
OUTPUT_DIR_ENV = "SPIN_HELIX_OUTPUT_DIR"

DEFAULT_TOLERANCES = {
    "truncation_eps": 1e-15,
    "max_terms": 64,
    "pole_eps": 1e-12,
    "commensurability": 1e-9,
    "residual": 1e-9,
    "identity": 1e-11,
    "divergence": 1e-10,
    "entropy": 1e-12,
    "cluster": 1e-8,
    "rank": 1e-8,
}
DEFAULT_TAU = [0.0, 1.0]
DEFAULT_SEED = 7
DEFAULT_SAMPLES = 100


def parse_complex(raw: Any, field_name: str) -> complex:
    """
    Accept [re, im], a real number, or the strings "re,im" and "1+2j".

    Raises:
        ConfigurationError: Naming field_name when the value is unusable
    """
    try:
        if isinstance(raw, bool):
            raise TypeError("booleans are not numbers")
        if isinstance(raw, (list, tuple)):
            if len(raw) != 2:
                raise ValueError(f"expected [re, im], got {len(raw)} entries")
            return complex(float(raw[0]), float(raw[1]))
        if isinstance(raw, str):
            text = raw.strip()
            if "," in text:
                re_part, im_part = text.split(",")
                return complex(float(re_part), float(im_part))
            return complex(text.replace(" ", ""))
        return complex(raw)
    except (TypeError, ValueError) as e:
        raise ConfigurationError(f"{field_name}: cannot read {raw!r} as a complex number ({e})") from e


def eta_input(raw: Any) -> Any:
    """Strings of the form "re,im" become [re, im]; everything else passes through."""
    if isinstance(raw, str) and "," in raw:
        return complex_pair(parse_complex(raw, "model.eta"))
    return raw


def merge_config(base: Dict[str, Any], overrides: Dict[str, Any]) -> Dict[str, Any]:
    """Nested merge; None values in overrides leave the base untouched."""
    merged = copy.deepcopy(base)
    for key, value in overrides.items():
        if value is None:
            continue
        if isinstance(value, dict):
            section = merged.get(key)
            merged[key] = merge_config(section if isinstance(section, dict) else {}, value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


class ConfigurationProvider:
    """
    Resolved RunConfig with section getters.

    Section getters return copies; build_* methods turn the model section
    into the objects the library works with.
    """

    def __init__(self, config: Dict[str, Any]):
        """
        Initialize configuration provider.

        Args:
            config: Raw or already resolved RunConfig dictionary

        Raises:
            ConfigurationError: If a field is missing or invalid
        """
        self._config = self._resolve(config)
        self._validate_config()

    @classmethod
    def from_file(cls, config_path: str,
                  overrides: Optional[Dict[str, Any]] = None) -> 'ConfigurationProvider':
        """
        Create configuration provider from a JSON file.

        Overrides are merged into the raw file contents before defaults are
        resolved, so a command given on the command line picks its own
        default output format.

        Raises:
            ConfigurationError: If the file cannot be read or parsed
        """
        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                config = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            logger.error(f"Failed to load configuration from {config_path}: {e}")
            raise ConfigurationError(f"Cannot read config file {config_path}: {e}") from e
        if not isinstance(config, dict):
            raise ConfigurationError(f"{config_path}: expected a JSON object")
        return cls(merge_config(config, overrides or {}))

    def with_overrides(self, overrides: Dict[str, Any]) -> 'ConfigurationProvider':
        """New provider with nested overrides applied; None values are skipped."""
        return ConfigurationProvider(merge_config(self._config, overrides))

    # Resolution

    @staticmethod
    def _resolve(raw: Dict[str, Any]) -> Dict[str, Any]:
        if not isinstance(raw, dict):
            raise ConfigurationError(f"config: expected a JSON object, got {type(raw).__name__}")
        command = raw.get("command")
        if command not in COMMANDS:
            raise ConfigurationError(
                f"command: '{command}' is not one of {', '.join(COMMANDS)}"
            )

        model_raw = dict(raw.get("model", {}))
        tau = parse_complex(model_raw.get("tau", DEFAULT_TAU), "model.tau")
        dims = model_raw.get("dims", [])
        if not isinstance(dims, (list, tuple)) or not all(isinstance(L, int) for L in dims):
            raise ConfigurationError(f"model.dims: expected a list of integers, got {dims!r}")
        model: Dict[str, Any] = {
            "variant": model_raw.get("variant", "xyz"),
            "twice_s": model_raw.get("twice_s", 1),
            "dims": list(dims),
            "boundary": model_raw.get("boundary", "periodic"),
            "tau": complex_pair(tau),
        }
        if model_raw.get("eta") is not None:
            model["eta"] = EtaParameter.parse(eta_input(model_raw["eta"])).to_config()
        if model_raw.get("eta_per_axis"):
            model["eta_per_axis"] = [EtaParameter.parse(e).to_config()
                                     for e in model_raw["eta_per_axis"]]
        if model_raw.get("long_range_weights"):
            model["long_range_weights"] = [[int(k), float(w)]
                                           for k, w in model_raw["long_range_weights"]]
        if model_raw.get("u0") is not None:
            model["u0"] = complex_pair(parse_complex(model_raw["u0"], "model.u0"))

        state_raw = dict(raw.get("state", {}))
        d = max(len(model["dims"]), 1)
        state: Dict[str, Any] = {
            "u": complex_pair(parse_complex(state_raw.get("u", [0.0, 0.0]), "state.u")),
            "epsilon": [int(e) for e in state_raw.get("epsilon", [1] * d)],
        }
        if state_raw.get("u_values"):
            state["u_values"] = [complex_pair(parse_complex(u, "state.u_values"))
                                 for u in state_raw["u_values"]]
        for key in ("n", "va", "sign"):
            if state_raw.get(key) is not None:
                state[key] = int(state_raw[key])
        for key in ("negative_control",):
            if key in state_raw:
                state[key] = bool(state_raw[key])

        tolerances = dict(DEFAULT_TOLERANCES)
        for key, value in raw.get("tolerances", {}).items():
            if key not in DEFAULT_TOLERANCES:
                raise ConfigurationError(f"tolerances.{key}: unknown tolerance")
            tolerances[key] = int(value) if key == "max_terms" else float(value)

        output_raw = dict(raw.get("output", {}))
        default_format = "csv" if command in CSV_COMMANDS else "json"
        output = {
            "directory": output_raw.get("directory")
            or os.environ.get(OUTPUT_DIR_ENV) or "results",
            "format": output_raw.get("format", default_format),
        }
        if output_raw.get("name"):
            output["name"] = output_raw["name"]

        return {
            "command": command,
            "model": model,
            "state": state,
            "tolerances": tolerances,
            "seed": int(raw.get("seed", DEFAULT_SEED)),
            "samples": int(raw.get("samples", DEFAULT_SAMPLES)),
            "output": output,
        }

    def _validate_config(self) -> None:
        model = self._config["model"]
        if model["variant"] not in VARIANTS:
            raise ConfigurationError(
                f"model.variant: '{model['variant']}' is not one of {', '.join(VARIANTS)}"
            )
        if not isinstance(model["twice_s"], int) or model["twice_s"] < 1:
            raise ConfigurationError(f"model.twice_s: must be a positive integer, got {model['twice_s']!r}")
        if model["boundary"] not in ("periodic", "open"):
            raise ConfigurationError(f"model.boundary: must be 'periodic' or 'open', got {model['boundary']!r}")
        if self._config["tolerances"]["max_terms"] < 4:
            raise ConfigurationError("tolerances.max_terms: must be at least 4")
        if self._config["output"]["format"] not in OUTPUT_FORMATS:
            raise ConfigurationError(
                f"output.format: '{self._config['output']['format']}' is not one of json, csv"
            )
        if any(e not in (1, -1) for e in self._config["state"]["epsilon"]):
            raise ConfigurationError(f"state.epsilon: entries must be +1 or -1, got {self._config['state']['epsilon']}")
        if self._config["samples"] < 1:
            raise ConfigurationError("samples: must be at least 1")

    # Sections

    def get_full_config(self) -> Dict[str, Any]:
        """Get the complete resolved configuration."""
        return copy.deepcopy(self._config)

    def get_command(self) -> str:
        return self._config["command"]

    def get_model_config(self) -> Dict[str, Any]:
        return copy.deepcopy(self._config["model"])

    def get_state_config(self) -> Dict[str, Any]:
        return copy.deepcopy(self._config["state"])

    def get_tolerances(self) -> Dict[str, float]:
        return self._config["tolerances"].copy()

    def get_tolerance(self, name: str) -> float:
        """Get one tolerance; unknown names fall back to the residual tolerance."""
        return self._config["tolerances"].get(name, self._config["tolerances"]["residual"])

    def get_output_config(self) -> Dict[str, Any]:
        return self._config["output"].copy()

    def get_output_dir(self) -> Path:
        return Path(self._config["output"]["directory"])

    def get_output_format(self) -> str:
        return self._config["output"]["format"]

    def get_seed(self) -> int:
        return self._config["seed"]

    def get_samples(self) -> int:
        return self._config["samples"]

    # State accessors

    def get_u(self) -> complex:
        return complex(*self._config["state"]["u"])

    def get_u_values(self) -> List[complex]:
        values = self._config["state"].get("u_values")
        return [complex(*u) for u in values] if values else [self.get_u()]

    def get_epsilon(self) -> ChiralityVector:
        try:
            return ChiralityVector(tuple(self._config["state"]["epsilon"]))
        except HelixError as e:
            raise ConfigurationError(f"state.epsilon: {e}") from e

    def get_state_int(self, key: str, default: Optional[int] = None) -> Optional[int]:
        return self._config["state"].get(key, default)

    def is_negative_control(self) -> bool:
        return self._config["state"].get("negative_control", False)

    # Model construction

    def get_tau(self) -> complex:
        return complex(*self._config["model"]["tau"])

    def build_context(self) -> EllipticContext:
        tolerances = self._config["tolerances"]
        try:
            return EllipticContext(
                self.get_tau(),
                truncation_eps=tolerances["truncation_eps"],
                max_terms=tolerances["max_terms"],
                pole_eps=tolerances["pole_eps"],
            )
        except (HelixError, ValueError) as e:
            raise ConfigurationError(f"model.tau: {e}") from e

    def build_spin(self) -> SpinRep:
        return build_spin_rep(self._config["model"]["twice_s"])

    def build_lattice(self) -> Lattice:
        model = self._config["model"]
        if not model["dims"]:
            raise ConfigurationError("model.dims: at least one length is required")
        try:
            return build_lattice(model["dims"], model["boundary"])
        except HelixError as e:
            raise ConfigurationError(f"model.dims: {e}") from e

    def build_model(self, eta_override: Any = None) -> ModelSpec:
        """
        ModelSpec for the model section; eta_override replaces η (negative controls).

        Raises:
            ConfigurationError: For unparseable or missing fields
            ModelError: For variant/parameter mismatches
        """
        model = self._config["model"]
        eta = eta_override if eta_override is not None else model.get("eta")
        u0 = complex(*model["u0"]) if "u0" in model else 0j
        return build_model(
            variant=model["variant"],
            spin=self.build_spin(),
            lattice=self.build_lattice(),
            eta=eta,
            ctx=self.build_context(),
            eta_per_axis=model.get("eta_per_axis", ()),
            long_range_weights=model.get("long_range_weights", ()),
            u0=u0,
        )

    # Export

    def to_dict(self) -> Dict[str, Any]:
        """Export the resolved configuration."""
        return copy.deepcopy(self._config)

    def to_json(self) -> str:
        return json.dumps(self._config, indent=2, sort_keys=True)

    @staticmethod
    def save_config(config: Dict[str, Any], config_path: str) -> None:
        """
        Save configuration to file.

        Args:
            config: Configuration dictionary to save
            config_path: Path where to save the configuration
        """
        with open(config_path, 'w', encoding='utf-8') as f:
            json.dump(config, f, indent=2, sort_keys=True)
        logger.info(f"Saved configuration to {config_path}")
