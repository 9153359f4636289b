"""RunConfig resolution, defaults and field-naming errors."""

import json

import pytest

from components.exceptions import ConfigurationError
from components.services.config_provider import (
    DEFAULT_TOLERANCES,
    OUTPUT_DIR_ENV,
    ConfigurationProvider,
    merge_config,
    parse_complex,
)


@pytest.fixture
def raw_config():
    return {
        "command": "verify-shs",
        "model": {"variant": "xyz", "dims": [11], "eta": "2/11", "tau": [0.0, 0.8]},
        "state": {"u": "0.28,0"},
    }


class TestResolution:

    def test_idempotent(self, raw_config):
        resolved = ConfigurationProvider(raw_config).to_dict()
        assert ConfigurationProvider(resolved).to_dict() == resolved

    def test_defaults(self, raw_config, monkeypatch):
        monkeypatch.delenv(OUTPUT_DIR_ENV, raising=False)
        provider = ConfigurationProvider(raw_config)
        assert provider.get_tolerances() == DEFAULT_TOLERANCES
        assert provider.get_output_format() == "json"
        assert str(provider.get_output_dir()) == "results"
        assert provider.get_seed() == 7
        assert provider.get_u() == 0.28
        assert list(provider.get_epsilon()) == [1]

    def test_csv_default_for_texture(self, raw_config):
        raw_config["command"] = "texture"
        assert ConfigurationProvider(raw_config).get_output_format() == "csv"

    def test_output_dir_from_environment(self, raw_config, monkeypatch, tmp_path):
        monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path))
        assert ConfigurationProvider(raw_config).get_output_dir() == tmp_path
        raw_config["output"] = {"directory": "elsewhere"}
        assert str(ConfigurationProvider(raw_config).get_output_dir()) == "elsewhere"

    def test_eta_string_preserved(self, raw_config):
        raw_config["model"]["eta"] = "10/27*tau"
        assert ConfigurationProvider(raw_config).get_model_config()["eta"] == "10/27*tau"

    def test_eta_pair_string(self, raw_config):
        raw_config["model"]["eta"] = "0.2,0.1"
        assert ConfigurationProvider(raw_config).get_model_config()["eta"] == [0.2, 0.1]

    def test_build_model(self, raw_config):
        spec = ConfigurationProvider(raw_config).build_model()
        assert spec.volume == 11
        assert spec.eta_value == pytest.approx(2 / 11)
        assert spec.tau == 0.8j

    def test_unknown_tolerance_falls_back(self, raw_config):
        provider = ConfigurationProvider(raw_config)
        assert provider.get_tolerance("nonexistent") == DEFAULT_TOLERANCES["residual"]


class TestErrors:

    @pytest.mark.parametrize("mutate, field", [
        (lambda c: c.update(command="plot"), "command"),
        (lambda c: c["model"].update(tau="abc"), "model.tau"),
        (lambda c: c.update(tolerances={"foo": 1.0}), "tolerances.foo"),
        (lambda c: c["model"].update(variant="ising"), "model.variant"),
        (lambda c: c["model"].update(dims="11"), "model.dims"),
        (lambda c: c["state"].update(epsilon=[2]), "state.epsilon"),
        (lambda c: c.update(output={"format": "xml"}), "output.format"),
    ])
    def test_error_names_field(self, raw_config, mutate, field):
        mutate(raw_config)
        with pytest.raises(ConfigurationError, match=field.replace(".", r"\.")):
            ConfigurationProvider(raw_config)

    def test_tau_in_lower_half_plane(self, raw_config):
        raw_config["model"]["tau"] = [0.0, -0.8]
        with pytest.raises(ConfigurationError, match="model.tau"):
            ConfigurationProvider(raw_config).build_context()

    def test_missing_dims(self, raw_config):
        raw_config["model"]["dims"] = []
        with pytest.raises(ConfigurationError, match="model.dims"):
            ConfigurationProvider(raw_config).build_lattice()

    def test_unreadable_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            ConfigurationProvider.from_file(str(path))


class TestFiles:

    def test_from_file_with_overrides(self, raw_config, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps(raw_config), encoding="utf-8")
        provider = ConfigurationProvider.from_file(str(path), {"command": "texture", "seed": None})
        assert provider.get_command() == "texture"
        assert provider.get_output_format() == "csv"
        assert provider.get_seed() == 7

    def test_save_and_reload(self, raw_config, tmp_path):
        provider = ConfigurationProvider(raw_config)
        path = tmp_path / "saved.json"
        ConfigurationProvider.save_config(provider.to_dict(), str(path))
        assert ConfigurationProvider.from_file(str(path)).to_dict() == provider.to_dict()


class TestHelpers:

    @pytest.mark.parametrize("raw, expected", [
        ([0.1, 0.8], 0.1 + 0.8j),
        ("0,0.8", 0.8j),
        ("1+2j", 1 + 2j),
        (0.5, 0.5 + 0j),
    ])
    def test_parse_complex(self, raw, expected):
        assert parse_complex(raw, "x") == expected

    @pytest.mark.parametrize("raw", [[1.0], "a,b", True, None])
    def test_parse_complex_errors(self, raw):
        with pytest.raises(ConfigurationError, match="state.u"):
            parse_complex(raw, "state.u")

    def test_merge_skips_none(self):
        base = {"model": {"eta": "1/3", "dims": [6]}, "seed": 7}
        merged = merge_config(base, {"model": {"eta": None, "dims": [8]}, "seed": None})
        assert merged == {"model": {"eta": "1/3", "dims": [8]}, "seed": 7}
        assert base["model"]["dims"] == [6]

    def test_merge_drops_none_in_new_section(self):
        merged = merge_config({}, {"model": {"dims": None, "eta": "1/3"}, "state": {"u": None},
                                   "seed": None})
        assert merged == {"model": {"eta": "1/3"}, "state": {}}

    def test_flag_only_overrides_resolve(self, monkeypatch):
        monkeypatch.delenv(OUTPUT_DIR_ENV, raising=False)
        overrides = {
            "command": "couplings",
            "model": {"variant": None, "dims": None, "eta": "2/11", "tau": "0,0.8"},
            "state": {"u": None, "epsilon": None},
            "seed": None,
            "output": {"directory": None, "format": None},
        }
        provider = ConfigurationProvider(merge_config({}, overrides))
        assert provider.get_model_config()["dims"] == []
        assert provider.get_model_config()["tau"] == [0.0, 0.8]
        assert provider.get_u() == 0.0
        assert provider.get_seed() == 7
        assert str(provider.get_output_dir()) == "results"
