"""End-to-end runs through main()."""

import json

import pytest

import main


@pytest.fixture(autouse=True)
def no_env_output_dir(monkeypatch):
    monkeypatch.delenv("SPIN_HELIX_OUTPUT_DIR", raising=False)


def _run(*argv):
    return main.main([*argv, "-q"])


class TestCommands:

    def test_couplings(self, tmp_path):
        assert _run("couplings", "--eta", "2/11", "--tau", "0,0.8", "--output-dir", str(tmp_path)) == 0
        document = json.loads((tmp_path / "couplings.json").read_text(encoding="utf-8"))
        assert document["results"][0]["jx"][0] == pytest.approx(1.1128, abs=5e-5)
        assert document["config"]["model"]["eta"] == "2/11"
        assert set(document) == {"config", "results", "metadata"}

    def test_texture_csv(self, tmp_path):
        code = _run("texture", "--dims", "6", "--eta", "1/3", "--tau", "0,0.8",
                    "--u", "0.3,0.1", "--output-dir", str(tmp_path), "--name", "chain")
        assert code == 0
        lines = (tmp_path / "chain.csv").read_text(encoding="utf-8").splitlines()
        assert lines[0] == "site,n1,sx,sy,sz"
        assert len(lines) == 7

    def test_verify_shs_passes(self, tmp_path):
        code = _run("verify-shs", "--dims", "6", "--eta", "1/3", "--tau", "0,0.8",
                    "--u", "0.3,0.1", "--negative-control", "--output-dir", str(tmp_path))
        assert code == 0
        document = json.loads((tmp_path / "verify-shs.json").read_text(encoding="utf-8"))
        names = [r["check_name"] for r in document["results"]]
        assert names == ["eigenstate", "negative_control"]

    def test_failed_check_exit_code(self, tmp_path):
        code = _run("verify-shs", "--dims", "6", "--eta", "1/3", "--tau", "0,0.8",
                    "--u", "0.3,0.1", "--tolerance", "residual=1e-300",
                    "--output-dir", str(tmp_path))
        assert code == 2
        assert (tmp_path / "verify-shs.json").exists()

    def test_identities(self, tmp_path):
        assert _run("identities", "--samples", "20", "--output-dir", str(tmp_path)) == 0
        document = json.loads((tmp_path / "identities.json").read_text(encoding="utf-8"))
        assert document["results"][0]["passed"]

    def test_spectrum_csv(self, tmp_path):
        code = _run("spectrum", "--variant", "xxz", "--dims", "6", "--eta", "1/3",
                    "--u", "0.1,0", "--output-dir", str(tmp_path))
        assert code == 0
        lines = (tmp_path / "spectrum.csv").read_text(encoding="utf-8").splitlines()
        assert lines[0] == "index,re,im"
        assert len(lines) == 65
        assert (tmp_path / "spectrum.json").exists()

    def test_entropy(self, tmp_path):
        code = _run("entropy", "--variant", "xxz", "--dims", "8", "--eta", "1/4",
                    "--n", "4", "--va", "4", "--output-dir", str(tmp_path))
        assert code == 0

    def test_config_file(self, tmp_path):
        config = {
            "command": "towers",
            "model": {"variant": "xxz", "dims": [6], "eta": "1/3"},
            "output": {"directory": str(tmp_path)},
        }
        path = tmp_path / "run.json"
        path.write_text(json.dumps(config), encoding="utf-8")
        assert _run("--config", str(path)) == 0
        assert (tmp_path / "towers.json").exists()


class TestErrors:

    def test_bad_tau(self, tmp_path):
        assert _run("couplings", "--eta", "2/11", "--tau", "abc", "--output-dir", str(tmp_path)) == 1

    def test_no_command(self):
        assert _run() == 1

    def test_not_commensurate(self, tmp_path):
        code = _run("verify-shs", "--dims", "6", "--eta", "1/5", "--tau", "0,0.8",
                    "--output-dir", str(tmp_path))
        assert code == 1

    def test_keyboard_interrupt(self, monkeypatch, tmp_path):
        class Interrupted:
            def __init__(self, *args, **kwargs):
                pass

            def run(self):
                raise KeyboardInterrupt

        monkeypatch.setattr(main, "CommandRunner", Interrupted)
        assert _run("couplings", "--eta", "2/11", "--output-dir", str(tmp_path)) == 130
