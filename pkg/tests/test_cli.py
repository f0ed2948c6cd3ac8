import json
import subprocess
import sys

import pytest

from spectral_stokes import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDispatch:
    def test_chain_verify(self, capsys):
        code, out, err = run_cli(capsys, "chain", "verify", "--a", "3,2")
        assert code == 0
        data = json.loads(out)
        assert data["a"] == [3, 2] and data["mu"] == 4 and data["holds"] is True

    def test_domain_error_exit_one(self, capsys):
        code, out, err = run_cli(capsys, "solve2", "--a", "5")
        assert code == 1
        assert out == ""
        assert json.loads(err)["error"] == "OutOfT"

    def test_usage_error_exit_two(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["not-a-command"])
        assert exc.value.code == 2

    def test_hor_spectrum(self, capsys):
        code, out, _ = run_cli(capsys, "hor", "spectrum", "--k", "1",
                               "--beta", "1/3,2/3")
        data = json.loads(out)
        assert code == 0 and data["spectrum"] == ["1/6", "-1/6"]

    def test_hor_matrix(self, capsys):
        code, out, _ = run_cli(capsys, "hor", "matrix", "--poly", "1,1,1")
        data = json.loads(out)
        assert code == 0
        assert data["S"]["entries"] == [["1", "1"], ["0", "1"]]
        assert data["R"]["entries"] == [["-1", "-1"], ["1", "0"]]

    def test_strata3_scan_row(self, capsys):
        code, out, _ = run_cli(capsys, "strata3", "scan", "--step", "1",
                               "--lo", "-2", "--hi", "2")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("a1,a2,a3,f,stratum")
        assert any(line.startswith("2,2,2,0,Exceptional") for line in lines)

    def test_solve2_values(self, capsys):
        code, out, _ = run_cli(capsys, "solve2", "--a", "2")
        data = json.loads(out)
        assert data["alpha1"] == "1/2"
        assert data["spectral_pairs"] == [
            {"alpha": "-1/2", "level": 2, "mult": 1},
            {"alpha": "1/2", "level": 0, "mult": 1}]

    def test_seifert_classify_file(self, capsys, tmp_path):
        f = tmp_path / "m.json"
        f.write_text(json.dumps({"n": 2, "entries": [["1", "2"], ["0", "1"]]}))
        code, out, _ = run_cli(capsys, "seifert", "classify", "--matrix", str(f))
        data = json.loads(out)
        assert code == 0 and data["label"] == "Seif(-1,1,2,1)"

    def test_seifert_iso(self, capsys, tmp_path):
        fa = tmp_path / "a.json"
        fb = tmp_path / "b.json"
        fa.write_text(json.dumps({"n": 2, "entries": [["1", "1"], ["0", "1"]]}))
        fb.write_text(json.dumps({"n": 2, "entries": [["1", "-1"], ["0", "1"]]}))
        code, out, _ = run_cli(capsys, "seifert", "iso", str(fa), str(fb))
        assert code == 0 and json.loads(out)["isomorphic"] is True

    def test_track(self, capsys, tmp_path):
        f = tmp_path / "path.json"
        f.write_text(json.dumps({"path": [
            {"n": 2, "entries": [[1, 0], [0, 1]]},
            {"n": 2, "entries": [[1, 2], [0, 1]]}]}))
        code, out, _ = run_cli(capsys, "track", "--path-file", str(f),
                               "--steps", "300")
        data = json.loads(out)
        assert code == 0
        assert sorted(data["endpoint"]) == pytest.approx([-0.5, 0.5], abs=1e-6)
        assert data["path_dependent"] is True

    def test_orbit_conj16(self, capsys):
        code, out, _ = run_cli(capsys, "orbit", "conj16", "--n", "3")
        data = json.loads(out)
        assert code == 0
        assert "groups" in data and "violations" in data

    def test_orbit_explore(self, capsys, tmp_path):
        f = tmp_path / "m.json"
        f.write_text(json.dumps({"n": 2, "entries": [["1", "1"], ["0", "1"]]}))
        code, out, _ = run_cli(capsys, "orbit", "explore", "--matrix", str(f),
                               "--depth", "6", "--budget", "100")
        data = json.loads(out)
        assert code == 0 and data["nodes"] == 1

    def test_chain_grid_small(self, capsys):
        code, out, _ = run_cli(capsys, "chain", "grid", "--a0-max", "3",
                               "--aj-max", "2", "--m-max", "1")
        data = json.loads(out)
        assert code == 0 and data["holds"] is True

    def test_hor_verify(self, capsys):
        code, out, _ = run_cli(capsys, "hor", "verify", "--n", "4",
                               "--samples", "25")
        data = json.loads(out)
        assert code == 0 and data["holds"] is True

    def test_hor_track(self, capsys):
        code, out, _ = run_cli(capsys, "hor", "track", "--k", "1",
                               "--target-poly", "1,2,1", "--steps", "200")
        data = json.loads(out)
        assert sorted(data["endpoint"]) == pytest.approx([-0.5, 0.5], abs=1e-6)


class TestEmit:
    def test_deterministic_output(self, capsys):
        _, out1, _ = run_cli(capsys, "--seed", "0", "hor", "verify",
                             "--n", "3", "--samples", "10")
        _, out2, _ = run_cli(capsys, "--seed", "0", "hor", "verify",
                             "--n", "3", "--samples", "10")
        assert out1 == out2

    def test_mode_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("SPECTRAL_STOKES_MODE", "numeric")
        code, out, _ = run_cli(capsys, "--mode", "exact", "solve2", "--a", "1")
        data = json.loads(out)
        assert code == 0
        # numeric mode: values are printed as floats, not rationals
        assert "/" not in str(data["alpha1"])

    def test_round_trip_spp(self, capsys):
        from spectral_stokes.spectra import Spp
        _, out, _ = run_cli(capsys, "solve2", "--a", "2")
        pairs = json.loads(out)["spectral_pairs"]
        assert Spp.from_json(pairs).to_json() == pairs

    def test_empty_scan_header_only(self, capsys):
        code, out, _ = run_cli(capsys, "strata3", "scan", "--step", "1",
                               "--lo", "5", "--hi", "6")
        assert code == 0
        assert out.strip() == "a1,a2,a3,f,stratum,types"


class TestSelftest:
    def test_selftest_wiring(self, capsys, monkeypatch):
        from spectral_stokes import acceptance

        calls = {}

        def fake_run_all(verbose=True):
            calls["ran"] = True

            class R:
                passed = True
                in_time = True
            return [R()]

        monkeypatch.setattr(acceptance, "run_all", fake_run_all)
        assert cli.main(["selftest"]) == 0
        assert calls.get("ran")


def test_console_entry_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "spectral_stokes.cli", "chain", "verify", "--a", "2"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["holds"] is True
