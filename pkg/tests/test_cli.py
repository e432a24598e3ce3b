import json
import pathlib

import pytest

from dfsqft import parse_circuit, synth_qft_scd, synth_qft_wcd
from dfsqft.cli import main

from conftest import GOLDEN_DIR


def run_cli(*argv):
    return main(list(argv))


class TestSynth:
    def test_plain_gate_count(self, tmp_path):
        out = tmp_path / "plain3.txt"
        assert run_cli("synth", "plain", "3", "--out", str(out)) == 0
        assert len(parse_circuit(out.read_text()).gates) == 6

    def test_wcd_gate_count(self, tmp_path):
        out = tmp_path / "wcd3.txt"
        assert run_cli("synth", "wcd", "3", "--out", str(out)) == 0
        circuit = parse_circuit(out.read_text())
        assert len(circuit.gates) == 24
        assert circuit == synth_qft_wcd(3)

    def test_scd_gate_count(self, tmp_path):
        out = tmp_path / "scd1.txt"
        assert run_cli("synth", "scd", "1", "--out", str(out)) == 0
        circuit = parse_circuit(out.read_text())
        assert len(circuit.gates) == 29
        assert circuit == synth_qft_scd(1)

    def test_stdout_default(self, capsys):
        assert run_cli("synth", "plain", "1") == 0
        assert capsys.readouterr().out == "qubits 1\nH 1\n"

    def test_matches_golden(self, tmp_path):
        out = tmp_path / "wcd2.txt"
        run_cli("synth", "wcd", "2", "--out", str(out))
        golden = (pathlib.Path(GOLDEN_DIR) / "qft_wcd_2.txt").read_text(encoding="utf-8")
        assert out.read_text() == golden

    def test_range_violation_exits_1(self, capsys):
        assert run_cli("synth", "scd", "3") == 1
        assert "1..2" in capsys.readouterr().err

    def test_bad_encoding_is_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            run_cli("synth", "weird", "1")
        assert excinfo.value.code == 2


class TestVerify:
    @pytest.mark.parametrize("encoding,n", [("plain", 1), ("plain", 3), ("wcd", 2), ("scd", 1)])
    def test_passes(self, encoding, n, tmp_path, capsys):
        out = tmp_path / "report.json"
        assert run_cli("verify", encoding, str(n), "--out", str(out)) == 0
        report = json.loads(out.read_text())
        assert report["schema"] == "dfsqft/1"
        assert report["passed"] is True
        assert all(c["pass"] for c in report["checks"])
        assert max(c["deviation"] for c in report["checks"]) < 1e-10
        assert {"version", "config", "seed", "duration_s"} <= report.keys()

    def test_plain_single_qubit_is_hadamard_check(self, capsys):
        assert run_cli("verify", "plain", "1") == 0
        report = json.loads(capsys.readouterr().out)
        names = {c["name"] for c in report["checks"]}
        assert "qft_vs_dft_up_to_phase" in names
        assert report["output_order"] == "identity"

    def test_scd_includes_resolver(self, capsys):
        assert run_cli("verify", "scd", "1") == 0
        report = json.loads(capsys.readouterr().out)
        assert report["resolver"]["as_written_passes"] is True
        assert report["resolver"]["fallback_normative"] is False
        assert report["resolver"]["search_exercised"] is False

    def test_csv_format(self, capsys):
        assert run_cli("verify", "plain", "2", "--format", "csv") == 0
        out = capsys.readouterr().out
        lines = [l for l in out.splitlines() if not l.startswith("#")]
        assert lines[0] == "name,tolerance,deviation,pass"
        assert all(line.endswith(("True", "False")) for line in lines[1:])

    def test_range_violation(self, capsys):
        assert run_cli("verify", "wcd", "5") == 1


class TestNoiseBench:
    def test_headline_protection(self, tmp_path):
        out = tmp_path / "bench"
        assert (
            run_cli(
                "noise-bench", "--encoding", "wcd", "--n", "2",
                "--trials", "200", "--seed", "7", "--out", str(out),
            )
            == 0
        )
        report = json.loads((tmp_path / "bench.json").read_text())
        assert report["arms"]["encoded"]["mean_fidelity"] >= 1.0 - 1e-10
        assert report["arms"]["unencoded"]["mean_fidelity"] < 0.99
        assert report["arms"]["encoded"]["mean_leakage"] < 1e-10
        assert report["arms"]["unencoded"]["mean_leakage"] is None

    def test_zero_noise_both_arms_perfect(self, tmp_path):
        out = tmp_path / "quiet"
        run_cli(
            "noise-bench", "--encoding", "wcd", "--n", "1", "--trials", "1",
            "--distribution", "gaussian", "--sigma", "0", "--out", str(out),
        )
        report = json.loads((tmp_path / "quiet.json").read_text())
        for arm in ("encoded", "unencoded"):
            assert 1.0 - report["arms"][arm]["mean_fidelity"] < 1e-10

    def test_csv_determinism(self, tmp_path):
        args = ("noise-bench", "--encoding", "scd", "--n", "1", "--trials", "25", "--seed", "3")
        run_cli(*args, "--out", str(tmp_path / "a"))
        run_cli(*args, "--out", str(tmp_path / "b"))
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()

    def test_csv_shape(self, tmp_path):
        run_cli(
            "noise-bench", "--encoding", "wcd", "--n", "1", "--trials", "4",
            "--seed", "1", "--out", str(tmp_path / "r"),
        )
        lines = (tmp_path / "r.csv").read_text().splitlines()
        comments = [l for l in lines if l.startswith("#")]
        rows = [l for l in lines if not l.startswith("#")]
        assert comments and "schema=dfsqft/1" in comments[0]
        assert rows[0] == "arm,trial,fidelity,leakage"
        assert len(rows) == 1 + 2 * 4  # header + two arms x trials
        assert rows[1].startswith("encoded,0,")

    def test_missing_required_options(self, capsys):
        assert run_cli("noise-bench", "--n", "2") == 1
        assert "encoding" in capsys.readouterr().err

    def test_config_file_with_flag_override(self, tmp_path, capsys):
        config = tmp_path / "bench.cfg"
        config.write_text("encoding=wcd\nn=1\ntrials=3\nseed=5\npolicy=endpoints\n")
        out = tmp_path / "cfg"
        assert run_cli("noise-bench", "--config", str(config), "--trials", "6",
                       "--out", str(out)) == 0
        report = json.loads((tmp_path / "cfg.json").read_text())
        assert report["config"]["trials"] == 6  # flag wins
        assert report["config"]["encoding"] == "wcd"
        assert report["config"]["policy"] == "endpoints_only"
        assert report["seed"] == 5

    def test_env_seed_fallback(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("DFSQFT_SEED", "41")
        run_cli("noise-bench", "--encoding", "wcd", "--n", "1", "--trials", "2",
                "--out", str(tmp_path / "env"))
        report = json.loads((tmp_path / "env.json").read_text())
        assert report["seed"] == 41

    def test_stdout_json_default(self, capsys):
        assert run_cli("noise-bench", "--encoding", "wcd", "--n", "1", "--trials", "2") == 0
        report = json.loads(capsys.readouterr().out)
        assert report["command"] == "noise-bench"


class TestDfsTable:
    def test_quoted_rows(self, tmp_path):
        out = tmp_path / "scd.csv"
        assert run_cli("dfs-table", "scd", "--n-max", "8", "--out", str(out)) == 0
        rows = {}
        for line in out.read_text().splitlines():
            if line.startswith("#") or line.startswith("n,"):
                continue
            fields = line.split(",")
            rows[int(fields[0])] = fields
        assert rows[4][1] == "2" and rows[4][3] == "0.25"
        assert rows[4][4] == "4"  # smallest register for one logical qubit
        # closed form and brute force agree on every row
        assert all(fields[1] == fields[2] for fields in rows.values())

    def test_wcd_rows(self, tmp_path):
        out = tmp_path / "wcd.csv"
        assert run_cli("dfs-table", "wcd", "--n-max", "6", "--out", str(out)) == 0
        rows = [l for l in out.read_text().splitlines() if not l.startswith(("#", "n,"))]
        n2 = rows[1].split(",")
        assert n2[1] == "2" and n2[3] == "0.5" and n2[4] == "2"

    def test_odd_scd_rows_have_empty_eta(self, tmp_path):
        out = tmp_path / "scd.csv"
        run_cli("dfs-table", "scd", "--n-max", "5", "--out", str(out))
        rows = [l for l in out.read_text().splitlines() if not l.startswith(("#", "n,"))]
        n3 = rows[2].split(",")
        assert n3[1] == n3[2] == "0" and n3[3] == ""

    def test_range_violation(self, capsys):
        assert run_cli("dfs-table", "wcd", "--n-max", "11") == 1


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as excinfo:
        run_cli("--version")
    assert excinfo.value.code == 0
    assert "dfsqft" in capsys.readouterr().out
