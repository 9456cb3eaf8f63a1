"""CLI surface: subcommands, exit codes, manifests, cache, determinism."""

import json
import subprocess
import sys

import pytest

from schmidtpoly.cache import b_table_cached, c_table_cached
from schmidtpoly.cli import main, parse_indices, parse_range, parse_signs
from schmidtpoly.congruence import CongruenceReport, Witness
from schmidtpoly.schmidt import SchmidtParams
from schmidtpoly.sweep import RunManifest, SweepSpec, run_sweep


class TestParsing:
    def test_parse_range(self):
        assert parse_range("1..10") == (1, 10)
        assert parse_range("3") == (3, 3)
        with pytest.raises(ValueError):
            parse_range("x..2")

    def test_parse_signs(self):
        assert parse_signs("+") == (1,)
        assert parse_signs("+1") == (1,)
        assert parse_signs("-") == (-1,)
        assert parse_signs("both") == (-1, 1)
        with pytest.raises(ValueError):
            parse_signs("pm")

    def test_parse_indices(self):
        assert parse_indices("1,1") == [1, 1]
        assert parse_indices("0") == [0]
        with pytest.raises(ValueError):
            parse_indices("")
        with pytest.raises(ValueError):
            parse_indices("1,-2")


class TestVerify:
    def test_small_grid_passes(self, capsys):
        code = main(["verify", "--n", "1..10", "--m", "1..2", "--r", "1..2", "--sign", "both"])
        assert code == 0
        out = capsys.readouterr().out
        assert "80 cells, 80 pass, 0 fail" in out

    def test_n_zero_is_usage_error(self, capsys):
        code = main(["verify", "--n", "0..5"])
        assert code == 2
        assert "n must be >= 1" in capsys.readouterr().err

    def test_manifest_to_stdout(self, capsys):
        code = main(["verify", "--n", "2", "--m", "1", "--r", "1", "--sign", "+", "--json", "-"])
        assert code == 0
        manifest = json.loads(capsys.readouterr().out)
        assert manifest["aggregate"] == "pass"
        assert len(manifest["cells"]) == 1
        cell = manifest["cells"][0]
        assert cell["coefficients"] == ["4", "6"]
        assert cell["polynomial"] == "4 * x_0 + 6 * x_1"
        assert cell["verdict"] == "pass"
        assert cell["witness"] is None

    def test_manifest_to_file(self, tmp_path, capsys):
        out = tmp_path / "run.json"
        code = main(["verify", "--n", "1..3", "--json", str(out)])
        assert code == 0
        manifest = json.loads(out.read_text())
        assert manifest["schema"] == "schmidtpoly-run/1"
        assert [c["n"] for c in manifest["cells"]] == [1, 2, 3]

    def test_unwritable_output_path(self, capsys):
        code = main(["verify", "--n", "2", "--json", "/nonexistent-dir/run.json"])
        assert code == 2
        assert "cannot write" in capsys.readouterr().err

    def test_pan_check_cells_record_specialization(self, capsys):
        code = main(["verify", "--check", "pan", "--n", "1..4", "--sign", "both", "--json", "-"])
        assert code == 0
        manifest = json.loads(capsys.readouterr().out)
        assert all(c["specialization_equal"] for c in manifest["cells"])

    def test_kk1_sweep(self, capsys):
        code = main(
            ["verify", "--check", "kk1", "--n", "1..5", "--m", "1..2",
             "--a", "0..2", "--sign", "both"]
        )
        assert code == 0

    def test_odd_power_m2_usage_error(self, capsys):
        code = main(["verify", "--check", "odd_power", "--n", "1..3", "--m", "2"])
        assert code == 2
        assert "exploratory" in capsys.readouterr().err

    def test_odd_power_m2_exploratory(self, capsys):
        code = main(
            ["verify", "--check", "odd_power", "--n", "1..3", "--m", "2", "--exploratory"]
        )
        assert code == 0

    def test_bad_range_syntax_exits_2(self):
        with pytest.raises(SystemExit) as info:
            main(["verify", "--n", "two"])
        assert info.value.code == 2

    def test_a_rejected_for_plain_checks(self, capsys):
        code = main(["verify", "--n", "1..3", "--a", "0..2"])
        assert code == 2
        assert "kk1/odd_power" in capsys.readouterr().err


class TestDeterminism:
    def test_identical_runs_byte_identical(self, tmp_path):
        args = ["verify", "--n", "1..6", "--m", "1..2", "--r", "1..2",
                "--sign", "both", "--stable-output", "--json"]
        first = tmp_path / "a.json"
        second = tmp_path / "b.json"
        assert main(args + [str(first)]) == 0
        assert main(args + [str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_parallel_serial_equivalence(self, tmp_path):
        base = ["verify", "--n", "1..6", "--m", "1..2", "--r", "1..2",
                "--sign", "both", "--stable-output"]
        serial = tmp_path / "serial.json"
        parallel = tmp_path / "parallel.json"
        assert main(base + ["--jobs", "1", "--json", str(serial)]) == 0
        assert main(base + ["--jobs", "3", "--json", str(parallel)]) == 0
        assert serial.read_bytes() == parallel.read_bytes()

    def test_cell_order_is_ascending(self):
        spec = SweepSpec(n=(1, 2), m=(1, 2), r=(1, 1), signs=(-1, 1))
        cells = spec.cells()
        keys = [(p.n, p.m, p.r, p.epsilon, p.a) for p in cells]
        assert keys == sorted(keys)
        assert cells[0].epsilon == -1


class TestExitCodeMapping:
    def test_counterexample_maps_to_exit_1(self):
        # the verified theorems never fail, so synthesize a failing report
        failing = CongruenceReport(
            params=SchmidtParams(4, 1, 1),
            check="theorem",
            weight="plain",
            passed=False,
            witness=Witness("x_1", 6, 2),
            polynomial="4 * x_0 + 6 * x_1",
            coefficients=(4, 6),
            num_terms=2,
            elapsed_ms=0.0,
        )
        manifest = RunManifest(
            spec=SweepSpec(n=(4, 4)), reports=[failing], total_elapsed_ms=0.0
        )
        assert manifest.exit_code() == 1
        doc = manifest.to_dict()
        assert doc["aggregate"] == "fail"
        assert doc["counterexamples"] == 1
        assert doc["cells"][0]["witness"] == {
            "monomial": "x_1",
            "coefficient": "6",
            "residue": "2",
        }


class TestBTableCommand:
    def test_output_format(self, capsys):
        assert main(["btable", "--m", "1", "--r", "2"]) == 0
        assert capsys.readouterr().out.strip() == "b[1]=1 b[2]=2"

    def test_base_case(self, capsys):
        assert main(["btable", "--m", "3", "--r", "1"]) == 0
        assert capsys.readouterr().out.strip() == "b[3]=1"

    def test_invalid_params(self, capsys):
        assert main(["btable", "--m", "-1", "--r", "1"]) == 2
        assert main(["btable", "--m", "1", "--r", "0"]) == 2


class TestCTableCommand:
    def test_output_format(self, capsys):
        assert main(["ctable", "--j", "0", "--a", "1"]) == 0
        assert capsys.readouterr().out.strip() == "c[0]=0 c[1]=1"

    def test_invalid_params(self, capsys):
        assert main(["ctable", "--j", "-1", "--a", "0"]) == 2


class TestIdentityCommand:
    @pytest.mark.parametrize(
        "argv",
        [
            ["identity", "main5", "--m", "2", "--r", "3"],
            ["identity", "main8", "--m", "2", "--k", "3"],
            ["identity", "main12", "--n", "50"],
            ["identity", "main13", "--n", "50"],
            ["identity", "repeat", "--i", "4", "--j", "7"],
            ["identity", "main14", "--j", "2", "--a", "2"],
            ["identity", "sq_weight", "--a", "4"],
        ],
    )
    def test_all_identities_pass(self, argv, capsys):
        assert main(argv) == 0
        assert "PASS" in capsys.readouterr().out

    def test_missing_parameter_is_arity_error(self, capsys):
        assert main(["identity", "main5", "--m", "2"]) == 2
        assert "missing --r" in capsys.readouterr().err

    def test_extra_parameter_is_arity_error(self, capsys):
        assert main(["identity", "main12", "--n", "5", "--k", "1"]) == 2
        assert "unexpected --k" in capsys.readouterr().err

    def test_unknown_identity_exits_2(self):
        with pytest.raises(SystemExit) as info:
            main(["identity", "main99", "--n", "1"])
        assert info.value.code == 2


class TestLinearizeCommand:
    def test_pair(self, capsys):
        assert main(["linearize", "--indices", "1,1", "--r", "1"]) == 0
        out = capsys.readouterr().out
        assert "{1: 2, 2: 4}" in out
        assert "bounds: min=1 >= max(indices)=1, max=2 <= r*sum(indices)=2" in out

    def test_zero_index(self, capsys):
        assert main(["linearize", "--indices", "0", "--r", "5"]) == 0
        assert "{0: 1}" in capsys.readouterr().out

    def test_power(self, capsys):
        assert main(["linearize", "--indices", "2", "--r", "2"]) == 0
        out = capsys.readouterr().out
        assert "{2: 1, 3: 6, 4: 6}" in out

    def test_empty_list_exits_2(self):
        with pytest.raises(SystemExit) as info:
            main(["linearize", "--indices", ""])
        assert info.value.code == 2


class TestCache:
    def test_btable_cold_then_warm(self, tmp_path, capsys):
        argv = ["btable", "--m", "2", "--r", "3", "--cache", str(tmp_path)]
        assert main(argv) == 0
        cold = capsys.readouterr().out
        data = json.loads((tmp_path / "btable.json").read_text())
        assert data["2,3"] == ["1", "36", "216", "400", "225"]
        assert main(argv) == 0
        assert capsys.readouterr().out == cold

    def test_ctable_cold_then_warm(self, tmp_path, capsys):
        argv = ["ctable", "--j", "1", "--a", "2", "--cache", str(tmp_path)]
        assert main(argv) == 0
        cold = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == cold
        assert "1,2" in json.loads((tmp_path / "ctable.json").read_text())

    def test_corrupted_cache_file_recomputed(self, tmp_path):
        path = tmp_path / "btable.json"
        path.write_text("{ not json")
        table = b_table_cached(1, 2, tmp_path)
        assert table.entries == (1, 2)
        assert json.loads(path.read_text())["1,2"] == ["1", "2"]

    def test_wrong_cached_values_not_trusted(self, tmp_path):
        path = tmp_path / "btable.json"
        path.write_text(json.dumps({"1,2": ["7", "7"]}))
        assert b_table_cached(1, 2, tmp_path).entries == (1, 2)
        assert json.loads(path.read_text())["1,2"] == ["1", "2"]

        cpath = tmp_path / "ctable.json"
        cpath.write_text(json.dumps({"0,1": ["5", "5"]}))
        assert c_table_cached(0, 1, tmp_path).entries == (0, 1)
        assert json.loads(cpath.read_text())["0,1"] == ["0", "1"]

    def test_malformed_entry_recomputed(self, tmp_path):
        path = tmp_path / "btable.json"
        path.write_text(json.dumps({"1,2": ["1"]}))  # wrong length
        assert b_table_cached(1, 2, tmp_path).entries == (1, 2)

    def test_env_var_default(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("SCHMIDTPOLY_CACHE_DIR", str(tmp_path))
        assert main(["btable", "--m", "1", "--r", "3"]) == 0
        assert (tmp_path / "btable.json").exists()

    def test_verify_verdicts_independent_of_cache_state(self, tmp_path):
        base = ["verify", "--n", "1..5", "--m", "1..2", "--sign", "both",
                "--stable-output"]
        cold = tmp_path / "cold.json"
        warm = tmp_path / "warm.json"
        cache = tmp_path / "cache"
        assert main(base + ["--cache", str(cache), "--json", str(cold)]) == 0
        assert main(base + ["--cache", str(cache), "--json", str(warm)]) == 0
        assert cold.read_bytes() == warm.read_bytes()


class TestReportCommand:
    def test_renders_csv_and_figures(self, tmp_path, capsys):
        manifest_path = tmp_path / "run.json"
        assert main(
            ["verify", "--n", "1..6", "--m", "1..2", "--sign", "both",
             "--json", str(manifest_path)]
        ) == 0
        capsys.readouterr()
        out_dir = tmp_path / "report"
        assert main(["report", "--manifest", str(manifest_path), "--out-dir", str(out_dir)]) == 0
        assert (out_dir / "cells.csv").exists()
        assert (out_dir / "verdict_grid.png").stat().st_size > 0
        assert (out_dir / "coefficient_growth.png").stat().st_size > 0
        header = (out_dir / "cells.csv").read_text().splitlines()[0]
        assert header.startswith("n,m,r,epsilon,a,check,weight,verdict")
        rows = (out_dir / "cells.csv").read_text().splitlines()
        assert len(rows) == 1 + 24  # header + 6*2*2 cells

    def test_missing_manifest_exits_2(self, tmp_path, capsys):
        code = main(["report", "--manifest", str(tmp_path / "nope.json"),
                     "--out-dir", str(tmp_path)])
        assert code == 2

    def test_invalid_manifest_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("[1, 2]")
        assert main(["report", "--manifest", str(bad), "--out-dir", str(tmp_path)]) == 2


class TestSweepInternals:
    def test_run_sweep_object(self):
        spec = SweepSpec(check="theorem", n=(1, 4), m=(1, 1), r=(1, 2), signs=(1,))
        manifest = run_sweep(spec)
        assert manifest.passed
        assert len(manifest.reports) == 8
        doc = manifest.to_dict()
        assert doc["counterexamples"] == 0
        assert all(cell["elapsed_ms"] >= 0 for cell in doc["cells"])

    def test_stable_zeroes_timing(self):
        spec = SweepSpec(n=(1, 2), stable=True)
        doc = run_sweep(spec).to_dict()
        assert doc["total_elapsed_ms"] == 0.0
        assert all(cell["elapsed_ms"] == 0.0 for cell in doc["cells"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "schmidtpoly", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "schmidtpoly 0.1.0" in proc.stdout


def test_console_script_help():
    proc = subprocess.run(
        [sys.executable, "-m", "schmidtpoly", "verify", "--help"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "--stable-output" in proc.stdout
