"""End-to-end tests of the command-line interface."""

import json
import math

import numpy as np
import pytest

from clustersqueeze import SearchExhausted
from clustersqueeze.cli import main, matrix_from_json, matrix_to_json

EPR_GRAPH = "2\n0 1 1.0\n"


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


class TestMatrixJson:
    def test_real_matrix_omits_imaginary_block(self):
        obj = matrix_to_json(np.eye(2))
        assert "im" not in obj
        assert obj["rows"] == 2 and obj["cols"] == 2

    def test_round_trip_lossless(self):
        rng = np.random.default_rng(80)
        for _ in range(10):
            m = rng.normal(size=(3, 4)) + 1j * rng.normal(size=(3, 4))
            back = matrix_from_json(json.loads(json.dumps(matrix_to_json(m))))
            assert np.array_equal(back, m)

    def test_real_complex_dtype_round_trips_as_real(self):
        m = np.eye(2, dtype=complex)
        back = matrix_from_json(matrix_to_json(m))
        assert not np.iscomplexobj(back)
        assert np.array_equal(back, np.eye(2))


class TestSynthesize:
    def test_epr_identity_bundle(self, tmp_path, capsys):
        graph = write(tmp_path, "epr.graph", EPR_GRAPH)
        code, out, err = run_cli(
            ["synthesize", "--graph", graph, "-z", "1.0"], capsys
        )
        assert code == 0 and err == ""
        bundle = json.loads(out)
        z_mat = matrix_from_json(bundle["Z"])
        assert np.allclose(z_mat, -np.array([[0.0, 1.0], [1.0, 0.0]]), atol=1e-12)
        c_mat = matrix_from_json(bundle["C"])
        assert bundle["covariance_max_abs"] == pytest.approx(
            2.0 * math.exp(-2.0), abs=1e-10
        )
        assert np.allclose(c_mat, 2.0 * math.exp(-2.0) * np.eye(2), atol=1e-10)
        assert all(check["passed"] for check in bundle["checks"])
        assert any(c["name"] == "self_inverse_value" for c in bundle["checks"])

    def test_single_node_faithful(self, tmp_path, capsys):
        graph = write(tmp_path, "one.graph", "1\n")
        code, out, _ = run_cli(
            ["synthesize", "--graph", graph, "--gauge", "faithful", "-z", "1.0"],
            capsys,
        )
        assert code == 0
        bundle = json.loads(out)
        assert np.allclose(matrix_from_json(bundle["Z"]), 1j * np.eye(1), atol=1e-12)
        assert bundle["covariance_max_abs"] == pytest.approx(
            math.exp(-2.0), abs=1e-10
        )
        assert any(c["name"] == "faithful_gauge_identity" for c in bundle["checks"])

    def test_custom_gauge_violating_reality_exits_3(self, tmp_path, capsys):
        graph = write(tmp_path, "tri.graph", "3\n0 1 1\n1 2 1\n")
        bad = {"rows": 3, "cols": 3, "re": [[1, 0, 0], [0, 2, 0], [0, 0, 3]]}
        gauge = write(tmp_path, "bad.json", json.dumps(bad))
        code, out, err = run_cli(
            ["synthesize", "--graph", graph, "--gauge", f"custom:{gauge}"], capsys
        )
        assert code == 3
        assert "reality" in err

    def test_parse_error_exits_2(self, tmp_path, capsys):
        graph = write(tmp_path, "bad.graph", "2\n0 1\n")
        code, _, err = run_cli(["synthesize", "--graph", graph], capsys)
        assert code == 2 and "line 2" in err

    def test_missing_file_exits_2(self, capsys):
        code, _, err = run_cli(["synthesize", "--graph", "/nope/missing"], capsys)
        assert code == 2 and "cannot read" in err

    def test_overflow_exits_4(self, tmp_path, capsys):
        graph = write(tmp_path, "epr.graph", EPR_GRAPH)
        code, _, err = run_cli(
            ["synthesize", "--graph", graph, "-z", "40.0"], capsys
        )
        assert code == 4 and "cosh" in err

    def test_deterministic_output(self, tmp_path, capsys):
        graph = write(tmp_path, "g.graph", "3\n0 1 0.7\n1 2 -1.2\n0 0 0.3\n")
        args = ["synthesize", "--graph", graph, "--gauge", "faithful", "-z", "0.8"]
        code1, out1, _ = run_cli(args, capsys)
        code2, out2, _ = run_cli(args, capsys)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_out_file_and_text_format(self, tmp_path, capsys):
        graph = write(tmp_path, "epr.graph", EPR_GRAPH)
        out_path = tmp_path / "bundle.json"
        code, out, _ = run_cli(
            ["synthesize", "--graph", graph, "--out", str(out_path)], capsys
        )
        assert code == 0 and out == ""
        assert json.loads(out_path.read_text())["command"] == "synthesize"
        code, out, _ = run_cli(
            ["synthesize", "--graph", graph, "--format", "text"], capsys
        )
        assert code == 0 and "checks:" in out


class TestAnalyze:
    def test_epr_interaction_recovers_edge(self, tmp_path, capsys):
        z_obj = matrix_to_json(-np.array([[0.0, 1.0], [1.0, 0.0]]))
        z_path = write(tmp_path, "z.json", json.dumps(z_obj))
        code, out, _ = run_cli(["analyze", "--interaction", z_path], capsys)
        assert code == 0
        report = json.loads(out)
        assert "0 1 1.0" in report["graph_text"]
        assert np.allclose(report["theta"], [0.0, 0.0])

    def test_disconnected_modes_give_empty_graph(self, tmp_path, capsys):
        z_obj = matrix_to_json(1j * np.eye(3))
        z_path = write(tmp_path, "z.json", json.dumps(z_obj))
        code, out, _ = run_cli(["analyze", "--interaction", z_path], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["graph_text"] == "3\n"
        a = matrix_from_json(report["adjacency"])
        assert np.max(np.abs(a)) <= 1e-10

    def test_singular_zero_phases_trigger_search(self, tmp_path, capsys):
        z_obj = matrix_to_json(-1j * np.eye(1))
        z_path = write(tmp_path, "z.json", json.dumps(z_obj))
        code, out, _ = run_cli(["analyze", "--interaction", z_path], capsys)
        assert code == 0
        report = json.loads(out)
        assert report["phase_search_used"] is True
        assert report["sigma_min_at_input_phases"] == pytest.approx(0.0, abs=1e-12)
        assert report["sigma_min"] >= 1e-6
        assert report["theta"][0] != 0.0

    def test_reads_interaction_from_bundle(self, tmp_path, capsys):
        graph = write(tmp_path, "epr.graph", EPR_GRAPH)
        bundle_path = tmp_path / "bundle.json"
        run_cli(["synthesize", "--graph", graph, "--out", str(bundle_path)], capsys)
        code, out, _ = run_cli(
            ["analyze", "--interaction", str(bundle_path)], capsys
        )
        assert code == 0
        recovered = json.loads(out)["graph_text"]
        assert recovered == EPR_GRAPH

    def test_search_exhausted_exits_5(self, tmp_path, capsys, monkeypatch):
        import clustersqueeze.analysis as analysis_mod

        def exhausted(*args, **kwargs):
            raise SearchExhausted("forced for the exit-code test")

        monkeypatch.setattr(analysis_mod, "find_regular_phases", exhausted)
        z_obj = matrix_to_json(-1j * np.eye(1))
        z_path = write(tmp_path, "z.json", json.dumps(z_obj))
        code, _, err = run_cli(["analyze", "--interaction", z_path], capsys)
        assert code == 5 and "forced" in err


class TestDecompose:
    def test_epr_squeezers(self, tmp_path, capsys):
        z_obj = matrix_to_json(-np.array([[0.0, 1.0], [1.0, 0.0]]))
        z_path = write(tmp_path, "z.json", json.dumps(z_obj))
        code, out, _ = run_cli(
            ["decompose", "--interaction", z_path, "-z", "1.0"], capsys
        )
        assert code == 0
        report = json.loads(out)
        assert report["D"] == pytest.approx([1.0, 1.0], abs=1e-12)
        assert report["decibels"] == pytest.approx([8.686, 8.686], abs=1e-3)
        assert all(c["passed"] for c in report["checks"])

    def test_from_graph_route(self, tmp_path, capsys):
        graph = write(tmp_path, "g.graph", "3\n0 1 1\n1 2 1\n")
        code, out, _ = run_cli(
            ["decompose", "--graph", graph, "--gauge", "faithful", "-z", "1.0"],
            capsys,
        )
        assert code == 0
        report = json.loads(out)
        v = matrix_from_json(report["V"])
        assert np.max(np.abs(v @ v.conj().T - np.eye(3))) <= 1e-9

    def test_requires_some_input(self, capsys):
        code, _, err = run_cli(["decompose"], capsys)
        assert code == 2 and "provide" in err


class TestVerify:
    def test_bundle_passes(self, tmp_path, capsys):
        graph = write(tmp_path, "epr.graph", EPR_GRAPH)
        bundle_path = tmp_path / "bundle.json"
        run_cli(["synthesize", "--graph", graph, "--out", str(bundle_path)], capsys)
        code, out, _ = run_cli(
            ["verify", "--interaction", str(bundle_path)], capsys
        )
        assert code == 0
        report = json.loads(out)
        assert report["passed"] is True
        assert any(c["name"].startswith("bundle_") for c in report["checks"])

    def test_tampered_bundle_fails(self, tmp_path, capsys):
        graph = write(tmp_path, "epr.graph", EPR_GRAPH)
        bundle_path = tmp_path / "bundle.json"
        run_cli(["synthesize", "--graph", graph, "--out", str(bundle_path)], capsys)
        bundle = json.loads(bundle_path.read_text())
        bundle["C"]["re"][0][0] += 0.5
        bundle_path.write_text(json.dumps(bundle))
        code, out, _ = run_cli(
            ["verify", "--interaction", str(bundle_path)], capsys
        )
        assert code == 1
        report = json.loads(out)
        assert report["passed"] is False
        failing = [c["name"] for c in report["checks"] if not c["passed"]]
        assert "bundle_C_matches" in failing

    def test_graph_route(self, tmp_path, capsys):
        graph = write(tmp_path, "g.graph", "4\n0 1 1\n1 2 -0.5\n2 3 1\n0 3 0.25\n")
        code, out, _ = run_cli(
            ["verify", "--graph", graph, "--gauge", "faithful", "-z", "1.5"],
            capsys,
        )
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_incomplete_bundle_exits_2(self, tmp_path, capsys):
        path = write(tmp_path, "frag.json", json.dumps({"Z": matrix_to_json(np.eye(1))}))
        code, _, err = run_cli(["verify", "--interaction", path], capsys)
        assert code == 2 and "bundle" in err


class TestSweep:
    def test_epr_identity_csv_values(self, tmp_path, capsys):
        graph = write(tmp_path, "epr.graph", EPR_GRAPH)
        code, out, _ = run_cli(
            ["sweep", "--graph", graph, "--z-range", "1:3:1"], capsys
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "z,max_abs_C,frobenius_C"
        values = [float(line.split(",")[1]) for line in lines[1:]]
        assert f"{values[0]:.6f}" == "0.270671"
        assert f"{values[1]:.6f}" == "0.036631"
        assert f"{values[2]:.6f}" == "0.004958"

    def test_csv_round_trips_doubles(self, tmp_path, capsys):
        graph = write(tmp_path, "epr.graph", EPR_GRAPH)
        code, out, _ = run_cli(
            ["sweep", "--graph", graph, "--z-range", "1:2:0.5"], capsys
        )
        assert code == 0
        for line in out.strip().splitlines()[1:]:
            z, max_abs, fro = (float(tok) for tok in line.split(","))
            assert max_abs == pytest.approx(2.0 * math.exp(-2.0 * z), abs=1e-12)
            assert fro == pytest.approx(math.sqrt(2.0) * max_abs, rel=1e-12)

    def test_single_z(self, tmp_path, capsys):
        graph = write(tmp_path, "epr.graph", EPR_GRAPH)
        code, out, _ = run_cli(["sweep", "--graph", graph, "-z", "1.0"], capsys)
        assert code == 0
        assert len(out.strip().splitlines()) == 2

    def test_json_format(self, tmp_path, capsys):
        graph = write(tmp_path, "epr.graph", EPR_GRAPH)
        code, out, _ = run_cli(
            ["sweep", "--graph", graph, "--z-range", "1:2:1", "--format", "json"],
            capsys,
        )
        assert code == 0
        rows = json.loads(out)["rows"]
        assert [r["z"] for r in rows] == [1.0, 2.0]

    def test_bad_range_exits_2(self, tmp_path, capsys):
        graph = write(tmp_path, "epr.graph", EPR_GRAPH)
        code, _, err = run_cli(
            ["sweep", "--graph", graph, "--z-range", "3:1:1"], capsys
        )
        assert code == 2

    def test_deterministic(self, tmp_path, capsys):
        graph = write(tmp_path, "epr.graph", EPR_GRAPH)
        args = ["sweep", "--graph", graph, "--z-range", "0.5:2.5:0.5"]
        _, out1, _ = run_cli(args, capsys)
        _, out2, _ = run_cli(args, capsys)
        assert out1 == out2


class TestUsage:
    def test_unknown_command_exits_2(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_phases_file(self, tmp_path, capsys):
        graph = write(tmp_path, "epr.graph", EPR_GRAPH)
        phases = write(tmp_path, "phases.txt", "# two angles\n0.3\n-0.4\n")
        code, out, _ = run_cli(
            ["synthesize", "--graph", graph, "--phases", phases, "--gauge", "faithful"],
            capsys,
        )
        assert code == 0
        bundle = json.loads(out)
        assert bundle["theta"] == pytest.approx([0.3, -0.4])
        assert bundle["covariance_max_abs"] == pytest.approx(
            math.exp(-2.0), abs=1e-10
        )

    def test_wrong_phase_count_exits_2(self, tmp_path, capsys):
        graph = write(tmp_path, "epr.graph", EPR_GRAPH)
        phases = write(tmp_path, "phases.txt", "0.1\n")
        code, _, err = run_cli(
            ["synthesize", "--graph", graph, "--phases", phases], capsys
        )
        assert code == 2 and "expected 2 angles" in err

    def test_conflicting_scale_flags_exit_2(self, tmp_path, capsys):
        graph = write(tmp_path, "epr.graph", EPR_GRAPH)
        code, _, err = run_cli(
            ["sweep", "--graph", graph, "-z", "1", "--z-range", "1:2:1"], capsys
        )
        assert code == 2 and "not both" in err
