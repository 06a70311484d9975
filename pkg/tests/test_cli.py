import json

import pytest

from diskcover import generate, solve
from diskcover.cli import main
import diskcover.cli as cli_module
from diskcover.harness import VerificationReport, TIMING_FIELDS


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolveCommand:
    def test_small_file(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text("0 0\n0.5 0\n")
        code, out, _ = run(["solve", "--input", str(path), "--m", "1"], capsys)
        assert code == 0
        assert "covered 2 of 2" in out

    def test_two_clusters_json(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text("0 0\n0.1 0\n10 0\n10.1 0\n")
        code, out, _ = run(
            ["solve", "--input", str(path), "--m", "2", "--json"], capsys
        )
        assert code == 0
        data = json.loads(out)
        assert data["covered"] == 4
        assert len(data["disks"]) == 2
        assert {"cx", "cy"} == set(data["disks"][0])
        assert data["traces"][0]["chose_greedy"] is True

    def test_round_trip_matches_in_memory(self, tmp_path, capsys):
        inst = generate(40, 9.0, 123)
        path = tmp_path / "gen.txt"
        code, _, _ = run(
            ["gen", "--n", "40", "--side", "9", "--seed", "123", "--out", str(path)],
            capsys,
        )
        assert code == 0
        code, out, _ = run(
            ["solve", "--input", str(path), "--m", "2", "--json"], capsys
        )
        assert code == 0
        data = json.loads(out)
        expected = solve(inst.points, 2)
        assert data["covered"] == expected.covered.count
        assert data["rho"] == expected.rho
        got_centers = [(d["cx"], d["cy"]) for d in data["disks"]]
        assert got_centers == [(d.cx, d.cy) for d in expected.disks]

    def test_parse_error_reports_line(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("0 0\nnot a point here\n")
        code, _, err = run(["solve", "--input", str(path), "--m", "1"], capsys)
        assert code == 1
        assert "line 2" in err

    def test_empty_file_rejected(self, tmp_path, capsys):
        path = tmp_path / "empty.txt"
        path.write_text("# only a comment\n")
        code, _, err = run(["solve", "--input", str(path), "--m", "1"], capsys)
        assert code == 1
        assert "no points" in err

    def test_missing_file(self, tmp_path, capsys):
        code, _, err = run(["solve", "--input", str(tmp_path / "nope"), "--m", "1"], capsys)
        assert code == 1


class TestUsageErrors:
    def test_missing_required_argument_exits_1(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["solve", "--m", "1"])
        assert exc.value.code == 1

    def test_unknown_command_exits_1(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 1


class TestBenchCommand:
    def test_csv_written_and_deterministic(self, tmp_path, capsys):
        out1 = tmp_path / "a.csv"
        out2 = tmp_path / "b.csv"
        for out in (out1, out2):
            code, _, _ = run(
                [
                    "bench",
                    "--config",
                    "30:8,20:5",
                    "--m",
                    "2",
                    "--seeds",
                    "1,2",
                    "--out",
                    str(out),
                ],
                capsys,
            )
            assert code == 0

        def strip_timing(path):
            rows = [l.split(",") for l in path.read_text().strip().splitlines()]
            keep = [i for i, h in enumerate(rows[0]) if h not in TIMING_FIELDS]
            return [[r[i] for i in keep] for r in rows]

        assert strip_timing(out1) == strip_timing(out2)

    def test_json_out(self, tmp_path, capsys):
        out = tmp_path / "r.csv"
        jout = tmp_path / "r.json"
        code, _, _ = run(
            [
                "bench",
                "--config",
                "15:4",
                "--seeds",
                "7",
                "--out",
                str(out),
                "--json-out",
                str(jout),
            ],
            capsys,
        )
        assert code == 0
        data = json.loads(jout.read_text())
        assert data[0]["cover_baseline"] == data[0]["cover_ours"]

    def test_bad_config_exits_1(self, tmp_path, capsys):
        code, _, err = run(
            ["bench", "--config", "abc", "--seeds", "1", "--out", str(tmp_path / "x.csv")],
            capsys,
        )
        assert code == 1


class TestVerifyCommand:
    def test_success_exit_0(self, capsys):
        code, out, _ = run(
            ["verify", "--trials", "10", "--n-max", "10", "--m-max", "2", "--seed", "4"],
            capsys,
        )
        assert code == 0
        assert "10/10 trials passed" in out

    def test_failure_exit_2(self, capsys, monkeypatch):
        def fake_verify(trials, n_max, m_max, seed, max_seconds=None):
            return VerificationReport(1, 1, 0, failures=["seed=1 n=2 m=1: boom"])

        monkeypatch.setattr(cli_module, "verify", fake_verify)
        code, _, err = run(
            ["verify", "--trials", "1", "--n-max", "2", "--m-max", "1", "--seed", "0"],
            capsys,
        )
        assert code == 2
        assert "FAIL" in err


class TestGenCommand:
    def test_bounds_and_count(self, tmp_path, capsys):
        path = tmp_path / "g.txt"
        code, _, _ = run(
            ["gen", "--n", "25", "--side", "6", "--seed", "9", "--out", str(path)],
            capsys,
        )
        assert code == 0
        lines = path.read_text().strip().splitlines()
        assert len(lines) == 25

    def test_invalid_n(self, tmp_path, capsys):
        code, _, err = run(
            ["gen", "--n", "0", "--side", "6", "--seed", "9", "--out", str(tmp_path / "g")],
            capsys,
        )
        assert code == 1
