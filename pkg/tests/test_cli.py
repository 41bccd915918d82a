import json

import pytest

from sudoq.cli import main
from sudoq.grids import GridDimension, parse_classical_grid
from sudoq.classical import is_valid_square
from sudoq.puzzles import (
    BENCHMARK_9X9_TEXT,
    TWO_SOLUTION_9X9_TEXT,
    UNSOLVABLE_4X4_TEXT,
)

UNIQUE_4X4_TEXT = "..34\n..12\n4123\n2341\n"


@pytest.fixture
def grid_file(tmp_path):
    def write(text, name="grid.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


class TestCheck:
    def test_unique(self, grid_file, capsys):
        assert main(["check", grid_file(BENCHMARK_9X9_TEXT)]) == 0
        assert capsys.readouterr().out.strip() == "unique"

    def test_multiple(self, grid_file, capsys):
        assert main(["check", grid_file(TWO_SOLUTION_9X9_TEXT)]) == 0
        assert capsys.readouterr().out.strip() == "multiple (2)"

    def test_unsolvable_exit_2(self, grid_file, capsys):
        assert main(["check", grid_file(UNSOLVABLE_4X4_TEXT)]) == 2
        assert capsys.readouterr().out.strip() == "unsolvable"

    def test_json_format(self, grid_file, capsys):
        assert main(["check", "--format", "json", grid_file(UNIQUE_4X4_TEXT)]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data == {"class": "unique", "count": 1, "capped": False, "conflict": False}

    def test_comment_lines_ignored(self, grid_file, capsys):
        assert main(["check", grid_file("# unique 4x4\n" + UNIQUE_4X4_TEXT)]) == 0
        assert capsys.readouterr().out.strip() == "unique"


class TestSolve:
    def test_solved_json(self, grid_file, capsys):
        assert main(["solve", "--seed", "0", grid_file(UNIQUE_4X4_TEXT)]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["status"] == "solved"
        assert data["final_error"] < 1e-8
        assert len(data["grid"]["cells"]) == 16

    def test_unsolvable_exit_2(self, grid_file, capsys):
        assert main(["solve", "--imax", "10", grid_file(UNSOLVABLE_4X4_TEXT)]) == 2
        assert json.loads(capsys.readouterr().out)["status"] == "failure"

    def test_out_file(self, grid_file, tmp_path):
        out = tmp_path / "solve.json"
        assert main(["solve", "--out", str(out), grid_file(UNIQUE_4X4_TEXT)]) == 0
        assert json.loads(out.read_text())["status"] == "solved"


class TestScore:
    def test_unsolvable_scores(self, grid_file, capsys):
        rc = main(["score", "--trials", "2", grid_file(UNSOLVABLE_4X4_TEXT)])
        assert rc == 0
        data = json.loads(capsys.readouterr().out)
        assert data["classical_score"] == pytest.approx(2 ** 0.5, abs=1e-9)
        assert data["quantum_score_estimate"] == pytest.approx(1.0, abs=1e-3)


class TestSweepSigma:
    def test_csv_and_figure(self, grid_file, tmp_path):
        out = tmp_path / "sweep.csv"
        rc = main(
            ["sweep-sigma", "--sigmas", "0.6", "--trials", "3",
             "--out", str(out), grid_file(UNIQUE_4X4_TEXT)]
        )
        assert rc == 0
        lines = out.read_text().splitlines()
        assert lines[0].startswith("schema_version,sigma,trials,successes,success_rate")
        first = lines[1].split(",")
        assert first[:3] == ["1", "0.59999999999999998", "3"]
        assert (tmp_path / "sweep.png").exists()

    def test_no_plot(self, grid_file, tmp_path):
        out = tmp_path / "sweep.csv"
        rc = main(
            ["sweep-sigma", "--sigmas", "0.6", "--trials", "2", "--no-plot",
             "--out", str(out), grid_file(UNIQUE_4X4_TEXT)]
        )
        assert rc == 0
        assert not (tmp_path / "sweep.png").exists()

    def test_rerun_byte_identical(self, grid_file, tmp_path):
        out = tmp_path / "sweep.csv"
        args = ["sweep-sigma", "--sigmas", "0.4,0.6", "--trials", "2", "--no-plot",
                "--out", str(out), grid_file(UNIQUE_4X4_TEXT)]
        assert main(args) == 0
        first = out.read_bytes()
        assert main(args) == 0
        assert out.read_bytes() == first


class TestShidokuSuite:
    def test_runs_all_thirteen(self, tmp_path):
        out = tmp_path / "suite.csv"
        rc = main(["shidoku-suite", "--trials", "2", "--out", str(out)])
        assert rc == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 14  # header + 13 grids
        assert lines[1].split(",")[1] == "S01"
        assert (tmp_path / "suite.png").exists()


class TestErasureSim:
    def test_csv_and_figure(self, tmp_path):
        out = tmp_path / "erasure.csv"
        rc = main(["erasure-sim", "--n", "2", "--p-erase", "0,0.5",
                   "--trials", "2", "--out", str(out)])
        assert rc == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "schema_version,n,p_erase,trials,decoded_rate,exact_rate,unique_rate"
        assert len(lines) == 3
        assert lines[1].split(",")[4] == "1"  # p=0 always decodes
        assert (tmp_path / "erasure.png").exists()


class TestGenAndTanner:
    def test_gen_default(self, capsys):
        assert main(["gen", "--n", "2"]) == 0
        g = parse_classical_grid(capsys.readouterr().out, GridDimension(2))
        assert is_valid_square(g)

    def test_gen_seeded_deterministic(self, capsys):
        assert main(["gen", "--n", "3", "--seed", "5"]) == 0
        first = capsys.readouterr().out
        assert main(["gen", "--n", "3", "--seed", "5"]) == 0
        assert capsys.readouterr().out == first
        g = parse_classical_grid(first, GridDimension(3))
        assert is_valid_square(g)

    def test_tanner_dot(self, capsys):
        assert main(["tanner", "--n", "2"]) == 0
        dot = capsys.readouterr().out
        assert sum(1 for ln in dot.splitlines() if " -- " in ln) == 48

    def test_tanner_json_latin(self, capsys):
        assert main(["tanner", "--latin", "2", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data["constraints"]) == 4


class TestErrors:
    def test_missing_file(self, tmp_path):
        assert main(["check", str(tmp_path / "absent.txt")]) == 1

    def test_bad_token(self, grid_file, capsys):
        assert main(["check", grid_file("5" + "." * 15, "bad.txt")]) == 1
        assert "error:" in capsys.readouterr().err

    def test_bad_size(self, grid_file):
        assert main(["check", grid_file("." * 10)]) == 1

    def test_bad_sigma(self, grid_file):
        assert main(["solve", "--sigma", "0", grid_file(UNIQUE_4X4_TEXT)]) == 1
