import pytest

from hornsat import parse_dimacs
from hornsat.cli import main

FIG1_TEXT = "p cnf 4 4\n1 -2 -3 0\n2 -3 -4 0\n3 -1 0\n1 0\n"

SWEEP_CONFIG = """# tiny grid
n = 64, 128
d1 = 0.1 0.2
d3 = 1.5
algo = ppur
trials = 3
seed = 21
"""


@pytest.fixture
def fig1_file(tmp_path):
    path = tmp_path / "fig1.cnf"
    path.write_text(FIG1_TEXT)
    return str(path)


class TestCritical:
    def test_prints_reference_value(self, capsys):
        assert main(["critical", "--d3", "3.0"]) == 0
        assert capsys.readouterr().out.strip() == "0.0983"

    def test_below_domain_fails(self, capsys):
        assert main(["critical", "--d3", "1.9"]) == 2


class TestPredict:
    def test_zero_units(self, capsys):
        assert main(["predict", "--n", "1000", "--d1", "0", "--d3", "5"]) == 0
        assert capsys.readouterr().out.strip() == "0"

    def test_off_critical_value(self, capsys):
        assert main(["predict", "--n", "1000000", "--d1", "0.1", "--d3", "1.8"]) == 0
        assert capsys.readouterr().out.strip() == "12"

    def test_nontermination_exit_code(self, capsys):
        code = main(["predict", "--n", "1000000", "--d1", "0.1", "--d3", "1.8",
                     "--max-iters", "3"])
        assert code == 3
        assert capsys.readouterr().out.strip() == "3"


class TestGen:
    def test_emits_valid_dimacs(self, capsys):
        assert main(["gen", "--n", "10", "--d1", "0.3", "--d3", "1.0", "--seed", "7"]) == 0
        text = capsys.readouterr().out
        f = parse_dimacs(text)
        assert f.num_vars == 10 and len(f) == 14  # 1 + 3 + 10

    def test_deterministic(self, capsys):
        argv = ["gen", "--n", "30", "--d1", "0.2", "--d3", "1.2", "--seed", "5"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first

    def test_normalize_flag_dedups(self, capsys):
        argv = ["gen", "--n", "5", "--d1", "0", "--d3", "8", "--seed", "3"]
        assert main(argv) == 0
        raw = parse_dimacs(capsys.readouterr().out)
        assert main(argv + ["--normalize"]) == 0
        normalized = parse_dimacs(capsys.readouterr().out)
        assert len(normalized) <= len(raw)
        assert len(set(normalized.clauses)) == len(normalized)

    def test_out_file(self, tmp_path):
        out = tmp_path / "f.cnf"
        assert main(["gen", "--n", "10", "--d1", "0.1", "--d3", "0.5",
                     "--seed", "2", "--out", str(out)]) == 0
        assert out.read_text().startswith("p cnf 10 ")

    def test_invalid_params(self, capsys):
        assert main(["gen", "--n", "2", "--d1", "0.1", "--d3", "1", "--seed", "0"]) == 2


class TestSolve:
    def test_fig1_sat(self, fig1_file, capsys):
        code = main(["solve", "--algo", "ppur", fig1_file])
        assert code == 10
        assert capsys.readouterr().out == "SAT\nh 2\n1\n3\n"

    def test_gp_and_pur(self, fig1_file, capsys):
        assert main(["solve", "--algo", "gp", fig1_file]) == 10
        assert main(["solve", "--algo", "gp", "--optional-step", fig1_file]) == 10
        assert main(["solve", "--algo", "pur", fig1_file]) == 10

    def test_unsat_exit_20(self, tmp_path, capsys):
        n = 6
        lines = [f"p cnf {n} {n + 1}", f"-{n} 0", "1 0"]
        lines += [f"{i + 1} -{i} 0" for i in range(1, n)]
        path = tmp_path / "chain.cnf"
        path.write_text("\n".join(lines) + "\n")
        code = main(["solve", "--algo", "ppur", str(path)])
        assert code == 20
        out = capsys.readouterr().out
        assert out == "UNSAT\nh 6\n"
        assert main(["solve", "--algo", "gp", str(path)]) == 20
        assert "h 3" in capsys.readouterr().out

    def test_stdin(self, capsys, monkeypatch):
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(FIG1_TEXT))
        assert main(["solve", "--algo", "ppur", "-"]) == 10

    def test_flag_algo_mismatch(self, fig1_file, capsys):
        assert main(["solve", "--algo", "ppur", "--optional-step", fig1_file]) == 1
        assert main(["solve", "--algo", "gp", "--convergence", fig1_file]) == 1

    def test_convergence_flag(self, fig1_file):
        assert main(["solve", "--algo", "ppur", "--convergence", fig1_file]) == 10


class TestReduce:
    def test_four_literal_clause_split(self, tmp_path, capsys):
        path = tmp_path / "long.cnf"
        path.write_text("p cnf 4 1\n1 -2 -3 -4 0\n")
        assert main(["reduce", str(path)]) == 0
        assert capsys.readouterr().out == "p cnf 5 2\n1 -2 -5 0\n5 -3 -4 0\n"

    def test_output_parses_as_3cnf_horn(self, tmp_path, capsys):
        path = tmp_path / "long.cnf"
        path.write_text("p cnf 6 2\n1 -2 -3 -4 -5 -6 0\n-1 -2 0\n")
        assert main(["reduce", str(path)]) == 0
        f = parse_dimacs(capsys.readouterr().out)
        assert f.max_clause_len() <= 3


class TestSweepAndFit:
    def test_sweep_writes_deterministic_csv(self, tmp_path):
        config = tmp_path / "grid.cfg"
        config.write_text(SWEEP_CONFIG)
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(["sweep", "--config", str(config), "--out", str(out1)]) == 0
        assert main(["sweep", "--config", str(config), "--out", str(out2)]) == 0
        data = out1.read_bytes()
        assert data == out2.read_bytes()
        assert data.startswith(b"n,d1,d3,seed,trial,algo,status,h,elapsed_ms\n")
        # 2 n-values x 2 d1-values x 3 trials = 12 rows + header
        assert data.count(b"\n") == 13

    def test_fit_reports_one_line_per_group(self, tmp_path, capsys):
        config = tmp_path / "grid.cfg"
        config.write_text(
            "n = 64 128 256 512\nd1 = 0.1\nd3 = 1.5\nalgo = ppur\ntrials = 4\nseed = 2\n"
        )
        out = tmp_path / "s.csv"
        assert main(["sweep", "--config", str(config), "--out", str(out)]) == 0
        capsys.readouterr()
        assert main(["fit", "--model", "logn", str(out)]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 1
        assert lines[0].startswith("d1=0.1 d3=1.5 slope=")

    def test_fit_powerlaw_on_predict_series(self, tmp_path, capsys):
        config = tmp_path / "grid.cfg"
        config.write_text(
            "n = 10000 100000 1000000\nd1 = 0.1\nd3 = 1.8\nalgo = predict\n"
            "trials = 1\nseed = 0\n"
        )
        out = tmp_path / "p.csv"
        assert main(["sweep", "--config", str(config), "--out", str(out)]) == 0
        capsys.readouterr()
        assert main(["fit", "--model", "powerlaw", str(out)]) == 0
        assert "slope=" in capsys.readouterr().out

    def test_config_errors(self, tmp_path, capsys):
        bad = tmp_path / "bad.cfg"
        bad.write_text("n = 64\nd1 = 0.1\n")  # missing keys
        assert main(["sweep", "--config", str(bad), "--out", str(tmp_path / "x.csv")]) == 2
        bad.write_text(SWEEP_CONFIG + "bogus = 1\n")
        assert main(["sweep", "--config", str(bad), "--out", str(tmp_path / "x.csv")]) == 2


class TestExitCodes:
    def test_usage_errors_exit_1(self, capsys):
        assert main([]) == 1
        assert main(["solve"]) == 1  # missing required --algo/file
        assert main(["frobnicate"]) == 1
        assert main(["critical", "--d3", "3.0", "--bogus"]) == 1

    def test_missing_file_exit_2(self, capsys):
        assert main(["solve", "--algo", "gp", "/nonexistent/path.cnf"]) == 2

    def test_malformed_dimacs_exit_2(self, tmp_path, capsys):
        path = tmp_path / "bad.cnf"
        path.write_text("p cnf 2 1\n1 2\n")
        assert main(["solve", "--algo", "gp", str(path)]) == 2

    def test_non_horn_exit_2(self, tmp_path, capsys):
        path = tmp_path / "nonhorn.cnf"
        path.write_text("p cnf 2 1\n1 2 0\n")
        assert main(["solve", "--algo", "gp", str(path)]) == 2
