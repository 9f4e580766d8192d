import os

import pytest

from widthlab import complete_graph, cycle_graph, emit_graph6, path_graph

from conftest import run_cli


def write_graphs(tmp_path, graphs, name="in.g6"):
    path = tmp_path / name
    path.write_text("".join(emit_graph6(g) + "\n" for g in graphs))
    return str(path)


class TestGen:
    def test_single_vertex_is_at_sign(self):
        code, out, err = run_cli(["gen", "--n", "1", "--seed", "7"])
        assert (code, out) == (0, "@\n")

    def test_zero_vertices(self):
        code, out, _ = run_cli(["gen", "--n", "0", "--seed", "1"])
        assert (code, out) == (0, "?\n")

    def test_deterministic(self):
        a = run_cli(["gen", "--n", "12", "--seed", "5", "--count", "4"])
        b = run_cli(["gen", "--n", "12", "--seed", "5", "--count", "4"])
        assert a == b and a[0] == 0
        assert len(a[1].splitlines()) == 4

    def test_edges_format_parses_back(self):
        code, out, _ = run_cli(["gen", "--n", "6", "--seed", "3", "--format", "edges"])
        assert code == 0
        assert out.splitlines()[0] == "6"

    def test_env_seed_fallback(self):
        os.environ["WIDTHLAB_SEED"] = "7"
        try:
            code, out, _ = run_cli(["gen", "--n", "5"])
            explicit = run_cli(["gen", "--n", "5", "--seed", "7"])
            assert code == 0 and out == explicit[1]
        finally:
            del os.environ["WIDTHLAB_SEED"]

    def test_missing_seed_is_usage_error(self):
        os.environ.pop("WIDTHLAB_SEED", None)
        code, out, err = run_cli(["gen", "--n", "5"])
        assert code == 2
        assert out == ""


class TestWidth:
    def test_complete_graph(self, tmp_path):
        path = write_graphs(tmp_path, [complete_graph(5)])
        code, out, _ = run_cli(["width", "--measure", "rank", "--input", path])
        assert (code, out) == (0, "0 1\n")

    def test_cycle_five(self, tmp_path):
        path = write_graphs(tmp_path, [cycle_graph(5)])
        code, out, _ = run_cli(["width", "--input", path])
        assert (code, out) == (0, "0 2\n")

    def test_bool_measure_six_decimals(self, tmp_path):
        path = write_graphs(tmp_path, [complete_graph(5)])
        code, out, _ = run_cli(["width", "--measure", "bool", "--input", path])
        assert (code, out) == (0, "0 1.000000\n")

    def test_multiple_graphs_indexed(self, tmp_path):
        path = write_graphs(tmp_path, [complete_graph(4), path_graph(5), cycle_graph(5)])
        code, out, _ = run_cli(["width", "--input", path])
        assert (code, out) == (0, "0 1\n1 1\n2 2\n")

    def test_stdin_input(self, monkeypatch):
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(emit_graph6(complete_graph(5)) + "\n"))
        code, out, _ = run_cli(["width", "--input", "-"])
        assert (code, out) == (0, "0 1\n")

    def test_over_cap_graph_fails_with_exit_2(self, tmp_path):
        path = write_graphs(tmp_path, [complete_graph(5), complete_graph(6)])
        code, out, err = run_cli(["width", "--input", path, "--cap", "5"])
        assert code == 2
        assert out == "0 1\n"  # the failing graph writes no stdout line
        assert "1 error:" in err

    def test_witness_check_round_trip(self, tmp_path):
        gpath = write_graphs(tmp_path, [cycle_graph(6)])
        code, out, _ = run_cli(["width", "--input", gpath, "--witness"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "0 2"
        tree_text = "\n".join(lines[1:]) + "\n"
        tpath = tmp_path / "w.tree"
        tpath.write_text(tree_text)
        code2, out2, _ = run_cli(["check", "--input", gpath, "--tree", str(tpath)])
        assert (code2, out2) == (0, "2\n")


class TestLb:
    def test_complete_and_edgeless(self, tmp_path):
        from widthlab import empty_graph

        path = write_graphs(tmp_path, [complete_graph(6), empty_graph(6)])
        code, out, _ = run_cli(["lb", "--input", path])
        lines = out.splitlines()
        assert code == 0
        assert lines[0].startswith("0 1 ") and lines[1].startswith("1 0 ")

    def test_small_graph_error_line(self, tmp_path):
        path = write_graphs(tmp_path, [complete_graph(2)])
        code, out, err = run_cli(["lb", "--input", path])
        assert code == 2 and out == "" and "0 error:" in err

    def test_lb_below_width(self, tmp_path):
        from widthlab import sample_gnp_half

        graphs = [sample_gnp_half(9, 1000 + i) for i in range(3)]
        path = write_graphs(tmp_path, graphs)
        _, lb_out, _ = run_cli(["lb", "--input", path])
        _, w_out, _ = run_cli(["width", "--input", path])
        for lb_line, w_line in zip(lb_out.splitlines(), w_out.splitlines()):
            assert int(lb_line.split()[1]) <= int(w_line.split()[1])


class TestExp:
    def test_envelope_table(self):
        code, out, _ = run_cli(["exp", "envelope", "--n-list", "3..12"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n log2_envelope envelope"
        assert len(lines) == 11
        row10 = dict(zip(("n", "log2", "env"), lines[8].split()))
        assert row10["n"] == "10"
        assert float(row10["env"]) == pytest.approx(1.624e-16, rel=0.01)

    def test_bell_table(self):
        code, out, _ = run_cli(["exp", "bell", "--n-list", "3..10"])
        assert code == 0
        assert out.splitlines()[0] == "n log2_bell n_log2_n refined_bound margin"

    def test_lemma1_writes_byte_identical_files(self, tmp_path):
        args = [
            "exp", "lemma1", "--seed", "1", "--n-list", "9", "--trials", "5",
            "--format", "jsonl",
        ]
        p1, p2 = str(tmp_path / "a.jsonl"), str(tmp_path / "b.jsonl")
        c1, o1, _ = run_cli(args + ["--out", p1])
        c2, o2, _ = run_cli(args + ["--out", p2])
        assert c1 == c2 == 0 and o1 == o2
        with open(p1, "rb") as f1, open(p2, "rb") as f2:
            assert f1.read() == f2.read()

    def test_scaling_lb_under_rw(self, tmp_path):
        out_path = str(tmp_path / "s.csv")
        code, out, _ = run_cli(
            ["exp", "scaling", "--seed", "1", "--n-list", "8,10", "--trials", "3",
             "--format", "csv", "--out", out_path, "--jobs", "1"]
        )
        assert code == 0
        with open(out_path) as fh:
            lines = [ln for ln in fh.read().splitlines() if not ln.startswith("#")]
        header = lines[0].split(",")
        for row in lines[1:]:
            rec = dict(zip(header, row.split(",")))
            assert int(rec["lb"]) <= int(rec["rw"])
        assert len(lines) == 1 + 6

    def test_default_out_naming(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, _, _ = run_cli(
            ["exp", "lemma1", "--seed", "3", "--n-list", "6", "--trials", "2"]
        )
        assert code == 0
        assert (tmp_path / "lemma1-3.jsonl").exists()

    def test_n_list_parsing_mixed(self, tmp_path):
        out_path = str(tmp_path / "m.csv")
        code, out, _ = run_cli(
            ["exp", "lemma1", "--seed", "2", "--n-list", "6,8..9", "--trials", "1",
             "--format", "csv", "--out", out_path]
        )
        assert code == 0
        with open(out_path) as fh:
            ns = [ln.split(",")[0] for ln in fh.read().splitlines()
                  if ln and not ln.startswith("#")][1:]
        assert ns == ["6", "8", "9"]


class TestOracle:
    def test_rankdist_unreduced_fractions(self):
        code, out, _ = run_cli(["oracle", "rankdist", "--m", "2", "--n", "2"])
        assert (code, out) == (0, "0 1/16\n1 9/16\n2 6/16\n")

    def test_bell(self):
        code, out, _ = run_cli(["oracle", "bell", "--n", "5"])
        assert (code, out) == (0, "52\n")

    def test_galois(self):
        code, out, _ = run_cli(["oracle", "galois", "--r", "2"])
        assert (code, out) == (0, "5\n")

    def test_cap_violation_exits_nonzero(self):
        code, out, err = run_cli(["oracle", "rankdist", "--m", "5", "--n", "5"])
        assert code == 1 and out == "" and "error" in err


class TestDeterminismAcrossCommands:
    def test_stdout_byte_identical(self, tmp_path):
        path = write_graphs(tmp_path, [cycle_graph(6), complete_graph(5)])
        for args in (
            ["gen", "--n", "10", "--seed", "9", "--count", "3"],
            ["width", "--input", path, "--witness"],
            ["width", "--measure", "bool", "--input", path],
            ["lb", "--input", path],
            ["oracle", "rankdist", "--m", "3", "--n", "3"],
            ["exp", "envelope", "--n-list", "3..20"],
        ):
            assert run_cli(args) == run_cli(args)
