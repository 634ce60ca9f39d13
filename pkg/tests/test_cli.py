import json

import pytest

from romandom import cli, graphs


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_gamma_r(capsys, monkeypatch, tmp_path):
    path = tmp_path / "in.g6"
    path.write_text("Bw\nBg\n", encoding="ascii")
    code, out, _ = run_cli(capsys, "compute", "gamma-r", str(path))
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["gamma_r"] for r in records] == [2, 2]


def test_compute_bondage_rejects_low_degree(capsys, tmp_path):
    path = tmp_path / "in.g6"
    path.write_text("A_\n", encoding="ascii")  # single edge
    code, _, err = run_cli(capsys, "compute", "bondage", str(path))
    assert code == 2
    assert "degree" in err


def test_classify_known_graphs(capsys, tmp_path):
    path = tmp_path / "in.g6"
    path.write_text(
        graphs.write_graph6(graphs.path_graph(6))
        + "\n"
        + graphs.write_graph6(graphs.path_graph(4))
        + "\n"
        + graphs.write_graph6(graphs.complete_bipartite(4, 4))
        + "\n",
        encoding="ascii",
    )
    code, out, _ = run_cli(capsys, "classify", str(path))
    assert code == 0
    p6, p4, k44 = (json.loads(line) for line in out.splitlines())
    assert p6["in_r_uvr"] and p6["bondage"] == 1
    assert not p4["in_r_uvr"]
    assert k44["in_r_uvr"]


def test_classify_parse_error_names_line(capsys, tmp_path):
    path = tmp_path / "in.g6"
    path.write_text("Bw\nnot graph6!!\n", encoding="ascii")
    code, _, err = run_cli(capsys, "classify", str(path))
    assert code == 2
    assert "line 2" in err


def test_generate_t_trees(capsys):
    code, out, _ = run_cli(capsys, "generate", "t-trees", "--max-n", "7")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    for line in lines:
        g6, word = line.split()
        assert set(word) <= set("ABC")
    # no order-8 member exists, so the listing is unchanged one order later
    code, out8, _ = run_cli(capsys, "generate", "t-trees", "--max-n", "8")
    assert out8.splitlines() == lines


def test_generate_free_trees(capsys):
    code, out, _ = run_cli(capsys, "generate", "free-trees", "--n", "5")
    assert code == 0
    assert len(out.splitlines()) == 3


def test_generate_requires_order_flags(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["generate", "free-trees"])
    assert err.value.code == 2


def test_verify_json_and_exit_codes(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "EQ1", "--graphs-max-n", "4"
    )
    assert code == 0
    lines = out.splitlines()
    summary = json.loads(lines[-1])
    assert summary["summary"] and summary["failed"] == 0
    assert summary["total"] == 10  # 1+1+2+6 connected graphs
    for line in lines[:-1]:
        record = json.loads(line)
        assert record["check"] == "EQ1" and record["ok"]


def test_verify_fault_injection_exit_code(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify",
        "--suite",
        "THM-DIFF-I",
        "--graphs-max-n",
        "4",
        "--trees-max-n",
        "5",
        "--inject-fault",
        "gamma-r-plus-one",
    )
    assert code == 1
    summary = json.loads(out.splitlines()[-1])
    assert summary["failed"] > 0


def test_verify_table_mode(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "EQ1", "--graphs-max-n", "3", "--table"
    )
    assert code == 0
    assert "EQ1" in out and "all passed" in out


def test_verify_rejects_unknown_suite(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["verify", "--suite", "BOGUS"])
    assert err.value.code == 2


def test_verify_limit_bounds(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "EQ1", "--graphs-max-n", "9")
    assert code == 2
    assert "graphs_max_n" in err


def test_verify_output_is_byte_identical(capsys):
    argv = ["verify", "--suite", "OBS-SABC", "--trees-max-n", "7"]
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_explore_unicyclic(capsys):
    code, out, _ = run_cli(capsys, "explore", "unicyclic", "--n", "3")
    record = json.loads(out)
    assert code == 0
    assert record["members"] == [graphs.write_graph6(graphs.cycle_graph(3))]
    code, out, _ = run_cli(capsys, "explore", "unicyclic", "--n", "4")
    assert json.loads(out)["members"] == []


def test_explore_sizes(capsys):
    code, out, _ = run_cli(capsys, "explore", "sizes", "--n", "4", "--k", "2")
    record = json.loads(out)
    assert code == 0
    assert record["exhaustive"] and record["max_size"] == 6  # K_4
    code, _, err = run_cli(capsys, "explore", "sizes", "--n", "8")
    assert code == 2


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("Bw\n"))
    code, out, _ = run_cli(capsys, "compute", "gamma")
    assert code == 0
    assert json.loads(out)["gamma"] == 1
