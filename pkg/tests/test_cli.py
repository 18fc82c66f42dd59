import json

import pytest

from dtdom.cli import main
from dtdom import generate_named, to_graph6
from dtdom.graphio import dump_graph


@pytest.fixture
def c7_file(tmp_path):
    p = tmp_path / "c7.el"
    p.write_text(dump_graph(generate_named("C7"), "edgelist"))
    return str(p)


def test_compute_dtd(c7_file, capsys):
    assert main(["compute", "--kind", "dtd", "--in", c7_file]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "4"
    witness = lines[1]
    assert main(
        ["check-set", "--kind", "dtd", "--in", c7_file, "--set", witness]
    ) == 0
    assert capsys.readouterr().out.strip() == "valid"


def test_check_set_invalid(c7_file, capsys):
    rc = main(["check-set", "--kind", "dtd", "--in", c7_file, "--set", "0,1"])
    assert rc == 1
    out = capsys.readouterr().out
    assert "invalid" in out and "uncovered: 3,4,5" in out


def test_check_set_malformed(c7_file, capsys):
    assert main(["check-set", "--kind", "dtd", "--in", c7_file, "--set", "0,x"]) == 2
    assert "x" in capsys.readouterr().err
    assert main(["check-set", "--kind", "dtd", "--in", c7_file, "--set", "0,9"]) == 2


def test_generate_and_convert_round_trip(tmp_path, capsys):
    el = tmp_path / "t4.el"
    g6 = tmp_path / "t4.g6"
    back = tmp_path / "t4b.g6"
    assert main(["generate", "--family", "T(4)", "--out", str(el)]) == 0
    assert main(
        ["convert", "--in", str(el), "--format-in", "edgelist",
         "--format-out", "graph6", "--out", str(g6)]
    ) == 0
    assert main(
        ["convert", "--in", str(g6), "--format-in", "graph6",
         "--format-out", "edgelist", "--out", str(tmp_path / "t4c.el")]
    ) == 0
    assert main(
        ["convert", "--in", str(tmp_path / "t4c.el"), "--format-in", "edgelist",
         "--format-out", "graph6", "--out", str(back)]
    ) == 0
    assert g6.read_text() == back.read_text()
    assert g6.read_text().strip() == to_graph6(generate_named("T(4)"))


def test_generate_unknown_family(capsys):
    assert main(["generate", "--family", "Zork(3)"]) == 2
    assert "Zork" in capsys.readouterr().err


def test_construct_exceptional_exit_code(tmp_path, capsys):
    p6 = tmp_path / "p6.el"
    p6.write_text(dump_graph(generate_named("P6"), "edgelist"))
    assert main(["construct", "--in", str(p6)]) == 3
    assert "P(6)" in capsys.readouterr().err


def test_construct_and_greedy(tmp_path, capsys):
    f = tmp_path / "h1.el"
    f.write_text(dump_graph(generate_named("H(1)"), "edgelist"))
    assert main(["construct", "--in", str(f)]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[0] == "4" and out[2] == "proof-path"
    assert main(["construct", "--in", str(f), "--greedy"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[2] == "greedy"


def test_compute_isolated_vertex_domain_error(tmp_path, capsys):
    bad = tmp_path / "iso.el"
    bad.write_text("3 1\n0 1\n")
    assert main(["compute", "--kind", "tdom", "--in", str(bad)]) == 3
    assert "isolated" in capsys.readouterr().err
    assert main(["compute", "--kind", "dom", "--in", str(bad)]) == 0


def test_verify_subcommand(capsys):
    rc = main(["verify", "--theorem", "dtd-le-gt", "--max-n", "5",
               "--report", "json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["status"] == "pass"
    rc = main(["verify", "--theorem", "tree", "--max-n", "6"])
    assert rc == 0
    assert "status: pass" in capsys.readouterr().out


def test_verify_census7_via_cli(capsys):
    rc = main(["verify", "--theorem", "census7", "--report", "json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["counts"]["total_domination_4"] == 20
    assert payload["counts"]["clawfree_total_domination_4"] == 12
    assert payload["counts"]["clawfree_dtd_4"] == 6


def test_verify_failure_exit_code(tmp_path, capsys):
    corpus = tmp_path / "bad.g6"
    corpus.write_text(to_graph6(generate_named("C5")) + "\n")
    rc = main(["verify", "--theorem", "graph", "--corpus", str(corpus)])
    assert rc == 1


def test_enumerate_deterministic(tmp_path, capsys):
    assert main(["enumerate", "--n", "5", "--class", "trees"]) == 0
    first = capsys.readouterr().out
    assert main(["enumerate", "--n", "5", "--class", "trees"]) == 0
    assert capsys.readouterr().out == first
    assert len(first.strip().splitlines()) == 3
    out = tmp_path / "c.g6"
    assert main(["enumerate", "--n", "6", "--class", "clawfree", "--out", str(out)]) == 0
    assert len(out.read_text().strip().splitlines()) == 50
    assert out.read_text() == "".join(
        sorted(line + "\n" for line in out.read_text().strip().splitlines())
    )


def test_enumerate_cap(capsys):
    assert main(["enumerate", "--n", "9", "--class", "all"]) == 2


def test_missing_file(capsys):
    assert main(["compute", "--kind", "dtd", "--in", "/nonexistent"]) == 2
