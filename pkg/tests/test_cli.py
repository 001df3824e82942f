"""End-to-end command-line behavior and exit codes."""

from __future__ import annotations

import pytest

from genturan.cli import main
from genturan.graph6 import decode_graph6
from genturan.graphs import (are_isomorphic, complete, complete_bipartite,
                             join, turan)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_mantel(capsys):
    code, out, _ = run_cli(capsys, "count", "--host", "T(5,2)", "--pattern", "K2")
    assert code == 0 and out.strip() == "6"


def test_free_true_and_false(capsys):
    code, out, _ = run_cli(capsys, "free", "--host", "join(K1,T(8,2))",
                           "--forbid", "2*C5")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run_cli(capsys, "free", "--host", "K4", "--forbid", "K3")
    assert code == 1 and out.strip() == "false"


def test_construct_emits_graph6(capsys):
    code, out, _ = run_cli(capsys, "construct", "thm35",
                           "--n", "12", "--t", "3", "--k", "2")
    assert code == 0
    g = decode_graph6(out.strip())
    assert are_isomorphic(g, join(complete(1), turan(11, 2)))


def test_construct_fstar_defaults_center(capsys):
    code, out, _ = run_cli(capsys, "construct", "fstar", "--f", "K3", "--k", "2")
    assert code == 0
    g = decode_graph6(out.strip())
    assert g.n == 9 and g.edge_count() == 12


def test_construct_prop61_host(capsys):
    code, out, _ = run_cli(capsys, "construct", "prop61", "--n", "8")
    assert code == 0
    g = decode_graph6(out.strip())
    assert are_isomorphic(g, complete_bipartite(4, 4))


def test_construct_missing_flag_usage_error(capsys):
    code, _, err = run_cli(capsys, "construct", "thm62", "--n", "9")
    assert code == 2 and "needs --k" in err


def test_pack_and_partition(capsys):
    code, out, _ = run_cli(capsys, "pack", "--host", "2*K3", "--pattern", "K3")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "2"
    code, out, _ = run_cli(capsys, "partition", "--host", "join(K1,T(6,2))",
                           "--pattern", "K3")
    assert code == 0
    assert out.startswith("L:")
    assert "packing: 1" in out


def test_search_copies(capsys):
    code, out, _ = run_cli(capsys, "search", "copies", "--n", "5",
                           "--forbid", "K3", "--pattern", "2*K2")
    assert code == 0 and "value=6" in out


def test_search_sharded_matches(capsys):
    code1, out1, _ = run_cli(capsys, "search", "edges", "--n", "6", "--forbid", "K3")
    code2, out2, _ = run_cli(capsys, "search", "edges", "--n", "6", "--forbid", "K3",
                             "--shards", "4")
    assert code1 == code2 == 0
    tail1 = out1.partition("| ")[2]
    tail2 = out2.partition("| ")[2]
    assert tail1 == tail2 and "value=9" in tail1


def test_enumerate_counts(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--n", "5", "--count-only")
    assert code == 0 and out.strip() == "34"
    code, out, _ = run_cli(capsys, "enumerate", "--n", "4", "--canonical")
    assert code == 0
    assert len(out.strip().split("\n")) == 11


def test_verify_check_pass_exit_zero(capsys, tmp_path):
    csv_path = tmp_path / "report.csv"
    code, out, _ = run_cli(capsys, "verify", "prop6.1", "--n-range", "4..6",
                           "--csv", str(csv_path))
    assert code == 0
    assert "[PASS] prop6.1" in out
    assert csv_path.read_text().startswith("check_id,n,params")


def test_verify_unknown_check_usage_error(capsys):
    code, _, err = run_cli(capsys, "verify", "thm9.9")
    assert code == 2 and "unknown check" in err


def test_verify_hypothesis_violation_usage_error(capsys):
    code, _, err = run_cli(capsys, "verify", "thm2.4",
                           "--param", "f=K3", "--n-range", "6..6")
    assert code == 2


def test_bad_spec_usage_error(capsys):
    code, _, err = run_cli(capsys, "count", "--host", "Q9", "--pattern", "K2")
    assert code == 2 and "error:" in err


def test_bad_range_usage_error(capsys):
    code, _, err = run_cli(capsys, "verify", "prop6.1", "--n-range", "x..y")
    assert code == 2


def test_graph6_host_accepted(capsys):
    code, out, _ = run_cli(capsys, "count", "--host", "Bw", "--pattern", "K3")
    assert code == 0 and out.strip() == "1"


def test_stdin_host(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("Bw\n"))
    code, out, _ = run_cli(capsys, "count", "--host", "-", "--pattern", "K2")
    assert code == 0 and out.strip() == "3"


def test_missing_subcommand_usage(capsys):
    assert main([]) == 2


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "verify.cfg"
    cfg.write_text("# settings\nmax-explored=3\n")
    code, out, _ = run_cli(capsys, "verify", "erdos", "--n-range", "6..6",
                           "--config", str(cfg))
    assert code == 0
    assert "inconclusive" in out
