"""Tests for the command line front end: parsing, dispatch, exit codes."""

import json
import subprocess
import sys

import extcrystal.cli as cli

DEMO = "(3,-4),(1,-2),(3,-2),2*(2,-1),(2,1),(1,2),(2,3),2*(3,4),(2,5),(2,7)"

GRAPH_DOT = """digraph extended_crystal {
  0 [label="1"];
  1 [label="0:[1]"];
  2 [label="1:[1]"];
  3 [label="0:2*[1]"];
  4 [label="1:[1];0:[1]"];
  5 [label="1:2*[1]"];
  0 -> 1 [label="(1,0)"];
  0 -> 2 [label="(1,1)"];
  1 -> 3 [label="(1,0)"];
  1 -> 4 [label="(1,1)"];
  2 -> 0 [label="(1,0)"];
  2 -> 5 [label="(1,1)"];
  5 -> 2 [label="(1,0)"];
}"""


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.rstrip("\n"), captured.err


def test_apply_lowering_on_highest(capsys):
    code, out, _ = run_cli(capsys, "apply", "F", "", "1", "0", "--n", "1")
    assert (code, out) == (0, "0:[1]")


def test_apply_raising_is_total(capsys):
    code, out, _ = run_cli(capsys, "apply", "E", "", "1", "5", "--n", "1")
    assert (code, out) == (0, "6:[1]")


def test_apply_segment_to_node(capsys):
    code, out, _ = run_cli(capsys, "apply", "gamma", "0:[1,3]", "--n", "3")
    assert (code, out) == (0, "(3,2)")


def test_apply_node_to_segment(capsys):
    code, out, _ = run_cli(capsys, "apply", "gammainv", "(3,2)", "--n", "3")
    assert (code, out) == (0, "0:[1,3]")


def test_apply_round_trip_through_both_models(capsys):
    text = "1:[1,2];0:[2],[1]"
    code, out, _ = run_cli(capsys, "apply", "gamma", text, "--n", "3")
    assert code == 0
    code, back, _ = run_cli(capsys, "apply", "gammainv", out, "--n", "3")
    assert (code, back) == (0, text)


def test_apply_star_operators(capsys):
    # the dual lowering at slot 0 mirrors the plain raising at slot -1,
    # which feeds slot 0 on the highest element
    code, out, _ = run_cli(capsys, "apply", "Fstar", "", "1", "0", "--n", "2")
    assert (code, out) == (0, "0:[1]")
    code, out, _ = run_cli(capsys, "apply", "star", "[1,2]", "--n", "2")
    assert (code, out) == (0, "[2],[1]")


def test_apply_shift_and_starflip(capsys):
    code, out, _ = run_cli(capsys, "apply", "shift", "0:[1]", "2", "--n", "1")
    assert (code, out) == (0, "2:[1]")
    code, out, _ = run_cli(capsys, "apply", "starflip", "0:[1];1:[1,2]", "--n", "2")
    assert (code, out) == (0, "0:[1];-1:[2],[1]")


def test_apply_node_model_operator(capsys):
    code, out, _ = run_cli(capsys, "apply", "Fhl", DEMO, "1", "0", "--n", "3")
    assert code == 0
    assert out == DEMO.replace("2*(3,4)", "(3,4)")


def test_apply_json_format(capsys):
    code, out, _ = run_cli(capsys, "apply", "F", "", "1", "0", "--n", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"result": "0:[1]"}


def test_apply_parse_error_exits_2(capsys):
    code, _out, err = run_cli(capsys, "apply", "F", "0:[zz]", "1", "0", "--n", "1")
    assert code == 2
    assert "position" in err


def test_apply_wrong_arity_exits_2(capsys):
    code, _out, err = run_cli(capsys, "apply", "F", "", "1", "--n", "1")
    assert code == 2
    assert "argument" in err


def test_apply_missing_rank_exits_2(capsys):
    code, _out, _err = run_cli(capsys, "apply", "F", "", "1", "0")
    assert code == 2


def test_apply_unknown_operator_exits_2(capsys):
    code, _out, _err = run_cli(capsys, "apply", "Q", "", "1", "0", "--n", "1")
    assert code == 2


def test_bad_window_exits_2(capsys):
    code, _out, _err = run_cli(capsys, "verify", "inverse-pairs", "--n", "1", "--window", "2..-2")
    assert code == 2


def test_negative_window_is_accepted(capsys):
    code, out, _ = run_cli(capsys, "verify", "inverse-pairs", "--n", "1", "--window", "-1..0", "--ht", "2")
    assert code == 0
    assert "PASS" in out


def test_help_exits_0(capsys):
    code, out, _ = run_cli(capsys, "--help")
    assert code == 0
    assert "apply" in out


def test_no_arguments_exits_2(capsys):
    code, _out, _err = run_cli(capsys)
    assert code == 2


def test_graph_dot_frozen(capsys):
    code, out, _ = run_cli(capsys, "graph", "", "--n", "1", "--window", "0..1", "--ht", "2")
    assert code == 0
    assert out == GRAPH_DOT


def test_graph_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "graph", "", "--n", "2", "--window", "-1..1", "--ht", "3")
    _, second, _ = run_cli(capsys, "graph", "", "--n", "2", "--window", "-1..1", "--ht", "3")
    assert first == second


def test_graph_json_structure(capsys):
    code, out, _ = run_cli(capsys, "graph", "", "--n", "1", "--window", "0..1", "--ht", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["nodes"]) == 3
    assert {(e["src"], e["dst"], e["i"], e["k"]) for e in doc["edges"]} == {
        (0, 1, 1, 0),
        (0, 2, 1, 1),
        (2, 0, 1, 0),
    }


def test_graph_text_header(capsys):
    code, out, _ = run_cli(capsys, "graph", "", "--n", "1", "--window", "0..1", "--ht", "1", "--format", "text")
    assert code == 0
    assert out.splitlines()[0] == "nodes 3 edges 3"


def test_graph_out_file_matches_stdout(tmp_path, capsys):
    target = tmp_path / "graph.dot"
    code, _out, _ = run_cli(capsys, "graph", "", "--n", "1", "--window", "0..1", "--ht", "2", "--out", str(target))
    assert code == 0
    assert target.read_text().rstrip("\n") == GRAPH_DOT


def test_graph_unwritable_path_exits_3(capsys):
    code, _out, err = run_cli(capsys, "graph", "", "--n", "1", "--window", "0..1", "--ht", "1",
                              "--out", "/nonexistent-dir/x.dot")
    assert code == 3
    assert "error" in err


def test_graph_bad_seed_exits_2(capsys):
    code, _out, _err = run_cli(capsys, "graph", "0:[5]", "--n", "1", "--window", "0..1", "--ht", "2")
    assert code == 2


def test_verify_pass_reports_size(capsys):
    code, out, _ = run_cli(capsys, "verify", "inverse-pairs", "--n", "2", "--window", "-1..1", "--ht", "3")
    assert code == 0
    assert out.startswith("inverse-pairs: PASS (")


def test_verify_unknown_suite_exits_2(capsys):
    code, _out, _err = run_cli(capsys, "verify", "nosuch", "--n", "1")
    assert code == 2


def test_verify_failure_exits_1(monkeypatch, capsys):
    monkeypatch.setattr(cli, "run_suite", lambda name, cfg: ["prop: n=1 i=1 k=0 elem='1'"])
    code, out, _ = run_cli(capsys, "verify", "inverse-pairs", "--n", "1")
    assert code == 1
    assert "FAIL" in out
    assert "counterexample" in out


def test_verify_jobs_flag_keeps_output_stable(capsys):
    args = ("verify", "cr-commutation", "--n", "2", "--window", "-1..1", "--ht", "3")
    _, serial, _ = run_cli(capsys, *args, "--jobs", "1")
    _, parallel, _ = run_cli(capsys, *args, "--jobs", "3")
    assert serial == parallel


def test_verify_jobs_env_fallback(monkeypatch, capsys):
    monkeypatch.setenv("EXTCRYSTAL_JOBS", "2")
    code, out, _ = run_cli(capsys, "verify", "inverse-pairs", "--n", "1", "--ht", "2")
    assert code == 0
    assert "PASS" in out


def test_demo_replay(capsys):
    code, out, _ = run_cli(capsys, "demo-n3")
    assert code == 0
    assert "++ . . . + ." in out
    assert ". - ++ . . ." in out
    assert out.count("check: PASS") == 2
    assert out.rstrip().endswith("overall: PASS")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "extcrystal", "apply", "F", "", "1", "0", "--n", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0:[1]"
