"""CLI behaviour: reports, flags, exit codes, determinism."""

from __future__ import annotations

import json

import pytest

from vdarg.cli import main


@pytest.fixture()
def run(capsys):
    def invoke(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


class TestSolve:
    def test_eldercare_s1(self, run, eldercare_path):
        code, out, _ = run("solve", str(eldercare_path), "S1")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "situation: S1"
        assert lines[1] == "solutions: warn"
        assert lines[2].startswith("ordering: warn ")
        assert "≥[u7] seekTask" in lines[2]

    def test_single_action_file(self, run, tmp_path):
        path = tmp_path / "one.json"
        path.write_text(json.dumps({
            "language": {"atoms": ["p"], "actions": ["go"], "duties": ["d"]},
            "situations": {"R": ["p"]},
            "matrices": {"R": {"go": [1]}},
            "principle": {"u1": [-2]},
        }), encoding="utf-8")
        code, out, _ = run("solve", str(path), "R")
        assert code == 0
        assert "solutions: go" in out

    def test_strict_cycle_reports_no_solution_and_exits_1(self, run, tmp_path):
        path = tmp_path / "cycle.json"
        path.write_text(json.dumps({
            "language": {"atoms": ["p"], "actions": ["a", "b", "c"],
                         "duties": ["d1", "d2", "d3"]},
            "situations": {"R": []},
            "matrices": {"R": {"a": [0, 0, 0], "b": [-2, 1, 1], "c": [-1, -1, 2]}},
            "principle": {"u1": [2, -1, -1], "u2": [-1, 2, -1], "u3": [-1, -1, 2]},
        }), encoding="utf-8")
        code, out, _ = run("solve", str(path), "R")
        assert code == 1
        assert "solutions: (none)" in out
        assert "strict-preference cycle" in out

    def test_malformed_duty_row_is_a_parse_error(self, run, tmp_path, eldercare_path):
        data = json.loads(eldercare_path.read_text(encoding="utf-8"))
        data["matrices"]["S1"]["warn"] = [0, 0, 1]
        path = tmp_path / "broken.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        code, _, err = run("solve", str(path), "S1")
        assert code == 2
        assert "matrices.S1.warn" in err

    def test_unknown_situation(self, run, eldercare_path):
        code, _, err = run("solve", str(eldercare_path), "S9")
        assert code == 2
        assert "S9" in err

    def test_json_format(self, run, eldercare_path):
        code, out, _ = run("solve", str(eldercare_path), "S1", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["solutions"] == ["warn"]
        assert payload["ordering"][0]["action"] == "warn"


class TestJustify:
    def test_eldercare_s1_grounded(self, run, eldercare_path):
        code, out, _ = run("justify", str(eldercare_path), "S1", "--semantics", "grounded")
        assert code == 0
        assert "  E1: {X2, X5, X8, X9}" in out
        assert "skeptically justified actions: warn" in out
        assert out.count("\n  r") == 10 or "r10:" in out

    def test_nixon_preferred_has_two_extensions(self, run, nixon_path):
        code, out, _ = run("justify", str(nixon_path), "--semantics", "preferred")
        assert code == 0
        assert "E1: {Y1, Y3}" in out
        assert "E2: {Y2, Y4}" in out

    def test_dot_output_counts(self, run, eldercare_path):
        code, out, _ = run("justify", str(eldercare_path), "S1", "--dot")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "digraph aaf {"
        nodes = [l for l in lines if "[label=" in l]
        edges = [l for l in lines if " -> " in l]
        assert len(nodes) == 10
        assert len(edges) == 10

    def test_json_carries_the_full_pipeline_result(self, run, eldercare_path):
        code, out, _ = run("justify", str(eldercare_path), "S1", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert [r["id"] for r in payload["rules"]] == [f"r{i}" for i in range(1, 11)]
        assert payload["extensions"] == [["X2", "X5", "X8", "X9"]]
        assert payload["actions"]["warn"] == "skeptically-justified"
        assert payload["solutions"] == ["warn"]

    def test_without_situation_needs_an_epistemic_section(self, run, tmp_path):
        path = tmp_path / "none.json"
        path.write_text(json.dumps({
            "language": {"atoms": [], "actions": [], "duties": []},
        }), encoding="utf-8")
        code, _, err = run("justify", str(path))
        assert code == 2
        assert "epistemic" in err


class TestExplain:
    def test_charge_rejection(self, run, eldercare_path):
        code, out, _ = run("explain", str(eldercare_path), "S1", "charge")
        assert code == 0
        assert "verdict: rejected" in out
        assert "u7" in out and "v_S1(warn)" in out

    def test_warn_justification(self, run, eldercare_path):
        code, out, _ = run("explain", str(eldercare_path), "S1", "warn")
        assert code == 0
        assert "verdict: justified-skeptical" in out
        assert "has no attacker" in out

    def test_situation_mode(self, run, eldercare_path):
        code, out, _ = run("explain", str(eldercare_path), "S2", "--situation")
        assert code == 0
        assert "subject: fc" in out
        assert "subject: lb" in out
        assert "subject: ¬ab" in out

    def test_action_and_situation_flags_conflict(self, run, eldercare_path):
        code, _, err = run("explain", str(eldercare_path), "S1", "warn", "--situation")
        assert code == 2
        assert "either" in err


class TestEpistemic:
    def test_s2_report(self, run, eldercare_path):
        code, out, _ = run("epistemic", str(eldercare_path), "S2")
        assert code == 0
        assert "P^J: lb, mrt, r, rm, ab" in out
        assert "S^J: lb, mrt, r, rm, ab, ¬fc, ¬ni, ¬w, ¬pi, ¬e, ¬iw" in out

    def test_explicit_perceptions(self, run, eldercare_path):
        code, out, _ = run(
            "epistemic", str(eldercare_path), "--perceptions", "mrt,r,rm,fc,lb,ab"
        )
        assert code == 0
        assert "P^J: lb, mrt, r, rm, ab" in out

    def test_empty_assumptions_is_identity(self, run, tmp_path):
        path = tmp_path / "noassume.json"
        path.write_text(json.dumps({
            "language": {"atoms": ["x", "y"], "actions": [], "duties": []},
            "epistemic": {"assumptions": [], "rules": {}},
        }), encoding="utf-8")
        code, out, _ = run("epistemic", str(path), "--perceptions", "x")
        assert code == 0
        assert "P^J: x" in out
        assert "S^J: x, ¬y" in out

    def test_symmetric_conflict_exits_nonzero(self, run, standoff_path):
        code, out, _ = run("epistemic", str(standoff_path), "T")
        assert code == 1
        assert "undecided assumptions: x, ¬x" in out


class TestDeterminismAndCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            ("solve", "{eldercare}", "S1"),
            ("justify", "{eldercare}", "S1", "--semantics", "complete"),
            ("justify", "{nixon}", "--semantics", "preferred"),
            ("justify", "{eldercare}", "S1", "--dot"),
            ("explain", "{eldercare}", "S1", "charge", "--format", "json"),
            ("epistemic", "{eldercare}", "S2", "--format", "json"),
        ],
    )
    def test_byte_identical_across_runs(self, run, argv, eldercare_path, nixon_path):
        resolved = [
            a.format(eldercare=eldercare_path, nixon=nixon_path) for a in argv
        ]
        first = run(*resolved)
        second = run(*resolved)
        assert first == second
        assert first[0] == 0

    def test_byte_identical_across_processes(self, eldercare_path):
        # Separate interpreters have different hash seeds; output must not
        # depend on set or dict hash order.
        import subprocess
        import sys

        def once(extra_env_seed):
            import os
            env = dict(os.environ, PYTHONHASHSEED=extra_env_seed)
            return subprocess.run(
                [sys.executable, "-m", "vdarg.cli", "justify", str(eldercare_path),
                 "S1", "--format", "json"],
                capture_output=True, env=env, check=True,
            ).stdout

        assert once("1") == once("2")

    def test_usage_error_exits_2(self, run):
        code, _, _ = run("solve")
        assert code == 2

    def test_missing_file_exits_2(self, run):
        code, _, err = run("solve", "/nonexistent/agent.json", "S1")
        assert code == 2

    def test_oracle_check_smoke(self, run):
        code, out, _ = run("oracle-check", "--instances", "5", "--aafs", "5")
        assert code == 0
        assert "mismatches=0" in out

    def test_oracle_check_is_hidden_from_help(self, run):
        code, out, _ = run("--help")
        assert code == 0
        assert "oracle-check" not in out
