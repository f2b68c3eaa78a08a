"""CLI behaviors: outputs, exit codes, determinism."""

import json
from pathlib import Path

import pytest

import conftest as golden
from conftest import assert_table
from ivhfss import parse_document
from ivhfss.cli import main

DATA = Path(__file__).parent / "data"

FA = str(DATA / "FA.json")
GB = str(DATA / "GB.json")
GBX = str(DATA / "GBX.json")
HC = str(DATA / "HC.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCombine:
    def test_union_matches_worked_table(self, tmp_path, capsys):
        out = tmp_path / "H.json"
        code, _, _ = run(capsys, "union", FA, GB, "-o", str(out))
        assert code == 0
        assert_table(parse_document(out.read_text()), golden.UNION_FA_GB)

    def test_union_to_stdout(self, capsys):
        code, stdout, _ = run(capsys, "union", FA, GB)
        assert code == 0
        assert_table(parse_document(stdout), golden.UNION_FA_GB)

    def test_intersect(self, tmp_path, capsys):
        out = tmp_path / "I.json"
        code, _, _ = run(capsys, "intersect", FA, GB, "-o", str(out))
        assert code == 0
        assert_table(parse_document(out.read_text()), golden.INTER_FA_GB)

    def test_intersect_empty_overlap_exits_2(self, tmp_path, capsys):
        other = tmp_path / "other.json"
        other.write_text(
            json.dumps(
                {
                    "universe": ["h1", "h2"],
                    "parameters": ["e9"],
                    "values": {"e9": {"h1": [[0.1, 0.2]], "h2": [[0.1, 0.2]]}},
                }
            )
        )
        code, _, err = run(capsys, "intersect", FA, str(other))
        assert code == 2
        assert "parameter" in err

    def test_pairwise_mode_flag(self, capsys):
        code, stdout, _ = run(capsys, "union", FA, GB, "--mode", "pairwise")
        assert code == 0
        parsed = parse_document(stdout)
        assert set(parsed.parameters) == {"e1", "e2", "e3"}


class TestOtherCommands:
    def test_complement(self, capsys):
        code, stdout, _ = run(capsys, "complement", FA)
        assert code == 0
        assert_table(parse_document(stdout), golden.COMP_FA)

    def test_ringsum_requires_matching_parameters(self, capsys):
        code, _, err = run(capsys, "ringsum", FA, GB)
        assert code == 2
        assert "parameter" in err

    def test_elem_op(self, capsys):
        code, stdout, _ = run(capsys, "elem-op", "--kind", "o3", FA, HC)
        assert code == 0
        parsed = parse_document(stdout)
        assert set(parsed.parameters) == {"e2"}

    def test_subset_exit_codes(self, tmp_path, capsys):
        full = tmp_path / "full.json"
        full.write_text(
            json.dumps(
                {
                    "universe": ["h1", "h2"],
                    "parameters": ["e1", "e2"],
                    "values": {
                        e: {h: [[1, 1]] for h in ("h1", "h2")} for e in ("e1", "e2")
                    },
                }
            )
        )
        assert run(capsys, "subset", FA, str(full))[0] == 0
        assert run(capsys, "subset", str(full), FA)[0] == 3

    def test_family_union(self, capsys):
        code, stdout, _ = run(capsys, "family-union", FA, GB, HC)
        assert code == 0
        assert_table(parse_document(stdout), golden.FAMILY_UNION)

    def test_family_intersect(self, capsys):
        code, stdout, _ = run(capsys, "family-intersect", FA, GB, HC)
        assert code == 0
        assert_table(parse_document(stdout), golden.FAMILY_INTERSECTION)

    def test_score(self, capsys):
        code, stdout, _ = run(capsys, "score", FA)
        assert code == 0
        table = json.loads(stdout)
        assert table["e1"]["h1"] == [pytest.approx(0.3), pytest.approx(0.8)]
        assert table["e2"]["h1"] == [pytest.approx(0.45), pytest.approx(0.95)]

    def test_rank_puts_h1_first(self, capsys):
        # mean score intervals: h1 [0.375, 0.875] beats h2 [0.4333, 0.7333]
        code, stdout, _ = run(capsys, "rank", FA)
        assert code == 0
        groups = json.loads(stdout)
        assert groups[0]["objects"] == ["h1"]
        assert groups[1]["objects"] == ["h2"]
        assert groups[0]["mean_score"] == [pytest.approx(0.375), pytest.approx(0.875)]

    def test_rank_reports_ties(self, tmp_path, capsys):
        path = tmp_path / "tie.json"
        path.write_text(
            json.dumps(
                {
                    "universe": ["a", "b"],
                    "parameters": ["e1"],
                    "values": {"e1": {"a": [[0.4, 0.6]], "b": [[0.4, 0.6]]}},
                }
            )
        )
        code, stdout, _ = run(capsys, "rank", str(path))
        assert code == 0
        groups = json.loads(stdout)
        assert len(groups) == 1
        assert sorted(groups[0]["objects"]) == ["a", "b"]


class TestErrorPaths:
    def test_missing_file_exits_2(self, capsys):
        assert run(capsys, "complement", "/nonexistent.json")[0] == 2

    def test_schema_error_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(
            json.dumps(
                {
                    "universe": ["h1"],
                    "parameters": ["e1"],
                    "values": {"e1": {"h1": [[0.5, 1.2]]}},
                }
            )
        )
        assert run(capsys, "complement", str(bad))[0] == 2

    def test_usage_error_exits_1(self, capsys):
        assert run(capsys, "union", FA)[0] == 1
        assert run(capsys, "no-such-command")[0] == 1


class TestCheckLaws:
    def test_small_run_writes_report(self, tmp_path, capsys):
        report = tmp_path / "report.json"
        code, stdout, _ = run(
            capsys, "check-laws", "--trials", "20", "--report", str(report)
        )
        assert code == 0
        lines = [l for l in stdout.splitlines() if l.strip()]
        assert len(lines) == 54
        data = json.loads(report.read_text())
        assert len(data) == 54
        assert {d["law_id"] for d in data} > {"P2.12.i", "P3.11.ii", "P4.5.vi"}
        for d in data:
            assert d["status"] in ("holds", "violated")
            assert {"law_id", "status", "trials_run", "equality_used"} <= set(d)
