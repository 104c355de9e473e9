import csv
import io
import json
import math

import pytest

from graphentropy.cli import main
from graphentropy.entropy import star_entropy_closed
from graphentropy.enumeration import canonical_form
from graphentropy.graphs import path, star, write_graph6


def run(capsys, *argv):
    rc = main(list(argv))
    cap = capsys.readouterr()
    return rc, cap.out, cap.err


def json_lines(out):
    return [json.loads(line) for line in out.splitlines() if line]


# --- entropy ----------------------------------------------------------------


def test_entropy_family_star_json(capsys):
    rc, out, _ = run(capsys, "entropy", "--family", "star", "--n", "8", "--alpha", "2")
    assert rc == 0
    (row,) = json_lines(out)
    assert row["graph6"] == write_graph6(star(8))
    assert row["n"] == 8 and row["m"] == 7
    assert row["S"] == pytest.approx(star_entropy_closed(8), abs=1e-9)
    assert row["tr2"] == "5/14"
    assert row["H_2"] == pytest.approx(-math.log2(5 / 14), abs=1e-9)
    assert row["star_test"] is False


def test_entropy_reads_stdin_by_default(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("C~\nBW\n"))
    rc, out, _ = run(capsys, "entropy")
    assert rc == 0
    rows = json_lines(out)
    assert [r["n"] for r in rows] == [4, 3]
    assert rows[0]["S"] == pytest.approx(math.log2(3), abs=1e-9)


def test_entropy_csv_agrees_with_json(capsys, tmp_path):
    src = tmp_path / "graphs.g6"
    src.write_text("C~\nA?\nBW\n")  # includes an edgeless graph (null entropies)
    rc_j, out_j, _ = run(capsys, "entropy", "--input", str(src), "--alpha", "2")
    rc_c, out_c, _ = run(capsys, "entropy", "--input", str(src), "--alpha", "2", "--format", "csv")
    assert rc_j == rc_c == 0
    jrows = json_lines(out_j)
    crows = list(csv.DictReader(io.StringIO(out_c)))
    assert len(jrows) == len(crows) == 3
    for jr, cr in zip(jrows, crows):
        assert cr["graph6"] == jr["graph6"]
        assert int(cr["n"]) == jr["n"] and int(cr["m"]) == jr["m"]
        for key in ("S", "H_2"):
            if jr[key] is None:
                assert cr[key] == ""
            else:
                assert float(cr[key]) == pytest.approx(jr[key], abs=1e-12)
        assert (cr["star_test"] == "True") == (jr["star_test"] is True) or jr["star_test"] is None


def test_entropy_text_format(capsys):
    rc, out, _ = run(capsys, "entropy", "--family", "path", "--n", "4", "--format", "text")
    assert rc == 0
    assert "graph6=" in out and "S=" in out


def test_entropy_bipartite_family(capsys):
    rc, out, _ = run(capsys, "entropy", "--family", "bipartite", "--n", "2,3")
    assert rc == 0
    (row,) = json_lines(out)
    assert row["n"] == 5 and row["m"] == 6


def test_entropy_bipartite_bad_spec(capsys):
    rc, _, err = run(capsys, "entropy", "--family", "bipartite", "--n", "5")
    assert rc == 1
    assert "error:" in err


# --- table1 ------------------------------------------------------------------


def test_table1_range_json(capsys):
    rc, out, _ = run(capsys, "table1", "--n", "2..5")
    assert rc == 0
    rows = json_lines(out)
    assert [(r["n"], r["failures"], r["total"]) for r in rows] == [
        (2, 0, 1), (3, 1, 2), (4, 2, 6), (5, 4, 21),
    ]


def test_table1_emit_failing(capsys, tmp_path):
    dest = tmp_path / "failing.g6"
    rc, _, _ = run(capsys, "table1", "--n", "3", "--emit-failing", str(dest))
    assert rc == 0
    assert dest.read_text() == write_graph6(canonical_form(path(3)).graph()) + "\n"


def test_table1_emit_failing_empty_when_none(capsys, tmp_path):
    dest = tmp_path / "failing.g6"
    rc, _, _ = run(capsys, "table1", "--n", "2", "--emit-failing", str(dest))
    assert rc == 0
    assert dest.exists() and dest.read_text() == ""


def test_table1_csv_and_text(capsys):
    rc, out, _ = run(capsys, "table1", "--n", "4", "--format", "csv")
    assert rc == 0
    assert out.splitlines() == ["n,failures,total", "4,2,6"]
    rc, out, _ = run(capsys, "table1", "--n", "4", "--format", "text")
    assert rc == 0
    assert out.splitlines()[1].split() == ["4", "2", "6"]


def test_table1_bad_range(capsys):
    rc, _, err = run(capsys, "table1", "--n", "8..2")
    assert rc == 1 and "error:" in err


# --- verify -------------------------------------------------------------------


def test_verify_star_min_holds_exit_zero(capsys):
    rc, out, err = run(capsys, "verify", "star-min-S", "--n", "5")
    assert rc == 0
    body = json.loads(out)
    assert body["claim"] == "star-min-S" and body["holds"] is True
    assert "runtime" not in body  # timings live on stderr so stdout is stable
    assert "holds=True" in err


def test_verify_counterexamples_exit_three(capsys):
    rc, out, _ = run(capsys, "verify", "edge-add-decrease", "--n", "5")
    assert rc == 3
    body = json.loads(out)
    assert body["holds"] is False
    assert len(body["witnesses"]) == 3
    assert body["stats"]["k2n2_witness_found"] is True


def test_verify_coentropy_wrapped(capsys):
    rc, out, _ = run(capsys, "verify", "coentropy", "--n", "4")
    assert rc == 0
    body = json.loads(out)
    assert body["holds"] is True
    assert body["stats"]["group_count"] == len(body["stats"]["groups"])


def test_verify_param_compare(capsys):
    rc, out, _ = run(capsys, "verify", "param-compare", "--n", "4", "--param", "matching")
    assert rc == 0
    stats = json.loads(out)["stats"]
    assert isinstance(stats["drop_count"], int) and isinstance(stats["rise_count"], int)


def test_verify_tree_extremes_h2(capsys):
    rc, out, _ = run(capsys, "verify", "tree-extremes", "--n", "7", "--entropy", "H2")
    assert rc == 0
    assert json.loads(out)["stats"]["exact"] is True


def test_verify_renyi_requires_alpha(capsys):
    rc, _, err = run(capsys, "verify", "renyi-star-min", "--n", "5")
    assert rc == 1 and "alpha" in err


def test_verify_text_format(capsys):
    rc, out, _ = run(capsys, "verify", "renyi-max", "--n", "4", "--alpha", "2", "--format", "text")
    assert rc == 0
    assert out.startswith("claim: renyi-max")
    assert "holds: True" in out


def test_verify_stdout_independent_of_threads(capsys):
    rc1, out1, _ = run(capsys, "verify", "star-min-S", "--n", "6", "--threads", "1")
    rc2, out2, _ = run(capsys, "verify", "star-min-S", "--n", "6", "--threads", "2")
    assert (rc1, out1) == (rc2, out2)


def test_table1_stdout_independent_of_threads(capsys):
    rc1, out1, _ = run(capsys, "table1", "--n", "6", "--threads", "1")
    rc2, out2, _ = run(capsys, "table1", "--n", "6", "--threads", "3")
    assert (rc1, out1) == (rc2, out2)


# --- augment ---------------------------------------------------------------------


def test_augment_reaches_target(capsys):
    # the diamond plus its one absent edge is K4, whose entropy is log2(3)
    rc, out, _ = run(capsys, "augment", "--input", "Cz", "--k", "1", "--x", repr(math.log2(3)))
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "YES 0-3"
    assert lines[1] == "result graph6: C~"


def test_augment_no_solution(capsys):
    rc, out, _ = run(capsys, "augment", "--input", "C~", "--k", "0", "--x", "2.0")
    assert rc == 0
    assert out.strip() == "NO"


def test_augment_zero_edges_needed_and_clamp(capsys):
    rc, out, err = run(capsys, "augment", "--input", "C~", "--k", "3", "--x", "1.5")
    assert rc == 0
    assert "clamped" in err
    assert out.splitlines()[0] == "YES (no edges needed)"


def test_augment_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("Cz\n"))
    rc, out, _ = run(capsys, "augment", "--input", "-", "--k", "1", "--x", repr(math.log2(3)))
    assert rc == 0
    assert out.splitlines()[0] == "YES 0-3"


# --- failure paths ----------------------------------------------------------------


def test_bad_graph6_input_exit_one(capsys, tmp_path):
    src = tmp_path / "bad.g6"
    src.write_text("A_\n!!!\n")
    rc, _, err = run(capsys, "entropy", "--input", str(src))
    assert rc == 1 and "error:" in err


def test_missing_input_file_exit_one(capsys):
    rc, _, err = run(capsys, "entropy", "--input", "/nonexistent/graphs.g6")
    assert rc == 1 and "error:" in err


def test_usage_error_exit_one_not_two(capsys):
    rc, _, err = run(capsys, "verify", "no-such-claim", "--n", "5")
    assert rc == 1
    assert "error:" in err


def test_help_exits_zero(capsys):
    rc, out, _ = run(capsys, "--help")
    assert rc == 0
    assert "entropy" in out and "verify" in out
