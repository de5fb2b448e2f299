import csv
import io
import json

import pytest

from fibint import cli, verifier


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_single_id_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--filter", "S5.FOURG", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"meta", "results"}
    assert set(doc["meta"]) == {"tol", "filter", "timestamp"}
    assert doc["meta"]["tol"] is None
    assert doc["meta"]["filter"] == "S5.FOURG"
    (row,) = doc["results"]
    assert list(row) == ["id", "params", "lhs", "rhs", "abs_err", "tol", "passed", "note"]
    assert row["id"] == "S5.FOURG"
    assert row["passed"] is True
    # 17 significant digits round-trip binary64 exactly
    assert float(format(row["lhs"], ".17g")) == row["lhs"]
    raw = out[out.index('"lhs":') + 6 :].split(",")[0].strip()
    assert float(raw) == row["lhs"] and len(raw.replace("-", "").replace(".", "").split("e")[0]) >= 15


def test_verify_filter_no_match_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--filter", "NOSUCH")
    assert code == 2
    assert "matches no catalog entry" in err


def test_verify_csv_schema(capsys):
    code, out, _ = run_cli(capsys, "verify", "--filter", "S3.M6BI7TA", "--grid", "r=2..3", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["id", "params", "lhs", "rhs", "abs_err", "tol", "passed", "note"]
    assert len(rows) == 3
    assert rows[1][0] == "S3.M6BI7TA" and rows[1][1] == "r=2"
    assert rows[1][6] == "true"
    assert float(rows[1][2]) == pytest.approx(float(rows[1][3]), abs=1e-6)


def test_verify_md_summary(capsys):
    code, out, _ = run_cli(capsys, "verify", "--filter", "S5.FOURG")
    assert code == 0
    assert "1 passed, 0 failed" in out


def test_exit_code_one_on_failure(capsys, monkeypatch):
    failed = verifier.VerificationResult(
        case_id="SYNTH.FAIL",
        assignment=(),
        lhs=1.0,
        rhs=2.0,
        abs_err=1.0,
        tol=1e-7,
        passed=False,
        quad_evals=1,
    )
    report = verifier.Report(results=(failed,), n_pass=0, n_fail=1, wall_time=0.0)
    monkeypatch.setattr(cli.verifier, "run", lambda *a, **k: report)
    code, out, _ = run_cli(capsys, "verify", "--filter", "*")
    assert code == 1
    assert "FAIL" in out


def test_list_csv_has_full_catalog(capsys):
    code, out, _ = run_cli(capsys, "list", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["id", "anchor", "params", "strategy", "default_tol"]
    assert len(rows) - 1 >= 60


def test_list_json_fields(capsys):
    code, out, _ = run_cli(capsys, "list", "--filter", "S4.*", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc) >= 8
    for e in doc:
        assert list(e) == ["id", "anchor", "params", "strategy", "default_tol"]
        assert e["strategy"] == "HALF_LINE"


def test_show(capsys):
    code, out, _ = run_cli(capsys, "show", "S4.KJ2W249")
    assert code == 0
    assert "HALF_LINE" in out and "m=0..4" in out
    code, _, err = run_cli(capsys, "show", "NOSUCH")
    assert code == 2


def test_bad_arguments_exit_2(capsys):
    assert run_cli(capsys, "verify", "--grid", "r=5")[0] == 2
    assert run_cli(capsys, "verify", "--grid", "z=1..2")[0] == 2
    assert run_cli(capsys, "verify", "--grid", "r=5..1")[0] == 2
    assert run_cli(capsys, "verify", "--tol", "0.5")[0] == 2
    assert run_cli(capsys, "nonsense")[0] == 2


def test_out_file_round_trip(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "verify", "--filter", "S5.FOURG", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    doc = json.loads(path.read_text())
    assert doc["results"][0]["id"] == "S5.FOURG"


def test_results_payload_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "verify", "--filter", "S7.ID7", "--format", "json")
    _, out2, _ = run_cli(capsys, "verify", "--filter", "S7.ID7", "--format", "json")
    r1 = out1[out1.index('"results"') :]
    r2 = out2[out2.index('"results"') :]
    assert r1 == r2


def test_grid_override_applies_across_filter(capsys):
    code, out, _ = run_cli(capsys, "verify", "--filter", "S9.G8UGNY7.?E", "--grid", "r=2..4", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))[1:]
    ids = {(r[0], r[1]) for r in rows}
    assert ids == {
        ("S9.G8UGNY7.PE", "r=2"),
        ("S9.G8UGNY7.PE", "r=4"),
        ("S9.G8UGNY7.ME", "r=2"),
        ("S9.G8UGNY7.ME", "r=4"),
    }
