import io
import json

import pytest

from cu_lab import certificates as certs
from cu_lab.cli import main
from cu_lab.report import ReportConfig, run_report, to_json_text, to_markdown, validate_report


def cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def field(text, name):
    for line in text.splitlines():
        if line.startswith(name):
            return line.split()[1]
    raise AssertionError(f"{name} missing in {text!r}")


def test_catalog_list():
    code, out = cli("catalog", "list")
    assert code == 0
    assert [l.split()[0] for l in out.splitlines()][:7] == [
        "s1", "open12", "interval01", "product_ray", "seqcube", "uhf", "alg_product"]


def test_beta_examples():
    code, out = cli("beta", "interval01", "3/4", "1/2", "--bound", "64")
    assert code == 0 and field(out, "upper") == "3/64" and field(out, "exact") == "0"
    code, out = cli("beta", "uhf", "s:1/2", "s:1")
    assert code == 0 and field(out, "exact") == "1/2"
    code, out = cli("beta", "s1", "1", "1")
    assert code == 0 and field(out, "exact") == "0"


def test_beta_parse_error(capsys):
    code, _ = cli("beta", "interval01", "3/2", "1")
    assert code == 2
    assert "outside" in capsys.readouterr().err


def test_usage_errors():
    assert cli("nosuch")[0] == 2
    assert cli("beta", "nowhere", "1", "1")[0] == 2
    assert cli("check", "s1", "happiness")[0] == 2
    assert cli("report", "--entries", "s1", "--properties", "nonsense")[0] == 2


def test_verify_shipped_and_tampered(tmp_path):
    code, out = cli("verify", "w_omega_interval")
    assert code == 0 and out.strip().endswith("verified")
    code, _ = cli("verify", "w_cfp_seqcube")
    assert code == 0
    obj = certs.load_shipped("w_omega_interval").to_json()
    obj["elements"]["xp"] = "1/4"
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(obj))
    code, out = cli("verify", str(p))
    assert code == 1
    assert "x' <= sum y_j holds, not a refutation" in out


def test_verify_io_and_parse_errors(tmp_path):
    assert cli("verify", str(tmp_path / "missing.json"))[0] == 2
    p = tmp_path / "junk.json"
    p.write_text("[1, 2")
    assert cli("verify", str(p))[0] == 2
    p.write_text(json.dumps({"schema": "cu-lab/certificate@1"}))
    assert cli("verify", str(p))[0] == 2


def test_check_matches_expectation():
    code, out = cli("check", "s1", "omega")
    assert code == 0 and "ProvedExhaustively" in out
    code, out = cli("check", "interval01", "omega", "--cert", "w_omega_interval")
    assert code == 0 and "RefutedByCertificate" in out


def test_report_small_matrix():
    code, out = cli("report", "--entries", "s1", "--properties", "omega,beta")
    assert code == 0
    rep = json.loads(out)
    validate_report(rep)
    cells = {r["property"]: r["outcome"] for r in rep["rows"]}
    assert cells == {"omega": "ProvedExhaustively", "beta": "RefutedByCertificate"}
    assert all(r["citation"] for r in rep["rows"])


def test_report_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert cli("report", "--entries", "interval01,uhf", "--seed", "7", "--out", str(p))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_report_seed_from_environment(monkeypatch):
    monkeypatch.setenv("CU_LAB_SEED", "11")
    code, out = cli("report", "--entries", "s1", "--properties", "qq")
    assert code == 0 and json.loads(out)["config"]["seed"] == 11
    monkeypatch.setenv("CU_LAB_SEED", "eleven")
    assert cli("report", "--entries", "s1")[0] == 2


def test_report_markdown():
    code, out = cli("report", "--entries", "s1", "--properties", "omega,beta", "--format", "md")
    assert code == 0
    assert "| s1 | proved | refuted |" in out and "overall: ok" in out


def test_report_mismatch_exits_one(monkeypatch):
    import cu_lab.report as report

    real = report.expected_verdicts

    def flipped(S):
        cells = real(S)
        cells["omega"] = dict(cells["omega"], expected="Fails")
        return cells

    monkeypatch.setattr(report, "expected_verdicts", flipped)
    rep = run_report(ReportConfig(("s1",), ("omega",)))
    assert rep["ok"] is False and rep["mismatches"] == ["s1/omega"]
    assert "Mismatches" in to_markdown(rep)
    code, _ = cli("report", "--entries", "s1", "--properties", "omega")
    assert code == 1


def test_json_text_is_sorted_and_stable():
    rep = run_report(ReportConfig(("s2",), ("qq", "omega")))
    text = to_json_text(rep)
    assert text == to_json_text(json.loads(text))
    assert rep["rows"][0]["witness"] is None
