import json

import pytest

from unfoldkit import cli, verify


@pytest.fixture(scope="module")
def small():
    return verify.run_checks(include_slow=False, only=[1, 6])


def test_subset_runs_only_requested(small):
    assert small.checks and {c.criterion for c in small.checks} == {1, 6}
    assert small.ok and small.criterion_ok(1) and not small.criterion_ok(2)


def test_known_discrepancies():
    ds = verify.known_discrepancies()
    assert [d.paper_value for d in ds] == ["1", "(31^5)", "dim U_O = 48", "-2 e69"]
    assert [d.computed_value for d in ds] == ["3", "(31^4)", "dim U_O = 24, dim O = 48", "-2r e69"]


def test_report_serializes(small):
    d = small.as_dict()
    assert json.loads(json.dumps(d)) == d
    assert d["failed"] == 0 and len(d["discrepancies"]) == 4


def test_exception_counts_as_failure(monkeypatch):
    def boom():
        raise RuntimeError("broken")

    monkeypatch.setattr(verify, "_REGISTRY", [("boom", 1, None, boom)])
    rep = verify.run_checks()
    assert not rep.ok and "broken" in rep.checks[0].detail


def test_cli_verify_exit_codes(monkeypatch, capsys, small):
    monkeypatch.setattr(verify, "run_checks", lambda include_slow=True, only=None: small)
    assert cli.main(["--json", "verify"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["results"]["failed"] == 0 and len(rep["discrepancies"]) == 4
    bad = verify.VerifyReport([verify.Check("x", 1, False, "no")], small.discrepancies)
    monkeypatch.setattr(verify, "run_checks", lambda include_slow=True, only=None: bad)
    assert cli.main(["verify"]) == 1
    assert "FAIL  x" in capsys.readouterr().out
