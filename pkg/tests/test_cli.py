import json

import pytest

from unfoldkit import cli, rootsys


def run(capsys, *argv):
    status = cli.main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def run_json(capsys, *argv):
    status, out, _ = run(capsys, "--json", *argv)
    return status, json.loads(out), out


def test_table_f4(capsys):
    status, rep, raw = run_json(capsys, "table", "F4")
    assert status == 0
    assert rep["schema"] == 1 and rep["command"] == "table"
    assert len(rep["results"]) == 16
    assert [r["label"] for r in rep["results"] if r["discrepancy"]] == ["A1+Ã1"]
    assert len(rep["discrepancies"]) == 1


def test_table_text(capsys):
    status, out, _ = run(capsys, "table", "F4")
    assert status == 0 and "A1+Ã1 !" in out and "P1,P4" in out


def test_cosets(capsys):
    status, rep, _ = run_json(capsys, "cosets", "F4", "P3", "At2")
    assert status == 0
    assert rep["results"]["count"] == 7
    assert [r["length"] for r in rep["results"]["representatives"]] == [0, 2, 4, 7, 8, 11, 14]


def test_orbit_info_zero(capsys):
    status, rep, _ = run_json(capsys, "orbit-info", "F4", "0")
    assert status == 0
    assert rep["results"]["dim"] == 0 and rep["results"]["stabilizer"] == "F4"


def test_orbit_info_tilde_a2_text(capsys):
    status, out, _ = run(capsys, "orbit-info", "F4", "At2")
    assert status == 0 and "G2" in out and "dim          30" in out


def test_unfold_dims(capsys):
    status, rep, _ = run_json(capsys, "unfold", "F4", "P1", "At2", "--dims", "9,5")
    assert status == 0
    assert len(rep["results"]) == 3
    w0 = rep["results"][-1]
    assert w0["open_orbit"] == {"dim_L": 9, "dim_V": 5, "dim_tau": 8, "implied_dim_pi": 6}
    assert len(w0["u_upper"]) == 5


def test_heis(capsys):
    status, rep, _ = run_json(capsys, "heis", "F4", "P1")
    assert status == 0
    assert rep["results"]["admissible_orderings"] == 7 and rep["results"]["general_position"]
    status, rep, _ = run_json(capsys, "heis", "F4", "P4", "--center", "1232")
    assert rep["results"]["admissible_orderings"] == 2
    status, rep, _ = run_json(capsys, "heis", "F4", "P4", "--center", "0122+2342")
    assert status == 0 and rep["results"]["general_position"]
    assert rep["results"]["named_ordering"] == "P4_Z17_ORDERING"


def test_heis_bad_center(capsys):
    assert run(capsys, "heis", "F4", "P4", "--center", "1000")[0] == 2
    assert run(capsys, "heis", "F4", "P4", "--center", "12x2")[0] == 2
    assert run(capsys, "heis", "F4", "P4")[0] == 2


def test_realize_verify(capsys):
    status, rep, _ = run_json(capsys, "realize-verify", "M1", "--pairs", "10")
    assert status == 0 and rep["results"][0]["ok"]
    status, out, _ = run(capsys, "realize-verify", "varpi3")
    assert status == 0 and "-2e_69 read as -2r e_69" in out


def test_weil_suite_small(capsys):
    status, rep, _ = run_json(capsys, "weil-suite", "--p", "3", "--n", "2")
    assert status == 0 and rep["results"]["ok"]


@pytest.mark.parametrize("argv", [
    ("orbit-info", "F4", "Z9"),
    ("orbit-info", "X9", "0"),
    ("cosets", "F4", "P7", "At2"),
    ("cosets", "F4", "Q1", "At2"),
    ("table", "E6"),
    ("realize-verify", "M9"),
    ("weil-suite", "--p", "4"),
    ("unfold", "F4", "P1", "At2", "--dims", "a,b"),
    ("bogus",),
    (),
    ("--feature", "e9", "table", "F4"),
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_e8_feature(capsys, monkeypatch):
    monkeypatch.setattr(rootsys, "_enabled_features", set())
    monkeypatch.delenv(rootsys.E8_FEATURE_ENV, raising=False)
    assert run(capsys, "orbit-info", "E8", "D4")[0] == 2
    status, out, _ = run(capsys, "--feature", "e8", "orbit-info", "E8", "D4")
    assert status == 0 and "F4" in out


def test_catalog_inconsistency(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("group=F4 label=A2 diagram=2000 dim=32 stabilizer=A2 special=true\n", encoding="utf-8")
    assert run(capsys, "--catalog", str(bad), "table", "F4")[0] == 3
    assert run(capsys, "--catalog", str(tmp_path / "missing.txt"), "table", "F4")[0] == 2


def test_catalog_override_applies(capsys, tmp_path):
    good = tmp_path / "good.txt"
    good.write_text("group=F4 label=A1 diagram=1000 dim=16 stabilizer=C3 special=false\n", encoding="utf-8")
    status, rep, _ = run_json(capsys, "--catalog", str(good), "orbit-info", "F4", "A1")
    assert status == 0 and rep["results"]["dim"] == 16
    assert run(capsys, "--catalog", str(good), "orbit-info", "F4", "At2")[0] == 2
    # the override does not leak
    assert run(capsys, "orbit-info", "F4", "At2")[0] == 0


@pytest.mark.parametrize("argv", [("table", "F4"), ("cosets", "F4", "P1", "A1"), ("orbit-info", "F4", "B2")])
def test_json_roundtrip_and_determinism(capsys, argv):
    _, rep, raw = run_json(capsys, *argv)
    assert cli.emit(rep) == raw.rstrip("\n")
    assert json.loads(cli.emit(rep)) == rep
    _, _, raw2 = run_json(capsys, *argv)
    assert raw == raw2


def test_flags_after_subcommand(capsys):
    status, out, _ = run(capsys, "cosets", "F4", "P3", "At2", "--json")
    assert status == 0 and json.loads(out)["results"]["count"] == 7
