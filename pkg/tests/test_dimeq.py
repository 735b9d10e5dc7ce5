import pytest

from unfoldkit import dimeq


def test_dim_tau_examples():
    assert dimeq.dim_tau("F4", "Ã2", 1) == 8
    assert dimeq.dim_tau("F4", "A1+Ã1", 2) is None
    assert dimeq.dim_tau_raw("F4", "A1+Ã1", 2) == -2
    assert dimeq.dim_tau("E6", "A1", 1) == 15


def test_reductive_budgets():
    assert [dimeq.reductive_budget("F4", i) for i in (1, 2, 3, 4)] == [13, 8, 8, 13]


def test_reductive_solutions():
    assert [str(s) for s in dimeq.reductive_solutions("F4", 1)] == ["[A1,(2^21^2)]"]
    assert [str(s) for s in dimeq.reductive_solutions("F4", 2)] == ["[A1,(1^2|1^3)]"]


def test_tilde_a1_branch_eliminated():
    hit = [(res, taus) for o, res, taus in dimeq.reductive_candidates("F4", 1) if o.label == "Ã1"]
    assert hit == [(2, [])]


# hardcoded oracle: the printed table, row by row (P1/P4, P2/P3)
PRINTED_VALUES = {
    "0": (13, 8), "A1": (5, 0), "Ã1": (5, 0), "A1+Ã1": (1, None), "A2": (5, 0), "Ã2": (8, 3),
    "A2+Ã1": (4, None), "B2": (7, 2), "Ã2+A1": (5, 0), "C3(a1)": (6, 1), "F4(a3)": (5, 0),
    "B3": (8, 3), "C3": (8, 3), "F4(a2)": (7, 2), "F4(a1)": (8, 3), "F4": (9, 4),
}


@pytest.fixture(scope="module")
def rows():
    return dimeq.generate_table("F4")


def test_table_rows(rows):
    assert [r.label for r in rows] == list(PRINTED_VALUES)
    for r in rows:
        if r.label != "A1+Ã1":
            assert (r.dim_tau_P14, r.dim_tau_P23) == PRINTED_VALUES[r.label], r.label


def test_table_flags_exactly_one_row(rows):
    flagged = [r for r in rows if r.discrepancy_note]
    assert [r.label for r in flagged] == ["A1+Ã1"]
    assert flagged[0].dim_tau_P14 == 3


def test_table_rows_tilde_a2_and_f4(rows):
    by = {r.label: r for r in rows}
    t = by["Ã2"]
    assert t.stabilizer_type == "G2"
    assert t.orbit_lists["C3"] == ["(42)"] and t.orbit_lists["B3"] == ["(51^2)"]
    assert t.orbit_lists["A2+A1"] == ["(3|1^2)", "(21|2)"]
    f = by["F4"]
    assert [f.orbit_lists[k] for k in ("C3", "B3", "A2+A1", "A1+A2")] == [["(6)"], ["(7)"], ["(3|2)"], ["(2|3)"]]


def test_bold_flags(rows):
    by = {r.label: r for r in rows}
    assert by["B2"].orbit_lists["C3"] == ["**(41^2)**", "(3^2)"]
    assert by["A2+Ã1"].orbit_lists["B3"] == ["**(2^21^3)**"]


def test_render_table(rows):
    text = dimeq.render_table(rows)
    assert len(text.splitlines()) == 18
    assert "A1+Ã1 !" in text


def test_dual_integral_scan():
    assert dimeq.dual_integral_scan("F4") == {"A1": 5, "Ã1": 2, "Ã2": 5}


def test_e6_a1_analysis():
    d = dimeq.e6_a1_analysis()
    assert d[1]["orbits"] == ["(3^31)"]
    assert d[2]["orbits"] == []


def test_row_serializes(rows):
    d = rows[0].as_dict()
    assert d["label"] == "0" and d["P1,P4"] == 13
