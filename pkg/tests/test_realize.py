import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from unfoldkit import heis, realize
from unfoldkit.chevalley import structure_constants
from unfoldkit.rootsys import build_root_system

VARPI_ROOTS = ("0100", "0110", "0111", "0120", "0121", "0122")
J14 = realize.symplectic_form(14)


def test_m1_image_of_alpha2():
    r = sp.Rational(5, 3)
    m = realize.levi_matrix(1, "0100", r)
    assert m.shape == (6, 6)
    assert m[2, 3] == r
    assert m - sp.eye(6) == r * realize.E(6, 3, 4)


def test_m1_torus():
    t1, t2, t3, t4 = sp.symbols("t1:5", nonzero=True)
    h = realize.levi_realization("M1").torus((t1, t2, t3, t4))
    want = sp.diag(t4, t3 / t4, t2 / t3, t1 * t3 / t2, t1 * t4 / t3, t1 / t4)
    assert sp.simplify(h - want) == sp.zeros(6, 6)


def test_so7_alpha3():
    r = sp.Rational(3, 2)
    m = realize.levi_matrix(4, "0010", r, target="SO7")
    assert m == sp.eye(7) + r * realize.E(7, 3, 4) - r * realize.E(7, 4, 5) - r ** 2 / 2 * realize.E(7, 3, 5)


@pytest.mark.parametrize("name", ["M1", "M2", "M3", "M4/SO8r", "M4/SO7"])
def test_realization_passes(name):
    rep = realize.verify_realization(realize.levi_realization(name), pairs=20)
    assert rep.ok, [(i.check, i.subject) for i in rep.failures()[:5]]


def test_literal_so8_labels_fail_but_printed_images_are_sound():
    rep = realize.verify_realization(realize.levi_realization("M4/SO8"), pairs=10)
    assert not rep.ok
    assert all(i.ok for i in rep.items if i.check in ("form", "printed=exp", "additivity"))
    assert any(i.check == "root-images" and not i.ok for i in rep.items)


def test_unknown_realization():
    with pytest.raises(realize.RealizationError):
        realize.levi_realization("M9")


def test_varpi3_0110_image():
    r = sp.Rational(2, 7)
    m = realize.varpi3("0110", r)
    # printed: I - r e'13 - r^2 e''18 - 2r e''38 + 2r e''49, with e'13 read with sign +
    assert m[0, 2] == r and m[0, 7] == -r ** 2
    assert m[2, 7] == -2 * r and m[3, 8] == 2 * r


@pytest.mark.parametrize("root", VARPI_ROOTS)
def test_varpi3_read_images_symplectic(root):
    assert realize.similitude(realize.varpi3(root, sp.Rational(-4, 3)), J14) == 1


def test_varpi3_adjudication():
    adj = {a.root: a for a in realize.adjudicate_varpi3()}
    assert set(adj) == set(VARPI_ROOTS)
    assert all(a.ok for a in adj.values())
    assert not adj["0100"].literal_additive  # the -2e69 entry
    assert adj["0122"].literal_form and adj["0122"].literal_additive


def test_varpi3_h_block():
    v = realize.varpi3_derived(heis.P1_ORDERING_VARPI)
    m = v.element([("0010", 3), ("0011", sp.Rational(5, 2))])
    assert m[:7, :7] == realize.varpi3_h_block(3, 5)
    assert m[7:, :7].is_zero_matrix and m[:7, 7:].is_zero_matrix


def test_blocks():
    assert all(realize.check_gl2_blocks(samples=3))
    assert all(realize.check_sp4_middle_block(samples=3))
    assert all(realize.check_n1_blocks().values())
    assert all(r["shape"] for r in realize.check_gl3_blocks(samples=3))


def test_intertwining():
    f4 = build_root_system("F4")
    t = structure_constants(f4)
    u = [r for r in f4.positive_roots if r[0] > 0]
    tgt = heis.build_projection(f4, t, u, heis.P1_ORDERING_ALT, "2342")
    assert realize.intertwining_check(tgt, [("0100", 3)], [("1000", 2)])
    assert realize.intertwining_check(tgt, [("0122", 3)], [("1220", 2)])
    assert realize.intertwining_check(tgt, [], [("1100", 5)])


rational = st.fractions(min_value=-5, max_value=5, max_denominator=4).map(lambda q: sp.Rational(q.numerator, q.denominator))


@settings(max_examples=15)
@given(st.sampled_from(VARPI_ROOTS), rational, rational)
def test_varpi3_additive(root, r, s):
    assert realize.varpi3(root, r) * realize.varpi3(root, s) == realize.varpi3(root, r + s)


@settings(max_examples=15)
@given(st.sampled_from(VARPI_ROOTS), rational)
def test_varpi3_printed_equals_derived(root, r):
    assert realize.varpi3(root, r) == realize.varpi3(root, r, source="derived")
