from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unfoldkit import heis
from unfoldkit.chevalley import structure_constants
from unfoldkit.rootsys import build_root_system, parse_root, root_str

from conftest import u_radical

R = parse_root
Z_P4 = ("0122", "1122", "1222", "1232", "1242", "1342", "2342")


def test_partners(f4):
    p1 = {root_str(a): root_str(b) for pair in heis.pair_roots(f4, u_radical(f4, 1), "2342") for a, b in (pair, pair[::-1])}
    assert p1["1120"] == "1222"
    p4 = {root_str(a): root_str(b) for pair in heis.pair_roots(f4, u_radical(f4, 4), "1232") for a, b in (pair, pair[::-1])}
    assert p4["0001"] == "1231"


def test_pairing_failure(f4):
    with pytest.raises(heis.HeisenbergError):
        heis.pair_roots(f4, u_radical(f4, 4), "2342")


def test_centers(f4):
    assert heis.center_roots(f4, u_radical(f4, 1)) == [R("2342")]
    assert {root_str(r) for r in heis.center_roots(f4, u_radical(f4, 4))} == set(Z_P4)


def test_admissible_counts(f4, table):
    assert heis.admissible_orderings(f4, u_radical(f4, 1), "2342", table)[0] == 7
    assert heis.admissible_orderings(f4, u_radical(f4, 4), "1232", table)[0] == 2


def test_three_dim_heisenberg():
    a2 = build_root_system("A2")
    t = structure_constants(a2)
    assert heis.admissible_orderings(a2, a2.positive_roots, "11", t)[0] == 1
    assert heis.general_position_center(a2, t, a2.positive_roots, {"11": 1})


def test_p1_y_slots(f4, table):
    tgt = heis.build_projection(f4, table, u_radical(f4, 1), heis.P1_ORDERING, "2342")
    want = [("1221", Fraction(-1, 2)), ("1122", -1), ("1231", Fraction(1, 2)), ("1222", 1),
            ("1232", Fraction(-1, 2)), ("1242", 1), ("1342", -1)]
    assert [(root_str(b), c) for b, c in tgt.y_slots] == want


def test_p4_z4_projection(f4, table):
    tgt = heis.build_projection(f4, table, u_radical(f4, 4), heis.P4_Z4_ORDERING, "1232")
    r1, r2, r3, r4 = map(Fraction, (2, -3, 5, 1))
    h = tgt.project([("0121", r1), ("1121", r2), ("1221", r3), ("1231", r4)])
    assert (h.x, h.y, h.z) == ((0,) * 4, (-r1, r2, r3, -r4), 0)


def test_p4_z17_projection(f4, table):
    tgt = heis.build_projection(f4, table, u_radical(f4, 4), heis.P4_Z17_ORDERING, {"0122": 1, "2342": 1})
    s = [Fraction(k) for k in (1, 4, -2, 3)]
    h = tgt.project(list(zip(("1221", "1231", "0111", "0121"), s)))
    assert h.y == (-2 * s[0], 2 * s[1], -2 * s[2], -2 * s[3]) and h.x == (0,) * 4 and h.z == 0


@pytest.mark.parametrize("k, z", list(enumerate(Z_P4)))
def test_general_position_single(f4, table, k, z):
    assert heis.general_position_center(f4, table, u_radical(f4, 4), {z: 1}) is (z == "1232")


def test_general_position_z1_z7(f4, table):
    assert heis.general_position_center(f4, table, u_radical(f4, 4), {"0122": 1, "2342": 1})


def test_ordering_must_cover_quotient(f4, table):
    with pytest.raises(heis.HeisenbergError):
        heis.build_projection(f4, table, u_radical(f4, 1), heis.P1_ORDERING[:-1], "2342")


# properties: the projection is a homomorphism onto H_{2n+1}

F4 = build_root_system("F4")
T = structure_constants(F4)
U1 = u_radical(F4, 1)
TGT1 = heis.build_projection(F4, T, U1, heis.P1_ORDERING, "2342")
coef = st.integers(-3, 3).map(Fraction)
word = st.lists(st.tuples(st.sampled_from(U1), coef), min_size=1, max_size=5)


@given(word, word)
def test_projection_is_homomorphism(w1, w2):
    assert TGT1.project(list(w1) + list(w2)) == TGT1.project(w1) * TGT1.project(w2)


@given(word)
def test_preimage_projects_back(w):
    h = TGT1.project(w)
    assert TGT1.project(TGT1.preimage(h)) == h
