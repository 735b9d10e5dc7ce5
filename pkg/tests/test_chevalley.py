from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unfoldkit import chevalley
from unfoldkit.chevalley import collect, commutator, inverse_word, weyl_conjugate
from unfoldkit.rootsys import build_root_system, parse_root

from conftest import u_radical

# printed F4 constants, hardcoded here as the oracle
PRINTED = [
    ("1000", "1342", -1), ("1100", "1242", 1), ("1110", "1232", -2), ("1120", "1222", 1),
    ("1111", "1231", 2), ("1220", "1122", -1), ("1121", "1221", -2),
    ("0001", "1231", -1), ("0011", "1221", 1), ("0111", "1121", 1), ("1111", "0121", -1),
]


@pytest.mark.parametrize("a, b, n", PRINTED)
def test_printed_structure_constant(table, a, b, n):
    assert table.N(a, b) == n


def test_non_root_sum_gives_zero(table):
    assert table.N("1000", "0001") == 0
    assert table.N("2342", "1000") == 0


def test_jacobi(table):
    assert chevalley.check_jacobi(table)


def test_commutator_examples(table):
    r, s = Fraction(2), Fraction(7)
    assert commutator(table, ("1000", r), ("1342", s)) == [(parse_root("2342"), -r * s)]
    assert commutator(table, ("1121", r), ("1221", s)) == [(parse_root("2342"), -2 * r * s)]
    assert commutator(table, ("1000", r), ("0001", s)) == []


def test_collect_fixed_point(f4, table):
    picks = {"1000": 3, "0100": -2, "0001": 5, "1231": 1}
    word = [(r, Fraction(picks[k])) for r in f4.positive_roots if (k := "".join(map(str, r))) in picks]
    assert collect(table, word) == word


def test_collect_reorders_with_correction(table):
    got = dict(collect(table, [("0100", 1), ("0010", 1)]))
    assert got[parse_root("0010")] == 1 and got[parse_root("0100")] == 1
    assert abs(got[parse_root("0110")]) == 1
    assert got[parse_root("0110")] == -table.N("0100", "0010") or got[parse_root("0110")] == table.N("0100", "0010")


def test_collect_rejects_negative(table):
    with pytest.raises(chevalley.ChevalleyError):
        collect(table, [("-1000", 1)])


def test_w0_conjugation(table):
    assert weyl_conjugate(table, chevalley.W0_F4, ("1111", 3)) == (parse_root("0001"), 3)
    assert weyl_conjugate(table, chevalley.W0_F4, ("1000", 3)) == (parse_root("1122"), 3)


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_simple_reflection_flips_sign(table, i):
    a = tuple(int(k == i - 1) for k in range(4))
    b, c = weyl_conjugate(table, (i,), (a, 5))
    assert b == tuple(-x for x in a) and c == -5


def test_lie_stabilizer_dims(f4, table):
    # the G2 stabilizer of the orbit with diagram 0002
    module = chevalley.TILDE_A2_MODULE
    assert chevalley.lie_stabilizer_dim(table, {1, 2, 3}, module, {"1111": 1, "0121": 1}) == 14


@pytest.mark.parametrize("label", ["G2", "B3", "C3"])
def test_other_types_satisfy_jacobi(label):
    assert chevalley.check_jacobi(chevalley.structure_constants(build_root_system(label)))


# properties

F4 = build_root_system("F4")
POS = F4.positive_roots
U1 = u_radical(F4, 1)
coef = st.integers(-4, 4).filter(bool).map(Fraction)
u1_word = st.lists(st.tuples(st.sampled_from(U1), coef), max_size=6)


@given(st.sampled_from(POS), st.sampled_from(POS))
def test_antisymmetry(a, b):
    t = chevalley.structure_constants(F4)
    assert t.N(a, b) == -t.N(b, a)


@given(u1_word)
def test_word_times_inverse_collects_to_identity(word):
    t = chevalley.structure_constants(F4)
    assert collect(t, list(word) + inverse_word(word)) == []


@given(u1_word)
def test_collect_idempotent_and_stays_in_u(word):
    t = chevalley.structure_constants(F4)
    nf = collect(t, word)
    assert collect(t, nf) == nf
    assert all(r in set(U1) for r, _ in nf)


@given(u1_word, u1_word)
def test_collect_is_associative(w1, w2):
    t = chevalley.structure_constants(F4)
    assert collect(t, collect(t, w1) + collect(t, w2)) == collect(t, list(w1) + list(w2))
