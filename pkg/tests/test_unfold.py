import pytest
from hypothesis import given, strategies as st

from unfoldkit import chevalley, orbits, unfold
from unfoldkit.rootsys import build_root_system, root_str


def rs(roots):
    return {root_str(r) for r in roots}


@pytest.mark.parametrize("label, counts", [("Ã2", (3, 5, 7, 5)), ("A1", (5, 7, 5, 3))])
def test_double_coset_counts(f4, label, counts):
    o = orbits.get_orbit("F4", label)
    assert tuple(len(unfold.double_coset_reps(f4, i, o)) for i in range(1, 5)) == counts


def test_printed_representatives(f4):
    o = orbits.get_orbit("F4", "Ã2")
    reps = unfold.double_coset_reps(f4, 1, o)
    assert [w.reduced_word() for w in reps][0] == []
    words = [(), (1, 2, 3, 4), (1, 2, 3, 2, 1, 4, 3, 2, 3, 4)]
    assert sorted(unfold.coset_index(reps, f4, w, 1, o) for w in words) == [0, 1, 2]


def test_every_printed_representative_in_distinct_coset(f4):
    for (i, label), words in unfold.PRINTED_REPRESENTATIVES.items():
        o = orbits.get_orbit("F4", label)
        reps = unfold.double_coset_reps(f4, i, o)
        assert sorted(unfold.coset_index(reps, f4, w, i, o) for w in words) == list(range(len(reps)))


def test_p3_tilde_a2_longest(f4):
    reps = unfold.double_coset_reps(f4, 3, orbits.get_orbit("F4", "Ã2"))
    assert tuple(reps[-1].reduced_word()) == (3, 2, 1, 3, 2, 3, 4, 3, 2, 1, 3, 2, 3, 4)


def test_w0_datum_p1(f4):
    d = unfold.coset_datum(f4, chevalley.W0_F4, 1, orbits.get_orbit("F4", "Ã2"))
    assert rs(d.u_upper) == {"1111", "1121", "1221", "1231", "2342"}
    assert rs(d.u_lower) == {"0001", "0011", "0111", "0121", "0122", "1122", "1222", "1232", "1242", "1342"}


def test_w0_datum_p2(f4):
    w = unfold.PRINTED_REPRESENTATIVES[(2, "Ã2")][-1]
    d = unfold.coset_datum(f4, w, 2, orbits.get_orbit("F4", "Ã2"))
    assert rs(d.u_upper) == {"1221", "1231"} and len(d.u_lower) == 13


def test_qw_levi(f4):
    d = unfold.coset_datum(f4, (2, 3, 2, 1, 4, 3, 2, 1, 3, 2, 4, 3, 2, 1), 2, orbits.get_orbit("F4", "A1"))
    assert d.qw_levi_simple_roots == frozenset({3, 4})
    assert d.qw_levi_type == "A2"


def test_non_minimal_rejected(f4):
    with pytest.raises(unfold.UnfoldError):
        unfold.coset_datum(f4, (2,), 1, orbits.get_orbit("F4", "Ã2"))


def test_open_orbit_identities():
    assert unfold.open_orbit_check(None, 6, 8, 9, 5)
    assert unfold.open_orbit_check(None, 6, 3, 7, 2)
    assert unfold.open_orbit_check(None, 0, 0, 0, 0)
    assert not unfold.open_orbit_check(None, 6, 8, 9, 4)
    with pytest.raises(unfold.UnfoldError):
        unfold.open_orbit_check(None, 6, 8, 9)


def test_special_case(f4):
    assert unfold.special_case(f4, 4, orbits.get_orbit("F4", "Ã2"))
    assert unfold.special_case(f4, 1, orbits.get_orbit("F4", "A1"))
    assert not unfold.special_case(f4, 1, orbits.get_orbit("F4", "Ã2"))


def test_character_stabilizer(table):
    o = orbits.get_orbit("F4", "Ã2")
    psi = dict(chevalley.TILDE_A2_PSI)
    assert unfold.stabilizes_character(table, [[("1000", 1), ("0010", 1)]], o, psi)
    assert unfold.stabilizes_character(table, [[("1100", 1), ("0110", -1)]], o, psi)
    assert not unfold.stabilizes_character(table, [[("1000", 1)]], o, psi)
    assert unfold.stabilizes_character(table, chevalley.TILDE_A2_STABILIZER, o, psi)


F4 = build_root_system("F4")
CASES = [(i, lab) for i in range(1, 5) for lab in ("Ã2", "A1", "B2", "Ã1")]


@given(st.sampled_from(CASES))
def test_root_partition_complete(case):
    i, lab = case
    o = orbits.get_orbit("F4", lab)
    for w in unfold.double_coset_reps(F4, i, o):
        d = unfold.coset_datum(F4, w, i, o)
        u_o = {r for r in F4.positive_roots if any(c and k + 1 not in d.PO_levi for k, c in enumerate(r))}
        up, lo = set(d.u_upper), set(d.u_lower)
        assert not up & lo and up | lo == u_o and set(d.u_mid) <= up


@given(st.sampled_from(CASES))
def test_double_coset_count_symmetric(case):
    # |W_I \ W / W_J| = |W_J \ W / W_I|, with P_O replaced by the maximal parabolic P_j
    i, lab = case
    o = orbits.get_orbit("F4", lab)
    J = frozenset(d.PO_levi) if (d := unfold.coset_datum(F4, (), i, o)) else None
    I = frozenset({1, 2, 3, 4} - {i})
    assert len(unfold.double_coset_reps(F4, I, J)) == len(unfold.double_coset_reps(F4, J, I))
