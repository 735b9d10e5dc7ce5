import pytest
from hypothesis import given, strategies as st

from unfoldkit import rootsys
from unfoldkit.rootsys import build_root_system, parse_root, root_str, weyl_act

W0 = (1, 2, 3, 2, 1, 4, 3, 2, 3, 4)


@pytest.mark.parametrize("label, npos, dim", [("F4", 24, 52), ("A1", 1, 3), ("E6", 36, 78), ("G2", 6, 14), ("B3", 9, 21), ("C3", 9, 21)])
def test_sizes(label, npos, dim):
    s = build_root_system(label)
    assert s.n_positive == npos
    assert s.dim == dim


def test_f4_borel(f4):
    assert f4.dim_borel == 28
    assert f4.root("2342") == (2, 3, 4, 2)


def test_unknown_type_rejected():
    with pytest.raises(rootsys.RootSystemError):
        build_root_system("X9")


def test_e8_needs_feature(monkeypatch):
    monkeypatch.setattr(rootsys, "_enabled_features", set())
    monkeypatch.delenv(rootsys.E8_FEATURE_ENV, raising=False)
    with pytest.raises(rootsys.RootSystemError):
        build_root_system("E8", strict=True)


def test_parse_root_roundtrip():
    assert parse_root("-1342") == (-1, -3, -4, -2)
    assert root_str((0, 1, 2, 2)) == "0122"
    with pytest.raises(rootsys.RootSystemError):
        parse_root("12a4")
    with pytest.raises(rootsys.RootSystemError):
        parse_root("123", 4)


def test_w0_action(f4):
    assert weyl_act(f4, W0, "0100") == (0, 1, 0, 0)
    assert weyl_act(f4, W0, "1111") == (0, 0, 0, 1)
    assert weyl_act(f4, (), "1231") == (1, 2, 3, 1)


@pytest.mark.parametrize("i, levi, dim_u", [(1, "C3", 15), (2, "A1+A2", 20), (3, "A2+A1", 20), (4, "B3", 15)])
def test_f4_maximal_parabolics(f4, i, levi, dim_u):
    p = rootsys.maximal_parabolic(f4, i)
    assert p.dim_unipotent == dim_u
    assert p.levi_type == levi


def test_e6_parabolics_and_involution(e6):
    assert [rootsys.maximal_parabolic(e6, i).dim_unipotent for i in range(1, 5)] == [16, 21, 25, 29]
    assert rootsys.diagram_involution(e6) == {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}


def test_associated_parabolic():
    a2 = build_root_system("A2")
    assert rootsys.associated_parabolic(a2, {1}) == frozenset({2})


def test_f4_maximal_self_associated(f4):
    for i in range(1, 5):
        levi = frozenset({1, 2, 3, 4} - {i})
        assert rootsys.associated_parabolic(f4, levi) == levi


def test_weyl_group_order(f4):
    assert len(rootsys.weyl_group(f4)) == 1152


words = st.lists(st.integers(1, 4), max_size=14)


@given(words, st.integers(0, 47))
def test_inverse_action_roundtrip(word, k):
    f4 = build_root_system("F4")
    r = f4.roots[k]
    w = f4.element(word)
    assert w(w.inverse()(r)) == r
    assert w.inverse()(w(r)) == r


@given(words)
def test_reduced_word_represents_element(word):
    f4 = build_root_system("F4")
    w = f4.element(word)
    rw = w.reduced_word()
    assert len(rw) == w.length <= len(word)
    assert f4.element(rw) == w
    assert w.length == sum(1 for r in f4.positive_roots if not f4.is_positive(w(r)))


@given(st.integers(0, 47), st.integers(0, 47))
def test_pairing_invariant_under_reflections(a, b):
    f4 = build_root_system("F4")
    ra, rb = f4.roots[a], f4.roots[b]
    for i in range(1, 5):
        s = f4.s(i)
        assert f4.pairing(s(ra), s(rb)) == f4.pairing(ra, rb)
