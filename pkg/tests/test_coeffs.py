import pytest
from hypothesis import given, strategies as st

from unfoldkit import coeffs, orbits
from unfoldkit.rootsys import build_root_system, root_str


def rs(roots):
    return {root_str(r) for r in roots}


def test_attach_parabolic_tilde_a2(f4):
    levi, u = coeffs.attach_parabolic(f4, (0, 0, 0, 2))
    assert levi == frozenset({1, 2, 3}) and len(u) == 15


def test_attach_parabolic_b2_and_e6(f4, e6):
    assert coeffs.attach_parabolic(f4, (2, 0, 0, 1))[0] == frozenset({2, 3})
    assert coeffs.attach_parabolic(e6, orbits.get_orbit("E6", "2A2").diagram)[0] == frozenset({2, 3, 4, 5})


def test_tilde_a1_level_two(f4):
    d = coeffs.filtrations(f4, (0, 0, 0, 1))
    assert len(d.u_filtration[2]) == 7
    assert all(r[3] == 2 for r in d.u_filtration[2])


def test_a1_plus_tilde_a1_levels(f4):
    d = coeffs.filtrations(f4, (0, 1, 0, 0))
    assert (len(d.l_levels[1]), len(d.l_levels[2]), d.heis_k) == (12, 6, 6)


def test_e6_minimal(e6):
    d = coeffs.filtrations(e6, orbits.get_orbit("E6", "A1").diagram)
    assert rs(d.l_levels[2]) == {"122321"}
    assert len(d.u_roots) == 21 and d.heis_k == 10


def test_b2_module_and_weight(f4):
    d = coeffs.filtrations(f4, (2, 0, 0, 1))
    assert rs(d.module_roots()) == {"1000", "1100", "1110", "1120", "1220", "0122"}
    assert coeffs.weight_function((2, 0, 0, 1)) == "2n1+n4"
    _, heis_part = coeffs.mixed_decomposition(f4, (2, 0, 0, 1))
    assert rs(heis_part) == {"0001", "0011", "0111", "0121", "0122"}


def test_mixed_decomposition_rejects_even(f4):
    with pytest.raises(coeffs.CoefficientError):
        coeffs.mixed_decomposition(f4, (0, 0, 0, 2))


@pytest.mark.parametrize("group, diagram, want", [
    ("F4", (1, 0, 0, 0), (8, 8, True)),
    ("F4", (0, 0, 0, 2), (15, 15, True)),
])
def test_half_dim_consistency(group, diagram, want):
    assert coeffs.half_dim_consistency(build_root_system(group), diagram) == want


def test_half_dim_e6_2a2(e6):
    assert coeffs.half_dim_consistency(e6, orbits.get_orbit("E6", "2A2").diagram) == (24, 24, True)


@pytest.mark.parametrize("group, label, dim", [("F4", "Ã2", 14), ("F4", "Ã1", 15), ("E6", "2A2", 14)])
def test_stabilizer_dims(group, label, dim):
    st_ = coeffs.stabilizer_check(build_root_system(group), orbits.get_orbit(group, label))
    assert st_.computed == dim


def test_a1_plus_tilde_a1_stabilizer_is_open(f4):
    # Levi of dim 12 acting on a 6-dim module with a 6-dim stabilizer
    st_ = coeffs.stabilizer_check(f4, orbits.get_orbit("F4", "A1+Ã1"))
    assert st_.computed == 6


@given(st.sampled_from([o for o in orbits.catalog("F4") if o.dim_orbit]))
def test_filtrations_decrease_and_close(o):
    f4 = build_root_system("F4")
    d = coeffs.filtrations(f4, o.diagram, o)
    u = set(d.u_roots)
    levels = sorted(d.u_filtration)
    for a, b in zip(levels, levels[1:]):
        assert set(d.u_filtration[b]) <= set(d.u_filtration[a])
    for k in levels:
        layer = set(d.u_filtration[k])
        for r in layer:
            for s in u:
                t = f4.add(r, s)
                if t is not None:
                    assert t in layer


@given(st.sampled_from([o for o in orbits.catalog("F4") if o.dim_orbit]))
def test_catalog_half_dims(o):
    lhs, rhs, ok = coeffs.half_dim_consistency(build_root_system("F4"), o.diagram)
    assert ok and rhs == o.half_dim
