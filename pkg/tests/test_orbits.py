import pytest
from hypothesis import given, strategies as st

from unfoldkit import orbits
from unfoldkit.orbits import (
    CatalogError, PartitionError, canonical_label, ascii_label, orbit_dim_partition,
)
from unfoldkit.rootsys import build_root_system


def test_diagram_dims(f4, e6):
    assert orbits.orbit_dim_from_diagram(f4, (1, 0, 0, 0)) == 16
    assert orbits.orbit_dim_from_diagram(f4, (0, 0, 0, 1)) == 22
    assert orbits.orbit_dim_from_diagram(f4, (0, 0, 0, 0)) == 0
    assert orbits.orbit_dim_from_diagram(f4, (2, 2, 2, 2)) == 48
    assert orbits.orbit_dim_from_diagram(e6, orbits.get_orbit("E6", "A1").diagram) == 22


@pytest.mark.parametrize("t, parts, dim", [
    ("C3", (2, 2, 1, 1), 10), ("C3", (3, 3), 14), ("C3", (4, 1, 1), 14), ("C3", (6,), 18),
    ("B3", (3, 1, 1, 1, 1), 10), ("B3", (5, 1, 1), 16), ("B3", (3, 3, 1), 14), ("B3", (2, 2, 1, 1, 1), 8),
])
def test_partition_dims(t, parts, dim):
    assert orbit_dim_partition(t, parts) == dim


def test_partition_validation():
    with pytest.raises(PartitionError):
        orbits.check_partition("B3", (3, 1, 1, 1, 1, 1))  # sums to 8
    with pytest.raises(PartitionError):
        orbits.check_partition("C3", (3, 1, 1, 1))  # odd part 3 once
    with pytest.raises(PartitionError):
        orbits.check_partition("B3", (2, 1, 1, 1, 1, 1))  # even part 2 once


def test_levi_orbits():
    assert sorted(x.parts for x in orbits.enumerate_levi_orbits("C3", 7)) == [((3, 3),), ((4, 1, 1),)]
    assert sorted(str(x) for x in orbits.enumerate_levi_orbits("A1+A2", 3)) == ["(1^2|3)", "(2|21)"]
    assert orbits.enumerate_levi_orbits("A5", 10) == []


def test_special_flags():
    assert not orbits.is_special("C3", (4, 1, 1))
    assert orbits.is_special("C3", (3, 3))
    assert not orbits.is_special("B3", (2, 2, 1, 1, 1))


@pytest.mark.parametrize("t, specials, want", [
    ("C3", False, False), ("C3", True, True), ("A5", False, False),
    ("A3", False, True), ("B3", False, True), ("A1", False, True),
    ("A2", False, True), ("G2", False, True), ("C2", False, True),
])
def test_poset_verdicts(t, specials, want):
    assert orbits.poset_totally_ordered(t, specials_only=specials) is want


@pytest.mark.parametrize("text, label", [
    ("At1", "Ã1"), ("A1+At1", "A1+Ã1"), ("At2", "Ã2"), ("C3a1", "C3(a1)"),
    ("F4a3", "F4(a3)"), ("At2+A1", "Ã2+A1"), ("B2", "B2"), ("1", "0"),
])
def test_ascii_labels(text, label):
    assert canonical_label(text) == label
    assert orbits.get_orbit("F4", text).label == label


def test_ascii_label_roundtrip():
    for o in orbits.catalog("F4"):
        assert canonical_label(ascii_label(o.label)) == o.label


def test_catalog_consistent(f4):
    cat = orbits.catalog("F4")
    assert len(cat) == 16
    for o in cat:
        assert orbits.orbit_dim_from_diagram(f4, o.diagram) == o.dim_orbit


def test_unknown_orbit():
    with pytest.raises(KeyError):
        orbits.get_orbit("F4", "Z9")


LINE = "group=F4 label=A1 diagram=1000 dim={dim} stabilizer=C3 special=false"


def test_catalog_text_validation():
    assert orbits.load_catalog_text(LINE.format(dim=16))[0].dim_orbit == 16
    with pytest.raises(CatalogError):
        orbits.load_catalog_text(LINE.format(dim=18))
    with pytest.raises(CatalogError):
        orbits.load_catalog_text("group=F4 label=A1 diagram=1000")
    with pytest.raises(CatalogError):
        orbits.load_catalog_text("\n".join([LINE.format(dim=16)] * 2))


def test_catalog_override(tmp_path):
    path = tmp_path / "cat.txt"
    path.write_text(LINE.format(dim=16) + "\n", encoding="utf-8")
    try:
        orbits.set_catalog_override(path)
        assert [o.label for o in orbits.catalog("F4")] == ["A1"]
        with pytest.raises(KeyError):
            orbits.catalog("E6")
    finally:
        orbits.set_catalog_override(None)
    assert len(orbits.catalog("F4")) == 16


# properties

partition = st.integers(1, 10).flatmap(lambda n: st.sampled_from(list(orbits.partitions(n))))


@given(partition)
def test_transpose_is_involution(lam):
    assert orbits.transpose(orbits.transpose(lam)) == lam
    assert sum(orbits.transpose(lam)) == sum(lam)


@given(partition)
def test_format_parse_roundtrip(lam):
    assert orbits.parse_partition(orbits.format_partition(lam)) == lam


@given(st.sampled_from(["A3", "A5", "B3", "C3", "C4", "D4"]), st.data())
def test_dominance_monotone(t, data):
    parts = orbits.classical_partitions(t)
    a = data.draw(st.sampled_from(parts))
    b = data.draw(st.sampled_from(parts))
    if a != b and orbits.dominates(a, b):
        assert orbit_dim_partition(t, a) > orbit_dim_partition(t, b)


@given(partition)
def test_type_a_dim_formula(lam):
    # n^2 - sum of squares of the transpose
    n = sum(lam)
    t = f"A{n - 1}" if n > 1 else None
    if t:
        assert orbit_dim_partition(t, lam) == n * n - sum(c * c for c in orbits.transpose(lam))
