"""Fourier-coefficient data attached to a weighted diagram."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .orbits import OrbitCatalogEntry, orbit_dim_from_diagram, weight
from .rootsys import Root, RootSystem, levi_type, root_str

PURE2, PURE01, MIXED = "pure2", "pure01", "mixed"

# Characters in general position used for the worked examples, keyed by
# (group, orbit label).  Coefficients are on digit-string roots.
GENERAL_POSITION = {
    ("F4", "Ã2"): {"1111": 1, "0121": 1},
    ("F4", "Ã1"): {"1232": 1},
    ("F4", "A1+Ã1"): {"1222": 1, "1231": 1},
    ("E6", "2A2"): {"111100": 1, "101110": 1, "010111": 1, "001111": 1},
    ("E8", "D4"): {"00000001": 1, "11221110": 1, "11122110": 1, "01122210": 1},
}


class CoefficientError(ValueError):
    pass


def _level(diagram: Sequence[int], root: Sequence[int]) -> int:
    return sum(n for c, n in zip(diagram, root) if c)


@dataclass
class CoefficientDatum:
    group: str
    diagram: tuple[int, ...]
    levi_simple_roots: frozenset[int]
    u_roots: tuple[Root, ...]
    u_filtration: dict[int, tuple[Root, ...]]
    v_filtration: dict[int, tuple[Root, ...]]
    l_levels: dict[int, tuple[Root, ...]]
    case_tag: str
    heis_k: int
    templates: tuple[str, ...]
    orbit: OrbitCatalogEntry | None = None
    levi_type: str = ""

    @property
    def template_tag(self) -> str:
        return self.templates[0]

    def weight(self, root: Sequence[int]) -> int:
        return weight(self.diagram, root)

    def module_roots(self) -> tuple[Root, ...]:
        """Roots of V^(2)/V^(3), the space carrying the character."""
        return tuple(r for r in self.u_roots if self.weight(r) == 2)

    def as_dict(self) -> dict:
        return {
            "group": self.group,
            "orbit": self.orbit.label if self.orbit else None,
            "diagram": "".join(map(str, self.diagram)),
            "levi_simple_roots": sorted(self.levi_simple_roots),
            "levi_type": self.levi_type,
            "dim_u": len(self.u_roots),
            "u_filtration": {str(k): [root_str(r) for r in v] for k, v in self.u_filtration.items()},
            "v_filtration": {str(k): [root_str(r) for r in v] for k, v in self.v_filtration.items()},
            "case": self.case_tag,
            "heis_k": self.heis_k,
            "templates": list(self.templates),
        }


def attach_parabolic(system: RootSystem, diagram: Sequence[int]) -> tuple[frozenset[int], tuple[Root, ...]]:
    diagram = _check(system, diagram)
    levi = frozenset(i + 1 for i, c in enumerate(diagram) if c == 0)
    u = tuple(r for r in system.positive_roots if any(n and diagram[i] for i, n in enumerate(r)))
    return levi, u


def _check(system: RootSystem, diagram) -> tuple[int, ...]:
    if isinstance(diagram, OrbitCatalogEntry):
        diagram = diagram.diagram
    if isinstance(diagram, str):
        diagram = tuple(int(c) for c in diagram)
    diagram = tuple(diagram)
    if len(diagram) != system.rank or any(c not in (0, 1, 2) for c in diagram):
        raise CoefficientError(f"invalid diagram {diagram} for {system.label}")
    return diagram


def filtrations(system: RootSystem, diagram, orbit: OrbitCatalogEntry | None = None) -> CoefficientDatum:
    if isinstance(diagram, OrbitCatalogEntry):
        orbit = diagram
    diagram = _check(system, diagram)
    levi, u = attach_parabolic(system, diagram)
    top_u = max((_level(diagram, r) for r in u), default=0)
    top_v = max((weight(diagram, r) for r in u), default=0)
    ufil = {k: tuple(r for r in u if _level(diagram, r) >= k) for k in range(1, top_u + 1)}
    vfil = {k: tuple(r for r in u if weight(diagram, r) >= k) for k in range(1, top_v + 1)}
    lev = {k: tuple(r for r in u if _level(diagram, r) == k) for k in range(1, top_u + 1)}
    has1 = 1 in diagram
    has2 = 2 in diagram
    if has1 and has2:
        case, templates = MIXED, ("int31", "fc_3_2")
    elif has1:
        case, templates = PURE01, ("int2/int3", "fc_3_2")
    else:
        case, templates = PURE2, ("int1",)
    v2 = vfil.get(2, ())
    k2 = len(u) - len(v2)
    if k2 % 2:
        raise CoefficientError("odd number of weight-one roots")
    return CoefficientDatum(
        group=system.label,
        diagram=diagram,
        levi_simple_roots=levi,
        u_roots=u,
        u_filtration=ufil,
        v_filtration=vfil,
        l_levels=lev,
        case_tag=case,
        heis_k=k2 // 2,
        templates=templates,
        orbit=orbit,
        levi_type=levi_type(system, levi),
    )


def mixed_decomposition(system: RootSystem, diagram) -> tuple[tuple[Root, ...], tuple[Root, ...]]:
    """(abelian part, generalized Heisenberg part) of U_O / V^(3)."""
    d = filtrations(system, diagram)
    if d.case_tag != MIXED:
        raise CoefficientError(f"diagram {''.join(map(str, d.diagram))} is not mixed")
    ab = tuple(r for r in d.u_roots if d.weight(r) == 2 and _level(d.diagram, r) == 1)
    he = tuple(
        r for r in d.u_roots
        if d.weight(r) == 1 or (d.weight(r) == 2 and _level(d.diagram, r) >= 2)
    )
    return ab, he


def weight_function(diagram: Sequence[int]) -> str:
    """Human-readable form of the weight function, e.g. '2n1+n4'."""
    terms = []
    for i, c in enumerate(diagram, 1):
        if c:
            terms.append(f"{'' if c == 1 else c}n{i}")
    return "+".join(terms) or "0"


def half_dim_consistency(system: RootSystem, diagram) -> tuple[int, int, bool]:
    d = filtrations(system, diagram)
    lhs = len(d.u_roots) - d.heis_k
    rhs = orbit_dim_from_diagram(system, d.diagram) // 2
    return lhs, rhs, lhs == rhs


def general_position_functional(group: str, label: str) -> Mapping[str, int]:
    try:
        return GENERAL_POSITION[(group, label)]
    except KeyError:
        raise CoefficientError(f"no stored general-position character for {group} {label}") from None


@dataclass(frozen=True)
class StabilizerCheck:
    computed: int
    expected: int
    torus_gap: int

    @property
    def ok(self) -> bool:
        return 0 <= self.torus_gap <= 2


def stabilizer_check(system: RootSystem, orbit: OrbitCatalogEntry) -> StabilizerCheck:
    """Compare the Lie stabilizer of the stored character with the catalog type.

    A surplus of at most two is tolerated and reported as a central torus.
    """
    from .chevalley import lie_stabilizer_dim, structure_constants
    from .rootsys import build_root_system

    d = filtrations(system, orbit)
    ell = general_position_functional(system.label, orbit.label)
    got = lie_stabilizer_dim(structure_constants(system), d.levi_simple_roots, d.module_roots(), ell)
    want = 0 if orbit.stabilizer_type == "0" else build_root_system(orbit.stabilizer_type).dim
    return StabilizerCheck(got, want, got - want)
