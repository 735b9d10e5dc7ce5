"""Dimension equations and the F4 table.

dim tau = dim B_C + dim O / 2 - dim U(P)     (tau on the Levi of P)
dim theta + dim tau = dim B_H - dim U(P)      (the reductive case)
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .orbits import (
    LeviOrbit,
    OrbitCatalogEntry,
    catalog,
    enumerate_levi_orbits,
    get_orbit,
)
from .rootsys import RootSystem, build_root_system, maximal_parabolic


def dim_borel(type_label: str) -> int:
    """#positive roots + rank of the semisimple type ('0' for a finite group)."""
    if type_label in ("0", ""):
        return 0
    return build_root_system(type_label).dim_borel


def dim_group(type_label: str) -> int:
    if type_label in ("0", ""):
        return 0
    return build_root_system(type_label).dim


def _orbit(group: str, orbit) -> OrbitCatalogEntry:
    return orbit if isinstance(orbit, OrbitCatalogEntry) else get_orbit(group, orbit)


def _pidx(parabolic) -> int:
    if isinstance(parabolic, str):
        return int(parabolic.upper().lstrip("P"))
    return int(parabolic)


def dim_tau_raw(group: str, orbit, parabolic) -> int:
    system = build_root_system(group)
    o = _orbit(group, orbit)
    u = maximal_parabolic(system, _pidx(parabolic)).dim_unipotent
    return dim_borel(o.stabilizer_type) + o.dim_orbit // 2 - u


def dim_tau(group: str, orbit, parabolic) -> Optional[int]:
    v = dim_tau_raw(group, orbit, parabolic)
    return v if v >= 0 else None


def reductive_budget(group: str, parabolic) -> int:
    system = build_root_system(group)
    return system.dim_borel - maximal_parabolic(system, _pidx(parabolic)).dim_unipotent


@dataclass(frozen=True)
class ReductiveSolution:
    theta: str
    theta_half_dim: int
    tau: LeviOrbit

    def __str__(self) -> str:
        return f"[{self.theta},{self.tau}]"


def reductive_candidates(group: str, parabolic) -> list[tuple[OrbitCatalogEntry, int, list[LeviOrbit]]]:
    """Every nonzero orbit that fits the budget, with its Levi orbits (possibly none)."""
    system = build_root_system(group)
    budget = reductive_budget(group, parabolic)
    lt = maximal_parabolic(system, _pidx(parabolic)).levi_type
    out = []
    for o in catalog(group):
        if o.dim_orbit == 0 or o.half_dim > budget:
            continue
        residual = budget - o.half_dim
        out.append((o, residual, enumerate_levi_orbits(lt, residual)))
    return out


def reductive_solutions(group: str, parabolic) -> list[ReductiveSolution]:
    out = []
    for o, _, taus in reductive_candidates(group, parabolic):
        for t in taus:
            out.append(ReductiveSolution(o.label, o.half_dim, t))
    return out


def _bold(label: str, special: bool) -> str:
    return label if special else f"**{label}**"


# Column order of the printed table: Levi types of P1, P4, P3, P2.
F4_COLUMNS = (("C3", 1), ("B3", 4), ("A2+A1", 3), ("A1+A2", 2))

# The printed F4 table; bold (non-special) entries are wrapped in ** **.
PRINTED_F4_TABLE: dict[str, dict] = {
    "0": dict(stab="F4", p14=13, p23=8, lists=(
        ["[**A1**,(2^21^2)]"], ["[**A1**,(31^4)]"], ["[**A1**,(1^3|1^2)]"], ["[**A1**,(1^2|1^3)]"])),
    "A1": dict(stab="C3", p14=5, p23=0, lists=(
        ["(2^21^2)"], ["(31^4)"], ["(1^3|1^2)"], ["(1^2|1^3)"])),
    "Ã1": dict(stab="A3", p14=5, p23=0, lists=(
        ["(2^21^2)"], ["(31^4)"], ["(1^3|1^2)"], ["(1^2|1^3)"])),
    "A1+Ã1": dict(stab="A1+A1", p14=1, p23=None, lists=([], [], [], [])),
    "A2": dict(stab="A2", p14=5, p23=0, lists=(
        ["(2^21^2)"], ["(31^4)"], ["(1^3|1^2)"], ["(1^2|1^3)"])),
    "Ã2": dict(stab="G2", p14=8, p23=3, lists=(
        ["(42)"], ["(51^2)"], ["(3|1^2)", "(21|2)"], ["(1^2|3)", "(2|21)"])),
    "A2+Ã1": dict(stab="A1", p14=4, p23=None, lists=([], ["**(2^21^3)**"], [], [])),
    "B2": dict(stab="A1+A1", p14=7, p23=2, lists=(
        ["(3^2)", "**(41^2)**"], ["(3^21)"], ["(21|1^2)"], ["(1^2|21)"])),
    "Ã2+A1": dict(stab="A1", p14=5, p23=0, lists=(
        ["(2^21^2)"], ["(31^4)"], ["(1^3|1^2)"], ["(1^2|1^3)"])),
    "C3(a1)": dict(stab="A1", p14=6, p23=1, lists=(
        ["(2^3)"], ["(32^2)"], ["(1^3|2)"], ["(2|1^3)"])),
    "F4(a3)": dict(stab="0", p14=5, p23=0, lists=(
        ["(2^21^2)"], ["(31^4)"], ["(1^3|1^2)"], ["(1^2|1^3)"])),
    "B3": dict(stab="A1", p14=8, p23=3, lists=(
        ["(42)"], ["(51^2)"], ["(3|1^2)", "(21|2)"], ["(1^2|3)", "(2|21)"])),
    "C3": dict(stab="A1", p14=8, p23=3, lists=(
        ["(42)"], ["(51^2)"], ["(3|1^2)", "(21|2)"], ["(1^2|3)", "(2|21)"])),
    "F4(a2)": dict(stab="0", p14=7, p23=2, lists=(
        ["(3^2)", "**(41^2)**"], ["(3^21)"], ["(21|1^2)"], ["(1^2|21)"])),
    "F4(a1)": dict(stab="0", p14=8, p23=3, lists=(
        ["(42)"], ["(51^2)"], ["(3|1^2)", "(21|2)"], ["(1^2|3)", "(2|21)"])),
    "F4": dict(stab="0", p14=9, p23=4, lists=(
        ["(6)"], ["(7)"], ["(3|2)"], ["(2|3)"]), note="LS"),
}


@dataclass
class TableRow:
    label: str
    special: bool
    stabilizer_type: str
    dim_tau_P14: Optional[int]
    dim_tau_P23: Optional[int]
    orbit_lists: dict[str, list[str]]
    discrepancy_note: Optional[str] = None
    printed_note: Optional[str] = None

    @property
    def display_label(self) -> str:
        lab = "1" if self.label == "0" else self.label
        return _bold(lab, self.special)

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "special": self.special,
            "stabilizer": self.stabilizer_type,
            "P1,P4": self.dim_tau_P14,
            "P2,P3": self.dim_tau_P23,
            "lists": self.orbit_lists,
            "discrepancy": self.discrepancy_note,
        }


def _row(group: str, o: OrbitCatalogEntry, columns) -> TableRow:
    lists: dict[str, list[str]] = {}
    if o.dim_orbit == 0:
        p14 = reductive_budget(group, 1)
        p23 = reductive_budget(group, 2)
        for name, idx in columns:
            sols = reductive_solutions(group, idx)
            lists[name] = [
                f"[{_bold(s.theta, get_orbit(group, s.theta).special)},{s.tau}]" for s in sols
            ]
    else:
        p14 = dim_tau(group, o, 1)
        p23 = dim_tau(group, o, 2)
        for name, idx in columns:
            d = dim_tau(group, o, idx)
            lists[name] = [str(t) for t in enumerate_levi_orbits(name, d)] if d is not None else []
    return TableRow(o.label, o.special, o.stabilizer_type, p14, p23, lists)


def generate_table(group: str = "F4") -> list[TableRow]:
    if group.upper() != "F4":
        raise ValueError("the full table is only generated for F4")
    rows = []
    for o in catalog("F4"):
        row = _row("F4", o, F4_COLUMNS)
        printed = PRINTED_F4_TABLE.get(o.label)
        if printed is not None:
            row.printed_note = printed.get("note")
            diffs = compare_row(row, printed)
            if diffs:
                row.discrepancy_note = "; ".join(diffs)
        rows.append(row)
    return rows


def compare_row(row: TableRow, printed: dict) -> list[str]:
    diffs = []
    if row.stabilizer_type != printed["stab"]:
        diffs.append(f"stabilizer: printed {printed['stab']}, computed {row.stabilizer_type}")
    if row.dim_tau_P14 != printed["p14"]:
        diffs.append(f"P1,P4: printed {printed['p14']}, computed {row.dim_tau_P14}")
    if row.dim_tau_P23 != printed["p23"]:
        diffs.append(f"P2,P3: printed {printed['p23']}, computed {row.dim_tau_P23}")
    for (name, _), want in zip(F4_COLUMNS, printed["lists"]):
        got = row.orbit_lists[name]
        if sorted(got) != sorted(want):
            diffs.append(f"{name}: printed {want or '---'}, computed {got or '---'}")
    return diffs


def render_table(rows: list[TableRow]) -> str:
    head = ["label", "stabilizer", "P1,P4", "P2,P3"] + [c for c, _ in F4_COLUMNS]
    body = []
    for r in rows:
        cells = [
            r.display_label,
            r.stabilizer_type,
            "---" if r.dim_tau_P14 is None else str(r.dim_tau_P14),
            "---" if r.dim_tau_P23 is None else str(r.dim_tau_P23),
        ] + [",".join(r.orbit_lists[c]) or "---" for c, _ in F4_COLUMNS]
        if r.discrepancy_note:
            cells[0] += " !"
        body.append(cells)
    widths = [max(len(x[i]) for x in [head] + body) for i in range(len(head))]
    fmt = lambda cells: " | ".join(c.ljust(w) for c, w in zip(cells, widths))
    lines = [fmt(head), "-+-".join("-" * w for w in widths)] + [fmt(c) for c in body]
    return "\n".join(lines)


def e6_a1_analysis() -> dict[int, dict]:
    """dim tau and Levi orbits for the minimal orbit of E6 against each P_i."""
    system = build_root_system("E6")
    o = get_orbit("E6", "A1")
    out = {}
    for i in range(1, system.rank + 1):
        p = maximal_parabolic(system, i)
        d = dim_tau("E6", o, i)
        out[i] = {
            "levi_type": p.levi_type,
            "dim_u": p.dim_unipotent,
            "dim_tau": d,
            "orbits": [str(t) for t in enumerate_levi_orbits(p.levi_type, d)] if d is not None else [],
        }
    return out


def dual_integral_scan(group: str = "F4") -> dict[str, int]:
    """Orbits with dim O/2 + dim C - dim U_max > 0 (nonzero orbits only)."""
    system = build_root_system(group)
    out = {}
    for o in catalog(group):
        if o.dim_orbit == 0:
            continue
        v = o.half_dim + dim_group(o.stabilizer_type) - system.n_positive
        if v > 0:
            out[o.label] = v
    return out
