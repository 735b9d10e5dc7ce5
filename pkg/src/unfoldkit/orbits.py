"""Nilpotent orbits: the exceptional catalogs, partition orbits of classical
Levi factors, speciality and closure-order checks."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .rootsys import RootSystem, build_root_system, feature_enabled


class CatalogError(ValueError):
    """The orbit data file violates an invariant."""


class PartitionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# labels

_ASCII = {"Ã": "At"}


def ascii_label(label: str) -> str:
    """'Ã2+A1' -> 'At2+A1', 'C3(a1)' -> 'C3a1'."""
    return label.replace("Ã", "At").replace("(", "").replace(")", "")


def canonical_label(text: str) -> str:
    """Inverse of ascii_label; accepts either spelling."""
    s = text.strip().replace(" ", "")
    if s == "1":  # the trivial orbit, as printed in table rows
        return "0"
    s = re.sub(r"At(\d)", r"Ã\1", s)
    s = re.sub(r"([A-G]\d)a(\d)", r"\1(a\2)", s)
    return s


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class OrbitCatalogEntry:
    group: str
    label: str
    diagram: tuple[int, ...]
    dim_orbit: int
    stabilizer_type: str
    special: bool
    source: str = "data"

    @property
    def ascii(self) -> str:
        return ascii_label(self.label)

    @property
    def diagram_str(self) -> str:
        return "".join(map(str, self.diagram))

    @property
    def half_dim(self) -> int:
        return self.dim_orbit // 2


def weight(diagram: Sequence[int], root: Sequence[int]) -> int:
    return sum(c * n for c, n in zip(diagram, root))


def orbit_dim_from_diagram(system: RootSystem, diagram: Sequence[int]) -> int:
    """dim G - dim g_0 - dim g_1 for the grading by the diagram weights."""
    diagram = tuple(diagram)
    if len(diagram) != system.rank or any(c not in (0, 1, 2) for c in diagram):
        raise CatalogError(f"invalid diagram {diagram} for {system.label}")
    g0 = system.rank + sum(1 for r in system.roots if weight(diagram, r) == 0)
    g1 = sum(1 for r in system.roots if weight(diagram, r) == 1)
    return system.dim - g0 - g1


def _parse_record(line: str) -> dict[str, str]:
    rec = {}
    for tok in line.split():
        if "=" not in tok:
            raise CatalogError(f"malformed field {tok!r}")
        k, v = tok.split("=", 1)
        rec[k] = v
    return rec


def _bool(v: str) -> bool:
    if v.lower() in ("true", "yes", "1"):
        return True
    if v.lower() in ("false", "no", "0"):
        return False
    raise CatalogError(f"bad boolean {v!r}")


def load_catalog_text(text: str) -> list[OrbitCatalogEntry]:
    entries = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        rec = _parse_record(line)
        missing = {"group", "label", "diagram", "dim", "stabilizer", "special"} - rec.keys()
        if missing:
            raise CatalogError(f"line {n}: missing fields {sorted(missing)}")
        try:
            entry = OrbitCatalogEntry(
                group=rec["group"].upper(),
                label=canonical_label(rec["label"]),
                diagram=tuple(int(c) for c in rec["diagram"]),
                dim_orbit=int(rec["dim"]),
                stabilizer_type=rec["stabilizer"],
                special=_bool(rec["special"]),
                source=rec.get("source", "data"),
            )
        except ValueError as exc:
            raise CatalogError(f"line {n}: {exc}") from None
        entries.append(entry)
    validate_catalog(entries)
    return entries


def validate_catalog(entries: Iterable[OrbitCatalogEntry]) -> None:
    seen = set()
    for e in entries:
        key = (e.group, e.label)
        if key in seen:
            raise CatalogError(f"duplicate entry {e.group} {e.label}")
        seen.add(key)
        if e.group in ("E7", "E8") and not feature_enabled("e8"):
            continue
        system = build_root_system(e.group)
        dim = orbit_dim_from_diagram(system, e.diagram)
        if dim != e.dim_orbit:
            raise CatalogError(
                f"{e.group} {e.label}: diagram {e.diagram_str} gives dim {dim}, file says {e.dim_orbit}"
            )
        if e.stabilizer_type not in ("0",):
            build_root_system(e.stabilizer_type)  # must parse


_DATA_FILES = {"F4": "f4_orbits.txt", "E6": "e6_orbits.txt", "E8": "e8_orbits.txt"}
_override: dict[str, list[OrbitCatalogEntry]] = {}


def set_catalog_override(path: str | Path | None) -> None:
    """Replace the shipped catalogs by the records of a user file."""
    _override.clear()
    if path is None:
        return
    entries = load_catalog_text(Path(path).read_text(encoding="utf-8"))
    for e in entries:
        _override.setdefault(e.group, []).append(e)


@lru_cache(maxsize=None)
def _shipped(group: str) -> tuple[OrbitCatalogEntry, ...]:
    name = _DATA_FILES.get(group)
    if name is None:
        raise KeyError(f"no orbit catalog for {group}")
    text = resources.files("unfoldkit.data").joinpath(name).read_text(encoding="utf-8")
    return tuple(load_catalog_text(text))


def catalog(group: str) -> list[OrbitCatalogEntry]:
    group = group.upper()
    if group in ("E7", "E8") and not feature_enabled("e8"):
        raise KeyError(f"{group} orbits require the e8 feature")
    if _override:
        if group not in _override:
            raise KeyError(f"no orbit catalog for {group}")
        return list(_override[group])
    return list(_shipped(group))


def get_orbit(group: str, label: str) -> OrbitCatalogEntry:
    want = canonical_label(label)
    for e in catalog(group):
        if e.label == want:
            return e
    raise KeyError(f"unknown orbit {label!r} in {group}")


# ---------------------------------------------------------------------------
# partitions


Partition = tuple[int, ...]


def normalize(parts: Iterable[int]) -> Partition:
    p = tuple(sorted((int(x) for x in parts if int(x) > 0), reverse=True))
    return p


def transpose(parts: Sequence[int]) -> Partition:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(max(parts)))


def partitions(n: int, max_part: int | None = None) -> Iterable[Partition]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def _mults(parts: Sequence[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in parts:
        out[p] = out.get(p, 0) + 1
    return out


def parse_partition(text: str) -> Partition:
    """'(2^21^2)' -> (2, 2, 1, 1); '4,1,1' also accepted.

    Parts and exponents are single digits, so '2^21' is (2, 2, 1); larger
    values go in braces, as in '{10}1^{12}'."""
    s = text.strip().strip("()").replace(" ", "")
    if "," in s:
        return normalize(int(x) for x in s.split(","))
    out = []
    for m in re.finditer(r"(?:\{(\d+)\}|(\d))(?:\^(?:\{(\d+)\}|(\d)))?", s):
        out.extend([int(m.group(1) or m.group(2))] * int(m.group(3) or m.group(4) or 1))
    return normalize(out)


def format_partition(parts: Sequence[int]) -> str:
    if not parts:
        return "()"
    bits = []
    for p, m in sorted(_mults(parts).items(), reverse=True):
        part = f"{{{p}}}" if p > 9 else str(p)
        bits.append(f"{part}^{{{m}}}" if m > 9 else f"{part}^{m}" if m > 1 else part)
    return "(" + "".join(bits) + ")"


def _classical(classical_type: str) -> tuple[str, int]:
    m = re.match(r"^([ABCD])(\d+)$", classical_type.strip().upper())
    if not m:
        raise PartitionError(f"not a classical type: {classical_type!r}")
    kind, n = m.group(1), int(m.group(2))
    size = {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[kind]
    return kind, size


def _is_c(parts) -> bool:
    return all(m % 2 == 0 for p, m in _mults(parts).items() if p % 2)


def _is_bd(parts) -> bool:
    return all(m % 2 == 0 for p, m in _mults(parts).items() if p % 2 == 0)


def check_partition(classical_type: str, parts: Sequence[int]) -> Partition:
    kind, size = _classical(classical_type)
    lam = normalize(parts)
    if sum(lam) != size:
        raise PartitionError(f"{format_partition(lam)} is not a partition of {size}")
    if kind == "C" and not _is_c(lam):
        raise PartitionError(f"{format_partition(lam)}: odd parts must have even multiplicity (type C)")
    if kind in "BD" and not _is_bd(lam):
        raise PartitionError(f"{format_partition(lam)}: even parts must have even multiplicity (type {kind})")
    return lam


def orbit_dim_partition(classical_type: str, parts: Sequence[int]) -> int:
    kind, size = _classical(classical_type)
    lam = check_partition(classical_type, parts)
    sq = sum(x * x for x in transpose(lam))
    odd = sum(1 for p in lam if p % 2)
    if kind == "A":
        return size * size - sq
    if kind == "C":
        n = size // 2
        return 2 * n * n + n - (sq + odd) // 2
    return (size * size - size) // 2 - (sq - odd) // 2


def is_special(classical_type: str, parts: Sequence[int]) -> bool:
    kind, _ = _classical(classical_type)
    lam = check_partition(classical_type, parts)
    t = transpose(lam)
    if kind == "A":
        return True
    if kind == "B":
        return _is_bd(t)
    return _is_c(t)


def classical_partitions(classical_type: str) -> list[Partition]:
    kind, size = _classical(classical_type)
    out = []
    for lam in partitions(size):
        if kind == "C" and not _is_c(lam):
            continue
        if kind in "BD" and not _is_bd(lam):
            continue
        out.append(lam)
    return out


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


@dataclass(frozen=True)
class LeviOrbit:
    parts: tuple[Partition, ...]
    special: bool
    half_dim: int

    @property
    def label(self) -> str:
        inner = "|".join(format_partition(p)[1:-1] for p in self.parts)
        return f"({inner})"

    def __str__(self) -> str:
        return self.label if self.special else f"**{self.label}**"


def levi_factors(levi_type: str) -> list[str]:
    if levi_type in ("", "0"):
        return []
    return [f.strip().upper() for f in levi_type.split("+")]


def enumerate_levi_orbits(levi_type: str, target_half_dim: int) -> list[LeviOrbit]:
    """Tuples of partitions, one per factor, whose half dimensions add up to the target."""
    if target_half_dim is None or target_half_dim < 0:
        return []
    factors = levi_factors(levi_type)
    options = []
    for f in factors:
        opts = []
        for lam in classical_partitions(f):
            d = orbit_dim_partition(f, lam)
            opts.append((lam, d // 2, is_special(f, lam)))
        options.append(opts)
    out = []
    for combo in itertools.product(*options):
        if sum(c[1] for c in combo) == target_half_dim:
            out.append(LeviOrbit(tuple(c[0] for c in combo), all(c[2] for c in combo), target_half_dim))
    out.sort(key=lambda o: o.parts, reverse=True)
    return out


# ---------------------------------------------------------------------------
# closure order


@lru_cache(maxsize=None)
def _g2_closure() -> tuple[tuple[str, str], ...]:
    text = resources.files("unfoldkit.data").joinpath("g2_closure.txt").read_text(encoding="utf-8")
    rels = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lo, hi = (s.strip() for s in line.split("<"))
            rels.append((lo, hi))
    return tuple(rels)


G2_SPECIAL = {"0": True, "A1": False, "Ã1": True, "G2(a1)": True, "G2": True}


def _totally_ordered(elements, leq) -> bool:
    return all(leq(a, b) or leq(b, a) for a, b in itertools.combinations(elements, 2))


def poset_totally_ordered(simple_type: str, specials_only: bool = False) -> bool:
    t = simple_type.strip().upper()
    if t == "G2":
        rels = _g2_closure()
        nodes = sorted({x for r in rels for x in r})
        up = {n: {n} for n in nodes}
        changed = True
        while changed:
            changed = False
            for lo, hi in rels:
                new = up[hi] - up[lo]
                if new:
                    up[lo] |= new
                    changed = True
        if specials_only:
            nodes = [n for n in nodes if G2_SPECIAL[n]]
        return _totally_ordered(nodes, lambda a, b: b in up[a])
    parts = classical_partitions(t)
    if specials_only:
        parts = [p for p in parts if is_special(t, p)]
    return _totally_ordered(parts, lambda a, b: dominates(b, a))
