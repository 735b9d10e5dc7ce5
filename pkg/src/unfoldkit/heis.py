"""Heisenberg quotients of unipotent radicals.

A Heisenberg target is an ordering ``beta_1, ..., beta_2n`` of the roots of
``U/Z`` in which ``beta_{2n+1-i}`` is the partner of ``beta_i`` with respect
to the center functional.  Slot ``i <= n`` is ``x_i`` and slot ``n + j`` is
``y_j``; ``x_i`` pairs with ``y_{n+1-i}``.  The group law on
``H_{2n+1}`` is

    (x1|y1|z1)(x2|y2|z2) = (x1+x2 | y1+y2 | z1+z2 + (x1.y2 - y1.x2)/2)

with ``x.y = sum_i x_i y_{n+1-i}``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .chevalley import StructureConstantTable, collect, inverse_word
from .rootsys import Root, RootSystem, parse_root, root_str


class HeisenbergError(ValueError):
    pass


def _roots(system: RootSystem, roots: Iterable) -> list[Root]:
    return [parse_root(r, system.rank) if isinstance(r, str) else tuple(r) for r in roots]


def _functional(system: RootSystem, ell) -> dict[Root, Fraction]:
    if isinstance(ell, (str, tuple)):
        ell = {ell: 1}
    return {(parse_root(r, system.rank) if isinstance(r, str) else tuple(r)): Fraction(c) for r, c in ell.items()}


def center_roots(system: RootSystem, u_roots: Iterable) -> list[Root]:
    """Roots of U that add to no root of U."""
    u = _roots(system, u_roots)
    uset = set(u)
    return [c for c in u if not any(system.add(c, a) in uset for a in u)]


def quotient_roots(system: RootSystem, u_roots: Iterable) -> list[Root]:
    u = _roots(system, u_roots)
    z = set(center_roots(system, u))
    return [r for r in u if r not in z]


def pair_roots(system: RootSystem, u_roots: Iterable, center_root) -> list[tuple[Root, Root]]:
    """Partner of each root of U/Z with respect to a central root."""
    u = _roots(system, u_roots)
    c = _roots(system, [center_root])[0]
    z = set(center_roots(system, u))
    if c not in z:
        raise HeisenbergError(f"{root_str(c)} is not a central root")
    q = [r for r in u if r not in z]
    qset = set(q)
    pairs, bad = [], []
    for a in q:
        b = tuple(x - y for x, y in zip(c, a))
        if b in qset:
            pairs.append((a, b))
        else:
            bad.append(a)
    if bad:
        raise HeisenbergError(
            f"no partner with respect to {root_str(c)} for: " + ", ".join(map(root_str, bad))
        )
    return pairs


def _partner_map(system: RootSystem, table: StructureConstantTable | None, q: list[Root], ell) -> dict[Root, Root]:
    """Partner map for a general center functional: the unique root of U/Z
    pairing nontrivially with a under l([.,.])."""
    out = {}
    for a in q:
        hits = []
        for b in q:
            s = system.add(a, b)
            if s is not None and ell.get(s, 0):
                hits.append(b)
        if len(hits) != 1:
            raise HeisenbergError(f"{root_str(a)} has {len(hits)} partners under the center functional")
        out[a] = hits[0]
    return out


def _leq(a: Root, b: Root) -> bool:
    return all(x <= y for x, y in zip(a, b))


def admissible_orderings(
    system: RootSystem,
    u_roots: Iterable,
    center,
    table: StructureConstantTable | None = None,
    limit: int | None = None,
) -> tuple[int, list[list[Root]]]:
    """Count symmetric orderings of U/Z refining the coefficientwise order,
    an ordering and its reversal (x and y exchanged) counted once.

    ``center`` is a central root or a functional on central roots.  Returns
    (count, orderings) with at most ``limit`` orderings listed.
    """
    u = _roots(system, u_roots)
    ell = _functional(system, center)
    if len(ell) == 1:
        pair_roots(system, u, next(iter(ell)))
    z = set(center_roots(system, u))
    q = [r for r in u if r not in z]
    partner = _partner_map(system, table, q, ell)
    n = len(q) // 2
    every: list[tuple[Root, ...]] = []

    def extend(prefix: list[Root], used: set[Root]) -> None:
        if len(prefix) == n:
            every.append(tuple(prefix + [partner[a] for a in reversed(prefix)]))
            return
        for a in q:
            if a in used or partner[a] in used:
                continue
            # every root below a must already be placed
            if all(b in used for b in q if b != a and _leq(b, a)):
                used.add(a)
                prefix.append(a)
                extend(prefix, used)
                prefix.pop()
                used.discard(a)

    extend([], set())
    # reversing an ordering exchanges x and y; both give the same target, so
    # such pairs are counted once
    key = system.order_key
    seen = set(every)
    kept = [o for o in every if o[::-1] not in seen or [key(r) for r in o] < [key(r) for r in o[::-1]]]
    return len(kept), [list(o) for o in (kept if limit is None else kept[:limit])]


# ---------------------------------------------------------------------------
# the group H_{2n+1}


@dataclass(frozen=True)
class HElement:
    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]
    z: Fraction

    @staticmethod
    def dot(x, y) -> Fraction:
        n = len(x)
        return sum((x[i] * y[n - 1 - i] for i in range(n)), Fraction(0))

    def __mul__(self, o: "HElement") -> "HElement":
        x = tuple(a + b for a, b in zip(self.x, o.x))
        y = tuple(a + b for a, b in zip(self.y, o.y))
        z = self.z + o.z + (self.dot(self.x, o.y) - self.dot(self.y, o.x)) / 2
        return HElement(x, y, z)

    def inverse(self) -> "HElement":
        return HElement(tuple(-a for a in self.x), tuple(-a for a in self.y), -self.z)

    @classmethod
    def identity(cls, n: int) -> "HElement":
        zero = tuple(Fraction(0) for _ in range(n))
        return cls(zero, zero, Fraction(0))

    def __str__(self) -> str:
        f = lambda v: ",".join(str(a) for a in v)
        return f"({f(self.x)}|{f(self.y)}|{self.z})"


@dataclass
class HeisenbergTarget:
    system: RootSystem
    table: StructureConstantTable
    u_roots: tuple[Root, ...]
    ordering: tuple[Root, ...]
    center_functional: dict[Root, Fraction]
    scales: dict[Root, Fraction]  # coordinate of l(x_b(1)) in its slot

    @property
    def n(self) -> int:
        return len(self.ordering) // 2

    @property
    def x_slots(self) -> list[tuple[Root, Fraction]]:
        return [(b, 1 / self.scales[b]) for b in self.ordering[: self.n]]

    @property
    def y_slots(self) -> list[tuple[Root, Fraction]]:
        """(root, c) with y_j(r) the image of x_root(c r)."""
        return [(b, 1 / self.scales[b]) for b in self.ordering[self.n:]]

    @property
    def center(self) -> list[Root]:
        return sorted(set(self.u_roots) - set(self.ordering), key=lambda r: (sum(r), r))

    def _slot_word(self, coords: Mapping[Root, Fraction]) -> list:
        return [(b, coords[b]) for b in self.ordering if coords.get(b)]

    def project(self, word) -> HElement:
        """l(u) for a word in the root subgroups of U."""
        nf = collect(self.table, word)
        coords = {r: c for r, c in nf if r in self.scales}
        slot = self._slot_word(coords)
        central = collect(self.table, inverse_word(slot) + list(nf))
        zset = set(self.center)
        zval = Fraction(0)
        for r, c in central:
            if r not in zset:
                raise HeisenbergError(f"{root_str(r)} survives in the central part")
            zval += self.center_functional.get(r, 0) * c
        n = self.n
        x = tuple(coords.get(b, Fraction(0)) * self.scales[b] for b in self.ordering[:n])
        y = tuple(coords.get(b, Fraction(0)) * self.scales[b] for b in self.ordering[n:])
        return HElement(x, tuple(Fraction(0) for _ in x), Fraction(0)) * HElement(
            tuple(Fraction(0) for _ in x), y, zval
        )

    def preimage(self, h: HElement) -> list:
        """A word mapping to h: the slot product times a central correction."""
        word = []
        for b, v in zip(self.ordering, h.x + h.y):
            if v:
                word.append((b, v / self.scales[b]))
        got = self.project(word) if word else HElement.identity(self.n)
        dz = h.z - got.z
        if dz:
            c, lc = next((r, v) for r, v in self.center_functional.items() if v)
            word.append((c, dz / lc))
        return word

    def slot_table(self) -> str:
        rows = []
        for k, b in enumerate(self.ordering):
            name = f"x{k + 1}" if k < self.n else f"y{k - self.n + 1}"
            rows.append(f"{name:>4}  {root_str(b)}  scale {self.scales[b]}")
        zs = " + ".join(f"{c}*{root_str(r)}" for r, c in self.center_functional.items())
        rows.append(f"   z  {zs}")
        return "\n".join(rows)


def build_projection(
    system: RootSystem,
    table: StructureConstantTable,
    u_roots: Iterable,
    ordering: Sequence,
    center_functional,
    check: bool = True,
    probes: int = 12,
    seed: int = 0,
) -> HeisenbergTarget:
    u = tuple(_roots(system, u_roots))
    order = tuple(_roots(system, ordering))
    ell = _functional(system, center_functional)
    z = set(center_roots(system, u))
    q = [r for r in u if r not in z]
    if sorted(order) != sorted(q):
        raise HeisenbergError("ordering must list each root of U/Z exactly once")
    for r in ell:
        if r not in z:
            raise HeisenbergError(f"{root_str(r)} is not central")
    n2 = len(order)
    if n2 % 2:
        raise HeisenbergError("U/Z has odd dimension")
    n = n2 // 2
    # a functional on several central roots comes with explicit slot data,
    # verified by the homomorphism check instead of the order test
    for i in range(n2 if len(ell) == 1 else 0):
        for j in range(i + 1, n2):
            if _leq(order[j], order[i]):
                raise HeisenbergError(
                    f"ordering puts {root_str(order[i])} before the smaller root {root_str(order[j])}"
                )
    scales: dict[Root, Fraction] = {}
    for i in range(n):
        a, b = order[i], order[n2 - 1 - i]
        s = system.add(a, b)
        val = ell.get(s, 0) * table.N(a, b) if s is not None else 0
        if not val:
            raise HeisenbergError(f"{root_str(a)} and {root_str(b)} do not pair under the center functional")
        scales[a] = Fraction(1)
        scales[b] = Fraction(val)
    target = HeisenbergTarget(system, table, u, order, ell, scales)
    if check:
        verify_projection(target, probes=probes, seed=seed)
    return target


def verify_projection(target: HeisenbergTarget, probes: int = 12, seed: int = 0) -> None:
    """Homomorphism check on slot pairs and random words."""
    order = target.ordering
    n2 = len(order)
    for i in range(n2):
        for j in range(n2):
            if i == j:
                continue
            a, b = order[i], order[j]
            r, s = Fraction(2), Fraction(3)
            lhs = target.project([(a, r), (b, s)])
            rhs = target.project([(a, r)]) * target.project([(b, s)])
            if lhs != rhs:
                raise HeisenbergError(f"not a homomorphism on ({root_str(a)}, {root_str(b)})")
    rng = random.Random(seed)
    roots = list(target.u_roots)
    for _ in range(probes):
        w1 = [(rng.choice(roots), Fraction(rng.randint(-5, 5), rng.randint(1, 3))) for _ in range(4)]
        w2 = [(rng.choice(roots), Fraction(rng.randint(-5, 5), rng.randint(1, 3))) for _ in range(4)]
        if target.project(w1 + w2) != target.project(w1) * target.project(w2):
            raise HeisenbergError("not a homomorphism on a random pair of words")


def skew_form(system: RootSystem, table: StructureConstantTable, u_roots, ell) -> tuple[list[Root], list[list[Fraction]]]:
    u = _roots(system, u_roots)
    ell = _functional(system, ell)
    z = set(center_roots(system, u))
    q = [r for r in u if r not in z]
    m = []
    for a in q:
        row = []
        for b in q:
            s = system.add(a, b)
            row.append(ell.get(s, Fraction(0)) * table.N(a, b) if s is not None else Fraction(0))
        m.append(row)
    return q, m


def general_position_center(system: RootSystem, table: StructureConstantTable, u_roots, ell) -> bool:
    """Nondegeneracy of (x, y) -> l([x, y]) on U/Z."""
    import sympy

    q, m = skew_form(system, table, u_roots, ell)
    if not q:
        return True
    return sympy.Matrix(m).rank() == len(q)


# ---------------------------------------------------------------------------
# named orderings used by the worked examples

P1_ORDERING = (
    "1000", "1100", "1110", "1120", "1111", "1220", "1121",
    "1221", "1122", "1231", "1222", "1232", "1242", "1342",
)
# ordering used for the Weil-representation identities of the A1/P4 case
P1_ORDERING_ALT = (
    "1000", "1100", "1110", "1120", "1220", "1111", "1121",
    "1221", "1231", "1122", "1222", "1232", "1242", "1342",
)
# ordering compatible with the 14x14 matrices of the varpi_3 embedding
P1_ORDERING_VARPI = (
    "1000", "1100", "1110", "1111", "1120", "1121", "1122",
    "1220", "1221", "1222", "1231", "1232", "1242", "1342",
)
P4_Z4_ORDERING = ("0001", "0011", "0111", "1111", "0121", "1121", "1221", "1231")
P4_Z17_ORDERING = ("0001", "0011", "1111", "1121", "1221", "1231", "0111", "0121")
