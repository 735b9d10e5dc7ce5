"""Double cosets W_M \\ W / W_{M_O} and the data attached to each representative.

For a representative w and the parabolic P = MU:

* ``u_upper``  roots a of U_O with w a in Phi(P)   (U_O meet w^-1 P w)
* ``u_lower``  roots a of U_O with w a in Phi(U^-) (U_O meet w^-1 U^- w)
* ``u_mid``    roots a of U_O with w a in Phi(M), a subset of ``u_upper``
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .chevalley import StructureConstantTable, collect, inverse_word
from .coeffs import attach_parabolic, filtrations
from .orbits import OrbitCatalogEntry
from .rootsys import (
    Root,
    RootSystem,
    WeylElement,
    associated_parabolic,
    levi_type,
    neg,
    parse_root,
    root_str,
    simple,
)


class UnfoldError(ValueError):
    pass


def _levi_of(system: RootSystem, p) -> frozenset[int]:
    """Levi simple roots from 'P2', 2 (maximal parabolic) or an explicit set."""
    if isinstance(p, str):
        p = int(p.upper().lstrip("P"))
    if isinstance(p, int):
        if not 1 <= p <= system.rank:
            raise UnfoldError(f"no parabolic P{p} in {system.label}")
        return frozenset(k for k in range(1, system.rank + 1) if k != p)
    return frozenset(p)


def _orbit_levi(system: RootSystem, orbit) -> frozenset[int]:
    """P_O Levi from a catalog entry, a diagram (tuple or digit string), a
    maximal parabolic name, or an explicit set of simple roots."""
    if isinstance(orbit, OrbitCatalogEntry):
        orbit = orbit.diagram
    if isinstance(orbit, (set, frozenset, int)):
        return _levi_of(system, orbit)
    if isinstance(orbit, str) and orbit.upper().startswith("P"):
        return _levi_of(system, orbit)
    if isinstance(orbit, str):
        orbit = tuple(int(c) for c in orbit)
    return attach_parabolic(system, orbit)[0]


def _in_levi(root: Root, levi: frozenset[int]) -> bool:
    return all(i + 1 in levi for i, c in enumerate(root) if c)


def left_reduced(w: WeylElement, levi: Iterable[int]) -> bool:
    """w is minimal in W_levi w."""
    winv = w.inverse()
    rank = w.system.rank
    return all(winv.is_positive_image(simple(rank, i)) for i in levi)


def right_reduced(w: WeylElement, levi: Iterable[int]) -> bool:
    rank = w.system.rank
    return all(w.is_positive_image(simple(rank, j)) for j in levi)


def canonical_rep(system: RootSystem, word: Sequence[int], P_levi, PO_levi) -> WeylElement:
    """Minimal element of the double coset of w[word]."""
    I = _levi_of(system, P_levi)
    J = _orbit_levi(system, PO_levi)
    w = system.element(word)
    rank = system.rank
    changed = True
    while changed:
        changed = False
        winv = w.inverse()
        for i in I:
            if not winv.is_positive_image(simple(rank, i)):
                w = system.s(i) * w
                changed = True
                break
        else:
            for j in J:
                if not w.is_positive_image(simple(rank, j)):
                    w = w * system.s(j)
                    changed = True
                    break
    return w


def minimal_coset_reps(system: RootSystem, J: Iterable[int]) -> list[WeylElement]:
    """W^J = {w : w(alpha_j) > 0 for j in J}, grown from the identity by
    length-increasing left multiplication."""
    J = frozenset(J)
    e = system.identity()
    seen = {e}
    queue = deque([e])
    out = [e]
    while queue:
        w = queue.popleft()
        lw = w.length
        for i in range(1, system.rank + 1):
            v = system.s(i) * w
            if v in seen:
                continue
            if v.length == lw + 1 and right_reduced(v, J):
                seen.add(v)
                queue.append(v)
                out.append(v)
    return out


def double_coset_reps(system: RootSystem, P_levi, PO_levi) -> list[WeylElement]:
    """Minimal representatives of W_M \\ W / W_{M_O}, sorted by length then word."""
    I = _levi_of(system, P_levi)
    J = _orbit_levi(system, PO_levi)
    reps = [w for w in minimal_coset_reps(system, J) if left_reduced(w, I)]
    reps.sort(key=lambda w: (w.length, w.reduced_word()))
    return reps


def coset_index(reps: Sequence[WeylElement], system: RootSystem, word, P_levi, PO_levi) -> int:
    w = canonical_rep(system, word, P_levi, PO_levi)
    for k, r in enumerate(reps):
        if r == w:
            return k
    raise UnfoldError("word does not reduce to a listed representative")


@dataclass
class CosetDatum:
    w: WeylElement
    word: tuple[int, ...]
    P_levi: frozenset[int]
    PO_levi: frozenset[int]
    qw_levi_simple_roots: frozenset[int]
    u_upper: tuple[Root, ...]
    u_lower: tuple[Root, ...]
    u_mid: tuple[Root, ...]

    @property
    def length(self) -> int:
        return self.w.length

    @property
    def u_upper_strict(self) -> tuple[Root, ...]:
        mid = set(self.u_mid)
        return tuple(r for r in self.u_upper if r not in mid)

    @property
    def qw_levi_type(self) -> str:
        return levi_type(self.w.system, self.qw_levi_simple_roots)

    def as_dict(self) -> dict:
        return {
            "word": list(self.word),
            "length": self.length,
            "qw_levi": sorted(self.qw_levi_simple_roots),
            "qw_levi_type": self.qw_levi_type,
            "u_upper": [root_str(r) for r in self.u_upper],
            "u_lower": [root_str(r) for r in self.u_lower],
            "u_mid": [root_str(r) for r in self.u_mid],
        }


def coset_datum(system: RootSystem, w, P_levi, orbit, require_minimal: bool = True) -> CosetDatum:
    I = _levi_of(system, P_levi)
    J = _orbit_levi(system, orbit)
    if isinstance(w, WeylElement):
        elem = w
        word = tuple(w.reduced_word())
    else:
        word = tuple(w)
        elem = system.element(word)
    if require_minimal and not (left_reduced(elem, I) and right_reduced(elem, J)):
        raise UnfoldError(f"w{list(word)} is not minimal in its double coset")
    u_o = [r for r in system.positive_roots if not _in_levi(r, J)]
    upper, lower, mid = [], [], []
    for a in u_o:
        b = elem(a)
        if _in_levi(b, I):
            mid.append(a)
            upper.append(a)
        elif system.is_positive(b):
            upper.append(a)
        else:
            lower.append(a)
    q = frozenset(j for j in J if _in_levi(elem(simple(system.rank, j)), I))
    return CosetDatum(elem, word, I, J, q, tuple(upper), tuple(lower), tuple(mid))


def special_case(system: RootSystem, P_levi, orbit) -> bool:
    """P equals the associated parabolic of P_O; then the longest representative
    has U_{O,w} = U_O and Q_w = M_O (checked, not assumed)."""
    I = _levi_of(system, P_levi)
    J = _orbit_levi(system, orbit)
    if associated_parabolic(system, J) != I:
        return False
    reps = double_coset_reps(system, I, J)
    d = coset_datum(system, reps[-1], I, J)
    u_o = [r for r in system.positive_roots if not _in_levi(r, J)]
    return len(d.u_lower) == len(u_o) and not d.u_upper and d.qw_levi_simple_roots == J


def open_orbit_check(
    datum: CosetDatum | None,
    dim_pi: int,
    dim_tau: int,
    dim_L_nu: int,
    dim_V: int | None = None,
    theta_k: int = 0,
) -> bool:
    """dim pi + dim tau (+ dim Theta) = dim L_nu + dim V."""
    if dim_V is None:
        if datum is None:
            raise UnfoldError("dim_V is required without a coset datum")
        dim_V = len(datum.u_upper)
    for name, v in (("dim_pi", dim_pi), ("dim_tau", dim_tau), ("dim_L_nu", dim_L_nu), ("dim_V", dim_V), ("theta_k", theta_k)):
        if v < 0:
            raise UnfoldError(f"{name} must be nonnegative")
    return dim_pi + dim_tau + theta_k == dim_L_nu + dim_V


def _gen_word(system: RootSystem, gen, r) -> list:
    return [(parse_root(a, system.rank) if isinstance(a, str) else tuple(a), Fraction(c) * r) for a, c in gen]


def stabilizes_character(
    table: StructureConstantTable,
    generators: Sequence[Sequence[tuple]],
    orbit,
    psi: Mapping,
    probes: Sequence[int] = (1, 2, 3),
) -> bool:
    """Each one-parameter generator g(r) = prod x_a(c_a r) fixes psi.

    psi is a character of V^(2) read off the normal-form coefficients; the test
    runs over every root of V^(2) and the probe parameters.
    """
    system = table.system
    d = filtrations(system, orbit)
    J = d.levi_simple_roots
    ell = {(parse_root(a, system.rank) if isinstance(a, str) else tuple(a)): Fraction(c) for a, c in psi.items()}
    for gen in generators:
        for a, _ in gen:
            root = parse_root(a, system.rank) if isinstance(a, str) else tuple(a)
            if not system.is_positive(root):
                if _in_levi(root, J):
                    raise UnfoldError("negative Levi roots are not supported in generators")
                raise UnfoldError(f"x_{root_str(root)} does not normalize U_O")
    v2 = d.v_filtration.get(2, ())
    for gen in generators:
        for r in probes:
            g = _gen_word(system, gen, r)
            for a in v2:
                for t in (1, 2):
                    conj = collect(table, g + [(a, t)] + inverse_word(g))
                    val = sum((ell.get(b, 0) * c for b, c in conj), Fraction(0))
                    if val != ell.get(a, 0) * t:
                        return False
    return True


# ---------------------------------------------------------------------------
# representative words printed for F4, keyed by (parabolic, orbit label)

PRINTED_REPRESENTATIVES: dict[tuple[int, str], list[tuple[int, ...]]] = {
    (1, "Ã2"): [(), (1, 2, 3, 4), (1, 2, 3, 2, 1, 4, 3, 2, 3, 4)],
    (2, "Ã2"): [(), (2, 3, 4), (2, 1, 3, 2, 3, 4), (2, 3, 4, 2, 1, 3, 2, 3, 4),
                (2, 3, 1, 2, 3, 4, 3, 2, 1, 3, 2, 3, 4)],
    (3, "Ã2"): [(), (3, 4), (3, 2, 3, 4), (3, 2, 1, 3, 2, 3, 4), (3, 2, 1, 4, 3, 2, 3, 4),
                (3, 2, 3, 4, 3, 2, 1, 3, 2, 3, 4), (3, 2, 1, 3, 2, 3, 4, 3, 2, 1, 3, 2, 3, 4)],
    (4, "Ã2"): [(), (4,), (4, 3, 2, 3, 4), (4, 3, 2, 1, 3, 2, 3, 4),
                (4, 3, 2, 1, 3, 2, 3, 4, 3, 2, 1, 3, 2, 3, 4)],
    (1, "A1"): [(), (1,), (1, 2, 3, 2, 1), (1, 2, 3, 2, 4, 3, 2, 1),
                (1, 2, 3, 2, 1, 4, 3, 2, 1, 3, 2, 4, 3, 2, 1)],
    (2, "A1"): [(), (2, 1), (2, 3, 2, 1), (2, 3, 2, 4, 3, 2, 1), (2, 1, 3, 2, 4, 3, 2, 1),
                (2, 1, 3, 2, 1, 3, 2, 4, 3, 2, 1), (2, 3, 2, 1, 4, 3, 2, 1, 3, 2, 4, 3, 2, 1)],
    (3, "A1"): [(), (3, 2, 1), (3, 2, 4, 3, 2, 1), (3, 2, 1, 3, 2, 4, 3, 2, 1),
                (3, 2, 1, 4, 3, 2, 1, 3, 2, 4, 3, 2, 1)],
    (4, "A1"): [(), (4, 3, 2, 1), (4, 3, 2, 1, 3, 2, 4, 3, 2, 1)],
}
