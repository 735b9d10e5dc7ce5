"""Root systems, Weyl groups and parabolic data over the simple-root basis.

Roots are tuples of integers (coefficients on the simple roots).  Simple roots
are numbered from 1 in Bourbaki order; the E-series uses the E8 picture with
alpha2 attached to alpha4 and the chain 1-3-4-5-6-7-8.

Weyl elements are permutations of the full signed root list.  A word
``[i1, ..., ik]`` denotes ``s_i1 s_i2 ... s_ik`` and therefore acts on a root by
applying ``s_ik`` first.
"""
from __future__ import annotations

import os
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Root = tuple[int, ...]

E8_FEATURE_ENV = "UNFOLDKIT_FEATURES"
_enabled_features: set[str] = set()


def enable_feature(name: str) -> None:
    _enabled_features.add(name.lower())


def feature_enabled(name: str) -> bool:
    env = {f.strip().lower() for f in os.environ.get(E8_FEATURE_ENV, "").split(",") if f.strip()}
    return name.lower() in _enabled_features or name.lower() in env


class RootSystemError(ValueError):
    pass


# ---------------------------------------------------------------------------
# digit strings


def parse_root(text: str | Sequence[int], rank: int | None = None) -> Root:
    """'2342' -> (2, 3, 4, 2); a leading '-' negates.  Tuples pass through."""
    if not isinstance(text, str):
        return tuple(int(c) for c in text)
    s = text.strip()
    sign = 1
    if s.startswith("-"):
        sign, s = -1, s[1:]
    s = s.strip("()").replace(",", "").replace(" ", "")
    if not s.isdigit():
        raise RootSystemError(f"cannot parse root {text!r}")
    root = tuple(sign * int(c) for c in s)
    if rank is not None and len(root) != rank:
        raise RootSystemError(f"root {text!r} has {len(root)} digits, expected {rank}")
    return root


def root_str(root: Sequence[int]) -> str:
    if all(c <= 0 for c in root) and any(c < 0 for c in root):
        return "-" + "".join(str(-c) for c in root)
    return "".join(str(c) for c in root)


# ---------------------------------------------------------------------------
# Cartan data.  A[i][j] = <alpha_i, alpha_j^vee>.  Norms are scaled so every
# pairing is an integer: short roots have norm 2 in the non simply laced case.


def _path(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def _simple_cartan(kind: str, n: int) -> tuple[list[list[int]], list[int]]:
    if kind == "A":
        if not 1 <= n:
            raise RootSystemError("A_n needs n >= 1")
        return _path(n), [2] * n
    if kind == "B":
        if n < 2:
            raise RootSystemError("B_n needs n >= 2")
        a = _path(n)
        a[n - 2][n - 1] = -2
        return a, [4] * (n - 1) + [2]
    if kind == "C":
        if n < 2:
            raise RootSystemError("C_n needs n >= 2")
        a = _path(n)
        a[n - 1][n - 2] = -2
        return a, [2] * (n - 1) + [4]
    if kind == "D":
        if n < 3:
            raise RootSystemError("D_n needs n >= 3")
        a = _path(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a, [2] * n
    if kind == "G" and n == 2:
        return [[2, -1], [-3, 2]], [2, 6]
    if kind == "F" and n == 4:
        a = _path(4)
        a[1][2] = -2
        return a, [4, 4, 2, 2]
    if kind == "E" and n in (6, 7, 8):
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
        for i, j in edges:
            if i <= n and j <= n:
                a[i - 1][j - 1] = a[j - 1][i - 1] = -1
        return a, [2] * n
    raise RootSystemError(f"unknown Cartan type {kind}{n}")


_LABEL_RE = re.compile(r"^([A-GT])(\d+)$")


def _split_label(label: str) -> list[tuple[str, int]]:
    parts = []
    for piece in label.replace(" ", "").split("+"):
        m = _LABEL_RE.match(piece.upper())
        if not m:
            raise RootSystemError(f"unknown type label {label!r}")
        parts.append((m.group(1), int(m.group(2))))
    return parts


SUPPORTED = {"A": range(1, 8), "B": (3,), "C": (3,), "D": (5,), "G": (2,), "F": (4,), "E": (6,)}


def _check_supported(kind: str, n: int, strict: bool) -> None:
    if kind == "E" and n in (7, 8):
        if not feature_enabled("e8"):
            raise RootSystemError(f"{kind}{n} requires the e8 feature (--feature e8)")
        return
    if strict and n not in SUPPORTED.get(kind, ()):
        raise RootSystemError(f"unsupported type {kind}{n}")


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParabolicSpec:
    levi_simple_roots: frozenset[int]
    levi_roots: tuple[Root, ...]
    unipotent_radical_roots: tuple[Root, ...]
    levi_type: str
    torus_rank: int

    @property
    def dim_unipotent(self) -> int:
        return len(self.unipotent_radical_roots)


@dataclass(eq=False)
class RootSystem:
    label: str
    cartan: tuple[tuple[int, ...], ...]
    norms: tuple[int, ...]
    positive_roots: tuple[Root, ...] = field(init=False)

    def __post_init__(self) -> None:
        self.positive_roots = tuple(_positive_roots(self.cartan))
        self.roots = self.positive_roots + tuple(neg(r) for r in self.positive_roots)
        self.index = {r: k for k, r in enumerate(self.roots)}
        self._gram = tuple(
            tuple(self.cartan[i][j] * self.norms[j] // 2 for j in range(self.rank))
            for i in range(self.rank)
        )

    # basic data ----------------------------------------------------------
    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def type_label(self) -> str:
        return self.label

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(simple(self.rank, i) for i in range(1, self.rank + 1))

    @property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        return self.cartan

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def dim(self) -> int:
        return 2 * self.n_positive + self.rank

    @property
    def dim_borel(self) -> int:
        return self.n_positive + self.rank

    def root(self, text) -> Root:
        r = parse_root(text, self.rank)
        if r not in self.index:
            raise RootSystemError(f"{root_str(r)} is not a root of {self.label}")
        return r

    def is_root(self, r: Sequence[int]) -> bool:
        return tuple(r) in self.index

    def is_positive(self, r: Root) -> bool:
        return any(c > 0 for c in r)

    def height(self, r: Root) -> int:
        return sum(r)

    def pairing(self, a: Sequence[int], b: Sequence[int]) -> int:
        """Symmetric form, normalised so that short roots have norm 2."""
        g = self._gram
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank) for j in range(self.rank) if a[i] and b[j])

    def norm(self, a: Sequence[int]) -> int:
        return self.pairing(a, a)

    def coroot_pairing(self, a: Sequence[int], i: int) -> int:
        """<a, alpha_i^vee> for a 1-based simple index i."""
        return sum(a[j] * self.cartan[j][i - 1] for j in range(self.rank))

    def string_down(self, alpha: Root, beta: Root) -> int:
        """Largest p with beta - p*alpha a root."""
        p = 0
        while self.is_root(tuple(b - (p + 1) * a for a, b in zip(alpha, beta))):
            p += 1
        return p

    def add(self, a: Root, b: Root) -> Root | None:
        s = tuple(x + y for x, y in zip(a, b))
        return s if s in self.index else None

    # reflections ------------------------------------------------------------
    @cached_property
    def reflection_perms(self) -> tuple[tuple[int, ...], ...]:
        perms = []
        for i in range(1, self.rank + 1):
            perm = []
            for r in self.roots:
                c = self.coroot_pairing(r, i)
                img = list(r)
                img[i - 1] -= c
                perm.append(self.index[tuple(img)])
            perms.append(tuple(perm))
        return tuple(perms)

    def identity(self) -> "WeylElement":
        return WeylElement(self, tuple(range(len(self.roots))))

    def element(self, word: Iterable[int]) -> "WeylElement":
        w = self.identity()
        for i in word:
            w = w * self.s(i)
        return w

    def s(self, i: int) -> "WeylElement":
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"simple reflection index {i} out of range 1..{self.rank}")
        return WeylElement(self, self.reflection_perms[i - 1])

    @cached_property
    def longest(self) -> "WeylElement":
        w = self.identity()
        while True:
            for i in range(1, self.rank + 1):
                if w.is_positive_image(simple(self.rank, i)):
                    w = w * self.s(i)
                    break
            else:
                return w

    def order_key(self, r: Root):
        return (sum(r) if self.is_positive(r) else -sum(r), not self.is_positive(r), r)

    def sort_roots(self, roots: Iterable[Root]) -> list[Root]:
        return sorted(roots, key=lambda r: (self.height(r), r) if self.is_positive(r) else (1000 - self.height(r), r))

    def __repr__(self) -> str:
        return f"RootSystem({self.label!r})"


def simple(rank: int, i: int) -> Root:
    return tuple(1 if k == i - 1 else 0 for k in range(rank))


def neg(r: Sequence[int]) -> Root:
    return tuple(-c for c in r)


def _positive_roots(cartan) -> list[Root]:
    n = len(cartan)
    found = {simple(n, i) for i in range(1, n + 1)}
    layer = sorted(found)
    while layer:
        nxt = set()
        for a in layer:
            for i in range(n):
                e = simple(n, i + 1)
                if a == e:
                    continue
                q = 0
                while tuple(x - (q + 1) * y for x, y in zip(a, e)) in found:
                    q += 1
                p = q - sum(a[j] * cartan[j][i] for j in range(n))
                if p > 0:
                    nxt.add(tuple(x + y for x, y in zip(a, e)))
        found |= nxt
        layer = sorted(nxt)
    return sorted(found, key=lambda r: (sum(r), r))


@dataclass(frozen=True)
class WeylElement:
    system: RootSystem
    perm: tuple[int, ...]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        p = self.perm
        return WeylElement(self.system, tuple(p[k] for k in other.perm))

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for k, v in enumerate(self.perm):
            inv[v] = k
        return WeylElement(self.system, tuple(inv))

    def __call__(self, r: Sequence[int]) -> Root:
        sysm = self.system
        return sysm.roots[self.perm[sysm.index[tuple(r)]]]

    def is_positive_image(self, r: Root) -> bool:
        return self.system.is_positive(self(r))

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.perm == other.perm

    def __hash__(self) -> int:
        return hash(self.perm)

    @property
    def length(self) -> int:
        sysm = self.system
        npos = sysm.n_positive
        return sum(1 for k in range(npos) if self.perm[k] >= npos)

    def reduced_word(self, prefer: str = "min") -> list[int]:
        """Reduced word built greedily from the left; prefer='min' gives the
        lexicographically least reduced word."""
        sysm = self.system
        rng = range(1, sysm.rank + 1)
        order = list(rng) if prefer == "min" else list(reversed(rng))
        word, w = [], self
        while w.length:
            winv = w.inverse()
            for i in order:
                if not winv.is_positive_image(simple(sysm.rank, i)):
                    word.append(i)
                    w = sysm.s(i) * w
                    break
        return word


# ---------------------------------------------------------------------------


_cache: dict[str, RootSystem] = {}


def build_root_system(type_label: str, strict: bool = False) -> RootSystem:
    """Build (and cache) the root system for a label such as 'F4', 'E6', 'A1+A2'."""
    key = type_label.replace(" ", "").upper()
    if key in _cache:
        comps = _split_label(key)
        for kind, n in comps:
            _check_supported(kind, n, strict)
        return _cache[key]
    comps = _split_label(key)
    blocks = []
    for kind, n in comps:
        _check_supported(kind, n, strict)
        blocks.append(_simple_cartan(kind, n))
    rank = sum(len(a) for a, _ in blocks)
    cart = [[0] * rank for _ in range(rank)]
    norms: list[int] = []
    off = 0
    for a, d in blocks:
        for i in range(len(a)):
            for j in range(len(a)):
                cart[off + i][off + j] = a[i][j]
        norms.extend(d)
        off += len(a)
    rs = RootSystem(key, tuple(tuple(r) for r in cart), tuple(norms))
    _cache[key] = rs
    return rs


def weyl_act(system: RootSystem, word: Sequence[int], r) -> Root:
    """Image of a root under w[i1,...,ik] = s_i1 ... s_ik (rightmost first)."""
    root = system.root(r) if isinstance(r, str) else tuple(r)
    if root not in system.index:
        raise RootSystemError(f"{root_str(root)} is not a root of {system.label}")
    for i in reversed(list(word)):
        if not 1 <= i <= system.rank:
            raise RootSystemError(f"simple reflection index {i} out of range 1..{system.rank}")
        root = system.roots[system.reflection_perms[i - 1][system.index[root]]]
    return root


def weyl_group(system: RootSystem) -> dict[WeylElement, list[int]]:
    """All elements with one reduced word each (breadth first)."""
    e = system.identity()
    seen = {e: []}
    queue = deque([e])
    while queue:
        w = queue.popleft()
        word = seen[w]
        for i in range(1, system.rank + 1):
            v = w * system.s(i)
            if v not in seen:
                seen[v] = word + [i]
                queue.append(v)
    return seen


# ---------------------------------------------------------------------------
# Dynkin sub-diagrams


def classify_component(system: RootSystem, nodes: Sequence[int]) -> str:
    nodes = sorted(nodes)
    n = len(nodes)
    a = [[system.cartan[i - 1][j - 1] for j in nodes] for i in nodes]
    prods = [a[i][j] * a[j][i] for i in range(n) for j in range(i + 1, n)]
    if 3 in prods:
        return "G2"
    if 2 in prods:
        if n == 2:
            return "B2"
        norms = [system.norms[i - 1] for i in nodes]
        nlong = sum(1 for x in norms if x == max(norms))
        if n == 4 and nlong == 2:
            return "F4"
        return f"B{n}" if nlong == n - 1 else f"C{n}"
    deg = [sum(1 for j in range(n) if j != i and a[i][j]) for i in range(n)]
    if n <= 3 or max(deg) <= 2:
        return f"A{n}"
    centre = deg.index(3)
    arms = []
    for start in range(n):
        if start != centre and a[centre][start]:
            length, prev, cur = 1, centre, start
            while True:
                nbrs = [j for j in range(n) if j not in (cur, prev) and a[cur][j]]
                if not nbrs:
                    break
                prev, cur = cur, nbrs[0]
                length += 1
            arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{n}"
    return f"E{n}"


def components(system: RootSystem, nodes: Iterable[int]) -> list[list[int]]:
    left = set(nodes)
    comps = []
    while left:
        start = min(left)
        comp, stack = {start}, [start]
        while stack:
            i = stack.pop()
            for j in list(left):
                if j not in comp and system.cartan[i - 1][j - 1]:
                    comp.add(j)
                    stack.append(j)
        left -= comp
        comps.append(sorted(comp))
    return sorted(comps)


def levi_type(system: RootSystem, nodes: Iterable[int]) -> str:
    comps = components(system, nodes)
    return "+".join(classify_component(system, c) for c in comps)


def parabolic_data(system: RootSystem, levi_simple_roots: Iterable[int]) -> ParabolicSpec:
    levi = frozenset(levi_simple_roots)
    for i in levi:
        if not 1 <= i <= system.rank:
            raise RootSystemError(f"simple index {i} out of range")
    lroots, uroots = [], []
    for r in system.positive_roots:
        support = {k + 1 for k, c in enumerate(r) if c}
        (lroots if support <= levi else uroots).append(r)
    return ParabolicSpec(levi, tuple(lroots), tuple(uroots), levi_type(system, levi), system.rank - len(levi))


def maximal_parabolic(system: RootSystem, i: int) -> ParabolicSpec:
    """P_i: the maximal parabolic whose Levi omits alpha_i."""
    return parabolic_data(system, [k for k in range(1, system.rank + 1) if k != i])


def diagram_involution(system: RootSystem) -> dict[int, int]:
    """i -> j with -w_l(alpha_i) = alpha_j."""
    wl = system.longest
    out = {}
    for i in range(1, system.rank + 1):
        img = neg(wl(simple(system.rank, i)))
        out[i] = img.index(1) + 1
    return out


def associated_parabolic(system: RootSystem, levi_simple_roots: Iterable[int]) -> frozenset[int]:
    inv = diagram_involution(system)
    return frozenset(inv[i] for i in levi_simple_roots)
