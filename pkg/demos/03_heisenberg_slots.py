"""Heisenberg structure of the unipotent radicals of P1 and P4 in F4."""
from fractions import Fraction

from unfoldkit import heis
from unfoldkit.chevalley import structure_constants
from unfoldkit.rootsys import build_root_system, root_str

f4 = build_root_system("F4")
table = structure_constants(f4)
u1 = [r for r in f4.positive_roots if r[0] > 0]
u4 = [r for r in f4.positive_roots if r[3] > 0]

count, _ = heis.admissible_orderings(f4, u1, "2342", table)
print(f"U(P1): {len(u1)} roots, center 2342, {count} admissible orderings")
tgt = heis.build_projection(f4, table, u1, heis.P1_ORDERING, "2342")
print(tgt.slot_table())

print()
print("U(P4) center:", " ".join(root_str(r) for r in heis.center_roots(f4, u4)))
for z in ("0122", "1232", "2342"):
    print(f"  functional {z}: general position {heis.general_position_center(f4, table, u4, {z: 1})}")
ell = {"0122": 1, "2342": 1}
print(f"  functional 0122 + 2342: general position {heis.general_position_center(f4, table, u4, ell)}")

tgt = heis.build_projection(f4, table, u4, heis.P4_Z17_ORDERING, ell)
s = [Fraction(k) for k in (1, 2, 3, 4)]
h = tgt.project(list(zip(("1221", "1231", "0111", "0121"), s)))
print(f"  l(x1221(1) x1231(2) x0111(3) x0121(4)) = (x|y|z) with y = {tuple(map(str, h.y))}")
