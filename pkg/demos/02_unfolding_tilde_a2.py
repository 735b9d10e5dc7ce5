"""Unfold the coefficient attached to the orbit with diagram 0002 along P1.

Lists the double cosets P1 \\ F4 / P_O, the split of U_O by the longest
representative, and checks dim pi + dim tau = dim L + dim V on it.
"""
from unfoldkit import dimeq, orbits, unfold
from unfoldkit.rootsys import build_root_system, root_str

f4 = build_root_system("F4")
o = orbits.get_orbit("F4", "At2")
print(f"orbit {o.label}: diagram {o.diagram_str}, dim {o.dim_orbit}, stabilizer {o.stabilizer_type}")

for i in range(1, 5):
    reps = unfold.double_coset_reps(f4, i, o)
    print(f"P{i}: {len(reps)} double cosets, lengths {[w.length for w in reps]}")

w0 = unfold.double_coset_reps(f4, 1, o)[-1]
d = unfold.coset_datum(f4, w0, 1, o)
print()
print("longest representative", d.word)
print("  U_O roots kept positive:", " ".join(root_str(r) for r in d.u_upper))
print("  U_O roots sent negative:", " ".join(root_str(r) for r in d.u_lower))

tau = dimeq.dim_tau("F4", o, 1)
dim_pi, dim_l = 6, 9
print()
print(f"dim pi + dim tau = {dim_pi} + {tau} = {dim_pi + tau}")
print(f"dim L + dim V    = {dim_l} + {len(d.u_upper)} = {dim_l + len(d.u_upper)}")
print("open orbit identity:", unfold.open_orbit_check(d, dim_pi, tau, dim_l))
print("special case for P4:", unfold.special_case(f4, 4, o))
