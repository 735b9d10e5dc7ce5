"""Regenerate the F4 dimension table and show where it disagrees with print.

For each orbit O the dimension equation fixes dim tau for the unipotent
orbit of the Levi of P_i; the columns list the Levi orbits of that size.
"""
from unfoldkit import dimeq, orbits

rows = dimeq.generate_table("F4")
print(dimeq.render_table(rows))
print()

for r in rows:
    if r.discrepancy_note:
        o = orbits.get_orbit("F4", r.label)
        print(f"row {r.label}: {r.discrepancy_note}")
        print(f"  dim O = {o.dim_orbit} from diagram {o.diagram_str}, stabilizer {o.stabilizer_type}")
        print(f"  dim tau = dim B_C + dim O / 2 - dim U(P1) = {dimeq.dim_borel(o.stabilizer_type)} + {o.half_dim} - 15")

print()
print("trivial orbit, P1: budget", dimeq.reductive_budget("F4", 1))
for o, residual, taus in dimeq.reductive_candidates("F4", 1):
    print(f"  theta = {o.label:<6} residual {residual:>3}  tau in {[str(t) for t in taus] or '-'}")
