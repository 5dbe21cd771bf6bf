"""
The family of maximum independent sets
======================================

h(G) is the transversal number of this family.  The fractional version is
solved exactly in rationals, and comes with a matching dual certificate.
"""
from mis_hitter import (
    enumerate_max_independent_sets,
    fractional_transversal,
    hitting_number,
    is_shattered,
    parse_graph6,
    vc_dimension,
)

c5 = parse_graph6("Dhc")
fam = enumerate_max_independent_sets(c5)
print("alpha =", fam.alpha, "members:", fam.sets)

hit = hitting_number(fam)
print("h =", hit.size, "e.g.", hit.vertices)

frac = fractional_transversal(fam)
print("tau* =", frac.total, "weights", [str(x) for x in frac.weights])
print("dual packing", [str(y) for y in frac.dual], "sums to", sum(frac.dual))

d, s = vc_dimension(fam)
ok, realizers = is_shattered(fam, s)
print("VC-dimension", d, "shattered by", s)
for trace, idx in realizers.items():
    print(f"  trace {trace} realised by member {fam.sets[idx]}")
