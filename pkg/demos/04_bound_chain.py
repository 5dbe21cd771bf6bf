"""
Checking the bound chain
========================

verify_chain computes every quantity of the argument and checks each
inequality, L1 to L7.  The shattered-set witness is the combinatorial heart:
partner vertices u_i whose induced subgraph has no independent set of size t.
"""
from mis_hitter import (
    enumerate_max_independent_sets,
    generate,
    GeneratorSpec,
    parse_graph6,
    vc_dimension,
    verify_chain,
    witness_from_shattered,
)

for g6 in ["Dhc", "D??"]:
    rep = verify_chain(parse_graph6(g6))
    print(g6, rep.links, rep.notes)
    print(f"  h={rep.h} <= hw bound {rep.bound_hw} and main bound {rep.bound_main}")

petersen = generate(GeneratorSpec("kneser", (5, 2)))
fam = enumerate_max_independent_sets(petersen)
d, s = vc_dimension(fam)
w = witness_from_shattered(petersen, fam, s)
print("Petersen: shattered", w.s, "partners", w.u, f"alpha(G[u])={w.u_alpha} < t={w.t}")

# the bound values grow quickly; the base-2 reading only loosens them
rep2 = verify_chain(petersen, log_base="binary")
print("binary log main bound:", rep2.bound_main)
