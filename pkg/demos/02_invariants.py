"""
Classical invariants
====================

alpha, omega, chi and the induced matching number, each with a witness.
"""
from mis_hitter import GeneratorSpec, alpha, chromatic_number, generate, induced_matching_number, omega, wagon_bound

petersen = generate(GeneratorSpec("kneser", (5, 2)))

a = alpha(petersen)
w = omega(petersen)
chi = chromatic_number(petersen)
im = induced_matching_number(petersen)

print("alpha =", a.value, "witness", a.witness)
print("omega =", w.value, "witness", w.witness)
print("chi   =", chi.value, "colouring", chi.witness)
print("im    =", im.value, "edges", im.witness)

# With t = im + 1 the graph has no induced matching of size t, so chi is
# bounded by omega^(2t-2)
t = im.value + 1
print(f"chi={chi.value} <= omega^(2t-2) = {wagon_bound(w.value, t)}")
