"""
Sampling a transversal
======================

Draw m = ceil(2 d tau* log(11 tau*)) vertices from the optimal fractional
weights; the result usually hits every maximum independent set at once.
"""
from fractions import Fraction

from mis_hitter import (
    enumerate_max_independent_sets,
    epsilon_net_sample,
    fractional_transversal,
    hitting_number,
    random_stream,
    vc_dimension,
)

for i, g in enumerate(random_stream(12, Fraction(1, 2), seed=3, count=5)):
    fam = enumerate_max_independent_sets(g)
    weights = fractional_transversal(fam)
    d, _ = vc_dimension(fam)
    if d == 0:
        print(g, "has a unique maximum independent set")
        continue
    res = epsilon_net_sample(fam, weights, d, seed=i)
    print(f"{g}: m={res.m} attempts={res.attempts} sample size={len(res.transversal)} h={hitting_number(fam).size}")
