"""
Graphs, graph6 records and generators
=====================================

Every graph is a tuple of neighbourhood bitmasks.  graph6 is the only
interchange format.
"""
from fractions import Fraction

from mis_hitter import GeneratorSpec, all_graphs_stream, complement, generate, parse_graph6, to_graph6

# The 5-cycle 0-1-2-3-4-0 is "Dhc" in graph6
c5 = parse_graph6("Dhc")
print("C5 edges:", c5.edges())
print("round trip:", to_graph6(c5))

# Its complement is again a 5-cycle, visiting 0,2,4,1,3
print("complement edges:", complement(c5).edges())

# The Petersen graph as the Kneser graph K(5,2)
petersen = generate(GeneratorSpec("kneser", (5, 2)))
print("Petersen:", to_graph6(petersen), petersen.num_edges, "edges")

# Random graphs take an exact rational edge probability and a seed
g = generate(GeneratorSpec("random", (8,), Fraction(1, 2), seed=42))
print("G(8,1/2), seed 42:", to_graph6(g))

# Exhaustive labelled streams, for n <= 7
print("labelled graphs on 4 vertices:", sum(1 for _ in all_graphs_stream(4)))
