"""Odd-diameter maximal graphs from two Bethe trees.

A maximal graph of diameter 2K - 1 is two K-level trees whose leaves are
joined to each other.  For cubic graphs with K = 3 that leaves 12 leaves on
each side; exhaustive completion gives five maximal graphs of diameter 5,
one of which is the Desargues graph and another its cospectral mate.
"""

from collections import Counter

from maxac.bounds import BoundConstraint, odd_diameter_exact_order
from maxac.families import named_graph
from maxac.iso import are_isomorphic
from maxac.search import double_tree_completion, double_tree_seed, verify_and_emit
from maxac.spectra import adjacency_spectrum

print("orders:", [odd_diameter_exact_order(3, K) for K in range(2, 7)])

seed = double_tree_seed(3, 3)
print("seed:", seed.n, "vertices,", seed.m, "edges")

completions = list(double_tree_completion(3, 3))
print(len(completions), "completions up to tree symmetry")

recs = list(verify_and_emit(completions, BoundConstraint.diameter(3, 5), "demo"))
des = named_graph("desargues")
for r in recs:
    g = r.graph()
    spec = adjacency_spectrum(g)
    print(r.graph6, "aut", r.aut_order, "girth", r.girth,
          "desargues" if are_isomorphic(g, des) else "",
          "cospectral" if spec.matches(adjacency_spectrum(des).grouped()) else "")

# the cube is the K = 2 case
print(Counter(are_isomorphic(g, named_graph("cube3")) for g in double_tree_completion(3, 2)))

# a stochastic run on the same seed finds the same graphs, one at a time
found = list(double_tree_completion(3, 3, mode="stochastic", attempts=20))
print(len(found), "stochastic finds,", len(list(verify_and_emit(found, BoundConstraint.diameter(3, 5)))), "distinct")
