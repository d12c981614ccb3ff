"""Graphs that reach the bound.

Complete graphs, the modified complete bipartite graphs, projective plane
incidence graphs and the PG(2,q) minus construction, plus the bundled
reference graphs, each certified against its constraint.
"""

from maxac.bounds import BoundConstraint, certify_maximal
from maxac.families import (
    complete_graph,
    modified_bipartite,
    named_graph,
    named_graphs,
    pg_incidence_graph,
    pg_minus_graph,
)
from maxac.iso import automorphism_group_order
from maxac.spectra import adjacency_spectrum


def show(name, g, c):
    rep = certify_maximal(g, c)
    print(f"{name:<24} n={g.n:<4} {c.label:<5} AC={rep.ac:.6f} bound={rep.bound:.6f} attained={rep.attained}")


show("K5", complete_graph(4), BoundConstraint.girth(4, 3))
for d in (3, 5, 8):
    show(f"modified K{d},{d}", modified_bipartite(d), BoundConstraint.diameter(d, 3))
for q in (2, 3, 4, 5, 7):
    show(f"PG(2,{q})", pg_incidence_graph(q), BoundConstraint.girth(q + 1, 6))
for q in (3, 4, 5):
    show(f"PG(2,{q}) minus", pg_minus_graph(q), BoundConstraint.diameter(q, 4))

# the spectrum of the minus construction: +-q, +-sqrt(q), +-1
print(adjacency_spectrum(pg_minus_graph(4)).grouped())

# bundled graphs
print(named_graphs())
for name, c in [
    ("petersen", BoundConstraint.girth(3, 5)),
    ("heawood", BoundConstraint.girth(3, 6)),
    ("tutte_coxeter", BoundConstraint.girth(3, 8)),
    ("desargues", BoundConstraint.diameter(3, 5)),
    ("desargues_mate", BoundConstraint.diameter(3, 5)),
    ("dodecahedron_cover", BoundConstraint.diameter(3, 6)),
]:
    g = named_graph(name)
    show(name, g, c)
    print("   automorphisms:", automorphism_group_order(g))
