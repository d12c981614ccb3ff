"""Regenerate the shipped graph6 goldens.

Well-known graphs come from networkx generators (an implementation
independent of this package); the rest are transcribed edge lists.
Run from the repository root: ``python tests/data/make_goldens.py``.
"""

from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parents[2] / "src" / "maxac" / "data"

# 14-cycle plus chords ("crossing number 3H" cubic graph, diameter 4)
CROSSING_3H_CHORDS = [(0, 7), (1, 10), (2, 6), (3, 9), (4, 13), (5, 11), (8, 12)]

# quartic Hoffman graph, cospectral with the 4-cube
HOFFMAN_EDGES = [
    (0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (6, 1), (6, 3), (7, 1), (7, 4),
    (8, 2), (8, 3), (9, 2), (9, 4), (10, 3), (10, 4), (5, 11), (5, 12), (6, 11),
    (6, 13), (7, 11), (7, 14), (8, 12), (8, 13), (9, 12), (9, 14), (10, 13),
    (10, 14), (11, 15), (12, 15), (13, 15), (14, 15),
]

# quartic diameter-4 graph on 30 vertices (1-based pairs)
N30_EDGES_1 = [
    (5, 1), (9, 1), (19, 1), (27, 1), (5, 2), (6, 2), (18, 2), (29, 2), (5, 3), (8, 3),
    (17, 3), (28, 3), (5, 4), (7, 4), (16, 4), (26, 4), (10, 6), (14, 6), (24, 6),
    (10, 7), (11, 7), (23, 7), (10, 8), (13, 8), (22, 8), (10, 9), (12, 9), (21, 9),
    (15, 11), (19, 11), (29, 11), (15, 12), (16, 12), (28, 12), (15, 13), (18, 13),
    (27, 13), (15, 14), (17, 14), (26, 14), (20, 16), (24, 16), (20, 17), (21, 17),
    (20, 18), (23, 18), (20, 19), (22, 19), (25, 21), (29, 21), (25, 22), (26, 22),
    (25, 23), (28, 23), (25, 24), (27, 24), (30, 26), (30, 27), (30, 28), (30, 29),
]

# cubic diameter-5 graph on 20 vertices cospectral with the Desargues graph:
# two Moore trees (roots 0 and 10) joined leaf to leaf
DESARGUES_MATE_EDGES = [
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9),
    (4, 14), (4, 16), (5, 15), (5, 17), (6, 14), (6, 18), (7, 16), (7, 19),
    (8, 15), (8, 18), (9, 17), (9, 19), (10, 11), (10, 12), (10, 13),
    (11, 14), (11, 15), (12, 16), (12, 17), (13, 18), (13, 19),
]

# cospectral cubic D=6 pair on 42 vertices: three 10-vertex Moore trees
# (roots 0, 10, 20; leaves 4-9, 14-19, 24-29) and twelve connectors 30-41,
# each adjacent to one leaf of every tree
N42_TREES = [(r, r + i) for r in (0, 10, 20) for i in (1, 2, 3)] + [
    (r + p, r + 4 + 2 * (p - 1) + j) for r in (0, 10, 20) for p in (1, 2, 3) for j in (0, 1)
]
N42_CONNECTORS_A = [
    (4, 14, 24), (4, 16, 26), (5, 15, 25), (5, 17, 27), (6, 14, 28), (6, 18, 26),
    (7, 15, 29), (7, 19, 27), (8, 16, 29), (8, 18, 25), (9, 17, 28), (9, 19, 24),
]
# the second graph differs only in connectors 39 and 41
N42_CONNECTORS_B = N42_CONNECTORS_A[:9] + [(8, 19, 24), (9, 17, 28), (9, 18, 25)]


def _n42(connectors) -> nx.Graph:
    G = nx.Graph(N42_TREES)
    for i, leaves in enumerate(connectors):
        G.add_edges_from((30 + i, v) for v in leaves)
    return G


def _g6(G: nx.Graph) -> str:
    G = nx.convert_node_labels_to_integers(G, ordering="sorted")
    return nx.to_graph6_bytes(G, header=False).decode().strip()


def goldens() -> dict[str, str]:
    out = {}
    out["petersen"] = _g6(nx.petersen_graph())
    out["heawood"] = _g6(nx.heawood_graph())
    out["desargues"] = _g6(nx.desargues_graph())
    out["pappus"] = _g6(nx.pappus_graph())
    out["moebius_kantor"] = _g6(nx.moebius_kantor_graph())
    out["tutte_coxeter"] = _g6(nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5))
    out["cube3"] = _g6(nx.hypercube_graph(3))
    out["cube4"] = _g6(nx.hypercube_graph(4))
    out["hoffman"] = _g6(nx.Graph(HOFFMAN_EDGES))
    c14 = nx.cycle_graph(14)
    c14.add_edges_from(CROSSING_3H_CHORDS)
    out["crossing_3h"] = _g6(c14)
    out["quartic_d4_n30"] = _g6(nx.Graph([(u - 1, v - 1) for u, v in N30_EDGES_1]))
    out["desargues_mate"] = _g6(nx.Graph(DESARGUES_MATE_EDGES))
    # bipartite double cover of the dodecahedron: cubic, girth 8, diameter 6
    out["dodecahedron_cover"] = _g6(nx.tensor_product(nx.dodecahedral_graph(), nx.complete_graph(2)))
    out["cubic_d6_n42_a"] = _g6(_n42(N42_CONNECTORS_A))
    out["cubic_d6_n42_b"] = _g6(_n42(N42_CONNECTORS_B))
    return out


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    for name, s in goldens().items():
        (OUT / f"{name}.g6").write_text(s + "\n")
        print(name, s)
