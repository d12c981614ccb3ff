"""Explicit constructions of maximal regular graphs."""

from __future__ import annotations

from .fields import FiniteField, NotPrimePowerError, field_of_order, prime_power, projective_points
from .graph import Graph, from_edge_list


def complete_graph(d: int) -> Graph:
    """K_{d+1}: the girth-3 / diameter-1 maximal graph, AC = d + 1."""
    if d < 2:
        raise ValueError("d must be >= 2")
    n = d + 1
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(d: int) -> Graph:
    """K_{d,d}: girth-4 maximal, AC = d."""
    if d < 2:
        raise ValueError("d must be >= 2")
    return from_edge_list(2 * d, [(u, d + v) for u in range(d) for v in range(d)])


def modified_bipartite(d: int) -> Graph:
    """K_{d,d} minus a perfect matching plus two apex vertices, one per side.

    d-regular on 2d + 2 vertices, diameter 3, AC = d - 1.
    """
    if d < 3:
        raise ValueError("d must be >= 3")
    edges = [(u, d + v) for u in range(d) for v in range(d) if u != v]
    x, y = 2 * d, 2 * d + 1
    edges += [(x, u) for u in range(d)]
    edges += [(y, d + v) for v in range(d)]
    return from_edge_list(2 * d + 2, edges)


def bethe_tree(K: int, d: int, rooted_at: str = "vertex") -> Graph:
    """Moore tree with K levels, vertices numbered in BFS order.

    ``rooted_at="vertex"``: a root of degree d, every internal vertex of
    degree d, leaves at depth K - 1.  ``rooted_at="edge"``: two adjacent
    centres, each with d - 1 subtrees reaching depth K - 1 from it.
    """
    if K < 1 or d < 3:
        raise ValueError("need K >= 1 and d >= 3")
    if rooted_at == "vertex":
        edges = []
        frontier = [0]
        nxt = 1
        for depth in range(K - 1):
            new = []
            for v in frontier:
                for _ in range(d if depth == 0 else d - 1):
                    edges.append((v, nxt))
                    new.append(nxt)
                    nxt += 1
            frontier = new
        return from_edge_list(nxt, edges)
    if rooted_at == "edge":
        edges = [(0, 1)]
        frontier = [0, 1]
        nxt = 2
        for _ in range(K - 1):
            new = []
            for v in frontier:
                for _ in range(d - 1):
                    edges.append((v, nxt))
                    new.append(nxt)
                    nxt += 1
            frontier = new
        return from_edge_list(nxt, edges)
    raise ValueError(f"rooted_at must be 'vertex' or 'edge', got {rooted_at!r}")


def bethe_tree_order(K: int, d: int) -> int:
    return 1 + d * sum((d - 1) ** j for j in range(K - 1))


def tree_leaves(K: int, d: int) -> list[int]:
    """Leaf indices of ``bethe_tree(K, d)`` (the last level in BFS order)."""
    n = bethe_tree_order(K, d)
    if K == 1:
        return [0]
    return list(range(n - d * (d - 1) ** (K - 2), n))


def _field(q: int) -> FiniteField:
    if prime_power(q) is None:
        raise NotPrimePowerError(f"{q} is not a prime power")
    return field_of_order(q)


def pg_incidence_graph(q: int) -> Graph:
    """Point-line incidence graph of PG(2, q): lines first, then points.

    (q+1)-regular, bipartite, girth 6, diameter 3, AC = (q+1) - sqrt(q).
    """
    F = _field(q)
    pts = projective_points(F)
    N = len(pts)
    edges = [(i, N + j) for i, L in enumerate(pts) for j, P in enumerate(pts) if F.dot(L, P) == 0]
    return from_edge_list(2 * N, edges)


def pg_minus_triples(F: FiniteField) -> list[tuple[int, int, int]]:
    return [(1, b, c) for b in F.elements for c in F.elements if (b, c) != (0, 0)]


def pg_minus_graph(q: int) -> Graph:
    """Subgraph of PG(2, q) on lines and points ``(1, b, c)`` with ``(b, c) != 0``.

    q-regular, bipartite, 2q^2 - 2 vertices, girth 6, diameter 4, AC = q - sqrt(q).
    """
    if q < 3:
        raise ValueError("q must be >= 3")
    F = _field(q)
    tr = pg_minus_triples(F)
    N = len(tr)
    edges = [(i, N + j) for i, L in enumerate(tr) for j, P in enumerate(tr) if F.dot(L, P) == 0]
    return from_edge_list(2 * N, edges)


FAMILIES = {
    "complete": complete_graph,
    "bipartite": complete_bipartite,
    "modified-bipartite": modified_bipartite,
    "pg": pg_incidence_graph,
    "pg-minus": pg_minus_graph,
    "bethe-tree": bethe_tree,
}


def named_graph(name: str) -> Graph:
    """Load one of the bundled reference graphs (``maxac/data/<name>.g6``)."""
    from importlib import resources

    from .graph import decode_graph6

    path = resources.files("maxac") / "data" / f"{name}.g6"
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise KeyError(f"no bundled graph named {name!r}") from None
    return decode_graph6(text)


def named_graphs() -> list[str]:
    from importlib import resources

    return sorted(p.name[:-3] for p in (resources.files("maxac") / "data").iterdir() if p.name.endswith(".g6"))
