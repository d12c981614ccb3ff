"""Undirected simple graphs, metric invariants and graph6 / edge-list I/O."""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

INF = math.inf


class GraphError(ValueError):
    """Base class for invalid graph input."""


class VertexRangeError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class Graph6Error(GraphError):
    pass


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    Neighbour lists are sorted ascending and a per-vertex bitmask row is kept
    alongside for constant-time adjacency queries.
    """

    __slots__ = ("n", "adj", "edges", "_rows", "_hash")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        self.n = n
        self.adj = tuple(tuple(sorted(nb)) for nb in adj)
        self.edges = tuple((u, v) for u in range(n) for v in self.adj[u] if u < v)
        rows = []
        for nb in self.adj:
            r = 0
            for v in nb:
                r |= 1 << v
            rows.append(r)
        self._rows = tuple(rows)
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return from_edge_list(n, edges)

    # queries ------------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def rows(self) -> tuple[int, ...]:
        """Adjacency bitmask per vertex (bit ``v`` of ``rows[u]`` set iff uv is an edge)."""
        return self._rows

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adj]

    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else ``None``."""
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n), dtype=float)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for v, nb in enumerate(self.adj):
            adj[perm[v]] = [perm[w] for w in nb]
        return Graph(self.n, adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a :class:`Graph`, rejecting loops, repeated edges and bad endpoints."""
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise DuplicateEdgeError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


# ---------------------------------------------------------------------------
# metrics


@dataclass(frozen=True)
class GraphMetrics:
    degree_sequence: tuple[int, ...]
    is_regular: bool
    degree: int | None
    girth: float
    diameter: float
    is_connected: bool
    is_bipartite: bool


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``inf`` for a forest.

    A BFS from every vertex; a non-tree edge ``uw`` met from root ``r`` closes
    a closed walk of length ``dist[u] + dist[w] + 1`` through ``r`` that
    contains a cycle no longer than that, and the shortest cycle is met
    exactly from any of its own vertices.
    """
    best = INF
    n = g.n
    adj = g.adj
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    c = dist[u] + dist[w] + 1
                    if c < best:
                        best = c
        if best == 3:
            break
    return best


def eccentricity(g: Graph, v: int) -> float:
    return max(bfs_distances(g, v))


def diameter(g: Graph) -> float:
    """Largest BFS eccentricity, ``inf`` for a disconnected graph."""
    best = 0
    for v in range(g.n):
        e = eccentricity(g, v)
        if e == INF:
            return INF
        best = max(best, e)
    return best


def is_connected(g: Graph) -> bool:
    return INF not in bfs_distances(g, 0)


def bipartition(g: Graph) -> list[int] | None:
    """Two-colouring of the vertices, or ``None`` if an odd cycle exists."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return colour


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def metrics(g: Graph) -> GraphMetrics:
    degs = g.degrees()
    d = g.regular_degree()
    return GraphMetrics(
        degree_sequence=tuple(sorted(degs, reverse=True)),
        is_regular=d is not None,
        degree=d,
        girth=girth(g),
        diameter=diameter(g),
        is_connected=is_connected(g),
        is_bipartite=is_bipartite(g),
    )


def degree_counts(g: Graph) -> Counter:
    return Counter(g.degrees())


# ---------------------------------------------------------------------------
# graph6


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    """graph6 string (no header, no newline)."""
    bits = []
    rows = g.rows
    for j in range(1, g.n):
        for i in range(j):
            bits.append(rows[i] >> j & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k : k + 6]:
            x = (x << 1) | b
        body.append(chr(x + 63))
    return _encode_n(g.n) + "".join(body)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = []
    for ch in s:
        c = ord(ch)
        if c < 63 or c > 126:
            raise Graph6Error(f"byte {c!r} outside the printable graph6 range 63..126")
        data.append(c - 63)
    if data[0] == 63:
        if len(data) >= 2 and data[1] == 63:
            if len(data) < 8:
                raise Graph6Error("truncated 8-byte length header")
            n = 0
            for x in data[2:8]:
                n = (n << 6) | x
            pos = 8
        else:
            if len(data) < 4:
                raise Graph6Error("truncated 4-byte length header")
            n = (data[1] << 12) | (data[2] << 6) | data[3]
            pos = 4
    else:
        n = data[0]
        pos = 1
    if n < 1:
        raise Graph6Error("graph6 encodes zero vertices")
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    return from_edge_list(n, edges)


def read_graph6_file(path) -> list[Graph]:
    with open(path) as fh:
        return [decode_graph6(line) for line in fh if line.strip()]


def write_graph6_file(path, graphs: Iterable[Graph], append: bool = False) -> None:
    with open(path, "a" if append else "w") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")


# ---------------------------------------------------------------------------
# plain edge-list text ("n m" header then one "u v" pair per line)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge-list header must be 'n m'")
    n, m = int(rows[0][0]), int(rows[0][1])
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header declares {m} edges, found {len(body)}")
    edges = []
    for r in body:
        if len(r) != 2:
            raise GraphError(f"bad edge line: {' '.join(r)!r}")
        edges.append((int(r[0]), int(r[1])))
    return from_edge_list(n, edges)
