"""Searches for bound-attaining regular graphs.

Three engines share this module:

* ``stochastic_search``: greedy edge addition in order of decreasing degree
  sum (random among ties), followed by removal of a few random edges when the
  pass stalls short of a regular graph.
* ``double_tree_completion``: two disjoint Bethe trees whose leaves are joined
  across, either exhaustively (backtracking) or with the stochastic engine.
* ``enumerate_regular``: all connected cubic / quartic graphs of small order,
  one per isomorphism class.
"""

from __future__ import annotations

import hashlib
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator

import numpy as np

from .bounds import BoundConstraint, certify_maximal, odd_diameter_exact_order
from .families import bethe_tree, bethe_tree_order
from .graph import Graph, decode_graph6, encode_graph6, from_edge_list, girth
from .iso import canonical_form

SEED_MODES = ("empty", "vertex-tree", "edge-tree", "double-tree")
RESTRICTIONS = ("none", "cross-leaf")


class SearchConfigError(ValueError):
    pass


class EnumerationLimitError(ValueError):
    pass


# ---------------------------------------------------------------------------
# configuration and state


@dataclass
class SearchConfig:
    """Parameters of one stochastic search.

    ``levels`` is the number of tree levels for the seeded modes.  When left
    as ``None`` the vertex tree gets ``(min_girth - 1) // 2 + 1`` levels and
    the edge tree ``min_girth // 2`` (the balls forced to be trees by the
    girth); double-tree mode needs it explicitly.

    ``wrap_escalation`` selects what happens when the removal count has
    reached ``k_max`` and the search is still stalled: ``True`` drops it back
    to 1, ``False`` keeps it at ``k_max``.
    """

    n: int
    d: int
    min_girth: int = 3
    seed_mode: str = "empty"
    levels: int | None = None
    structural_restriction: str | None = None
    rng_seed: int | None = None
    stall_window: int = 2000
    k_max: int = 8
    max_iterations: int = 10**6
    time_limit: float | None = None
    wrap_escalation: bool = True
    checkpoint: str | None = None
    progress_every: int = 0

    def __post_init__(self):
        if self.structural_restriction is None:
            self.structural_restriction = "cross-leaf" if self.seed_mode == "double-tree" else "none"

    def validate(self) -> None:
        if self.d < 2:
            raise SearchConfigError("degree must be >= 2")
        if self.n <= self.d:
            raise SearchConfigError(f"order {self.n} too small for degree {self.d}")
        if (self.n * self.d) % 2:
            raise SearchConfigError(f"n*d = {self.n * self.d} is odd; no {self.d}-regular graph on {self.n} vertices")
        if self.min_girth < 3:
            raise SearchConfigError("min_girth must be >= 3")
        if self.seed_mode not in SEED_MODES:
            raise SearchConfigError(f"seed_mode must be one of {SEED_MODES}")
        if self.structural_restriction not in RESTRICTIONS:
            raise SearchConfigError(f"structural_restriction must be one of {RESTRICTIONS}")
        if self.structural_restriction == "cross-leaf" and self.seed_mode != "double-tree":
            raise SearchConfigError("cross-leaf restriction needs the double-tree seed")
        if self.seed_mode == "double-tree":
            if self.levels is None or self.levels < 2:
                raise SearchConfigError("double-tree mode needs levels K >= 2")
            want = odd_diameter_exact_order(self.d, self.levels)
            if self.n != want:
                raise SearchConfigError(f"double-tree with d={self.d}, K={self.levels} needs n={want}, got {self.n}")
        elif self.seed_mode != "empty":
            k = self.tree_levels()
            rooted = "vertex" if self.seed_mode == "vertex-tree" else "edge"
            size = _tree_size(k, self.d, rooted)
            if size > self.n:
                raise SearchConfigError(f"seed tree has {size} vertices, more than n={self.n}")
        if self.stall_window < 1 or self.k_max < 1:
            raise SearchConfigError("stall_window and k_max must be positive")
        if self.max_iterations < 0:
            raise SearchConfigError("max_iterations must be >= 0")

    def tree_levels(self) -> int:
        if self.levels is not None:
            return self.levels
        if self.seed_mode == "edge-tree":
            return max(1, self.min_girth // 2)
        return (self.min_girth - 1) // 2 + 1

    def digest(self) -> str:
        """Stable hash of everything except the seed and the output plumbing."""
        fields_ = asdict(self)
        for key in ("rng_seed", "checkpoint", "progress_every"):
            fields_.pop(key)
        blob = json.dumps(fields_, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    def effective_seed(self) -> int:
        if self.rng_seed is not None:
            return int(self.rng_seed)
        return int(self.digest(), 16) & ((1 << 63) - 1)


def _tree_size(levels: int, d: int, rooted: str) -> int:
    if rooted == "vertex":
        return bethe_tree_order(levels, d)
    return 2 * sum((d - 1) ** j for j in range(levels))


@dataclass
class SearchState:
    """Mutable working graph.  ``seed_edges`` are never removed."""

    n: int
    d: int
    min_girth: int
    adj: list = field(default_factory=list)
    edges: set = field(default_factory=set)
    seed_edges: frozenset = frozenset()
    leaf_side: dict | None = None  # vertex -> 0/1 for the cross-leaf restriction
    best_edgecount_seen: int = 0
    iterations_since_improvement: int = 0

    @classmethod
    def empty(cls, n: int, d: int, min_girth: int) -> "SearchState":
        return cls(n, d, min_girth, [set() for _ in range(n)], set())

    @property
    def edgecount(self) -> int:
        return len(self.edges)

    @property
    def target(self) -> int:
        return self.n * self.d // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def near(self, u: int) -> set:
        """Vertices within distance ``min_girth - 2`` of ``u`` (``u`` included)."""
        radius = self.min_girth - 2
        seen = {u}
        frontier = [u]
        for _ in range(radius):
            nxt = []
            for x in frontier:
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            if not nxt:
                break
            frontier = nxt
        return seen

    def allowed_pair(self, u: int, v: int) -> bool:
        if self.leaf_side is None:
            return True
        su, sv = self.leaf_side.get(u), self.leaf_side.get(v)
        return su is not None and sv is not None and su != sv

    def edge_check(self, u: int, v: int) -> bool:
        """Adding ``uv`` keeps every degree <= d and the girth >= min_girth."""
        if u == v or self.degree(u) >= self.d or self.degree(v) >= self.d:
            return False
        if v in self.adj[u]:
            return False
        return v not in self.near(u)

    def add_edge(self, u: int, v: int) -> None:
        assert self.degree(u) < self.d and self.degree(v) < self.d
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.edges.add((u, v) if u < v else (v, u))

    def remove_edge(self, u: int, v: int) -> None:
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.edges.discard((u, v) if u < v else (v, u))

    def graph(self) -> Graph:
        return from_edge_list(self.n, self.edges)


@dataclass
class SearchOutcome:
    status: str  # "found" or "budget-exhausted"
    graph: Graph | None
    iterations: int = 0
    restarts: int = 0
    removals: int = 0
    wall_time: float = 0.0
    best_edgecount: int = 0
    seed: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


# ---------------------------------------------------------------------------
# seeds


def _seed_state(cfg: SearchConfig) -> SearchState:
    s = SearchState.empty(cfg.n, cfg.d, cfg.min_girth)
    tree_edges: list[tuple[int, int]] = []
    if cfg.seed_mode in ("vertex-tree", "edge-tree"):
        rooted = "vertex" if cfg.seed_mode == "vertex-tree" else "edge"
        tree_edges = list(bethe_tree(cfg.tree_levels(), cfg.d, rooted_at=rooted).edges)
    elif cfg.seed_mode == "double-tree":
        t = bethe_tree(cfg.levels, cfg.d)
        m = t.n
        tree_edges = list(t.edges) + [(u + m, v + m) for u, v in t.edges]
        leaves = _leaves_of(t)
        s.leaf_side = {v: 0 for v in leaves}
        s.leaf_side.update({v + m: 1 for v in leaves})
        if cfg.structural_restriction == "none":
            s.leaf_side = None
    for u, v in tree_edges:
        s.add_edge(u, v)
    s.seed_edges = frozenset(s.edges)
    s.best_edgecount_seen = s.edgecount
    return s


def _leaves_of(t: Graph) -> list[int]:
    return [v for v in range(t.n) if len(t.adj[v]) == 1] if t.n > 1 else [0]


# ---------------------------------------------------------------------------
# the greedy pass


def make_feasible_list(s: SearchState, cfg: SearchConfig | None = None) -> list[tuple[int, int]]:
    """Non-edges that could be added now without breaking degree or girth."""
    open_vertices = [v for v in range(s.n) if s.degree(v) < s.d]
    out = []
    for i, u in enumerate(open_vertices):
        blocked = s.near(u)
        for v in open_vertices[i + 1 :]:
            if v not in blocked and s.allowed_pair(u, v):
                out.append((u, v))
    return out


def sort_edges(edges: list[tuple[int, int]], s: SearchState, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Descending degree sum; a uniform random order within each tie class."""
    if not edges:
        return []
    perm = rng.permutation(len(edges))
    shuffled = [edges[i] for i in perm]
    deg = [len(a) for a in s.adj]
    return sorted(shuffled, key=lambda e: -(deg[e[0]] + deg[e[1]]))


def _greedy_pass(s: SearchState, rng: np.random.Generator) -> None:
    # the list is sorted once; EdgeCheck sees the graph as mutated during the pass
    for u, v in sort_edges(make_feasible_list(s), s, rng):
        if s.edge_check(u, v):
            s.add_edge(u, v)


def _remove_random(s: SearchState, k: int, rng: np.random.Generator) -> int:
    removable = sorted(s.edges - s.seed_edges)
    if not removable:
        return 0
    k = min(k, len(removable))
    for i in rng.choice(len(removable), size=k, replace=False):
        s.remove_edge(*removable[i])
    return k


def _progress(it: int, s: SearchState, k: int, restarts: int, stream=None) -> None:
    stream = stream or sys.stderr
    print(f"iter={it} edges={s.edgecount}/{s.target} k={k} restarts={restarts}", file=stream, flush=True)


def stochastic_search(cfg: SearchConfig, on_improve: Callable[[Graph], None] | None = None) -> SearchOutcome:
    """Greedy degree-sum-sorted edge addition with random edge removal.

    One iteration is one greedy pass over a freshly built, freshly sorted
    feasible list, followed (if the graph is still incomplete) by removing
    ``k`` random non-seed edges.  ``k`` starts at 1 and grows by one after
    every ``stall_window`` iterations without a new best edge count; it goes
    back to 1 on improvement.
    """
    cfg.validate()
    seed = cfg.effective_seed()
    root_seq = np.random.SeedSequence(seed)
    rng = np.random.Generator(np.random.Philox(root_seq.spawn(1)[0]))
    s = _seed_state(cfg)
    t0 = time.monotonic()
    k, restarts, removals, it = 1, 0, 0, 0

    def done(status: str, graph: Graph | None) -> SearchOutcome:
        return SearchOutcome(status, graph, it, restarts, removals, time.monotonic() - t0, s.best_edgecount_seen, seed)

    while it < cfg.max_iterations:
        if cfg.time_limit is not None and time.monotonic() - t0 > cfg.time_limit:
            break
        it += 1
        _greedy_pass(s, rng)
        if s.edgecount == s.target:
            g = s.graph()
            s.best_edgecount_seen = s.edgecount
            if cfg.checkpoint:
                _checkpoint(cfg.checkpoint, g)
            if cfg.progress_every:
                _progress(it, s, k, restarts)
            return done("found", g)
        if s.edgecount > s.best_edgecount_seen:
            s.best_edgecount_seen = s.edgecount
            s.iterations_since_improvement = 0
            k = 1
            if cfg.checkpoint:
                _checkpoint(cfg.checkpoint, s.graph())
            if on_improve is not None:
                on_improve(s.graph())
        else:
            s.iterations_since_improvement += 1
            if s.iterations_since_improvement >= cfg.stall_window:
                s.iterations_since_improvement = 0
                if k < cfg.k_max:
                    k += 1
                elif cfg.wrap_escalation:
                    k = 1
                    restarts += 1
                    rng = np.random.Generator(np.random.Philox(root_seq.spawn(1)[0]))
        if cfg.progress_every and it % cfg.progress_every == 0:
            _progress(it, s, k, restarts)
        removals += _remove_random(s, k, rng)
    return done("budget-exhausted", None)


def _checkpoint(path: str, g: Graph) -> None:
    with open(path, "a") as fh:
        fh.write(encode_graph6(g) + "\n")


# ---------------------------------------------------------------------------
# double trees


class _DoubleTree:
    """Two vertex-rooted Bethe trees; tree 2 occupies ``m .. 2m - 1``."""

    def __init__(self, d: int, K: int):
        self.d, self.K = d, K
        self.tree = bethe_tree(K, d)
        m = self.m = self.tree.n
        self.n = 2 * m
        self.edges = list(self.tree.edges) + [(u + m, v + m) for u, v in self.tree.edges]
        self.leaves1 = _leaves_of(self.tree)
        self.leaves2 = [v + m for v in self.leaves1]
        # ancestor chain of every tree-2 leaf, root excluded, outermost first
        parent = {}
        for u, v in self.tree.edges:
            parent[v] = u  # BFS numbering: the parent has the smaller label
        self.chain = {}
        for leaf in self.leaves1:
            path = [leaf]
            while parent.get(path[-1], 0) != 0:
                path.append(parent[path[-1]])
            self.chain[leaf + m] = [x + m for x in reversed(path)]
        self.children = {}
        for u, v in self.tree.edges:
            self.children.setdefault(u + m, []).append(v + m)


def double_tree_seed(d: int, K: int) -> Graph:
    dt = _DoubleTree(d, K)
    return from_edge_list(dt.n, dt.edges)


def _dist_matrix(n: int, edges) -> np.ndarray:
    big = n + 1
    dist = np.full((n, n), big, dtype=np.int16)
    np.fill_diagonal(dist, 0)
    for u, v in edges:
        dist[u, v] = dist[v, u] = 1
    for k in range(n):
        dist = np.minimum(dist, dist[:, k : k + 1] + dist[k : k + 1, :])
    return dist


def _double_tree_exhaustive(d: int, K: int, min_girth: int, break_symmetry: bool) -> Iterator[Graph]:
    dt = _DoubleTree(d, K)
    n = dt.n
    need = d - 1  # cross edges per leaf
    stubs = {v: need for v in dt.leaves1 + dt.leaves2}
    cross: list[tuple[int, int]] = []
    used = set()  # tree-2 vertices touched by a cross edge (leaves and ancestors)
    limit = min_girth - 1

    def symmetric_skip(v: int) -> bool:
        # an untouched subtree of tree 2 is interchangeable with any earlier
        # untouched sibling subtree, by an automorphism fixing all prior choices
        for a in dt.chain[v]:
            if a in used:
                continue
            parent_children = dt.children.get(_parent2(a), [])
            for sib in parent_children:
                if sib == a:
                    return False
                if sib not in used:
                    return True
            return False
        return False

    parents2 = {}
    for u, v in dt.tree.edges:
        parents2[v + dt.m] = u + dt.m

    def _parent2(a):
        return parents2[a]

    def mark(v: int) -> list[int]:
        newly = [a for a in dt.chain[v] if a not in used]
        used.update(newly)
        return newly

    def rec(i: int, dist: np.ndarray):
        while i < len(dt.leaves1) and stubs[dt.leaves1[i]] == 0:
            i += 1
        if i == len(dt.leaves1):
            yield from_edge_list(n, dt.edges + cross)
            return
        u = dt.leaves1[i]
        for v in dt.leaves2:
            if stubs[v] == 0 or dist[u, v] < limit:
                continue
            if break_symmetry and symmetric_skip(v):
                continue
            # keep the cross neighbours of one tree-1 leaf increasing
            if cross and cross[-1][0] == u and v <= cross[-1][1]:
                continue
            newdist = np.minimum(dist, np.minimum(dist[:, u : u + 1] + 1 + dist[v : v + 1, :],
                                                  dist[:, v : v + 1] + 1 + dist[u : u + 1, :]))
            stubs[u] -= 1
            stubs[v] -= 1
            cross.append((u, v))
            newly = mark(v)
            yield from rec(i, newdist)
            used.difference_update(newly)
            cross.pop()
            stubs[u] += 1
            stubs[v] += 1

    yield from rec(0, _dist_matrix(n, dt.edges))


def double_tree_completion(
    d: int,
    K: int,
    min_girth: int | None = None,
    mode: str = "exhaustive",
    *,
    break_symmetry: bool = True,
    rng_seed: int = 0,
    attempts: int = 100,
    max_iterations: int = 10**5,
) -> Iterator[Graph]:
    """d-regular completions of two disjoint K-level Bethe trees.

    Only leaf-to-leaf edges between the two trees are added.  ``min_girth``
    defaults to ``2K`` (the conjectured girth of the odd-diameter maximal
    graphs, used here only as a search heuristic).  Exhaustive mode emits
    every completion up to automorphisms of the second tree when
    ``break_symmetry`` is on, and every labelled completion otherwise.
    Stochastic mode runs ``attempts`` seeded searches and emits each find.
    """
    if min_girth is None:
        min_girth = 2 * K
    if K < 2:
        raise SearchConfigError("double trees need K >= 2")
    if mode == "exhaustive":
        yield from _double_tree_exhaustive(d, K, min_girth, break_symmetry)
    elif mode == "stochastic":
        n = odd_diameter_exact_order(d, K)
        for a in range(attempts):
            cfg = SearchConfig(n=n, d=d, min_girth=min_girth, seed_mode="double-tree", levels=K,
                               rng_seed=rng_seed + a, max_iterations=max_iterations)
            out = stochastic_search(cfg)
            if out.found:
                yield out.graph
    else:
        raise ValueError(f"mode must be 'exhaustive' or 'stochastic', got {mode!r}")


# ---------------------------------------------------------------------------
# small-order enumeration

ENUMERATION_LIMITS = {3: 18, 4: 12}


def _cubic_children(g: Graph) -> Iterator[list[tuple[int, int]]]:
    """Subdivide two distinct edges and join the two new vertices."""
    x, y = g.n, g.n + 1
    edges = list(g.edges)
    for i, j in combinations(range(len(edges)), 2):
        (a, b), (c, e) = edges[i], edges[j]
        rest = edges[:i] + edges[i + 1 : j] + edges[j + 1 :]
        yield rest + [(a, x), (b, x), (c, y), (e, y), (x, y)]


def _cubic_bridge_children(levels: dict, m: int) -> Iterator[list[tuple[int, int]]]:
    """Subdivide one edge in each of two smaller cubic graphs and join the new vertices."""
    for n1 in range(4, (m - 2) // 2 + 1, 2):
        n2 = m - 2 - n1
        for i, g1 in enumerate(levels.get(n1, [])):
            others = levels.get(n2, [])
            for g2 in others[i:] if n1 == n2 else others:
                x, y = n1 + n2, n1 + n2 + 1
                base1 = list(g1.edges)
                base2 = [(u + n1, v + n1) for u, v in g2.edges]
                for i1, (a, b) in enumerate(base1):
                    rest1 = base1[:i1] + base1[i1 + 1 :]
                    for i2, (c, e) in enumerate(base2):
                        rest2 = base2[:i2] + base2[i2 + 1 :]
                        yield rest1 + rest2 + [(a, x), (b, x), (c, y), (e, y), (x, y)]


def _diamond_children(g: Graph) -> Iterator[list[tuple[int, int]]]:
    """Replace an edge ``uv`` by a diamond whose two tips take over ``u`` and ``v``."""
    t1, p, q, t2 = g.n, g.n + 1, g.n + 2, g.n + 3
    diamond = [(t1, p), (t1, q), (p, q), (p, t2), (q, t2)]
    edges = list(g.edges)
    for i, (u, v) in enumerate(edges):
        yield edges[:i] + edges[i + 1 :] + diamond + [(u, t1), (t2, v)]


def diamond_ring(n: int) -> Graph:
    """``n / 4`` diamonds (K4 minus an edge) joined in a cycle through their
    tips.  Edge insertion alone cannot reach these, since removing any of
    their edges leaves a multigraph; diamond insertion can."""
    if n % 4 or n < 8:
        raise ValueError("a ring of diamonds needs n divisible by 4 and n >= 8")
    r = n // 4
    edges = []
    for i in range(r):
        a, b, c, e = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3  # a, e are the tips
        edges += [(a, b), (a, c), (b, c), (b, e), (c, e)]
        edges.append((e, (4 * i + 4) % n))
    return from_edge_list(n, edges)


def _quartic_children(g: Graph) -> Iterator[list[tuple[int, int]]]:
    """Delete two disjoint edges and join their four ends to a new vertex."""
    x = g.n
    edges = list(g.edges)
    for i, j in combinations(range(len(edges)), 2):
        (a, b), (c, e) = edges[i], edges[j]
        if len({a, b, c, e}) < 4:
            continue
        rest = edges[:i] + edges[i + 1 : j] + edges[j + 1 :]
        yield rest + [(a, x), (b, x), (c, x), (e, x)]


def _quartic_pair_children(g: Graph) -> Iterator[list[tuple[int, int]]]:
    """Delete three disjoint edges; add adjacent vertices x, y splitting the six ends."""
    x, y = g.n, g.n + 1
    edges = list(g.edges)
    for i, j, k in combinations(range(len(edges)), 3):
        ends = edges[i] + edges[j] + edges[k]
        if len(set(ends)) < 6:
            continue
        rest = [e for t, e in enumerate(edges) if t not in (i, j, k)]
        first = ends[0]
        for side in combinations(ends[1:], 2):
            xs = (first,) + side
            ys = [v for v in ends if v not in xs]
            yield rest + [(v, x) for v in xs] + [(v, y) for v in ys] + [(x, y)]


def _vertex_reducible(g: Graph, v: int) -> bool:
    """Can ``v`` be deleted and its four neighbours re-paired by two new edges,
    leaving a connected simple 4-regular graph?"""
    from .graph import is_connected

    a, b, c, e = g.adj[v]
    for (p, q), (r, t) in (((a, b), (c, e)), ((a, c), (b, e)), ((a, e), (b, c))):
        if g.has_edge(p, q) or g.has_edge(r, t):
            continue
        keep = [w for w in range(g.n) if w != v]
        idx = {w: i for i, w in enumerate(keep)}
        edges = [(idx[s], idx[u]) for s, u in g.edges if v not in (s, u)]
        edges += [(idx[p], idx[q]), (idx[r], idx[t])]
        if is_connected(from_edge_list(g.n - 1, edges)):
            return True
    return False


def _quartic_irreducible(g: Graph) -> bool:
    return not any(_vertex_reducible(g, v) for v in range(g.n))


def _canonical_key(g: Graph) -> str:
    return canonical_form(g).graph6


def enumerate_regular(
    n: int,
    d: int,
    min_girth: int = 3,
    predicate: Callable[[Graph], bool] | None = None,
) -> Iterator[Graph]:
    """Every connected d-regular graph on ``n`` vertices with girth >= ``min_girth``,
    one per isomorphism class, each in canonical labelling.

    Cubic graphs grow from K4 by edge insertion (subdivide two edges, join the
    new vertices), by bridging two smaller cubic graphs the same way, and by
    diamond insertion (replace an edge by a K4 minus an edge).
    Quartic graphs grow from K5 by vertex insertion (replace two disjoint
    edges by a new vertex adjacent to their ends) and, for the graphs where
    no vertex can be removed that way, by inserting an adjacent pair in place
    of three disjoint edges.  Each level is reduced to canonical
    representatives.  Completeness of this operation set is checked against
    the known counts of connected cubic and quartic graphs over the whole
    supported range.

    The girth floor is applied to the final level only, since insertion can
    shorten cycles.  ``predicate``, if given, must be isomorphism-invariant;
    it filters the final level before canonical labelling, which is where
    almost all of the time goes.
    """
    limit = ENUMERATION_LIMITS.get(d)
    if limit is None:
        raise EnumerationLimitError(f"enumeration supports d in {sorted(ENUMERATION_LIMITS)}, got d={d}")
    if n > limit:
        raise EnumerationLimitError(f"enumeration for d={d} is limited to n <= {limit}, got n={n}")
    if n <= d or (n * d) % 2:
        return
    levels: dict[int, list[Graph]] = {d + 1: [from_edge_list(d + 1, list(combinations(range(d + 1), 2)))]}
    step = 2 if d == 3 else 1
    for m in range(d + 1 + step, n + 1, step):
        final = m == n

        def admit(h: Graph) -> bool:
            if not final:
                return True
            if min_girth > 3 and girth(h) < min_girth:
                return False
            return predicate is None or predicate(h)

        seen: dict[str, Graph] = {}

        def offer(h: Graph) -> None:
            if admit(h):
                key = _canonical_key(h)
                if key not in seen:
                    seen[key] = h

        if d == 3:
            for g in levels[m - 2]:
                for edges in _cubic_children(g):
                    offer(from_edge_list(m, edges))
            for edges in _cubic_bridge_children(levels, m):
                offer(from_edge_list(m, edges))
            for g in levels.get(m - 4, []):
                for edges in _diamond_children(g):
                    offer(from_edge_list(m, edges))
        else:
            for g in levels.get(m - 1, []):
                for edges in _quartic_children(g):
                    offer(from_edge_list(m, edges))
            for g in levels.get(m - 2, []):
                for edges in _quartic_pair_children(g):
                    h = from_edge_list(m, edges)
                    if _quartic_irreducible(h):
                        offer(h)
        levels[m] = [decode_graph6(k) for k in sorted(seen)]
        if d == 4:
            levels.pop(m - 2, None)
    for g in levels.get(n, []):
        # the base graph never passed through the final-level filter
        if g.n == d + 1 and (girth(g) < min_girth or (predicate is not None and not predicate(g))):
            continue
        yield g


# ---------------------------------------------------------------------------
# certification plumbing


def verify_and_emit(
    stream: Iterable[Graph],
    c: BoundConstraint,
    provenance: str = "search",
) -> Iterator["CatalogRecord"]:  # noqa: F821
    """Certify each graph against ``c``; yield one record per attaining class."""
    from .catalog import make_record

    seen: set[str] = set()
    for g in stream:
        if g.regular_degree() != c.d:
            continue
        rep = certify_maximal(g, c)
        if not rep.attained:
            continue
        cf = canonical_form(g)
        if cf.graph6 in seen:
            continue
        seen.add(cf.graph6)
        yield make_record(g, c, provenance, report=rep, canonical=cf.graph6)
