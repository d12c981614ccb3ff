"""Canonical labelling, isomorphism testing and automorphism group orders.

Individualisation-refinement: the vertex set is kept as an ordered partition
(``lab`` plus cell boundaries), refined to the coarsest equitable partition,
and a search tree branches on the vertices of the smallest non-singleton
cell.  Leaves are discrete partitions; the canonical labelling is the leaf
with the largest adjacency certificate.  Leaves with equal certificates
yield automorphisms, which prune sibling branches and give the group order by
orbit-stabiliser counting along the first path.
"""

from __future__ import annotations

import hashlib
import math
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .graph import INF, Graph, diameter, encode_graph6, girth

MAX_ORDER = 1024


@dataclass(frozen=True)
class CanonicalForm:
    graph6: str
    perm: tuple[int, ...]  # perm[v] = canonical position of input vertex v


@dataclass(frozen=True)
class _Part:
    lab: list
    ends: dict
    cell_of: list


def _initial_partition(g: Graph, colours: Sequence | None) -> _Part:
    key = colours if colours is not None else [0] * g.n
    degs = g.degrees()
    order = sorted(range(g.n), key=lambda v: (degs[v], key[v]))
    lab = list(order)
    ends = {}
    cell_of = [0] * g.n
    start = 0
    for i in range(1, g.n + 1):
        if i == g.n or (degs[lab[i]], key[lab[i]]) != (degs[lab[start]], key[lab[start]]):
            ends[start] = i
            for j in range(start, i):
                cell_of[lab[j]] = start
            start = i
    return _Part(lab, ends, cell_of)


def _refine(adj, part: _Part, splitters: Iterable[int]) -> int:
    """Refine ``part`` in place to an equitable partition; return a trace hash.

    The trace records every split (position and subcell sizes) and is
    therefore invariant under relabelling of the input graph.
    """
    lab, ends, cell_of = part.lab, part.ends, part.cell_of
    n = len(lab)
    queue = deque(sorted(splitters))
    queued = set(queue)
    trace = []
    while queue and len(ends) < n:
        w = queue.popleft()
        queued.discard(w)
        count: dict[int, int] = {}
        for u in lab[w : ends[w]]:
            for v in adj[u]:
                count[v] = count.get(v, 0) + 1
        affected = sorted({cell_of[v] for v in count})
        for s in affected:
            e = ends[s]
            if e - s == 1:
                continue
            cell = lab[s:e]
            vals = [count.get(v, 0) for v in cell]
            first = vals[0]
            if all(x == first for x in vals):
                continue
            pairs = sorted(zip(vals, cell))
            lab[s:e] = [v for _, v in pairs]
            new_starts = [s]
            for i in range(1, len(pairs)):
                if pairs[i][0] != pairs[i - 1][0]:
                    new_starts.append(s + i)
            bounds = new_starts + [e]
            sizes = []
            for a, b in zip(bounds, bounds[1:]):
                ends[a] = b
                for j in range(a, b):
                    cell_of[lab[j]] = a
                sizes.append(b - a)
            trace.append((w, s, tuple(sizes), pairs[0][0], pairs[-1][0]))
            if s in queued:
                for a in new_starts[1:]:
                    queue.append(a)
                    queued.add(a)
            else:
                big = sizes.index(max(sizes))
                for idx, a in enumerate(new_starts):
                    if idx != big:
                        queue.append(a)
                        queued.add(a)
    return hash(tuple(trace))


def _individualize(part: _Part, v: int) -> tuple[_Part, int]:
    lab = list(part.lab)
    ends = dict(part.ends)
    cell_of = list(part.cell_of)
    s = cell_of[v]
    e = ends[s]
    i = lab.index(v, s, e)
    lab[s], lab[i] = lab[i], lab[s]
    ends[s] = s + 1
    ends[s + 1] = e
    for j in range(s + 1, e):
        cell_of[lab[j]] = s + 1
    return _Part(lab, ends, cell_of), s


def _target_cell(adj, part: _Part) -> int:
    """Start of the non-singleton cell joined non-trivially to the most
    non-singleton cells (ties: smallest start).  In an equitable partition one
    representative per cell suffices to count the joins."""
    ends, lab, cell_of = part.ends, part.lab, part.cell_of
    cells = sorted(a for a in ends if ends[a] - a > 1)
    if len(cells) == 1:
        return cells[0]
    size = {a: ends[a] - a for a in cells}
    best, best_score = cells[0], -1
    for a in cells:
        hits: dict[int, int] = {}
        for w in adj[lab[a]]:
            c = cell_of[w]
            if c in size:
                hits[c] = hits.get(c, 0) + 1
        score = sum(1 for c, h in hits.items() if h < size[c])
        if score > best_score:
            best, best_score = a, score
    return best


def _certificate(rows_adj, lab) -> tuple:
    pos = [0] * len(lab)
    for i, v in enumerate(lab):
        pos[v] = i
    out = []
    for v in lab:
        r = 0
        for w in rows_adj[v]:
            r |= 1 << pos[w]
        out.append(r)
    return tuple(out)


class _Orbits:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def _common_prefix(a, b) -> int:
    k = 0
    while k < len(a) and k < len(b) and a[k] == b[k]:
        k += 1
    return k


class _Search:
    """One individualisation-refinement search.

    Every node carries the sequence of refinement traces on its path.  Leaves
    are ranked by ``(trace sequence, certificate)``; a subtree is skipped when
    its trace prefix already differs from the first path and is smaller than
    the best path's, since it can contain neither the canonical leaf nor an
    image of the first leaf.
    """

    def __init__(self, g: Graph, colours=None):
        self.g = g
        self.adj = g.adj
        self.n = g.n
        self.first_lab = None
        self.first_cert = None
        self.first_path: list[int] = []
        self.first_inv: list[int] = []
        self.best_lab = None
        self.best_cert = None
        self.best_path: list[int] = []
        self.best_inv: list[int] = []
        self.generators: list[tuple[int, ...]] = []
        root = _initial_partition(g, colours)
        _refine(self.adj, root, list(root.ends))
        self.root = root

    def _orbits_fixing(self, prefix) -> _Orbits:
        orb = _Orbits(self.n)
        for gen in self.generators:
            if all(gen[v] == v for v in prefix):
                for v in range(self.n):
                    orb.union(v, gen[v])
        return orb

    def run(self) -> None:
        self._descend(self.root, [], [])

    def _leaf(self, part: _Part, prefix, inv) -> int | None:
        cert = _certificate(self.adj, part.lab)
        if self.first_cert is None:
            self.first_cert = self.best_cert = cert
            self.first_lab = list(part.lab)
            self.best_lab = list(part.lab)
            self.first_path = list(prefix)
            self.best_path = list(prefix)
            self.first_inv = list(inv)
            self.best_inv = list(inv)
            return None
        # an automorphism maps the explored subtree at the divergence point onto this one
        if inv == self.first_inv and cert == self.first_cert:
            self._add_generator(self.first_lab, part.lab)
            return _common_prefix(prefix, self.first_path)
        if inv == self.best_inv and cert == self.best_cert:
            self._add_generator(self.best_lab, part.lab)
            return _common_prefix(prefix, self.best_path)
        if (inv, cert) > (self.best_inv, self.best_cert):
            self.best_cert = cert
            self.best_lab = list(part.lab)
            self.best_path = list(prefix)
            self.best_inv = list(inv)
        return None

    def _add_generator(self, lab_a, lab_b) -> None:
        gen = [0] * self.n
        for x, y in zip(lab_a, lab_b):
            gen[x] = y
        gen = tuple(gen)
        if any(gen[v] != v for v in range(self.n)):
            self.generators.append(gen)

    def _hopeless(self, inv) -> bool:
        if self.first_cert is None:
            return False
        k = len(inv)
        if inv == self.first_inv[:k]:
            return False
        return inv[: len(self.best_inv)] < self.best_inv[:k]

    def _descend(self, part: _Part, prefix: list[int], inv: list[int]) -> int | None:
        """Explore the subtree; return a depth to jump back to, or ``None``."""
        if len(part.ends) == self.n:
            return self._leaf(part, prefix, inv)
        s = _target_cell(self.adj, part)
        cell = sorted(part.lab[s : part.ends[s]])
        depth = len(prefix)
        tried: list[int] = []
        orb = None
        seen_gens = -1
        for v in cell:
            if tried:
                if seen_gens != len(self.generators):
                    orb = self._orbits_fixing(prefix)
                    seen_gens = len(self.generators)
                    tried_roots = {orb.find(t) for t in tried}
                if orb.find(v) in tried_roots:
                    continue
            child, at = _individualize(part, v)
            child_inv = inv + [_refine(self.adj, child, [at])]
            tried.append(v)
            if orb is not None:
                tried_roots.add(orb.find(v))
            if self._hopeless(child_inv):
                continue
            jump = self._descend(child, prefix + [v], child_inv)
            if jump is not None and jump < depth:
                return jump
        return None

    def group_order(self) -> int:
        order = 1
        path = self.first_path
        part = self.root
        for k, v in enumerate(path):
            s = part.cell_of[v]
            cell = part.lab[s : part.ends[s]]
            orb = self._orbits_fixing(path[:k])
            rv = orb.find(v)
            order *= sum(1 for w in cell if orb.find(w) == rv)
            part, at = _individualize(part, v)
            _refine(self.adj, part, [at])
        return order


def _check_size(g: Graph) -> None:
    if g.n > MAX_ORDER:
        raise ValueError(f"canonical labelling limited to n <= {MAX_ORDER}, got {g.n}")


WALK_LENGTH = 8


def walk_colours(g: Graph, upto: int = WALK_LENGTH) -> list[tuple[int, ...]]:
    """Closed-walk counts ``(A^k)_vv`` for ``k = 3..upto`` at every vertex.

    A relabelling-invariant vertex colouring.  Regular graphs start the search
    as a single cell; splitting it by short-cycle structure first spares most
    of the branching on asymmetric graphs.
    """
    dmax = max(g.degrees(), default=0)
    # keep every count below 2**52 so the float products are exact integers
    while upto >= 3 and dmax > 1 and upto * math.log2(dmax) >= 52:
        upto -= 1
    if g.n == 0 or upto < 3:
        return [()] * g.n
    a = g.adjacency_matrix().astype(float)
    p = a @ a
    cols = []
    for _ in range(3, upto + 1):
        p = p @ a
        cols.append(np.rint(np.diagonal(p)).astype(np.int64))
    return [tuple(r) for r in np.stack(cols, axis=1).tolist()]


def _canonical(g: Graph, colours=None) -> tuple[_Search, tuple[int, ...]]:
    _check_size(g)
    walks = walk_colours(g)
    key = walks if colours is None else list(zip(colours, walks))
    s = _Search(g, key)
    s.run()
    perm = [0] * g.n
    for i, v in enumerate(s.best_lab):
        perm[v] = i
    return s, tuple(perm)


def canonical_form(g: Graph) -> CanonicalForm:
    """Relabelling-invariant graph6 string plus the labelling that produced it."""
    _, perm = _canonical(g)
    return CanonicalForm(encode_graph6(g.relabel(perm)), perm)


def canonical_graph(g: Graph, colours=None) -> Graph:
    _, perm = _canonical(g, colours)
    return g.relabel(perm)


def automorphism_group_order(g: Graph) -> int:
    s, _ = _canonical(g)
    return s.group_order()


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    s, _ = _canonical(g)
    return list(s.generators)


def vertex_orbits(g: Graph) -> list[list[int]]:
    s, _ = _canonical(g)
    orb = s._orbits_fixing([])
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(orb.find(v), []).append(v)
    return sorted(groups.values())


# ---------------------------------------------------------------------------
# fingerprints and isomorphism


def fingerprint(g: Graph) -> tuple:
    """Cheap isomorphism invariant: order, degrees, girth, diameter, spectrum hash."""
    degs = tuple(sorted(g.degrees()))
    if g.n > 1:
        w = np.linalg.eigvalsh(g.adjacency_matrix())
        rounded = np.round(w, 6) + 0.0
        spec = hashlib.sha1(rounded.tobytes()).hexdigest()[:16]
    else:
        spec = ""
    gi = girth(g)
    di = diameter(g)
    return (g.n, hash(degs), -1 if gi == INF else gi, -1 if di == INF else di, spec)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    if fingerprint(g1) != fingerprint(g2):
        return False
    return canonical_form(g1).graph6 == canonical_form(g2).graph6


def dedup(graphs: Iterable[Graph], key: Callable[[Graph], str] | None = None) -> Iterator[Graph]:
    """Yield the first representative of each isomorphism class, in input order."""
    key = key or (lambda h: canonical_form(h).graph6)
    seen: set[str] = set()
    for h in graphs:
        k = key(h)
        if k not in seen:
            seen.add(k)
            yield h
