import itertools
import math

import networkx as nx
import numpy as np
import pytest
from scipy import stats

from conftest import from_nx, to_nx
from maxac.bounds import BoundConstraint
from maxac.families import named_graph
from maxac.graph import diameter, girth, is_bipartite, is_connected
from maxac.iso import are_isomorphic, canonical_form, dedup
from maxac.search import (
    ENUMERATION_LIMITS,
    EnumerationLimitError,
    SearchConfig,
    SearchConfigError,
    SearchState,
    _seed_state,
    diamond_ring,
    double_tree_completion,
    double_tree_seed,
    enumerate_regular,
    make_feasible_list,
    sort_edges,
    stochastic_search,
    verify_and_emit,
)

# connected cubic / quartic graphs by order (OEIS A002851, A006820)
CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509, 16: 4060, 18: 41301}
QUARTIC_COUNTS = {5: 1, 6: 1, 7: 2, 8: 6, 9: 16, 10: 59, 11: 265, 12: 1544}


# ---------------------------------------------------------------------------
# feasible list and ordering


def test_feasible_list_empty_graph():
    s = SearchState.empty(4, 3, 3)
    assert sorted(make_feasible_list(s)) == list(itertools.combinations(range(4), 2))


def test_feasible_list_respects_girth_and_degree():
    s = SearchState.empty(6, 2, 5)
    s.add_edge(0, 1)
    s.add_edge(1, 2)
    fl = make_feasible_list(s)
    # 0-2 would close a triangle, 1 is saturated
    assert (0, 2) not in fl
    assert all(1 not in e for e in fl)
    assert (0, 3) in fl


def test_feasible_list_double_tree():
    cfg = SearchConfig(n=46, d=3, min_girth=8, seed_mode="double-tree", levels=4)
    s = _seed_state(cfg)
    fl = make_feasible_list(s)
    assert len(fl) == 144
    assert all(s.leaf_side[u] != s.leaf_side[v] for u, v in fl)


def test_sort_edges_descending_degree_sum():
    s = SearchState.empty(8, 3, 3)
    s.add_edge(0, 1)
    s.add_edge(0, 2)
    rng = np.random.Generator(np.random.Philox(0))
    out = sort_edges(make_feasible_list(s), s, rng)
    sums = [s.degree(u) + s.degree(v) for u, v in out]
    assert sums == sorted(sums, reverse=True)


def test_sort_edges_uniform_within_ties():
    s = SearchState.empty(4, 3, 3)
    edges = make_feasible_list(s)  # all tied at degree sum 0
    rng = np.random.Generator(np.random.Philox(12345))
    counts = {e: 0 for e in edges}
    trials = 10_000
    for _ in range(trials):
        counts[sort_edges(edges, s, rng)[0]] += 1
    _, p = stats.chisquare(list(counts.values()))
    assert p > 1e-3


# ---------------------------------------------------------------------------
# configuration


def test_config_validation():
    with pytest.raises(SearchConfigError):
        SearchConfig(n=7, d=3).validate()  # odd n*d
    with pytest.raises(SearchConfigError):
        SearchConfig(n=3, d=3).validate()
    with pytest.raises(SearchConfigError):
        SearchConfig(n=20, d=3, seed_mode="double-tree", levels=3, min_girth=6)  # fine
        SearchConfig(n=22, d=3, seed_mode="double-tree", levels=3).validate()
    with pytest.raises(SearchConfigError):
        SearchConfig(n=10, d=3, seed_mode="bogus").validate()
    with pytest.raises(SearchConfigError):
        SearchConfig(n=10, d=3, structural_restriction="cross-leaf").validate()


def test_digest_ignores_seed():
    a = SearchConfig(n=14, d=3, min_girth=6, rng_seed=1)
    b = SearchConfig(n=14, d=3, min_girth=6, rng_seed=2)
    c = SearchConfig(n=14, d=3, min_girth=5, rng_seed=1)
    assert a.digest() == b.digest() != c.digest()
    assert SearchConfig(n=14, d=3).effective_seed() == SearchConfig(n=14, d=3).effective_seed()


# ---------------------------------------------------------------------------
# stochastic search


def test_reproducible():
    cfg = SearchConfig(n=14, d=3, min_girth=6, rng_seed=42, max_iterations=5000)
    a = stochastic_search(cfg)
    b = stochastic_search(cfg)
    assert a.found and b.found
    assert a.iterations == b.iterations
    assert a.graph.edges == b.graph.edges


@pytest.mark.parametrize("seed", range(5))
def test_finds_heawood(seed):
    out = stochastic_search(SearchConfig(n=14, d=3, min_girth=6, rng_seed=seed, max_iterations=20000))
    assert out.found
    assert are_isomorphic(out.graph, named_graph("heawood"))


@pytest.mark.parametrize("mode", ["vertex-tree", "edge-tree"])
def test_seeded_modes_keep_tree(mode):
    cfg = SearchConfig(n=14, d=3, min_girth=6, seed_mode=mode, rng_seed=3, max_iterations=20000)
    seed = _seed_state(cfg).seed_edges
    out = stochastic_search(cfg)
    assert out.found
    assert set(seed) <= set(out.graph.edges)


def test_budget_exhausted():
    out = stochastic_search(SearchConfig(n=12, d=3, min_girth=7, rng_seed=0, max_iterations=50))
    assert not out.found
    assert out.status != "found"
    assert out.iterations == 50


def test_cap_escalation_also_works():
    cfg = SearchConfig(n=14, d=3, min_girth=6, rng_seed=9, wrap_escalation=False, max_iterations=20000)
    assert stochastic_search(cfg).found


# ---------------------------------------------------------------------------
# double trees


def test_double_tree_seed():
    t = double_tree_seed(3, 3)
    assert t.n == 20 and t.m == 18
    G = to_nx(t)
    assert nx.number_connected_components(G) == 2
    assert all(nx.is_tree(G.subgraph(c)) for c in nx.connected_components(G))


def test_double_tree_k2_is_cube():
    gs = list(dedup(double_tree_completion(3, 2, min_girth=4)))
    assert len(gs) == 1
    assert are_isomorphic(gs[0], named_graph("cube3"))


def test_double_tree_k3_completions():
    seed = set(double_tree_seed(3, 3).edges)
    gs = list(double_tree_completion(3, 3))
    assert gs
    for g in gs[:50]:
        assert seed <= set(g.edges)
        assert is_bipartite(g) and girth(g) >= 6 and g.regular_degree() == 3
    c = BoundConstraint.diameter(3, 5)
    recs = list(verify_and_emit(gs, c))
    assert len(recs) == 5


def test_symmetry_breaking_keeps_classes():
    a = {canonical_form(g).graph6 for g in double_tree_completion(3, 3)}
    b = {canonical_form(g).graph6 for g in double_tree_completion(3, 3, break_symmetry=False)}
    assert a == b


# ---------------------------------------------------------------------------
# enumeration


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12, 14])
def test_cubic_counts(n):
    assert sum(1 for _ in enumerate_regular(n, 3)) == CUBIC_COUNTS[n]


@pytest.mark.parametrize("n", [5, 6, 7, 8, 9, 10])
def test_quartic_counts(n):
    assert sum(1 for _ in enumerate_regular(n, 4)) == QUARTIC_COUNTS[n]


@pytest.mark.slow
@pytest.mark.parametrize("n,d", [(16, 3), (11, 4), (12, 4)])
def test_counts_slow(n, d):
    expected = (CUBIC_COUNTS if d == 3 else QUARTIC_COUNTS)[n]
    assert sum(1 for _ in enumerate_regular(n, d)) == expected


@pytest.mark.parametrize("n,d", [(8, 3), (10, 3), (8, 4), (9, 4)])
def test_enumeration_pairwise_distinct(n, d):
    gs = list(enumerate_regular(n, d))
    Gs = [to_nx(g) for g in gs]
    for g, G in zip(gs, Gs):
        assert g.regular_degree() == d and is_connected(g)
    for i, j in itertools.combinations(range(len(Gs)), 2):
        if nx.faster_could_be_isomorphic(Gs[i], Gs[j]):
            assert not nx.is_isomorphic(Gs[i], Gs[j])


def test_cubic_n8_brute_force():
    # cubic graphs on 8 labelled vertices with N(0) = {1, 2, 3}, reduced with networkx
    pairs = [p for p in itertools.combinations(range(8), 2) if p[0] != 0]
    found = []

    def rec(i, deg, chosen):
        if i == len(pairs):
            if all(x == 3 for x in deg):
                G = nx.Graph(chosen)
                if G.number_of_nodes() == 8 and nx.is_connected(G):
                    if not any(nx.is_isomorphic(G, H) for H in found):
                        found.append(G)
            return
        u, v = pairs[i]
        # vertex u is finished once every pair starting at u is decided
        if deg[u] < 3 and deg[v] < 3:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            rec(i + 1, deg, chosen)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        if i + 1 < len(pairs) and pairs[i + 1][0] != u and deg[u] != 3:
            return
        rec(i + 1, deg, chosen)

    rec(0, [3, 1, 1, 1, 0, 0, 0, 0], [(0, 1), (0, 2), (0, 3)])
    assert len(found) == 5
    ours = list(enumerate_regular(8, 3))
    assert len(ours) == 5
    for G in found:
        assert any(nx.is_isomorphic(G, to_nx(g)) for g in ours)


def test_girth_filter_and_predicate():
    g5 = list(enumerate_regular(10, 3, min_girth=5))
    assert len(g5) == 1 and are_isomorphic(g5[0], named_graph("petersen"))
    d3 = list(enumerate_regular(8, 3, predicate=lambda h: diameter(h) == 3))
    assert all(diameter(h) == 3 for h in d3)
    assert any(are_isomorphic(h, named_graph("cube3")) for h in d3)


def test_diamond_ring():
    g = diamond_ring(8)
    assert g.n == 8 and g.regular_degree() == 3 and is_connected(g)


def test_enumeration_limits():
    with pytest.raises(EnumerationLimitError):
        list(enumerate_regular(ENUMERATION_LIMITS[3] + 2, 3))
    with pytest.raises(EnumerationLimitError):
        list(enumerate_regular(10, 5))
    assert list(enumerate_regular(7, 3)) == []


def test_verify_and_emit_dedups():
    pet = named_graph("petersen")
    rng = np.random.default_rng(0)
    stream = [pet.relabel(list(rng.permutation(10))) for _ in range(5)]
    recs = list(verify_and_emit(stream, BoundConstraint.girth(3, 5)))
    assert len(recs) == 1
    assert recs[0].attained and recs[0].aut_order == 120
    assert list(verify_and_emit([named_graph("heawood")], BoundConstraint.girth(3, 5))) == []


@pytest.mark.parametrize("n,d", [(12, 3), (10, 4)])
def test_enumeration_pairwise_iso_module(n, d):
    gs = list(enumerate_regular(n, d))
    for a, b in itertools.combinations(gs, 2):
        assert not are_isomorphic(a, b)
