import itertools

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import from_nx, graphs, random_graph, to_nx
from matchroots.canon import canonical_form, canonical_graph, canonical_labeling, is_isomorphic
from matchroots.graph import cycle_graph, graph_from_edges, petersen_graph


@settings(max_examples=200)
@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_form_is_relabel_invariant(g, r):
    perm = list(range(g.n))
    r.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(max_n=9))
def test_canonical_graph_is_isomorphic(g):
    c = canonical_graph(g)
    assert nx.is_isomorphic(to_nx(c), to_nx(g))


def test_agrees_with_networkx_on_random_pairs(rnd):
    for _ in range(600):
        n = rnd.randint(1, 9)
        p = rnd.random()
        a, b = random_graph(rnd, n, p), random_graph(rnd, n, p)
        if a.num_edges != b.num_edges:
            continue
        assert is_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))


def test_distinguishes_every_atlas_graph():
    # the atlas lists each graph on up to 7 vertices exactly once
    seen = set()
    for h in nx.graph_atlas_g():
        seen.add(canonical_form(from_nx(h)))
    assert len(seen) == len(nx.graph_atlas_g())


def _is_automorphism(g, gamma):
    return all(g.has_edge(gamma[u], gamma[v]) for u, v in g.edges())


def _group_order(gens, n):
    seen = {tuple(range(n))}
    frontier = list(seen)
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = tuple(g[i] for i in p)
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return len(seen)


def test_automorphisms_generate_the_full_group():
    for h in nx.graph_atlas_g()[1:300]:
        g = from_nx(h)
        lab = canonical_labeling(g)
        assert all(_is_automorphism(g, a) for a in lab.automorphisms)
        expected = sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())
        assert _group_order(lab.automorphisms, g.n) == expected
        assert (expected == 1) == (not lab.automorphisms)


def test_hard_cases():
    pet = petersen_graph()
    lab = canonical_labeling(pet)
    assert _group_order(lab.automorphisms, 10) == 120
    # C6 versus two triangles: same degree sequence
    two_triangles = graph_from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_isomorphic(cycle_graph(6), two_triangles)


def test_empty_and_tiny():
    assert canonical_form(graph_from_edges(0, [])).n == 0
    assert is_isomorphic(graph_from_edges(2, [(0, 1)]), graph_from_edges(2, [(1, 0)]))
    for n in range(4):
        perms = list(itertools.permutations(range(n)))
        g = graph_from_edges(n, [(0, 1)] if n >= 2 else [])
        assert len({canonical_form(g.relabel(list(p))) for p in perms}) == 1
