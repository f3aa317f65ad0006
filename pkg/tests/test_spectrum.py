from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings

from conftest import graphs
from matchroots.enumerate import EnumSpec, enumerate_graphs
from matchroots.families import F, S, T, build
from matchroots.graph import complete_graph, delete_vertex, graph_from_edges, star
from matchroots.matching import matching_polynomial
from matchroots.poly import IntPoly, RationalInterval, parse_poly
from matchroots.spectrum import (
    RootHandle,
    _interlace_by_isolation,
    distinct_matching_roots,
    gallai_witness,
    handle_for,
    interlaces,
    multiplicity,
    multiplicity_of,
    repeated_root_handles,
    root_handles,
    root_summary,
    roots_at_least,
    roots_interlace,
)

x = sympy.Symbol("x")


def to_sympy(p: IntPoly) -> sympy.Poly:
    return sympy.Poly(list(reversed(p.coeffs)), x)


def test_k2_summary():
    s = root_summary(complete_graph(2))
    assert s.z == 2
    assert [iv.lo for iv, _ in s.roots] == [-1, 1]


@pytest.mark.parametrize("desc, square", [(S(3, 5), 6), (F(3), 7)])
def test_five_distinct_roots(desc, square):
    s = root_summary(build(desc))
    assert s.z == 5 and s.zero_mult == 1
    mults = [m for _, m in s.roots]
    assert mults == [1, 2, 1, 2, 1]
    top = s.roots[-1][0]
    assert top.lo ** 2 < square < top.hi ** 2 or top.lo ** 2 == square


def test_z_small_cases():
    assert distinct_matching_roots(complete_graph(2)) == 2
    assert distinct_matching_roots(complete_graph(3)) == 3
    for g in enumerate_graphs(EnumSpec(4, connected_only=True)):
        if max(g.degrees()) < 3:
            assert distinct_matching_roots(g) == 4
    with pytest.raises(ValueError):
        distinct_matching_roots(graph_from_edges(0, []))


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_handles_match_sympy(g):
    p = matching_polynomial(g)
    sp = to_sympy(p)
    # multiset of multiplicities from sympy's square-free factorization
    expected = sorted(i for f, i in sympy.sqf_list(sp)[1] for _ in range(f.count_roots()))
    handles = root_handles(p)
    assert sorted(m for _, m in handles) == expected
    assert sum(m for _, m in handles) == g.n
    for h, m in handles:
        iv = h.interval
        assert to_sympy(h.factor).count_roots(iv.lo, iv.hi) == 1
        assert multiplicity(p, h) == m


def test_handle_validation():
    with pytest.raises(ValueError):
        RootHandle(parse_poly("x^2-2"), RationalInterval(-2, 2))  # two roots inside
    with pytest.raises(ValueError):
        RootHandle(parse_poly("x^2-2x+1"), RationalInterval(0, 2))  # not square-free
    with pytest.raises(ValueError):
        RootHandle(parse_poly("x-1"), RationalInterval(2, 2))
    h = RootHandle(parse_poly("x^2-3"), RationalInterval(1, 2))
    assert multiplicity_of(build(T(2, 3)), h) == 1


def test_multiplicity_examples():
    assert multiplicity_of(star(4), RootHandle.rational(0)) == 3
    assert multiplicity_of(complete_graph(2), RootHandle.rational(5)) == 0
    assert multiplicity(parse_poly("x^3"), handle_for(parse_poly("x"), value=0)) == 3
    with pytest.raises(ValueError):
        handle_for(parse_poly("x^2-2"), value=1)


def test_interlacing_examples():
    k3 = complete_graph(3)
    assert all(interlaces(k3, u) for u in range(3))
    assert interlaces(star(3), 0)
    with pytest.raises(ValueError):
        interlaces(k3, 3)


def test_interlacing_negative_cases():
    assert not roots_interlace(parse_poly("x^2-1"), parse_poly("x-5"))
    assert not roots_interlace(parse_poly("x^3-x"), parse_poly("x^2+1"))
    assert not roots_interlace(parse_poly("x^2-1"), parse_poly("x^2"))


def test_fast_interlacing_matches_isolation():
    # random real-rooted pairs with shared roots
    import random

    rnd = random.Random(7)

    def prod(roots):
        p = IntPoly((1,))
        for r in roots:
            p = p * IntPoly((-r, 1))
        return p

    for _ in range(500):
        n = rnd.randint(1, 6)
        p = prod([rnd.randint(-3, 3) for _ in range(n)])
        q = prod([rnd.randint(-3, 3) for _ in range(n - 1)])
        assert roots_interlace(p, q) == _interlace_by_isolation(p, q)


def test_interlacing_on_all_small_graphs():
    for n in range(2, 7):
        for g in enumerate_graphs(EnumSpec(n)):
            mu = matching_polynomial(g)
            for u in range(n):
                q = matching_polynomial(delete_vertex(g, u))
                assert roots_interlace(mu, q)
                assert _interlace_by_isolation(mu, q)


def test_gallai_examples():
    g = build(S(3, 5))
    one = RootHandle.rational(1)
    u = gallai_witness(g, one)
    assert multiplicity_of(delete_vertex(g, u), one) == 3
    assert gallai_witness(star(4), RootHandle.rational(0)) == 0
    with pytest.raises(ValueError):
        gallai_witness(complete_graph(2), RootHandle.rational(1))
    with pytest.raises(ValueError):
        gallai_witness(graph_from_edges(3, [(0, 1)]), RootHandle.rational(0))


def test_repeated_root_handles():
    rep = repeated_root_handles(matching_polynomial(build(S(3, 5))))
    assert sorted(h.interval.lo for h, _ in rep) == [-1, 1]
    assert all(m == 2 for _, m in rep)
    assert repeated_root_handles(parse_poly("x^2-1")) == []


def test_roots_at_least():
    assert roots_at_least(parse_poly("x^2-1"), -1)
    assert not roots_at_least(parse_poly("x^3-2x"), -1)
    assert roots_at_least(parse_poly("x"), -1)
    assert roots_at_least(parse_poly("x^2-3x+2"), Fraction(1))
