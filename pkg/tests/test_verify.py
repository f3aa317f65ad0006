import json
from collections import Counter
from itertools import combinations

import networkx as nx
import pytest
import sympy

from conftest import from_nx
from matchroots import verify as v
from matchroots.canon import is_isomorphic
from matchroots.enumerate import EnumSpec
from matchroots.graph import graph6_decode
from matchroots.inputs import parse_graph
from matchroots.matching import matching_vector

X = sympy.Symbol("x")


def brute_counts(h: nx.Graph) -> tuple[int, ...]:
    """k-matching counts for k = 0..n//2 by trying every edge subset of each size."""
    edges = list(h.edges())
    return tuple(
        sum(1 for sub in combinations(edges, k) if len({u for e in sub for u in e}) == 2 * k)
        for k in range(h.number_of_nodes() // 2 + 1)
    )


def atlas_partners(text: str) -> list[nx.Graph]:
    g = parse_graph(text)
    target = matching_vector(g).counts
    return [
        h for h in nx.graph_atlas_g()
        if h.number_of_nodes() == g.n and brute_counts(h) == target and not is_isomorphic(from_nx(h), g)
    ]


def test_report_schema():
    r = v.VerificationReport("c", "s", v.CONFIRMED, elapsed_ms=12, notes=["n"])
    d = json.loads(r.to_json())
    assert set(d) == {"claim", "scope", "status", "witnesses", "elapsed_ms", "notes"}
    assert d["elapsed_ms"] == 12
    assert r.to_dict(timing=False)["elapsed_ms"] == 0
    with pytest.raises(ValueError):
        v.VerificationReport("c", "s", v.COUNTEREXAMPLE)
    with pytest.raises(ValueError):
        v.VerificationReport("c", "s", "maybe")
    w = v.Witness.of(parse_graph("K_3"))
    assert w.to_dict() == {"graph6": "Bw", "mu": "x^3-3x", "name": "K_3"}


def test_sweep_counts_agree_with_direct_computation():
    seen = 0
    for g, counts in v.matching_sweep(EnumSpec(6)):
        assert counts == matching_vector(g).counts
        seen += 1
    assert seen == 156


@pytest.mark.parametrize("text", ["F(1)", "F(2)", "K(2,1;1)", "L(1,2)", "K(2,2;1)", "5.12"])
def test_partner_search_matches_atlas_oracle(text):
    ours = v.find_comatching_partners(parse_graph(text), n_cap=7)
    oracle = atlas_partners(text)
    assert len(ours) == len(oracle)
    for h in oracle:
        assert any(is_isomorphic(from_nx(h), g) for g in ours)


def test_partner_relation_is_symmetric_on_table_pairs():
    for left, right in v.TABLE_PAIRS:
        a, b = parse_graph(left), parse_graph(right)
        if a.n > 7:
            continue
        assert any(is_isomorphic(b, g) for g in v.find_comatching_partners(a, n_cap=7))
        assert any(is_isomorphic(a, g) for g in v.find_comatching_partners(b, n_cap=7))


def test_friendship_small_cases():
    assert v.is_matching_unique(parse_graph("F(1)"))
    assert v.is_matching_unique(parse_graph("F(3)"))
    (partner,) = v.find_comatching_partners(parse_graph("F(2)"))
    assert is_isomorphic(partner, parse_graph("5.10"))


def test_classification_small_orders():
    reports = v.verify_classification(6)
    assert [r.status for r in reports] == [v.CONFIRMED, v.CONFIRMED]
    # distinct-root counts from sympy over the atlas
    oracle = Counter()
    for h in nx.graph_atlas_g()[1:]:
        n = h.number_of_nodes()
        if n > 6 or not nx.is_connected(h):
            continue
        counts = brute_counts(h)
        mu = sum((-1) ** k * c * X ** (n - 2 * k) for k, c in enumerate(counts))
        z = sum(f.count_roots() for f, _ in sympy.sqf_list(sympy.Poly(mu, X))[1])
        oracle[z] += 1
    for z, c in oracle.items():
        if z <= 5:
            assert f"z={z}: {c} graphs" in reports[0].notes


def test_classification_threads_are_deterministic():
    one = [r.to_dict(timing=False) for r in v.verify_classification(6, threads=1)]
    two = [r.to_dict(timing=False) for r in v.verify_classification(6, threads=2)]
    assert one == two


def test_comatching_report_lists_partner():
    (r,) = v.verify_comatching("F(2)", n_cap=7)
    assert r.status == v.CONFIRMED
    assert [w.name for w in r.witnesses] == ["5.10"]
    assert "1 partner(s): 5.10" in r.notes


def test_tables_and_appendix_confirmed():
    for r in v.verify_tables() + v.verify_appendix():
        assert r.status == v.CONFIRMED, r.to_json(False)


def test_small_closed_form_grid():
    for r in v.verify_closed_forms(bound=3):
        assert r.status == v.CONFIRMED, r.to_json(False)


def test_star_exceptions_at_small_cap():
    reports = v.verify_theorem_exceptions("S(t)", n_cap=7)
    assert all(r.status == v.CONFIRMED for r in reports)
    nonunique = [r.claim for r in reports if "not matching unique" in r.notes]
    assert nonunique == [
        "exceptions:S(t):S(2)=K(1,2;1)",
        "exceptions:S(t):S'(2)=Kp(1,2;1)",
        "exceptions:S(t):S(3)=K(1,3;1)",
        "exceptions:S(t):S'(3)=Kp(1,3;1)",
        "exceptions:S(t):S(4)=K(1,4;1)",
    ]


def test_unknown_theorem_rejected():
    with pytest.raises(ValueError):
        v.verify_theorem_exceptions("nope")


def test_root_properties_small():
    reports = v.verify_root_properties(6)
    assert [r.claim for r in reports] == [
        "roots:real", "roots:interlacing", "roots:gallai-witness", "roots:at-least-minus-one"
    ]
    assert all(r.status == v.CONFIRMED for r in reports)


def test_counterexample_witness_decodes():
    # a report built from a failing graph carries a decodable witness
    g = parse_graph("K_{1,3}")
    with v._Timer() as t:
        pass
    r = v._report("demo", "scope", [g], t)
    assert r.status == v.COUNTEREXAMPLE
    assert is_isomorphic(graph6_decode(r.witnesses[0].graph6), g)
