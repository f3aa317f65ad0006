"""Exit criteria for the package, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line (shown even without
``-s``) and then asserts.  Run with ``pytest tests/test_acceptance.py``.
"""

import random
from itertools import combinations

import pytest

from matchroots import verify as v
from matchroots.appendix import APPENDIX_ROWS, appendix_graph
from matchroots.canon import canonical_form, is_isomorphic
from matchroots.enumerate import EnumSpec, enumerate_graphs
from matchroots.graph import connected_components, graph_from_edges
from matchroots.inputs import parse_graph
from matchroots.matching import matching_polynomial, matching_vector, matching_vector_bruteforce
from matchroots.poly import format_poly


@pytest.fixture
def verdict(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
    return emit


def _failing(reports):
    return [r for r in reports if not r.ok]


def test_criterion_1_table_reproduction(verdict):
    reports = v.verify_appendix()
    rows = [r for r in reports if r.claim.startswith("appendix:") and r.claim[9:10].isdigit()]
    classes = next(r for r in reports if r.claim == "appendix:coincidence-classes")
    # coincidences read straight off the printed polynomials
    by_poly: dict[str, list[str]] = {}
    for label, poly in APPENDIX_ROWS:
        by_poly.setdefault(poly, []).append(label)
    printed = sorted(tuple(ls) for ls in by_poly.values() if len(ls) > 1)
    ok = (
        not _failing(reports)
        and len(rows) == 30
        and printed == [("5.10", "5.11"), ("5.12", "5.13"), ("5.16", "5.17"), ("5.5", "5.6")]
        and "classes: {5.5,5.6}, {5.10,5.11}, {5.12,5.13}, {5.16,5.17}" in classes.notes
        and format_poly(matching_polynomial(appendix_graph("4.4"))) == "x^4-4x^2+2"
        and format_poly(matching_polynomial(appendix_graph("5.21"))) == "x^5-4x^3+3x"
    )
    verdict(1, ok, f"{len(rows)} rows, {len(_failing(reports))} failing reports")
    assert ok


def test_criterion_2_closed_forms(verdict):
    reports = v.verify_closed_forms(bound=6)
    cases = sum(int(r.notes[0].split()[0]) for r in reports)
    bad = _failing(reports)
    verdict(2, not bad and cases >= 2000, f"{cases} parameter tuples over {len(reports)} families")
    assert not bad and cases >= 2000


def test_criterion_3_classification_sweep(verdict):
    reports = v.verify_classification(9)
    main = reports[0]
    ok = not _failing(reports) and "n=9: 261080 connected classes" in main.notes
    verdict(3, ok, "; ".join(n for n in main.notes if n.startswith("z=")))
    assert ok


def test_criterion_4_friendship_uniqueness(verdict):
    partners = {n: v.find_comatching_partners(parse_graph(f"F({n})"), n_cap=9) for n in (1, 2, 3, 4)}
    f2 = partners[2]
    ok = (
        partners[1] == [] and partners[3] == [] and partners[4] == []
        and len(f2) == 1
        and format_poly(matching_polynomial(f2[0])) == "x^5-6x^3+5x"
        and is_isomorphic(f2[0], appendix_graph("5.10"))
    )
    verdict(4, ok, ", ".join(f"F_{n}: {len(p)} partner(s)" for n, p in partners.items()))
    assert ok


def test_criterion_5_tables_and_exception_sets(verdict):
    reports = v.verify_tables()
    summaries = {}
    for theorem in v.THEOREM_IDS:
        found = v.verify_theorem_exceptions(theorem, n_cap=9)
        reports += found
        summaries[theorem] = found[-1]
    duplicate_noted = "text discrepancy: (3, 0, 2) is listed 2 times" in summaries["K-family"].notes
    bad = _failing(reports)
    detail = "all pairs, remark identities and exception sets agree"
    if bad:
        detail = "; ".join(f"{r.claim} [{' | '.join(r.notes)}]" for r in bad)
    verdict(5, not bad and duplicate_noted, detail)
    # the K-family listing's repeated entry is reported, never failed on
    assert duplicate_noted and summaries["K-family"].ok
    assert not bad, detail


def test_criterion_6_root_properties(verdict):
    reports = v.verify_root_properties(8)
    bad = _failing(reports)
    at_least = next(r for r in reports if r.claim == "roots:at-least-minus-one")
    only_k2 = "graphs with every root ≥ -1 (n ≥ 2): K_2" in at_least.notes
    verdict(6, not bad and only_k2, ", ".join(f"{r.claim} {r.status}" for r in reports))
    assert not bad and only_k2


def _labeled_dedup(n: int) -> tuple[int, int]:
    pairs = list(combinations(range(n), 2))
    every, connected = set(), set()
    for mask in range(1 << len(pairs)):
        g = graph_from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        key = canonical_form(g)
        every.add(key)
        if len(connected_components(g)) == 1:
            connected.add(key)
    return len(every), len(connected)


def test_criterion_7_oracle_equivalence(verdict):
    mismatches = 0
    checked = 0
    for n in range(1, 9):
        for g in enumerate_graphs(EnumSpec(n)):
            checked += 1
            mismatches += matching_vector(g) != matching_vector_bruteforce(g)
    rnd = random.Random(7)
    for _ in range(500):
        n = rnd.randint(9, 14)
        p = rnd.uniform(0.1, 0.6)
        g = graph_from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rnd.random() < p])
        checked += 1
        mismatches += matching_vector(g) != matching_vector_bruteforce(g)
    counts = [_labeled_dedup(n) for n in range(1, 7)]
    ours = [
        (sum(1 for _ in enumerate_graphs(EnumSpec(n))), sum(1 for _ in enumerate_graphs(EnumSpec(n, connected_only=True))))
        for n in range(1, 7)
    ]
    expected = [(1, 1), (2, 1), (4, 2), (11, 6), (34, 21), (156, 112)]
    ok = mismatches == 0 and counts == expected and ours == expected
    verdict(7, ok, f"{checked} graphs vs brute force, {mismatches} mismatches; class counts {ours}")
    assert ok
