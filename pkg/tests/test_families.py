from itertools import product

import pytest

from matchroots.canon import is_isomorphic
from matchroots.families import (
    F,
    FamilyDescriptor,
    FamilyError,
    GSet,
    HSet,
    K,
    Kp,
    L,
    S,
    T,
    build,
    closed_form_mu,
    enumerate_family_set,
    parse_descriptor,
    recognize,
    recognize_all,
    single_graph_descriptors,
    validate,
)
from matchroots.graph import path_graph
from matchroots.matching import matching_polynomial
from matchroots.poly import IntPoly, format_poly, parse_poly


def expand(*factors: str) -> IntPoly:
    out = IntPoly((1,))
    for f in factors:
        out = out * parse_poly(f)
    return out


def test_friendship_two():
    g = build(F(2))
    assert (g.n, g.num_edges) == (5, 6)
    assert format_poly(matching_polynomial(g)) == "x^5-6x^3+5x"


def test_t23_size():
    g = build(T(2, 3))
    assert (g.n, g.num_edges) == (9, 8)


def test_l11():
    g = build(L(1, 1))
    assert g.n == 5
    assert matching_polynomial(g) == expand("x", "x^4-5x^2+4")


@pytest.mark.parametrize(
    "desc, factors",
    [
        (S(3, 5), ("x", "x^2-6", "x^2-1", "x^2-1")),
        (K(2, 1, 1), ("x", "x^4-4x^2+3")),
        (L(2, 1), ("x^2", "x^4-6x^2+7")),
        (S(2, 2), ("x", "x^2-3", "x^2-1")),
    ],
)
def test_closed_form_examples(desc, factors):
    assert closed_form_mu(desc) == expand(*factors)
    assert matching_polynomial(build(desc)) == expand(*factors)


def test_s35_expanded():
    assert format_poly(closed_form_mu(S(3, 5))) == "x^7-8x^5+13x^3-6x"


def test_gset_examples():
    [g] = enumerate_family_set(GSet(1, 1, 0, 1, 1))
    assert is_isomorphic(g, path_graph(3))
    assert is_isomorphic(g, build(S(1, 1)))
    members = enumerate_family_set(GSet(2, 3, 1, 4, 1))
    assert members
    # the x-exponent is r(k-1)+t-1 = 4, so the polynomial has degree 10 = order
    expected = expand("x^4", "x^2-3", "x^4-7x^2+7")
    assert all(matching_polynomial(g) == expected for g in members)
    assert closed_form_mu(GSet(2, 3, 1, 4, 1)) == expected


def test_k_family_sets_are_single_graphs():
    for k, t in product(range(1, 5), range(0, 4)):
        for l in range(1, k + 1):
            assert len(enumerate_family_set(GSet(1, k, t, l + t, 0))) == 1
            [g] = enumerate_family_set(GSet(1, k, t, l + t + 1, 1))
            assert is_isomorphic(g, build(Kp(k, t, l)))


def test_closed_forms_on_single_graph_grid():
    checked = 0
    for n in range(1, 11):
        for desc in single_graph_descriptors(n):
            assert matching_polynomial(build(desc)) == closed_form_mu(desc), desc
            checked += 1
    assert checked > 200


def test_closed_forms_on_small_set_grid():
    for r, k, t, p, q in product(range(3), range(1, 4), range(3), range(7), range(3)):
        desc = GSet(r, k, t, p, q)
        try:
            validate(desc)
        except FamilyError:
            continue
        expected = closed_form_mu(desc)
        for g in enumerate_family_set(desc):
            assert g.n == r * (k + 1) + t + 1
            assert g.is_connected()
            assert matching_polynomial(g) == expected


def test_hset_members_share_the_closed_form():
    for desc in (HSet(0, 1, 2, 2, 0, 2), HSet(1, 2, 1, 3, 1, 4), HSet(2, 1, 0, 3, 2, 3)):
        members = enumerate_family_set(desc)
        assert members
        assert {matching_polynomial(g) for g in members} == {closed_form_mu(desc)}


@pytest.mark.parametrize("maker", [K, Kp])
def test_swapped_parameters_give_isomorphic_graphs(maker):
    for k, t in product(range(1, 6), range(0, 5)):
        for l in range(1, k + 1):
            a, b = build(maker(k, t, l)), build(maker(l + t, k - l, l))
            assert is_isomorphic(a, b)


def test_recognize_reports_swapped_descriptor():
    # K(l+t, k-l; l) with k=4, t=1, l=2
    found = recognize_all(build(K(3, 2, 2)))
    assert K(4, 1, 2) in found
    assert K(3, 2, 2) in found


def test_recognize_round_trip():
    for n in range(3, 9):
        for desc in single_graph_descriptors(n):
            g = build(desc)
            got = recognize(g)
            assert got is not None
            assert is_isomorphic(build(got), g)
            assert desc in recognize_all(g)


def test_k3_is_friendship_and_complete():
    found = recognize_all(build(FamilyDescriptor("complete", (3,))))
    assert F(1) in found
    assert FamilyDescriptor("complete", (3,)) in found


def test_friendship_invariants():
    for n in range(1, 5):
        g = build(F(n))
        assert (g.n, g.num_edges) == (2 * n + 1, 3 * n)
        expected = expand("x", f"x^2-{2 * n + 1}", *(["x^2-1"] * (n - 1)))
        assert matching_polynomial(g) == expected


@pytest.mark.parametrize(
    "desc",
    [S(2, 5), S(0, 0), T(0, 2), K(2, 1, 0), K(1, 0, 2), L(1, 4), GSet(1, 2, 0, 5, 1), HSet(0, 1, 0, 0, 0, 4)],
)
def test_validation_rejects(desc):
    with pytest.raises(FamilyError):
        validate(desc)


def test_kprime_allows_zero_leaves():
    validate(Kp(2, 2, 0))
    assert build(Kp(2, 2, 0)).is_connected()


@pytest.mark.parametrize(
    "text, desc",
    [
        ("S(3,5)", S(3, 5)),
        ("K(2,1;1)", K(2, 1, 1)),
        ("Kp(2,1;2)", Kp(2, 1, 2)),
        ("L(1,2)", L(1, 2)),
        ("T(2,3)", T(2, 3)),
        ("F(4)", F(4)),
        ("G(r=2,k=3,t=1,p=4,q=1)", GSet(2, 3, 1, 4, 1)),
        ("H(r=0,s=1,t=2,p=2,q=0,l=2)", HSet(0, 1, 2, 2, 0, 2)),
        ("K_{2,3}", FamilyDescriptor("complete_bipartite", (2, 3))),
        ("K5", FamilyDescriptor("complete", (5,))),
    ],
)
def test_parse_descriptor(text, desc):
    assert parse_descriptor(text) == desc


@pytest.mark.parametrize("text", ["Q(1)", "S(1)", "S(a,b)", "G(r=1)", "K(2,1"])
def test_parse_descriptor_errors(text):
    with pytest.raises(FamilyError):
        parse_descriptor(text)
