"""Isomorph-free generation of graphs by canonical augmentation.

A graph of order ``m + 1`` is built from a graph ``P`` of order ``m`` by
adding vertex ``m`` joined to a subset ``S`` of ``P``.  Each child ``C`` has a
canonical deletion vertex ``v*``: among vertices minimising
``(degree, -sum of neighbour degrees, -edges among neighbours)`` the one
placed last by the canonical labeling.  ``C`` is kept only when ``C - v*`` is
isomorphic to ``P``, so every class has exactly one parent class; siblings
that are isomorphic to each other are removed by canonical form.

Two shortcuts avoid most labelings.  Neighbour sets in one orbit of the
parent's automorphism group give isomorphic children, so only the smallest
set of each orbit is tried.  If the new vertex is then the only one with the
minimal key, it is ``v*`` by definition and the child needs no labeling at
all: an isomorphism between two such siblings would fix the new vertex and
restrict to an automorphism of ``P`` carrying one set to the other.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .canon import CanonicalLabel, canonical_form, canonical_labeling
from .graph import Graph, delete_vertex, read_graph6_stream

__all__ = [
    "EnumSpec",
    "EnumError",
    "MAX_ENUM_ORDER",
    "enumerate_graphs",
    "enumerate_extensions",
    "enumerate_with_invariant",
    "ingest_graph6",
    "two_matchings",
]

MAX_ENUM_ORDER = 10


class EnumError(ValueError):
    """Invalid enumeration request."""


@dataclass(frozen=True)
class EnumSpec:
    n: int
    connected_only: bool = False
    edge_count: int | None = None
    max_two_matchings: int | None = None
    """Prune any branch whose number of 2-matchings exceeds this."""
    partition: tuple[int, int] = (0, 1)
    """``(index, count)``: emit only this share of the search tree."""

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ENUM_ORDER:
            raise EnumError(f"order must be in [1, {MAX_ENUM_ORDER}], got {self.n}")
        if self.edge_count is not None and not 0 <= self.edge_count <= comb(self.n, 2):
            raise EnumError(f"edge count {self.edge_count} impossible on {self.n} vertices")
        index, count = self.partition
        if count < 1 or not 0 <= index < count:
            raise EnumError(f"bad partition {self.partition}")


def two_matchings(g: Graph) -> int:
    """m(G, 2) = C(e, 2) minus pairs of edges sharing a vertex."""
    e = g.num_edges
    return comb(e, 2) - sum(comb(d, 2) for d in g.degrees())


def _key(adj: tuple[int, ...], deg: list[int], v: int) -> tuple[int, int, int]:
    nb = adj[v]
    nds = 0
    inner = 0
    m = nb
    while m:
        low = m & -m
        w = low.bit_length() - 1
        nds += deg[w]
        inner += (adj[w] & nb).bit_count()
        m ^= low
    return (deg[v], -nds, -inner)


class _Node:
    """A parent graph with lazily computed labeling data."""

    __slots__ = ("graph", "_label", "_generators")

    def __init__(self, graph: Graph) -> None:
        self.graph = graph
        self._label: CanonicalLabel | None = None
        self._generators: tuple[tuple[int, ...], ...] | None = None

    def _compute(self) -> None:
        lab = canonical_labeling(self.graph)
        self._label = lab.label
        self._generators = lab.automorphisms

    @property
    def label(self) -> CanonicalLabel:
        if self._label is None:
            self._compute()
        return self._label  # type: ignore[return-value]

    @property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        """Generators of the automorphism group (empty when it is trivial)."""
        if self._generators is None:
            self._compute()
        return self._generators  # type: ignore[return-value]


def _subset_orbit(s: int, generators: tuple[tuple[int, ...], ...]) -> set[int]:
    orbit = {s}
    frontier = [s]
    while frontier:
        t = frontier.pop()
        for gamma in generators:
            img = 0
            m = t
            while m:
                low = m & -m
                img |= 1 << gamma[low.bit_length() - 1]
                m ^= low
            if img not in orbit:
                orbit.add(img)
                frontier.append(img)
    return orbit


def _children(node: _Node, prune: Callable[[Graph], bool]) -> Iterator[tuple[Graph, int]]:
    """Accepted children of ``node`` as ``(child, neighbour mask)`` in mask order."""
    p = node.graph
    m = p.n
    deg = p.degrees()
    min_deg = min(deg, default=0)
    seen: set[CanonicalLabel] = set()
    candidates: list[int] = []
    # the new vertex must have minimum degree in the child: |S| <= min_deg + 1,
    # and every vertex of degree < |S| must be in S
    for size in range(0, min(m, min_deg + 1) + 1):
        forced = 0
        for v in range(m):
            if deg[v] < size:
                forced |= 1 << v
        nforced = forced.bit_count()
        if nforced > size:
            continue
        free = [v for v in range(m) if not forced >> v & 1]
        for extra in combinations(free, size - nforced):
            s = forced
            for v in extra:
                s |= 1 << v
            candidates.append(s)
    candidates.sort()
    generators = node.generators
    covered: set[int] = set()
    for s in candidates:
        if generators:
            # subsets in one orbit of Aut(P) give isomorphic children
            if s in covered:
                continue
            covered |= _subset_orbit(s, generators)
        rows = list(p.adj)
        for v in range(m):
            if s >> v & 1:
                rows[v] |= 1 << m
        rows.append(s)
        child = Graph._raw(m + 1, tuple(rows))
        if prune(child):
            continue
        cdeg = [r.bit_count() for r in rows]
        adj = child.adj
        w_key = _key(adj, cdeg, m)
        tied = False
        beaten = False
        for v in range(m):
            if cdeg[v] > w_key[0]:
                continue
            k = _key(adj, cdeg, v)
            if k < w_key:
                beaten = True
                break
            if k == w_key:
                tied = True
        if beaten:
            continue
        if not tied:
            yield child, s
            continue
        lab = canonical_labeling(child)
        if lab.label in seen:
            continue
        pos = lab.position
        v_star = max(
            (v for v in range(m + 1) if _key(adj, cdeg, v) == w_key),
            key=lambda v: pos[v],
        )
        if v_star != m and canonical_form(delete_vertex(child, v_star)) != node.label:
            continue
        seen.add(lab.label)
        yield child, s


def _edge_bounds(spec: EnumSpec) -> Callable[[Graph], bool]:
    """Pruning predicate for intermediate graphs.

    Deleting a minimum-degree vertex never lowers edge density, so every
    ancestor of a graph with ``e`` edges on ``n`` vertices has at least
    ``e * C(m, 2) / C(n, 2)`` edges at order ``m``, and at most ``e``.
    2-matchings only grow when vertices and edges are added.
    """
    n, e, cap = spec.n, spec.edge_count, spec.max_two_matchings
    total = comb(n, 2)

    def prune(g: Graph) -> bool:
        if e is not None:
            ge = g.num_edges
            if ge > e or ge * total < e * comb(g.n, 2):
                return True
        if cap is not None and two_matchings(g) > cap:
            return True
        return False

    return prune


def enumerate_extensions(spec: EnumSpec) -> Iterator[tuple[Graph, Graph | None, int]]:
    """Yield ``(graph, parent, mask)`` for every class of order ``spec.n``.

    ``graph`` is ``parent`` plus vertex ``n - 1`` joined to the vertices in
    ``mask``; ``parent`` is ``None`` for the single vertex.  The same parent
    object is shared by consecutive siblings, which lets callers cache work
    per parent.
    """
    prune = _edge_bounds(spec)
    index, count = spec.partition
    split_order = min(spec.n, 5) if count > 1 else 0
    counter = [0]
    root = Graph._raw(1, (0,))
    if prune(root):
        return

    def walk(node: _Node) -> Iterator[tuple[Graph, Graph | None, int]]:
        order = node.graph.n + 1
        for child, mask in _children(node, prune):
            if order == split_order:
                mine = counter[0] % count == index
                counter[0] += 1
                if not mine:
                    continue
            if order == spec.n:
                if _accept(spec, child):
                    yield child, node.graph, mask
            else:
                yield from walk(_Node(child))

    if spec.n == 1:
        if index == 0 and _accept(spec, root):
            yield root, None, 0
        return
    yield from walk(_Node(root))


def _accept(spec: EnumSpec, g: Graph) -> bool:
    if spec.edge_count is not None and g.num_edges != spec.edge_count:
        return False
    if spec.max_two_matchings is not None and two_matchings(g) > spec.max_two_matchings:
        return False
    return not spec.connected_only or g.is_connected()


def enumerate_graphs(spec: EnumSpec) -> Iterator[Graph]:
    """One graph per isomorphism class, in a deterministic order."""
    for g, _, _ in enumerate_extensions(spec):
        yield g


def enumerate_with_invariant(spec: EnumSpec, key: Callable[[Graph], bytes]) -> dict[bytes, list[Graph]]:
    """Group the enumerated classes by ``key``; groups and members keep generation order."""
    groups: dict[bytes, list[Graph]] = {}
    for g in enumerate_graphs(spec):
        groups.setdefault(key(g), []).append(g)
    return groups


def ingest_graph6(stream, spec: EnumSpec | None = None) -> Iterator[Graph]:
    """Read an external graph6 stream, applying the filters of ``spec`` if given."""
    for g in read_graph6_stream(stream):
        if spec is None:
            yield g
        elif g.n == spec.n and _accept(spec, g):
            yield g
