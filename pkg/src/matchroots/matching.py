"""Matching counts, the matching polynomial, and the characteristic polynomial."""

from __future__ import annotations

import os
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path

from .canon import CanonicalLabel, canonical_form
from .graph import (
    Graph,
    component_mask,
    connected_components,
    delete_edge,
    delete_edge_ends,
    induced_subgraph,
    iter_bits,
)
from .poly import IntPoly

__all__ = [
    "MatchingVector",
    "matching_vector",
    "matching_vector_bruteforce",
    "matching_polynomial",
    "max_matching_size",
    "characteristic_polynomial",
    "is_forest",
    "max_degree_pivot",
]

MEMO_THRESHOLD = 12
BRUTEFORCE_MAX_ORDER = 16
CACHE_ENV = "MATCHROOTS_CACHE"


@dataclass(frozen=True)
class MatchingVector:
    """``counts[k]`` is the number of k-matchings, for ``k = 0 .. n // 2``."""

    counts: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if len(self.counts) != self.n // 2 + 1:
            raise ValueError("counts must have length n // 2 + 1")
        if self.counts[0] != 1:
            raise ValueError("m(G, 0) must be 1")

    def __getitem__(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    @property
    def max_matching(self) -> int:
        k = len(self.counts) - 1
        while self.counts[k] == 0:
            k -= 1
        return k

    def polynomial(self) -> IntPoly:
        coeffs = [0] * (self.n + 1)
        for k, m in enumerate(self.counts):
            coeffs[self.n - 2 * k] = -m if k & 1 else m
        return IntPoly(coeffs)


def _convolve(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


_canon_memo: dict[CanonicalLabel, list[int]] = {}


def _spill_path(label: CanonicalLabel) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return Path(root) / f"{label.n:02d}-{label.bits.hex()}.mv"


def _lookup(label: CanonicalLabel) -> list[int] | None:
    hit = _canon_memo.get(label)
    if hit is not None:
        return hit
    path = _spill_path(label)
    if path is not None and path.exists():
        hit = [int(t) for t in path.read_text().split()]
        _canon_memo[label] = hit
    return hit


def _store(label: CanonicalLabel, counts: list[int]) -> None:
    _canon_memo[label] = counts
    path = _spill_path(label)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(" ".join(map(str, counts)))


def _slot_bits(n: int) -> int:
    # total matchings of K_n (involution count) bounds every coefficient
    a, b = 1, 1
    for k in range(2, n + 1):
        a, b = b, b + (k - 1) * a
    return b.bit_length() + 1


def _pack(counts: list[int], width: int) -> int:
    out = 0
    for k, m in enumerate(counts):
        out |= m << (k * width)
    return out


def _unpack(packed: int, width: int) -> list[int]:
    mask = (1 << width) - 1
    out = []
    while packed:
        out.append(packed & mask)
        packed >>= width
    return out or [0]


class _Counter:
    """Vertex-mask recursion with k-matching counts packed into one int."""

    def __init__(self, adj: tuple[int, ...]) -> None:
        self.adj = adj
        self.width = _slot_bits(len(adj))
        self.memo: dict[int, int] = {}
        # labeling every large subproblem costs more than it saves within
        # one graph; it pays off only when results persist across runs
        self.shared = bool(os.environ.get(CACHE_ENV))

    def __call__(self, active: int) -> int:
        hit = self.memo.get(active)
        if hit is not None:
            return hit
        adj = self.adj
        seed = active & -active
        comp = component_mask(adj, seed, active)
        if comp != active:
            if comp == seed:
                res = self(active ^ seed)
            else:
                res = self(comp) * self(active ^ comp)
            self.memo[active] = res
            return res
        if active == seed:
            self.memo[active] = 1
            return 1
        label = None
        if self.shared and active.bit_count() >= MEMO_THRESHOLD:
            label = canonical_form(induced_subgraph(Graph._raw(len(adj), adj), iter_bits(active)))
            hit_list = _lookup(label)
            if hit_list is not None:
                res = _pack(hit_list, self.width)
                self.memo[active] = res
                return res
        # pivot on a maximum-degree vertex and peel its edges one at a time
        u = -1
        best = -1
        m = active
        while m:
            low = m & -m
            v = low.bit_length() - 1
            d = (adj[v] & active).bit_count()
            if d > best:
                best, u = d, v
            m ^= low
        rest = active & ~(1 << u)
        res = self(rest)
        acc = 0
        nb = adj[u] & active
        while nb:
            low = nb & -nb
            acc += self(rest & ~low)
            nb ^= low
        res += acc << self.width
        if label is not None:
            _store(label, _unpack(res, self.width))
        self.memo[active] = res
        return res


def _edge_recurrence(g: Graph, pivot: Callable[[Graph], tuple[int, int]]) -> list[int]:
    if g.num_edges == 0:
        return [1]
    live = [v for v in range(g.n) if g.adj[v]]
    if len(live) < g.n:
        g = induced_subgraph(g, live)
    comps = connected_components(g)
    if len(comps) > 1:
        out = [1]
        for c in comps:
            out = _convolve(out, _edge_recurrence(c, pivot))
        return out
    u, v = pivot(g)
    a = _edge_recurrence(delete_edge(g, u, v), pivot)
    b = _edge_recurrence(delete_edge_ends(g, u, v), pivot)
    out = list(a) + [0] * max(0, len(b) + 1 - len(a))
    for k, m in enumerate(b):
        out[k + 1] += m
    return out


def max_degree_pivot(g: Graph) -> tuple[int, int]:
    """First edge at a maximum-degree vertex."""
    u = max(range(g.n), key=lambda v: (g.degree(v), -v))
    return u, next(iter_bits(g.adj[u]))


def _finish(raw: list[int], n: int) -> MatchingVector:
    size = n // 2 + 1
    if len(raw) > size:
        if any(raw[size:]):
            raise AssertionError("matching larger than n // 2")
        raw = raw[:size]
    return MatchingVector(tuple(raw) + (0,) * (size - len(raw)), n)


def matching_vector(g: Graph, pivot: Callable[[Graph], tuple[int, int]] | None = None) -> MatchingVector:
    """Exact k-matching counts for every k.

    With no ``pivot`` the recurrence peels the edges of a maximum-degree
    vertex over vertex-induced subgraphs, memoized by vertex mask.  When
    ``MATCHROOTS_CACHE`` names a directory, components of 12 or more
    vertices are also memoized there by canonical form.  Passing a pivot
    rule ``g -> (u, v)`` runs the plain edge recurrence
    ``m(G,k) = m(G-e,k) + m(G-u-v,k-1)`` with that rule instead.
    """
    if pivot is not None:
        return _finish(_edge_recurrence(g, pivot), g.n)
    if g.n == 0:
        return MatchingVector((1,), 0)
    counter = _Counter(g.adj)
    return _finish(_unpack(counter((1 << g.n) - 1), counter.width), g.n)


def matching_vector_bruteforce(g: Graph) -> MatchingVector:
    """Count matchings by explicit backtracking over the edge list."""
    if g.n > BRUTEFORCE_MAX_ORDER:
        raise ValueError(f"brute force limited to n <= {BRUTEFORCE_MAX_ORDER}, got {g.n}")
    edges = g.edges()
    counts = [0] * (g.n // 2 + 1)

    def extend(start: int, used: int, k: int) -> None:
        counts[k] += 1
        for i in range(start, len(edges)):
            u, v = edges[i]
            if not (used >> u & 1 or used >> v & 1):
                extend(i + 1, used | 1 << u | 1 << v, k + 1)

    extend(0, 0, 0)
    return MatchingVector(tuple(counts), g.n)


def matching_polynomial(g: Graph) -> IntPoly:
    return matching_vector(g).polynomial()


def max_matching_size(g: Graph) -> int:
    return matching_vector(g).max_matching


def characteristic_polynomial(g: Graph) -> IntPoly:
    """``det(xI - A)`` by Berkowitz's division-free algorithm."""
    n = g.n
    a = [[g.adj[i] >> j & 1 for j in range(n)] for i in range(n)]
    poly = [1]  # descending coefficients of the leading principal block
    for i in range(n):
        col = [1, -a[i][i]]
        row = a[i][:i]
        vec = [a[j][i] for j in range(i)]
        for _ in range(i):
            col.append(-sum(r * c for r, c in zip(row, vec)))
            vec = [sum(a[r][c] * vec[c] for c in range(i)) for r in range(i)]
        poly = [
            sum(col[r - c] * poly[c] for c in range(min(r, i) + 1))
            for r in range(i + 2)
        ]
    return IntPoly.from_descending(poly)


def is_forest(g: Graph) -> bool:
    comps = 0
    remaining = (1 << g.n) - 1
    while remaining:
        comp = component_mask(g.adj, remaining & -remaining, remaining)
        remaining &= ~comp
        comps += 1
    return g.num_edges == g.n - comps
