"""Canonical labeling by partition refinement and backtracking.

The search individualizes a vertex of the first smallest non-singleton cell,
refines to an equitable ordered partition, and recurses until the partition
is discrete.  Among all leaves the relabeled adjacency matrix that is
lexicographically smallest (row-major, upper triangle) is canonical.

Automorphisms are detected when two leaves produce the same matrix; they
prune siblings that share an orbit under the automorphisms fixing the
current path, and cut the search back to the level where the equivalent
subtree diverged.  This keeps graphs with many
interchangeable pendant structures (stars, triangles hung off a center)
polynomial in practice.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph

__all__ = [
    "CanonicalLabel",
    "Labeling",
    "canonical_labeling",
    "canonical_form",
    "canonical_graph",
    "is_isomorphic",
]


@dataclass(frozen=True)
class CanonicalLabel:
    """Order plus the upper-triangle bit string of the canonical relabeling."""

    n: int
    bits: bytes

    def to_graph(self) -> Graph:
        n = self.n
        rows = [0] * n
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                if self.bits[k >> 3] >> (7 - (k & 7)) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k += 1
        return Graph._raw(n, tuple(rows))


@dataclass(frozen=True)
class Labeling:
    order: tuple[int, ...]
    """``order[i]`` is the vertex placed at canonical position ``i``."""
    label: CanonicalLabel
    automorphisms: tuple[tuple[int, ...], ...]
    """Automorphisms met during the search; empty iff the group is trivial."""

    @property
    def position(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


def _mask(vertices: list[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _refine(adj: tuple[int, ...], cells: list[list[int]], queue: deque[int]) -> list[list[int]]:
    masks = [_mask(c) for c in cells]
    while queue and len(cells) < len(adj):
        splitter = queue.popleft()
        touched = 0
        for w in _bits(splitter):
            touched |= adj[w]
        out: list[list[int]] = []
        out_masks: list[int] = []
        for cell, cmask in zip(cells, masks):
            if len(cell) == 1 or not cmask & touched:
                out.append(cell)
                out_masks.append(cmask)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & splitter).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                out_masks.append(cmask)
                continue
            pieces = [groups[c] for c in sorted(groups)]
            largest = max(range(len(pieces)), key=lambda i: (len(pieces[i]), -i))
            for i, piece in enumerate(pieces):
                m = _mask(piece)
                out.append(piece)
                out_masks.append(m)
                if i != largest:
                    queue.append(m)
        cells, masks = out, out_masks
    return cells


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _split_twin_cells(adj: tuple[int, ...], cells: list[list[int]]) -> tuple[list[list[int]], list[tuple[int, int]]]:
    """Make every cell of mutual twins discrete.

    Permuting twins fixes every other vertex, so any order of such a cell
    yields the same leaf and branching on it is wasted work.  Returns the new
    cells and the twin transpositions found.
    """
    out: list[list[int]] = []
    swaps: list[tuple[int, int]] = []
    for cell in cells:
        if len(cell) > 1:
            v0 = cell[0]
            open_nb = adj[v0]
            closed_nb = open_nb | 1 << v0
            if all(adj[v] == open_nb for v in cell[1:]) or all(adj[v] | 1 << v == closed_nb for v in cell[1:]):
                ordered = sorted(cell)
                out.extend([v] for v in ordered)
                swaps.extend((ordered[0], v) for v in ordered[1:])
                continue
        out.append(cell)
    return out, swaps


def _leaf_key(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    key = []
    top = n - 1
    for v in order:
        row = 0
        r = adj[v]
        while r:
            low = r & -r
            row |= 1 << (top - pos[low.bit_length() - 1])
            r ^= low
        key.append(row)
    return tuple(key)


class _Search:
    def __init__(self, adj: tuple[int, ...]) -> None:
        self.adj = adj
        self.n = len(adj)
        self.first_path: list[int] | None = None
        self.first_order: list[int] | None = None
        self.first_key: tuple[int, ...] | None = None
        self.best_path: list[int] | None = None
        self.best_order: list[int] | None = None
        self.best_key: tuple[int, ...] | None = None
        self.autos: list[tuple[int, ...]] = []
        self.seen_swaps: set[tuple[int, int]] = set()
        self._orbit_cache: dict[tuple[int, ...], tuple[int, list[int]]] = {}

    def _record(self, src: list[int], dst: list[int]) -> None:
        gamma = [0] * self.n
        for a, b in zip(src, dst):
            gamma[a] = b
        self.autos.append(tuple(gamma))

    @staticmethod
    def _diverge(a: list[int], b: list[int]) -> int:
        i = 0
        while i < len(a) and i < len(b) and a[i] == b[i]:
            i += 1
        return i

    def _orbit_roots(self, path: list[int]) -> list[int]:
        """Orbits of the group generated by known automorphisms fixing ``path`` pointwise."""
        key = tuple(path)
        cached = self._orbit_cache.get(key)
        if cached is not None and cached[0] == len(self.autos):
            return cached[1]
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.autos:
            if any(gamma[v] != v for v in path):
                continue
            for x, y in enumerate(gamma):
                if x != y:
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[max(rx, ry)] = min(rx, ry)
        roots = [find(x) for x in range(self.n)]
        self._orbit_cache[key] = (len(self.autos), roots)
        return roots

    def run(self, cells: list[list[int]], path: list[int]) -> int:
        level = len(path)
        if len(cells) < self.n:
            cells, swaps = _split_twin_cells(self.adj, cells)
            for a, b in swaps:
                if (a, b) not in self.seen_swaps:
                    self.seen_swaps.add((a, b))
                    gamma = list(range(self.n))
                    gamma[a], gamma[b] = b, a
                    self.autos.append(tuple(gamma))
        if len(cells) == self.n:
            order = [c[0] for c in cells]
            key = _leaf_key(self.adj, order)
            if self.first_key is None:
                self.first_path, self.first_order, self.first_key = path, order, key
                self.best_path, self.best_order, self.best_key = path, order, key
                return level
            if key == self.first_key:
                self._record(self.first_order, order)
                return self._diverge(self.first_path, path)
            if key == self.best_key:
                self._record(self.best_order, order)
                return self._diverge(self.best_path, path)
            if key < self.best_key:
                self.best_path, self.best_order, self.best_key = path, order, key
            return level

        target = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        cell = cells[target]
        done: list[int] = []
        for v in sorted(cell):
            if done and self.autos:
                roots = self._orbit_roots(path)
                if any(roots[d] == roots[v] for d in done):
                    continue
            rest = [w for w in cell if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            child = _refine(self.adj, child, deque([1 << v]))
            ret = self.run(child, path + [v])
            done.append(v)
            if ret < level:
                return ret
        return level


def canonical_labeling(g: Graph) -> Labeling:
    n = g.n
    if n == 0:
        return Labeling((), CanonicalLabel(0, b""), ())
    full = (1 << n) - 1
    cells = _refine(g.adj, [list(range(n))], deque([full]))
    search = _Search(g.adj)
    search.run(cells, [])
    assert search.best_order is not None and search.best_key is not None
    return Labeling(
        tuple(search.best_order),
        _pack(n, search.best_key),
        tuple(search.autos),
    )


def _pack(n: int, key: tuple[int, ...]) -> CanonicalLabel:
    nbits = n * (n - 1) // 2
    out = bytearray((nbits + 7) // 8)
    k = 0
    top = n - 1
    for i in range(n):
        row = key[i]
        for j in range(i + 1, n):
            if row >> (top - j) & 1:
                out[k >> 3] |= 0x80 >> (k & 7)
            k += 1
    return CanonicalLabel(n, bytes(out))


def canonical_form(g: Graph) -> CanonicalLabel:
    return canonical_labeling(g).label


def canonical_graph(g: Graph) -> Graph:
    return canonical_form(g).to_graph()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
