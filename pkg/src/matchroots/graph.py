"""Simple undirected graphs on at most 64 vertices, stored as bitset rows.

Vertex ``v`` of a :class:`Graph` is the integer ``v`` in ``range(n)``;
``adj[v]`` is an int whose bit ``u`` is set when ``u`` and ``v`` are adjacent.
All operations return new graphs.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import IO

MAX_ORDER = 64
GRAPH6_MAX_ORDER = 62


class GraphError(ValueError):
    """Raised for invalid graph construction or manipulation."""


class Graph6Error(ValueError):
    """Raised when a graph6 string cannot be parsed."""


class Graph:
    """An immutable simple graph.

    Equality is labeled equality (same order, same adjacency rows);
    use :func:`matchroots.canon.is_isomorphic` for isomorphism.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int] = ()) -> None:
        rows = tuple(adj) or (0,) * n
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order must be in [0, {MAX_ORDER}], got {n}")
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {u} has bits at or above n={n}")
            if row >> u & 1:
                raise GraphError(f"loop at vertex {u}")
            r = row
            while r:
                low = r & -r
                v = low.bit_length() - 1
                if not rows[v] >> u & 1:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
                r ^= low
        self.n = n
        self.adj = rows
        self._hash = None

    @classmethod
    def _raw(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # Trusted constructor for internal callers that already hold valid rows.
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        g._hash = None
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __len__(self) -> int:
        return self.n

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return component_mask(self.adj, 1, (1 << self.n) - 1) == (1 << self.n) - 1

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise GraphError("perm must be a permutation of range(n)")
        rows = [0] * n
        for u, row in enumerate(self.adj):
            new = 0
            for v in iter_bits(row):
                new |= 1 << perm[v]
            rows[perm[u]] = new
        return Graph._raw(n, tuple(rows))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def component_mask(adj: tuple[int, ...] | list[int], seed: int, active: int) -> int:
    """Bitmask of the component of ``active`` containing the vertices in ``seed``."""
    comp = seed
    frontier = seed
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & active & ~comp
        comp |= new
        frontier |= new
    return comp


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from unordered pairs; duplicates are merged."""
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order must be in [0, {MAX_ORDER}], got {n}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside range({n})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._raw(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return graph_from_edges(n, ())


def _drop_bit(mask: int, u: int) -> int:
    low = mask & ((1 << u) - 1)
    return low | ((mask >> (u + 1)) << u)


def delete_vertex(g: Graph, u: int) -> Graph:
    """Remove ``u``; vertices above ``u`` shift down by one."""
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} not in graph of order {g.n}")
    rows = tuple(_drop_bit(row, u) for i, row in enumerate(g.adj) if i != u)
    return Graph._raw(g.n - 1, rows)


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    for u in sorted(set(vertices), reverse=True):
        g = delete_vertex(g, u)
    return g


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph._raw(g.n, tuple(rows))


def delete_edge_ends(g: Graph, u: int, v: int) -> Graph:
    """Remove both endpoints of the edge ``{u, v}``."""
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return delete_vertices(g, (u, v))


def disjoint_union(*graphs: Graph) -> Graph:
    total = sum(g.n for g in graphs)
    if total > MAX_ORDER:
        raise GraphError(f"combined order {total} exceeds {MAX_ORDER}")
    rows: list[int] = []
    for g in graphs:
        shift = len(rows)
        rows.extend(row << shift for row in g.adj)
    return Graph._raw(total, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, renumbered in increasing order."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        new = 0
        for w in iter_bits(g.adj[v]):
            if w in index:
                new |= 1 << index[w]
        rows.append(new)
    return Graph._raw(len(keep), tuple(rows))


def connected_components(g: Graph) -> list[Graph]:
    """Components ordered by their smallest vertex index."""
    remaining = (1 << g.n) - 1
    out = []
    while remaining:
        seed = remaining & -remaining
        comp = component_mask(g.adj, seed, remaining)
        remaining &= ~comp
        out.append(induced_subgraph(g, iter_bits(comp)))
    return out


# --- named graphs -----------------------------------------------------------

def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._raw(n, tuple(full & ~(1 << v) for v in range(n)))


def complete_bipartite(r: int, s: int) -> Graph:
    return graph_from_edges(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def star(k: int) -> Graph:
    """K_{1,k} with center 0."""
    return complete_bipartite(1, k)


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph_from_edges(10, outer + spokes + inner)


# --- graph6 -----------------------------------------------------------------

def graph6_encode(g: Graph) -> bytes:
    """Encode in the short graph6 form (orders 0..62)."""
    n = g.n
    if n > GRAPH6_MAX_ORDER:
        raise Graph6Error(f"graph6 short form supports n <= {GRAPH6_MAX_ORDER}, got {n}")
    out = bytearray([n + 63])
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if not data:
        raise Graph6Error("empty graph6 string")
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} at position {pos} outside [63, 126]")
    n = data[0] - 63
    if n > GRAPH6_MAX_ORDER:
        raise Graph6Error("long-form graph6 headers are not supported")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(data) != expected:
        raise Graph6Error(
            f"graph6 of order {n} needs {expected} bytes, got {len(data)} (position {min(len(data), expected)})"
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[1 + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = (data[-1] - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error(f"nonzero padding bits at position {len(data) - 1}")
    return Graph._raw(n, tuple(rows))


def read_graph6_stream(stream: IO[str] | IO[bytes]) -> Iterator[Graph]:
    """Yield graphs from newline-delimited graph6; blank lines are skipped."""
    for lineno, line in enumerate(stream, 1):
        if isinstance(line, str):
            line = line.encode("ascii")
        line = line.strip()
        if not line or line.startswith(b">>graph6<<") and len(line) == 10:
            continue
        if line.startswith(b">>graph6<<"):
            line = line[10:]
        try:
            yield graph6_decode(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None


def write_graph6_stream(graphs: Iterable[Graph], stream: IO[str]) -> int:
    count = 0
    for g in graphs:
        stream.write(graph6_encode(g).decode("ascii") + "\n")
        count += 1
    return count
