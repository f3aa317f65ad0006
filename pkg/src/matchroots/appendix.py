"""Reference table of the connected graphs on 2 to 5 vertices and their matching polynomials.

Rows are identified by labels such as ``"4.4"`` or ``"5.21"``.  A row whose
polynomial occurs once among connected graphs of its order is identified by
that polynomial alone.  Rows sharing a polynomial with another row carry an
explicit edge list where the pictured graph is known; the pair ``5.5`` /
``5.6`` is only known as a set, so neither row is pinned individually.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, graph_from_edges
from .matching import matching_polynomial
from .poly import format_poly

__all__ = [
    "APPENDIX_ROWS",
    "PINNED_EDGES",
    "SET_ONLY",
    "appendix_polynomial",
    "appendix_graph",
    "appendix_class",
]

APPENDIX_ROWS: tuple[tuple[str, str], ...] = (
    ("2.1", "x^2-1"),
    ("3.1", "x^3-3x"),
    ("3.2", "x^3-2x"),
    ("4.1", "x^4-6x^2+3"),
    ("4.2", "x^4-5x^2+2"),
    ("4.3", "x^4-4x^2+1"),
    ("4.4", "x^4-4x^2+2"),
    ("4.5", "x^4-3x^2"),
    ("4.6", "x^4-3x^2+1"),
    ("5.1", "x^5-10x^3+15x"),
    ("5.2", "x^5-9x^3+12x"),
    ("5.3", "x^5-8x^3+9x"),
    ("5.4", "x^5-8x^3+10x"),
    ("5.5", "x^5-7x^3+6x"),
    ("5.6", "x^5-7x^3+6x"),
    ("5.7", "x^5-7x^3+7x"),
    ("5.8", "x^5-7x^3+8x"),
    ("5.9", "x^5-6x^3+4x"),
    ("5.10", "x^5-6x^3+5x"),
    ("5.11", "x^5-6x^3+5x"),
    ("5.12", "x^5-6x^3+6x"),
    ("5.13", "x^5-6x^3+6x"),
    ("5.14", "x^5-5x^3+2x"),
    ("5.15", "x^5-5x^3+3x"),
    ("5.16", "x^5-5x^3+4x"),
    ("5.17", "x^5-5x^3+4x"),
    ("5.18", "x^5-5x^3+5x"),
    ("5.19", "x^5-4x^3"),
    ("5.20", "x^5-4x^3+2x"),
    ("5.21", "x^5-4x^3+3x"),
)

# Rows that share their polynomial with another row.
PINNED_EDGES: dict[str, tuple[tuple[int, int], ...]] = {
    # L(1,2): a triangle joined to the center by two edges, plus a pendant vertex
    "5.10": ((0, 1), (0, 2), (0, 3), (2, 3), (2, 4), (3, 4)),
    # S(2,4), two triangles sharing a vertex
    "5.11": ((0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (2, 4)),
    # the house: a 4-cycle with a triangle on one edge
    "5.12": ((0, 1), (1, 3), (3, 2), (2, 0), (0, 4), (1, 4)),
    # K_{2,3}
    "5.13": ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)),
    # S(2,3): a triangle with a pendant path of length two
    "5.16": ((0, 1), (0, 3), (0, 4), (1, 3), (2, 4)),
    # K(2,1;2): a 4-cycle with a pendant vertex
    "5.17": ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3)),
}

SET_ONLY: tuple[tuple[str, ...], ...] = (("5.5", "5.6"),)

_ROW = dict(APPENDIX_ROWS)


def appendix_polynomial(label: str) -> str:
    try:
        return _ROW[label]
    except KeyError:
        raise KeyError(f"no table row {label!r}") from None


def _order(label: str) -> int:
    return int(label.split(".")[0])


@lru_cache(maxsize=None)
def _connected_by_poly(n: int) -> dict[str, tuple[Graph, ...]]:
    from .enumerate import EnumSpec, enumerate_graphs

    out: dict[str, list[Graph]] = {}
    for g in enumerate_graphs(EnumSpec(n, connected_only=True)):
        out.setdefault(format_poly(matching_polynomial(g)), []).append(g)
    return {k: tuple(v) for k, v in out.items()}


def appendix_class(label: str) -> tuple[Graph, ...]:
    """All connected graphs of the row's order with the row's polynomial."""
    return _connected_by_poly(_order(label)).get(appendix_polynomial(label), ())


def appendix_graph(label: str) -> Graph:
    """The graph of a table row; rows known only as part of a set are rejected."""
    if label in PINNED_EDGES:
        return graph_from_edges(_order(label), PINNED_EDGES[label])
    if any(label in group for group in SET_ONLY):
        raise KeyError(f"row {label} is only determined together with its pair")
    members = appendix_class(label)
    if len(members) != 1:
        raise KeyError(f"row {label} is not determined by its polynomial ({len(members)} graphs)")
    return members[0]
