"""Exact matching polynomials and distinct-root classification of small graphs."""

from .canon import canonical_form, canonical_labeling, is_isomorphic
from .graph import Graph, graph6_decode, graph6_encode, graph_from_edges
from .matching import characteristic_polynomial, matching_polynomial, matching_vector
from .poly import IntPoly, format_poly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "IntPoly",
    "canonical_form",
    "canonical_labeling",
    "characteristic_polynomial",
    "format_poly",
    "graph6_decode",
    "graph6_encode",
    "graph_from_edges",
    "is_isomorphic",
    "matching_polynomial",
    "matching_vector",
    "parse_poly",
]
