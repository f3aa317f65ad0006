"""Turning user text into graphs and graphs back into readable names.

Accepted input: a graph6 string, or a disjoint union of terms joined by
``∪`` or ``+``.  A term is an optional multiplier followed by a family
descriptor (``K(2,1;1)``, ``K_{1,5}``, ``F(2)``...) or a table label
(``5.18``); ``K'`` is accepted for ``Kp``.  Examples: ``5.18 ∪ K_1``,
``K'(4,2;3) + 2K_1``.
"""

from __future__ import annotations

import re

from .appendix import APPENDIX_ROWS, appendix_class, appendix_graph
from .canon import canonical_form
from .families import FamilyError, build, parse_descriptor, recognize_all
from .graph import Graph, Graph6Error, connected_components, disjoint_union, graph6_decode, graph6_encode

__all__ = ["InputError", "parse_graph", "name_graph"]


class InputError(ValueError):
    """Text that is neither graph6 nor a graph expression.

    ``position`` is the 0-based offset in the input where the problem starts.
    """

    def __init__(self, message: str, position: int = 0) -> None:
        super().__init__(message)
        self.position = position

    def annotate(self, text: str) -> str:
        """The message followed by the input and a caret under ``position``."""
        return f"{self}\n  {text}\n  {' ' * self.position}^"


_LABEL = re.compile(r"^\d+\.\d+$")
_MULT = re.compile(r"^(\d+)\s*(?=[A-Za-z])")


def _looks_like_graph6(text: str) -> bool:
    return bool(text) and all(63 <= ord(c) <= 126 for c in text)


def _term(text: str, offset: int) -> Graph:
    """Parse one union term; ``offset`` is where ``text`` starts in the full input."""
    offset += len(text) - len(text.lstrip())
    text = text.strip()
    count = 1
    m = _MULT.match(text)
    if m:
        count = int(m.group(1))
        offset += m.end()
        text = text[m.end():]
    if _LABEL.match(text):
        try:
            g = appendix_graph(text)
        except KeyError as exc:
            raise InputError(str(exc.args[0]), offset) from None
    else:
        try:
            g = build(parse_descriptor(text.replace("K'", "Kp").replace("K′", "Kp")))
        except FamilyError as exc:
            raise InputError(str(exc), offset) from None
    return disjoint_union(*([g] * count)) if count != 1 else g


def parse_graph(text: str) -> Graph:
    lead = len(text) - len(text.lstrip())
    text = text.strip()
    if not text:
        raise InputError("empty input")
    if _looks_like_graph6(text):
        try:
            return graph6_decode(text)
        except Graph6Error as exc:
            # a bare descriptor such as "K" is not a graph either way
            raise InputError(f"invalid graph6 {text!r}: {exc}", lead + len(text)) from None
    graphs = []
    start = 0
    for m in re.finditer(r"∪|\+|$", text):
        part = text[start:m.start()]
        if not part.strip():
            raise InputError(f"empty term in {text!r}", lead + start)
        graphs.append(_term(part, lead + start))
        start = m.end()
        if m.start() == len(text):
            break
    return disjoint_union(*graphs)


_NAME_ORDER = ("complete", "star", "complete_bipartite", "F", "S", "T", "K", "Kp", "L")


def _component_name(g: Graph) -> str:
    if g.n <= 2:
        return f"K_{g.n}"
    found = recognize_all(g)
    by_tag = {d.tag: d for d in sorted(found, key=lambda d: d.params)}
    for tag in _NAME_ORDER[:3]:
        if tag in by_tag:
            return str(by_tag[tag])
    if 2 <= g.n <= 5:
        label = _table_label(g)
        if label:
            return label
    for tag in _NAME_ORDER[3:]:
        if tag in by_tag:
            return str(by_tag[tag])
    return graph6_encode(g).decode("ascii")


def _table_label(g: Graph) -> str | None:
    key = canonical_form(g)
    labels = []
    for label, _ in APPENDIX_ROWS:
        if int(label.split(".")[0]) != g.n:
            continue
        try:
            if canonical_form(appendix_graph(label)) == key:
                return label
        except KeyError:
            if any(canonical_form(h) == key for h in appendix_class(label)):
                labels.append(label)
    return "/".join(labels) if labels else None


def name_graph(g: Graph) -> str:
    """A readable name such as ``K_{1,5} ∪ K_3`` or ``5.18 ∪ 2K_1``."""
    if g.n == 0:
        return "K_0"
    counts: dict[tuple[int, str], int] = {}
    for comp in connected_components(g):
        key = (-comp.n, _component_name(comp))
        counts[key] = counts.get(key, 0) + 1
    parts = []
    for key in sorted(counts):
        name = key[1]
        parts.append(name if counts[key] == 1 else f"{counts[key]}{name}")
    return " ∪ ".join(parts)
