"""Parametric graph families built around a center vertex.

Every family attaches a center vertex ``u`` to ``r`` stars ``K_{1,k}``,
``t`` isolated vertices and ``s`` triangles.  Vertex numbering of built
graphs: ``u = 0``; star centers ``1..r``; the leaves of star 1, star 2, ...;
the ``t`` formerly isolated vertices; then triangles, three vertices each.
Within a star or triangle the vertices joined to ``u`` come first.

Descriptor text syntax::

    S(3,5)  T(2,3)  K(2,1;1)  Kp(2,1;2)  L(1,2)  F(4)
    G(r=2,k=3,t=1,p=4,q=1)  H(r=0,s=1,t=2,p=2,q=0,l=2)
    K5  K_5  K_{2,3}  K2,3  Star(4)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, factorial

from .canon import CanonicalLabel, canonical_form
from .graph import Graph, complete_bipartite, complete_graph, graph_from_edges
from .poly import X, IntPoly

__all__ = [
    "FamilyDescriptor",
    "FamilyError",
    "parse_descriptor",
    "build",
    "enumerate_family_set",
    "closed_form_mu",
    "recognize",
    "recognize_all",
    "single_graph_descriptors",
]

SINGLE_TAGS = ("complete", "complete_bipartite", "star", "S", "T", "K", "Kp", "L", "F")
SET_TAGS = ("G", "H")

_PARAM_NAMES = {
    "complete": ("n",),
    "complete_bipartite": ("r", "s"),
    "star": ("k",),
    "S": ("r", "s"),
    "T": ("r", "k"),
    "K": ("k", "t", "l"),
    "Kp": ("k", "t", "l"),
    "L": ("t", "l"),
    "F": ("n",),
    "G": ("r", "k", "t", "p", "q"),
    "H": ("r", "s", "t", "p", "q", "l"),
}


class FamilyError(ValueError):
    """Invalid family descriptor or parameters outside the family's range."""


@dataclass(frozen=True)
class FamilyDescriptor:
    tag: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.tag not in _PARAM_NAMES:
            raise FamilyError(f"unknown family tag {self.tag!r}")
        if len(self.params) != len(_PARAM_NAMES[self.tag]):
            raise FamilyError(f"{self.tag} takes parameters {_PARAM_NAMES[self.tag]}")

    def __getattr__(self, name: str) -> int:
        names = _PARAM_NAMES.get(object.__getattribute__(self, "tag"), ())
        if name in names:
            return self.params[names.index(name)]
        raise AttributeError(name)

    @property
    def is_set(self) -> bool:
        return self.tag in SET_TAGS

    def __str__(self) -> str:
        p = self.params
        if self.tag == "complete":
            return f"K_{p[0]}"
        if self.tag == "complete_bipartite":
            return f"K_{{{p[0]},{p[1]}}}"
        if self.tag == "star":
            return f"K_{{1,{p[0]}}}"
        if self.tag in ("K", "Kp"):
            return f"{self.tag}({p[0]},{p[1]};{p[2]})"
        if self.tag in SET_TAGS:
            inner = ",".join(f"{n}={v}" for n, v in zip(_PARAM_NAMES[self.tag], p))
            return f"{self.tag}({inner})"
        return f"{self.tag}({','.join(map(str, p))})"


def S(r: int, s: int) -> FamilyDescriptor:
    return FamilyDescriptor("S", (r, s))


def T(r: int, k: int) -> FamilyDescriptor:
    return FamilyDescriptor("T", (r, k))


def K(k: int, t: int, l: int) -> FamilyDescriptor:
    return FamilyDescriptor("K", (k, t, l))


def Kp(k: int, t: int, l: int) -> FamilyDescriptor:
    return FamilyDescriptor("Kp", (k, t, l))


def L(t: int, l: int) -> FamilyDescriptor:
    return FamilyDescriptor("L", (t, l))


def F(n: int) -> FamilyDescriptor:
    return FamilyDescriptor("F", (n,))


def GSet(r: int, k: int, t: int, p: int, q: int) -> FamilyDescriptor:
    return FamilyDescriptor("G", (r, k, t, p, q))


def HSet(r: int, s: int, t: int, p: int, q: int, l: int) -> FamilyDescriptor:
    return FamilyDescriptor("H", (r, s, t, p, q, l))


# -- parsing -------------------------------------------------------------------

_CALL = re.compile(r"^\s*([A-Za-z]+)\s*\((.*)\)\s*$")
_COMPLETE = re.compile(r"^\s*K_?\{?(\d+)\}?\s*$")
_BIPARTITE = re.compile(r"^\s*K_?\{?(\d+)\s*,\s*(\d+)\}?\s*$")


def parse_descriptor(text: str) -> FamilyDescriptor:
    """Parse descriptor text such as ``K(2,1;1)`` or ``G(r=2,k=3,t=1,p=4,q=1)``."""
    m = _BIPARTITE.match(text)
    if m:
        return FamilyDescriptor("complete_bipartite", (int(m.group(1)), int(m.group(2))))
    m = _COMPLETE.match(text)
    if m:
        return FamilyDescriptor("complete", (int(m.group(1)),))
    m = _CALL.match(text)
    if not m:
        raise FamilyError(f"cannot parse family descriptor {text!r}")
    name, body = m.group(1), m.group(2)
    tag = {"Star": "star", "star": "star"}.get(name, name)
    if tag not in _PARAM_NAMES:
        raise FamilyError(f"unknown family {name!r} in {text!r}")
    names = _PARAM_NAMES[tag]
    parts = [x.strip() for x in re.split(r"[,;]", body) if x.strip()]
    if parts and all("=" in x for x in parts):
        given: dict[str, int] = {}
        for x in parts:
            key, _, val = x.partition("=")
            key = key.strip()
            if key == "ell":
                key = "l"
            if key not in names:
                raise FamilyError(f"{name} has no parameter {key!r}")
            given[key] = _int(val, text)
        missing = [n for n in names if n not in given]
        if missing:
            raise FamilyError(f"{name} is missing parameters {missing}")
        values = tuple(given[n] for n in names)
    else:
        values = tuple(_int(x, text) for x in parts)
    if len(values) != len(names):
        raise FamilyError(f"{name} expects {len(names)} parameters, got {len(values)} in {text!r}")
    return FamilyDescriptor(tag, values)


def _int(s: str, text: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise FamilyError(f"parameter {s.strip()!r} in {text!r} is not an integer") from None


# -- validation ------------------------------------------------------------------

def _require(cond: bool, desc: FamilyDescriptor, constraint: str) -> None:
    if not cond:
        raise FamilyError(f"{desc}: violates {constraint}")


def validate(desc: FamilyDescriptor) -> None:
    tag, p = desc.tag, desc.params
    _require(all(v >= 0 for v in p), desc, "non-negative parameters")
    if tag == "complete":
        _require(p[0] >= 1, desc, "n >= 1")
    elif tag == "complete_bipartite":
        _require(p[0] >= 1 and p[1] >= 1, desc, "r, s >= 1")
    elif tag == "star":
        _require(p[0] >= 1, desc, "k >= 1")
    elif tag == "S":
        r, s = p
        _require(r >= 1, desc, "r >= 1")
        _require(r <= s <= 2 * r, desc, "r <= s <= 2r")
    elif tag == "T":
        _require(p[0] >= 1 and p[1] >= 1, desc, "r >= 1, k >= 1")
    elif tag in ("K", "Kp"):
        k, _t, l = p
        _require(k >= 1, desc, "k >= 1")
        # K' stays connected with l = 0 since u is joined to the star center
        low = 1 if tag == "K" else 0
        _require(low <= l <= k, desc, f"{low} <= l <= k")
    elif tag == "L":
        _require(p[1] in (1, 2, 3), desc, "l in {1, 2, 3}")
    elif tag == "F":
        _require(p[0] >= 1, desc, "n >= 1")
    elif tag == "G":
        r, k, t, pp, q = p
        _require(k >= 1, desc, "k >= 1")
        _require(r + t <= pp <= r * (k + 1) + t, desc, "r+t <= p <= r(k+1)+t")
        _require(q <= r, desc, "0 <= q <= r")
    elif tag == "H":
        r, s, t, pp, q, l = p
        _require(r + t <= pp <= 4 * r + t, desc, "r+t <= p <= r(k+1)+t with k=3")
        _require(q <= r, desc, "0 <= q <= r")
        _require(s <= l <= 3 * s, desc, "s <= l <= 3s")


# -- construction ------------------------------------------------------------------

def _center_graph(
    k: int,
    centers_joined: list[bool],
    leaves_joined: list[int],
    t: int,
    triangle_edges: list[int] = (),
) -> Graph:
    r = len(centers_joined)
    n = 1 + r * (k + 1) + t + 3 * len(triangle_edges)
    edges = []
    leaf0 = 1 + r
    for i in range(r):
        c = 1 + i
        if centers_joined[i]:
            edges.append((0, c))
        for j in range(k):
            leaf = leaf0 + i * k + j
            edges.append((c, leaf))
            if j < leaves_joined[i]:
                edges.append((0, leaf))
    iso0 = leaf0 + r * k
    edges.extend((0, iso0 + j) for j in range(t))
    tri0 = iso0 + t
    for i, c in enumerate(triangle_edges):
        a = tri0 + 3 * i
        edges += [(a, a + 1), (a, a + 2), (a + 1, a + 2)]
        edges.extend((0, a + j) for j in range(c))
    return graph_from_edges(n, edges)


def build(desc: FamilyDescriptor) -> Graph:
    if desc.is_set:
        raise FamilyError(f"{desc} names a set of graphs; use enumerate_family_set")
    validate(desc)
    tag, p = desc.tag, desc.params
    if tag == "complete":
        return complete_graph(p[0])
    if tag == "complete_bipartite":
        return complete_bipartite(p[0], p[1])
    if tag == "star":
        return complete_bipartite(1, p[0])
    if tag in ("S", "F"):
        r, s = (p[0], 2 * p[0]) if tag == "F" else p
        doubled = s - r
        return _center_graph(1, [True] * doubled + [False] * (r - doubled), [1] * r, 0)
    if tag == "T":
        r, k = p
        return _center_graph(k, [True] * r, [0] * r, 0)
    if tag == "K":
        k, t, l = p
        return _center_graph(k, [False], [l], t)
    if tag == "Kp":
        k, t, l = p
        return _center_graph(k, [True], [l], t)
    if tag == "L":
        t, l = p
        return _center_graph(1, [], [], t, [l])
    raise FamilyError(f"no builder for {desc}")


def _bounded_partitions(total: int, parts: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    """Non-increasing tuples of ``parts`` integers in ``[lo, hi]`` summing to ``total``."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: int, left: int, cap: int) -> None:
        if left == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for v in range(min(cap, remaining - lo * (left - 1)), lo - 1, -1):
            if v * left < remaining:
                break
            prefix.append(v)
            rec(prefix, remaining - v, left - 1, v)
            prefix.pop()

    rec([], total, parts, hi)
    return out


def _star_distributions(r: int, k: int, t: int, p: int, q: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    # q stars have their center joined to u (any number of leaves joined);
    # the other r-q stars need at least one joined leaf to stay connected
    leaf_edges = p - t - q
    if leaf_edges < 0:
        return []
    out = []
    for a_sum in range(leaf_edges + 1):
        b_sum = leaf_edges - a_sum
        for a in _bounded_partitions(a_sum, q, 0, k):
            for b in _bounded_partitions(b_sum, r - q, 1, k):
                out.append((a, b))
    return out


def enumerate_family_set(desc: FamilyDescriptor) -> list[Graph]:
    """All members of a G- or H-set, one per isomorphism class, in canonical order."""
    if not desc.is_set:
        raise FamilyError(f"{desc} is a single graph; use build")
    validate(desc)
    if desc.tag == "G":
        r, k, t, p, q = desc.params
        triangle_options: list[tuple[int, ...]] = [()]
    else:
        r, s, t, p, q, l = desc.params
        k = 3
        triangle_options = _bounded_partitions(l, s, 1, 3)
    seen: dict[CanonicalLabel, Graph] = {}
    for (a, b), tri in product(_star_distributions(r, k, t, p, q), triangle_options):
        joined = [True] * len(a) + [False] * len(b)
        g = _center_graph(k, joined, list(a) + list(b), t, list(tri))
        seen.setdefault(canonical_form(g), g)
    return [seen[key] for key in sorted(seen, key=lambda c: (c.n, c.bits))]


# -- closed forms ------------------------------------------------------------------

def _assemble(x_power: int, factors: list[tuple[IntPoly, int]], quartic: IntPoly) -> IntPoly:
    num = quartic
    den = IntPoly((1,))
    if x_power >= 0:
        num = num.shift(x_power)
    else:
        den = den.shift(-x_power)
    for f, e in factors:
        if e >= 0:
            num = num * f ** e
        else:
            den = den * f ** (-e)
    return num.exact_div(den)


def _quartic(b: int, c: int) -> IntPoly:
    # x^4 - b x^2 + c
    return IntPoly((c, 0, -b, 0, 1))


def closed_form_mu(desc: FamilyDescriptor) -> IntPoly:
    """The family's matching polynomial from its closed-form expression."""
    validate(desc)
    tag, p = desc.tag, desc.params
    if tag == "complete":
        n = p[0]
        coeffs = [0] * (n + 1)
        for j in range(n // 2 + 1):
            m = factorial(n) // (factorial(j) * factorial(n - 2 * j) * 2 ** j)
            coeffs[n - 2 * j] = (-1) ** j * m
        return IntPoly(coeffs)
    if tag in ("complete_bipartite", "star"):
        r, s = (1, p[0]) if tag == "star" else p
        coeffs = [0] * (r + s + 1)
        for j in range(min(r, s) + 1):
            coeffs[r + s - 2 * j] = (-1) ** j * comb(r, j) * comb(s, j) * factorial(j)
        return IntPoly(coeffs)
    if tag in ("S", "F"):
        r, s = (p[0], 2 * p[0]) if tag == "F" else p
        return X * (X ** 2 - (s + 1)) * (X ** 2 - 1) ** (r - 1)
    if tag == "T":
        r, k = p
        return _assemble(r * (k - 1) + 1, [(X ** 2 - k, r - 1)], X ** 2 - (r + k))
    if tag in ("K", "Kp"):
        k, t, l = p
        middle = k + t + l + (1 if tag == "Kp" else 0)
        return _assemble(k + t - 2, [], _quartic(middle, (l + t) * (k - 1) + t))
    if tag == "L":
        t, l = p
        return _quartic(t + l + 3, 3 * t + l).shift(t)
    if tag == "G":
        r, k, t, pp, q = p
        return _assemble(
            r * (k - 1) + t - 1,
            [(X ** 2 - k, r - 1)],
            _quartic(pp + k, (pp - q) * (k - 1) + t),
        )
    if tag == "H":
        r, s, t, pp, q, l = p
        return _assemble(
            2 * r + s + t - 1,
            [(X ** 2 - 3, r + s - 1)],
            _quartic(pp + l + 3, 3 * t + 2 * (pp - t - q) + l),
        )
    raise FamilyError(f"no closed form for {desc}")


# -- recognition ------------------------------------------------------------------

def single_graph_descriptors(n: int) -> list[FamilyDescriptor]:
    """Every valid single-graph descriptor whose graph has exactly ``n`` vertices."""
    out: list[FamilyDescriptor] = []
    if n >= 1:
        out.append(FamilyDescriptor("complete", (n,)))
    for r in range(1, n // 2 + 1):
        out.append(FamilyDescriptor("complete_bipartite", (r, n - r)))
    if n >= 2:
        out.append(FamilyDescriptor("star", (n - 1,)))
    if n % 2 == 1 and n >= 3:
        r = (n - 1) // 2
        out.extend(S(r, s) for s in range(r, 2 * r + 1))
        out.append(F(r))
    for r in range(1, n):
        if (n - 1) % r == 0 and (n - 1) // r >= 2:
            out.append(T(r, (n - 1) // r - 1))
    for k in range(1, n - 1):
        t = n - 2 - k
        out.append(Kp(k, t, 0))
        for l in range(1, k + 1):
            out.append(K(k, t, l))
            out.append(Kp(k, t, l))
    if n >= 4:
        out.extend(L(n - 4, l) for l in (1, 2, 3))
    return out


@lru_cache(maxsize=None)
def _catalogue(n: int) -> dict[CanonicalLabel, tuple[FamilyDescriptor, ...]]:
    table: dict[CanonicalLabel, list[FamilyDescriptor]] = {}
    for desc in single_graph_descriptors(n):
        table.setdefault(canonical_form(build(desc)), []).append(desc)
    return {key: tuple(v) for key, v in table.items()}


def recognize_all(g: Graph) -> list[FamilyDescriptor]:
    """Every single-graph descriptor whose graph is isomorphic to ``g``."""
    if g.n == 0:
        return []
    return list(_catalogue(g.n).get(canonical_form(g), ()))


_PREFERENCE = {tag: i for i, tag in enumerate(("F", "S", "T", "K", "Kp", "L", "star", "complete", "complete_bipartite"))}


def recognize(g: Graph) -> FamilyDescriptor | None:
    """One witnessing descriptor for ``g``, or ``None``."""
    found = recognize_all(g)
    if not found:
        return None
    return min(found, key=lambda d: (_PREFERENCE[d.tag], d.params))
