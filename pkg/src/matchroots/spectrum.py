"""Exact root structure of matching polynomials.

An algebraic root is tracked as a :class:`RootHandle`: a square-free integer
polynomial together with a rational interval that isolates one of its roots.
The same handle can be looked up in the matching polynomial of any graph,
which is how a fixed root is followed through ``G``, ``G - u`` and so on
without floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graph import Graph, delete_vertex
from .matching import matching_polynomial
from .poly import (
    IntPoly,
    cauchy_index,
    RationalInterval,
    distinct_real_root_count,
    isolate_real_roots,
    poly_gcd,
    root_bound,
    squarefree_decomposition,
    squarefree_part,
    sturm_count,
)

__all__ = [
    "RootSummary",
    "RootHandle",
    "root_summary",
    "distinct_matching_roots",
    "root_handles",
    "repeated_root_handles",
    "handle_for",
    "multiplicity",
    "multiplicity_of",
    "interlaces",
    "roots_interlace",
    "gallai_witness",
    "roots_at_least",
]


@dataclass(frozen=True)
class RootSummary:
    n: int
    zero_mult: int
    squarefree: IntPoly
    z: int
    roots: tuple[tuple[RationalInterval, int], ...]
    """Isolating intervals in ascending order, each with its multiplicity."""

    def __post_init__(self) -> None:
        if self.z != len(self.roots) or self.z != self.squarefree.degree:
            raise AssertionError("distinct-root count disagrees with the root list")
        if sum(m for _, m in self.roots) != self.n:
            raise AssertionError("root multiplicities do not sum to the order")


@dataclass(frozen=True)
class RootHandle:
    """One real algebraic number: the root of ``factor`` inside ``interval``.

    ``factor`` is square-free and has exactly one root in ``interval``; a
    point interval means the root is that rational number.
    """

    factor: IntPoly
    interval: RationalInterval

    def __post_init__(self) -> None:
        f, iv = self.factor, self.interval
        if f.degree < 1:
            raise ValueError("a root handle needs a non-constant factor")
        if poly_gcd(f, f.derivative()).degree > 0:
            raise ValueError(f"handle factor {f} is not square-free")
        if iv.is_point:
            if f.sign_at(iv.lo) != 0:
                raise ValueError(f"{iv.lo} is not a root of {f}")
        elif f.sign_at(iv.lo) == 0 or f.sign_at(iv.hi) == 0 or sturm_count(f, iv) != 1:
            raise ValueError(f"{iv} does not isolate a single root of {f}")

    @classmethod
    def rational(cls, r: Fraction | int) -> RootHandle:
        r = Fraction(r)
        return cls(IntPoly((-r.numerator, r.denominator)), RationalInterval(r, r))

    def __str__(self) -> str:
        if self.interval.is_point:
            return str(self.interval.lo)
        return f"root of {self.factor} in {self.interval}"


def _mu(g: Graph) -> IntPoly:
    return matching_polynomial(g)


def root_summary(g: Graph) -> RootSummary:
    if g.n < 1:
        raise ValueError("root summary needs at least one vertex")
    mu = _mu(g)
    roots = tuple(isolate_real_roots(mu))
    sqf = squarefree_part(mu)
    return RootSummary(g.n, mu.trailing_zeros(), sqf, len(roots), roots)


def distinct_matching_roots(g: Graph) -> int:
    """z(G): the number of distinct roots of the matching polynomial."""
    if g.n < 1:
        raise ValueError("z is defined for graphs with at least one vertex")
    return distinct_real_root_count(_mu(g))


def root_handles(p: IntPoly) -> list[tuple[RootHandle, int]]:
    """A handle and multiplicity for every distinct real root of ``p``, ascending.

    Rational roots get the linear certificate ``den*x - num``; irrational
    roots get the square-free factor that owns them.
    """
    out = []
    factors = squarefree_decomposition(p)
    for iv, mult in isolate_real_roots(p):
        if iv.is_point:
            out.append((RootHandle.rational(iv.lo), mult))
            continue
        owner = next(f for f, i in factors if i == mult)
        out.append((RootHandle(owner.primitive(), iv), mult))
    return out


def repeated_root_handles(p: IntPoly) -> list[tuple[RootHandle, int]]:
    """Handles of the real roots of multiplicity at least two, grouped by multiplicity."""
    out = []
    for f, mult in squarefree_decomposition(p):
        if mult < 2 or f.degree < 1:
            continue
        for iv, _ in isolate_real_roots(f):
            handle = RootHandle.rational(iv.lo) if iv.is_point else RootHandle(f.primitive(), iv)
            out.append((handle, mult))
    return out


def handle_for(p: IntPoly, value: Fraction | int | None = None, index: int | None = None) -> RootHandle:
    """Handle of a rational root ``value`` of ``p``, or of its ``index``-th root (ascending)."""
    handles = root_handles(p)
    if value is not None:
        value = Fraction(value)
        for h, _ in handles:
            if h.interval.is_point and h.interval.lo == value:
                return h
        raise ValueError(f"{value} is not a root of {p}")
    if index is None:
        raise ValueError("give either a value or an index")
    return handles[index][0]


def multiplicity(p: IntPoly, theta: RootHandle) -> int:
    """Multiplicity of the root ``theta`` in the polynomial ``p`` (0 if absent).

    ``theta`` has multiplicity ``i`` exactly when it is a root of the Yun
    factor ``g_i`` of ``p``; for an irrational root that is tested by counting
    the roots of ``gcd(factor, g_i)`` inside the handle's interval.
    """
    if not p.coeffs:
        raise ValueError("every number is a root of the zero polynomial")
    iv = theta.interval
    for g, i in squarefree_decomposition(p):
        if iv.is_point:
            if g.sign_at(iv.lo) == 0:
                return i
            continue
        common = poly_gcd(theta.factor, g)
        if common.degree > 0 and sturm_count(common, iv) == 1:
            return i
    return 0


def multiplicity_of(g: Graph, theta: RootHandle) -> int:
    return multiplicity(_mu(g), theta)


@lru_cache(maxsize=1 << 16)
def roots_interlace(p: IntPoly, q: IntPoly) -> bool:
    """Whether the roots of ``q`` (degree ``n-1``) interlace those of ``p`` (degree ``n``).

    Sorted descending with multiplicity the condition is
    ``theta_1 >= eta_1 >= theta_2 >= ... >= eta_{n-1} >= theta_n``, all roots
    real.  A shared root can be divided out of both sides without changing
    the answer, so with ``d = gcd(p, q)`` the test is: ``d`` is real-rooted
    and the coprime quotients interlace strictly, which holds exactly when
    the Cauchy index of ``q/d`` over ``p/d`` is ``deg p - deg d``.
    """
    if q.degree != p.degree - 1:
        return False
    d = poly_gcd(p, q)
    p1, q1 = p.exact_div(d), q.exact_div(d)
    if p1.lead < 0:
        p1 = -p1
    if q1.lead < 0:
        q1 = -q1
    if d.degree > 0:
        sqf = squarefree_part(d)
        if distinct_real_root_count(sqf) != sqf.degree:
            return False
    return cauchy_index(q1, p1) == p1.degree


def _interlace_by_isolation(p: IntPoly, q: IntPoly) -> bool:
    """Slow reference for :func:`roots_interlace` comparing isolated roots by rank.

    Roots of both polynomials are isolated together (as roots of the
    square-free part of ``p*q``), so they compare exactly by position.
    """
    if q.degree != p.degree - 1:
        return False
    merged = isolate_real_roots(squarefree_part(p * q))
    p_factors = squarefree_decomposition(p)
    q_factors = squarefree_decomposition(q)
    theta: list[int] = []
    eta: list[int] = []
    for rank, (iv, _) in enumerate(merged):
        theta += [rank] * _mult_in_factors(p_factors, iv)
        eta += [rank] * _mult_in_factors(q_factors, iv)
    if len(theta) != p.degree or len(eta) != q.degree:
        return False  # not real-rooted
    theta.reverse()
    eta.reverse()
    return all(theta[i] >= eta[i] >= theta[i + 1] for i in range(len(eta)))


def _mult_in_factors(factors: list[tuple[IntPoly, int]], iv: RationalInterval) -> int:
    # iv isolates a root of a polynomial that every factor divides, so a
    # factor has at most that one root inside iv
    for f, i in factors:
        if iv.is_point:
            if f.sign_at(iv.lo) == 0:
                return i
        elif sturm_count(f, iv):
            return i
    return 0


def interlaces(g: Graph, u: int) -> bool:
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} not in graph of order {g.n}")
    return roots_interlace(_mu(g), _mu(delete_vertex(g, u)))


def gallai_witness(g: Graph, theta: RootHandle) -> int | None:
    """A vertex whose deletion raises the multiplicity of ``theta`` by one."""
    if not g.is_connected():
        raise ValueError("the witness search needs a connected graph")
    base = multiplicity_of(g, theta)
    if base < 2:
        raise ValueError(f"{theta} has multiplicity {base} < 2")
    for u in range(g.n):
        if multiplicity_of(delete_vertex(g, u), theta) == base + 1:
            return u
    return None


def roots_at_least(p: IntPoly, bound: Fraction | int) -> bool:
    """Whether every real root of ``p`` is ``>= bound``."""
    bound = Fraction(bound)
    b = root_bound(p)
    if bound <= -b:
        return True
    return sturm_count(squarefree_part(p), RationalInterval(-b, bound)) == 0
