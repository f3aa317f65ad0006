"""Dense univariate polynomials over the integers, with exact real-root tools.

Everything on the certified path stays in ``int`` and ``Fraction``:
gcds use the subresultant pseudo-remainder sequence, Sturm chains use
sign-corrected primitive pseudo-remainders, and root isolation bisects at
rational midpoints.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Number = Union[int, Fraction]

__all__ = [
    "IntPoly",
    "RationalInterval",
    "X",
    "parse_poly",
    "poly_gcd",
    "squarefree_part",
    "squarefree_decomposition",
    "sturm_chain",
    "sturm_count",
    "cauchy_index",
    "distinct_real_root_count",
    "isolate_real_roots",
    "root_bound",
    "refine_interval",
    "rational_root_in",
]


class IntPoly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"coefficients must be int, got {type(a).__name__}")
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def _trusted(cls, coeffs: list[int]) -> IntPoly:
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls([0] * k + [c])

    @classmethod
    def from_descending(cls, coeffs: Iterable[int]) -> IntPoly:
        return cls(reversed(list(coeffs)))

    # -- basic queries ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({str(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def content(self) -> int:
        g = 0
        for a in self.coeffs:
            g = math.gcd(g, a)
        return g

    def primitive(self) -> IntPoly:
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPoly._trusted([a // g for a in self.coeffs])

    def trailing_zeros(self) -> int:
        """Multiplicity of the root 0."""
        for i, a in enumerate(self.coeffs):
            if a:
                return i
        raise ValueError("zero polynomial has no finite root multiplicity")

    # -- ring operations -------------------------------------------------

    def __neg__(self) -> IntPoly:
        return IntPoly._trusted([-a for a in self.coeffs])

    def __add__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly._trusted(out)

    __radd__ = __add__

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly((other,))
        return self + (-other)

    def __rsub__(self, other: int) -> IntPoly:
        return IntPoly((other,)) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly._trusted([a * other for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly._trusted(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative exponent")
        result = IntPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return IntPoly._trusted([0] * k + list(self.coeffs))

    def derivative(self) -> IntPoly:
        return IntPoly._trusted([i * a for i, a in enumerate(self.coeffs)][1:])

    def compose_neg(self) -> IntPoly:
        """``p(-x)``."""
        return IntPoly._trusted([-a if i & 1 else a for i, a in enumerate(self.coeffs)])

    def __call__(self, x: Number) -> Number:
        return self.evaluate(x)

    def evaluate(self, x: Number) -> Number:
        acc: Number = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def sign_at(self, x: Number) -> int:
        """Sign of ``p(x)`` using integer arithmetic only."""
        if isinstance(x, int):
            num, den = x, 1
        else:
            num, den = x.numerator, x.denominator
        acc = 0
        bp = 1
        for a in reversed(self.coeffs):
            acc = acc * num + a * bp
            bp *= den
        # acc = p(num/den) * den**deg, den > 0
        return (acc > 0) - (acc < 0)

    # -- division ----------------------------------------------------------

    def divmod_exact(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Division over the rationals that must stay integral.

        Returns ``(q, r)`` with ``self = q*other + r``.  Raises
        :class:`ArithmeticError` when a quotient coefficient is not an integer.
        """
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lb = other.coeffs[-1]
        if len(rem) - 1 < db:
            return IntPoly(), self
        q = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            t, r = divmod(c, lb)
            if r:
                raise ArithmeticError(f"{self} is not divisible by {other} over the integers")
            q[i - db] = t
            for j, b in enumerate(other.coeffs):
                rem[i - db + j] -= t * b
        return IntPoly._trusted(q), IntPoly._trusted(rem[:db])

    def exact_div(self, other: IntPoly) -> IntPoly:
        q, r = self.divmod_exact(other)
        if r.coeffs:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __floordiv__(self, other: IntPoly) -> IntPoly:
        return self.exact_div(other)

    def divides(self, other: IntPoly) -> bool:
        """True if ``self`` divides ``other`` over the rationals."""
        if not self.coeffs:
            return not other.coeffs
        return not pseudo_rem(other, self).coeffs

    def multiplicity_in(self, other: IntPoly) -> int:
        """Largest ``j`` with ``self**j`` dividing ``other`` (``self`` nonconstant)."""
        if self.degree < 1:
            raise ValueError("multiplicity of a constant is undefined")
        if not other.coeffs:
            raise ValueError("zero polynomial")
        f = self.primitive()
        j = 0
        cur = other
        while True:
            try:
                q, r = cur.divmod_exact(f)
            except ArithmeticError:
                return j
            if r.coeffs:
                return j
            cur = q
            j += 1


X = IntPoly((0, 1))


def pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """``lc(b)**(deg a - deg b + 1) * a`` reduced modulo ``b``."""
    if not b.coeffs:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lb = b.coeffs[-1]
    if len(rem) - 1 < db:
        return a
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        rem = [x * lb for x in rem]
        if c:
            for j, bc in enumerate(b.coeffs):
                rem[i - db + j] -= c * bc
        rem.pop()
    return IntPoly._trusted(rem)


# -- text form ---------------------------------------------------------------

def format_poly(p: IntPoly) -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = "x" if k == 1 else f"x^{k}"
            body = mono if a == 1 else f"{a}{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


_TERM = re.compile(r"([+-])?\s*(\d*)\s*(?:(x)(?:\^(\d+))?)?")


def parse_poly(text: str) -> IntPoly:
    """Parse the text form produced by :func:`format_poly` (e.g. ``x^5-6x^3+5x``)."""
    gap = re.search(r"\d\s+\d|\^\s|\s\^", text)
    if gap:
        raise ValueError(f"stray space at position {gap.start() + 1}: {text!r}")
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse polynomial at position {pos}: {text!r}")
        if pos > 0 and not m.group(1):
            raise ValueError(f"missing sign at position {pos}: {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) else 1
        k = 0
        if m.group(3):
            k = int(m.group(4)) if m.group(4) else 1
        coeffs[k] = coeffs.get(k, 0) + sign * c
        pos = m.end()
    top = max(coeffs)
    return IntPoly([coeffs.get(i, 0) for i in range(top + 1)])


# -- gcd and square-free decomposition -------------------------------------

def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (subresultant PRS)."""
    if not a.coeffs and not b.coeffs:
        raise ValueError("gcd of two zero polynomials is undefined")
    if not a.coeffs:
        return b.primitive()
    if not b.coeffs:
        return a.primitive()
    if a.degree < b.degree:
        a, b = b, a
    a, b = a.primitive(), b.primitive()
    if b.degree == 0:
        return IntPoly((1,))
    g = 1
    h = 1
    while True:
        delta = a.degree - b.degree
        r = pseudo_rem(a, b)
        if not r.coeffs:
            return b.primitive()
        if r.degree == 0:
            return IntPoly((1,))
        a = b
        div = g * h ** delta
        b = IntPoly._trusted([c // div for c in r.coeffs])
        g = a.lead
        if delta:
            h = g ** delta // h ** (delta - 1)


def squarefree_part(p: IntPoly) -> IntPoly:
    """``p / gcd(p, p')``, primitive with positive leading coefficient."""
    if not p.coeffs:
        raise ValueError("square-free part of the zero polynomial is undefined")
    if p.degree == 0:
        return IntPoly((1,))
    return _squarefree_cached(p)


@lru_cache(maxsize=1 << 16)
def _squarefree_cached(p: IntPoly) -> IntPoly:
    g = poly_gcd(p, p.derivative())
    return p.primitive().exact_div(g)


def squarefree_decomposition(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: primitive pairwise-coprime ``(f_i, i)`` with ``p ~ prod f_i**i``.

    Only nonconstant factors are listed; ``p`` is determined up to its content.
    """
    if not p.coeffs:
        raise ValueError("zero polynomial")
    return list(_yun_cached(p))


@lru_cache(maxsize=1 << 16)
def _yun_cached(p: IntPoly) -> tuple[tuple[IntPoly, int], ...]:
    a0 = p.primitive()
    if a0.degree < 1:
        return ()
    d0 = a0.derivative()
    b = poly_gcd(a0, d0)
    c = a0.exact_div(b)
    d = d0.exact_div(b) - c.derivative()
    out = []
    i = 1
    while c.degree > 0:
        a = poly_gcd(c, d) if d.coeffs else c.primitive()
        if a.degree > 0:
            out.append((a, i))
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative() if d.coeffs else IntPoly()
        i += 1
    return tuple(out)


# -- Sturm sequences -----------------------------------------------------------

@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Number) -> bool:
        if self.is_point:
            return x == self.lo
        return self.lo < x < self.hi

    def disjoint(self, other: RationalInterval) -> bool:
        if self.is_point and other.is_point:
            return self.lo != other.lo
        if self.is_point:
            return not other.contains(self.lo)
        if other.is_point:
            return not self.contains(other.lo)
        return self.hi <= other.lo or other.hi <= self.lo

    def __neg__(self) -> RationalInterval:
        return RationalInterval(-self.hi, -self.lo)

    def __str__(self) -> str:
        if self.is_point:
            return f"[{self.lo}]"
        return f"({self.lo}, {self.hi})"


def sturm_chain(p: IntPoly) -> tuple[IntPoly, ...]:
    if not p.coeffs:
        raise ValueError("Sturm chain of the zero polynomial is undefined")
    return _sturm_cached(p)


@lru_cache(maxsize=1 << 16)
def _sturm_cached(p: IntPoly) -> tuple[IntPoly, ...]:
    return _remainder_chain(p, p.derivative())


def _remainder_chain(p: IntPoly, q: IntPoly) -> tuple[IntPoly, ...]:
    """``p, q, -rem(p, q), ...`` with each entry scaled by a positive constant."""
    chain = [p, q]
    while chain[-1].coeffs and chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        delta = a.degree - b.degree
        r = pseudo_rem(a, b)
        if not r.coeffs:
            break
        # prem = lc(b)**(delta+1) * rem; keep -rem up to a positive factor
        flip = -1 if (b.lead < 0 and (delta + 1) % 2 == 1) else 1
        r = r * (-flip)
        g = r.content()
        chain.append(IntPoly._trusted([c // g for c in r.coeffs]))
    if not chain[-1].coeffs:
        chain.pop()
    return tuple(chain)


def _variations(chain: tuple[IntPoly, ...], x: Number) -> int:
    count = 0
    prev = 0
    for q in chain:
        s = q.sign_at(x)
        if s:
            if prev and s != prev:
                count += 1
            prev = s
    return count


def _variations_at_infinity(chain: tuple[IntPoly, ...], positive: bool) -> int:
    count = 0
    prev = 0
    for q in chain:
        s = 1 if q.lead > 0 else -1
        if not positive and q.degree % 2:
            s = -s
        if prev and s != prev:
            count += 1
        prev = s
    return count


def cauchy_index(q: IntPoly, p: IntPoly) -> int:
    """Cauchy index of ``q / p`` over the whole real line.

    It equals ``deg p`` exactly when ``p`` has only real simple roots and
    the roots of ``q`` strictly interlace them (with ``q / p`` decreasing
    through every pole, i.e. positive leading coefficients on both sides).
    """
    if not p.coeffs:
        raise ValueError("Cauchy index with a zero denominator")
    if not q.coeffs:
        return 0
    chain = _remainder_chain(p, q)
    return _variations_at_infinity(chain, False) - _variations_at_infinity(chain, True)


def _linear_factor(r: Fraction) -> IntPoly:
    return IntPoly((-r.numerator, r.denominator))


def _strip_root(p: IntPoly, r: Fraction) -> IntPoly:
    lin = _linear_factor(r)
    while p.degree > 0 and p.sign_at(r) == 0:
        p = p.exact_div(lin)
    return p


def sturm_count(p: IntPoly, interval: RationalInterval) -> int:
    """Number of distinct real roots of ``p`` strictly inside ``interval``."""
    if not p.coeffs:
        raise ValueError("zero polynomial has infinitely many roots")
    lo, hi = interval.lo, interval.hi
    if lo == hi or p.degree == 0:
        return 0
    q = p
    for end in (lo, hi):
        if q.sign_at(end) == 0:
            q = _strip_root(q, end)
    if q.degree <= 0:
        return 0
    chain = sturm_chain(q)
    return _variations(chain, lo) - _variations(chain, hi)


def root_bound(p: IntPoly) -> Fraction:
    """Cauchy bound ``1 + max|a_i| / |a_d|``; every real root lies strictly inside."""
    if not p.coeffs:
        raise ValueError("zero polynomial")
    lead = abs(p.lead)
    top = max((abs(a) for a in p.coeffs[:-1]), default=0)
    return 1 + Fraction(top, lead)


def distinct_real_root_count(p: IntPoly) -> int:
    if not p.coeffs:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return 0
    return _distinct_count_cached(p)


@lru_cache(maxsize=1 << 18)
def _distinct_count_cached(p: IntPoly) -> int:
    b = root_bound(p)
    return sturm_count(p, RationalInterval(-b, b))


def _isolate(q: IntPoly, lo: Fraction, hi: Fraction, out: list[RationalInterval]) -> None:
    # q square-free, q(lo) != 0, q(hi) != 0
    chain = sturm_chain(q)
    stack = [(lo, hi, _variations(chain, lo), _variations(chain, hi))]
    while stack:
        a, b, va, vb = stack.pop()
        c = va - vb
        if c == 0:
            continue
        if c == 1:
            out.append(RationalInterval(a, b))
            continue
        m = (a + b) / 2
        if q.sign_at(m) == 0:
            out.append(RationalInterval(m, m))
            # carve a root-free neighbourhood around m so no endpoint is a root
            rest = q.exact_div(_linear_factor(m))
            delta = (b - a) / 4
            while True:
                left, right = m - delta, m + delta
                if (
                    rest.sign_at(left)
                    and rest.sign_at(right)
                    and sturm_count(rest, RationalInterval(left, right)) == 0
                ):
                    break
                delta /= 2
            vl, vr = _variations(chain, left), _variations(chain, right)
            stack.append((a, left, va, vl))
            stack.append((right, b, vr, vb))
            continue
        vm = _variations(chain, m)
        stack.append((a, m, va, vm))
        stack.append((m, b, vm, vb))


def _interval_key(iv: RationalInterval) -> tuple[Fraction, Fraction]:
    return (iv.lo, iv.hi)


def isolate_real_roots(p: IntPoly) -> list[tuple[RationalInterval, int]]:
    """Disjoint isolating intervals for the distinct real roots, with multiplicities.

    Rational roots come back as degenerate ``[r, r]`` intervals; every other
    root gets an open ``(lo, hi)`` whose endpoints are not roots of ``p``.
    Sorted ascending.
    """
    if not p.coeffs:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return []
    return list(_isolate_cached(p))


@lru_cache(maxsize=1 << 15)
def _isolate_cached(p: IntPoly) -> tuple[tuple[RationalInterval, int], ...]:
    sqf = squarefree_part(p)
    b = root_bound(sqf)
    intervals: list[RationalInterval] = []
    if sqf.degree > 0:
        _isolate(sqf, -b, b, intervals)
    intervals = [
        iv if iv.is_point else _pin_rational(sqf, iv) for iv in intervals
    ]
    intervals.sort(key=_interval_key)
    factors = squarefree_decomposition(p)
    out = []
    for iv in intervals:
        mult = 0
        for f, i in factors:
            if iv.is_point:
                hit = f.sign_at(iv.lo) == 0
            else:
                hit = sturm_count(f, iv) == 1
            if hit:
                mult = i
                break
        if mult == 0:
            raise AssertionError(f"no square-free factor owns the root in {iv}")
        out.append((iv, mult))
    return tuple(out)


def _pin_rational(q: IntPoly, iv: RationalInterval) -> RationalInterval:
    r = rational_root_in(q, iv)
    return iv if r is None else RationalInterval(r, r)


def refine_interval(p: IntPoly, interval: RationalInterval, width: Fraction) -> RationalInterval:
    """Bisect an isolating interval of a root of ``p`` until narrower than ``width``."""
    if interval.is_point:
        return interval
    q = squarefree_part(p)
    lo, hi = interval.lo, interval.hi
    slo = q.sign_at(lo)
    while hi - lo >= width:
        m = (lo + hi) / 2
        sm = q.sign_at(m)
        if sm == 0:
            return RationalInterval(m, m)
        if sm == slo:
            lo = m
        else:
            hi = m
    return RationalInterval(lo, hi)


def rational_root_in(p: IntPoly, interval: RationalInterval) -> Fraction | None:
    """The rational root of ``p`` in an isolating interval, if that root is rational.

    A rational root ``u/v`` in lowest terms has ``v | lc(p)``, so it can be
    written ``k / |lc|``; narrowing the interval below ``1/|lc|`` leaves at
    most two candidates to test.
    """
    if interval.is_point:
        return interval.lo if p.sign_at(interval.lo) == 0 else None
    q = p.primitive()
    lead = abs(q.lead)
    iv = refine_interval(q, interval, Fraction(1, lead))
    if iv.is_point:
        return iv.lo
    k_lo = math.floor(iv.lo * lead)
    k_hi = math.ceil(iv.hi * lead)
    for k in range(k_lo, k_hi + 1):
        r = Fraction(k, lead)
        if iv.lo < r < iv.hi and q.sign_at(r) == 0:
            return r
    return None
