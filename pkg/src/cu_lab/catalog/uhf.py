"""Compact/soft carriers: the ray ``UhfRay`` and the pair ``AlgebraicProduct``.

A component is a pair ``(sort, value)`` with ``sort`` in ``{"c", "s"}``
(compact or soft) and an ExtRat value.  Zero is ``("c", 0)``.  Mixed order:

* ``c(q) <= s(r)`` iff ``q < r``
* ``s(r) <= c(q)`` iff ``r <= q``

and any soft summand makes a sum soft.  In the first coordinate of
``AlgebraicProduct`` values above 1 saturate to a compact infinity ``c(inf)``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian

from ..core import Semigroup, random_fraction
from ..errors import ParseError
from ..extrat import INF, ONE, ZERO, ExtRat
from ._syntax import parse_extrat, parse_pair

Comp = tuple  # (sort, ExtRat)

CZERO: Comp = ("c", ZERO)
SINF: Comp = ("s", INF)
CINF: Comp = ("c", INF)  # only in the saturating coordinate


def c_leq(a: Comp, b: Comp) -> bool:
    if a[1].is_zero:
        return True
    if a[0] == b[0] or a[0] == "s":
        return a[1] <= b[1]
    return a[1] < b[1]


def c_add(a: Comp, b: Comp) -> Comp:
    sort = "c" if a[0] == b[0] == "c" else "s"
    if a[1].is_zero:
        return b
    if b[1].is_zero:
        return a
    return (sort, a[1] + b[1])


def c_way_below(a: Comp, b: Comp) -> bool:
    if a[1].is_zero:
        return True
    if b[0] == "c":
        return c_leq(a, b)
    return a[1] < b[1]


def c_rapid(a: Comp, n: int) -> Comp:
    """Compact approximants, so the chain also shows algebraicity."""
    if a[0] == "c" or a[1].is_zero:
        return a
    if a[1].is_inf:
        return ("c", ExtRat(n + 1))
    return ("c", a[1] * (1 - Fraction(1, 2 ** (n + 1))))


def c_scale(a: Comp, q: Fraction) -> Comp:
    if a[1].is_zero:
        return a
    return (a[0], a[1] * q)


def c_min(a: Comp, b: Comp) -> Comp:
    return a if c_leq(a, b) else b


def c_series(first: Comp, ratio: Fraction) -> Comp:
    """Sum of ``first * ratio**k`` over ``k >= 0`` (unsaturated)."""
    if first[1].is_zero:
        return CZERO
    # infinitely many nonzero summands: the sup of a strictly increasing chain
    return ("s", first[1] / (1 - ratio))


def c_parse(text: str) -> Comp:
    t = text.strip()
    if ":" not in t and t and t[0].isdigit() and parse_extrat(t).is_zero:
        return CZERO
    if len(t) < 3 or t[1] != ":" or t[0] not in "cs":
        raise ParseError(f"expected 'c:<q>', 's:<r>' or '0', got {text!r}")
    v = parse_extrat(t[2:])
    if v.is_zero:
        raise ParseError(f"zero is written '0', not {text!r}")
    if t[0] == "c" and v.is_inf:
        raise ParseError("compact values are finite")
    return (t[0], v)


def c_format(a: Comp) -> str:
    if a[1].is_zero:
        return "0"
    return f"{a[0]}:{a[1]}"


def c_sample(rng, lo, hi, p_zero=0.1, p_inf=0.1) -> Comp:
    u = rng.random()
    if u < p_zero:
        return CZERO
    if u < p_zero + p_inf:
        return SINF
    return (rng.choice("cs"), ExtRat(random_fraction(rng, lo, hi, open_lo=True)))


def c_o5_candidates(xp: Comp, x: Comp, y: Comp) -> set:
    out = {CZERO, y}
    for a in (xp, x):
        if y[1].is_inf:
            out.add(SINF)
            continue
        if a[1].is_inf:
            continue
        d = y[1].monus(a[1])
        if not d.is_zero:
            out.add(("c", d))
            out.add(("s", d))
    return out


class UhfRay(Semigroup):
    id = "uhf"
    name = "UhfRay"
    is_algebraic = True
    series_kinds = frozenset({"constant", "finite", "geometric"})

    def _zero(self):
        return CZERO

    def _top(self):
        return SINF

    _add = staticmethod(c_add)
    _leq = staticmethod(c_leq)
    _way_below = staticmethod(c_way_below)
    _rapid_term = staticmethod(c_rapid)
    _format = staticmethod(c_format)

    def _parse(self, text):
        return c_parse(text)

    def _sample(self, rng, profile):
        if profile == "small":
            return c_sample(rng, 0, Fraction(1, 2), p_inf=0)
        if profile == "near_top":
            return c_sample(rng, 2, 8, p_zero=0, p_inf=0.25)
        return c_sample(rng, 0, 4)

    def _landmarks(self):
        h, tq = ExtRat(Fraction(1, 2)), ExtRat(Fraction(3, 4))
        return [CZERO, ("c", h), ("s", h), ("c", tq), ("c", ONE), ("s", ONE),
                ("s", ExtRat(2)), SINF]

    def value(self, x) -> ExtRat:
        return self.unwrap(x)[1]

    def infinite_multiple(self, x):
        return x if self.value(x).is_zero else self.top

    def s_below_exact(self, x, y):
        a, b = self.value(x), self.value(y)
        return a.is_zero or b.is_inf or a < b

    def pi_multiple_exact(self, x):
        v = self.value(x)
        return 1 if (v.is_zero or v.is_inf) else None

    def proportional_exact(self, x, y):
        a, b = self.value(x), self.value(y)
        return a.is_zero or b.is_inf or (not b.is_zero and not a.is_inf)

    def is_finite_element(self, x):
        return not self.value(x).is_inf

    def beta_formula(self, x, y):
        return self.value(x) / self.value(y)

    def scale(self, x, q):
        return self.wrap(c_scale(self.unwrap(x), Fraction(q)))

    def geometric_sum(self, first, ratio):
        return self.wrap(c_series(self.unwrap(first), Fraction(ratio)))

    def geometric_tails_reach_top(self, first, ratio, m):
        return self.value(first).is_inf

    def s_below_geometric_all(self, x, first, ratio):
        return self.value(x).is_zero or self.value(first).is_inf

    def meet(self, x, y):
        return self.wrap(c_min(self.unwrap(x), self.unwrap(y)))

    def o5_candidates(self, xp, x, y):
        cands = c_o5_candidates(self.unwrap(xp), self.unwrap(x), self.unwrap(y))
        return [self.wrap(c) for c in sorted(cands, key=lambda c: (c[1], c[0]))] + [self.top]


def _sat(a: Comp) -> Comp:
    return CINF if a[1] > 1 else a


def _first_format(a: Comp) -> str:
    return "inf" if a == CINF else c_format(a)


def _first_parse(text: str) -> Comp:
    if text.strip() in ("inf", "c:inf"):
        return CINF
    a = c_parse(text)
    if a[1] > 1:
        raise ParseError(f"first component {text!r} exceeds 1")
    return a


ZPAIR = (CZERO, CZERO)


class AlgebraicProduct(Semigroup):
    """UHF-style compact/soft version of ``ProductFiniteByRay``."""

    id = "alg_product"
    name = "AlgebraicProduct"
    is_algebraic = True
    series_kinds = frozenset({"constant", "finite", "geometric"})

    def _zero(self):
        return ZPAIR

    def _top(self):
        return (CINF, SINF)

    def _add(self, a, b):
        return (_sat(c_add(a[0], b[0])), c_add(a[1], b[1]))

    def _leq(self, a, b):
        return c_leq(a[0], b[0]) and c_leq(a[1], b[1])

    def _way_below(self, a, b):
        if a == ZPAIR:
            return True
        return c_way_below(a[0], b[0]) and c_way_below(a[1], b[1])

    def _rapid_term(self, a, n):
        return (c_rapid(a[0], n), c_rapid(a[1], n))

    def _parse(self, text):
        left, right = parse_pair(text)
        a, b = _first_parse(left), c_parse(right)
        if a[1].is_zero != b[1].is_zero:
            raise ParseError("only (0, 0) may have a zero component")
        return (a, b)

    def _format(self, a):
        return f"({_first_format(a[0])}, {c_format(a[1])})"

    def _sample(self, rng, profile):
        if profile == "small":
            if rng.random() < 0.125:
                return ZPAIR
            return (c_sample(rng, 0, Fraction(1, 4), 0, 0), c_sample(rng, 0, Fraction(1, 2), 0, 0))
        if profile == "near_top":
            first = CINF if rng.random() < 1 / 3 else c_sample(rng, Fraction(1, 2), 1, 0, 0)
            return (first, c_sample(rng, 2, 8, p_zero=0, p_inf=1 / 3))
        if rng.random() < 0.1:
            return ZPAIR
        first = CINF if rng.random() < 1 / 6 else c_sample(rng, 0, 1, 0, 0)
        return (first, c_sample(rng, 0, 4, p_zero=0, p_inf=1 / 6))

    def _landmarks(self):
        h, q, tq = ExtRat(Fraction(1, 2)), ExtRat(Fraction(1, 4)), ExtRat(Fraction(3, 4))
        return [ZPAIR, (("c", h), ("c", ONE)), (("c", tq), SINF), (("c", ONE), ("c", ONE)),
                (("s", h), ("s", ONE)), (("c", q), SINF), (CINF, ("c", ONE)),
                (("s", ONE), ("s", ExtRat(2))), (CINF, SINF)]

    def second_value(self, x) -> ExtRat:
        return self.unwrap(x)[1][1]

    def infinite_multiple(self, x):
        return x if self.unwrap(x) == ZPAIR else self.top

    def s_below_exact(self, x, y):
        a, b = self.unwrap(x), self.unwrap(y)
        if a == ZPAIR:
            return True
        if b == ZPAIR:
            return False
        return b[1][1].is_inf or a[1][1] < b[1][1]

    def pi_multiple_exact(self, x):
        a = self.unwrap(x)
        if a == ZPAIR:
            return 1
        if not a[1][1].is_inf:
            return None
        return 1 if a[0] == CINF else int(1 // a[0][1].fraction) + 1

    def proportional_exact(self, x, y):
        a, b = self.unwrap(x), self.unwrap(y)
        if a == ZPAIR:
            return True
        if b == ZPAIR:
            return False
        return not a[1][1].is_inf or b[1][1].is_inf

    def is_finite_element(self, x):
        return self.unwrap(x) != (CINF, SINF)

    def beta_formula(self, x, y):
        return self.second_value(x) / self.second_value(y)

    def scale(self, x, q):
        a = self.unwrap(x)
        q = Fraction(q)
        return self.wrap((c_scale(a[0], q), c_scale(a[1], q)))

    def geometric_sum(self, first, ratio):
        a = self.unwrap(first)
        ratio = Fraction(ratio)
        return self.wrap((_sat(c_series(a[0], ratio)), c_series(a[1], ratio)))

    def geometric_tails_reach_top(self, first, ratio, m):
        return self.unwrap(first) == (CINF, SINF)

    def s_below_geometric_all(self, x, first, ratio):
        a, f = self.unwrap(x), self.unwrap(first)
        if a == ZPAIR:
            return True
        return f != ZPAIR and f[1][1].is_inf

    def meet(self, x, y):
        a, b = self.unwrap(x), self.unwrap(y)
        return self.wrap((c_min(a[0], b[0]), c_min(a[1], b[1])))

    def o5_complete_for(self, xp, x, y):
        # a nonzero z raises the second value of x' + z strictly above that of x';
        # if that already reaches y's, only z = 0 is left, and 0 is a candidate
        p, b = self.unwrap(xp)[1][1], self.unwrap(y)[1][1]
        return not p.is_zero and not b.is_inf and p >= b

    def o5_candidates(self, xp, x, y):
        (p0, p1), (x0, x1), (y0, y1) = self.unwrap(xp), self.unwrap(x), self.unwrap(y)
        firsts = {c for c in c_o5_candidates(p0, x0, y0) if c[1] <= 1 or c == CINF} | {CINF}
        if y0 == CINF:
            firsts |= {("c", ONE), ("s", ONE)}
        seconds = c_o5_candidates(p1, x1, y1) | {SINF}
        out = [self.zero]
        for f, s in _cartesian(sorted(firsts), sorted(seconds)):
            if not f[1].is_zero and not s[1].is_zero:
                out.append(self.wrap((f, s)))
        return out
