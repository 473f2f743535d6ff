"""``{(0,0)} ∪ ((0,1] ∪ {inf}) × (0, inf]``: a saturating coordinate times a ray."""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian

from ..core import Semigroup, random_fraction
from ..errors import ParseError
from ..extrat import INF, ONE, ZERO, ExtRat
from ._syntax import parse_extrat, parse_pair

ZERO_PAIR = (ZERO, ZERO)


def _first_add(a: ExtRat, b: ExtRat) -> ExtRat:
    s = a + b
    return INF if s > 1 else s


def _first_wb(a: ExtRat, b: ExtRat) -> bool:
    # inf is compact in the saturating coordinate
    return b.is_inf or a < b


def _shrink(a: ExtRat, n: int) -> ExtRat:
    if a.is_inf:
        return a
    return a * (1 - Fraction(1, 2 ** (n + 1)))


class ProductFiniteByRay(Semigroup):
    id = "product_ray"
    name = "ProductFiniteByRay"
    series_kinds = frozenset({"constant", "finite", "geometric"})

    def _zero(self):
        return ZERO_PAIR

    def _top(self):
        return (INF, INF)

    def _check(self, u: ExtRat, r: ExtRat):
        if u.is_zero and r.is_zero:
            return ZERO_PAIR
        if u.is_zero or r.is_zero:
            raise ParseError("only (0, 0) may have a zero coordinate")
        if not u.is_inf and u > 1:
            raise ParseError(f"first coordinate {u} is outside (0,1] ∪ {{inf}}")
        return (u, r)

    def _add(self, a, b):
        return (_first_add(a[0], b[0]), a[1] + b[1])

    def _leq(self, a, b):
        return a[0] <= b[0] and a[1] <= b[1]

    def _way_below(self, a, b):
        if a == ZERO_PAIR:
            return True
        if b == ZERO_PAIR:
            return False
        return _first_wb(a[0], b[0]) and a[1] < b[1]

    def _rapid_term(self, a, n):
        if a == ZERO_PAIR:
            return a
        u, r = a
        return (_shrink(u, n), ExtRat(n + 1) if r.is_inf else _shrink(r, n))

    def _parse(self, text):
        left, right = parse_pair(text)
        return self._check(parse_extrat(left), parse_extrat(right))

    def _format(self, a):
        return f"({a[0]}, {a[1]})"

    def _sample(self, rng, profile):
        if profile == "small":
            if rng.random() < 0.125:
                return ZERO_PAIR
            return (ExtRat(random_fraction(rng, 0, Fraction(1, 4), open_lo=True)),
                    ExtRat(random_fraction(rng, 0, Fraction(1, 2), open_lo=True)))
        if profile == "near_top":
            u = INF if rng.random() < 1 / 3 else ExtRat(random_fraction(rng, Fraction(1, 2), 1, open_lo=True))
            r = INF if rng.random() < 1 / 3 else ExtRat(random_fraction(rng, 2, 8, open_lo=True))
            return (u, r)
        if rng.random() < 0.1:
            return ZERO_PAIR
        u = INF if rng.random() < 1 / 6 else ExtRat(random_fraction(rng, 0, 1, open_lo=True))
        r = INF if rng.random() < 1 / 6 else ExtRat(random_fraction(rng, 0, 4, open_lo=True))
        return (u, r)

    def _landmarks(self):
        h, q, tq = ExtRat(Fraction(1, 2)), ExtRat(Fraction(1, 4)), ExtRat(Fraction(3, 4))
        return [ZERO_PAIR, (h, ONE), (tq, INF), (ONE, ONE), (tq, h), (q, INF),
                (INF, ONE), (ONE, ExtRat(2)), (INF, ExtRat(2)), (INF, INF)]

    # analytic facts

    def infinite_multiple(self, x):
        return x if self.unwrap(x) == ZERO_PAIR else self.top

    def s_below_exact(self, x, y):
        a, b = self.unwrap(x), self.unwrap(y)
        if a == ZERO_PAIR:
            return True
        if b == ZERO_PAIR:
            return False
        # the first coordinate always saturates eventually
        return b[1].is_inf or a[1] < b[1]

    def pi_multiple_exact(self, x):
        a = self.unwrap(x)
        if a == ZERO_PAIR:
            return 1
        u, r = a
        if not r.is_inf:
            return None
        return 1 if u.is_inf else int(1 // u.fraction) + 1

    def proportional_exact(self, x, y):
        a, b = self.unwrap(x), self.unwrap(y)
        if a == ZERO_PAIR:
            return True
        if b == ZERO_PAIR:
            return False
        return not a[1].is_inf or b[1].is_inf

    def beta_formula(self, x, y):
        # the saturating coordinate never constrains l/k in the limit
        return self.unwrap(x)[1] / self.unwrap(y)[1]

    def compact_elements(self):
        return [self.zero]

    def is_finite_element(self, x):
        return self.unwrap(x) != (INF, INF)

    def scale(self, x, q):
        q = Fraction(q)
        a = self.unwrap(x)
        return self.wrap((a[0] * q, a[1] * q))

    def geometric_sum(self, first, ratio):
        u, r = self.unwrap(first)
        d = 1 - Fraction(ratio)
        return self.wrap((_first_add(u / d, ZERO), r / d))

    def geometric_tails_reach_top(self, first, ratio, m):
        u, r = self.unwrap(first)
        return u.is_inf and r.is_inf

    def s_below_geometric_all(self, x, first, ratio):
        a, f = self.unwrap(x), self.unwrap(first)
        if a == ZERO_PAIR:
            return True
        if f == ZERO_PAIR:
            return False
        # second coordinates of the terms tend to 0 unless they are infinite
        return f[1].is_inf

    def meet(self, x, y):
        a, b = self.unwrap(x), self.unwrap(y)
        return self.wrap((min(a[0], b[0]), min(a[1], b[1])))

    def o5_candidates(self, xp, x, y):
        (v, s) = self.unwrap(y)
        firsts, seconds = {INF}, {INF}
        for (u, r) in (self.unwrap(xp), self.unwrap(x)):
            d1 = INF if v.is_inf else v.monus(u)
            d2 = INF if s.is_inf else s.monus(r)
            if not d1.is_zero:
                firsts.add(d1)
            if not d2.is_zero:
                seconds.add(d2)
        cands = [self.zero]
        for f, g in _cartesian(sorted(firsts), sorted(seconds)):
            if f.is_inf or f <= 1:
                cands.append(self.wrap((f, g)))
        return cands
