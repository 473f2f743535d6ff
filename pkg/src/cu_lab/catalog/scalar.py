"""Totally ordered carriers on a subset of ``[0, inf]`` with saturating sums."""

from __future__ import annotations

from fractions import Fraction

from ..core import Element, Semigroup, random_fraction
from ..errors import ParseError
from ..extrat import INF, ONE, ZERO, ExtRat
from ._syntax import parse_extrat as _parse_extrat


def _half_power(n: int) -> Fraction:
    return 1 - Fraction(1, 2 ** (n + 1))


class _Scalar(Semigroup):
    """Shared plumbing: payload is an ExtRat, order is the numeric order."""

    threshold: ExtRat = ONE  # finite sums above this become INF

    def _zero(self):
        return ZERO

    def _top(self):
        return INF

    def _add(self, a, b):
        s = a + b
        return INF if s > self.threshold else s

    def _leq(self, a, b):
        return a <= b

    def _format(self, a):
        return str(a)

    def meet(self, x, y):
        return self.wrap(min(self.unwrap(x), self.unwrap(y)))

    def infinite_multiple(self, x):
        return self.zero if self.unwrap(x).is_zero else self.top

    def s_below_exact(self, x, y):
        # a nonzero y has INF as a multiple
        return self.unwrap(x).is_zero or not self.unwrap(y).is_zero

    def pi_multiple_exact(self, x):
        a = self.unwrap(x)
        if a.is_zero or a.is_inf:
            return 1
        # n*a is properly infinite iff it saturated
        return int(self.threshold.fraction // a.fraction) + 1

    def proportional_exact(self, x, y):
        return self.unwrap(x).is_zero or not self.unwrap(y).is_zero

    def is_finite_element(self, x):
        return not self.unwrap(x).is_inf

    def compact_elements(self):
        if self.is_finite_carrier:
            return self.elements()
        return [self.zero, self.top]

    def monus(self, y, x):
        b, a = self.unwrap(y), self.unwrap(x)
        return self.top if b.is_inf else self.wrap(b.monus(a))


class SN(_Scalar):
    """``{0, 1, ..., n, inf}`` with sums beyond ``n`` sent to ``inf``."""

    is_finite_carrier = True
    is_algebraic = True
    top_is_compact = True
    o5_complete = halving_complete = True

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("S_n needs n >= 1")
        self.n = n
        self.id = f"s{n}"
        self.name = f"S_{n}"
        self.threshold = ExtRat(n)

    def _way_below(self, a, b):
        return a <= b  # every element is compact

    def _rapid_term(self, a, n):
        return a

    def _parse(self, text):
        v = _parse_extrat(text)
        if not v.is_inf and (v.fraction.denominator != 1 or v.fraction > self.n):
            raise ParseError(f"{text!r} is not in {{0..{self.n}, inf}}")
        return v

    def _sample(self, rng, profile):
        if profile == "small":
            return ExtRat(rng.randint(0, 1))
        if profile == "near_top":
            return rng.choice([ExtRat(self.n), INF])
        return rng.choice(self._landmarks())

    def _landmarks(self):
        return [ExtRat(i) for i in range(self.n + 1)] + [INF]

    def elements(self):
        return [self.wrap(v) for v in self._landmarks()]


class Interval01Inf(_Scalar):
    """``[0, 1] ∪ {inf}``; a sum exceeding 1 becomes ``inf``."""

    id = "interval01"
    name = "Interval01Inf"
    top_is_compact = True
    series_kinds = frozenset({"constant", "finite", "geometric"})

    def _way_below(self, a, b):
        return a.is_zero or b.is_inf or a < b

    def _rapid_term(self, a, n):
        if a.is_zero or a.is_inf:
            return a
        return a * _half_power(n)

    def _parse(self, text):
        v = _parse_extrat(text)
        if not v.is_inf and v > 1:
            raise ParseError(f"{text!r} is outside [0,1] ∪ {{inf}}")
        return v

    def _sample(self, rng, profile):
        if profile == "small":
            if rng.random() < 0.125:
                return ZERO
            return ExtRat(random_fraction(rng, Fraction(0), Fraction(1, 4), open_lo=True))
        if profile == "near_top":
            if rng.random() < 0.25:
                return INF
            return ExtRat(random_fraction(rng, Fraction(1, 2), Fraction(1), open_lo=True))
        u = rng.random()
        if u < 0.125:
            return ZERO
        if u < 0.25:
            return INF
        return ExtRat(random_fraction(rng, Fraction(0), Fraction(1), open_lo=True))

    def _landmarks(self):
        return [ZERO, ExtRat(Fraction(1, 4)), ExtRat(Fraction(1, 2)),
                ExtRat(Fraction(3, 4)), ONE, INF]

    def scale(self, x, q):
        return self.wrap(self.unwrap(x) * Fraction(q))

    def geometric_sum(self, first, ratio):
        s = self.unwrap(first) / (1 - Fraction(ratio))
        return self.wrap(INF if s > 1 else s)

    def geometric_tails_reach_top(self, first, ratio, m):
        # finite tails shrink to 0, so only an infinite first term works
        return self.unwrap(first).is_inf

    def s_below_geometric_all(self, x, first, ratio):
        return self.unwrap(x).is_zero or not self.unwrap(first).is_zero


class OpenInterval12(_Scalar):
    """``{0} ∪ (1, 2] ∪ {inf}``; any two nonzero elements sum to ``inf``."""

    id = "open12"
    name = "OpenInterval12"
    top_is_compact = True
    threshold = ExtRat(2)
    o5_complete = halving_complete = True

    def _way_below(self, a, b):
        return a.is_zero or b.is_inf or (not b.is_zero and a < b)

    def _rapid_term(self, a, n):
        if a.is_zero or a.is_inf:
            return a
        return ONE + (a.monus(ONE)) * _half_power(n)

    def _parse(self, text):
        v = _parse_extrat(text)
        if not (v.is_zero or v.is_inf or ONE < v <= 2):
            raise ParseError(f"{text!r} is outside {{0}} ∪ (1,2] ∪ {{inf}}")
        return v

    def _sample(self, rng, profile):
        if profile == "small":
            if rng.random() < 0.125:
                return ZERO
            return ExtRat(random_fraction(rng, Fraction(1), Fraction(5, 4), open_lo=True))
        if profile == "near_top":
            if rng.random() < 0.25:
                return INF
            return ExtRat(random_fraction(rng, Fraction(3, 2), Fraction(2), open_lo=True))
        u = rng.random()
        if u < 0.125:
            return ZERO
        if u < 0.25:
            return INF
        return ExtRat(random_fraction(rng, Fraction(1), Fraction(2), open_lo=True))

    def _landmarks(self):
        return [ZERO, ExtRat(Fraction(9, 8)), ExtRat(Fraction(5, 4)),
                ExtRat(Fraction(3, 2)), ExtRat(2), INF]

    def pi_multiple_exact(self, x):
        a = self.unwrap(x)
        return 1 if (a.is_zero or a.is_inf) else 2

    def o5_candidates(self, xp: Element, x: Element, y: Element) -> list[Element]:
        """Complete: once ``x'`` is nonzero, every nonzero ``z`` behaves like ``inf``."""
        return [self.zero, y, self.wrap(ExtRat(2)), self.top]

    def halving_candidates(self, x):
        # complete for the same reason: nonzero summands always add up to inf
        return [x, self.wrap(ExtRat(2))]


__all__ = ["SN", "Interval01Inf", "OpenInterval12"]
