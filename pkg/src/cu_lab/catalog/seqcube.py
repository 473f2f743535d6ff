"""Eventually constant sequences in ``[0,1]`` plus ``inf``.

An element is ``(prefix, tail)``: coordinate ``i`` (1-based) is ``prefix[i-1]``
for ``i <= len(prefix)`` and ``tail`` afterwards.  The prefix never ends with
the tail value, which makes the encoding canonical.  Any coordinate above 1
sends a sum to ``inf``.
"""

from __future__ import annotations

from fractions import Fraction

from ..core import Semigroup, random_fraction
from ..errors import ParseError
from ..extrat import INF
from ._syntax import parse_extrat, split_top_level

F0, F1 = Fraction(0), Fraction(1)
ZSEQ = ((), F0)


def canon(prefix, tail) -> tuple:
    prefix = list(prefix)
    while prefix and prefix[-1] == tail:
        prefix.pop()
    return (tuple(prefix), tail)


def coord(a, i: int) -> Fraction:
    prefix, tail = a
    return prefix[i - 1] if i <= len(prefix) else tail


def _zip(a, b, f):
    n = max(len(a[0]), len(b[0]))
    return canon([f(coord(a, i), coord(b, i)) for i in range(1, n + 1)], f(a[1], b[1]))


def _is_top(a) -> bool:
    return not isinstance(a, tuple)


def _values(a):
    return list(a[0]) + [a[1]]


class SeqCube(Semigroup):
    id = "seqcube"
    name = "SeqCube"
    top_is_compact = True
    series_kinds = frozenset({"constant", "finite", "indicator"})

    def _zero(self):
        return ZSEQ

    def _top(self):
        return INF

    def _add(self, a, b):
        if _is_top(a) or _is_top(b):
            return INF
        s = _zip(a, b, lambda p, q: p + q)
        return INF if max(_values(s)) > 1 else s

    def _leq(self, a, b):
        if _is_top(b):
            return True
        if _is_top(a):
            return False
        n = max(len(a[0]), len(b[0]))
        return all(coord(a, i) <= coord(b, i) for i in range(1, n + 2))

    def _way_below(self, a, b):
        if a == ZSEQ or _is_top(b):
            return True
        if _is_top(a):
            return False
        # finite support, and strictly below y on that support
        if a[1] != 0:
            return False
        return all(p == 0 or p < coord(b, i) for i, p in enumerate(a[0], start=1))

    def _rapid_term(self, a, n):
        if _is_top(a) or a == ZSEQ:
            return a
        f = 1 - Fraction(1, 2 ** (n + 1))
        return canon([coord(a, i) * f for i in range(1, n + 2)], F0)

    def _parse(self, text):
        t = text.strip()
        if t == "inf":
            return INF
        if not (t.startswith("[") and t.endswith("]")) or t.count(";") != 1:
            raise ParseError(f"expected '[a1,...;tail]' or 'inf', got {text!r}")
        head, tail_text = t[1:-1].split(";")
        items = [s for s in split_top_level(head)] if head.strip() else []
        vals = []
        for s in items + [tail_text]:
            v = parse_extrat(s)
            if v.is_inf or v > 1:
                raise ParseError(f"coordinate {s!r} is outside [0,1]")
            vals.append(v.fraction)
        return canon(vals[:-1], vals[-1])

    def _format(self, a):
        if _is_top(a):
            return "inf"
        return "[" + ",".join(str(p) for p in a[0]) + ";" + str(a[1]) + "]"

    def _sample(self, rng, profile):
        if profile == "near_top":
            if rng.random() < 0.25:
                return INF
            lo, hi = Fraction(1, 2), F1
        elif profile == "small":
            lo, hi = F0, Fraction(1, 4)
        else:
            u = rng.random()
            if u < 0.1:
                return ZSEQ
            if u < 0.2:
                return INF
            lo, hi = F0, F1

        def draw():
            return random_fraction(rng, lo, hi, maxden=16)

        prefix = [draw() for _ in range(rng.randint(0, 4))]
        tail = F0 if rng.random() < 0.5 else draw()
        return canon(prefix, tail)

    def _landmarks(self):
        h = Fraction(1, 2)
        return [ZSEQ, ((h,), F0), ((F1,), F0), ((F0, F1), F0), ((F1, F1), F0),
                ((), h), ((), F1), INF]

    # analytic facts

    def indicator(self, i):
        if i < 1:
            raise ValueError("coordinates are 1-based")
        return self.wrap(canon([F0] * (i - 1) + [F1], F0))

    def indicator_sum(self, start):
        return self.wrap(canon([F0] * (start - 1), F1))

    def infinite_multiple(self, x):
        return x if self.unwrap(x) == ZSEQ else self.top

    def s_below_exact(self, x, y):
        return self.unwrap(x) == ZSEQ or self.unwrap(y) != ZSEQ

    def pi_multiple_exact(self, x):
        a = self.unwrap(x)
        if _is_top(a) or a == ZSEQ:
            return 1
        return int(1 // max(_values(a))) + 1

    def proportional_exact(self, x, y):
        return self.unwrap(x) == ZSEQ or self.unwrap(y) != ZSEQ

    def is_finite_element(self, x):
        return not _is_top(self.unwrap(x))

    def compact_elements(self):
        return [self.zero, self.top]

    def scale(self, x, q):
        a = self.unwrap(x)
        if _is_top(a):
            return x
        q = Fraction(q)
        return self.wrap(canon([p * q for p in a[0]], a[1] * q))

    def meet(self, x, y):
        a, b = self.unwrap(x), self.unwrap(y)
        if _is_top(a):
            return y
        if _is_top(b):
            return x
        return self.wrap(_zip(a, b, min))

    def monus(self, y, x):
        b, a = self.unwrap(y), self.unwrap(x)
        if _is_top(b):
            return self.top
        if _is_top(a):
            return self.zero
        return self.wrap(_zip(b, a, lambda p, q: max(p - q, F0)))
