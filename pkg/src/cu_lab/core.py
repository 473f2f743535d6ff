"""Semigroup abstraction and the generic derived relations.

Concrete carriers subclass :class:`Semigroup` and implement the payload hooks
(``_add``, ``_leq``, ``_way_below``, ...).  Everything public takes and returns
:class:`Element` values, which carry the id of the carrier they belong to so
that mixing carriers is caught early.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Optional

from . import series as _series
from .errors import CapabilityError, EntryMismatch, ParseError, UsageError

PROFILES = ("small", "mixed", "near_top")


@dataclass(frozen=True)
class Element:
    """A value of some carrier; ``value`` is the carrier's canonical payload."""

    entry: str
    value: Any

    def __repr__(self) -> str:
        from .catalog import get

        try:
            return f"<{self.entry} {get(self.entry).format(self)}>"
        except Exception:
            return f"<{self.entry} {self.value!r}>"


def semigroup_for(x: Element) -> "Semigroup":
    from .catalog import get

    return get(x.entry)


class Semigroup(ABC):
    """Positively ordered abelian monoid with a largest element."""

    id: str = "abstract"
    name: str = "abstract"
    is_finite_carrier: bool = False
    is_simple: bool = True
    is_algebraic: bool = False
    top_is_compact: bool = False
    series_kinds: frozenset = frozenset({"constant", "finite"})
    # the witness candidate lists are exhaustive up to equivalence
    o5_complete: bool = False
    halving_complete: bool = False

    # ---- payload hooks -------------------------------------------------

    @abstractmethod
    def _zero(self) -> Any: ...

    @abstractmethod
    def _top(self) -> Any: ...

    @abstractmethod
    def _add(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def _leq(self, a: Any, b: Any) -> bool: ...

    @abstractmethod
    def _way_below(self, a: Any, b: Any) -> bool: ...

    @abstractmethod
    def _rapid_term(self, a: Any, n: int) -> Any: ...

    @abstractmethod
    def _parse(self, text: str) -> Any: ...

    @abstractmethod
    def _format(self, a: Any) -> str: ...

    @abstractmethod
    def _sample(self, rng: random.Random, profile: str) -> Any: ...

    @abstractmethod
    def _landmarks(self) -> list: ...

    # ---- plumbing ------------------------------------------------------

    def wrap(self, value: Any) -> Element:
        return Element(self.id, value)

    def unwrap(self, x: Element) -> Any:
        if not isinstance(x, Element):
            raise EntryMismatch(f"expected an element of {self.id}, got {x!r}")
        if x.entry != self.id:
            raise EntryMismatch(f"element of {x.entry} passed to {self.id}")
        return x.value

    @property
    def zero(self) -> Element:
        return self.wrap(self._zero())

    @property
    def top(self) -> Element:
        return self.wrap(self._top())

    def parse(self, text: str) -> Element:
        if not isinstance(text, str):
            raise ParseError(f"element literal must be a string, got {text!r}")
        try:
            return self.wrap(self._parse(text.strip()))
        except ParseError:
            raise
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise ParseError(f"{self.id}: cannot parse {text!r}: {exc}") from exc

    def format(self, x: Element) -> str:
        return self._format(self.unwrap(x))

    def __repr__(self) -> str:
        return f"<Semigroup {self.id}>"

    # ---- order and arithmetic -----------------------------------------

    def add(self, x: Element, y: Element) -> Element:
        return self.wrap(self._add(self.unwrap(x), self.unwrap(y)))

    def sum(self, xs: Iterable[Element]) -> Element:
        total = self.zero
        for x in xs:
            total = self.add(total, x)
        return total

    def leq(self, x: Element, y: Element) -> bool:
        return self._leq(self.unwrap(x), self.unwrap(y))

    def way_below(self, x: Element, y: Element) -> bool:
        return self._way_below(self.unwrap(x), self.unwrap(y))

    def is_compact(self, x: Element) -> bool:
        return self.way_below(x, x)

    def multiple(self, n: int, x: Element) -> Element:
        if n < 0:
            raise ValueError("multiple needs n >= 0")
        result, base = self.zero, x
        while n:
            if n & 1:
                result = self.add(result, base)
            n >>= 1
            if n:
                base = self.add(base, base)
        return result

    def rapid_term(self, x: Element, n: int) -> Element:
        if n < 0:
            raise ValueError("rapid_term index must be >= 0")
        return self.wrap(self._rapid_term(self.unwrap(x), n))

    def infinite_multiple(self, x: Element) -> Element:
        """``sup_n n*x``.  In a simple carrier this is ``top`` for ``x != 0``."""
        if x == self.zero:
            return x
        if self.is_simple:
            return self.top
        raise NotImplementedError

    # ---- derived relations ---------------------------------------------

    def s_below(self, x: Element, y: Element, kmax: int) -> Optional[int]:
        """Least ``k <= kmax`` with ``(k+1)x <= ky``, or ``None``."""
        if kmax < 1:
            raise ValueError("kmax must be >= 1")
        kx, ky = x, self.zero
        for k in range(1, kmax + 1):
            kx = self.add(kx, x)
            ky = self.add(ky, y)
            if self.leq(kx, ky):
                return k
        return None

    def s_below_exact(self, x: Element, y: Element) -> bool:
        """Exact decision of ``x <_s y``; carriers override when they can."""
        raise NotImplementedError

    def is_properly_infinite(self, x: Element) -> bool:
        return self.leq(self.add(x, x), x)

    def has_properly_infinite_multiple(self, x: Element, nmax: int) -> Optional[int]:
        if nmax < 1:
            raise ValueError("nmax must be >= 1")
        acc = self.zero
        for n in range(1, nmax + 1):
            acc = self.add(acc, x)
            if self.is_properly_infinite(acc):
                return n
        return None

    def pi_multiple_exact(self, x: Element) -> Optional[int]:
        """Least ``n`` with ``n*x`` properly infinite, ``None`` if there is none."""
        raise NotImplementedError

    def proportional(self, x: Element, y: Element, nmax: int = 64) -> Optional[int]:
        """Least ``n <= nmax`` with ``x <= n*y`` (a witness for ``x`` in the ideal of ``y``)."""
        acc = self.zero
        for n in range(1, nmax + 1):
            acc = self.add(acc, y)
            if self.leq(x, acc):
                return n
        return None

    def proportional_exact(self, x: Element, y: Element) -> bool:
        if x == self.zero:
            return True
        if y == self.zero:
            return False
        if self.is_simple and self.way_below(x, self.top):
            return True  # y is full
        raise NotImplementedError

    def beta_formula(self, x: Element, y: Element):
        """Closed form for beta when no multiple of ``y`` is properly infinite."""
        raise NotImplementedError

    def compact_elements(self) -> Optional[list[Element]]:
        """All compact elements when there are finitely many, else ``None``."""
        if self.is_finite_carrier:
            return [e for e in self.elements() if self.is_compact(e)]
        return None

    def is_finite_element(self, x: Element) -> bool:
        """``x`` is finite when ``x + y <= x`` forces ``y = 0``."""
        raise NotImplementedError

    # ---- optional capabilities ------------------------------------------

    def scale(self, x: Element, q: Fraction) -> Element:
        raise CapabilityError(f"{self.id} has no rational scaling")

    def geometric_sum(self, first: Element, ratio: Fraction) -> Element:
        raise CapabilityError(f"{self.id} does not support geometric series")

    def geometric_tails_reach_top(self, first: Element, ratio: Fraction, m: int) -> bool:
        raise CapabilityError(f"{self.id} does not support geometric series")

    def s_below_geometric_all(self, x: Element, first: Element, ratio: Fraction) -> bool:
        raise NotImplementedError

    def indicator(self, i: int) -> Element:
        raise CapabilityError(f"{self.id} has no coordinate unit vectors")

    def indicator_sum(self, start: int) -> Element:
        raise CapabilityError(f"{self.id} has no coordinate unit vectors")

    def meet(self, x: Element, y: Element) -> Element:
        """Greatest lower bound, where the carrier has one in closed form."""
        raise NotImplementedError

    def elements(self) -> list[Element]:
        raise CapabilityError(f"{self.id} is not a finite carrier")

    def monus(self, y: Element, x: Element) -> Element:
        """Some ``z`` with ``x + z`` close to ``y`` from above; carrier specific."""
        raise NotImplementedError

    # witness search spaces for the existential axioms

    def o5_candidates(self, xp: Element, x: Element, y: Element) -> list[Element]:
        if self.is_finite_carrier:
            return self.elements()
        cands = [self.zero, y, self.top]
        for a in (xp, x):
            try:
                cands.append(self.monus(y, a))
            except (NotImplementedError, CapabilityError, ValueError):
                pass
        return _dedupe(cands)

    def o5_complete_for(self, xp: Element, x: Element, y: Element) -> bool:
        """Whether ``o5_candidates(xp, x, y)`` provably contains every useful ``z``."""
        return self.o5_complete

    def halving_candidates(self, x: Element) -> list[Element]:
        """Candidates ``z`` for ``2z <= x``; a finite carrier offers all elements."""
        if self.is_finite_carrier:
            return self.elements()
        cands = [x]
        try:
            cands.insert(0, self.scale(x, Fraction(1, 2)))
        except CapabilityError:
            pass
        return _dedupe(cands)

    # ---- series ----------------------------------------------------------

    def partial_sum(self, spec: _series.SeriesSpec, N: int) -> Element:
        return _series.partial_sum(self, spec, N)

    def series_sum(self, spec: _series.SeriesSpec) -> Element:
        return _series.series_sum(self, spec)

    # ---- sampling ----------------------------------------------------------

    def sample(self, rng: random.Random, profile: str = "mixed") -> Element:
        if profile not in PROFILES:
            raise UsageError(f"unknown profile {profile!r}")
        return self.wrap(self._sample(rng, profile))

    def sample_nonzero(self, rng: random.Random, profile: str = "mixed") -> Element:
        while True:
            x = self.sample(rng, profile)
            if x != self.zero:
                return x

    def landmarks(self) -> list[Element]:
        """Fixed elements that every sampled check visits first."""
        return [self.wrap(v) for v in self._landmarks()]


def _dedupe(items: list) -> list:
    seen, out = set(), []
    for it in items:
        if it not in seen:
            seen.add(it)
            out.append(it)
    return out


def random_fraction(rng: random.Random, lo: Fraction, hi: Fraction, maxden: int = 64,
                    open_lo: bool = False) -> Fraction:
    """A rational in ``[lo, hi]`` (or ``(lo, hi]``) with denominator at most ``maxden``."""
    lo, hi = Fraction(lo), Fraction(hi)
    for _ in range(64):
        den = rng.randint(1, maxden)
        a = -(-lo.numerator * den // lo.denominator)  # ceil(lo*den)
        b = hi.numerator * den // hi.denominator
        if open_lo and Fraction(a, den) == lo:
            a += 1
        if a <= b:
            return Fraction(rng.randint(a, b), den)
    return hi
