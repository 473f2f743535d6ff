"""Symbolic infinite sequences ``(y_n)_{n>=1}`` and their exact sums.

Partial sums are computed by folding the carrier's own addition over the
terms; the full sum is a closed form per kind.  The two routes are kept
independent so one can check the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Union

from .errors import CapabilityError, UsageError

if TYPE_CHECKING:
    from .core import Element, Semigroup


@dataclass(frozen=True)
class Geometric:
    """``y_n = first * ratio**(n-1)``; needs a carrier with rational scaling."""

    first: Element
    ratio: Fraction

    def __post_init__(self):
        r = Fraction(self.ratio)
        if not 0 < r < 1:
            raise UsageError(f"geometric ratio must lie in (0,1), got {r}")
        object.__setattr__(self, "ratio", r)


@dataclass(frozen=True)
class Constant:
    c: Element


@dataclass(frozen=True)
class IndicatorStream:
    """``y_n = e_{start+n-1}``, the coordinate unit vectors (sequence carriers only)."""

    start: int = 1


@dataclass(frozen=True)
class FiniteThenZero:
    terms: tuple


@dataclass(frozen=True)
class Scaled:
    n: int
    inner: "SeriesSpec"


@dataclass(frozen=True)
class Tail:
    """The sequence ``(y_k, y_{k+1}, ...)`` of ``inner``."""

    k: int
    inner: "SeriesSpec"


SeriesSpec = Union[Geometric, Constant, IndicatorStream, FiniteThenZero, Scaled, Tail]

KIND_NAMES = {
    Geometric: "geometric",
    Constant: "constant",
    IndicatorStream: "indicator",
    FiniteThenZero: "finite",
    Scaled: "scaled",
    Tail: "tail",
}


def kinds_used(spec: SeriesSpec) -> set[str]:
    if isinstance(spec, (Scaled, Tail)):
        return {KIND_NAMES[type(spec)]} | kinds_used(spec.inner)
    return {KIND_NAMES[type(spec)]}


def check_supported(S: Semigroup, spec: SeriesSpec) -> None:
    for kind in kinds_used(spec):
        if kind not in S.series_kinds and kind not in ("scaled", "tail"):
            raise CapabilityError(f"{S.id} does not support {kind} series")


def push_tail(spec: SeriesSpec, k: int = 1) -> SeriesSpec:
    """Rewrite ``Tail(k, spec)`` without a ``Tail`` node on top."""
    if k < 1:
        raise UsageError("tail index must be positive")
    if isinstance(spec, Tail):
        return push_tail(spec.inner, spec.k + k - 1)
    if k == 1:
        return spec
    if isinstance(spec, Geometric):
        return Geometric(_scale_first(spec, k), spec.ratio)
    if isinstance(spec, Constant):
        return spec
    if isinstance(spec, IndicatorStream):
        return IndicatorStream(spec.start + k - 1)
    if isinstance(spec, FiniteThenZero):
        return FiniteThenZero(tuple(spec.terms[k - 1:]))
    if isinstance(spec, Scaled):
        return Scaled(spec.n, push_tail(spec.inner, k))
    raise TypeError(spec)


def _scale_first(spec: Geometric, k: int):
    from .core import semigroup_for

    S = semigroup_for(spec.first)
    return S.scale(spec.first, spec.ratio ** (k - 1))


def term(S: Semigroup, spec: SeriesSpec, n: int) -> Element:
    """The ``n``-th term, 1-based."""
    if n < 1:
        raise UsageError("terms are indexed from 1")
    if isinstance(spec, Geometric):
        return S.scale(spec.first, spec.ratio ** (n - 1))
    if isinstance(spec, Constant):
        return spec.c
    if isinstance(spec, IndicatorStream):
        return S.indicator(spec.start + n - 1)
    if isinstance(spec, FiniteThenZero):
        return spec.terms[n - 1] if n <= len(spec.terms) else S.zero
    if isinstance(spec, Scaled):
        return S.multiple(spec.n, term(S, spec.inner, n))
    if isinstance(spec, Tail):
        return term(S, spec.inner, n + spec.k - 1)
    raise TypeError(spec)


def partial_sum(S: Semigroup, spec: SeriesSpec, N: int) -> Element:
    """``y_1 + ... + y_N`` by repeated addition."""
    check_supported(S, spec)
    total = S.zero
    for n in range(1, N + 1):
        total = S.add(total, term(S, spec, n))
        if total == S.top:
            break
    return total


def series_sum(S: Semigroup, spec: SeriesSpec) -> Element:
    """Exact supremum of the partial sums."""
    check_supported(S, spec)
    if isinstance(spec, Tail):
        return series_sum(S, push_tail(spec))
    if isinstance(spec, Geometric):
        return S.geometric_sum(spec.first, spec.ratio)
    if isinstance(spec, Constant):
        return S.infinite_multiple(spec.c)
    if isinstance(spec, IndicatorStream):
        return S.indicator_sum(spec.start)
    if isinstance(spec, FiniteThenZero):
        total = S.zero
        for t in spec.terms:
            total = S.add(total, t)
        return total
    if isinstance(spec, Scaled):
        # sup is additive along increasing sequences
        return S.multiple(spec.n, series_sum(S, spec.inner))
    raise TypeError(spec)


def tails_scaled_reach_top(S: Semigroup, spec: SeriesSpec, m: int) -> bool:
    """Decide ``m * sum_{n>=k} y_n == top`` for *every* ``k >= 1``."""
    check_supported(S, spec)
    if isinstance(spec, Tail):
        # tails of a tail are tails of the inner sequence
        return tails_scaled_reach_top(S, spec.inner, m)
    if isinstance(spec, Scaled):
        return tails_scaled_reach_top(S, spec.inner, m * spec.n)
    if isinstance(spec, FiniteThenZero):
        return S.zero == S.top
    if isinstance(spec, Constant):
        return S.multiple(m, S.infinite_multiple(spec.c)) == S.top
    if isinstance(spec, IndicatorStream):
        # the carrier is shift invariant, so one tail decides all
        return S.multiple(m, S.indicator_sum(spec.start)) == S.top
    if isinstance(spec, Geometric):
        return S.geometric_tails_reach_top(spec.first, spec.ratio, m)
    raise TypeError(spec)


def terms_way_below_top(S: Semigroup, spec: SeriesSpec) -> bool:
    """Decide ``y_n << top`` for every ``n``."""
    check_supported(S, spec)
    top = S.top
    if isinstance(spec, Tail):
        return terms_way_below_top(S, push_tail(spec))
    if isinstance(spec, Geometric):
        # terms decrease, and << is stable under shrinking the left side
        return S.way_below(spec.first, top)
    if isinstance(spec, Constant):
        return S.way_below(spec.c, top)
    if isinstance(spec, IndicatorStream):
        return S.way_below(S.indicator(spec.start), top)
    if isinstance(spec, FiniteThenZero):
        return all(S.way_below(t, top) for t in spec.terms)
    if isinstance(spec, Scaled):
        if S.top_is_compact:
            return True
        inner_ok = terms_way_below_top(S, spec.inner)
        if not inner_ok:
            return False
        return _scaled_terms_way_below(S, spec)
    raise TypeError(spec)


def _scaled_terms_way_below(S: Semigroup, spec: Scaled) -> bool:
    # n * y << top whenever y << top, by compatibility of << with addition
    # applied to y << top on each summand (top + top == top).
    return True


def s_below_all_terms(S: Semigroup, x: Element, spec: SeriesSpec) -> bool | None:
    """Decide ``x <_s y_n`` for every ``n``; ``None`` when no closed form applies."""
    check_supported(S, spec)
    try:
        if isinstance(spec, Constant):
            return S.s_below_exact(x, spec.c)
        if isinstance(spec, FiniteThenZero):
            return all(S.s_below_exact(x, t) for t in spec.terms) and S.s_below_exact(x, S.zero)
        if isinstance(spec, IndicatorStream):
            return S.s_below_exact(x, S.indicator(spec.start))
        if isinstance(spec, Geometric):
            return S.s_below_geometric_all(x, spec.first, spec.ratio)
        if isinstance(spec, Tail):
            inner = s_below_all_terms(S, x, spec.inner)
            if inner:
                return True
            return s_below_all_terms(S, x, push_tail(spec)) if not isinstance(spec.inner, Tail) else None
        if isinstance(spec, Scaled):
            inner = s_below_all_terms(S, x, spec.inner)
            # x <_s y implies x <_s n*y since y <= n*y
            return True if inner else None
    except NotImplementedError:
        return None
    raise TypeError(spec)


# JSON round trip


def to_json(S: Semigroup, spec: SeriesSpec) -> dict:
    if isinstance(spec, Geometric):
        return {"kind": "geometric", "first": S.format(spec.first), "ratio": str(spec.ratio)}
    if isinstance(spec, Constant):
        return {"kind": "constant", "c": S.format(spec.c)}
    if isinstance(spec, IndicatorStream):
        return {"kind": "indicator", "start": spec.start}
    if isinstance(spec, FiniteThenZero):
        return {"kind": "finite", "terms": [S.format(t) for t in spec.terms]}
    if isinstance(spec, Scaled):
        return {"kind": "scaled", "n": spec.n, "inner": to_json(S, spec.inner)}
    if isinstance(spec, Tail):
        return {"kind": "tail", "k": spec.k, "inner": to_json(S, spec.inner)}
    raise TypeError(spec)


def from_json(S: Semigroup, obj: dict) -> SeriesSpec:
    try:
        kind = obj["kind"]
        if kind == "geometric":
            return Geometric(S.parse(obj["first"]), Fraction(obj["ratio"]))
        if kind == "constant":
            return Constant(S.parse(obj["c"]))
        if kind == "indicator":
            return IndicatorStream(int(obj.get("start", 1)))
        if kind == "finite":
            return FiniteThenZero(tuple(S.parse(t) for t in obj["terms"]))
        if kind == "scaled":
            return Scaled(int(obj["n"]), from_json(S, obj["inner"]))
        if kind == "tail":
            return Tail(int(obj["k"]), from_json(S, obj["inner"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed series spec {obj!r}: {exc}") from exc
    raise UsageError(f"unknown series kind {kind!r}")
