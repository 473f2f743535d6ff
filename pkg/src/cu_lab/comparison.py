"""The comparison invariant ``beta(x, y) = inf{ l/k : k x <= l y }`` and the state f0."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import Element, Semigroup
from .errors import BetaUndefined, CuLabError
from .extrat import ZERO, ExtRat

EXACT_ATTAINED = "ExactAttained"
EXACT_LIMIT = "ExactLimit"
BOUND_ONLY = "BoundOnly"
UNDEFINED = "Undefined"


@dataclass(frozen=True)
class BetaResult:
    upper: Optional[ExtRat]
    witness: Optional[tuple[int, int]]
    exact: Optional[ExtRat]
    status: str
    bound: int

    def to_json(self) -> dict:
        return {
            "upper": None if self.upper is None else str(self.upper),
            "witness": None if self.witness is None else list(self.witness),
            "exact": None if self.exact is None else str(self.exact),
            "status": self.status,
            "bound": self.bound,
        }


def beta_bounded(S: Semigroup, x: Element, y: Element, K: int) -> BetaResult:
    """Least ``l/k`` with ``1 <= k <= K``, ``0 <= l <= K`` and ``k x <= l y``.

    ``k`` runs upward; for each ``k`` the least admissible ``l`` is found by
    bisection (``l y`` is increasing in ``l``).  The witness is the first pair
    reaching the final value, i.e. the lexicographically least minimiser.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    ly = [S.zero]
    for _ in range(K):
        ly.append(S.add(ly[-1], y))
    best: Optional[Fraction] = None
    witness = None
    kx = S.zero
    for k in range(1, K + 1):
        kx = S.add(kx, x)
        if not S.leq(kx, ly[K]):
            continue
        lo, hi = 0, K
        if best is not None:
            # only l with l/k < best can improve
            cap = -(-best.numerator * k // best.denominator) - 1
            if cap < 0 or not S.leq(kx, ly[min(cap, K)]):
                continue
            hi = min(cap, K)
        while lo < hi:
            mid = (lo + hi) // 2
            if S.leq(kx, ly[mid]):
                hi = mid
            else:
                lo = mid + 1
        val = Fraction(lo, k)
        if best is None or val < best:
            best, witness = val, (k, lo)
    if best is None:
        return BetaResult(None, None, None, UNDEFINED, K)
    return BetaResult(ExtRat(best), witness, None, BOUND_ONLY, K)


def beta_exact(S: Semigroup, x: Element, y: Element) -> ExtRat:
    """The exact infimum; raises :class:`BetaUndefined` unless ``x`` is in the ideal of ``y``."""
    if not _proportional(S, x, y):
        raise BetaUndefined(f"{S.format(x)} is not bounded by a multiple of {S.format(y)}")
    if x == S.zero:
        return ZERO
    if S.is_finite_carrier:
        # multiples stabilise, so x <= l y forces k x <= l y for every k
        return ZERO
    if S.pi_multiple_exact(y) is not None:
        return ZERO
    return S.beta_formula(x, y)


def _proportional(S: Semigroup, x: Element, y: Element) -> bool:
    try:
        return S.proportional_exact(x, y)
    except NotImplementedError:
        return S.proportional(x, y, 4 * 64) is not None


def beta(S: Semigroup, x: Element, y: Element, K: int) -> BetaResult:
    """Bounded search combined with the exact value where one is known."""
    res = beta_bounded(S, x, y, K)
    try:
        exact = beta_exact(S, x, y)
    except BetaUndefined:
        return BetaResult(res.upper, res.witness, None, UNDEFINED, K)
    except NotImplementedError:
        return res
    if res.upper is None:
        return BetaResult(None, None, exact, EXACT_LIMIT, K)
    status = EXACT_ATTAINED if res.upper == exact else EXACT_LIMIT
    return BetaResult(res.upper, res.witness, exact, status, K)


# ---- the state f0 on <x, y> ---------------------------------------------------


@dataclass(frozen=True)
class StatePair:
    x: Element
    y: Element
    beta: ExtRat


def state_pair(S: Semigroup, x: Element, y: Element) -> StatePair:
    return StatePair(x, y, beta_exact(S, x, y))


def f0_eval(sp: StatePair, k: int, l: int) -> ExtRat:
    if k < 0 or l < 0:
        raise ValueError("coefficients must be nonnegative")
    return sp.beta * k + l


def _bucket(k1: int, l1: int, k2: int, l2: int) -> str:
    if k1 <= k2 and l1 <= l2:
        return "i"
    if k1 <= k2 and l1 >= l2:
        return "ii"
    if k1 >= k2 and l1 <= l2:
        return "iii"
    return "iv"


@dataclass
class MonotoneReport:
    checked: int = 0
    comparable: int = 0
    buckets: dict = field(default_factory=lambda: {"i": 0, "ii": 0, "iii": 0, "iv": 0})
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def raise_if_violated(self) -> None:
        if self.violations:
            raise F0Violation(self.violations[0])


def f0_monotone_check(S: Semigroup, sp: StatePair, samples: int, rng: random.Random,
                      kmax: int = 8) -> MonotoneReport:
    """Sample ``(k1, l1, k2, l2)`` and test ``f0`` against the order of ``S``.

    Only comparable pairs (``k1 x + l1 y <= k2 x + l2 y``) are counted in the
    buckets, which follow the four sign patterns of ``(k2 - k1, l2 - l1)``.
    """
    rep = MonotoneReport()
    mult = {}

    def elem(k, l):
        if (k, l) not in mult:
            mult[(k, l)] = S.add(S.multiple(k, sp.x), S.multiple(l, sp.y))
        return mult[(k, l)]

    for _ in range(samples):
        k1, l1, k2, l2 = (rng.randint(0, kmax) for _ in range(4))
        rep.checked += 1
        if not S.leq(elem(k1, l1), elem(k2, l2)):
            continue
        rep.comparable += 1
        rep.buckets[_bucket(k1, l1, k2, l2)] += 1
        if not f0_eval(sp, k1, l1) <= f0_eval(sp, k2, l2):
            rep.violations.append((k1, l1, k2, l2))
    return rep


class F0Violation(CuLabError):
    def __init__(self, quadruple):
        super().__init__(f"f0 is not monotone at (k1, l1, k2, l2) = {quadruple}")
        self.quadruple = quadruple


__all__ = [
    "BetaResult", "beta_bounded", "beta_exact", "beta", "StatePair", "state_pair",
    "f0_eval", "f0_monotone_check", "MonotoneReport", "F0Violation",
]
