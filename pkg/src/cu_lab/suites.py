"""Seeded law suites for beta, shared by the tests and the scripts."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .comparison import beta_bounded, beta_exact
from .core import Element, Semigroup
from .errors import BetaUndefined
from .extrat import INF, ZERO, ExtRat

CONVERGENCE_KS = (8, 32, 128, 256)


def _beta(S: Semigroup, x: Element, y: Element) -> Optional[ExtRat]:
    try:
        return beta_exact(S, x, y)
    except BetaUndefined:
        return None


@dataclass
class ConvergenceRow:
    x: str
    y: str
    exact: ExtRat
    uppers: dict  # K -> upper bound or None

    @property
    def gap(self) -> Optional[Fraction]:
        u = self.uppers[max(self.uppers)]
        if u is None or u.is_inf or self.exact.is_inf:
            return None
        return u.fraction - self.exact.fraction

    @property
    def monotone(self) -> bool:
        vals = [self.uppers[K] for K in sorted(self.uppers)]
        return all(a is None or (b is not None and b <= a) for a, b in zip(vals, vals[1:]))


def convergence_pairs(S: Semigroup, n: int, rng: random.Random) -> list[tuple[Element, Element, ExtRat]]:
    """``n`` pairs with ``x`` in the ideal of ``y``; ``y`` is drawn near the top."""
    out, tries = [], 0
    while len(out) < n:
        tries += 1
        if tries > 100 * n:
            raise RuntimeError(f"{S.id}: could not draw {n} pairs with beta defined")
        x, y = S.sample(rng, "mixed"), S.sample(rng, "near_top")
        b = _beta(S, x, y)
        if b is not None:
            out.append((x, y, b))
    return out


def beta_convergence(S: Semigroup, n: int, rng: random.Random, Ks=CONVERGENCE_KS) -> list[ConvergenceRow]:
    rows = []
    for x, y, exact in convergence_pairs(S, n, rng):
        uppers = {K: beta_bounded(S, x, y, K).upper for K in Ks}
        rows.append(ConvergenceRow(S.format(x), S.format(y), exact, uppers))
    return rows


# ---- algebraic laws ---------------------------------------------------------------


@dataclass
class LawReport:
    checked: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, law: str, ok: bool, *witness) -> None:
        self.checked[law] += 1
        if not ok:
            self.violations.append((law, *witness))


def _inv(b: ExtRat) -> ExtRat:
    return INF if b.is_zero else ExtRat(1 / b.fraction)


def _harmonic(bs: list[ExtRat]) -> ExtRat:
    total = ZERO
    for b in bs:
        total = total + _inv(b)
    return ZERO if total.is_inf else ExtRat(1 / total.fraction)


def beta_law_suite(S: Semigroup, samples: int, rng: random.Random) -> LawReport:
    """Monotonicity, subadditivity, the harmonic and ``1/k`` bounds, and the zero tests."""
    rep = LawReport()
    f = S.format
    for _ in range(samples):
        x, x2, y, z = (S.sample(rng, p) for p in ("small", "mixed", "mixed", "near_top"))

        # monotone in the second argument
        lo, hi = (y, z) if S.leq(y, z) else (z, y) if S.leq(z, y) else (None, None)
        if lo is not None:
            a, b = _beta(S, x, lo), _beta(S, x, hi)
            if a is not None and b is not None:
                rep.record("antitone_in_y", b <= a, f(x), f(lo), f(hi))

        # monotone in the first argument
        s, t = (x, x2) if S.leq(x, x2) else (x2, x) if S.leq(x2, x) else (None, None)
        if s is not None:
            a, b = _beta(S, s, z), _beta(S, t, z)
            if a is not None and b is not None:
                rep.record("monotone_in_x", a <= b, f(s), f(t), f(z))

        # subadditive in the first argument
        parts = [x, x2, S.rapid_term(y, 1)]
        bs = [_beta(S, p, z) for p in parts]
        whole = _beta(S, S.sum(parts), z)
        if whole is not None and all(b is not None for b in bs):
            total = ZERO
            for b in bs:
                total = total + b
            rep.record("subadditive", whole <= total, *map(f, parts), f(z))

        # harmonic bound in the second argument
        ys = [y, z, S.rapid_term(z, 0)]
        bs = [_beta(S, x, v) for v in ys]
        whole = _beta(S, x, S.sum(ys))
        if whole is not None and all(b is not None for b in bs):
            rep.record("harmonic", whole <= _harmonic(bs), f(x), *map(f, ys))

        # 1/k bound from k relations x <_s y_j
        k = rng.randint(1, 4)
        ys = [S.sample(rng, "near_top") for _ in range(k)]
        if x != S.zero and all(S.s_below_exact(x, v) for v in ys):
            whole = _beta(S, x, S.sum(ys))
            rep.record("one_over_k", whole is not None and whole <= ExtRat(Fraction(1, k)),
                       f(x), *map(f, ys))

        # beta < 1 exactly when x <_s y
        b = _beta(S, x, z)
        if b is not None and x != S.zero:
            rep.record("bridge", (b < ExtRat(1)) == S.s_below_exact(x, z), f(x), f(z))

        # zero beta against properly infinite multiples, for mutually proportional pairs
        if x != S.zero and z != S.zero and _beta(S, z, x) is not None and b is not None:
            px, pz = S.pi_multiple_exact(x), S.pi_multiple_exact(z)
            same = (b.is_zero == (px is not None) == (pz is not None))
            rep.record("zero_iff_pi_multiple", same, f(x), f(z))
    return rep


__all__ = ["beta_convergence", "convergence_pairs", "ConvergenceRow", "CONVERGENCE_KS",
           "beta_law_suite", "LawReport"]
