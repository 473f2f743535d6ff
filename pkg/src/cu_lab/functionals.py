"""Registered functional families and the functional-side tests.

Each entry carries the zero functional, ``lambda_inf`` (``inf`` on every
nonzero element) and, where the carrier has a finite-valued coordinate, the
scaled value maps ``x -> c * coord(x)``.  Scales are probed on a fixed grid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .comparison import beta_exact
from .core import Element, Semigroup
from .errors import BetaUndefined, EntryMismatch
from .extrat import INF, ZERO, ExtRat

PROBE_GRID = (ZERO, ExtRat(Fraction(1, 4)), ExtRat(Fraction(1, 2)), ExtRat(1), ExtRat(2), INF)

# entry id -> name of the coordinate read by Scale
_COORDINATE = {"uhf": "value", "product_ray": "second", "alg_product": "second"}

# entries where the listed family is known to be all of F(S) by a short argument;
# the others are asserted in the manifest
COMPLETENESS = {
    "product_ray": "proved",
    "interval01": "argued: every nonzero element has a multiple equal to inf",
    "open12": "argued: every nonzero element has a multiple equal to inf",
    "seqcube": "argued: every nonzero element has a multiple equal to inf",
    "uhf": "asserted",
    "alg_product": "asserted",
}


@dataclass(frozen=True)
class FunctionalDesc:
    entry: str
    family: str  # "Zero", "LambdaInf" or "Scale"
    c: Optional[ExtRat] = None
    coordinate: Optional[str] = None

    def __str__(self) -> str:
        if self.family == "Scale":
            return f"Scale({self.c}, {self.coordinate})"
        return self.family


def coordinate_value(S: Semigroup, x: Element) -> ExtRat:
    a = S.unwrap(x)
    coord = _COORDINATE.get(S.id)
    if coord == "value":
        return a[1]
    if coord == "second":
        return a[1][1] if isinstance(a[1], tuple) else a[1]
    raise EntryMismatch(f"{S.id} has no scaled functionals")


def functionals(S: Semigroup) -> list[FunctionalDesc]:
    out = [FunctionalDesc(S.id, "Zero"), FunctionalDesc(S.id, "LambdaInf")]
    coord = _COORDINATE.get(S.id)
    if coord is not None:
        out += [FunctionalDesc(S.id, "Scale", c, coord) for c in PROBE_GRID]
    return out


def eval_functional(f: FunctionalDesc, S: Semigroup, x: Element) -> ExtRat:
    if f.entry != S.id or x.entry != S.id:
        raise EntryMismatch(f"functional of {f.entry} applied to an element of {x.entry}")
    if f.family == "Zero":
        return ZERO
    if x == S.zero:
        return ZERO
    if f.family == "LambdaInf":
        return INF
    v = coordinate_value(S, x)
    if v.is_zero:
        return ZERO
    return f.c * v if not f.c.is_inf else INF


def _nonzero(f: FunctionalDesc) -> bool:
    return f.family == "LambdaInf" or (f.family == "Scale" and not f.c.is_zero)


def all_functionals_infinite(S: Semigroup, y: Element) -> bool:
    """Every nonzero registered functional is ``inf`` at ``y``.

    Decided symbolically: ``Scale(c)`` is infinite at ``y`` iff ``c`` is or the
    coordinate is, so one finite positive scale settles the whole family.
    """
    if y == S.zero:
        return False
    if S.id not in _COORDINATE:
        return True
    return coordinate_value(S, y).is_inf


# ---- axiom suite -----------------------------------------------------------------


@dataclass
class AxiomReport:
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def axiom_suite(S: Semigroup, samples: int, rng: random.Random, n_probe: int = 32) -> AxiomReport:
    """Additivity, monotonicity, sup-preservation and faithfulness on samples."""
    rep = AxiomReport()
    fams = functionals(S)
    pool = S.landmarks() + [S.sample(rng, p) for p in ("small", "mixed", "near_top")
                            for _ in range(max(1, samples // 3))]
    pairs = [(rng.choice(pool), rng.choice(pool)) for _ in range(samples)]
    for f in fams:
        for x, y in pairs:
            rep.checked += 1
            fx, fy = eval_functional(f, S, x), eval_functional(f, S, y)
            if eval_functional(f, S, S.add(x, y)) != fx + fy:
                rep.violations.append(("additivity", str(f), S.format(x), S.format(y)))
            if S.leq(x, y) and not fx <= fy:
                rep.violations.append(("monotonicity", str(f), S.format(x), S.format(y)))
        for x in pool[:samples]:
            if not _sup_preserved(S, f, x, n_probe):
                rep.violations.append(("sup", str(f), S.format(x)))
            if S.is_simple and _nonzero(f) and x != S.zero and eval_functional(f, S, x).is_zero:
                rep.violations.append(("faithful", str(f), S.format(x)))
    return rep


def _sup_preserved(S: Semigroup, f: FunctionalDesc, x: Element, n_probe: int) -> bool:
    target = eval_functional(f, S, x)
    vals = [eval_functional(f, S, S.rapid_term(x, n)) for n in range(n_probe + 1)]
    if any(b < a for a, b in zip(vals, vals[1:])) or any(not v <= target for v in vals):
        return False
    last = vals[-1]
    if target.is_inf:
        # unbounded: the chain must at least grow linearly
        return last.is_inf or (not vals[0].is_zero and last >= vals[0] * (n_probe // 4))
    # the gap must shrink geometrically along the canonical chain
    gap = target.fraction - last.fraction
    return gap <= target.fraction / 2 ** (n_probe // 2)


# ---- beta and functionals ------------------------------------------------------


def beta_zero_witness(S: Semigroup, y: Element, extra: list[Element] = ()) -> Optional[Element]:
    """A nonzero ``x`` with ``beta(x, y) = 0`` among a fixed candidate list."""
    cands = [y, *extra, *S.landmarks()]
    cands += [S.rapid_term(c, n) for c in list(cands) for n in (0, 2)]
    for x in cands:
        if x == S.zero:
            continue
        try:
            if beta_exact(S, x, y).is_zero:
                return x
        except (BetaUndefined, NotImplementedError):
            continue
    return None


def beta_functional_agreement(S: Semigroup, y: Element) -> bool:
    """Some nonzero ``x`` has ``beta(x, y) = 0`` exactly when all functionals are infinite at ``y``."""
    return (beta_zero_witness(S, y) is not None) == all_functionals_infinite(S, y)


__all__ = [
    "FunctionalDesc", "functionals", "eval_functional", "all_functionals_infinite",
    "axiom_suite", "AxiomReport", "beta_zero_witness", "beta_functional_agreement",
    "coordinate_value", "PROBE_GRID", "COMPLETENESS",
]
