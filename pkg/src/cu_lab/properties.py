"""Property checkers, the finite/infinite classification and the implication audit.

Every checker returns a :class:`Verdict`.  On finite carriers the relevant
quantifiers are enumerated in full (``ProvedExhaustively``).  Elsewhere a
failure is only reported together with a certificate that has passed
:func:`cu_lab.certificates.verify`; absence of a failure on samples is
``ConsistentUpTo``.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import product as _cartesian
from typing import Iterator, Optional

from . import certificates as certs
from . import series as ser
from .comparison import beta_exact
from .core import PROFILES, Element, Semigroup, _dedupe
from .errors import BetaUndefined, CapabilityError, CuLabError, UsageError

PROPERTIES = (
    "o5", "o6", "cfp", "stcfp", "omega", "beta", "qq", "cancellation",
    "weak_halving", "glimm_halving", "stably_finite", "purely_infinite", "simple", "algebraic",
)

PROVED = "ProvedExhaustively"
REFUTED = "RefutedByCertificate"
CONSISTENT = "ConsistentUpTo"
LIMITED = "CapabilityLimited"

STABLY_FINITE = "StablyFinite"
PURELY_INFINITE = "PurelyInfinite"
MIXED = "Mixed"


@dataclass(frozen=True)
class Bounds:
    K_beta: int = 256
    kmax_sbelow: int = 64
    nmax_multiple: int = 64
    N_probe: int = 32


@dataclass(frozen=True)
class CheckConfig:
    samples: int = 200
    bounds: Bounds = field(default_factory=Bounds)


@dataclass(frozen=True)
class Verdict:
    outcome: str
    certificate: Optional[certs.Certificate] = None
    detail: str = ""
    samples: int = 0

    @property
    def status(self) -> str:
        """``Holds``, ``Fails`` or ``Unknown`` (what the expected table speaks)."""
        if self.outcome in (PROVED, CONSISTENT):
            return "Holds"
        if self.outcome == REFUTED:
            return "Fails"
        return "Unknown"

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "detail": self.detail,
            "samples": self.samples,
        }


def rng_for(seed: int, entry: str, prop: str) -> random.Random:
    # string seeds hash deterministically across runs and platforms
    return random.Random(f"{seed}:{entry}:{prop}")


# ---- shared plumbing -----------------------------------------------------------


def _pool(S: Semigroup, rng: random.Random, cfg: CheckConfig) -> list[Element]:
    if S.is_finite_carrier:
        return S.elements()
    base = S.landmarks()
    approx = [S.rapid_term(x, n) for x in base for n in (0, 1)]
    drawn = [S.sample(rng, p) for p in PROFILES for _ in range(max(1, cfg.samples // 10))]
    return _dedupe(base + approx + drawn)


def _stable_multiple(S: Semigroup, y: Element) -> Element:
    """``sup_n n*y`` on a finite carrier, where the multiples stop growing."""
    return S.multiple(len(S.elements()) + 1, y)


def _first_verified(cands: Iterator[certs.Certificate]) -> Optional[certs.Certificate]:
    for c in cands:
        if certs.verify(c).ok:
            return c
    return None


def _refuted(cert: certs.Certificate, note: str = "") -> Verdict:
    return Verdict(REFUTED, cert, note)


def _clean(S: Semigroup, outcome_note: str, n: int) -> Verdict:
    if S.is_finite_carrier:
        return Verdict(PROVED, None, "full enumeration of the carrier", n)
    return Verdict(CONSISTENT, None, outcome_note, n)


def _from_certificate(cert: certs.Certificate, prop: str, S: Semigroup) -> Verdict:
    if cert.entry != S.id:
        raise UsageError(f"certificate is for {cert.entry}, not {S.id}")
    if prop not in certs.KIND_PROPERTIES[cert.kind]:
        raise UsageError(f"a {cert.kind} does not bear on {prop}")
    t = certs.verify(cert)
    if t.ok:
        note = "shipped certificate verified"
        if cert.kind == "OmegaRefutation":
            chain = omega_chain_form(S, cert)
            if chain is not None:
                note += f"; chain form y_n <_s y_(n+1) {'holds' if chain else 'fails'} for n <= 8"
        return _refuted(cert, note)
    return Verdict(LIMITED, None, f"certificate rejected at leg: {t.failed_leg.name}")


def _proportional(S: Semigroup, x: Element, y: Element, nmax: int) -> Optional[int]:
    return S.proportional(x, y, nmax)


def _way_below_pairs(S, pool, rng, limit) -> list[tuple[Element, Element]]:
    """``(x', x)`` with ``x' << x``: canonical approximants first, then pool pairs."""
    pairs = []
    for x in pool:
        for n in (0, 2):
            pairs.append((S.rapid_term(x, n), x))
    pairs += [(a, b) for a in pool for b in pool if S.way_below(a, b)]
    pairs = _dedupe(pairs)
    if S.is_finite_carrier or len(pairs) <= limit:
        return pairs
    head = pairs[: limit // 2]
    return head + rng.sample(pairs[limit // 2:], limit - len(head))


# ---- omega-comparison -----------------------------------------------------------


def _series_pool(S: Semigroup, elems: list[Element]) -> list:
    out = [ser.Constant(y) for y in elems]
    if "geometric" in S.series_kinds:
        out += [ser.Geometric(y, Fraction(1, 2)) for y in elems if y != S.zero]
    if "indicator" in S.series_kinds:
        out += [ser.IndicatorStream(1), ser.IndicatorStream(3)]
    return out


def omega_chain_form(S: Semigroup, cert: certs.Certificate, terms: int = 8, kmax: int = 8192) -> Optional[bool]:
    """Whether the refuting sequence also satisfies ``y_n <_s y_(n+1)`` on its first terms.

    ``None`` when the terms cannot be produced for this series kind.
    """
    try:
        spec = ser.from_json(S, cert.series)
        ys = [ser.term(S, spec, j) for j in range(1, terms + 2)]
    except (CuLabError, NotImplementedError):
        return None
    return all(S.s_below(a, b, kmax) is not None for a, b in zip(ys, ys[1:]))


def check_omega(S: Semigroup, cert=None, cfg: CheckConfig = CheckConfig(), rng=None) -> Verdict:
    if cert is not None:
        return _from_certificate(cert, "omega", S)
    rng = rng or random.Random(0)
    pool = _pool(S, rng, cfg)
    b = cfg.bounds
    if S.is_finite_carrier:
        k = len(pool) + 1
        checked = 0
        for xp, x in _way_below_pairs(S, pool, rng, 10 ** 9):
            for y in pool:
                if S.s_below(x, y, k) is None:
                    continue
                checked += 1
                # some term recurs forever, so the partial sums reach its stable multiple
                if not S.leq(xp, _stable_multiple(S, y)):
                    c = certs.make(S, "omega", "OmegaRefutation", {"xp": xp, "x": x},
                                   series=ser.Constant(y))
                    if certs.verify(c).ok:
                        return _refuted(c, "found by enumeration")
        return _clean(S, "", checked)
    specs = _series_pool(S, (S.landmarks() + pool[-8:]))
    checked = unresolved = 0
    for xp, x in _way_below_pairs(S, pool, rng, cfg.samples):
        for spec in specs:
            if ser.s_below_all_terms(S, x, spec) is not True:
                continue
            checked += 1
            total = ser.series_sum(S, spec)
            if not S.leq(xp, total):
                c = certs.make(S, "omega", "OmegaRefutation", {"xp": xp, "x": x}, series=spec)
                if certs.verify(c).ok:
                    return _refuted(c, "found by sampling")
                continue
            if not any(S.leq(xp, S.partial_sum(spec, n)) for n in (1, 2, 4, 8, b.N_probe)):
                unresolved += 1
    note = f"{checked} instances; {unresolved} needed more than {b.N_probe} terms"
    return Verdict(CONSISTENT, None, note, checked)


# ---- CFP / StCFP ------------------------------------------------------------------


def _cfp_specs(S: Semigroup, pool: list[Element]) -> list:
    small = [c for c in pool if S.way_below(c, S.top)]
    out = [ser.Constant(c) for c in small]
    if "geometric" in S.series_kinds:
        out += [ser.Geometric(c, r) for c in small if c != S.zero for r in (Fraction(1, 2), Fraction(1, 3))]
    if "indicator" in S.series_kinds:
        out += [ser.IndicatorStream(1), ser.Scaled(2, ser.IndicatorStream(2))]
    out += [ser.FiniteThenZero(tuple(small[i:i + 3])) for i in range(0, min(len(small), 12), 3)]
    return out


def check_cfp(S: Semigroup, cert=None, cfg: CheckConfig = CheckConfig(), rng=None,
              prop: str = "cfp") -> Verdict:
    """The tail form: terms ``<< inf`` whose scaled tails all reach ``inf`` must sum to ``inf``."""
    if cert is not None:
        return _from_certificate(cert, prop, S)
    rng = rng or random.Random(0)
    pool = _pool(S, rng, cfg)
    mmax = len(pool) + 1 if S.is_finite_carrier else 4
    checked = 0
    for spec in _cfp_specs(S, pool):
        for m in range(1, mmax + 1):
            checked += 1
            if not ser.tails_scaled_reach_top(S, spec, m):
                continue
            if ser.series_sum(S, spec) != S.top:
                c = certs.make(S, prop, "CfpRefutation", {}, series=spec, params={"m": m})
                if certs.verify(c).ok:
                    return _refuted(c, "found by search")
            break
    # on a finite carrier only the recurring values of a sequence matter, and the
    # constant sequences above cover each of them
    return _clean(S, f"{checked} (series, m) instances", checked)


def check_stcfp(S: Semigroup, cert=None, cfg: CheckConfig = CheckConfig(), rng=None) -> Verdict:
    """Fixed-``x`` variant; decided directly on finite carriers, jointly with CFP otherwise."""
    if cert is not None:
        return _from_certificate(cert, "stcfp", S)
    rng = rng or random.Random(0)
    if S.is_finite_carrier:
        pool = S.elements()
        n = len(pool) + 1
        bad = None
        for xp, x in _way_below_pairs(S, pool, rng, 10 ** 9):
            for y in pool:
                if _proportional(S, x, y, n) and not S.leq(xp, _stable_multiple(S, y)):
                    bad = (xp, x, y)
        if bad is None:
            return Verdict(PROVED, None, "full enumeration of the carrier", len(pool))
        v = check_cfp(S, None, cfg, rng, prop="stcfp")
        if v.outcome == REFUTED:
            return v
        xp, x, y = (S.format(e) for e in bad)
        return Verdict(LIMITED, None, f"fails at x'={xp}, x={x}, y={y} but no certificate kind fits")
    if not S.is_simple:
        return Verdict(LIMITED, None, "StCFP is only checked on simple entries")
    v = check_cfp(S, None, cfg, rng, prop="stcfp")
    return Verdict(v.outcome, v.certificate, "reported jointly with CFP (simple entry); " + v.detail,
                   v.samples)


# ---- beta-comparison, QQ, cancellation ----------------------------------------------


def _beta_zero(S: Semigroup, x: Element, y: Element) -> bool:
    try:
        return beta_exact(S, x, y).is_zero
    except (BetaUndefined, NotImplementedError):
        return False


def check_beta_comparison(S: Semigroup, cert=None, cfg: CheckConfig = CheckConfig(), rng=None) -> Verdict:
    if cert is not None:
        return _from_certificate(cert, "beta", S)
    rng = rng or random.Random(0)
    pool = _pool(S, rng, cfg)
    nmax = cfg.bounds.nmax_multiple
    checked = 0
    for x in pool:
        for y in pool:
            if x == S.zero or y == S.top:
                continue
            checked += 1
            if not _beta_zero(S, x, y):
                continue
            m = _proportional(S, x, y, nmax)
            n = S.has_properly_infinite_multiple(y, nmax)
            j = next((j for j in range(1, 9) if not S.leq(S.multiple(j, x), y)), None)
            if m is None or n is None or j is None:
                continue
            c = certs.make(S, "beta", "BetaRefutation", {"x": x, "y": y}, params={"m": m, "n": n, "j": j})
            if certs.verify(c).ok:
                return _refuted(c, "found by search")
    return _clean(S, f"{checked} pairs", checked)


def check_qq(S: Semigroup, cert=None, cfg: CheckConfig = CheckConfig(), rng=None) -> Verdict:
    if cert is not None:
        return _from_certificate(cert, "qq", S)
    rng = rng or random.Random(0)
    pool = _pool(S, rng, cfg)
    nmax = len(pool) + 1 if S.is_finite_carrier else cfg.bounds.nmax_multiple
    for x in pool:
        n = S.has_properly_infinite_multiple(x, nmax)
        if n is not None and not S.is_properly_infinite(x):
            c = certs.make(S, "qq", "QQRefutation", {"x": x}, params={"n": n})
            if certs.verify(c).ok:
                return _refuted(c, "found by search")
    return _clean(S, f"{len(pool)} elements, multiples up to {nmax}", len(pool))


def check_cancellation(S: Semigroup, cert=None, cfg: CheckConfig = CheckConfig(), rng=None) -> Verdict:
    if cert is not None:
        return _from_certificate(cert, "cancellation", S)
    rng = rng or random.Random(0)
    pool = _pool(S, rng, cfg)
    small = [x for x in pool if S.way_below(x, S.top)]
    for x in small:
        for y in pool:
            if y in (S.zero, S.top) or S.add(x, y) != S.top:
                continue
            c = certs.make(S, "cancellation", "CancellationRefutation", {"x": x, "y": y})
            if certs.verify(c).ok:
                return _refuted(c, "found by search")
    return _clean(S, f"{len(small) * len(pool)} pairs", len(small) * len(pool))


# ---- axioms O5 and O6 ----------------------------------------------------------------


def _o5_triples(S, pool, rng, cfg):
    for xp, x in _way_below_pairs(S, pool, rng, 10 ** 9 if S.is_finite_carrier else cfg.samples):
        ys = pool if S.is_finite_carrier else _dedupe([x, S.top, *(S.add(x, rng.choice(pool)) for _ in range(3)),
                                                        *rng.sample(pool, min(4, len(pool)))])
        for y in ys:
            if S.leq(x, y):
                yield xp, x, y


def check_o5(S: Semigroup, cert=None, cfg: CheckConfig = CheckConfig(), rng=None) -> Verdict:
    if cert is not None:
        return _from_certificate(cert, "o5", S)
    rng = rng or random.Random(0)
    pool = _pool(S, rng, cfg)
    checked = unresolved = 0
    for xp, x, y in _o5_triples(S, pool, rng, cfg):
        checked += 1
        if any(S.leq(S.add(xp, z), y) and S.leq(y, S.add(x, z)) for z in S.o5_candidates(xp, x, y)):
            continue
        if S.o5_complete_for(xp, x, y):
            c = certs.make(S, "o5", "O5Refutation", {"xp": xp, "x": x, "y": y})
            if certs.verify(c).ok:
                return _refuted(c, "candidate list is exhaustive")
        unresolved += 1
    if unresolved:
        return Verdict(LIMITED, None, f"{unresolved} of {checked} triples had no witness among candidates",
                       checked)
    return _clean(S, f"{checked} triples", checked)


def _o6_quads(S, pool, rng, cfg):
    pairs = _way_below_pairs(S, pool, rng, 10 ** 9 if S.is_finite_carrier else cfg.samples)
    for xp, x in pairs:
        if S.is_finite_carrier:
            ys = list(_cartesian(pool, pool))
        else:
            ys = [(rng.choice(pool), rng.choice(pool)) for _ in range(6)]
            ys += [(x, S.zero), (S.scale(x, Fraction(1, 2)), S.scale(x, Fraction(1, 2)))
                   if _can_scale(S) else (x, x)]
        for y1, y2 in ys:
            if S.leq(x, S.add(y1, y2)):
                yield xp, x, y1, y2


def _can_scale(S: Semigroup) -> bool:
    try:
        S.scale(S.top, Fraction(1, 2))
        return True
    except CapabilityError:
        return False


def check_o6(S: Semigroup, cert=None, cfg: CheckConfig = CheckConfig(), rng=None) -> Verdict:
    if cert is not None:
        return _from_certificate(cert, "o6", S)
    rng = rng or random.Random(0)
    pool = _pool(S, rng, cfg)
    checked = 0
    for xp, x, y1, y2 in _o6_quads(S, pool, rng, cfg):
        checked += 1
        # meets are the largest admissible choices, so testing them decides existence
        if S.leq(xp, S.add(S.meet(x, y1), S.meet(x, y2))):
            continue
        c = certs.make(S, "o6", "O6Refutation", {"xp": xp, "x": x, "y1": y1, "y2": y2})
        if certs.verify(c).ok:
            return _refuted(c, "decided through meets")
    return _clean(S, f"{checked} quadruples", checked)


# ---- halving ---------------------------------------------------------------------------


def check_halving(S: Semigroup, kind: str, cert=None, cfg: CheckConfig = CheckConfig(), rng=None) -> Verdict:
    if kind not in ("weak", "glimm"):
        raise UsageError(f"halving kind must be weak or glimm, got {kind!r}")
    prop = f"{kind}_halving"
    if cert is not None:
        return _from_certificate(cert, prop, S)
    rng = rng or random.Random(0)
    pool = _pool(S, rng, cfg)
    nmax = cfg.bounds.nmax_multiple * 16
    checked = unresolved = 0
    for x in pool:
        if x == S.zero:
            continue  # 0 = 0 + 0 halves itself
        checked += 1
        cands = [z for z in S.halving_candidates(x) if z != S.zero]
        if kind == "glimm":
            ok = any(S.leq(S.add(z, z), x) for z in cands)
        else:
            ok = any(S.leq(S.add(a, b), x) and _proportional(S, x, a, nmax) and _proportional(S, x, b, nmax)
                     for a in cands for b in cands)
        if ok:
            continue
        if S.halving_complete:
            c = certs.make(S, prop, "HalvingRefutation", {"x": x})
            if certs.verify(c).ok:
                return _refuted(c, "candidate list is exhaustive")
        unresolved += 1
    if unresolved:
        return Verdict(LIMITED, None, f"{unresolved} elements had no halving among candidates", checked)
    return _clean(S, f"{checked} nonzero elements", checked)


# ---- finiteness, purity, simplicity, algebraicity -------------------------------------------


def check_stably_finite(S: Semigroup, cert=None, cfg: CheckConfig = CheckConfig(), rng=None) -> Verdict:
    if cert is not None:
        return _from_certificate(cert, "stably_finite", S)
    rng = rng or random.Random(0)
    pool = _pool(S, rng, cfg)
    small = [x for x in pool if S.way_below(x, S.top)]
    for x in small:
        for b in pool:
            if b != S.zero and S.leq(S.add(x, b), x):
                c = certs.make(S, "stably_finite", "FinitenessRefutation", {"x": x, "b": b})
                if certs.verify(c).ok:
                    return _refuted(c, "found by search")
    return _clean(S, f"{len(small)} elements way below inf", len(small))


def check_purely_infinite(S: Semigroup, cert=None, cfg: CheckConfig = CheckConfig(), rng=None) -> Verdict:
    if cert is not None:
        return _from_certificate(cert, "purely_infinite", S)
    rng = rng or random.Random(0)
    for x in _pool(S, rng, cfg):
        if x not in (S.zero, S.top):
            return _refuted(certs.make(S, "purely_infinite", "PurityRefutation", {"x": x}), "element found")
    return _clean(S, "no element besides 0 and inf seen", 0)


def check_simple(S: Semigroup, cert=None, cfg: CheckConfig = CheckConfig(), rng=None) -> Verdict:
    """Fullness probe: every nonzero ``x`` has a multiple above each ``y' << inf``."""
    if cert is not None:
        raise UsageError("there is no certificate kind for simplicity")
    rng = rng or random.Random(0)
    pool = _pool(S, rng, cfg)
    small = [y for y in pool if S.way_below(y, S.top)]
    nmax = cfg.bounds.nmax_multiple * 64
    checked = 0
    for x in pool:
        if x == S.zero:
            continue
        for yp in small:
            checked += 1
            if _proportional(S, yp, x, nmax) is None:
                return Verdict(LIMITED, None,
                               f"{S.format(yp)} is not below {nmax} * {S.format(x)}", checked)
    return _clean(S, f"{checked} pairs", checked)


def check_algebraic(S: Semigroup, cert=None, cfg: CheckConfig = CheckConfig(), rng=None) -> Verdict:
    if cert is not None:
        return _from_certificate(cert, "algebraic", S)
    rng = rng or random.Random(0)
    pool = _pool(S, rng, cfg)
    comp = S.compact_elements()
    if comp is not None and not S.is_finite_carrier:
        for x in pool:
            below = [c for c in comp if S.leq(c, x)]
            tops = [c for c in below if all(S.leq(d, c) for d in below)]
            if tops and not S.leq(x, tops[0]):
                c = certs.make(S, "algebraic", "AlgebraicRefutation", {"x": x, "bound": tops[0]})
                if certs.verify(c).ok:
                    return _refuted(c, "compact elements are finitely many")
    bad = []
    for x in pool:
        chain = [S.rapid_term(x, n) for n in range(cfg.bounds.N_probe // 4)]
        if not all(S.is_compact(t) and S.leq(t, x) for t in chain):
            bad.append(x)
        elif not all(S.leq(a, b) for a, b in zip(chain, chain[1:])):
            bad.append(x)
    if bad:
        return Verdict(LIMITED, None, f"canonical chain of {S.format(bad[0])} is not made of compacts",
                       len(pool))
    return _clean(S, f"canonical chains of {len(pool)} elements are compact", len(pool))


# ---- dispatch, classification, audit ----------------------------------------------------------


def check(S: Semigroup, prop: str, cert: Optional[certs.Certificate] = None,
          cfg: CheckConfig = CheckConfig(), seed: int = 0) -> Verdict:
    rng = rng_for(seed, S.id, prop)
    if prop == "weak_halving":
        return check_halving(S, "weak", cert, cfg, rng)
    if prop == "glimm_halving":
        return check_halving(S, "glimm", cert, cfg, rng)
    try:
        fn = _CHECKS[prop]
    except KeyError:
        raise UsageError(f"unknown property {prop!r}; known: {', '.join(PROPERTIES)}") from None
    return fn(S, cert, cfg, rng)


_CHECKS = {
    "o5": check_o5,
    "o6": check_o6,
    "cfp": check_cfp,
    "stcfp": check_stcfp,
    "omega": check_omega,
    "beta": check_beta_comparison,
    "qq": check_qq,
    "cancellation": check_cancellation,
    "stably_finite": check_stably_finite,
    "purely_infinite": check_purely_infinite,
    "simple": check_simple,
    "algebraic": check_algebraic,
}


def classify(S: Semigroup, cfg: CheckConfig = CheckConfig(), seed: int = 0) -> str:
    if check(S, "purely_infinite", cfg=cfg, seed=seed).status == "Holds":
        return PURELY_INFINITE
    if check(S, "stably_finite", cfg=cfg, seed=seed).status == "Holds":
        return STABLY_FINITE
    return MIXED


@dataclass(frozen=True)
class AuditFinding:
    entry: str
    rule: str
    detail: str

    def to_json(self) -> dict:
        return asdict(self)


# (premise, conclusion, rule name); premises only need to hold on simple entries
_IMPLICATIONS = (
    ("beta", "omega", "beta-comparison implies omega-comparison"),
    ("beta", "qq", "beta-comparison implies (QQ)"),
    ("qq", "cfp", "(QQ) implies the CFP"),
    ("qq", "cancellation", "(QQ) implies cancellation at infinity"),
    ("beta", "cancellation", "beta-comparison implies cancellation at infinity"),
    ("omega", "cfp", "omega-comparison implies the CFP"),
)


def implication_audit(results: dict, flags: dict, classes: Optional[dict] = None):
    """Return ``(violations, warnings)`` for computed verdicts.

    ``results`` maps entry id to ``{property: Verdict}``; ``flags`` maps entry id
    to a dict with ``is_simple``, ``is_algebraic`` and ``is_sn``.  Refutations
    count as failures and ``ConsistentUpTo`` as holding, so only a holding
    premise next to a refuted conclusion is a violation.
    """
    violations, warnings = [], []
    classes = classes or {}
    for entry in sorted(results):
        v = results[entry]
        f = flags[entry]

        def st(p):
            return v[p].status if p in v else "Unknown"

        if not f.get("is_simple", False):
            continue
        for a, b, rule in _IMPLICATIONS:
            if st(a) == "Holds" and st(b) == "Fails":
                violations.append(AuditFinding(entry, rule, f"{a} holds but {b} is refuted"))
        if "cfp" in v and "stcfp" in v and {st("cfp"), st("stcfp")} == {"Holds", "Fails"}:
            violations.append(AuditFinding(entry, "CFP and StCFP agree on simple entries",
                                           f"cfp {st('cfp')}, stcfp {st('stcfp')}"))
        if f.get("is_algebraic") and st("o5") == "Holds" and "Unknown" not in (st("qq"), st("cfp"), st("cancellation")):
            lhs = st("qq") == "Holds"
            rhs = st("cfp") == "Holds" and st("cancellation") == "Holds"
            if lhs != rhs:
                violations.append(AuditFinding(entry, "(QQ) iff CFP and cancellation (algebraic, O5)",
                                               f"qq {st('qq')}, cfp {st('cfp')}, cancellation {st('cancellation')}"))
        cls = classes.get(entry)
        if cls == MIXED and "beta" in v:
            if v["beta"].outcome == PROVED:
                violations.append(AuditFinding(entry, "beta-comparison forces the finite/infinite dichotomy",
                                               "beta proved but the entry is mixed"))
            elif v["beta"].outcome == CONSISTENT:
                warnings.append(AuditFinding(entry, "beta-comparison forces the finite/infinite dichotomy",
                                             "beta only sampled and the entry is mixed"))
        axioms_ok = st("o5") == "Holds" and st("o6") == "Holds"
        if axioms_ok and not f.get("is_sn", False):
            if st("omega") == "Holds" and st("beta") == "Fails":
                violations.append(AuditFinding(entry, "omega iff beta away from S_n (O5, O6)",
                                               "omega holds but beta is refuted"))
            if st("glimm_halving") == "Fails":
                violations.append(AuditFinding(entry, "Glimm halving away from S_n (O5, O6)",
                                               "Glimm halving is refuted"))
    return violations, warnings


__all__ = [
    "PROPERTIES", "PROVED", "REFUTED", "CONSISTENT", "LIMITED", "Bounds", "CheckConfig", "Verdict",
    "check", "check_omega", "check_cfp", "check_stcfp", "check_beta_comparison", "check_qq",
    "check_cancellation", "check_o5", "check_o6", "check_halving", "check_stably_finite",
    "check_purely_infinite", "check_simple", "check_algebraic", "classify", "implication_audit",
    "AuditFinding", "STABLY_FINITE", "PURELY_INFINITE", "MIXED", "rng_for",
]
