"""Refutation certificates and their independent verification.

A certificate names a catalog entry, the property it refutes and the concrete
elements (as grammar strings) that witness the failure.  :func:`verify`
re-checks every leg from the serialized data using only the order and
arithmetic primitives of the entry, so a certificate never has to be trusted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Callable, Optional

import jsonschema

from . import catalog
from . import series as ser
from .core import Element, Semigroup
from .errors import CapabilityError, CertificateError, CuLabError, UsageError

SCHEMA_ID = "cu-lab/certificate@1"

# which property each kind refutes (halving covers two)
KIND_PROPERTIES = {
    "OmegaRefutation": {"omega"},
    "CfpRefutation": {"cfp", "stcfp"},
    "BetaRefutation": {"beta"},
    "QQRefutation": {"qq"},
    "CancellationRefutation": {"cancellation"},
    "O5Refutation": {"o5"},
    "O6Refutation": {"o6"},
    "HalvingRefutation": {"weak_halving", "glimm_halving"},
    "FinitenessRefutation": {"stably_finite"},
    "PurityRefutation": {"purely_infinite"},
    "AlgebraicRefutation": {"algebraic"},
}


@dataclass(frozen=True)
class Certificate:
    entry: str
    property: str
    kind: str
    elements: dict = field(default_factory=dict)
    series: Optional[dict] = None
    params: dict = field(default_factory=dict)
    id: Optional[str] = None

    def to_json(self) -> dict:
        out = {"schema": SCHEMA_ID, "id": self.id, "entry": self.entry,
               "property": self.property, "kind": self.kind, "elements": dict(self.elements)}
        if self.series is not None:
            out["series"] = self.series
        if self.params:
            out["params"] = dict(self.params)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, obj: dict) -> "Certificate":
        try:
            jsonschema.validate(obj, _schema())
        except jsonschema.ValidationError as exc:
            raise CertificateError(f"certificate does not match {SCHEMA_ID}: {exc.message}") from exc
        if obj["property"] not in KIND_PROPERTIES[obj["kind"]]:
            raise CertificateError(f"a {obj['kind']} cannot refute {obj['property']}")
        return cls(entry=obj["entry"], property=obj["property"], kind=obj["kind"],
                   elements=dict(obj["elements"]), series=obj.get("series"),
                   params=dict(obj.get("params", {})), id=obj.get("id"))

    @classmethod
    def load(cls, path) -> "Certificate":
        text = Path(path).read_text(encoding="utf-8")
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CertificateError(f"{path}: not valid JSON: {exc}") from exc
        return cls.from_json(obj)


@lru_cache(maxsize=None)
def _schema() -> dict:
    text = resources.files("cu_lab").joinpath("data/schemas/certificate.schema.json").read_text()
    return json.loads(text)


def shipped_ids() -> list[str]:
    root = resources.files("cu_lab").joinpath("data/certificates")
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_shipped(cert_id: str) -> Certificate:
    root = resources.files("cu_lab").joinpath("data/certificates")
    res = root.joinpath(f"{cert_id}.json")
    if not res.is_file():
        raise UsageError(f"no shipped certificate named {cert_id!r}")
    return Certificate.from_json(json.loads(res.read_text(encoding="utf-8")))


# ---- verification ---------------------------------------------------------------


@dataclass(frozen=True)
class Leg:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class Transcript:
    certificate: Certificate
    legs: tuple

    @property
    def ok(self) -> bool:
        return all(leg.ok for leg in self.legs)

    @property
    def failed_leg(self) -> Optional[Leg]:
        return next((leg for leg in self.legs if not leg.ok), None)

    def lines(self) -> list[str]:
        c = self.certificate
        out = [f"certificate {c.id or '(anonymous)'}: {c.kind} for {c.property} on {c.entry}"]
        for leg in self.legs:
            mark = "ok  " if leg.ok else "FAIL"
            out.append(f"  [{mark}] {leg.name}" + (f": {leg.detail}" if leg.detail else ""))
        out.append("verified" if self.ok else f"rejected at leg: {self.failed_leg.name}")
        return out


class _Legs:
    """Collects legs and stops evaluating after the first failure."""

    def __init__(self):
        self.legs: list[Leg] = []

    @property
    def failed(self) -> bool:
        return any(not leg.ok for leg in self.legs)

    def check(self, name: str, test: Callable[[], bool], detail: str = "") -> bool:
        if self.failed:
            return False
        try:
            ok = bool(test())
        except (CuLabError, NotImplementedError, ValueError) as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        self.legs.append(Leg(name, ok, detail))
        return ok


def verify(cert: Certificate) -> Transcript:
    """Re-check every leg of ``cert``; never raises for a merely false claim."""
    S = catalog.get(cert.entry)
    try:
        els = {k: S.parse(v) for k, v in cert.elements.items()}
        spec = ser.from_json(S, cert.series) if cert.series is not None else None
    except UsageError as exc:
        raise CertificateError(f"certificate elements do not parse: {exc}") from exc
    legs = _Legs()
    try:
        _VERIFIERS[cert.kind](S, els, spec, cert.params, cert.property, legs)
    except KeyError as exc:
        raise CertificateError(f"{cert.kind} needs element or parameter {exc}") from exc
    return Transcript(cert, tuple(legs.legs))


def _fmt(S: Semigroup, x: Element) -> str:
    return S.format(x)


def _series_total(S, spec, L: _Legs) -> Optional[Element]:
    try:
        return ser.series_sum(S, spec)
    except (CuLabError, NotImplementedError) as exc:
        L.check("series sum is computable", lambda: False, str(exc))
        return None


def _need_spec(spec):
    if spec is None:
        raise CertificateError("this certificate kind needs a series")
    return spec


def _omega(S, e, spec, params, prop, L: _Legs):
    xp, x, spec = e["xp"], e["x"], _need_spec(spec)
    L.check("x' << x", lambda: S.way_below(xp, x))
    L.check("x <_s y_j for every j", lambda: ser.s_below_all_terms(S, x, spec) is True,
            "decided in closed form for the series kind")
    for j in range(1, 5):
        L.check(f"search finds (k+1)x <= k y_{j}",
                lambda j=j: S.s_below(x, ser.term(S, spec, j), 256) is not None)
    total = _series_total(S, spec, L)
    if total is None:
        return
    L.check("x' not <= sum y_j", lambda: not S.leq(xp, total),
            f"sum = {_fmt(S, total)}" if not S.leq(xp, total)
            else "x' <= sum y_j holds, not a refutation")


def _cfp(S, e, spec, params, prop, L: _Legs):
    spec, m = _need_spec(spec), params["m"]
    if prop == "stcfp" and not S.is_simple:
        L.check("entry is simple (CFP and StCFP agree)", lambda: False)
        return
    L.check("y_n << inf for every n", lambda: ser.terms_way_below_top(S, spec))
    L.check(f"{m} * sum_(n>=k) y_n = inf for every k", lambda: ser.tails_scaled_reach_top(S, spec, m))
    total = _series_total(S, spec, L)
    if total is None:
        return
    L.check("sum y_n != inf", lambda: total != S.top, f"sum = {_fmt(S, total)}")


def _beta(S, e, spec, params, prop, L: _Legs):
    x, y = e["x"], e["y"]
    m, n, j = params["m"], params["n"], params["j"]
    L.check("x != 0", lambda: x != S.zero)
    L.check(f"x <= {m} y", lambda: S.leq(x, S.multiple(m, y)))
    L.check(f"{n} y is properly infinite, so beta(jx, y) = 0",
            lambda: S.is_properly_infinite(S.multiple(n, y)))
    L.check("y != inf", lambda: y != S.top)
    jx = S.multiple(j, x)
    L.check(f"{j} x not <= y", lambda: not S.leq(jx, y), f"{j} x = {_fmt(S, jx)}")


def _qq(S, e, spec, params, prop, L: _Legs):
    x, n = e["x"], params["n"]
    L.check(f"{n} x is properly infinite", lambda: S.is_properly_infinite(S.multiple(n, x)))
    L.check("x is not properly infinite", lambda: not S.is_properly_infinite(x))


def _cancellation(S, e, spec, params, prop, L: _Legs):
    x, y = e["x"], e["y"]
    L.check("x << inf", lambda: S.way_below(x, S.top))
    L.check("y != 0", lambda: y != S.zero)
    L.check("x + y = inf", lambda: S.add(x, y) == S.top)
    L.check("y != inf", lambda: y != S.top)


def _o5(S, e, spec, params, prop, L: _Legs):
    xp, x, y = e["xp"], e["x"], e["y"]
    L.check("x' << x", lambda: S.way_below(xp, x))
    L.check("x <= y", lambda: S.leq(x, y))
    L.check("candidate list is exhaustive for this triple", lambda: S.o5_complete_for(xp, x, y))
    cands = S.o5_candidates(xp, x, y)
    good = [z for z in cands if S.leq(S.add(xp, z), y) and S.leq(y, S.add(x, z))]
    L.check("no z with x' + z <= y <= x + z", lambda: not good,
            "tried " + ", ".join(_fmt(S, z) for z in cands) if not good
            else f"z = {_fmt(S, good[0])} works")


def _o6(S, e, spec, params, prop, L: _Legs):
    xp, x, y1, y2 = e["xp"], e["x"], e["y1"], e["y2"]
    L.check("x' << x", lambda: S.way_below(xp, x))
    L.check("x <= y1 + y2", lambda: S.leq(x, S.add(y1, y2)))
    # the meets are the largest admissible x_1, x_2, so they decide existence
    best = S.add(S.meet(x, y1), S.meet(x, y2))
    L.check("x' not <= (x meet y1) + (x meet y2)", lambda: not S.leq(xp, best),
            f"(x meet y1) + (x meet y2) = {_fmt(S, best)}")


def _halving(S, e, spec, params, prop, L: _Legs):
    x = e["x"]
    L.check("x != 0", lambda: x != S.zero)
    L.check("candidate list is exhaustive for this entry", lambda: S.halving_complete)
    cands = [z for z in S.halving_candidates(x) if z != S.zero]
    if prop == "glimm_halving":
        good = [z for z in cands if S.leq(S.add(z, z), x)]
        L.check("no nonzero z with 2z <= x", lambda: not good,
                "tried " + ", ".join(_fmt(S, z) for z in cands))
    else:
        good = [(a, b) for a in cands for b in cands
                if S.leq(S.add(a, b), x) and _prop(S, x, a) and _prop(S, x, b)]
        L.check("no y1, y2 with y1 + y2 <= x and x in the ideal of each", lambda: not good,
                "tried pairs from " + ", ".join(_fmt(S, z) for z in cands))


def _prop(S, x, y) -> bool:
    try:
        return S.proportional_exact(x, y)
    except NotImplementedError:
        return S.proportional(x, y, 1024) is not None


def _finiteness(S, e, spec, params, prop, L: _Legs):
    x, b = e["x"], e["b"]
    L.check("x << inf", lambda: S.way_below(x, S.top))
    L.check("b != 0", lambda: b != S.zero)
    L.check("x + b <= x, so x is not finite", lambda: S.leq(S.add(x, b), x))


def _purity(S, e, spec, params, prop, L: _Legs):
    x = e["x"]
    L.check("x is neither 0 nor inf", lambda: x not in (S.zero, S.top))


def _algebraic(S, e, spec, params, prop, L: _Legs):
    x, bound = e["x"], e["bound"]
    comp = S.compact_elements()
    L.check("compact elements are finitely many and known", lambda: comp is not None)
    if comp is None:
        return
    L.check("every listed element is compact", lambda: all(S.is_compact(c) for c in comp),
            ", ".join(_fmt(S, c) for c in comp))
    below = [c for c in comp if S.leq(c, x)]
    L.check("every compact c <= x satisfies c <= bound",
            lambda: all(S.leq(c, bound) for c in below))
    L.check("x not <= bound, so x is no supremum of compacts", lambda: not S.leq(x, bound))


_VERIFIERS = {
    "OmegaRefutation": _omega,
    "CfpRefutation": _cfp,
    "BetaRefutation": _beta,
    "QQRefutation": _qq,
    "CancellationRefutation": _cancellation,
    "O5Refutation": _o5,
    "O6Refutation": _o6,
    "HalvingRefutation": _halving,
    "FinitenessRefutation": _finiteness,
    "PurityRefutation": _purity,
    "AlgebraicRefutation": _algebraic,
}


def make(S: Semigroup, prop: str, kind: str, elements: dict, series=None, params=None,
         cert_id: Optional[str] = None) -> Certificate:
    """Build a certificate from live elements (used by the searching checkers)."""
    try:
        sj = ser.to_json(S, series) if series is not None else None
    except CapabilityError as exc:  # pragma: no cover - specs come from the entry itself
        raise CertificateError(str(exc)) from exc
    return Certificate(entry=S.id, property=prop, kind=kind,
                       elements={k: S.format(v) for k, v in elements.items()},
                       series=sj, params=dict(params or {}), id=cert_id)


__all__ = [
    "Certificate", "Leg", "Transcript", "verify", "make", "load_shipped", "shipped_ids",
    "KIND_PROPERTIES", "SCHEMA_ID",
]
