"""The regression report: computed verdicts against the shipped expectations."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Optional

import jsonschema

from . import catalog
from . import certificates as certs
from .core import Semigroup
from .errors import UsageError
from .properties import (MIXED, PROPERTIES, PURELY_INFINITE, STABLY_FINITE, Bounds, CheckConfig,
                         Verdict, check, implication_audit)

REPORT_SCHEMA_ID = "cu-lab/report@1"
_SN = re.compile(r"s([1-9][0-9]{0,2})$")


@lru_cache(maxsize=None)
def manifest() -> dict:
    text = resources.files("cu_lab").joinpath("data/manifest.json").read_text(encoding="utf-8")
    return json.loads(text)


def _manifest_entry(entry_id: str) -> dict:
    for e in manifest()["entries"]:
        if e["id"] == entry_id:
            return e
    raise UsageError(f"no expectations recorded for {entry_id!r}")


def expected_verdicts(S: Semigroup) -> dict:
    """``{property: {"expected", "witness", "citation"}}`` for a catalog entry.

    Every ``S_n`` shares the ``S_1`` row; shipped witnesses belong to ``S_1`` only.
    """
    if _SN.match(S.id) and S.id != "s1":
        cells = _manifest_entry("s1")["expected"]
        return {p: dict(c, witness=None) for p, c in cells.items()}
    return {p: dict(c) for p, c in _manifest_entry(S.id)["expected"].items()}


def entry_flags(S: Semigroup) -> dict:
    return {"is_simple": S.is_simple, "is_algebraic": S.is_algebraic,
            "is_sn": bool(_SN.match(S.id)), "is_finite_carrier": S.is_finite_carrier}


@dataclass(frozen=True)
class ReportConfig:
    entries: tuple = catalog.ENTRY_IDS
    properties: tuple = PROPERTIES
    seed: int = 0
    samples: int = 200
    bounds: Bounds = field(default_factory=Bounds)

    def __post_init__(self):
        for p in self.properties:
            if p not in PROPERTIES:
                raise UsageError(f"unknown property {p!r}; known: {', '.join(PROPERTIES)}")
        for e in self.entries:
            catalog.get(e)  # raises UsageError for unknown ids
        if self.samples < 1:
            raise UsageError("samples must be positive")


def run_cell(S: Semigroup, prop: str, cfg: ReportConfig) -> tuple[Verdict, dict]:
    exp = expected_verdicts(S)[prop]
    cert = certs.load_shipped(exp["witness"]) if exp.get("witness") else None
    verdict = check(S, prop, cert, CheckConfig(cfg.samples, cfg.bounds), cfg.seed)
    return verdict, exp


def _classify(v: dict) -> Optional[str]:
    if "purely_infinite" not in v or "stably_finite" not in v:
        return None
    if v["purely_infinite"].status == "Holds":
        return PURELY_INFINITE
    if v["stably_finite"].status == "Holds":
        return STABLY_FINITE
    return MIXED


def run_report(cfg: ReportConfig) -> dict:
    rows, results, flags, classes = [], {}, {}, {}
    for eid in cfg.entries:
        S = catalog.get(eid)
        results[eid], flags[eid] = {}, entry_flags(S)
        for prop in cfg.properties:
            verdict, exp = run_cell(S, prop, cfg)
            results[eid][prop] = verdict
            cert = verdict.certificate
            rows.append({
                "entry": eid,
                "property": prop,
                "outcome": verdict.outcome,
                "status": verdict.status,
                "expected": exp["expected"],
                "match": verdict.status == exp["expected"],
                "witness": exp.get("witness"),
                "certificate": None if cert is None else cert.to_json(),
                "citation": exp["citation"],
                "detail": verdict.detail,
            })
        cls = _classify(results[eid])
        if cls is not None:
            classes[eid] = cls
    violations, warnings = implication_audit(results, flags, classes)
    mismatches = [f"{r['entry']}/{r['property']}" for r in rows if not r["match"]]
    return {
        "schema": REPORT_SCHEMA_ID,
        "config": {"entries": list(cfg.entries), "properties": list(cfg.properties), "seed": cfg.seed,
                   "samples": cfg.samples, "bounds": _bounds_json(cfg.bounds)},
        "rows": rows,
        "classification": classes,
        "audit": {"violations": [v.to_json() for v in violations],
                  "warnings": [w.to_json() for w in warnings]},
        "mismatches": mismatches,
        "ok": not mismatches and not violations,
    }


def _bounds_json(b: Bounds) -> dict:
    return {"K_beta": b.K_beta, "kmax_sbelow": b.kmax_sbelow, "nmax_multiple": b.nmax_multiple,
            "N_probe": b.N_probe}


@lru_cache(maxsize=None)
def _report_schema() -> dict:
    text = resources.files("cu_lab").joinpath("data/schemas/report.schema.json").read_text()
    return json.loads(text)


def validate_report(report: dict) -> None:
    jsonschema.validate(report, _report_schema())


def to_json_text(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


_SHORT = {"ProvedExhaustively": "proved", "RefutedByCertificate": "refuted",
          "ConsistentUpTo": "consistent", "CapabilityLimited": "limited"}


def to_markdown(report: dict) -> str:
    cfg = report["config"]
    props = cfg["properties"]
    lines = [f"# cu-lab report (seed {cfg['seed']}, {cfg['samples']} samples)", ""]
    lines.append("| entry | " + " | ".join(props) + " |")
    lines.append("|---" * (len(props) + 1) + "|")
    by = {(r["entry"], r["property"]): r for r in report["rows"]}
    for e in cfg["entries"]:
        cells = []
        for p in props:
            r = by[(e, p)]
            mark = "" if r["match"] else " **!**"
            cells.append(f"{_SHORT[r['outcome']]}{mark}")
        lines.append(f"| {e} | " + " | ".join(cells) + " |")
    lines += ["", "## Classification", ""]
    lines += [f"- {e}: {c}" for e, c in sorted(report["classification"].items())]
    lines += ["", "## Audit", ""]
    audit = report["audit"]
    if not audit["violations"] and not audit["warnings"]:
        lines.append("no violations")
    for kind in ("violations", "warnings"):
        for f in audit[kind]:
            lines.append(f"- {kind[:-1]}: {f['entry']}: {f['rule']} ({f['detail']})")
    if report["mismatches"]:
        lines += ["", "## Mismatches", ""]
        for key in report["mismatches"]:
            e, p = key.split("/")
            r = by[(e, p)]
            lines.append(f"- {key}: expected {r['expected']}, got {r['outcome']}. Rationale: {r['citation']}")
    lines += ["", "overall: " + ("ok" if report["ok"] else "FAILED"), ""]
    return "\n".join(lines)


__all__ = ["ReportConfig", "run_report", "expected_verdicts", "manifest", "to_json_text", "to_markdown",
           "validate_report", "entry_flags", "run_cell", "REPORT_SCHEMA_ID"]
