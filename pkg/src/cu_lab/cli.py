"""``cu-lab`` command line.

Exit codes: 0 success, 1 semantic failure (rejected certificate, verdict
mismatch, audit violation), 2 usage, parse, certificate or I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import catalog
from . import certificates as certs
from .comparison import beta
from .errors import CertificateError, CuLabError, UsageError
from .properties import PROPERTIES, Bounds, CheckConfig, check
from .report import ReportConfig, expected_verdicts, run_report, to_json_text, to_markdown

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 already; keep the message on stderr
        self.print_usage(sys.stderr)
        raise _Usage(message)


class _Usage(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get("CU_LAB_SEED")
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise _Usage(f"CU_LAB_SEED must be an integer, got {raw!r}") from None


def _csv(text: str) -> tuple:
    return tuple(t.strip() for t in text.split(",") if t.strip())


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cu-lab", description="Exact computations in concrete Cu-semigroups.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    cat = sub.add_parser("catalog", help="list the catalog entries")
    cat.add_argument("action", choices=["list"])

    b = sub.add_parser("beta", help="compute beta(x, y)")
    b.add_argument("entry")
    b.add_argument("x")
    b.add_argument("y")
    b.add_argument("--bound", type=int, default=256, metavar="K")

    c = sub.add_parser("check", help="decide one property on one entry")
    c.add_argument("entry")
    c.add_argument("property", choices=PROPERTIES)
    c.add_argument("--samples", type=int, default=200)
    c.add_argument("--seed", type=int, default=None)
    c.add_argument("--cert", default=None, help="certificate file or shipped id to try first")

    v = sub.add_parser("verify", help="verify a certificate file or shipped id")
    v.add_argument("certificate")

    r = sub.add_parser("report", help="run the verdict matrix and the implication audit")
    g = r.add_mutually_exclusive_group()
    g.add_argument("--entries", type=_csv, default=None)
    g.add_argument("--all", action="store_true")
    r.add_argument("--properties", type=_csv, default=None)
    r.add_argument("--seed", type=int, default=None)
    r.add_argument("--samples", type=int, default=200)
    r.add_argument("--K-beta", type=int, default=Bounds.K_beta, dest="K_beta")
    r.add_argument("--format", choices=["json", "md", "markdown"], default="json")
    r.add_argument("--out", default=None)
    return p


def _load_cert(ref: str) -> certs.Certificate:
    path = Path(ref)
    if path.exists():
        try:
            return certs.Certificate.load(path)
        except OSError as exc:
            raise CertificateError(f"cannot read {ref}: {exc}") from exc
    if ref in certs.shipped_ids():
        return certs.load_shipped(ref)
    raise CertificateError(f"{ref}: no such file or shipped certificate")


def cmd_catalog(args, out) -> int:
    for eid in catalog.ENTRY_IDS:
        S = catalog.get(eid)
        tags = [t for t, on in (("simple", S.is_simple), ("algebraic", S.is_algebraic),
                                ("finite", S.is_finite_carrier)) if on]
        print(f"{eid:<12} {S.name}" + (f"  [{', '.join(tags)}]" if tags else ""), file=out)
    print("s<n>         S_n = {0, 1, ..., n, inf} for 1 <= n <= 999", file=out)
    return EXIT_OK


def cmd_beta(args, out) -> int:
    if args.bound < 1:
        raise UsageError("--bound must be positive")
    S = catalog.get(args.entry)
    x, y = S.parse(args.x), S.parse(args.y)
    res = beta(S, x, y, args.bound)
    print(f"upper   {'-' if res.upper is None else res.upper}", file=out)
    print(f"witness {'-' if res.witness is None else f'k={res.witness[0]} l={res.witness[1]}'}", file=out)
    print(f"exact   {'-' if res.exact is None else res.exact}", file=out)
    print(f"status  {res.status}", file=out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    S = catalog.get(args.entry)
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    seed = _default_seed() if args.seed is None else args.seed
    cert = _load_cert(args.cert) if args.cert else None
    v = check(S, args.property, cert, CheckConfig(samples=args.samples), seed)
    exp = expected_verdicts(S).get(args.property)
    print(f"{S.id} {args.property}: {v.outcome} ({v.status})", file=out)
    if v.detail:
        print(f"  {v.detail}", file=out)
    if v.certificate is not None:
        print(v.certificate.dumps().rstrip(), file=out)
    if exp is None:
        return EXIT_OK
    print(f"expected {exp['expected']}: {exp['citation']}", file=out)
    return EXIT_OK if exp["expected"] == v.status else EXIT_FAIL


def cmd_verify(args, out) -> int:
    cert = _load_cert(args.certificate)
    t = certs.verify(cert)
    for line in t.lines():
        print(line, file=out)
    return EXIT_OK if t.ok else EXIT_FAIL


def cmd_report(args, out) -> int:
    entries = catalog.ENTRY_IDS if args.all or not args.entries else args.entries
    props = args.properties or PROPERTIES
    seed = _default_seed() if args.seed is None else args.seed
    bounds = Bounds(K_beta=args.K_beta)
    rep = run_report(ReportConfig(tuple(entries), tuple(props), seed, args.samples, bounds))
    text = to_markdown(rep) if args.format in ("md", "markdown") else to_json_text(rep)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from exc
    else:
        out.write(text)
    if not rep["ok"]:
        for key in rep["mismatches"]:
            print(f"mismatch: {key}", file=sys.stderr)
        for f in rep["audit"]["violations"]:
            print(f"audit violation: {f['entry']}: {f['rule']}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


_COMMANDS = {"catalog": cmd_catalog, "beta": cmd_beta, "check": cmd_check,
             "verify": cmd_verify, "report": cmd_report}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.cmd](args, out)
    except _Usage as exc:
        print(f"cu-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, CertificateError, OSError, json.JSONDecodeError) as exc:
        print(f"cu-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CuLabError as exc:
        print(f"cu-lab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
