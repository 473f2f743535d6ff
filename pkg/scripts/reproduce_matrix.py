"""Run the full verdict matrix and write it as JSON and Markdown.

    python3 scripts/reproduce_matrix.py --seed 42 --out-dir results
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from cu_lab.report import ReportConfig, run_report, to_json_text, to_markdown, validate_report


@dataclass(frozen=True)
class RunConfig:
    seeds: tuple = (42, 43)
    samples: int = 200
    out_dir: Path = Path("results")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, action="append", help="repeatable; default 42 and 43")
    ap.add_argument("--samples", type=int, default=RunConfig.samples)
    ap.add_argument("--out-dir", type=Path, default=RunConfig.out_dir)
    a = ap.parse_args(argv)
    cfg = RunConfig(tuple(a.seed) if a.seed else RunConfig.seeds, a.samples, a.out_dir)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    all_ok = True
    for seed in cfg.seeds:
        t0 = time.perf_counter()
        rep = run_report(ReportConfig(seed=seed, samples=cfg.samples))
        validate_report(rep)
        (cfg.out_dir / f"matrix_seed{seed}.json").write_text(to_json_text(rep))
        (cfg.out_dir / f"matrix_seed{seed}.md").write_text(to_markdown(rep))
        print(f"seed {seed}: {'ok' if rep['ok'] else 'MISMATCH'} "
              f"({len(rep['rows'])} cells, {time.perf_counter() - t0:.1f}s)")
        for key in rep["mismatches"]:
            print(f"  mismatch {key}")
        all_ok &= rep["ok"]
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
