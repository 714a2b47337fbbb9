#!/usr/bin/env python3
"""Full reproduction run: every verification suite plus the figure data.

Writes into --outdir (default ./out):
    verify_all.json   complete verification report (all suites, full grids)
    fig1.csv fig2.csv fig3.csv   quantity-vs-bounds figure data
    catalog.json      the bounds catalog as machine-readable metadata

Exit code 0 iff every non-informational check passes.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from besselbounds.catalog import catalog_rows
from besselbounds.cli import FIGURES, CliConfig, cmd_figure
from besselbounds.harness import VerifyConfig, run_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="out")
    ap.add_argument("--seed", type=int, default=VerifyConfig.seed)
    ap.add_argument("--pairs", type=int, default=VerifyConfig.random_pairs)
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    t0 = time.perf_counter()
    report = run_all(VerifyConfig(seed=args.seed, random_pairs=args.pairs))
    (outdir / "verify_all.json").write_text(
        json.dumps(report.to_json_dict(), indent=2) + "\n")
    s = report.summary
    print(f"verification: {s['pass']} pass, {s['fail']} fail, {s['info']} info "
          f"({time.perf_counter() - t0:.1f}s)")
    for c in report.checks:
        if c.status == "fail":
            print(f"  FAIL {c.check_id} (max violation {c.max_violation:.3e})")

    for fig_id in sorted(FIGURES):
        cmd_figure(CliConfig(command="figure", figure_id=fig_id,
                             out=str(outdir / f"{fig_id}.csv")))

    (outdir / "catalog.json").write_text(json.dumps(catalog_rows(), indent=2) + "\n")
    print(f"artifacts in {outdir}/")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
