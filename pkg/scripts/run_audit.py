"""Run an audit preset and write JSON and CSV reports next to each other."""

import argparse
import sys
import time
from pathlib import Path

from cyclicsg.audit import PRESETS, preset, run_audit


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--preset", choices=sorted(PRESETS), default="default")
    ap.add_argument("--out-dir", type=Path, default=Path("audit_reports"))
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    report = run_audit(preset(args.preset), jobs=args.jobs)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    (args.out_dir / f"{args.preset}.json").write_text(report.to_json())
    (args.out_dir / f"{args.preset}.csv").write_text(report.to_csv())
    print(report.summary_text(), end="")
    print(f"wrote {args.out_dir}/{args.preset}.{{json,csv}} in {time.perf_counter() - t0:.1f}s")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
