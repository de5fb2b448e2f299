#!/usr/bin/env python3
"""Margin study: how far each verified instance sits from its tolerance.

Buckets the error-to-threshold ratios of a full run, then re-runs one
family at a sweep of tolerance overrides to show where the quadrature
cost starts to grow.  Useful when adding catalog rows: a healthy new row
lands below 1e-2 of threshold.
"""

from __future__ import annotations

import argparse
import math
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from fibint import verifier  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--filter", default="*")
    ap.add_argument("--sweep-family", default="S7.ID7")
    args = ap.parse_args()

    report = verifier.run(args.filter)
    buckets = [0] * 8
    for r in report.results:
        ratio = r.abs_err / r.tol if r.tol else math.inf
        idx = min(7, max(0, int(math.log10(ratio)) + 8)) if ratio > 0 else 0
        buckets[idx] += 1
    print("error/threshold distribution (decade buckets, <=1e-8 ... >1e-1):")
    labels = ["<=1e-8", "1e-7", "1e-6", "1e-5", "1e-4", "1e-3", "1e-2", ">=1e-1"]
    for lab, n in zip(labels, buckets):
        print(f"  {lab:>7s}: {n}")

    print(f"\ntolerance sweep over {args.sweep_family}:")
    print(f"{'tol':>8s} {'worst err':>12s} {'evals':>8s}")
    for tol in (1e-5, 1e-7, 1e-9, 1e-11, 1e-13):
        rep = verifier.run(args.sweep_family, tol_override=tol)
        worst = max(r.abs_err for r in rep.results)
        evals = sum(r.quad_evals for r in rep.results)
        print(f"{tol:8.0e} {worst:12.3e} {evals:8d}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
