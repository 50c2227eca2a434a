#!/usr/bin/env python3
"""Certify the four standard instances and print a summary table.

Runs the full pipeline (surface, catalog, sphere, retraction, claims,
homology) for (genus, n) in {(1,1), (1,2), (2,1), (2,2)} and prints one row
per instance.  With --out DIR, also writes each certificate and its rendered
report under DIR/g{genus}_n{n}/.

Usage:
    python3 scripts/run_acceptance_instances.py [--arc-bound K] [--out DIR]
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from disklab.disks import CatalogConfig
from disklab.flagcomplex import canonical_json, write_text_file
from disklab.retraction import certify_minimality, render_report

INSTANCES = ((1, 1), (1, 2), (2, 1), (2, 2))


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--arc-bound", type=int, default=3)
    parser.add_argument("--bandsum-depth", type=int, default=2)
    parser.add_argument("--out", default=None, help="directory for certificates (optional)")
    args = parser.parse_args(argv)

    config = CatalogConfig(arc_bound=args.arc_bound, bandsum_depth=args.bandsum_depth)
    header = f"{'genus':>5} {'n':>2} {'disks':>5} {'pairs':>5} {'cases 1..6':>24} {'viol':>4} {'time':>7}  result"
    print(header)
    print("-" * len(header))
    all_passed = True
    for genus, n in INSTANCES:
        t0 = time.monotonic()
        cert = certify_minimality(genus, n, config)
        elapsed = time.monotonic() - t0
        claims = cert["claims"]
        cases = " ".join(str(claims["per_case"][str(c)]) for c in range(1, 7))
        result = "PASSED" if cert["passed"] else "FAILED"
        all_passed = all_passed and cert["passed"]
        print(
            f"{genus:>5} {n:>2} {cert['catalog']['size']:>5} {claims['pairs_checked']:>5} "
            f"{cases:>24} {len(claims['violations']):>4} {elapsed:>6.2f}s  {result}"
        )
        if args.out is not None:
            subdir = os.path.join(args.out, f"g{genus}_n{n}")
            os.makedirs(subdir, exist_ok=True)
            write_text_file(os.path.join(subdir, "certificate.json"), canonical_json(cert))
            write_text_file(os.path.join(subdir, "report.txt"), render_report(cert))
    if args.out is not None:
        print(f"\ncertificates written under {args.out}/")
    return 0 if all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
