#!/usr/bin/env python3
"""Run the desk-scale bound checks across the bundled adversary fixtures.

For every fixture law, dimension pair and family this enumerates the whole
hash family, measures the mean uniformity deficit and its tail, and checks
them against the guaranteed ceilings.  Prints one line per instance and
exits nonzero if any inequality fails (which would be a genuine finding).
"""

import argparse
import json
import pathlib
import sys

from pa_kit import verify_tail_bound
from pa_kit import fixtures

FIXTURE_SET = [
    ("uniform", None),
    ("point-mass", None),
    ("two-point", None),
    ("geometric", None),
    ("random-sparse", 1),
    ("random-sparse", 2),
    ("random-sparse", 3),
    ("random-sparse", 4),
    ("random-sparse", 5),
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[6, 8])
    parser.add_argument("--k", type=int, nargs="+", default=[2, 3, 4])
    parser.add_argument("--families", nargs="+",
                        default=["toeplitz", "toeplitz-affine"])
    parser.add_argument("--beta", type=float, nargs="+",
                        default=[0.1, 0.25, 0.5, 1.0, 2.0])
    parser.add_argument("--json-dir", type=pathlib.Path, default=None,
                        help="also dump one JSON report per instance")
    args = parser.parse_args()

    if args.json_dir is not None:
        args.json_dir.mkdir(parents=True, exist_ok=True)

    failures = 0
    count = 0
    for name, seed in FIXTURE_SET:
        for n in args.n:
            eve = fixtures.by_name(name, n, seed=seed if seed is not None else 1)
            label = name if seed is None else f"{name}#{seed}"
            for k in args.k:
                for family in args.families:
                    report = verify_tail_bound(eve, family, k, args.beta)
                    count += 1
                    status = "PASS" if report.passed else "FAIL"
                    if not report.passed:
                        failures += 1
                    print(
                        f"{status} {label:>16} n={n} k={k} {family:<15} "
                        f"mean_deficit={report.mean_deficit:.3e} "
                        f"<= {report.theoretical_average_bound:.3e} "
                        f"(R={report.renyi_bits:.2f} bits, "
                        f"{report.member_count} members)"
                    )
                    if args.json_dir is not None:
                        path = args.json_dir / f"{report.experiment_id}.json"
                        path.write_text(report.to_json() + "\n")

    print(f"\n{count - failures}/{count} instances passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
