"""Tightness of the new bound families against the classical baselines.

For each function and interval, prints bound/gap ratios at m = 1 (smaller is
tighter, 1 is sharp).  Rows where the hypotheses of a bound are not certified
are still printed; the ratio is informative only.

    python scripts/tightness_table.py [--q 2]
"""

from __future__ import annotations

import argparse

from hadamard_bounds.cli import compare_table

FUNCTIONS = [
    {"name": "power", "n": 2},
    {"name": "power", "n": 3},
    {"name": "power", "n": 4},
    {"name": "exp", "c": 1},
    {"name": "shifted_square", "c": 0.5},
]
INTERVALS = [(0.0, 1.0), (0.5, 2.0), (1.0, 3.0)]


def main() -> None:
    parser = argparse.ArgumentParser(description="bound/gap ratios at m = 1")
    parser.add_argument("--q", type=float, default=2.0)
    parser.add_argument("--m", type=float, default=1.0)
    args = parser.parse_args()

    header = None
    for entry in FUNCTIONS:
        for a, b in INTERVALS:
            rows = compare_table(entry, a, b, args.m, args.q)
            if header is None:
                header = [r["bound"] for r in rows]
                print(f"{'function':<18} {'interval':<11}" + "".join(f"{h:>10}" for h in header))
            label = ",".join(f"{k}={v}" for k, v in entry.items() if k != "name")
            name = f"{entry['name']}({label})"
            cells = "".join(f"{r['ratio']:>10.4g}" for r in rows)
            print(f"{name:<18} [{a:g}, {b:g}]{'':<4}{cells}")


if __name__ == "__main__":
    main()
