"""Run the reference campaign and write CSV and JSON reports.

    python scripts/run_reference_campaign.py [--config configs/reference_campaign.json] [--out-dir reports]
"""

from __future__ import annotations

import argparse
import collections
from pathlib import Path

from hadamard_bounds.campaign import CampaignSummary, load_config, run_campaign
from hadamard_bounds.report import emit_report

ROOT = Path(__file__).resolve().parents[1]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--config", default=ROOT / "configs" / "reference_campaign.json", type=Path)
    parser.add_argument("--out-dir", default=ROOT / "reports", type=Path)
    args = parser.parse_args()

    records = run_campaign(load_config(args.config))
    for fmt in ("csv", "json"):
        path = emit_report(records, fmt, args.out_dir / f"reference.{fmt}")
        print(f"wrote {path}")
    print(CampaignSummary.of(records))

    by_family = collections.Counter((r.family, r.status if r.status != "ok" else str(r.holds)) for r in records)
    for (family, status), count in sorted(by_family.items()):
        print(f"  {family:<10} {status:<8} {count}")
    for r in records:
        if r.status == "ok" and not r.holds:
            print(f"  violation: {r.family} {r.function} [{r.a}, {r.b}] m={r.m} q={r.q} slack={r.slack:.6g}")


if __name__ == "__main__":
    main()
