#!/usr/bin/env python3
"""Walk the talent-scout flow end to end on the bundled fixture.

Loads data/fixture/, runs the young-and-improving query under the default
profile, prints the table, then doubles the goal weight and shows how the
head of the table reacts.
"""

from __future__ import annotations

from pathlib import Path

from scoutbench.analytics import QueryFilter, row_to_record
from scoutbench.ingest import load_data_dir
from scoutbench.service import AnalyticsService

REPO_ROOT = Path(__file__).resolve().parents[1]


def print_rows(rows) -> None:
    header = f"{'player':<8}{'name':<24}{'age':>4}  {'role':<12}{'n':>3}{'mean':>9}{'trend%':>9}"
    print(header)
    print("-" * len(header))
    for row in rows:
        d = row_to_record(row)
        print(
            f"{d['player_id']:<8}{d['name']:<24}{d['age']:>4}  {d['role']:<12}"
            f"{d['n_matches']:>3}{d['playerank_mean']:>9.2f}{d['trend_percentage']:>9.1f}"
        )


def main() -> None:
    # plain AnalyticsService keeps the demo profile in memory only, so the
    # bundled fixture directory never gains a profiles.json side effect
    dataset, report = load_data_dir(REPO_ROOT / "data" / "fixture")
    service = AnalyticsService(dataset)
    print(
        f"loaded {len(service.dataset.players)} players, "
        f"{len(service.dataset.events)} events ({report.records_rejected} rejects)\n"
    )

    flt = QueryFilter(age_max=21, trend_min=0.0, min_matches=3)
    print("young (under 22), positive trend, at least 3 matches per role:\n")
    print_rows(service.query(flt))

    doubled = dict(service.profile().weights)
    doubled["goals"] = 2 * doubled["goals"]
    profile = service.registry.create("double-goals-demo", doubled)
    print(f"\nsame query with the goal weight doubled (profile {profile.profile_id}):\n")
    print_rows(service.query(flt, profile_id=profile.profile_id))


if __name__ == "__main__":
    main()
