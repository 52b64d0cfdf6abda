#!/usr/bin/env python3
"""Regenerate the bundled seeded fixture under data/fixture/.

The repository ships the output of seed 7 with 20 players and 10 matches;
tests assert the bundled files match a fresh regeneration, so rerun this
script only when the generator itself changes.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from scoutbench.ingest import generate_synthetic, write_dataset

REPO_ROOT = Path(__file__).resolve().parents[1]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--players", type=int, default=20)
    parser.add_argument("--matches", type=int, default=10)
    parser.add_argument("--out-dir", type=Path, default=REPO_ROOT / "data" / "fixture")
    args = parser.parse_args()

    dataset = generate_synthetic(args.seed, args.players, args.matches)
    written = write_dataset(dataset, args.out_dir)
    print(
        f"wrote {len(dataset.events)} events / {len(dataset.players)} players / "
        f"{len(dataset.matches)} matches (seed {args.seed})"
    )
    for path in written:
        print(f"  {path.relative_to(REPO_ROOT)}")


if __name__ == "__main__":
    main()
