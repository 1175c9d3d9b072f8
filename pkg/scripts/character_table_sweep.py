"""Evaluate every printed character-table cell at several random parameter
sets and summarise the mismatches by character type and class type.

    python3 scripts/character_table_sweep.py [--seeds 3] [--q 7] [--show 20]
"""
import argparse
import json
from collections import Counter

from glchar import fixtures


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--q", type=int, default=fixtures.REFERENCE_Q)
    ap.add_argument("--show", type=int, default=20)
    args = ap.parse_args()
    cells: dict = {}
    for seed in range(args.seeds):
        for c in fixtures.character_checks(q=args.q, seed=seed):
            if c.detail.get("skipped"):
                cells.setdefault(c.location, "skipped")
            elif not c.match:
                cells[c.location] = "mismatch"
            else:
                cells.setdefault(c.location, "match")
    tally = Counter(cells.values())
    bad = sorted(loc for loc, v in cells.items() if v == "mismatch")
    by_class = Counter(loc.split(":")[2] for loc in bad)
    print(json.dumps({"q": args.q, "seeds": args.seeds, "cells": dict(tally),
                      "mismatches_by_class_type": dict(by_class.most_common())}, indent=1))
    for loc in bad[: args.show]:
        print(loc)


if __name__ == "__main__":
    main()
