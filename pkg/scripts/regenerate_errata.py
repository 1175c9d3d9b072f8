"""Compare every published table with the engine and write the errata ledger.

    python3 scripts/regenerate_errata.py [--out errata.json]

Exits non-zero if a hard fixture has a mismatch that no identity explains.
"""
import argparse
import json
import sys
from collections import Counter
from pathlib import Path

from glchar import __version__
from glchar.verification import fixture_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "errata.json"))
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    errata, failures = fixture_sweep(characters=True, seed=args.seed)
    payload = {
        "version": __version__,
        "reference_q": 7,
        "summary": {f"{'hard' if h else 'soft'}/{s}": n
                    for (h, s), n in sorted(Counter((e.hard, e.status) for e in errata).items())},
        "entries": [e.to_json() for e in errata],
    }
    Path(args.out).write_text(json.dumps(payload, indent=1) + "\n")
    print(json.dumps(payload["summary"]))
    for e in failures:
        print(f"unexplained: {e.location}", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
