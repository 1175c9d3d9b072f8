"""Build and certify complete GL(5, q) tables; print one JSON line per q.

    python3 scripts/run_orthogonality.py --q 2 3 [--workers 4] [--n 5]
"""
import argparse
import json
import time

from glchar.characters import full_table
from glchar.verification import certify_table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    for q in args.q:
        t0 = time.perf_counter()
        table = full_table(q, args.n, workers=args.workers)
        built = time.perf_counter() - t0
        rep = certify_table(table)
        print(json.dumps({
            "q": q, "n": args.n, "characters": len(table.duals), "ok": rep.ok,
            "build_seconds": round(built, 2), "certify_seconds": round(rep.seconds, 2),
            "modulus": rep.details["modulus"], "primes": rep.details["primes"],
            "failures": rep.failures[:5],
        }), flush=True)


if __name__ == "__main__":
    main()
