"""Precompute every Hall and Green polynomial for n <= 5 into the cache.

    python3 scripts/build_cache.py [--cache-dir DIR]
"""
import argparse
import time

from glchar import hall_green
from glchar.partitions import enumerate_partitions


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cache-dir")
    ap.add_argument("--n", type=int, default=5)
    args = ap.parse_args()
    if args.cache_dir:
        hall_green.set_cache_dir(args.cache_dir)
    t0 = time.perf_counter()
    for n in range(1, args.n + 1):
        for lam in enumerate_partitions(n):
            for rho in enumerate_partitions(n):
                hall_green.green_poly(lam, rho)
        print(f"n={n}: done at {time.perf_counter() - t0:.1f}s", flush=True)
    path = hall_green.flush_cache()
    print(f"cache: {path or hall_green.cache_path()} (unchanged)" if path is None else f"cache: {path}")


if __name__ == "__main__":
    main()
