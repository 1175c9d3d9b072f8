"""Hall polynomials, the k(lambda, q) factors, Green polynomials and
symmetric-group characters.

Hall polynomials g^lam_{mu,nu}(q) count invariant subspaces W of a nilpotent
operator of Jordan type lam with W of type nu and V/W of type mu. They are
obtained by counting over several small fields and interpolating, with extra
sample points held back as a consistency check.
"""
from __future__ import annotations

import itertools
import json
import os
import tempfile
from fractions import Fraction
from functools import lru_cache
from math import factorial
from pathlib import Path

import numpy as np
from filelock import FileLock

from .exact_arith import IntPolyQ
from .finite_field import get_field
from .partitions import Partition, conjugate, enumerate_partitions, n_stat, parse_partition

__all__ = [
    "hall_counts",
    "hall_pair",
    "hall_chain",
    "k_poly",
    "green_poly",
    "sym_char",
    "mn_char",
    "hook_dimension",
    "SAMPLE_FIELDS",
    "cache_path",
    "set_cache_dir",
    "flush_cache",
]

SAMPLE_FIELDS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19)
CACHE_ENV = "GLCHAR_CACHE_DIR"
CACHE_FILE = "green_cache.json"
_CACHE_VERSION = 1


# ---------------------------------------------------------------- brute force


def _layout(lam: Partition):
    """Coordinates (block, position) and, for each power m, the index arrays
    describing the coordinate shift A^m and the image subspace A^m V."""
    coords = [(b, j) for b, size in enumerate(lam) for j in range(size)]
    index = {c: i for i, c in enumerate(coords)}
    return coords, index


def _shift(B: np.ndarray, lam: Partition, m: int) -> np.ndarray:
    """Apply A^m to each row of B, where A e_(b,j) = e_(b,j+1)."""
    coords, index = _layout(lam)
    out = np.zeros_like(B)
    for (b, j), i in index.items():
        if j + m < lam[b]:
            out[..., index[(b, j + m)]] = B[..., i]
    return out


def _rref_batches(n: int, pivots, q0: int, chunk: int):
    """Every k x n reduced row-echelon matrix over GF(q0) with the given pivots,
    yielded in chunks."""
    k = len(pivots)
    free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
    N = q0 ** len(free)
    for start in range(0, N, chunk):
        vals = np.arange(start, min(start + chunk, N))
        B = np.zeros((len(vals), k, n), dtype=np.int64)
        for r, p in enumerate(pivots):
            B[:, r, p] = 1
        for t, (r, c) in enumerate(free):
            B[:, r, c] = (vals // q0**t) % q0
        yield B


def _conj_to_partition(conj_parts) -> Partition:
    return conjugate(Partition(x for x in conj_parts if x > 0))


_CHUNK = 1 << 18


@lru_cache(maxsize=None)
def hall_counts(lam, q0: int, k: int) -> dict:
    """{(mu, nu): count} of k-dimensional invariant subspaces over GF(q0),
    nu = type of the subspace, mu = type of the quotient."""
    lam = parse_partition(lam)
    n = lam.size
    F = get_field(q0)
    top = lam[0] if lam else 0
    coords, index = _layout(lam)
    image_sets = [
        np.array([i for (b, j), i in index.items() if j >= m], dtype=np.int64) for m in range(top + 1)
    ]
    out: dict = {}
    for pivots in itertools.combinations(range(n), k):
        for B in _rref_batches(n, pivots, q0, _CHUNK):
            if k:
                X = _shift(B, lam, 1)
                coef = X[:, :, list(pivots)]
                Y = F.matmul(coef, B)
                B = B[(X == Y).all(axis=(1, 2))]
                if len(B) == 0:
                    continue
            N = len(B)
            sub_ranks = [np.full(N, k)]
            quo_ranks = [np.full(N, n - k)]
            for m in range(1, top + 1):
                sub_ranks.append(F.rank(_shift(B, lam, m)) if k else np.zeros(N, dtype=np.int64))
                keep = np.setdiff1d(np.arange(n), image_sets[m])
                r = F.rank(B[:, :, keep]) if (k and len(keep)) else np.zeros(N, dtype=np.int64)
                quo_ranks.append(len(image_sets[m]) + r - k)
            sub_conj = np.stack([sub_ranks[m - 1] - sub_ranks[m] for m in range(1, top + 1)], axis=1) if top else np.zeros((N, 0), dtype=np.int64)
            quo_conj = np.stack([quo_ranks[m - 1] - quo_ranks[m] for m in range(1, top + 1)], axis=1) if top else np.zeros((N, 0), dtype=np.int64)
            keys, counts = np.unique(np.concatenate([quo_conj, sub_conj], axis=1), axis=0, return_counts=True)
            for key, cnt in zip(keys, counts):
                mu = _conj_to_partition(key[:top])
                nu = _conj_to_partition(key[top:])
                out[(mu, nu)] = out.get((mu, nu), 0) + int(cnt)
    return out


def _degree_bound(lam, mu, nu) -> int:
    return n_stat(lam) - n_stat(mu) - n_stat(nu)


def _samples_needed(lam: Partition, k: int) -> int:
    """bound + 2 over the pairs present at the smallest field.

    A Hall polynomial is either identically zero or positive at every prime
    power, so the support is read off at q0 = 2; the zero pairs are still
    checked at every sample taken.
    """
    need = 2
    for mu, nu in hall_counts(lam, SAMPLE_FIELDS[0], k):
        need = max(need, _degree_bound(lam, mu, nu) + 2)
    return need


def _interpolate(xs, ys) -> list:
    """Coefficients (ascending, Fraction) of the unique polynomial through the points."""
    coeffs = [Fraction(0)] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        for t, b in enumerate(basis):
            coeffs[t] += yi * b / denom
    return coeffs


def compute_hall_pair(lam, mu, nu) -> IntPolyQ:
    """Uncached brute-force computation (interpolation plus held-out checks)."""
    lam, mu, nu = map(parse_partition, (lam, mu, nu))
    if mu.size + nu.size != lam.size:
        raise ValueError(f"size mismatch: |{mu}| + |{nu}| != |{lam}|")
    k = nu.size
    need = _samples_needed(lam, k)
    xs = SAMPLE_FIELDS[:need]
    ys = [hall_counts(lam, x, k).get((mu, nu), 0) for x in xs]
    bound = _degree_bound(lam, mu, nu)
    if bound < 0 or not any(ys):
        if any(ys):
            raise ArithmeticError(f"nonzero count beyond degree bound for {lam},{mu},{nu}")
        return IntPolyQ()
    coeffs = _interpolate(xs[: bound + 1], ys[: bound + 1])
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError(f"non-integral Hall polynomial for {lam},{mu},{nu}")
    poly = IntPolyQ([int(c) for c in coeffs])
    for x, y in zip(xs[bound + 1:], ys[bound + 1:]):
        if poly(x) != y:
            raise ArithmeticError(f"held-out sample q={x} disagrees for {lam},{mu},{nu}")
    return poly


# ---------------------------------------------------------------- disk cache

_cache_dir_override: Path | None = None
_disk: dict | None = None
_dirty = False


def set_cache_dir(path) -> None:
    """Override the cache directory (flag > env var > default)."""
    global _cache_dir_override, _disk
    _cache_dir_override = Path(path) if path is not None else None
    _disk = None


def cache_path() -> Path:
    if _cache_dir_override is not None:
        base = _cache_dir_override
    elif os.environ.get(CACHE_ENV):
        base = Path(os.environ[CACHE_ENV])
    else:
        base = Path.home() / ".cache" / "glchar"
    return base / CACHE_FILE


def _load_disk() -> dict:
    global _disk
    if _disk is None:
        _disk = {"version": _CACHE_VERSION, "hall": {}, "green": {}}
        path = cache_path()
        try:
            data = json.loads(path.read_text())
            if data.get("version") == _CACHE_VERSION:
                _disk["hall"].update(data.get("hall", {}))
                _disk["green"].update(data.get("green", {}))
        except (OSError, ValueError):
            pass
    return _disk


def flush_cache() -> Path | None:
    """Merge in-memory results into the cache file (atomic replace under a lock)."""
    global _dirty
    if not _dirty:
        return None
    path = cache_path()
    path.parent.mkdir(parents=True, exist_ok=True)
    with FileLock(str(path) + ".lock"):
        merged = {"version": _CACHE_VERSION, "hall": {}, "green": {}}
        try:
            data = json.loads(path.read_text())
            if data.get("version") == _CACHE_VERSION:
                merged["hall"].update(data.get("hall", {}))
                merged["green"].update(data.get("green", {}))
        except (OSError, ValueError):
            pass
        mem = _load_disk()
        merged["hall"].update(mem["hall"])
        merged["green"].update(mem["green"])
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".green_cache.", suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(merged, fh, sort_keys=True, indent=0)
        os.replace(tmp, path)
    _dirty = False
    return path


def _cached(section: str, key: str, compute) -> IntPolyQ:
    global _dirty
    store = _load_disk()[section]
    if key in store:
        return IntPolyQ(store[key])
    poly = compute()
    store[key] = list(poly.coeffs)
    _dirty = True
    return poly


# ---------------------------------------------------------------- public API


@lru_cache(maxsize=None)
def _hall_pair(lam: Partition, mu: Partition, nu: Partition) -> IntPolyQ:
    key = f"{lam}|{mu}|{nu}"
    return _cached("hall", key, lambda: compute_hall_pair(lam, mu, nu))


def hall_pair(lam, mu, nu) -> IntPolyQ:
    """g^lam_{mu,nu}(q): mu is the quotient type, nu the submodule type."""
    lam, mu, nu = map(parse_partition, (lam, mu, nu))
    if mu.size + nu.size != lam.size:
        raise ValueError(f"size mismatch: |{mu}| + |{nu}| != |{lam}|")
    if not nu:
        return IntPolyQ([1 if mu == lam else 0])
    if not mu:
        return IntPolyQ([1 if nu == lam else 0])
    return _hall_pair(lam, mu, nu)


@lru_cache(maxsize=None)
def _hall_chain(lam: Partition, factors: tuple) -> IntPolyQ:
    if len(factors) == 1:
        return IntPolyQ([1 if factors[0] == lam else 0])
    head, rest = factors[0], factors[1:]
    rest_size = lam.size - head.size
    total = IntPolyQ()
    for mid in enumerate_partitions(rest_size):
        g = hall_pair(lam, head, mid)
        if g.is_zero():
            continue
        total = total + g * _hall_chain(mid, rest)
    return total


def hall_chain(lam, factors) -> IntPolyQ:
    """Number of chains V = V0 > V1 > ... > Vk = 0 with V(j-1)/Vj of type factors[j-1]."""
    lam = parse_partition(lam)
    factors = tuple(parse_partition(f) for f in factors)
    if sum(f.size for f in factors) != lam.size:
        raise ValueError("size mismatch between lambda and the chain factors")
    if not factors:
        return IntPolyQ([1])
    return _hall_chain(lam, factors)


def k_poly(lam) -> IntPolyQ:
    """prod_{i=1}^{p-1} (1 - q^i) for a partition with p parts (1 if p <= 1)."""
    p = len(parse_partition(lam))
    out = IntPolyQ([1])
    for i in range(1, p):
        out = out * (1 - IntPolyQ.monomial(i))
    return out


def _green_uncached(lam: Partition, rho: Partition) -> IntPolyQ:
    parts = sorted(rho)
    total = IntPolyQ()
    for seq in itertools.product(*(enumerate_partitions(p) for p in parts)):
        chain = hall_chain(lam, seq)
        if chain.is_zero():
            continue
        weight = IntPolyQ([1])
        for piece in seq:
            weight = weight * k_poly(piece)
        total = total + chain * weight
    return total


@lru_cache(maxsize=None)
def _green(lam: Partition, rho: Partition) -> IntPolyQ:
    return _cached("green", f"{lam}|{rho}", lambda: _green_uncached(lam, rho))


def green_poly(lam, rho) -> IntPolyQ:
    """Green polynomial Q^lam_rho(q)."""
    lam, rho = parse_partition(lam), parse_partition(rho)
    if lam.size != rho.size:
        raise ValueError(f"size mismatch: |{lam}| != |{rho}|")
    if not lam:
        return IntPolyQ([1])
    return _green(lam, rho)


def sym_char(lam, rho) -> int:
    """chi^lam_rho read off as the coefficient of q^{n(lam)} in Q^lam_rho."""
    lam = parse_partition(lam)
    return green_poly(lam, rho).coeff(n_stat(lam))


# ---------------------------------------------------------------- oracles


@lru_cache(maxsize=None)
def _mn(beta: frozenset, parts: tuple) -> int:
    if not parts:
        return 1
    r, rest = parts[0], parts[1:]
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beta:
            continue
        height = sum(1 for x in beta if nb < x < b)
        total += (-1) ** height * _mn(beta - {b} | {nb}, rest)
    return total


def mn_char(lam, rho) -> int:
    """Murnaghan-Nakayama rule on beta-sets (rim-hook removal)."""
    lam, rho = parse_partition(lam), parse_partition(rho)
    if lam.size != rho.size:
        raise ValueError("size mismatch")
    ell = len(lam)
    beta = frozenset(lam[i] + ell - 1 - i for i in range(ell))
    return _mn(beta, tuple(rho))


def hook_dimension(lam) -> int:
    lam = parse_partition(lam)
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= row - j + conj[j] - i - 1
    return factorial(lam.size) // prod
