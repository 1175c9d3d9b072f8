"""Small finite fields GF(p^k) as lookup tables, with numpy-vectorized
elementwise ops and batched row reduction.

Elements are integers in [0, q); the integer's base-p digits are the
coefficients (low degree first) of a polynomial modulo a fixed irreducible.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from sympy import factorint

__all__ = ["GF", "prime_power", "is_prime_power", "get_field"]


def prime_power(q: int):
    """(p, k) with q = p^k, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, k), = f.items()
    return p, k


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except ValueError:
        return False
    return True


def _poly_mulmod(a, b, modpoly, p):
    # a, b: coefficient lists length k; modpoly monic length k+1
    k = len(modpoly) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for j in range(k + 1):
                prod[d - k + j] = (prod[d - k + j] - c * modpoly[j]) % p
    return prod[:k]


def _is_irreducible_prime(poly, p) -> bool:
    """Trial division by every monic polynomial of degree <= k/2."""
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            rem = list(poly)
            for top in range(k, d - 1, -1):
                c = rem[top]
                if c:
                    for j in range(d + 1):
                        rem[top - d + j] = (rem[top - d + j] - c * divisor[j]) % p
            if not any(rem[:d]):
                return False
    return True


@dataclass(frozen=True, eq=False)
class GF:
    q: int
    p: int
    k: int
    add: np.ndarray = field(repr=False)
    mul: np.ndarray = field(repr=False)
    neg: np.ndarray = field(repr=False)
    inv: np.ndarray = field(repr=False)  # inv[0] = 0 (unused)
    modulus_poly: tuple = ()

    @property
    def sub(self) -> np.ndarray:
        return self.add[:, self.neg].copy()

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Batched matrix product over the field: (..., r, m) @ (..., m, c)."""
        a = np.asarray(a)
        b = np.asarray(b)
        m = a.shape[-1]
        out = self.mul[a[..., :, 0:1], b[..., 0:1, :]]
        for t in range(1, m):
            out = self.add[out, self.mul[a[..., :, t:t + 1], b[..., t:t + 1, :]]]
        return out

    def rank(self, mats: np.ndarray) -> np.ndarray:
        """Ranks of a batch of matrices of shape (N, r, c)."""
        mats = np.array(mats, dtype=np.int64, copy=True)
        if mats.ndim == 2:
            mats = mats[None]
        N, r, c = mats.shape
        ranks = np.zeros(N, dtype=np.int64)
        if N == 0 or r == 0 or c == 0:
            return ranks
        idx = np.arange(N)
        for col in range(c):
            active = ranks < r
            if not active.any():
                break
            # first nonzero row at or below the current rank
            rows = np.arange(r)[None, :]
            cand = (mats[:, :, col] != 0) & (rows >= ranks[:, None])
            has = cand.any(axis=1) & active
            if not has.any():
                continue
            piv = np.argmax(cand, axis=1)
            sel = idx[has]
            pr = piv[has]
            rk = ranks[has]
            # swap pivot row into position rk
            tmp = mats[sel, rk].copy()
            mats[sel, rk] = mats[sel, pr]
            mats[sel, pr] = tmp
            # normalise pivot row
            scale = self.inv[mats[sel, rk, col]]
            mats[sel, rk] = self.mul[scale[:, None], mats[sel, rk]]
            # eliminate the column from all other rows
            prow = mats[sel, rk]  # (S, c)
            factors = mats[sel, :, col].copy()  # (S, r)
            factors[np.arange(len(sel)), rk] = 0
            sub = self.mul[factors[:, :, None], prow[:, None, :]]
            mats[sel] = self.add[mats[sel], self.neg[sub]]
            ranks[sel] += 1
        return ranks

    def elements(self):
        return range(self.q)

    def power(self, a: int, e: int) -> int:
        out = 1
        base = a
        while e:
            if e & 1:
                out = int(self.mul[out, base])
            base = int(self.mul[base, base])
            e >>= 1
        return out


@lru_cache(maxsize=None)
def get_field(q: int) -> GF:
    """Table-driven GF(q) for a prime power q (kept small: q <= 256)."""
    p, k = prime_power(q)
    if q > 256:
        raise ValueError("table fields are limited to q <= 256")
    if k == 1:
        a = np.arange(p)
        add = (a[:, None] + a[None, :]) % p
        mul = (a[:, None] * a[None, :]) % p
        modpoly = (0, 1)
    else:
        modpoly = None
        for tail in itertools.product(range(p), repeat=k):
            cand = list(tail) + [1]
            if cand[0] and _is_irreducible_prime(cand, p):
                modpoly = tuple(cand)
                break
        digits = [[(x // p**i) % p for i in range(k)] for x in range(q)]

        def enc(coeffs):
            return sum(int(c) * p**i for i, c in enumerate(coeffs))

        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        for x in range(q):
            for y in range(q):
                add[x, y] = enc([(u + v) % p for u, v in zip(digits[x], digits[y])])
                mul[x, y] = enc(_poly_mulmod(digits[x], digits[y], modpoly, p))
    add = np.asarray(add, dtype=np.int64)
    mul = np.asarray(mul, dtype=np.int64)
    neg = np.array([int(np.nonzero(add[x] == 0)[0][0]) for x in range(q)], dtype=np.int64)
    inv = np.zeros(q, dtype=np.int64)
    for x in range(1, q):
        inv[x] = int(np.nonzero(mul[x] == 1)[0][0])
    for arr in (add, mul, neg, inv):
        arr.setflags(write=False)
    return GF(q=q, p=p, k=k, add=add, mul=mul, neg=neg, inv=inv, modulus_poly=modpoly)
