"""Orbits of multiplication by q on Z/(q^s - 1) and compatible primitive
elements of the fields GF(q^s).

An orbit {k, kq, ..., kq^(s-1)} of exact size s labels both the monic
irreducible polynomial of degree s with root omega_s^k (class side) and a
simplex (character side).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint

from .finite_field import get_field, prime_power

__all__ = [
    "FrobOrbit",
    "FieldTower",
    "enumerate_orbits",
    "canonical_orbit",
    "parse_orbit",
    "build_field_tower",
    "min_poly",
    "count_irreducible",
]


@dataclass(frozen=True, order=True)
class FrobOrbit:
    degree: int
    root: int
    q: int

    def __post_init__(self):
        mod = self.q**self.degree - 1
        if not 0 <= self.root < mod:
            raise ValueError(f"root {self.root} outside [0, {mod})")
        members = self.members()
        if len(members) != self.degree:
            raise ValueError(f"{self.root} mod {mod} does not have exact degree {self.degree}")
        if min(members) != self.root:
            raise ValueError(f"{self.root} is not the minimal element of its orbit")

    def members(self) -> tuple:
        mod = self.q**self.degree - 1
        seen = []
        x = self.root % mod
        while x not in seen:
            seen.append(x)
            x = x * self.q % mod
        return tuple(seen)

    @property
    def modulus(self) -> int:
        return self.q**self.degree - 1

    def label(self) -> str:
        return f"{self.degree}:{self.root}"

    def __str__(self):
        return self.label()


def canonical_orbit(q: int, s: int, k: int) -> FrobOrbit:
    """Orbit of k in Z/(q^s-1), at its exact degree (which divides s)."""
    mod = q**s - 1
    k %= mod
    members = []
    x = k
    while x not in members:
        members.append(x)
        x = x * q % mod
    d = len(members)
    sub = q**d - 1
    # k = k' (q^s-1)/(q^d-1) with k' in Z/(q^d-1)
    root = min(members) // (mod // sub)
    return FrobOrbit(d, root, q)


def parse_orbit(text: str, q: int) -> FrobOrbit:
    s, k = text.split(":")
    return FrobOrbit(int(s), int(k), q)


@lru_cache(maxsize=None)
def enumerate_orbits(q: int, s: int) -> tuple:
    """Exact-degree-s orbits sorted by canonical root."""
    prime_power(q)
    if s < 1:
        raise ValueError("degree must be >= 1")
    mod = q**s - 1
    seen = bytearray(mod)
    out = []
    for k in range(mod):
        if seen[k]:
            continue
        members = []
        x = k
        while not seen[x]:
            seen[x] = 1
            members.append(x)
            x = x * q % mod
        if len(members) == s:
            out.append(FrobOrbit(s, k, q))
    return tuple(out)


def count_irreducible(q: int, s: int) -> int:
    """Monic irreducible degree-s polynomials over GF(q) other than t (Moebius formula)."""
    total = 0
    for d in range(1, s + 1):
        if s % d == 0:
            total += _mobius(s // d) * q**d
    total //= s
    return total - (1 if s == 1 else 0)


def _mobius(n: int) -> int:
    f = factorint(n)
    if any(e > 1 for e in f.values()):
        return 0
    return (-1) ** len(f)


# ---------------------------------------------------------------- field tower


class _ExtField:
    """GF(q^s) = GF(q)[t]/(P), elements as tuples of s base-field elements."""

    def __init__(self, q: int, s: int, modpoly: tuple):
        self.q, self.s, self.modpoly = q, s, modpoly
        self.base = get_field(q)

    def mul(self, x, y):
        F, s = self.base, self.s
        prod = [0] * (2 * s - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        prod[i + j] = int(F.add[prod[i + j], F.mul[a, b]])
        for d in range(2 * s - 2, s - 1, -1):
            c = prod[d]
            if c:
                for j in range(s + 1):
                    prod[d - s + j] = int(F.add[prod[d - s + j], F.neg[F.mul[c, self.modpoly[j]]]])
        return tuple(prod[:s])

    def one(self):
        return (1,) + (0,) * (self.s - 1)

    def gen(self):
        return (0, 1) + (0,) * (self.s - 2) if self.s > 1 else None

    def power(self, x, e: int):
        out = self.one()
        while e:
            if e & 1:
                out = self.mul(out, x)
            x = self.mul(x, x)
            e >>= 1
        return out

    def const(self, c: int):
        return (c,) + (0,) * (self.s - 1)

    def add(self, x, y):
        F = self.base
        return tuple(int(F.add[a, b]) for a, b in zip(x, y))

    def neg(self, x):
        return tuple(int(self.base.neg[a]) for a in x)

    def order_is_full(self, x) -> bool:
        N = self.q**self.s - 1
        if self.power(x, N) != self.one():
            return False
        return all(self.power(x, N // r) != self.one() for r in factorint(N))

    def min_poly_of(self, x) -> tuple:
        """Monic minimal polynomial over GF(q), coefficients ascending."""
        conj = [x]
        y = self.power(x, self.q)
        while y != x:
            conj.append(y)
            y = self.power(y, self.q)
        poly = [self.one()]
        for r in conj:
            # multiply by (t - r)
            nr = self.neg(r)
            new = [self.const(0)] * (len(poly) + 1)
            for i, c in enumerate(poly):
                new[i + 1] = self.add(new[i + 1], c)
                new[i] = self.add(new[i], self.mul(c, nr))
            poly = new
        coeffs = []
        for c in poly:
            if any(c[1:]):
                raise ArithmeticError("minimal polynomial not over the base field")
            coeffs.append(c[0])
        return tuple(coeffs)

    def eval_base_poly(self, poly, x):
        acc = self.const(0)
        for c in reversed(poly):
            acc = self.add(self.mul(acc, x), self.const(c))
        return acc


def _find_irreducible(q: int, s: int) -> tuple:
    F = get_field(q)
    if s == 1:
        return (0, 1)
    for tail in itertools.product(range(q), repeat=s):
        cand = tuple(tail) + (1,)
        if cand[0] == 0:
            continue
        if _irreducible(cand, F):
            return cand
    raise ArithmeticError("no irreducible polynomial found")


def _poly_rem(a, b, F):
    a = list(a)
    db = len(b) - 1
    inv_lead = int(F.inv[b[-1]])
    for top in range(len(a) - 1, db - 1, -1):
        c = a[top]
        if c:
            c = int(F.mul[c, inv_lead])
            for j in range(db + 1):
                a[top - db + j] = int(F.add[a[top - db + j], F.neg[F.mul[c, b[j]]]])
    return a[:db]


def _irreducible(poly, F) -> bool:
    s = len(poly) - 1
    for d in range(1, s // 2 + 1):
        for tail in itertools.product(range(F.q), repeat=d):
            if not any(_poly_rem(poly, tuple(tail) + (1,), F)):
                return False
    return True


@dataclass(frozen=True, eq=False)
class FieldTower:
    """Fields GF(q^s), s <= n, with primitive omega_s satisfying
    omega_s^((q^s-1)/(q^d-1)) ~ omega_d (same minimal polynomial) for the
    largest proper divisor d of s, hence for every d | s."""

    q: int
    n: int
    fields: tuple  # index s-1 -> _ExtField
    omegas: tuple  # index s-1 -> element tuple
    omega_min_polys: tuple

    def field(self, s: int) -> _ExtField:
        return self.fields[s - 1]

    def omega(self, s: int):
        return self.omegas[s - 1]

    def element(self, s: int, k: int):
        return self.field(s).power(self.omega(s), k)

    @property
    def omega1(self) -> int:
        return self.omegas[0][0]


@lru_cache(maxsize=None)
def build_field_tower(q: int, n: int) -> FieldTower:
    prime_power(q)
    fields, omegas, mps = [], [], []
    for s in range(1, n + 1):
        K = _ExtField(q, s, _find_irreducible(q, s))
        N = q**s - 1
        if s == 1:
            omega = next((c,) for c in range(1, q) if K.order_is_full((c,)))
        else:
            prim = None
            for tail in itertools.product(range(q), repeat=s):
                x = tuple(tail)
                if any(x) and K.order_is_full(x):
                    prim = x
                    break
            d = max(t for t in range(1, s) if s % t == 0)
            target = mps[d - 1]
            step = N // (q**d - 1)
            omega = None
            for e in range(1, N):
                if math.gcd(e, N) != 1:
                    continue
                cand = K.power(prim, e)
                if not any(K.eval_base_poly(target, K.power(cand, step))):
                    omega = cand
                    break
            if omega is None:
                raise ArithmeticError(f"could not normalise omega_{s}")
        fields.append(K)
        omegas.append(omega)
        mps.append(K.min_poly_of(omega))
    return FieldTower(q, n, tuple(fields), tuple(omegas), tuple(mps))


def min_poly(orbit: FrobOrbit, tower: FieldTower) -> tuple:
    """Coefficients (ascending) of prod_u (t - omega_s^(k q^u))."""
    if orbit.q != tower.q:
        raise ValueError("orbit and tower use different q")
    K = tower.field(orbit.degree)
    x = tower.element(orbit.degree, orbit.root)
    mp = K.min_poly_of(x)
    if len(mp) != orbit.degree + 1:
        raise ArithmeticError("minimal polynomial degree mismatch")
    return mp
