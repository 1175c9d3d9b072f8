"""Modes of substitution of rho-variables into class and dual-class symbols,
their weights, and the exponent vectors attached to dual-class modes.

A rho-variable of degree d may be sent to an orbit f whose degree s divides
d; it then contributes a part d/s to the partition rho(m, f). A mode is the
resulting map f -> rho(m, f), required to satisfy |rho(m, f)| = |nu(f)|.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .class_space import Symbol
from .exact_arith import IntPolyQ, eval_poly
from .hall_green import green_poly, sym_char
from .partitions import Partition, enumerate_partitions, parse_partition, z_order

__all__ = [
    "Mode",
    "modes_into",
    "modes_bruteforce",
    "q_weight_poly",
    "q_weight",
    "chi_weight",
    "h_vector",
    "variable_targets",
]


@dataclass(frozen=True)
class Mode:
    rho: Partition
    targets: tuple  # ((FrobOrbit, Partition), ...) in symbol order

    def shape(self, orbit) -> Partition:
        for o, tau in self.targets:
            if o == orbit:
                return tau
        return Partition()

    def to_json(self) -> dict:
        return {
            "rho": str(self.rho),
            "targets": [{"orbit": o.label(), "partition": str(tau)} for o, tau in self.targets],
        }

    def __str__(self):
        inner = ", ".join(f"{o}->{tau}" for o, tau in self.targets)
        return f"[{self.rho}: {inner}]"


def modes_into(rho, sym: Symbol) -> tuple:
    rho = parse_partition(rho)
    if rho.size != sym.n:
        raise ValueError(f"|rho| = {rho.size} but the symbol has n = {sym.n}")
    key = tuple((o.degree, lam.size) for o, lam in sym.entries)
    out = []
    for shapes in _shape_lists(rho, key):
        out.append(Mode(rho, tuple((o, tau) for (o, _), tau in zip(sym.entries, shapes))))
    return tuple(out)


@lru_cache(maxsize=None)
def _shape_lists(rho: Partition, key: tuple) -> tuple:
    """Per-slot partitions tau_f (|tau_f| = weight of slot) using rho's parts."""
    out = []

    def rec(idx, remaining: Counter, acc):
        if idx == len(key):
            if not +remaining:
                out.append(tuple(acc))
            return
        s, size = key[idx]
        for tau in enumerate_partitions(size):
            need = Counter(s * t for t in tau)
            if all(remaining[p] >= c for p, c in need.items()):
                acc.append(tau)
                rec(idx + 1, remaining - need, acc)
                acc.pop()

    rec(0, Counter(rho), [])
    return tuple(out)


def modes_bruteforce(rho, sym: Symbol) -> set:
    """Oracle: enumerate labeled maps variable -> orbit, keep the admissible
    ones and collapse them to their per-orbit partitions."""
    rho = parse_partition(rho)
    slots = list(sym.entries)
    found = set()
    for assign in itertools.product(range(len(slots)), repeat=len(rho)):
        parts = [[] for _ in slots]
        ok = True
        for part, j in zip(rho, assign):
            s = slots[j][0].degree
            if part % s:
                ok = False
                break
            parts[j].append(part // s)
        if not ok:
            continue
        shapes = tuple(Partition(p) for p in parts)
        if all(tau.size == lam.size for tau, (_, lam) in zip(shapes, slots)):
            found.add(shapes)
    return found


def q_weight_poly(m: Mode, c: Symbol):
    """(rational constant, polynomial) with Q(m,c) = constant * polynomial(q)."""
    const = Fraction(1)
    poly = IntPolyQ([1])
    for (o, tau), (o2, nu) in zip(m.targets, c.entries):
        assert o == o2
        const /= z_order(tau)
        poly = poly * green_poly(nu, tau).subs_power(o.degree)
    return const, poly


def q_weight(m: Mode, c: Symbol, q: int | None = None) -> Fraction:
    const, poly = q_weight_poly(m, c)
    return const * eval_poly(poly, c.q if q is None else q)


def chi_weight(m: Mode, e: Symbol) -> Fraction:
    out = Fraction(1)
    for (o, tau), (o2, nu) in zip(m.targets, e.entries):
        assert o == o2
        out *= Fraction(sym_char(nu, tau), z_order(tau))
    return out


def variable_targets(m: Mode) -> dict:
    """{d: tuple of target orbits} for the degree-d variables (sorted)."""
    out: dict = {}
    for o, tau in m.targets:
        for part in tau:
            out.setdefault(part * o.degree, []).append(o)
    return {d: tuple(sorted(v)) for d, v in sorted(out.items())}


def h_vector(m: Mode, e: Symbol, q: int | None = None, root_choice=None) -> dict:
    """{d: tuple of h_{dt}} with h = c * (q^d - 1)/(q^s - 1) for a root c of
    the simplex (degree s) receiving the variable.

    ``root_choice`` optionally maps an orbit to the member of that orbit to
    use instead of the canonical (minimal) root.
    """
    q = e.q if q is None else q
    out = {}
    for d, orbits in variable_targets(m).items():
        hs = []
        for o in orbits:
            root = o.root if root_choice is None else root_choice.get(o, o.root)
            hs.append(root * ((q**d - 1) // (q**o.degree - 1)))
        out[d] = tuple(hs)
    return out
