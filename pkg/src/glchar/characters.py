"""Irreducible characters of GL(n, q) as exact cyclotomic sums.

Every value is assembled from basic characters: for a partition rho of n, a
mode into the dual class fixes an exponent vector h, a mode into the class
fixes the field elements xi the variables are evaluated at, and the rho-part
is a permanent of exponential sums S_d(h : xi).
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .class_space import ClassSymbol, DualSymbol, Symbol, enumerate_classes, identity_class
from .dual_space import degree, enumerate_duals
from .exact_arith import CycloSum, common_modulus
from .modes import chi_weight, h_vector, modes_into, q_weight, variable_targets
from .partitions import enumerate_partitions, parse_partition

__all__ = [
    "s_sum",
    "basic_rho_part",
    "basic_value",
    "char_value",
    "char_degree_check",
    "CharacterTable",
    "full_table",
    "NonIntegralValue",
]


class NonIntegralValue(ArithmeticError):
    """A character value with a surviving denominator (engine bug)."""


def _modulus(q: int, n: int) -> int:
    return common_modulus(q, n)


def s_sum(d: int, k: int, target, q: int, M: int | None = None) -> CycloSum:
    """S_d(k : xi) = sum_{u<d} eps_s^(k a q^u) for xi = (s, a), s | d."""
    s, a = target
    if d % s:
        raise ValueError("the target level must divide the variable degree")
    M = M or _modulus(q, d)
    return CycloSum(M, Counter(_s_exponents(d, k, s, a, q, M)))


def _s_exponents(d, k, s, a, q, M):
    qs = q**s - 1
    step = M // qs
    return [step * ((k * a * q**u) % qs) for u in range(d)]


@lru_cache(maxsize=1 << 16)
def _perm_factor(d: int, hs: tuple, targets: tuple, q: int, M: int) -> tuple:
    """Permanent sum_sigma prod_t S_d(h_t : xi_sigma(t)) as (exp, count) pairs."""
    r = len(hs)
    table = [[_s_exponents(d, h, s, a, q, M) for (s, a) in targets] for h in hs]
    acc = Counter()
    for sigma in itertools.permutations(range(r)):
        rows = [table[t][sigma[t]] for t in range(r)]
        for combo in itertools.product(*rows):
            acc[sum(combo) % M] += 1
    return tuple(sorted(acc.items()))


def _convolve(x: dict, y, M: int) -> dict:
    out: dict = {}
    for a, c in x.items():
        for b, e in y:
            t = (a + b) % M
            out[t] = out.get(t, 0) + c * e
    return out


def _rho_part_terms(h: dict, xi: dict, q: int, M: int) -> dict:
    acc = {0: 1}
    for d, hs in h.items():
        acc = _convolve(acc, _perm_factor(d, hs, xi[d], q, M), M)
    return acc


def basic_rho_part(rho, h: dict, assignment: dict, q: int, M: int | None = None) -> CycloSum:
    """prod_d sum over permutations of prod_t S_d(h_{dt} : xi_{d sigma(t)}).

    ``h`` maps d to the tuple of exponents of the degree-d variables and
    ``assignment`` maps d to the matching tuple of (level, root) targets.
    """
    rho = parse_partition(rho)
    M = M or _modulus(q, rho.size)
    for d, r in rho.multiplicities().items():
        if len(h.get(d, ())) != r or len(assignment.get(d, ())) != r:
            raise ValueError(f"h / assignment do not match the {r} variables of degree {d}")
    h = {d: tuple(v) for d, v in sorted(h.items())}
    xi = {d: tuple(tuple(t) for t in v) for d, v in assignment.items()}
    return CycloSum(M, _rho_part_terms(h, xi, q, M))


def _xi(mode) -> dict:
    return {d: tuple((o.degree, o.root) for o in orbits) for d, orbits in variable_targets(mode).items()}


def basic_value(rho, h: dict, c: Symbol, q: int | None = None, M: int | None = None) -> CycloSum:
    """B^rho(h)(c) = sum over modes m of rho into c of Q(m,c) * rho-part."""
    q = c.q if q is None else q
    M = M or _modulus(q, c.n)
    total = CycloSum.zero(M)
    for m in modes_into(rho, c):
        total = total + basic_rho_part(rho, h, _xi(m), q, M) * q_weight(m, c, q)
    return total


# ---------------------------------------------------------------- assembly


@dataclass(frozen=True)
class _DualData:
    sign: int
    per_rho: tuple  # ((rho, ((weight, h_items), ...)), ...)


@dataclass(frozen=True)
class _ClassData:
    per_rho: dict  # rho -> ((weight, xi), ...)


def _dual_data(e: DualSymbol, root_choice=None) -> _DualData:
    sign = (-1) ** (e.n - sum(lam.size for _, lam in e.entries))
    per = []
    for rho in enumerate_partitions(e.n):
        merged: dict = {}
        for m in modes_into(rho, e):
            w = chi_weight(m, e)
            if not w:
                continue
            key = tuple(sorted(h_vector(m, e, root_choice=root_choice).items()))
            merged[key] = merged.get(key, 0) + w
        items = tuple((w, key) for key, w in merged.items() if w)
        if items:
            per.append((rho, items))
    return _DualData(sign, tuple(per))


def _class_data(c: ClassSymbol) -> _ClassData:
    per = {}
    for rho in enumerate_partitions(c.n):
        items = []
        for m in modes_into(rho, c):
            w = q_weight(m, c)
            if w:
                items.append((w, _xi(m)))
        if items:
            per[rho] = tuple(items)
    return _ClassData(per)


def _cell(ed: _DualData, cd: _ClassData, q: int, M: int) -> dict:
    acc: dict = {}
    for rho, e_items in ed.per_rho:
        c_items = cd.per_rho.get(rho)
        if not c_items:
            continue
        for we, h_items in e_items:
            h = dict(h_items)
            for wc, xi in c_items:
                w = we * wc
                for t, cnt in _rho_part_terms(h, xi, q, M).items():
                    v = acc.get(t, 0) + w * cnt
                    if v:
                        acc[t] = v
                    else:
                        del acc[t]
    if ed.sign < 0:
        acc = {t: -v for t, v in acc.items()}
    return acc


def _finish(acc: dict, M: int, where: str) -> CycloSum:
    terms = {}
    for t, v in acc.items():
        v = Fraction(v)
        if v.denominator != 1:
            raise NonIntegralValue(f"non-integral coefficient {v} at {where}")
        terms[t] = v.numerator
    return CycloSum(M, terms)


def char_value(e: DualSymbol, c: ClassSymbol, q: int | None = None, root_choice=None) -> CycloSum:
    """chi_e(c) as an exact cyclotomic sum over the common modulus."""
    if e.q != c.q or e.n != c.n:
        raise ValueError("character and class belong to different groups")
    q = e.q if q is None else q
    M = _modulus(q, e.n)
    acc = _cell(_dual_data(e, root_choice), _class_data(c), q, M)
    return _finish(acc, M, f"({e}, {c})")


def char_degree_check(e: DualSymbol, q: int | None = None) -> bool:
    """chi_e(identity) equals the degree formula."""
    q = e.q if q is None else q
    v = char_value(e, identity_class(q, e.n), q).rational_value()
    return v is not None and v == degree(e, q)


@dataclass(frozen=True)
class CharacterTable:
    q: int
    n: int
    modulus: int
    duals: tuple
    classes: tuple
    values: tuple  # values[i][j] = chi_{duals[i]}(classes[j])

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "classes": [c.to_json() for c in self.classes],
            "chars": [e.to_json() for e in self.duals],
            "values": [[v.to_json() for v in row] for row in self.values],
        }


def _rows(args):
    q, n, M, idxs, root_choice = args
    duals = enumerate_duals(q, n)
    cdata = [_class_data(c) for c in enumerate_classes(q, n)]
    classes = enumerate_classes(q, n)
    out = []
    for i in idxs:
        ed = _dual_data(duals[i], root_choice)
        out.append(tuple(_finish(_cell(ed, cd, q, M), M, f"({duals[i]}, {classes[j]})")
                         for j, cd in enumerate(cdata)))
    return out


def full_table(q: int, n: int = 5, workers: int = 1, root_choice=None, progress=None) -> CharacterTable:
    """Complete table; rows in dual-class order, columns in class order.

    ``workers`` > 1 distributes rows over processes; the result does not
    depend on the number of workers.
    """
    duals = enumerate_duals(q, n)
    classes = enumerate_classes(q, n)
    M = _modulus(q, n)
    rows: list = []
    if workers <= 1:
        cdata = [_class_data(c) for c in classes]
        for i, e in enumerate(duals):
            ed = _dual_data(e, root_choice)
            rows.append(tuple(_finish(_cell(ed, cd, q, M), M, f"({e}, {c})")
                              for c, cd in zip(classes, cdata)))
            if progress:
                progress(i + 1, len(duals))
    else:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [list(range(k, len(duals), workers)) for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_rows, [(q, n, M, ch, root_choice) for ch in chunks]))
        by_index = {}
        for ch, res in zip(chunks, results):
            for i, row in zip(ch, res):
                by_index[i] = row
        rows = [by_index[i] for i in range(len(duals))]
    return CharacterTable(q, n, M, duals, classes, tuple(rows))
