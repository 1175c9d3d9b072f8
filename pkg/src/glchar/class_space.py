"""Conjugacy classes of GL(n, q): symbols, enumeration, sizes, the 42 class
types for n = 5, and representative matrices in rational canonical form.
"""
from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exact_arith import IntPolyQ, eval_poly, gl_order_poly
from .finite_field import get_field, prime_power
from .frobenius_orbits import FrobOrbit, FieldTower, canonical_orbit, enumerate_orbits, min_poly
from .partitions import Partition, conjugate, enumerate_partitions, format_partition, parse_partition

__all__ = [
    "Symbol",
    "ClassSymbol",
    "DualSymbol",
    "TYPE_TEMPLATES",
    "TYPE_LABELS",
    "enumerate_symbols",
    "enumerate_classes",
    "identity_class",
    "class_size",
    "class_size_poly",
    "centralizer_poly",
    "classify_type",
    "type_parameters",
    "symbol_from_type",
    "parse_type_spec",
    "type_census",
    "representative_matrix",
    "check_representative",
]


@dataclass(frozen=True)
class Symbol:
    """Map from Frobenius orbits to nonempty partitions, stored as a tuple of
    (orbit, partition) pairs sorted by orbit."""

    q: int
    entries: tuple

    dual = False

    def __post_init__(self):
        norm = []
        for orb, lam in self.entries:
            lam = parse_partition(lam)
            if not lam:
                raise ValueError("symbol entries carry nonempty partitions")
            if orb.q != self.q:
                raise ValueError("orbit belongs to a different q")
            norm.append((orb, lam))
        norm.sort(key=lambda e: (e[0].degree, e[0].root))
        if len({o for o, _ in norm}) != len(norm):
            raise ValueError("repeated orbit in symbol")
        object.__setattr__(self, "entries", tuple(norm))

    @property
    def n(self) -> int:
        return sum(o.degree * lam.size for o, lam in self.entries)

    def orbits(self) -> tuple:
        return tuple(o for o, _ in self.entries)

    def partition_of(self, orbit) -> Partition:
        for o, lam in self.entries:
            if o == orbit:
                return lam
        return Partition()

    def pattern(self) -> tuple:
        """Sorted multiset of (degree, partition) pairs."""
        return tuple(sorted((o.degree, tuple(lam)) for o, lam in self.entries))

    def to_json(self) -> dict:
        out = {"orbits": [{"deg": o.degree, "root": o.root, "partition": format_partition(lam)}
                          for o, lam in self.entries]}
        if self.dual:
            out["dual"] = True
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj, q: int):
        if isinstance(obj, str):
            obj = json.loads(obj)
        if obj.get("dual", False) and cls is ClassSymbol:
            cls = DualSymbol
        entries = tuple((FrobOrbit(e["deg"], e["root"], q), parse_partition(e["partition"]))
                        for e in obj["orbits"])
        return cls(q, entries)

    def __str__(self):
        letter = "g" if self.dual else "f"
        body = ".".join(f"{letter}[{o}]^{format_partition(lam)}" for o, lam in self.entries)
        return body

    def sort_key(self):
        if self.n == 5:
            label, params = type_parameters(self)
            return (0, TYPE_LABELS.index(label), tuple(params.values()))
        return (1, self.pattern(), tuple((o.degree, o.root) for o, _ in self.entries))


class ClassSymbol(Symbol):
    """Conjugacy class (... f^nu(f) ...)."""


class DualSymbol(Symbol):
    """Dual class (... g^nu(g) ...), the label of an irreducible character."""

    dual = True


# ---------------------------------------------------------------- enumeration


def enumerate_symbols(q: int, n: int, dual: bool = False) -> tuple:
    """All symbols of total weight n, ordered by sort_key."""
    prime_power(q)
    if not 1 <= n <= 5:
        raise ValueError("n must lie in [1, 5]")
    return _enumerate(q, n, dual)


@lru_cache(maxsize=None)
def _enumerate(q: int, n: int, dual: bool) -> tuple:
    orbits = [o for s in range(1, n + 1) for o in enumerate_orbits(q, s)]
    cls = DualSymbol if dual else ClassSymbol
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(cls(q, tuple(acc)))
            return
        for idx in range(start, len(orbits)):
            o = orbits[idx]
            if o.degree > remaining:
                break
            for m in range(1, remaining // o.degree + 1):
                for lam in enumerate_partitions(m):
                    acc.append((o, lam))
                    rec(idx + 1, remaining - o.degree * m, acc)
                    acc.pop()

    rec(0, n, [])
    out.sort(key=lambda s: s.sort_key())
    return tuple(out)


def enumerate_classes(q: int, n: int = 5) -> tuple:
    return enumerate_symbols(q, n, dual=False)


def identity_class(q: int, n: int) -> ClassSymbol:
    """(t - 1)^{1^n}: the orbit of exponent 0 at degree 1."""
    return ClassSymbol(q, ((FrobOrbit(1, 0, q), Partition([1] * n)),))


# ---------------------------------------------------------------- sizes


def _a_poly(lam: Partition) -> IntPolyQ:
    """Centralizer order in GL of the unipotent class of type lam."""
    conj = conjugate(lam)
    mult = lam.multiplicities()
    expo = sum(c * c for c in conj) - sum(m * (m + 1) // 2 for m in mult.values())
    out = IntPolyQ.monomial(expo)
    for m in mult.values():
        for j in range(1, m + 1):
            out = out * (IntPolyQ.monomial(j) - 1)
    return out


def centralizer_poly(sym: Symbol) -> IntPolyQ:
    out = IntPolyQ([1])
    for o, lam in sym.entries:
        out = out * _a_poly(lam).subs_power(o.degree)
    return out


def class_size_poly(sym: Symbol) -> IntPolyQ:
    """|GL(n,q)| / |centralizer| as a polynomial in q (depends only on the pattern)."""
    return gl_order_poly(sym.n).exact_div(centralizer_poly(sym))


def class_size(sym: Symbol, q: int | None = None) -> int:
    q = sym.q if q is None else q
    G = eval_poly(gl_order_poly(sym.n), q)
    C = eval_poly(centralizer_poly(sym), q)
    if G % C:
        raise ArithmeticError("centralizer order does not divide |G|")
    return G // C


# ---------------------------------------------------------------- n = 5 types

_P = parse_partition

TYPE_TEMPLATES: dict = {}
for _i, _lam in enumerate(enumerate_partitions(5), 1):
    TYPE_TEMPLATES[f"A{_i}"] = ((1, _lam),)
for _i, _lam in enumerate(enumerate_partitions(4), 1):
    TYPE_TEMPLATES[f"B{_i}"] = ((1, _lam), (1, _P("1")))
for _i, (_x, _y) in enumerate([("1^3", "1^2"), ("2.1", "1^2"), ("3", "1^2"),
                               ("1^3", "2"), ("2.1", "2"), ("3", "2")], 1):
    TYPE_TEMPLATES[f"C{_i}"] = ((1, _P(_x)), (1, _P(_y)))
for _i, _lam in enumerate(enumerate_partitions(3), 1):
    TYPE_TEMPLATES[f"D{_i}"] = ((1, _lam), (1, _P("1")), (1, _P("1")))
for _i, (_x, _y) in enumerate([("1^2", "1^2"), ("2", "1^2"), ("2", "2")], 1):
    TYPE_TEMPLATES[f"E{_i}"] = ((1, _P(_x)), (1, _P(_y)), (1, _P("1")))
for _i, _lam in enumerate(enumerate_partitions(2), 1):
    TYPE_TEMPLATES[f"F{_i}"] = ((1, _lam),) + ((1, _P("1")),) * 3
TYPE_TEMPLATES["G"] = ((1, _P("1")),) * 5
for _i, _lam in enumerate(enumerate_partitions(3), 1):
    TYPE_TEMPLATES[f"H{_i}"] = ((1, _lam), (2, _P("1")))
for _i, _lam in enumerate(enumerate_partitions(2), 1):
    TYPE_TEMPLATES[f"I{_i}"] = ((1, _lam), (1, _P("1")), (2, _P("1")))
TYPE_TEMPLATES["J"] = ((1, _P("1")),) * 3 + ((2, _P("1")),)
for _i, _lam in enumerate(enumerate_partitions(2), 1):
    TYPE_TEMPLATES[f"K{_i}"] = ((1, _P("1")), (2, _lam))
TYPE_TEMPLATES["L"] = ((1, _P("1")), (2, _P("1")), (2, _P("1")))
for _i, _lam in enumerate(enumerate_partitions(2), 1):
    TYPE_TEMPLATES[f"M{_i}"] = ((1, _lam), (3, _P("1")))
TYPE_TEMPLATES["N"] = ((1, _P("1")), (1, _P("1")), (3, _P("1")))
TYPE_TEMPLATES["O"] = ((2, _P("1")), (3, _P("1")))
TYPE_TEMPLATES["P"] = ((1, _P("1")), (4, _P("1")))
TYPE_TEMPLATES["Q"] = ((5, _P("1")),)

TYPE_LABELS = tuple(TYPE_TEMPLATES)
_PATTERN_TO_LABEL = {
    tuple(sorted((d, tuple(lam)) for d, lam in tpl)): label for label, tpl in TYPE_TEMPLATES.items()
}
CLASS_LETTERS = "abcde"
DUAL_LETTERS = "ijklm"


def classify_type(sym: Symbol) -> str:
    """Type label (A1 ... Q) of an n = 5 symbol; duals use the same labels."""
    if sym.n != 5:
        raise ValueError("type labels are defined for n = 5")
    try:
        return _PATTERN_TO_LABEL[sym.pattern()]
    except KeyError:
        raise ValueError(f"unknown class pattern {sym.pattern()}") from None


def _slot_assignment(sym: Symbol, label: str):
    """Orbits in template slot order (equal slots filled by increasing root)."""
    pool = list(sym.entries)
    slots = []
    for d, lam in TYPE_TEMPLATES[label]:
        for idx, (o, mu) in enumerate(pool):
            if o.degree == d and mu == lam:
                slots.append(o)
                pool.pop(idx)
                break
    return slots


def type_parameters(sym: Symbol):
    """(label, {letter: canonical root}) in printed slot order."""
    label = classify_type(sym)
    letters = DUAL_LETTERS if sym.dual else CLASS_LETTERS
    return label, {letters[i]: o.root for i, o in enumerate(_slot_assignment(sym, label))}


def symbol_from_type(label: str, params: dict, q: int, dual: bool = False) -> Symbol:
    """Build the n = 5 symbol of a given type; each parameter is an exponent
    taken modulo q^deg - 1 and must have exact degree deg."""
    label = label.rstrip("'")
    if label not in TYPE_TEMPLATES:
        raise ValueError(f"unknown type {label!r}")
    letters = DUAL_LETTERS if dual else CLASS_LETTERS
    tpl = TYPE_TEMPLATES[label]
    expected = set(letters[: len(tpl)])
    if set(params) != expected:
        raise ValueError(f"type {label} takes parameters {sorted(expected)}, got {sorted(params)}")
    entries = []
    for i, (d, lam) in enumerate(tpl):
        orb = canonical_orbit(q, d, int(params[letters[i]]))
        if orb.degree != d:
            raise ValueError(f"parameter {letters[i]}={params[letters[i]]} does not have exact degree {d}")
        entries.append((orb, lam))
    cls = DualSymbol if dual else ClassSymbol
    return cls(q, tuple(entries))


_SPEC = re.compile(r"^\s*([A-Q]\d?)('?)\s*(?::\s*(.*))?$")


def parse_type_spec(text: str, q: int, dual: bool | None = None) -> Symbol:
    """Parse ``"E2:a=0,b=1,c=2"`` or ``"C1':i=1,j=2"``; JSON symbols are accepted too."""
    text = text.strip()
    if text.startswith("{"):
        return ClassSymbol.from_json(text, q) if not dual else DualSymbol.from_json(text, q)
    m = _SPEC.match(text)
    if not m:
        raise ValueError(f"cannot parse symbol {text!r}")
    label, prime, rest = m.group(1), m.group(2), m.group(3) or ""
    is_dual = bool(prime) if dual is None else dual
    params = {}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, _, val = item.partition("=")
        params[key.strip()] = int(val)
    return symbol_from_type(label, params, q, dual=is_dual)


def type_census(symbols) -> dict:
    """{label: count} in the fixed type order, nonzero entries only."""
    c = Counter(classify_type(s) for s in symbols)
    return {lab: c[lab] for lab in TYPE_LABELS if c[lab]}


# ---------------------------------------------------------------- matrices


def _companion(poly, F) -> np.ndarray:
    """Companion matrix with ones on the subdiagonal and -coefficients in the last column."""
    s = len(poly) - 1
    C = np.zeros((s, s), dtype=np.int64)
    for i in range(1, s):
        C[i, i - 1] = 1
    for i in range(s):
        C[i, s - 1] = F.neg[poly[i]]
    return C


def representative_matrix(sym: Symbol, tower: FieldTower) -> np.ndarray:
    """Block-diagonal rational canonical form: for each f and each part m of
    nu(f), an m x m block matrix with the companion U(f) on the diagonal and
    identity blocks on the subdiagonal."""
    F = get_field(sym.q)
    n = sym.n
    A = np.zeros((n, n), dtype=np.int64)
    pos = 0
    for o, lam in sym.entries:
        U = _companion(min_poly(o, tower), F)
        s = o.degree
        for m in lam:
            for b in range(m):
                r = pos + b * s
                A[r:r + s, r:r + s] = U
                if b:
                    A[r:r + s, r - s:r] = np.eye(s, dtype=np.int64)
            pos += m * s
    return A


def _mat_poly(poly, A, F) -> np.ndarray:
    n = A.shape[0]
    out = np.zeros_like(A)
    for c in reversed(poly):
        out = F.matmul(out, A)
        out = out.copy()
        for i in range(n):
            out[i, i] = F.add[out[i, i], c]
    return out


def check_representative(A: np.ndarray, sym: Symbol, tower: FieldTower) -> bool:
    """Verify the primary decomposition of A against the symbol through the
    ranks of f(A)^i for every f in the symbol."""
    F = get_field(sym.q)
    n = A.shape[0]
    if F.rank(A[None])[0] != n:
        return False
    covered = 0
    for o, lam in sym.entries:
        B = _mat_poly(min_poly(o, tower), A, F)
        P = np.eye(n, dtype=np.int64)
        conj = conjugate(lam)
        prev = n
        for i in range(1, len(conj) + 2):
            P = F.matmul(P, B)
            r = int(F.rank(P[None])[0])
            # dim ker f(A)^i - dim ker f(A)^(i-1) = deg f * (number of parts >= i)
            expect = o.degree * (conj[i - 1] if i <= len(conj) else 0)
            if prev - r != expect:
                return False
            prev = r
        covered += o.degree * lam.size
    return covered == n
