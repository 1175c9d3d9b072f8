"""Dual classes (labels of irreducible characters) and character degrees."""
from __future__ import annotations

from functools import lru_cache

from .class_space import DualSymbol, enumerate_symbols
from .exact_arith import IntPolyQ, RatFuncQ, eval_poly, gl_order_poly, phi_signed, psi
from .partitions import parse_partition

__all__ = ["enumerate_duals", "brace_poly", "degree_poly", "degree"]


def enumerate_duals(q: int, n: int = 5) -> tuple:
    return enumerate_symbols(q, n, dual=True)


@lru_cache(maxsize=None)
def _brace(lam) -> RatFuncQ:
    p = len(lam)
    num = IntPolyQ.monomial(sum(r * part for r, part in enumerate(lam)))
    for r in range(p):
        for s in range(r + 1, p):
            num = num * (1 - IntPolyQ.monomial(lam[r] - lam[s] - r + s))
    den = IntPolyQ([1])
    for r in range(p):
        den = den * phi_signed(lam[r] + p - 1 - r)
    return RatFuncQ(num, den)


def brace_poly(lam) -> RatFuncQ:
    """{lam : q} as a reduced rational function of q."""
    return _brace(parse_partition(lam))


def degree_poly(e: DualSymbol) -> IntPolyQ:
    """psi_n(q) * prod_g (-1)^|nu(g)| {nu(g) : q^deg g}, asserted to be a polynomial."""
    out = RatFuncQ(psi(e.n))
    for o, lam in e.entries:
        factor = brace_poly(lam).subs_power(o.degree)
        if lam.size % 2:
            factor = -factor
        out = out * factor
    poly = out.as_poly()
    if poly.leading() <= 0:
        raise ArithmeticError(f"degree of {e} has non-positive leading coefficient")
    return poly


def degree(e: DualSymbol, q: int | None = None) -> int:
    q = e.q if q is None else q
    d = eval_poly(degree_poly(e), q)
    if d <= 0 or eval_poly(gl_order_poly(e.n), q) % d:
        raise ArithmeticError(f"degree {d} of {e} does not divide |G|")
    return d
