"""Exact scalars: integer polynomials in q, rational functions in q, formal
cyclotomic sums over a fixed root of unity, and modular certification of
cyclotomic identities.
"""
from __future__ import annotations

import json
import math
import random
from fractions import Fraction
from functools import lru_cache

from sympy import factorint, isprime

__all__ = [
    "IntPolyQ",
    "RatFuncQ",
    "CycloSum",
    "ModularContext",
    "CertificationError",
    "eval_poly",
    "cyclo_mul",
    "certify_value",
    "common_modulus",
    "eps_exponent",
    "psi",
    "phi_signed",
    "gl_order_poly",
    "find_contexts",
]

# 2 * n^2 for n = 5
MAX_DEGREE = 50


class CertificationError(RuntimeError):
    """Raised when a modular certification cannot be configured."""


class IntPolyQ:
    """Polynomial in the formal symbol q with integer coefficients.

    ``coeffs[i]`` is the coefficient of q^i; trailing zeros are stripped.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if any(Fraction(x).denominator != 1 for x in coeffs):
            raise ValueError("IntPolyQ coefficients must be integers")
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        if len(c) > MAX_DEGREE + 1:
            raise ValueError(f"degree {len(c) - 1} exceeds bound {MAX_DEGREE}")
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolyQ is immutable")

    def __reduce__(self):
        return (IntPolyQ, (self.coeffs,))

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def q(cls):
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, q0):
        return eval_poly(self, q0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolyQ([other])
        return isinstance(other, IntPolyQ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _lift(self, other):
        if isinstance(other, IntPolyQ):
            return other
        if isinstance(other, int):
            return IntPolyQ([other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolyQ([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolyQ([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPolyQ()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolyQ([1])
        for _ in range(k):
            out = out * self
        return out

    def subs_power(self, d: int) -> "IntPolyQ":
        """P(q^d)."""
        if d == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * d + 1)
        for i, c in enumerate(self.coeffs):
            out[i * d] = c
        return IntPolyQ(out)

    def divmod(self, other: "IntPolyQ"):
        """Division over Q; returns (quotient, remainder) with Fraction coeffs."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        quo = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = Fraction(other.leading())
        for k in range(len(quo) - 1, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        while rem and rem[-1] == 0:
            rem.pop()
        return quo, rem

    def exact_div(self, other: "IntPolyQ") -> "IntPolyQ":
        quo, rem = self.divmod(other)
        if rem or any(c.denominator != 1 for c in quo):
            raise ArithmeticError(f"{other} does not divide {self} over Z")
        return IntPolyQ([int(c) for c in quo])

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def to_list(self) -> list:
        return list(self.coeffs)

    def __repr__(self):
        return f"IntPolyQ({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)


def format_poly(coeffs, var="q") -> str:
    """Ascending-power text, e.g. ``1 + q + q^2`` or ``1 - q``."""
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


def eval_poly(P: IntPolyQ, q0: int) -> int:
    if q0 < 2:
        raise ValueError("evaluation point must be >= 2")
    acc = 0
    for c in reversed(P.coeffs):
        acc = acc * q0 + c
    return acc


def _frac_poly_gcd(a, b):
    """Monic gcd of two Fraction-coefficient polynomials (ascending lists)."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while b:
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        r = list(a)
        while len(r) >= len(b) and any(r):
            c = r[-1] / b[-1]
            shift = len(r) - len(b)
            for j, y in enumerate(b):
                r[shift + j] -= c * y
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        a, b = b, r
    while a and a[-1] == 0:
        a.pop()
    lead = a[-1]
    return [x / lead for x in a]


def _primitive_int(fr_coeffs):
    den = 1
    for c in fr_coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in fr_coeffs]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    if ints and ints[-1] < 0:
        ints = [-x for x in ints]
    return IntPolyQ(ints)


class RatFuncQ:
    """Reduced ratio num/den of integer polynomials in q (den has positive lead)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, IntPolyQ) else IntPolyQ([num])
        den = IntPolyQ([1]) if den is None else (den if isinstance(den, IntPolyQ) else IntPolyQ([den]))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = IntPolyQ(), IntPolyQ([1])
        else:
            g = _frac_poly_gcd(num.coeffs, den.coeffs)
            if len(g) > 1:
                gp = _primitive_int(g)
                num = _exact_over_q(num, gp)
                den = _exact_over_q(den, gp)
            c = math.gcd(num.content(), den.content())
            if den.leading() < 0:
                c = -c
            num = IntPolyQ([x // c for x in num.coeffs])
            den = IntPolyQ([x // c for x in den.coeffs])
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFuncQ is immutable")

    def __reduce__(self):
        return (RatFuncQ, (self.num, self.den))

    def __mul__(self, other):
        other = other if isinstance(other, RatFuncQ) else RatFuncQ(other)
        return RatFuncQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = other if isinstance(other, RatFuncQ) else RatFuncQ(other)
        return RatFuncQ(self.num * other.den, self.den * other.num)

    def __add__(self, other):
        other = other if isinstance(other, RatFuncQ) else RatFuncQ(other)
        return RatFuncQ(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFuncQ(-self.num, self.den)

    def __eq__(self, other):
        other = other if isinstance(other, RatFuncQ) else RatFuncQ(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def subs_power(self, d: int) -> "RatFuncQ":
        return RatFuncQ(self.num.subs_power(d), self.den.subs_power(d))

    def is_polynomial(self) -> bool:
        return self.den.degree == 0 and abs(self.den.leading()) == 1

    def as_poly(self) -> IntPolyQ:
        if not self.is_polynomial():
            raise ArithmeticError(f"{self} is not a polynomial")
        return self.num * self.den.leading()

    def at(self, q0: int) -> Fraction:
        return Fraction(eval_poly(self.num, q0), eval_poly(self.den, q0))

    def __repr__(self):
        return f"RatFuncQ({self.num!s} / {self.den!s})"

    __str__ = __repr__


def _exact_over_q(p: IntPolyQ, d: IntPolyQ) -> IntPolyQ:
    quo, rem = p.divmod(d)
    if rem:
        raise ArithmeticError("non-exact division")
    return _as_int_poly(quo)


def _as_int_poly(fr):
    if any(c.denominator != 1 for c in fr):
        # divisor was primitive, Gauss's lemma keeps the quotient integral
        raise ArithmeticError("non-integral quotient")
    return IntPolyQ([int(c) for c in fr])


def psi(n: int) -> IntPolyQ:
    """prod_{i=1}^{n} (q^i - 1)."""
    out = IntPolyQ([1])
    for i in range(1, n + 1):
        out = out * (IntPolyQ.monomial(i) - 1)
    return out


def phi_signed(n: int) -> IntPolyQ:
    """(-1)^n psi(n) = prod_{i=1}^{n} (1 - q^i)."""
    return psi(n) * (-1) ** n


def gl_order_poly(n: int) -> IntPolyQ:
    return IntPolyQ.monomial(n * (n - 1) // 2) * psi(n)


# ---------------------------------------------------------------- cyclotomic


def common_modulus(q: int, n: int) -> int:
    """lcm of q^i - 1 for 1 <= i <= n."""
    m = 1
    for i in range(1, n + 1):
        m = math.lcm(m, q**i - 1)
    return m


def eps_exponent(M: int, q: int, s: int, x: int) -> int:
    """Exponent t with eps_s^x = zeta_M^t, where eps_s = zeta_M^(M/(q^s-1))."""
    qs = q**s - 1
    return (M // qs) * (x % qs) % M


class CycloSum:
    """Finite formal sum sum_t c_t zeta_M^t with rational c_t.

    Exponents are reduced into [0, M); zero coefficients are never stored.
    Equality (``==``) is formal; use :func:`certify_value` for equality of
    algebraic numbers.
    """

    __slots__ = ("modulus", "terms")

    def __init__(self, modulus: int, terms=None):
        if modulus <= 0:
            raise ValueError("modulus must be positive")
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for t, c in items:
                if c:
                    t %= modulus
                    v = clean.get(t, 0) + c
                    if v:
                        clean[t] = v
                    else:
                        clean.pop(t, None)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("CycloSum is immutable")

    def __reduce__(self):
        return (CycloSum, (self.modulus, self.terms))

    @classmethod
    def _raw(cls, modulus, clean):
        obj = object.__new__(cls)
        object.__setattr__(obj, "modulus", modulus)
        object.__setattr__(obj, "terms", clean)
        return obj

    @classmethod
    def zero(cls, modulus):
        return cls._raw(modulus, {})

    @classmethod
    def scalar(cls, modulus, c):
        return cls(modulus, {0: c})

    @classmethod
    def monomial(cls, modulus, t, c=1):
        return cls(modulus, {t: c})

    def _check(self, other):
        if not isinstance(other, CycloSum):
            return CycloSum.scalar(self.modulus, other)
        if other.modulus != self.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            v = out.get(t, 0) + c
            if v:
                out[t] = v
            else:
                del out[t]
        return CycloSum._raw(self.modulus, out)

    __radd__ = __add__

    def __neg__(self):
        return CycloSum._raw(self.modulus, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CycloSum):
            if not other:
                return CycloSum.zero(self.modulus)
            return CycloSum._raw(self.modulus, {t: c * other for t, c in self.terms.items()})
        return cyclo_mul(self, other)

    __rmul__ = __mul__

    def conj(self) -> "CycloSum":
        M = self.modulus
        return CycloSum._raw(M, {(-t) % M: c for t, c in self.terms.items()})

    def galois(self, j: int) -> "CycloSum":
        """Apply zeta -> zeta^j (j coprime to the modulus)."""
        M = self.modulus
        if math.gcd(j, M) != 1:
            raise ValueError("Galois exponent must be coprime to the modulus")
        return CycloSum(M, {(t * j) % M: c for t, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, CycloSum):
            other = CycloSum.scalar(self.modulus, other)
        return self.modulus == other.modulus and self.terms == other.terms

    def __hash__(self):
        return hash((self.modulus, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.terms.values())

    def denominator(self) -> int:
        d = 1
        for c in self.terms.values():
            d = math.lcm(d, Fraction(c).denominator)
        return d

    def l1_norm(self) -> Fraction:
        return sum((abs(Fraction(c)) for c in self.terms.values()), Fraction(0))

    def constant_term(self):
        return self.terms.get(0, 0)

    def rational_value(self):
        """The value if this is formally a rational number, else None."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) == {0}:
            return Fraction(self.terms[0])
        return None

    def to_complex(self) -> complex:
        M = self.modulus
        return sum(
            (float(c) * complex(math.cos(2 * math.pi * t / M), math.sin(2 * math.pi * t / M))
             for t, c in self.terms.items()),
            0j,
        )

    def mod_eval(self, ctx: "ModularContext", j: int = 1) -> int:
        """Image under zeta -> ctx.zeta^j in GF(p); the coefficients' denominators must be units."""
        p = ctx.p
        acc = 0
        for t, c in self.terms.items():
            c = Fraction(c)
            v = c.numerator * pow(c.denominator, -1, p) if c.denominator != 1 else c.numerator
            acc += v * ctx.power(t * j)
        return acc % p

    def reduce_conductor(self) -> "CycloSum":
        """Rewrite over the smallest modulus M' | M containing every exponent."""
        M = self.modulus
        g = M
        for t in self.terms:
            g = math.gcd(g, t)
        if g in (0, 1) or not self.terms:
            return self if self.terms else CycloSum.zero(1)
        return CycloSum._raw(M // g, {t // g: c for t, c in self.terms.items()})

    def lift(self, modulus: int) -> "CycloSum":
        """Re-express over a multiple of the current modulus."""
        if modulus % self.modulus:
            raise ValueError("target modulus must be a multiple")
        k = modulus // self.modulus
        return CycloSum._raw(modulus, {t * k: c for t, c in self.terms.items()})

    def to_json(self) -> dict:
        out = []
        for t in sorted(self.terms):
            c = Fraction(self.terms[t])
            out.append({"exp": t, "num": c.numerator, "den": c.denominator})
        return {"modulus": self.modulus, "terms": out}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj) -> "CycloSum":
        if isinstance(obj, str):
            obj = json.loads(obj)
        terms = {}
        for term in obj["terms"]:
            c = Fraction(term["num"], term["den"])
            terms[term["exp"]] = c if c.denominator != 1 else c.numerator
        return cls(obj["modulus"], terms)

    def __repr__(self):
        inner = " + ".join(f"{c}*z^{t}" for t, c in sorted(self.terms.items())) or "0"
        return f"CycloSum[{self.modulus}]({inner})"


def cyclo_mul(x: CycloSum, y: CycloSum) -> CycloSum:
    if x.modulus != y.modulus:
        raise ValueError(f"modulus mismatch: {x.modulus} vs {y.modulus}")
    M = x.modulus
    out = {}
    for a, c in x.terms.items():
        for b, d in y.terms.items():
            t = (a + b) % M
            v = out.get(t, 0) + c * d
            if v:
                out[t] = v
            else:
                del out[t]
    return CycloSum._raw(M, out)


# ---------------------------------------------------------------- certification


class ModularContext:
    """A prime p = 1 (mod M) and an element of GF(p)* of exact order M."""

    __slots__ = ("p", "modulus", "zeta", "_powers")

    def __init__(self, p: int, modulus: int, zeta: int):
        if (p - 1) % modulus:
            raise ValueError("p must be 1 mod M")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "zeta", zeta)
        object.__setattr__(self, "_powers", None)
        if pow(zeta, modulus, p) != 1 or any(
            pow(zeta, modulus // r, p) == 1 for r in _prime_divisors(modulus)
        ):
            raise ValueError("zeta does not have exact order M")

    def __setattr__(self, name, value):
        raise AttributeError("ModularContext is immutable")

    def power(self, t: int) -> int:
        table = self.powers()
        return table[t % self.modulus]

    def powers(self):
        if self._powers is None:
            M, p, z = self.modulus, self.p, self.zeta
            table = [1] * M
            for i in range(1, M):
                table[i] = table[i - 1] * z % p
            object.__setattr__(self, "_powers", table)
        return self._powers

    def __repr__(self):
        return f"ModularContext(p={self.p}, M={self.modulus}, zeta={self.zeta})"


@lru_cache(maxsize=None)
def _prime_divisors(m: int) -> tuple:
    return tuple(sorted(factorint(m))) if m > 1 else ()


@lru_cache(maxsize=None)
def _contexts(modulus: int, count: int, min_p: int, seed: int) -> tuple:
    rng = random.Random(seed)
    out = []
    k = max((min_p - 1) // modulus, 1)
    while len(out) < count:
        p = k * modulus + 1
        k += 1
        if not isprime(p):
            continue
        while True:
            g = rng.randrange(2, p - 1) if p > 3 else 2
            z = pow(g, (p - 1) // modulus, p)
            if all(pow(z, modulus // r, p) != 1 for r in _prime_divisors(modulus)):
                break
        out.append(ModularContext(p, modulus, z))
        if k > 10**7 + (min_p // modulus):
            raise CertificationError(f"no usable primes found for modulus {modulus}")
    return tuple(out)


def find_contexts(modulus: int, bound, min_p: int = 2**25, seed: int = 0) -> tuple:
    """Enough contexts that the product of their primes exceeds ``bound``."""
    count = 1
    while True:
        ctxs = _contexts(modulus, count, min_p, seed)
        prod = 1
        for c in ctxs:
            prod *= c.p
        if prod > bound:
            return ctxs
        count += 1


MAX_CONJUGATES = 200_000


def certify_value(x: CycloSum, claim, bound=0) -> bool:
    """True iff x == claim as algebraic numbers.

    The difference is scaled to an element y of Z[zeta_M'] (M' its conductor)
    and evaluated at every primitive M'-th root of unity modulo primes
    p = 1 (mod M'). Vanishing at all of them means y is divisible by the
    product P of the primes; if P exceeds the L1 norm of y, every complex
    embedding of y/P has absolute value < 1, so its norm is 0 and y = 0.
    """
    if not isinstance(claim, CycloSum):
        claim = CycloSum.scalar(x.modulus, claim)
    diff = (x - claim).reduce_conductor()
    if diff.is_zero():
        return True
    den = diff.denominator()
    y = diff * den
    l1 = max(int(y.l1_norm()) + 1, int(bound) + 1)
    Mp = y.modulus
    units = [j for j in range(1, Mp + 1) if math.gcd(j, Mp) == 1] if Mp > 1 else [1]
    if len(units) > MAX_CONJUGATES:
        raise CertificationError(f"conductor {Mp} too large for full conjugate check")
    for ctx in find_contexts(Mp, l1, min_p=2**20):
        for j in units:
            if y.mod_eval(ctx, j) != 0:
                return False
    return True
