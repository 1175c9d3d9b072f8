"""Published reference tables for GL(5, q) and the worked examples, read as
exact expressions and compared with engine output.

The printed tables are stored in ``data/reference_tables.json``: class types
(count and class size), dual types (count and degree), the Q(m,c) and
chi(m,e) weight tables, the basic-character rho-parts and the character
values.  Printed expressions are LaTeX fragments; they are converted to sympy
expressions in q, the type parameters (a..e on classes, i..m on duals) and
root-of-unity markers ``Z<s>(x)`` standing for eps_s^x = exp(2 pi i x/(q^s-1)).
"""
from __future__ import annotations

import json
import math
import random
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    split_symbols,
    standard_transformations,
)

from .characters import _rho_part_terms, _xi, char_value
from .class_space import (
    CLASS_LETTERS,
    DUAL_LETTERS,
    TYPE_LABELS,
    TYPE_TEMPLATES,
    class_size_poly,
    symbol_from_type,
)
from .dual_space import degree_poly
from .exact_arith import CycloSum, IntPolyQ, RatFuncQ, common_modulus
from .frobenius_orbits import enumerate_orbits
from .modes import chi_weight, h_vector, modes_into, q_weight_poly
from .partitions import enumerate_partitions

__all__ = [
    "PrintedParseError",
    "Printed",
    "FixtureCheck",
    "reference_tables",
    "parse_printed",
    "printed_ratfunc",
    "printed_cyclo",
    "orbit_count_poly",
    "type_count_poly",
    "representative",
    "random_instance",
    "class_type_checks",
    "dual_type_checks",
    "q_weight_checks",
    "chi_weight_checks",
    "example_checks",
    "basic_part_checks",
    "character_checks",
    "RHO_ORDER",
]

RHO_ORDER = enumerate_partitions(5)  # rho_1 ... rho_7
REFERENCE_Q = 7  # smallest field in which every n = 5 type occurs

_Q = sympy.Symbol("q")
_PARAMS = {c: sympy.Symbol(c) for c in CLASS_LETTERS + DUAL_LETTERS}
_EPS = {s: sympy.Function(f"Z{s}") for s in range(1, 6)}
_LOCALS = {"q": _Q, **_PARAMS, **{f"Z{s}": f for s, f in _EPS.items()}}
_TRANSFORMS = standard_transformations + (split_symbols, implicit_multiplication, convert_xor)


class PrintedParseError(ValueError):
    """A printed fragment outside the supported LaTeX subset."""


@dataclass(frozen=True)
class Printed:
    text: str
    expr: sympy.Expr
    notes: tuple = ()


@dataclass(frozen=True)
class FixtureCheck:
    """One comparison of a printed cell with the engine.

    ``location`` is a stable key such as ``class-types:O:count``;
    ``hard`` marks table fixtures whose mismatch needs an explanation.
    """

    location: str
    printed: str
    computed: str
    match: bool
    hard: bool
    kind: str
    notes: tuple = ()
    detail: dict = field(default_factory=dict, compare=False)


@lru_cache(maxsize=None)
def reference_tables() -> dict:
    path = resources.files("glchar") / "data" / "reference_tables.json"
    return json.loads(path.read_text())


# ---------------------------------------------------------------- parsing

_TYPO_RULES = (
    (re.compile(r"q\^\+"), "q+", "'q^+' read as 'q+'"),
)


def _strip_unbalanced(text: str):
    out, depth, dropped = [], 0, 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            if depth == 0:
                dropped += 1
                continue
            depth -= 1
        out.append(ch)
    return "".join(out), dropped


def _brace_group(s: str, i: int):
    """Return (content, index after the group) for the {...} starting at i."""
    if i >= len(s) or s[i] != "{":
        raise PrintedParseError(f"expected '{{' at {i} in {s!r}")
    depth = 0
    for j in range(i, len(s)):
        if s[j] == "{":
            depth += 1
        elif s[j] == "}":
            depth -= 1
            if depth == 0:
                return s[i + 1 : j], j + 1
    raise PrintedParseError(f"unbalanced braces in {s!r}")


def _exponent(s: str, i: int):
    """Exponent after '^' at position i: a brace group or a single token."""
    if s[i] == "{":
        return _brace_group(s, i)
    if s[i].isdigit():
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        return s[i:j], j
    return s[i], i + 1


_EPS_MACROS = {r"\ea": 1, r"\eb": 2, r"\ec": 3, r"\ed": 4, r"\ee": 5}
_EPS_FULL = re.compile(r"\\(?:epsilon|varepsilon)_\{?(\d)\}?")


def _to_python(s: str) -> str:
    out = []
    i = 0
    while i < len(s):
        if s.startswith(r"\frac", i):
            num, i = _brace_group(s, i + 5)
            den, i = _brace_group(s, i)
            out.append(f"(({_to_python(num)})/({_to_python(den)}))")
            continue
        level = None
        for macro, lev in _EPS_MACROS.items():
            if s.startswith(macro, i) and not s[i + len(macro) : i + len(macro) + 1].isalpha():
                level, i = lev, i + len(macro)
                break
        if level is None:
            m = _EPS_FULL.match(s, i)
            if m:
                level, i = int(m.group(1)), m.end()
        if level is not None:
            if i >= len(s) or s[i] != "^":
                raise PrintedParseError(f"root of unity without exponent in {s!r}")
            exp, i = _exponent(s, i + 1)
            out.append(f" Z{level}({_to_python(exp)}) ")
            continue
        ch = s[i]
        if ch == "^":
            exp, i = _exponent(s, i + 1)
            out.append(f"**({_to_python(exp)})")
            continue
        if ch == "\\":
            raise PrintedParseError(f"unsupported macro at {s[i:i + 12]!r}")
        if ch in "[":
            out.append("(")
        elif ch in "]":
            out.append(")")
        elif ch.isalpha() and ch not in _LOCALS:
            raise PrintedParseError(f"unknown symbol {ch!r} in {s!r}")
        else:
            out.append(ch)
        i += 1
    return "".join(out)


@lru_cache(maxsize=None)
def parse_printed(text: str) -> Printed:
    """Parse a printed fragment; typographic repairs are listed in ``notes``."""
    notes = []
    s = text.replace(r"\left", "").replace(r"\right", "").replace(r"\ ", " ")
    s = s.replace(r"\,", " ").replace("$", "")
    for pat, rep, note in _TYPO_RULES:
        if pat.search(s):
            s = pat.sub(rep, s)
            notes.append(note)
    if r"\sum" in s:
        raise PrintedParseError("symmetrised sums over parameters are not parsed")
    s, dropped = _strip_unbalanced(s)
    if dropped:
        notes.append(f"dropped {dropped} unmatched ')'")
    if s.count("(") != s.count(")"):
        raise PrintedParseError(f"unbalanced parentheses in {text!r}")
    py = _to_python(s.strip())
    # keep digits from fusing with a following name (2Z1 -> 2*Z1)
    py = re.sub(r"(?<![A-Za-z\d])(\d+)\s*(?=[A-Za-z(])", r"\1*", py)
    try:
        expr = parse_expr(py, local_dict=_LOCALS, transformations=_TRANSFORMS)
    except Exception as exc:  # sympy raises a zoo of exception types here
        raise PrintedParseError(f"cannot parse {text!r}: {exc}") from None
    return Printed(text, expr, tuple(notes))


def _sympy_to_ratfunc(expr) -> RatFuncQ:
    num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))

    def poly(e):
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(sympy.Poly(e, _Q).all_coeffs())]
        return coeffs

    nc, dc = poly(num), poly(den)
    scale = math.lcm(*(c.denominator for c in nc + dc))
    return RatFuncQ(IntPolyQ([int(c * scale) for c in nc]), IntPolyQ([int(c * scale) for c in dc]))


def printed_ratfunc(text: str) -> tuple:
    """(RatFuncQ, notes) for a printed rational function of q."""
    p = parse_printed(text)
    if p.expr.free_symbols - {_Q} or p.expr.atoms(sympy.Function):
        raise PrintedParseError(f"{text!r} is not a rational function of q")
    return _sympy_to_ratfunc(p.expr), p.notes


def printed_cyclo(text: str, q: int, params: dict, M: int | None = None) -> CycloSum:
    """Evaluate a printed character expression at q and integer parameters."""
    M = M or common_modulus(q, 5)
    expr = parse_printed(text).expr
    subs = {_Q: q, **{_PARAMS[k]: v for k, v in params.items()}}
    missing = expr.free_symbols - set(subs)
    if missing:
        raise PrintedParseError(f"unbound parameters {sorted(map(str, missing))} in {text!r}")
    expr = sympy.expand(expr.subs(subs))
    terms: dict = {}
    for term in sympy.Add.make_args(expr):
        coeff = Fraction(1)
        exp = 0
        for factor in sympy.Mul.make_args(term):
            base, power = factor.as_base_exp()
            if isinstance(base, sympy.core.function.AppliedUndef):
                s = int(str(base.func)[1:])
                x = int(base.args[0]) * int(power)
                exp += (x % (q**s - 1)) * (M // (q**s - 1))
            elif factor.is_Rational:
                coeff *= Fraction(int(factor.p), int(factor.q))
            else:
                raise PrintedParseError(f"cannot evaluate factor {factor} in {text!r}")
        t = exp % M
        terms[t] = terms.get(t, 0) + coeff
    return CycloSum(M, terms)


# ---------------------------------------------------------------- engine side


@lru_cache(maxsize=None)
def orbit_count_poly(d: int) -> RatFuncQ:
    """Number of degree-d Frobenius orbits (irreducibles other than t) in q."""
    num = IntPolyQ()
    for e in range(1, d + 1):
        if d % e == 0:
            num = num + IntPolyQ.monomial(e, _mobius(d // e))
    if d == 1:
        num = num - 1
    return RatFuncQ(num, d)


def _mobius(n: int) -> int:
    f = sympy.factorint(n)
    return 0 if any(v > 1 for v in f.values()) else (-1) ** len(f)


@lru_cache(maxsize=None)
def type_count_poly(label: str) -> RatFuncQ:
    """Members of a type: falling factorials of orbit counts per degree,
    divided by permutations of interchangeable slots."""
    tpl = TYPE_TEMPLATES[label.rstrip("'")]
    out = RatFuncQ(1)
    for d, k in Counter(deg for deg, _ in tpl).items():
        n = orbit_count_poly(d)
        for t in range(k):
            out = out * (n + RatFuncQ(-t))
    for mult in Counter(tpl).values():
        out = out / math.factorial(mult)
    return out


def _param_letters(dual: bool) -> str:
    return DUAL_LETTERS if dual else CLASS_LETTERS


def representative(label: str, q: int, dual: bool = False):
    """Symbol of the given type using the smallest available orbits."""
    tpl = TYPE_TEMPLATES[label.rstrip("'")]
    used: Counter = Counter()
    params = {}
    for idx, (d, _) in enumerate(tpl):
        orbits = enumerate_orbits(q, d)
        params[_param_letters(dual)[idx]] = orbits[used[d]].root
        used[d] += 1
    return symbol_from_type(label, params, q, dual=dual), params


def random_instance(label: str, q: int, rng: random.Random, dual: bool = False):
    """Symbol of the given type with distinct random orbits, plus the
    parameter values (one root per slot, a random member of the orbit)."""
    tpl = TYPE_TEMPLATES[label.rstrip("'")]
    picks: dict = {}
    for d, k in Counter(deg for deg, _ in tpl).items():
        picks[d] = rng.sample(list(enumerate_orbits(q, d)), k)
    params, roots = {}, {}
    for idx, (d, _) in enumerate(tpl):
        orb = picks[d].pop()
        letter = _param_letters(dual)[idx]
        roots[letter] = orb.root
        params[letter] = rng.choice(orb.members())
    return symbol_from_type(label, roots, q, dual=dual), params


def _fmt(x) -> str:
    if isinstance(x, RatFuncQ):
        return str(x.num) if x.is_polynomial() and x.den.leading() == 1 else f"({x.num}) / ({x.den})"
    return str(x)


def _rf_from_weight(const: Fraction, poly: IntPolyQ) -> RatFuncQ:
    return RatFuncQ(poly * const.numerator, const.denominator)


# ---------------------------------------------------------------- hard fixtures


def _parse_or_fail(text: str):
    try:
        return printed_ratfunc(text)
    except PrintedParseError as exc:
        return None, (f"unparsed: {exc}",)


def class_type_checks() -> list:
    """Table of class types: member count and class size, symbolically."""
    out = []
    for label, row in reference_tables()["class_types"].items():
        value, notes = _parse_or_fail(row["count"])
        engine = type_count_poly(label)
        out.append(FixtureCheck(f"class-types:{label}:count", row["count"], _fmt(engine),
                                value == engine, True, "count", notes, {"label": label}))
        sym, _ = representative(label, REFERENCE_Q)
        size = RatFuncQ(class_size_poly(sym))
        value, notes = _parse_or_fail(row["value"])
        out.append(FixtureCheck(f"class-types:{label}:size", row["value"], _fmt(size),
                                value == size, True, "size", notes, {"label": label}))
    return out


def dual_type_checks() -> list:
    """Table of dual types: member count and character degree, symbolically."""
    out = []
    for label, row in reference_tables()["dual_types"].items():
        value, notes = _parse_or_fail(row["count"])
        engine = type_count_poly(label)
        out.append(FixtureCheck(f"dual-types:{label}':count", row["count"], _fmt(engine),
                                value == engine, True, "dual-count", notes, {"label": label}))
        sym, _ = representative(label, REFERENCE_Q, dual=True)
        deg = RatFuncQ(degree_poly(sym))
        value, notes = _parse_or_fail(row["value"])
        out.append(FixtureCheck(f"dual-types:{label}':degree", row["value"], _fmt(deg),
                                value == deg, True, "degree", notes, {"label": label}))
    return out


def _engine_q_weights(label: str) -> dict:
    sym, _ = representative(label, REFERENCE_Q)
    out = {}
    for idx, rho in enumerate(RHO_ORDER, 1):
        vals = [_rf_from_weight(*q_weight_poly(m, sym)) for m in modes_into(rho, sym)]
        out[idx] = Counter(v for v in vals if v != RatFuncQ(0))
    return out


def _engine_chi_weights(label: str) -> dict:
    sym, _ = representative(label, REFERENCE_Q, dual=True)
    out = {}
    for idx, rho in enumerate(RHO_ORDER, 1):
        vals = [RatFuncQ(IntPolyQ([w.numerator]), w.denominator)
                for w in (chi_weight(m, sym) for m in modes_into(rho, sym))]
        out[idx] = Counter(v for v in vals if v != RatFuncQ(0))
    return out


def _weight_checks(table: str, engine_fn, kind: str) -> list:
    """Cell-by-cell comparison of the nonzero values of a weight table.

    A printed 0 is not compared: the tables print 0 both for a zero weight
    and for a cell that has no mode at all.
    """
    out = []
    for label, cells in reference_tables()[table].items():
        engine = engine_fn(label)
        for idx in range(1, 8):
            texts = cells.get(str(idx), [])
            printed: Counter = Counter()
            notes: list = []
            parsed_ok = True
            for t in texts:
                v, n = _parse_or_fail(t)
                notes.extend(n)
                if v is None:
                    parsed_ok = False
                elif v != RatFuncQ(0):
                    printed[v] += 1
            mine = engine[idx]
            if not texts and not mine:
                continue
            computed = "; ".join(_fmt(v) for v in sorted(mine.elements(), key=str)) or "(no nonzero weight)"
            out.append(FixtureCheck(
                f"{table.replace('_', '-')}:{label}:rho{idx}",
                "; ".join(texts) or "(blank)",
                computed,
                parsed_ok and printed == mine,
                True,
                kind,
                tuple(notes),
                {"label": label, "rho": idx,
                 "printed_sum": sum((v * c for v, c in printed.items()), RatFuncQ(0)),
                 "engine_sum": sum((v * c for v, c in mine.items()), RatFuncQ(0))},
            ))
    return out


def q_weight_checks() -> list:
    return _weight_checks("q_weights", _engine_q_weights, "q-weight")


def chi_weight_checks() -> list:
    return _weight_checks("chi_weights", _engine_chi_weights, "chi-weight")


# ---------------------------------------------------------------- worked examples

# The seven rho-contributions of the A1' value on A1 as displayed, each a
# multiple of eps_1^(5ia).
SEVEN_TERM_DISPLAY = (
    r"\frac{1}{120}(q+1)(q^2+q+1)(q^3+q^2+q+1)(q^4+q^3+q^2+q+1)",
    r"\frac{1}{12}(q^2+q+1)(q^3+q^2+q+1)(q^5-1)",
    r"\frac{1}{8}(q^2+1)(q^3-1)(q^5-1)",
    r"\frac{1}{6}(q+1)(q^4-1)(q^5-1)",
    r"\frac{1}{6}(q-1)(q^4-1)(q^5-1)",
    r"\frac{1}{4}(q^2-1)(q^3-1)(q^5-1)",
    r"\frac{1}{5}(q-1)(q^2-1)(q^3-1)(q^4-1)",
)

EXAMPLE_WEIGHT = r"\frac{1}{24}(q+1)(q^2+q+1)(q^3+q^2+q+1)"
EXAMPLE_BASIC = r"8\ea^{(4i+j)a}"
# two modes at rho = 2.1^3; the class is printed as f^{2.1} f^{1^2} but the
# displayed products use Q^{1^3}, the C1 reading
EXAMPLE_TWO_MODES = (r"-\frac{1}{12}(q+1)(q^3+1)", r"-\frac{1}{4}(q+1)(q^3-1)")
EXAMPLE_A1 = r"q^{10}\ea^{5ia}"
EXAMPLE_C1_E2 = r"q\ea^{i(2a+b)+j(b+c)}+(q+1)\ea^{i(a+b+c)+j(a+b)}"


# Class types whose character-table formulas name the slots in a different
# order from the class-type table: for E2 the character values treat a as
# the 1^2 slot and b as the 2 slot.
CHARACTER_TABLE_LETTERS = {"E2": {"a": "b", "b": "a"}}


def character_table_params(label: str, params: dict) -> dict:
    """Rename class parameters to the letters used by printed character values."""
    swap = CHARACTER_TABLE_LETTERS.get(label, {})
    return {swap.get(k, k): v for k, v in params.items()}


def _all_instances(label: str, q: int, dual: bool):
    """Every ordered choice of distinct orbits for the slots of a type."""
    import itertools

    tpl = TYPE_TEMPLATES[label.rstrip("'")]
    pools = [enumerate_orbits(q, d) for d, _ in tpl]
    for combo in itertools.product(*pools):
        if len(set(combo)) < len(combo):
            continue
        params = {_param_letters(dual)[i]: o.root for i, o in enumerate(combo)}
        yield symbol_from_type(label, params, q, dual=dual), params


def example_checks(q: int = REFERENCE_Q) -> list:
    """The worked examples: a Q(m,c) weight, a basic-character rho-part and
    two character values, each checked for every admissible parameter set."""
    out = []
    M = common_modulus(q, 5)

    # Q(m,c) for B1 at rho = 1^5
    sym, _ = representative("B1", q)
    (mode,) = modes_into("1^5", sym)
    engine = _rf_from_weight(*q_weight_poly(mode, sym))
    printed, _ = printed_ratfunc(EXAMPLE_WEIGHT)
    out.append(FixtureCheck("example:weight:B1:rho1", EXAMPLE_WEIGHT, _fmt(engine),
                            engine == printed, False, "example"))

    # rho-part of rho = 1.2^2 for g_i^4 g_j on classes of type A
    bad = total = 0
    for e, ep in _all_instances("B1", q, dual=True):
        (me,) = modes_into("2^2.1", e)
        h = h_vector(me, e)
        for c, cp in _all_instances("A1", q, dual=False):
            (mc,) = modes_into("2^2.1", c)
            got = CycloSum(M, _rho_part_terms(h, _xi(mc), q, M))
            total += 1
            if got != printed_cyclo(EXAMPLE_BASIC, q, {**ep, **cp}, M):
                bad += 1
    out.append(FixtureCheck("example:basic:B':A:rho3", EXAMPLE_BASIC,
                            f"{total - bad}/{total} parameter sets agree", bad == 0, False, "example"))

    # A1' on A1
    bad = total = 0
    for e, ep in _all_instances("A1", q, dual=True):
        for c, cp in _all_instances("A1", q, dual=False):
            total += 1
            if char_value(e, c) != printed_cyclo(EXAMPLE_A1, q, {**ep, **cp}, M):
                bad += 1
    out.append(FixtureCheck("example:character:A1':A1", EXAMPLE_A1,
                            f"{total - bad}/{total} parameter sets agree", bad == 0, False, "example",
                            ("printed exponent '51a' read as 5ia",)))

    printed = Counter(printed_ratfunc(t)[0] for t in EXAMPLE_TWO_MODES)
    readings = {}
    for label in ("C2", "C1"):
        c, _ = representative(label, q)
        readings[label] = Counter(_rf_from_weight(*q_weight_poly(m, c)) for m in modes_into("2.1^3", c))
    out.append(FixtureCheck(
        "example:weight:C2:rho2", "; ".join(EXAMPLE_TWO_MODES),
        "; ".join(f"{lab}: " + ", ".join(sorted(_fmt(v) for v in vals.elements())) for lab, vals in readings.items()),
        printed in readings.values(), False, "example",
        ("the class is printed as type C2 while the displayed products are those of type C1",),
    ))

    # the displayed seven-term sum should telescope to q^10
    terms = [printed_ratfunc(t)[0] for t in SEVEN_TERM_DISPLAY]
    shown = sum(terms, RatFuncQ(0))
    e, _ = representative("A1", q, dual=True)
    c, _ = representative("A1", q)
    contrib = []
    for rho in RHO_ORDER:
        (me,) = modes_into(rho, e)
        (mc,) = modes_into(rho, c)
        const, poly = q_weight_poly(mc, c)
        w = chi_weight(me, e) * const * _count_factor(rho)
        contrib.append(RatFuncQ(poly * w.numerator, w.denominator))
    engine_total = sum(contrib, RatFuncQ(0))
    out.append(FixtureCheck(
        "example:character:A1':A1:seven-term-sum",
        " + ".join(SEVEN_TERM_DISPLAY),
        " + ".join(_fmt(x) for x in contrib),
        shown == RatFuncQ(IntPolyQ.monomial(10)),
        False,
        "example",
        (f"displayed terms sum to {_fmt(shown)}", f"engine contributions sum to {_fmt(engine_total)}"),
    ))

    # C1' on E2
    bad = total = 0
    for e, ep in _all_instances("C1", q, dual=True):
        for c, cp in _all_instances("E2", q, dual=False):
            total += 1
            cp = character_table_params("E2", cp)
            if char_value(e, c) != printed_cyclo(EXAMPLE_C1_E2, q, {**ep, **cp}, M):
                bad += 1
    out.append(FixtureCheck("example:character:C1':E2", EXAMPLE_C1_E2,
                            f"{total - bad}/{total} parameter sets agree", bad == 0, False, "example",
                            ("class letters a, b exchanged (1^2 slot is a)",)))
    return out


def _count_factor(rho) -> int:
    """Permanent size of the rho-part for one orbit: prod_d r_d! * d^r_d."""
    out = 1
    for d, r in rho.multiplicities().items():
        out *= math.factorial(r) * d**r
    return out


# ---------------------------------------------------------------- soft fixtures


def _first_label(letter: str) -> str:
    return next(lab for lab in TYPE_LABELS if lab[0] == letter)


def basic_part_checks(q: int = REFERENCE_Q, seed: int = 0) -> list:
    """Basic-character rho-parts, summed over dual modes and class modes, at
    one random parameter set per printed row."""
    rng = random.Random(seed)
    M = common_modulus(q, 5)
    out = []
    for n_row, row in enumerate(reference_tables()["basic_parts"]):
        e, ep = random_instance(_first_label(row["basic_type"]), q, rng, dual=True)
        c, cp = random_instance(_first_label(row["class_letter"]), q, rng)
        text = " + ".join(f"({t})" for t in row["entries"])
        for idx in row["rhos"]:
            rho = RHO_ORDER[idx - 1]
            loc = f"basic-parts:{row['basic_type']}':{row['class_letter']}:rho{idx}:row{n_row}"
            acc: dict = {}
            for me in modes_into(rho, e):
                h = h_vector(me, e)
                for mc in modes_into(rho, c):
                    for t, cnt in _rho_part_terms(h, _xi(mc), q, M).items():
                        acc[t] = acc.get(t, 0) + cnt
            engine = CycloSum(M, acc)
            try:
                printed = printed_cyclo(text, q, {**ep, **cp}, M)
            except PrintedParseError as exc:
                out.append(FixtureCheck(loc, text, engine.dumps(), False, False, "basic-part",
                                        (f"skipped: {exc}",), {"skipped": True}))
                continue
            out.append(FixtureCheck(loc, text, engine.dumps(), printed == engine, False, "basic-part",
                                    parse_printed(text).notes, {"params": {**ep, **cp}}))
    return out


def _clamp_label(label: str) -> str:
    if label in TYPE_TEMPLATES:
        return label
    family = [lab for lab in TYPE_LABELS if lab[0] == label[0]]
    return family[-1]


def _expand_classes(row) -> tuple:
    """(class labels covered by a printed row, notes on repaired labels)."""
    if "range" in row:
        a, b = row["range"]
        ca, cb = _clamp_label(a), _clamp_label(b)
        notes = tuple(f"range end {x} does not exist; read as {y}" for x, y in ((a, ca), (b, cb)) if x != y)
        i, j = TYPE_LABELS.index(ca), TYPE_LABELS.index(cb)
        return list(TYPE_LABELS[i : j + 1]), notes
    return [lab for lab in row["labels"] if lab in TYPE_TEMPLATES], ()


def character_checks(q: int = REFERENCE_Q, seed: int = 0, limit: int | None = None) -> list:
    """Character values at one random parameter set per (character type,
    class type) cell; ``limit`` caps the number of printed rows visited."""
    rng = random.Random(seed)
    M = common_modulus(q, 5)
    out = []
    rows = reference_tables()["characters"]
    for n_row, row in enumerate(rows[:limit] if limit else rows):
        dual_label = row["dual_type"].split("?")[0]
        classes, range_notes = _expand_classes(row)
        for cls in classes:
            e, ep = random_instance(dual_label, q, rng, dual=True)
            c, cp = random_instance(cls, q, rng)
            cp = character_table_params(cls, cp)
            loc = f"characters:{row['dual_type']}':{cls}:row{n_row}"
            engine = char_value(e, c)
            try:
                printed = printed_cyclo(row["entry"], q, {**ep, **cp}, M)
            except PrintedParseError as exc:
                out.append(FixtureCheck(loc, row["entry"], engine.dumps(), False, False, "character",
                                        (f"skipped: {exc}",), {"skipped": True}))
                continue
            out.append(FixtureCheck(loc, row["entry"], engine.dumps(), printed == engine, False,
                                    "character", range_notes + parse_printed(row["entry"]).notes,
                                    {"params": {**ep, **cp}}))
    return out
