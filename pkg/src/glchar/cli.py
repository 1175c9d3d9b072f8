"""Command-line interface: ``glchar <command> [options]``.

Exit codes: 0 success, 1 a verification check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__, hall_green
from .characters import char_value, full_table
from .class_space import (
    ClassSymbol,
    DualSymbol,
    class_size,
    classify_type,
    enumerate_classes,
    parse_type_spec,
    type_census,
)
from .dual_space import degree, degree_poly, enumerate_duals
from .exact_arith import CycloSum, certify_value, format_poly
from .modes import modes_into, q_weight_poly
from .partitions import enumerate_partitions, parse_partition

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class Config:
    cache_dir: Path
    workers: int = 1

    @classmethod
    def resolve(cls, args) -> "Config":
        """--cache-dir beats $GLCHAR_CACHE_DIR beats ~/.cache/glchar."""
        if args.cache_dir:
            base = Path(args.cache_dir)
        elif os.environ.get(hall_green.CACHE_ENV):
            base = Path(os.environ[hall_green.CACHE_ENV])
        else:
            base = Path.home() / ".cache" / "glchar"
        return cls(base, max(1, getattr(args, "workers", 1) or 1))

    def apply(self) -> None:
        hall_green.set_cache_dir(self.cache_dir)


def format_value(v: CycloSum) -> str:
    """Rational values print plainly; others as sum c*z^t with z = exp(2 pi i / M)."""
    v = v.reduce_conductor()
    r = v.rational_value()
    if r is not None:
        return str(r)
    z = v.to_complex()
    if abs(z.imag) < 1e-6:
        den = v.denominator()
        guess = Fraction(round(z.real * den), den)
        if certify_value(v, guess):
            return str(guess)
    terms = " + ".join(f"{c}*z^{t}" for t, c in sorted(v.terms.items()))
    return f"[M={v.modulus}] {terms}"


def _symbol(text: str, q: int, dual: bool):
    text = text.strip()
    if text.startswith("{"):
        cls = DualSymbol if dual else ClassSymbol
        return cls.from_json(text, q)
    return parse_type_spec(text, q, dual=dual)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_table(args, cfg: Config) -> int:
    table = full_table(args.q, args.n, workers=cfg.workers)
    if args.format == "json":
        text = json.dumps(table.to_json(), sort_keys=True, separators=(",", ":")) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["character"] + [str(c) for c in table.classes])
        for e, row in zip(table.duals, table.values):
            w.writerow([str(e)] + [format_value(v) for v in row])
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK


def cmd_value(args, cfg: Config) -> int:
    e = _symbol(args.char, args.q, dual=True)
    c = _symbol(args.class_, args.q, dual=False)
    if e.n != c.n:
        raise ValueError("character and class belong to different n")
    v = char_value(e, c, args.q)
    print(json.dumps({"character": str(e), "class": str(c), "value": format_value(v),
                      "exact": v.to_json()}, sort_keys=True))
    return EXIT_OK


def _label(sym) -> str:
    return classify_type(sym) if sym.n == 5 else ""


def cmd_classes(args, cfg: Config) -> int:
    classes = enumerate_classes(args.q, args.n)
    if args.census:
        census = type_census(classes) if args.n == 5 else {}
        print(json.dumps({"q": args.q, "n": args.n, "classes": len(classes), "types": census}))
        return EXIT_OK
    for c in classes:
        fields = [str(class_size(c)), str(c)]
        if args.n == 5:
            fields.insert(0, _label(c))
        print("\t".join(fields))
    return EXIT_OK


def cmd_duals(args, cfg: Config) -> int:
    duals = enumerate_duals(args.q, args.n)
    for e in duals:
        fields = [str(e)]
        if args.degrees:
            fields[:0] = [str(degree(e)), format_poly(degree_poly(e).coeffs)]
        if args.n == 5:
            fields.insert(0, _label(e) + "'")
        print("\t".join(fields))
    return EXIT_OK


def cmd_modes(args, cfg: Config) -> int:
    c = _symbol(args.class_, args.q, dual=False)
    rhos = [parse_partition(args.rho)] if args.rho else list(enumerate_partitions(c.n))
    for rho in rhos:
        for m in modes_into(rho, c):
            const, poly = q_weight_poly(m, c)
            print(f"{rho}\t{m}\t{const}*({format_poly(poly.coeffs)})")
    return EXIT_OK


def cmd_green(args, cfg: Config) -> int:
    lam = parse_partition(args.lam)
    rhos = [parse_partition(args.rho)] if args.rho else list(enumerate_partitions(lam.size))
    for rho in rhos:
        print(f"Q^{lam}_{rho} = {format_poly(hall_green.green_poly(lam, rho).coeffs)}")
    return EXIT_OK


def cmd_verify(args, cfg: Config) -> int:
    from .verification import ALL_CHECKS, run_suite

    checks = tuple(s.strip() for s in args.checks.split(",") if s.strip()) if args.checks else ALL_CHECKS
    report = run_suite(args.q, args.n, checks, workers=cfg.workers,
                       characters=not args.skip_characters, character_limit=args.character_limit)
    for rep in report.checks:
        status = "ok" if rep.ok else "FAIL"
        print(f"{rep.name}: {status} ({rep.seconds:.1f}s)")
        for f in rep.failures[:20]:
            print(f"  {f}")
    if args.report:
        payload = {"version": __version__, **report.to_json()}
        for rep in payload["checks"]:
            rep.pop("seconds", None)
        Path(args.report).write_text(json.dumps(payload, indent=1, sort_keys=True, default=str) + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="glchar", description="Character tables of GL(n, q) for n <= 5.")
    p.add_argument("--version", action="version", version=f"glchar {__version__}")
    p.add_argument("--cache-dir", help="Hall/Green polynomial cache directory "
                   f"(default ${hall_green.CACHE_ENV} or ~/.cache/glchar)")
    sub = p.add_subparsers(dest="command", required=True)

    def qn(sp, n_default=5):
        sp.add_argument("--q", type=int, required=True, help="field size (prime power)")
        sp.add_argument("--n", type=int, default=n_default, help="matrix size, 1..5")

    sp = sub.add_parser("table", help="full character table")
    qn(sp)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--out", help="output file (default stdout)")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("value", help="one character value")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--char", required=True, help="dual type spec, e.g. \"C1':i=1,j=2\", or symbol JSON")
    sp.add_argument("--class", dest="class_", required=True, help="class type spec, e.g. \"E2:a=0,b=1,c=2\"")
    sp.set_defaults(func=cmd_value)

    sp = sub.add_parser("classes", help="list conjugacy classes")
    qn(sp)
    sp.add_argument("--census", action="store_true", help="print counts per class type")
    sp.set_defaults(func=cmd_classes)

    sp = sub.add_parser("duals", help="list irreducible characters")
    qn(sp)
    sp.add_argument("--degrees", action="store_true")
    sp.set_defaults(func=cmd_duals)

    sp = sub.add_parser("modes", help="modes of substitution and their weights")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--class", dest="class_", required=True)
    sp.add_argument("--rho", help="partition such as 2^2.1 (default: all)")
    sp.set_defaults(func=cmd_modes)

    sp = sub.add_parser("green", help="Green polynomials")
    sp.add_argument("--lambda", dest="lam", required=True, help="partition such as 3.1^2")
    sp.add_argument("--rho", help="default: every rho of the same size")
    sp.set_defaults(func=cmd_green)

    sp = sub.add_parser("verify", help="run verification checks")
    qn(sp)
    sp.add_argument("--checks", help="comma list from green,counts,orthogonality,oracle,fixtures")
    sp.add_argument("--report", help="write the JSON report (with errata) here")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--skip-characters", action="store_true",
                    help="skip the per-value comparison with the published character table")
    sp.add_argument("--character-limit", type=int, default=None)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = Config.resolve(args)
    cfg.apply()
    try:
        code = args.func(args, cfg)
    except (ValueError, KeyError) as exc:
        print(f"glchar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        hall_green.flush_cache()
    return code


if __name__ == "__main__":
    sys.exit(main())
