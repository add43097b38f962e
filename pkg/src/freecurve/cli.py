"""Command-line front end: ``freecurve analyze | verify-paper | syzygies | families``.

Exit codes: 0 computed, 1 input error, 2 internal inconsistency (or, for
verify-paper, at least one failed claim).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from .analysis import analyze
from .arith import DEFAULT_SEED
from .families import CATALOGUE, CurveSpec, catalogue_json, generate
from .milnor import CurveInput, InconsistencyError, syzygy_basis_in_degree
from .parser import ParseDiagnostic, parse_expression
from .poly import homogenize
from .verify import SUITES, Verifier, summary

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2

log = logging.getLogger("freecurve")


class InputError(ValueError):
    pass


def _add_source(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", help='polynomial text, e.g. "(y*z+x^2)^2*y - x^5"')
    src.add_argument("--family", help="family id (see 'families list')")
    _add_family_params(p)
    p.add_argument("--affine-degree", type=int, help="homogenize an affine polynomial to this degree")


def _add_family_params(p: argparse.ArgumentParser):
    for name in ("d", "k", "j"):
        p.add_argument(f"--{name}", type=int)
    for name in ("a", "b", "c"):
        p.add_argument(f"--{name}", type=Fraction)
    p.add_argument("--which", help="line arrangement: d7, d8 or d9")


def _family_params(args, family: str) -> dict:
    entry = CATALOGUE[family]
    out = {}
    for name, ptype, _ in entry.params:
        v = getattr(args, name, None)
        if v is None:
            continue
        if ptype is int and isinstance(v, Fraction):
            if v.denominator != 1:
                raise InputError(f"--{name} must be an integer")
            v = int(v)
        out[name] = v
    stray = [n for n in ("d", "k", "j", "a", "b", "c", "which")
             if getattr(args, n, None) is not None and n not in out]
    if stray:
        raise InputError(f"family {family} does not take {', '.join('--' + s for s in stray)}")
    return out


def _resolve(args) -> CurveSpec | tuple:
    """A CurveSpec for --family, or (id, TriPoly) for --poly."""
    if args.family:
        if args.family not in CATALOGUE:
            raise InputError(f"unknown family {args.family!r}; known: {', '.join(CATALOGUE)}")
        try:
            return generate(args.family, **_family_params(args, args.family))
        except (ValueError, TypeError) as exc:
            raise InputError(str(exc)) from exc
    f = parse_expression(args.poly)
    if f.is_zero():
        raise InputError("the zero polynomial does not define a curve")
    if not f.is_homogeneous():
        if args.affine_degree is None:
            raise InputError("polynomial is not homogeneous; pass --affine-degree d to homogenize it")
        try:
            f = homogenize(f, args.affine_degree)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    if f.homogeneous_degree < 3:
        raise InputError("curves of degree at least 3 are required")
    return ("input", f)


def _want_json(args) -> bool:
    return args.json or not sys.stdout.isatty()


def _print_diagnostic(exc: ParseDiagnostic, text: str | None):
    print(f"error: {exc.message} at position {exc.position}", file=sys.stderr)
    if text is not None:
        print("  " + text, file=sys.stderr)
        print("  " + " " * exc.position + "^", file=sys.stderr)


# -- analyze -------------------------------------------------------------------


def _analysis_table(rep: dict) -> str:
    p, r = rep["profile"], rep["report"]
    lines = [
        f"curve        {rep['curve']['id']}  (d = {p['d']})",
        f"polynomial   {rep['curve']['polynomial']}",
        f"tau          {p['tau']}   T = {p['T']}",
        f"ct / st / mdr  {p['ct']} / {p['st']} / {p['mdr']}",
        f"free         {r['free']}   (balance {r['criteria']['balance']}, midpoint {r['criteria']['midpoint']})",
        f"exponents    {r['d1']}, {r['d2']}   delta = {r['delta']}",
        f"rigid        {r['rigid']}   ct + st = T: {r['conj10']}",
        f"m            {' '.join(map(str, p['m']))}",
        f"ar           {' '.join(map(str, p['ar']))}",
        f"er           {' '.join(map(str, p['er']))}",
        f"defects      {' '.join('.' if v == 'uncomputed' else str(v) for v in r['defects'])}",
    ]
    if r["euler"]["EC"] is not None:
        lines.append(f"euler        E(C) = {r['euler']['EC']}, E(U) = {r['euler']['EU']}, "
                     f"cuspidal consistent: {r['cuspidal_consistent']}")
    lines += [f"note         {n}" for n in rep["notes"]]
    lines += [f"INCONSISTENT {n}" for n in rep["inconsistencies"]]
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    src = _resolve(args)
    engine = "qq" if args.field == "qq" else "gb"
    if isinstance(src, CurveSpec):
        a = analyze(src, engine=engine, saturation=args.saturation, kmax=args.kmax, seed=args.seed)
    else:
        a = analyze(src[1], curve_id=src[0], engine=engine, saturation=args.saturation, kmax=args.kmax,
                    seed=args.seed)
    rep = a.to_json()
    print(json.dumps(rep, indent=2) if _want_json(args) else _analysis_table(rep))
    return EXIT_INCONSISTENT if a.inconsistent else EXIT_OK


# -- verify-paper ------------------------------------------------------------------


def cmd_verify(args) -> int:
    suites = args.suites or list(SUITES)
    v = Verifier(stretch=args.stretch, seed=args.seed)
    try:
        claims = v.run(suites)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    result = {"seed": args.seed, "stretch": args.stretch, "suites": [s for s in SUITES if s in suites],
              "claims": [c.to_json() for c in claims], "summary": summary(claims)}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(result, fh, indent=2)
    if _want_json(args):
        print(json.dumps(result, indent=2))
    else:
        width = max((len(c.id) for c in claims), default=10)
        for c in claims:
            mark = "PASS" if c.passed else "FAIL"
            print(f"{mark}  {c.id:<{width}}  {c.claim}  [{c.runtime:.2f}s]")
            if not c.passed:
                print(f"      expected {c.expected!r}, computed {c.computed!r}")
        s = result["summary"]
        print(f"\n{s['passed']}/{s['total']} claims passed")
    return EXIT_OK if result["summary"]["failed"] == 0 else EXIT_INCONSISTENT


# -- syzygies ---------------------------------------------------------------------


def cmd_syzygies(args) -> int:
    if args.degree < 0:
        raise InputError("degree must be non-negative")
    src = _resolve(args)
    f = src.f if isinstance(src, CurveSpec) else src[1]
    basis = syzygy_basis_in_degree(CurveInput(f), args.degree)
    triples = [[part.render() for part in t] for t in basis]
    if _want_json(args):
        print(json.dumps({"degree": args.degree, "dimension": len(triples), "relations": triples}, indent=2))
    else:
        print(f"relations of degree {args.degree}: dimension {len(triples)}")
        for i, (a, b, c) in enumerate(triples, 1):
            print(f"[{i}] a = {a}\n    b = {b}\n    c = {c}")
    return EXIT_OK


# -- families ------------------------------------------------------------------------


def cmd_families(args) -> int:
    if args.action == "list":
        cat = catalogue_json()
        if _want_json(args):
            print(json.dumps(cat, indent=2))
        else:
            for e in cat:
                params = ", ".join(f"{k}={v}" for k, v in e["parameters"].items()) or "-"
                print(f"{e['id']:<12} d={e['degree']:<3} {params:<22} {e['summary']}")
        return EXIT_OK
    if not args.id:
        raise InputError(f"families gen needs a family id; known: {', '.join(CATALOGUE)}")
    if args.id not in CATALOGUE:
        raise InputError(f"unknown family {args.id!r}; known: {', '.join(CATALOGUE)}")
    try:
        spec = generate(args.id, **_family_params(args, args.id))
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc)) from exc
    text = spec.f.render()
    meta = spec.to_json(with_poly=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        with open(args.out + ".json", "w", encoding="utf-8") as fh:
            json.dump(meta, fh, indent=2)
        print(f"wrote {args.out} and {args.out}.json (degree {spec.d})")
    elif _want_json(args):
        print(json.dumps(meta, indent=2))
    else:
        print(text)
    return EXIT_OK


# -- entry point ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="freecurve", description="Graded invariants and freeness of plane curves")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="force JSON output")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed of the prime sampler")

    p = sub.add_parser("analyze", parents=[common], help="profile and freeness report of one curve")
    _add_source(p)
    p.add_argument("--field", choices=("auto", "qq"), default="auto",
                   help="auto: multi-modular with exact spot checks; qq: exact ranks only")
    p.add_argument("--saturation", choices=("formula", "direct", "both"), default="formula")
    p.add_argument("--kmax", type=int, help="override the top degree of the profile")
    p.add_argument("--stretch", action="store_true", help="accepted for symmetry with verify-paper")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify-paper", parents=[common], help="check the catalogue of known claims")
    p.add_argument("suites", nargs="*", metavar="SUITE", help=f"subset of: {', '.join(SUITES)}")
    p.add_argument("--stretch", action="store_true", help="extend to the long-running degree ranges")
    p.add_argument("--out", help="also write the JSON result to this file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("syzygies", parents=[common], help="exact basis of the relations of one degree")
    _add_source(p)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_syzygies)

    p = sub.add_parser("families", parents=[common], help="list or generate family members")
    p.add_argument("action", choices=("list", "gen"))
    p.add_argument("id", nargs="?")
    _add_family_params(p)
    p.add_argument("--out", help="write the polynomial here and metadata to OUT.json")
    p.set_defaults(func=cmd_families)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ParseDiagnostic as exc:
        _print_diagnostic(exc, getattr(args, "poly", None))
        return EXIT_INPUT
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
