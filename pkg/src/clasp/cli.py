"""
Command-line front end.

Exit codes: 0 success, 1 selfcheck failure, 2 invalid input,
3 singular presentation, 4 evaluation point outside the domain.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import selfcheck, spectral
from .clink import is_totally_connected, pi1_presentation
from .errors import ClaspError, DomainError, SingularPresentationError
from .fracfield import RatFunc, format_class, parse_ratfunc
from .linkio import BUILTINS, LinkInput, builtin_text, emit_link, parse_link
from .pairing import bl_value, build_H, is_torsion
from .polyring import format_poly

EXIT_OK, EXIT_SELFCHECK, EXIT_INPUT, EXIT_SINGULAR, EXIT_DOMAIN = 0, 1, 2, 3, 4


def read_link(source: str) -> LinkInput:
    """Load a link from a path, ``-`` for stdin, or a builtin name."""
    if source == "-":
        return parse_link(sys.stdin.read())
    path = Path(source)
    if path.exists():
        return parse_link(path.read_text())
    if source in BUILTINS:
        return parse_link(builtin_text(source))
    raise FileNotFoundError(f"no such file or builtin: {source}")


def _split_top_level(body: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [p.strip() for p in parts]


def parse_vector(text: str, n: int, mu: int) -> list[RatFunc]:
    """``e3`` for a standard basis vector, or ``[p1, p2, ...]``."""
    text = text.strip()
    if text.startswith("e") and text[1:].isdigit():
        k = int(text[1:])
        if not 1 <= k <= n:
            raise ValueError(f"basis vector {text} outside e1..e{n}")
        return [RatFunc.from_int(mu, int(i == k - 1)) for i in range(n)]
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"vector {text!r} must be eK or a bracketed list")
    body = text[1:-1].strip()
    entries = _split_top_level(body) if body else []
    if len(entries) != n:
        raise ValueError(f"vector {text!r} has {len(entries)} entries, expected {n}")
    return [parse_ratfunc(e, mu) for e in entries]


def _hypothesis(link: LinkInput, args) -> str:
    return link.hypothesis_status(getattr(args, "allow_unverified_torsion", False))


def _ratfunc_json(x: RatFunc) -> dict:
    return {"num": format_poly(x.num), "den": format_poly(x.den), "mod": "Lambda_S"}


def cmd_info(args, out) -> int:
    link = read_link(args.file)
    p = build_H(link.family)
    tc = is_totally_connected(link.ccomplex) if link.ccomplex is not None else None
    pres = pi1_presentation(link.ccomplex) if link.ccomplex is not None else None
    status = _hypothesis(link, args)
    if args.json:
        data = {
            "name": link.name,
            "mu": link.mu,
            "n": link.n,
            "totally_connected": tc,
            "pi1": None if pres is None else {
                "generators": list(pres.generators),
                "relations": [list(r) for r in pres.relations]},
            "torsion": is_torsion(p),
            "hypothesis": status,
            "detH": format_poly(p.detH),
        }
        out.write(json.dumps(data, indent=2) + "\n")
        return EXIT_OK
    if link.name:
        out.write(f"name: {link.name}\n")
    out.write(f"mu: {link.mu}\nn: {link.n}\n")
    out.write(f"totally connected: {'unknown (no C-complex)' if tc is None else str(tc).lower()}\n")
    out.write(f"pi1: {'unknown (no C-complex)' if pres is None else pres}\n")
    out.write(f"torsion: {str(is_torsion(p)).lower()} (hypothesis {status})\n")
    out.write(f"detH: {format_poly(p.detH)}\n")
    return EXIT_OK


def cmd_H(args, out) -> int:
    link = read_link(args.file)
    p = build_H(link.family)
    rows = [[format_poly(x) for x in row] for row in p.H]
    if args.json:
        data = {"mu": p.mu, "n": p.n, "H": rows, "detH": format_poly(p.detH),
                "torsion": is_torsion(p)}
        out.write(json.dumps(data, indent=2) + "\n")
    elif args.csv:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        out.write(buf.getvalue())
    else:
        for i, row in enumerate(rows, start=1):
            for j, x in enumerate(row, start=1):
                out.write(f"H[{i},{j}] = {x}\n")
        out.write(f"detH = {format_poly(p.detH)}\n")
    return EXIT_OK


def cmd_bl(args, out) -> int:
    link = read_link(args.file)
    if _hypothesis(link, args) == "unverified":
        raise ClaspError(
            "no totally connected C-complex is attached; pass --allow-unverified-torsion "
            "to evaluate the pairing anyway")
    p = build_H(link.family)
    a = parse_vector(args.a, p.n, p.mu)
    b = parse_vector(args.b, p.n, p.mu)
    value = bl_value(p, a, b)
    if args.json:
        out.write(json.dumps(_ratfunc_json(value)) + "\n")
    else:
        out.write(format_class(value) + "\n")
    return EXIT_OK


def _precision(args) -> int:
    return args.precision if args.precision is not None else spectral.default_precision()


def _emit_rows(rows, mu: int, args, out) -> None:
    if args.json:
        data = [{"angles": list(pt.label()), "signature": sn.signature,
                 "nullity": sn.nullity, "certified": sn.certified} for pt, sn in rows]
        out.write(json.dumps(data, indent=2) + "\n")
        return
    out.write(spectral.csv_header(mu) + "\n")
    for pt, sn in rows:
        out.write(spectral.csv_row(pt, sn) + "\n")


def cmd_sig(args, out) -> int:
    if getattr(args, "sweep", None) is not None:
        args.axis = args.sweep
        return cmd_sweep(args, out)
    link = read_link(args.file)
    p = build_H(link.family)
    pt = spectral.TorusPoint.parse(args.omega, p.mu, _precision(args))
    _emit_rows([(pt, spectral.signature_nullity(p, pt, args.tol))], p.mu, args, out)
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    link = read_link(args.file)
    p = build_H(link.family)
    axis = args.axis if args.axis == "diagonal" else int(args.axis)
    rows = spectral.sweep(p, axis, args.samples, args.tol, _precision(args))
    _emit_rows(rows, p.mu, args, out)
    return EXIT_OK


def cmd_selfcheck(args, out) -> int:
    ok = True
    for name, passed in selfcheck.run():
        out.write(f"{'PASS' if passed else 'FAIL'} {name}\n")
        ok = ok and passed
    out.write("selfcheck passed\n" if ok else "selfcheck FAILED\n")
    return EXIT_OK if ok else EXIT_SELFCHECK


def cmd_examples(args, out) -> int:
    if args.name is None:
        for name in BUILTINS:
            out.write(name + "\n")
    else:
        out.write(emit_link(parse_link(builtin_text(args.name))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clasp",
        description="Blanchfield pairings and signatures of colored links from generalized Seifert matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file(p):
        p.add_argument("file", help="JSON link description, '-' for stdin, or a builtin name")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--allow-unverified-torsion", action="store_true",
                       help="trust the presentation without a totally connected C-complex")

    def add_numeric(p):
        p.add_argument("--precision", type=int, default=None,
                       help="working precision in bits (default: $CLASP_PRECISION or 128)")
        p.add_argument("--tol", type=float, default=spectral.DEFAULT_TOL,
                       help="zero-eigenvalue tolerance")

    p = sub.add_parser("info", help="summary of a link description")
    add_file(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("H", help="print the matrix H(t)")
    add_file(p)
    p.add_argument("--csv", action="store_true", help="emit the matrix as CSV")
    p.set_defaults(func=cmd_H)

    p = sub.add_parser("bl", help="evaluate the Blanchfield pairing on two vectors")
    add_file(p)
    p.add_argument("a", help="eK or [p1, ..., pn]")
    p.add_argument("b", help="eK or [p1, ..., pn]")
    p.set_defaults(func=cmd_bl)

    p = sub.add_parser("sig", help="signature and nullity at a torus point")
    add_file(p)
    add_numeric(p)
    p.add_argument("--omega", default="1/2", help="angles r_i with omega_i = exp(2 pi i r_i)")
    p.add_argument("--sweep", default=None, metavar="AXIS",
                   help="sweep along a colour index or 'diagonal' instead")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--csv", action="store_true", help="emit CSV (the default)")
    p.set_defaults(func=cmd_sig)

    p = sub.add_parser("sweep", help="signature profile along an axis or the diagonal")
    add_file(p)
    add_numeric(p)
    p.add_argument("--axis", default="diagonal", help="colour index or 'diagonal'")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--csv", action="store_true", help="emit CSV (the default)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("selfcheck", help="run the built-in identity and property checks")
    p.set_defaults(func=cmd_selfcheck)

    p = sub.add_parser("examples", help="list builtins or print one")
    p.add_argument("name", nargs="?", choices=BUILTINS)
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except SingularPresentationError as exc:
        print(f"error: singular presentation: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except DomainError as exc:
        print(f"error: domain: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ClaspError, ValueError, TypeError, FileNotFoundError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
