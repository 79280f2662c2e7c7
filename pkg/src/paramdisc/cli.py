"""
Command-line front end.

    paramdisc report --builtin benzene-huckel --format json
    paramdisc sweep --input matrix.json --range -2:2 --steps 401 --format csv
    paramdisc plot --builtin benzene-huckel --output levels.svg

Exit codes: 0 success, 1 usage error, 2 document error, 3 numeric failure,
4 capability limit, 5 internal fault.
"""

from __future__ import annotations

import argparse
import sys

from .document import DocumentError, MatrixDocument, parse_document
from .elimination import discriminant
from .errors import CapabilityError, DomainError, InternalFault, NumericError, ValidationError
from .fixtures import BUILTINS
from .matrix import char_poly, degeneracy_profile, reduced_char_poly
from .output import (
    analysis_report,
    crossings_to_json,
    degeneracy_to_json,
    dumps,
    emit_svg,
    format_float,
    poly_to_json,
    sweep_to_csv,
    symmetry_to_json,
)
from .spectra import DEFAULT_GAP_TOL, DEFAULT_LAMBDA_TOL, classify_crossings, sweep
from .symmetry import symmetry_report

EXIT_OK, EXIT_USAGE, EXIT_DOCUMENT, EXIT_NUMERIC, EXIT_CAPABILITY, EXIT_INTERNAL = range(6)

FORMATS = {
    "charpoly": ("text", ("text", "json")),
    "disc": ("text", ("text", "json")),
    "crossings": ("json", ("json", "text")),
    "symmetry": ("json", ("json", "text")),
    "sweep": ("csv", ("csv", "json")),
    "report": ("json", ("json", "text")),
    "plot": ("svg", ("svg",)),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _range(text: str):
    lo, sep, hi = text.partition(":")
    try:
        a, b = float(lo), float(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like a:b, got {text!r}") from None
    if not sep or not a < b:
        raise argparse.ArgumentTypeError(f"range must look like a:b with a < b, got {text!r}")
    return a, b


def _parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="FILE", help="matrix document (JSON)")
    src.add_argument("--builtin", choices=sorted(BUILTINS), help="built-in matrix")
    common.add_argument("--lambda-tol", type=float, default=DEFAULT_LAMBDA_TOL)
    common.add_argument("--gap-tol", type=float, default=DEFAULT_GAP_TOL)
    common.add_argument("--range", type=_range, default=(-2.0, 2.0), metavar="A:B")
    common.add_argument("--steps", type=int, default=401)
    common.add_argument("--signed-symmetries", action="store_true")
    common.add_argument("--output", metavar="FILE")
    common.add_argument("--format", choices=("json", "csv", "text", "svg"))
    parser = _Parser(prog="paramdisc", description="Discriminant analysis of parametric symmetric matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "charpoly": "characteristic polynomial p(E, lambda)",
        "disc": "discriminants before and after square-free reduction",
        "crossings": "level crossings and exceptional points",
        "symmetry": "permutation symmetry group and degeneracy check",
        "sweep": "eigenvalues on a lambda grid",
        "report": "everything above in one document",
        "plot": "SVG plot of the eigenvalue sweep",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text)
    return parser


def _join_range(argv: list) -> list:
    # "--range -2:2" would otherwise be read as an option
    out, it = [], iter(argv)
    for a in it:
        if a == "--range":
            out.append("--range=" + next(it, ""))
        else:
            out.append(a)
    return out


def _load(args) -> MatrixDocument:
    if args.builtin:
        return MatrixDocument.from_matrix(BUILTINS[args.builtin]())
    try:
        with open(args.input, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {args.input}: {exc}") from None
    return parse_document(data)


def _text_report(rep) -> str:
    lines = [
        f"p(E) = {rep.char_poly}",
        f"Disc_E(p) identically zero: {rep.identically_zero_before_reduction}",
        f"q(E) = {rep.reduced_poly}",
        f"Disc_E(q) = {rep.discriminant}",
    ]
    for c in rep.crossings:
        groups = "; ".join(f"levels {[k + 1 for k in idx]} at E = {format_float(v)}" for idx, v in c.clusters)
        lines.append(f"crossing at lambda = {format_float(c.lam)} (multiplicity {c.root.multiplicity}): {groups}")
    for r in rep.unconfirmed:
        lines.append(f"unconfirmed discriminant root at lambda = {format_float(r.value)}")
    for e in rep.exceptional_points:
        lines.append(f"exceptional point at lambda = {format_float(e.value.real)} "
                     f"{'+' if e.value.imag >= 0 else '-'} {format_float(abs(e.value.imag))}i, "
                     f"|lambda| = {format_float(e.modulus)}")
    radius = "none" if rep.convergence_radius is None else format_float(rep.convergence_radius)
    lines.append(f"convergence radius: {radius}")
    return "\n".join(lines) + "\n"


def _symmetry_text(rep) -> str:
    return (
        f"group order: {rep.order}\n"
        f"abelian: {rep.abelian}\n"
        f"degeneracy expected: {rep.degeneracy_expected}\n"
        f"degeneracy observed: {rep.degeneracy_observed}\n"
        f"{rep.note}\n"
    )


def _execute(args) -> str | bytes:
    doc = _load(args)
    H = doc.to_matrix()
    cmd, fmt = args.command, args.format
    if cmd == "charpoly":
        p = char_poly(H)
        return str(p) + "\n" if fmt == "text" else dumps(poly_to_json(p)) + "\n"
    if cmd == "disc":
        p = char_poly(H)
        q = reduced_char_poly(H)
        d0 = discriminant(p)
        d = discriminant(q) if q.degree >= 1 else None
        if fmt == "text":
            return (f"Disc_E(p) = {d0}\nq(E) = {q}\nDisc_E(q) = {d if d is not None else 'undefined'}\n")
        return dumps({
            "discriminant_before_reduction": poly_to_json(d0),
            "disc_before_reduction_zero": d0 == 0,
            "reduced_poly": poly_to_json(q),
            "discriminant": None if d is None else poly_to_json(d),
            "degeneracy": degeneracy_to_json(degeneracy_profile(H)),
        }) + "\n"
    if cmd == "crossings":
        rep = classify_crossings(H, args.lambda_tol, args.gap_tol)
        return _text_report(rep) if fmt == "text" else dumps(crossings_to_json(rep)) + "\n"
    if cmd == "symmetry":
        rep = symmetry_report(H, signed=args.signed_symmetries)
        return _symmetry_text(rep) if fmt == "text" else dumps(symmetry_to_json(rep)) + "\n"
    if cmd in ("sweep", "plot"):
        lo, hi = args.range
        table = sweep(H, lo, hi, args.steps)
        if cmd == "plot":
            return emit_svg(table)
        if fmt == "csv":
            return sweep_to_csv(table)
        return dumps({"lambda": [float(x) for x in table.lambdas],
                      "eigenvalues": [[float(x) for x in row] for row in table.eigenvalues]}) + "\n"
    if cmd == "report":
        rep = classify_crossings(H, args.lambda_tol, args.gap_tol)
        sym = symmetry_report(H, signed=args.signed_symmetries)
        if fmt == "text":
            return _text_report(rep) + _symmetry_text(sym)
        return dumps(analysis_report(doc, rep, sym)) + "\n"
    raise UsageError(f"unknown command {cmd!r}")


def run(argv=None, stdout=None, stderr=None) -> int:
    """Parse ``argv``, execute one subcommand and return the process exit code."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = _parser().parse_args(_join_range(argv))
        default, allowed = FORMATS[args.command]
        args.format = args.format or default
        if args.format not in allowed:
            raise UsageError(f"{args.command} does not support --format {args.format}")
        if args.steps < 2:
            raise UsageError("--steps must be at least 2")
        if args.lambda_tol <= 0 or args.gap_tol <= 0:
            raise UsageError("tolerances must be positive")
        result = _execute(args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"paramdisc: usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except (DocumentError, ValidationError) as exc:
        print(f"paramdisc: invalid document: {exc}", file=stderr)
        return EXIT_DOCUMENT
    except NumericError as exc:
        print(f"paramdisc: numeric failure: {exc}", file=stderr)
        return EXIT_NUMERIC
    except CapabilityError as exc:
        print(f"paramdisc: capability limit: {exc}", file=stderr)
        return EXIT_CAPABILITY
    except InternalFault as exc:
        print(f"paramdisc: internal fault: {exc}", file=stderr)
        return EXIT_INTERNAL
    except DomainError as exc:
        print(f"paramdisc: invalid input: {exc}", file=stderr)
        return EXIT_DOCUMENT
    if args.output:
        mode = "wb" if isinstance(result, bytes) else "w"
        with open(args.output, mode, **({} if mode == "wb" else {"encoding": "utf-8", "newline": ""})) as fh:
            fh.write(result)
    elif isinstance(result, bytes):
        buf = getattr(stdout, "buffer", None)
        if buf is not None:
            buf.write(result)
            buf.flush()
        else:
            stdout.write(result.decode("utf-8"))
    else:
        stdout.write(result)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
