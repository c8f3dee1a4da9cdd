"""
Command-line front end.

    mindisc elliptic-minimize  [FILE] [--json] [--certificate] [--batch FILE]
    mindisc super-minimize     [FILE] [--json] [--certificate] [--batch FILE]
    mindisc discriminant       [FILE] [--form COEFFS] [--json]
    mindisc transvectant       F G R [--json]

Exit status: 0 success, 2 malformed or degenerate input, 3 singular curve.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .arith import factorize
from .documents import (
    CurveDocument,
    ResultDocument,
    document_discriminant,
    emit,
    minimize_elliptic,
    minimize_superelliptic,
    parse_int,
    parse_json,
)
from .errors import DomainError, SingularCurveError
from .forms import BinaryForm, transvectant

EXIT_OK = 0
EXIT_MALFORMED = 2
EXIT_SINGULAR = 3

MINIMIZERS = {
    "elliptic-minimize": minimize_elliptic,
    "super-minimize": minimize_superelliptic,
}


def exit_code_for(exc: Exception) -> int:
    if isinstance(exc, SingularCurveError):
        return EXIT_SINGULAR
    return EXIT_MALFORMED


def _read_input(path) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _format_ideal(ideal) -> str:
    return str(ideal) + ("  (sign -1)" if ideal.sign < 0 else "")


def _model_str(doc: CurveDocument) -> str:
    if doc.kind == "elliptic":
        return "[" + ", ".join(map(str, doc.a)) + "]"
    return f"n={doc.n} f=[" + ", ".join(map(str, doc.f)) + "] (ascending)"


def format_table(res: ResultDocument) -> str:
    tr = res.transformation
    names = ("u", "r", "s", "t")
    rows = [
        ("curve", res.input.kind),
        ("input model", _model_str(res.input)),
        ("minimal model", _model_str(res.minimal_model)),
        ("transformation", " ".join(f"{k}={v}" for k, v in zip(names, tr))),
        ("discriminant before", str(res.discriminant_before)),
        ("discriminant after", str(res.discriminant_after)),
        ("minimal discriminant", _format_ideal(res.factored_minimal_discriminant)),
    ]
    if res.certificate is not None:
        for p, status in sorted(res.certificate.items()):
            rows.append((f"  at p = {p}", status))
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def run_minimize(command: str, text: str, certificate: bool) -> tuple[int, str, str]:
    """Process one document; returns (exit code, JSON line, table)."""
    try:
        doc = CurveDocument.from_dict(parse_json(text))
        res = MINIMIZERS[command](doc, certificate=certificate)
    except DomainError as exc:
        code = exit_code_for(exc)
        return code, json.dumps({"error": str(exc), "exit_code": code}), f"error: {exc}"
    res.check()
    return EXIT_OK, emit(res), format_table(res)


def _batch_worker(job):
    return run_minimize(*job)


def cmd_minimize(args) -> int:
    if args.batch:
        with open(args.batch) as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip()]
        jobs = [(args.command, ln, args.certificate) for ln in lines]
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                results = list(pool.map(_batch_worker, jobs, chunksize=8))
        else:
            results = [_batch_worker(j) for j in jobs]
        for i, (code, line, table) in enumerate(results):
            if args.json:
                print(line)
            else:
                if i:
                    print()
                print(table)
        return max((code for code, _, _ in results), default=EXIT_OK)

    code, line, table = run_minimize(args.command, _read_input(args.input), args.certificate)
    if code and not args.json:
        print(table, file=sys.stderr)
    else:
        print(line if args.json else table)
    return code


def _parse_coeffs(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        value = parse_json(text)
        if not isinstance(value, list):
            raise DomainError(f"expected a coefficient list, got {text!r}")
        return [parse_int(v, "coefficient") for v in value]
    return [parse_int(v, "coefficient") for v in text.split(",")]


def cmd_discriminant(args) -> int:
    if args.form is not None:
        doc = CurveDocument("form", f=tuple(_parse_coeffs(args.form)))
    else:
        doc = CurveDocument.from_dict(parse_json(_read_input(args.input)))
    if doc.kind != "elliptic" and doc.f and doc.f[-1] == 0:
        raise DomainError("degenerate leading coefficient")
    delta = document_discriminant(doc)
    fac = factorize(delta) if delta else None
    if args.json:
        out = {"discriminant": str(delta), "factorization": None}
        if fac is not None:
            out["factorization"] = {
                "sign": str(fac.sign),
                "factors": [[str(p), str(e)] for p, e in sorted(fac.factors.items())],
            }
        print(json.dumps(out, separators=(",", ":")))
    elif fac is None:
        print("0  (not factored)")
    else:
        print(f"{delta} = {fac}")
    return EXIT_OK


def _fraction_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def cmd_transvectant(args) -> int:
    f = BinaryForm.from_ascending(_parse_coeffs(args.f))
    g = BinaryForm.from_ascending(_parse_coeffs(args.g))
    h = transvectant(f, g, parse_int(args.r, "r"))
    coeffs = [_fraction_str(c) for c in h.ascending()]
    if args.json:
        print(json.dumps({"coefficients": coeffs, "order": "ascending"}, separators=(",", ":")))
    else:
        print("[" + ", ".join(coeffs) + "]")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="mindisc",
        description="Minimal-discriminant models of elliptic and superelliptic curves over Q.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, helptext in (
        ("elliptic-minimize", "minimal model of a long Weierstrass equation"),
        ("super-minimize", "scaling reduction of y^n = f(x)"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("input", nargs="?", help="JSON document (default: stdin)")
        p.add_argument("--json", action="store_true", help="structured output")
        p.add_argument("--certificate", action="store_true", help="per-prime minimality status")
        p.add_argument("--batch", metavar="FILE", help="one JSON document per line")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for --batch")
        p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("discriminant", help="exact discriminant and its factorization")
    p.add_argument("input", nargs="?", help="JSON document (default: stdin)")
    p.add_argument("--form", metavar="COEFFS", help="form coefficients, constant term first")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_discriminant)

    p = sub.add_parser("transvectant", help="r-th transvectant of two forms")
    p.add_argument("f", help="coefficients of f, constant term first")
    p.add_argument("g", help="coefficients of g, constant term first")
    p.add_argument("r")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_transvectant)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
