"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 for unreadable input or an invalid configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .catalog import FAMILIES, FamilySpec, build, oscillator_flags, paper_tp_product
from .derivations import HALF, delta_derivation_space
from .errors import TpalgError
from .formats import (
    algebra_to_json,
    load_algebra,
    load_linear_map,
    load_product,
    product_to_json,
)
from .lie import jacobi_violation
from .papercheck import CHECKABLE, run_paper_check
from .scalar import format_scalar, parse_scalar
from .tp import (
    associator_constraints,
    quadratic_forms_json,
    tp_candidate_space,
    transport_product,
    verify_tp,
)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT = 0, 1, 2


class _Output:
    def __init__(self, path: str | None):
        self.path = path
        self.parts: list[str] = []

    def write(self, text: str) -> None:
        self.parts.append(text)

    def line(self, text: str = "") -> None:
        self.parts.append(text + "\n")

    def flush(self) -> None:
        text = "".join(self.parts)
        if self.path:
            Path(self.path).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)


def _csv_scalars(text: str | None) -> list:
    if not text:
        return []
    return [parse_scalar(x) for x in text.split(",")]


def _failure_text(kind: str, failure) -> str:
    indices, out = failure
    return f"{kind} fails at basis indices {list(indices)}, output index {out}"


# -- commands ----------------------------------------------------------------

def cmd_check_jacobi(args, out: _Output) -> int:
    L = load_algebra(args.file, validate=False)
    bad = jacobi_violation(L)
    if args.format == "json":
        out.line(json.dumps({"jacobi": bad is None, "triple": list(bad[0]) if bad else None}))
    elif bad is None:
        out.line("jacobi: ok")
    else:
        out.line(f"jacobi: fails at triple {bad[0]} (output index {bad[1]})")
    return EXIT_OK if bad is None else EXIT_CHECK_FAILED


def cmd_derive(args, out: _Output) -> int:
    L = load_algebra(args.file)
    delta = parse_scalar(args.delta)
    D = delta_derivation_space(L, delta)
    maps = [[[format_scalar(x) for x in phi.matrix.row(i)] for i in range(L.dim)] for phi in D.maps()]
    if args.format == "json":
        out.line(json.dumps({"delta": format_scalar(delta), "dimension": D.dim, "basis": maps}))
    else:
        out.line(f"dimension {D.dim}")
        for m in maps:
            out.line(json.dumps(m))
    return EXIT_OK


def cmd_tp_space(args, out: _Output) -> int:
    L = load_algebra(args.file)
    T = tp_candidate_space(L)
    if args.constraints:
        out.write(quadratic_forms_json(associator_constraints(T)))
        return EXIT_OK
    tables = [
        [[i, j, [[k, format_scalar(c)] for k, c in sorted(v.items())]] for (i, j), v in sorted(d.products.items())]
        for d in T.products()
    ]
    if args.format == "json":
        out.line(json.dumps({"dimension": T.dim, "basis": tables}))
    else:
        out.line(f"dimension {T.dim}")
        for t in tables:
            out.line(json.dumps(t))
    return EXIT_OK


def _report_json(rep) -> dict:
    doc = rep.flags()
    doc.update(is_tp=rep.is_tp, is_poisson=rep.is_poisson)
    for kind in ("associativity", "compatibility", "leibniz"):
        f = getattr(rep, f"{kind}_failure")
        doc[f"{kind}_failure"] = None if f is None else {"basis": list(f[0]), "out": f[1]}
    return doc


def cmd_tp_verify(args, out: _Output) -> int:
    L = load_algebra(args.algebra)
    d = load_product(args.product)
    rep = verify_tp(L, d)
    if args.format == "json":
        out.line(json.dumps(_report_json(rep)))
    else:
        for k, v in rep.flags().items():
            out.line(f"{k}: {str(v).lower()}")
        for kind in ("associativity", "compatibility"):
            f = getattr(rep, f"{kind}_failure")
            if f is not None:
                out.line(_failure_text(kind, f))
    return EXIT_OK if rep.is_tp else EXIT_CHECK_FAILED


def cmd_tp_poisson(args, out: _Output) -> int:
    L = load_algebra(args.algebra)
    d = load_product(args.product)
    rep = verify_tp(L, d)
    if args.format == "json":
        out.line(json.dumps({"poisson_leibniz": rep.poisson_leibniz, "is_poisson": rep.is_poisson,
                             "leibniz_failure": _report_json(rep)["leibniz_failure"]}))
    else:
        out.line(f"poisson_leibniz: {str(rep.poisson_leibniz).lower()}")
        if rep.leibniz_failure is not None:
            out.line(_failure_text("leibniz", rep.leibniz_failure))
    return EXIT_OK if rep.poisson_leibniz else EXIT_CHECK_FAILED


def cmd_tp_transport(args, out: _Output) -> int:
    L = load_algebra(args.algebra)
    phi = load_linear_map(args.automorphism)
    d = load_product(args.product)
    out.write(product_to_json(transport_product(L, phi, d), name="transported", basis=L.basis))
    return EXIT_OK


def cmd_catalog_emit(args, out: _Output) -> int:
    spec = FamilySpec(args.family, args.n, tuple(_csv_scalars(args.lambdas)))
    L = build(spec)
    for flag in oscillator_flags(spec.lambdas) if spec.family == "oscillator" else []:
        print(f"note: {flag} (outside the usual 0 < λ_1 <= ... <= λ_n convention)", file=sys.stderr)
    if args.params is not None:
        d = paper_tp_product(spec, _csv_scalars(args.params))
        out.write(product_to_json(d, name=f"{L.name}_tp", basis=L.basis))
    else:
        out.write(algebra_to_json(L))
    return EXIT_OK


def cmd_paper_check(args, out: _Output) -> int:
    results = run_paper_check(args.family, args.n, args.samples, args.seed, _csv_scalars(args.lambdas) or None)
    ok = all(r.passed for r in results)
    if args.format == "json":
        out.line(json.dumps({
            "family": args.family, "n": args.n, "samples": args.samples, "seed": args.seed,
            "passed": ok, "checks": [r.to_json() for r in results],
        }))
    else:
        for r in results:
            out.line(r.line())
        failed = [r for r in results if not r.passed]
        out.line(f"{len(results) - len(failed)}/{len(results)} checks passed")
        if failed:
            out.line(f"first failure: sample={failed[0].sample} {failed[0].name}: {failed[0].detail}")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


# -- parser ------------------------------------------------------------------

def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")

    p = argparse.ArgumentParser(prog="tpalg", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"tpalg {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="structural checks").add_subparsers(dest="what", required=True)
    c = check.add_parser("jacobi", parents=[common], help="verify the Jacobi identity of an algebra file")
    c.add_argument("file")
    c.set_defaults(func=cmd_check_jacobi)

    c = sub.add_parser("derive", parents=[common], help="δ-derivation space of an algebra")
    c.add_argument("--delta", default=format_scalar(HALF), help="δ as a SCALAR (default 1/2)")
    c.add_argument("file")
    c.set_defaults(func=cmd_derive)

    tp = sub.add_parser("tp", help="transposed Poisson structures").add_subparsers(dest="what", required=True)
    c = tp.add_parser("space", parents=[common], help="linear space of compatible symmetric products")
    c.add_argument("--constraints", action="store_true", help="emit associativity quadratic forms instead")
    c.add_argument("file")
    c.set_defaults(func=cmd_tp_space)
    for name, func, helptext in (
        ("verify", cmd_tp_verify, "check associativity and compatibility of a product"),
        ("poisson", cmd_tp_poisson, "check the Poisson Leibniz rule for a product"),
    ):
        c = tp.add_parser(name, parents=[common], help=helptext)
        c.add_argument("algebra")
        c.add_argument("product")
        c.set_defaults(func=func)
    c = tp.add_parser("transport", parents=[common], help="transport a product along an automorphism")
    c.add_argument("algebra")
    c.add_argument("automorphism")
    c.add_argument("product")
    c.set_defaults(func=cmd_tp_transport)

    cat = sub.add_parser("catalog", help="family constructors").add_subparsers(dest="what", required=True)
    c = cat.add_parser("emit", parents=[common], help="write a family algebra (or its TP table with --params)")
    c.add_argument("--family", required=True, choices=FAMILIES)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--lambda", dest="lambdas", help="comma-separated oscillator parameters")
    c.add_argument("--params", help="comma-separated TP table parameters")
    c.set_defaults(func=cmd_catalog_emit)

    c = sub.add_parser("paper-check", parents=[common], help="seeded reproduction of the recorded results")
    c.add_argument("--family", required=True, choices=CHECKABLE)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--samples", type=_positive, default=1)
    c.add_argument("--seed", type=_u64, default=0)
    c.add_argument("--lambda", dest="lambdas", help="fix the oscillator parameters instead of sampling")
    c.set_defaults(func=cmd_paper_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Output(getattr(args, "output", None))
    try:
        code = args.func(args, out)
    except (TpalgError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
