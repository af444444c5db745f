"""Command-line surface: `coquasi check` runs the identity checkers on a
document or builtin, `coquasi build` drives the constructions.

Exit codes: 0 all identities hold / build succeeded; 1 failed identities or a
construction error; 2 parse or schema errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import docio
from .catalog import h2_table, h3_table
from .cleft import build_morita, check_morita, cleft_to_crossed, crossed_to_cleft, morita_strictness
from .comodule import galois_can, twist_comodule_algebra
from .crossed import (build_crossed_product, circledast_algebra, deform_by_a,
                      heisenberg_double, twist_crossed_system, witness_from_values)
from .cyclotomic import FieldSpec
from .errors import CoquasiError, DivisionByZero, SchemaError
from .report import Report
from .structures import twist_bialgebra


def _field_opt(args) -> FieldSpec | None:
    return FieldSpec(args.field) if args.field else None


def _print_report(rep: Report, as_json: bool) -> int:
    if as_json:
        print(json.dumps(rep.to_json(), indent=2, sort_keys=True))
    else:
        print(rep.summary())
    return 0 if rep.ok else 1


def cmd_check(args) -> int:
    kind, obj = docio.load_target(args.target, kind=args.kind, field=_field_opt(args))
    rep = docio.check_document(obj)
    return _print_report(rep, args.json)


def _load(target: str, kind: str | None, field) -> object:
    return docio.load_target(target, kind=kind, field=field)[1]


def _save(obj, args, host_ref=None) -> None:
    if args.output:
        docio.save_document(obj, args.output, host_ref=host_ref)
        print(f"wrote {args.output}")


def cmd_build(args) -> int:
    field = _field_opt(args)
    sub = args.subcommand
    if sub == "crossed-product":
        cs = _load(args.inputs[0], "crossed_system", field)
        prod = build_crossed_product(cs)
        print(f"crossed product of dimension {prod.underlying.dim}")
        _save(prod.underlying, args)
        return 0
    if sub == "heisenberg":
        H = _load(args.inputs[0], None, field)
        prod = heisenberg_double(H)
        print(f"convolution-dual crossed product of dimension {prod.underlying.dim}")
        _save(prod.underlying, args)
        return 0
    if sub == "circledast":
        H = _load(args.inputs[0], None, field)
        A = _load(args.inputs[1], "comodule_algebra", field)
        star = circledast_algebra(H, A)
        from .linear import check_algebra
        rep = check_algebra(star.algebra)
        print(f"Hom-space algebra of dimension {star.algebra.dim}; "
              f"associative+unital: {'yes' if rep.ok else 'no'}")
        _save(star.algebra, args)
        return 0 if rep.ok else 1
    if sub == "twist":
        kind, obj = docio.load_target(args.inputs[0], field=field)
        tw = _load(args.inputs[1], "twist", field)
        if kind in ("coquasi_hopf", "coquasi_bialgebra"):
            out = twist_bialgebra(obj, tw)
        elif kind == "comodule_algebra":
            out = twist_comodule_algebra(obj, tw)
        elif kind == "crossed_system":
            out = twist_crossed_system(obj, tw)
        else:
            raise SchemaError(f"cannot twist a {kind}")
        print(f"twisted {kind}")
        _save(out, args)
        return 0
    if sub == "deform":
        cs = _load(args.inputs[0], "crossed_system", field)
        with open(args.inputs[1], "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        a_map = docio.parse_tensor(cs.field(), raw["a_map"], (cs.R.dim, cs.host.dim))
        w = witness_from_values(cs, a_map)
        out = deform_by_a(cs, w)
        print("deformed crossed system")
        _save(out, args)
        return 0
    if sub == "cleft-to-crossed":
        clv = _load(args.inputs[0], "cleaving_system", field)
        out = cleft_to_crossed(clv)
        print(f"recovered crossed system over {out.R.dim}-dimensional coinvariants")
        _save(out, args)
        return 0
    if sub == "crossed-to-cleft":
        cs = _load(args.inputs[0], "crossed_system", field)
        cs = cs.with_sigma_inverse()
        prod = build_crossed_product(cs)
        out = crossed_to_cleft(prod)
        print("built cleaving system on the crossed product")
        _save(out, args)
        return 0
    if sub == "morita":
        A = _load(args.inputs[0], "comodule_algebra", field)
        ctx = build_morita(A)
        rep = check_morita(ctx)
        strict = morita_strictness(ctx)
        info = {
            "dimensions": {"ring1": ctx.ring1.dim, "ring2": ctx.ring2.dim,
                           "bimod_p": ctx.bimod_p.dim, "bimod_q": ctx.bimod_q.dim},
            "laws": rep.to_json(),
            "strictness": strict.verdict,
            "splitting": strict.report.to_json(),
        }
        if args.json:
            print(json.dumps(info, indent=2, sort_keys=True))
        else:
            print(f"Hom-space dimensions: ring1={ctx.ring1.dim} ring2={ctx.ring2.dim} "
                  f"P={ctx.bimod_p.dim} Q={ctx.bimod_q.dim}")
            print(f"context laws: {'all hold' if rep.ok else rep.summary()}")
            print(f"strictness: {strict.verdict}")
        return 0 if rep.ok and strict.report.ok else 1
    if sub == "can":
        A = _load(args.inputs[0], "comodule_algebra", field)
        g = galois_can(A)
        verdict = "Bijective" if g.bijective else "NotBijective"
        if args.json:
            print(json.dumps({"verdict": verdict, "identities": g.report.to_json()},
                             indent=2, sort_keys=True))
        else:
            print(verdict)
            if g.bijective:
                print(g.report.summary())
        return 0 if (not g.bijective or g.report.ok) else 1
    if sub == "tables":
        kind, datum = docio.load_target(args.datum, field=field)
        if kind == "h2_datum":
            table = h2_table(datum)
        elif kind == "h3_datum":
            table = h3_table(datum)
        else:
            raise SchemaError("tables needs an h2_datum or h3_datum document")
        if args.json:
            print(json.dumps(table.to_json(), indent=2, sort_keys=True))
        else:
            print(table.render())
        return 0
    raise SchemaError(f"unknown build subcommand {sub!r}")


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coquasi",
                                description="exact checker and builder for "
                                            "coquasi-Hopf structure constants")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("check", help="run every identity checker on a document")
    pc.add_argument("target", help="document path or builtin: URI")
    pc.add_argument("--kind", default=None, help="expected document kind")
    pc.add_argument("--json", action="store_true", help="machine-readable report")
    pc.add_argument("--field", type=int, default=None,
                    help="cyclotomic order for builtins")
    pc.set_defaults(func=cmd_check)

    pb = sub.add_parser("build", help="run a construction")
    pb.add_argument("subcommand",
                    choices=["crossed-product", "heisenberg", "circledast", "twist",
                             "deform", "cleft-to-crossed", "crossed-to-cleft",
                             "morita", "can", "tables"])
    pb.add_argument("inputs", nargs="*", help="input documents")
    pb.add_argument("--datum", default=None, help="datum document for `tables`")
    pb.add_argument("-o", "--output", default=None, help="output document path")
    pb.add_argument("--json", action="store_true")
    pb.add_argument("--field", type=int, default=None)
    pb.set_defaults(func=cmd_build)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SchemaError, DivisionByZero, FileNotFoundError,
            json.JSONDecodeError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except CoquasiError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
