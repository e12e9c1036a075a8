"""Command line front end.

Operator composition with ';' is read in application order: "d1; s1" applies
d1 first and then s1, i.e. it is the composite s1 o d1.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from .expr import ParseError, Session, parse, parse_element, parse_operator, parse_weyl
from .galg import AlgebraKind, Element, dimension
from .ops import Op
from .qarith import Scalar, ScalarField, char_q, cyclotomic_polynomial
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_field(text: str) -> ScalarField:
    if text == "generic":
        return ScalarField.generic()
    if text.startswith("root:"):
        try:
            m = int(text[5:])
        except ValueError:
            raise UsageError(f"bad root of unity order in {text!r}") from None
        if m < 3:
            raise UsageError("root:<m> needs m >= 3")
        return ScalarField.root_of_unity(m)
    raise UsageError(f"--q must be 'generic' or 'root:<m>', got {text!r}")


def parse_kind(text: Optional[str], field: ScalarField, l: Optional[int] = None) -> Optional[AlgebraKind]:
    if text is None:
        return None
    name, _, arg = text.partition(":")
    if name == "restricted":
        if arg:
            try:
                l = int(arg)
            except ValueError:
                raise UsageError(f"bad restricted order in {text!r}") from None
        if l is None:
            if field.is_generic:
                raise UsageError("restricted kind needs a root of unity (--q root:<m>) or restricted:<l>")
            l = char_q(field)
        return AlgebraKind.restricted(l)
    if arg or name not in AlgebraKind.NAMES:
        raise UsageError(f"--kind must be divided, restricted:<l>, exterior or quantum_space, got {text!r}")
    return AlgebraKind(name)


def parse_variant(text: str) -> int:
    if text in ("+", "+1", "plus"):
        return 1
    if text in ("-", "-1", "minus"):
        return -1
    raise UsageError(f"--variant must be + or -, got {text!r}")


def field_header(field: ScalarField) -> str:
    return f"q = {field} (char(q) = {char_q(field)})"


def _common(p: argparse.ArgumentParser, deg: int = None) -> None:
    p.add_argument("--n", type=int, default=2, help="number of variables (default 2)")
    p.add_argument("--q", default="generic", help="generic or root:<m> for a primitive m-th root of unity")
    p.add_argument("--kind", default=None, help="divided | restricted:<l> | exterior | quantum_space")
    p.add_argument("--variant", default="+", help="Weyl algebra / D_q coproduct variant, + or -")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    if deg is not None:
        p.add_argument("--deg", type=int, default=deg, help=f"degree bound for checks (default {deg})")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qdivpow",
        description="Quantum divided power algebras, q-differential operators and U_q realizations.",
        epilog="Operator composition 'a; b' applies a first, then b.")
    sub = ap.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("eval", help="evaluate a scalar, element or operator expression")
    p.add_argument("expr")
    _common(p)

    p = sub.add_parser("apply", help="apply an operator to an element")
    p.add_argument("op")
    p.add_argument("element")
    _common(p)

    p = sub.add_parser("normalize", help="normal form of an operator word in the quantum Weyl algebra")
    p.add_argument("expr")
    _common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help="qarith | lattice | galg | ops | weyl | hopf | uq | rootvectors | repn | all")
    p.add_argument("--presentation", default=None,
                   help="with 'hopf': dq+ | dq- | frak_aq | frak_uq | braided | powers")
    p.add_argument("--seed", type=int, default=0)
    _common(p, deg=5)

    p = sub.add_parser("decompose", help="decompose graded components into U_q-modules")
    p.add_argument("--l", type=int, default=None, help="char(q) for the restricted algebra (sets --q if absent)")
    p.add_argument("--max-s", type=int, default=None, help="largest degree for the unbounded kinds (default 5)")
    p.add_argument("--csv", action="store_true", help="dimension and weight table as CSV")
    _common(p)
    p.set_defaults(q=None)

    p = sub.add_parser("info", help="describe the field and algebra for the given options")
    _common(p)
    return ap


def _session(args) -> Session:
    field = parse_field(args.q)
    kind = parse_kind(args.kind, field)
    return Session(args.n, field, kind, parse_variant(args.variant))


def _describe(v) -> str:
    if isinstance(v, Scalar):
        return "scalar"
    if isinstance(v, Element):
        return "element"
    return "operator"


def _emit(args, out: dict, text: str) -> None:
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        print(text)


def cmd_eval(args) -> int:
    s = _session(args)
    v = parse(args.expr, s)
    _emit(args, {"q": str(s.field), "char_q": char_q(s.field), "kind": str(s.kind), "n": s.n,
                 "type": _describe(v), "value": str(v)},
          f"{field_header(s.field)}, {s.kind}, n = {s.n}\n{v}")
    return EXIT_OK


def cmd_apply(args) -> int:
    s = _session(args)
    op = parse_operator(args.op, s)
    e = parse_element(args.element, s)
    r = op.apply(e)
    _emit(args, {"q": str(s.field), "char_q": char_q(s.field), "kind": str(s.kind), "n": s.n,
                 "operator": str(op), "element": str(e), "value": str(r)},
          f"{field_header(s.field)}, {s.kind}, n = {s.n}\n{r}")
    return EXIT_OK


def cmd_normalize(args) -> int:
    s = _session(args)
    w = parse_weyl(args.expr, s)
    _emit(args, {"q": str(s.field), "char_q": char_q(s.field), "variant": "+" if s.variant > 0 else "-",
                 "n": s.n, "normal_form": str(w), "composite": w.render_math()},
          f"{field_header(s.field)}, variant {'+' if s.variant > 0 else '-'}, n = {s.n}\n"
          f"{w}\n  as composite (rightmost acts first): {w.render_math()}")
    return EXIT_OK


def _hopf_single(name: str, n: int, field: ScalarField, kind, deg: int) -> Report:
    from .hopf import PRESENTATIONS, presentation, verify_braided, verify_hopf, verify_uq_power_laws

    if name == "braided":
        k = kind or (AlgebraKind.divided() if field.is_generic else AlgebraKind.quantum_space())
        return verify_braided(k, field, n, min(deg, 4))
    if name == "powers":
        return verify_uq_power_laws(n, field)
    if name not in PRESENTATIONS:
        raise UsageError(f"unknown presentation {name!r}; expected one of {', '.join(PRESENTATIONS)}, powers")
    return verify_hopf(presentation(name, n, field, kind), deg)


def cmd_verify(args) -> int:
    from .suites import SUITE_NAMES, SuiteConfig, run_suite

    if args.suite not in SUITE_NAMES:
        raise UsageError(f"unknown suite {args.suite!r}; expected one of {', '.join(SUITE_NAMES)}")
    field = parse_field(args.q)
    kind = parse_kind(args.kind, field)
    if args.presentation is not None:
        if args.suite != "hopf":
            raise UsageError("--presentation only applies to the hopf suite")
        rep = _hopf_single(args.presentation, args.n, field, kind, args.deg)
    else:
        cfg = SuiteConfig(args.n, field, kind, args.deg, parse_variant(args.variant), args.seed)
        rep = run_suite(args.suite, cfg)
    if args.json:
        d = rep.to_dict()
        d.update({"q": str(field), "char_q": char_q(field), "n": args.n, "deg": args.deg})
        print(json.dumps(d, indent=2))
    else:
        print(field_header(field))
        print(rep.render())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_decompose(args) -> int:
    from .repn import decompose_all
    from .uq import UqRealization

    if args.q is None:
        if args.l is not None:
            field = ScalarField.root_of_unity(args.l if args.l % 2 else 2 * args.l)
        else:
            field = ScalarField.generic()
    else:
        field = parse_field(args.q)
    if args.l is not None and char_q(field) != args.l:
        raise UsageError(f"--l {args.l} disagrees with {field_header(field)}")
    kind = parse_kind(args.kind, field, args.l)
    if kind is None:
        from .uq import default_kind
        kind = default_kind(field)
    R = UqRealization(args.n, field, kind)
    reports = decompose_all(R, args.max_s if kind.name in ("divided", "quantum_space") else None)
    if args.json:
        print(json.dumps({"q": str(field), "char_q": char_q(field), "kind": str(kind), "n": args.n,
                          "components": [r.to_dict() for r in reports]}, indent=2))
    elif args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["s", "component_dimension", "hw_vector", "weight", "gl_weight", "submodule_dimension",
                        "simple"])
        for r in reports:
            for sm in r.summands:
                d = sm.to_dict()
                w.writerow([r.s, r.component_dimension, d["hw_vector"], d["weight_label"], d["gl_weight_label"],
                            d["dimension"], d["simple"]])
        sys.stdout.write(buf.getvalue())
    else:
        print(f"{field_header(field)}, {kind}, n = {args.n}")
        for r in reports:
            cr = "completely reducible" if r.completely_reducible else "not completely reducible"
            print(f"s = {r.s}: dimension {r.component_dimension}, {cr}")
            for sm in r.summands:
                d = sm.to_dict()
                line = (f"    hw {d['hw_vector']}, weight {d['weight_label']} (gl: {d['gl_weight_label']}), "
                        f"submodule dimension {d['dimension']}{'' if sm.simple else ' (not simple)'}")
                if sm.note:
                    line += f"  [{sm.note}]"
                print(line)
        total = sum(r.component_dimension for r in reports)
        print(f"total dimension {total}")
    return EXIT_OK


def cmd_info(args) -> int:
    from .hopf import PRESENTATIONS
    from .suites import SUITE_NAMES

    s = _session(args)
    F = s.field
    dim = dimension(s.kind, s.n) if s.kind.bound is not None else "infinite"
    info = {"q": str(F), "char_q": char_q(F), "kind": str(s.kind), "n": s.n, "dimension": dim,
            "variant": "+" if s.variant > 0 else "-",
            "suites": list(SUITE_NAMES), "presentations": list(PRESENTATIONS)}
    if not F.is_generic:
        info["cyclotomic_polynomial"] = list(cyclotomic_polynomial(F.m))
        info["q_to_the_l_is_one"] = F.m % 2 == 1
    lines = [field_header(F), f"algebra: {s.kind} in {s.n} variables, dimension {info['dimension']}"]
    if not F.is_generic:
        lines.append(f"minimal polynomial coefficients (constant term first): {info['cyclotomic_polynomial']}")
        lines.append(f"q^l = 1: {info['q_to_the_l_is_one']}")
    lines.append(f"suites: {', '.join(SUITE_NAMES)}")
    lines.append(f"Hopf presentations: {', '.join(PRESENTATIONS)}")
    _emit(args, info, "\n".join(lines))
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "apply": cmd_apply, "normalize": cmd_normalize, "verify": cmd_verify,
            "decompose": cmd_decompose, "info": cmd_info}


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.text is not None:
            print(f"  {exc.text}\n  {' ' * (exc.column - 1)}^", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
