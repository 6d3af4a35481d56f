"""Command-line front end.

Exit codes: 0 success, 1 a checked identity failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import List, Optional

from . import contact as ct
from . import liealg as la
from . import linalg
from . import prequant as pq
from . import verify
from .coeff import DimensionError, Poly
from .exterior import DegreeError, KindError, MultiVec
from .expr import ParseError, format_value, normalize, parse

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


class InputError(ValueError):
    pass


INPUT_ERRORS = (
    ParseError,
    KindError,
    DegreeError,
    DimensionError,
    la.LieAlgebraError,
    ct.ContactError,
    pq.PrequantError,
    OSError,
    json.JSONDecodeError,
    InputError,
    ZeroDivisionError,
)


class Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.data: dict = {}
        self.lines: List[str] = []

    def put(self, key: str, value, label: Optional[str] = None) -> None:
        self.data[key] = value
        if label is None:
            self.lines.append(_plain(value))
        else:
            self.lines.append(f"{label}: {_plain(value)}")

    def emit(self, stream=None) -> None:
        stream = stream or sys.stdout
        if self.as_json:
            print(json.dumps(self.data, indent=2), file=stream)
        else:
            for line in self.lines:
                print(line, file=stream)


def _plain(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_plain(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"({k}): {_plain(x)}" for k, x in v.items()) + "}"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _q(x) -> str:
    return str(Fraction(x))


# contact


def _scalar(text: str, n: int) -> Poly:
    v = normalize(parse(text, n))
    if not isinstance(v, Poly):
        raise InputError(f"expected a function, got a {type(v).__name__}: {text!r}")
    return v


def _multivec(text: str, n: int) -> MultiVec:
    v = normalize(parse(text, n))
    if isinstance(v, Poly):
        return MultiVec.scalar(v)
    if not isinstance(v, MultiVec):
        raise InputError(f"expected a multivector, got a {type(v).__name__}: {text!r}")
    return v


def cmd_contact(args, out: Output) -> int:
    cs = ct.make_contact(args.n)
    op = args.op
    if op == "poisson":
        f, g = _scalar(args.args[0], cs.n), _scalar(args.args[1], cs.n)
        out.put("result", format_value(ct.poisson(cs, f, g)))
    elif op == "ham":
        out.put("result", format_value(ct.ham(cs, _scalar(args.args[0], cs.n))))
    elif op == "hat":
        out.put("result", format_value(ct.hat(cs, _scalar(args.args[0], cs.n))))
    elif op == "class":
        X = _multivec(args.args[0], cs.n)
        if X.comps and X.degree != 1:
            raise InputError("class expects a vector field")
        c = ct.contact_class(cs, X)
        out.put("kind", c.kind, "kind")
        if c.multiplier is not None:
            out.put("multiplier", format_value(c.multiplier), "multiplier")
    elif op == "deltamu":
        c = ct.basic_normal_form(cs, _multivec(args.args[0], cs.n))
        out.put("result", format_value(ct.delta_mu(cs, c).rep))
    elif op == "iso":
        c = ct.basic_normal_form(cs, _multivec(args.args[0], cs.n))
        out.put("result", format_value(ct.iso_to_basic_forms(cs, c)))
    elif op == "jacobiator":
        f, g, h = (_scalar(a, cs.n) for a in args.args[:3])
        out.put("jacobiator", format_value(ct.jacobiator(cs, f, g, h)), "jacobiator")
        out.put(
            "half_pairing_with_mu_mu",
            format_value(ct.jacobiator_rhs(cs, f, g, h)),
            "(1/2)(df^dg^dh)([mu,mu])",
        )
    return EXIT_OK


CONTACT_ARITY = {"poisson": 2, "ham": 1, "hat": 1, "class": 1, "deltamu": 1, "iso": 1, "jacobiator": 3}


# lie


def parse_vectors(spec: str, dim: int) -> List[List[Fraction]]:
    """'0,0,1', '1,0,0;0,1,0' or '(1,0,0),(0,1,0)'."""
    spec = spec.strip()
    if "(" in spec:
        groups = re.findall(r"\(([^()]*)\)", spec)
        leftover = re.sub(r"\([^()]*\)", "", spec).replace(",", "").strip()
        if leftover or not groups:
            raise InputError(f"cannot parse vector list {spec!r}")
    else:
        groups = [g for g in spec.split(";") if g.strip()]
    vecs = []
    for g in groups:
        try:
            v = [Fraction(x.strip()) for x in g.split(",")]
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad rational in vector {g!r}") from None
        if len(v) != dim:
            raise InputError(f"vector {g!r} has {len(v)} entries, expected {dim}")
        vecs.append(v)
    if not vecs:
        raise InputError("empty vector list")
    return vecs


def load_algebra(path: str) -> la.LieAlgebra:
    with open(path, encoding="utf-8") as fh:
        return la.LieAlgebra.from_json(json.load(fh))


def load_matrix(path: str, dim: int):
    with open(path, encoding="utf-8") as fh:
        rows = json.load(fh)
    try:
        m = [[Fraction(str(x)) for x in r] for r in rows]
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputError("projection file must be a JSON list of rows of rationals") from None
    if len(m) != dim or any(len(r) != dim for r in m):
        raise InputError(f"projection must be {dim}x{dim}")
    return m


def _cochain_json(c: la.Cochain):
    return {",".join(map(str, k)): [_q(x) for x in v] for k, v in sorted(c.comps.items())}


def cmd_lie(args, out: Output) -> int:
    L = load_algebra(args.file)
    op = args.op
    if op == "validate":
        out.put("valid", True, "Jacobi identity")
        out.put("dim", L.dim, "dim")
    elif op == "homology":
        V = la.Ideal(L, parse_vectors(args.ideal, L.dim)) if args.ideal else la.Ideal(L, linalg.identity(L.dim))
        res = la.homology(V, args.k)
        out.put("dim", res.dim, f"dim H_{args.k}")
        out.put("representatives", [str(r) for r in res.representatives], "representatives")
    elif op == "cohomology":
        S = la.trivial_module(L) if args.module == "trivial" else la.adjoint_module(L)
        res = la.cohomology(L, S, args.k)
        out.put("dim", res.dim, f"dim H^{args.k}")
        out.put("basis", [_cochain_json(b) for b in res.basis], "basis")
    elif op == "charclass":
        V = la.Ideal(L, parse_vectors(args.ideal, L.dim))
        cc = la.char_class(L, V)
        out.put("h2_dim", cc.h2_dim, "dim H^2(L/V; H_1(V))")
        out.put("coords", [_q(x) for x in cc.coords], "class coordinates")
        out.put("nonzero", not cc.is_zero, "nonzero")
        out.put("cocycle", _cochain_json(cc.cocycle), "cocycle")
    elif op == "curvature":
        V = la.Ideal(L, parse_vectors(args.ideal, L.dim))
        if args.projection:
            alpha = load_matrix(args.projection, L.dim)
        else:
            alpha = la.IdealSplitting.build(L, V).default_projection()
        R = la.curvature(L, V, alpha)
        out.put("curvature", _cochain_json(R), "curvature (ideal coordinates)")
        out.put("zero", R.is_zero(), "zero")
        kernel = la.projection_kernel(L, alpha)
        out.put("kernel_is_subalgebra", la.is_subalgebra(L, kernel), "kernel is a subalgebra")
    return EXIT_OK


# preq


def cmd_preq(args, out: Output) -> int:
    cs = ct.make_contact(args.n)
    try:
        h = Fraction(args.h)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational for --h: {args.h!r}") from None
    norm = args.normalization
    if args.op == "lift":
        f = _scalar(args.args[0], cs.n)
        op = pq.lift(cs, f, h, norm)
        out.put("operator", str(op), "operator")
        out.put("on_weight", str(op.on_weight(h)), f"on weight {h}")
        return EXIT_OK
    f, g = _scalar(args.args[0], cs.n), _scalar(args.args[1], cs.n)
    defect = pq.homomorphism_defect(cs, f, g, h, norm)
    out.put("defect", str(defect), "homomorphism defect")
    out.put("zero", defect.is_zero(), "zero")
    return EXIT_OK if defect.is_zero() else EXIT_FAILED


PREQ_ARITY = {"lift": 1, "defect": 2}


# verify


def cmd_verify(args, out: Output) -> int:
    names = verify.SUITES if args.suite == "all" else (args.suite,)
    if args.n < 1 or args.max_degree < 0 or args.samples < 1:
        raise InputError("need --n >= 1, --max-degree >= 0 and --samples >= 1")
    checks = verify.run_suites(names, args.seed, args.n, args.max_degree, args.samples)
    ok = all(c.passed for c in checks)
    out.data["checks"] = [c.to_json() for c in checks]
    out.data["passed"] = ok
    for c in checks:
        tag = "PASS" if c.passed else "FAIL"
        out.lines.append(f"[{tag}] {c.suite}: {c.name} ({c.samples - c.failed}/{c.samples})")
        for dump in c.failures:
            out.lines.append("    counterexample: " + ", ".join(f"{k}={v}" for k, v in dump.items()))
    out.lines.append("all identities hold" if ok else "FAILED")
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    p = argparse.ArgumentParser(prog="contactlie", description=__doc__, parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("contact", parents=[common], help="Poisson calculus on the standard contact space")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("op", choices=sorted(CONTACT_ARITY))
    c.add_argument("args", nargs="+", metavar="EXPR")

    lie = sub.add_parser("lie", parents=[common], help="Lie algebra computations")
    lie.add_argument("--file", required=True)
    lsub = lie.add_subparsers(dest="op", required=True)
    lsub.add_parser("validate", parents=[common])
    h = lsub.add_parser("homology", parents=[common])
    h.add_argument("--ideal")
    h.add_argument("--k", type=int, required=True)
    co = lsub.add_parser("cohomology", parents=[common])
    co.add_argument("--module", choices=["trivial", "adjoint"], default="trivial")
    co.add_argument("--k", type=int, required=True)
    ch = lsub.add_parser("charclass", parents=[common])
    ch.add_argument("--ideal", required=True)
    cu = lsub.add_parser("curvature", parents=[common])
    cu.add_argument("--ideal", required=True)
    cu.add_argument("--projection")

    pr = sub.add_parser("preq", parents=[common], help="prequantization operators")
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--h", required=True)
    pr.add_argument("--normalization", choices=pq.NORMALIZATIONS, default=pq.INVERSE_IH)
    pr.add_argument("op", choices=sorted(PREQ_ARITY))
    pr.add_argument("args", nargs="+", metavar="EXPR")

    v = sub.add_parser("verify", parents=[common], help="seeded identity suites")
    v.add_argument("--suite", choices=list(verify.SUITES) + ["all"], default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--n", type=int, default=1)
    v.add_argument("--max-degree", type=int, default=3)
    v.add_argument("--samples", type=int, default=100)
    return p


COMMANDS = {"contact": cmd_contact, "lie": cmd_lie, "preq": cmd_preq, "verify": cmd_verify}


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    arity = {"contact": CONTACT_ARITY, "preq": PREQ_ARITY}.get(args.command)
    if arity is not None and len(args.args) != arity[args.op]:
        print(f"error: {args.op} takes {arity[args.op]} expression(s)", file=sys.stderr)
        return EXIT_INPUT
    out = Output(getattr(args, "json", False))
    try:
        code = COMMANDS[args.command](args, out)
    except INPUT_ERRORS as e:
        if out.as_json:
            print(json.dumps({"error": str(e)}), file=sys.stdout)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    out.emit()
    return code


def main() -> None:
    sys.exit(run())
