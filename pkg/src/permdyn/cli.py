"""Command line exposing enumeration, star/diamond, fixed points, graphs, and bounds."""

import argparse
import json
import math
import re
import sys

from .context import make_field_ctx
from .dynamics import (
    diamond,
    fixed_count_formula,
    fixed_points_direct,
    graph_Ck,
    graph_Ik,
    spectrum_Ck,
    spectrum_Ik,
    star,
)
from .errors import GuardExceeded, InternalCheckError, MalformedInput, PreconditionError
from .fields import GF
from .genirr import bound_linearized, bound_monomial, iterate_generation, tau
from .permgroup import Matrix2, certify_perm, moebius_poly_rep, realize_permutation
from .polys import Poly, enumerate_irreducibles, first_irreducible, q_associate
from .textio import parse_poly

__all__ = ["CliConfig", "parse_perm_expr", "main"]

_MONOMIAL_RE = re.compile(r"^x(?:\^(\d+))?$")


class CliConfig:
    """Validated global options shared by every subcommand."""

    __slots__ = ("p", "m", "k", "modulus", "guard_override", "output", "seed")

    def __init__(self, args):
        self.p = args.p
        self.m = args.m
        self.k = args.k
        self.modulus = args.modulus
        self.guard_override = args.guard_override
        self.output = args.output
        self.seed = args.seed


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(message)


def _base_field(cfg):
    Fp = GF.prime(cfg.p)
    if cfg.m == 1:
        return Fp
    return GF.extension(Fp, first_irreducible(Fp, cfg.m).coeffs)


def _build_ctx(cfg):
    kwargs = {}
    if cfg.guard_override is not None:
        kwargs["guard"] = cfg.guard_override
    ext = None
    if cfg.modulus is not None:
        ext = parse_poly(_base_field(cfg), cfg.modulus)
    return make_field_ctx(cfg.p, cfg.m, cfg.k, ext_modulus=ext, **kwargs)


def _split_entries(text):
    parts, cur, depth = [], [], 0
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise MalformedInput("unbalanced brackets in matrix entries")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise MalformedInput("unbalanced brackets in matrix entries")
    parts.append("".join(cur))
    return parts


def _scalar(field, text):
    c = parse_poly(field, text)
    if c.degree > 0:
        raise MalformedInput("matrix entries must be scalars")
    return c.coeff(0)


def parse_perm_expr(ctx, expr):
    """Certified permutation from x^N, L[POLY], M[a,b,c,d], or a raw polynomial."""
    s = expr.strip()
    mono = _MONOMIAL_RE.match(s)
    if mono:
        return certify_perm(ctx, Poly.one(ctx.Fq).shift(int(mono.group(1) or 1)))
    if s.startswith("L[") and s.endswith("]"):
        return certify_perm(ctx, q_associate(parse_poly(ctx.Fq, s[2:-1])))
    if s.startswith("M[") and s.endswith("]"):
        entries = _split_entries(s[2:-1])
        if len(entries) != 4:
            raise MalformedInput("M[a,b,c,d] takes exactly four entries")
        a, b, c, d = (_scalar(ctx.Fq, t) for t in entries)
        return moebius_poly_rep(ctx, Matrix2(ctx.Fq, a, b, c, d))
    return certify_perm(ctx, parse_poly(ctx.Fq, s))


def _cmd_enumerate(cfg, args, ctx):
    polys = enumerate_irreducibles(ctx.Fq, ctx.k)
    if cfg.output == "json":
        return json.dumps([str(f) for f in polys])
    return "\n".join(str(f) for f in polys)


def _cmd_star(cfg, args, ctx):
    out = star(ctx, parse_perm_expr(ctx, args.perm), parse_poly(ctx.Fq, args.f))
    if cfg.output == "json":
        return json.dumps({"result": str(out)})
    return str(out)


def _cmd_diamond(cfg, args, ctx):
    out = diamond(ctx, parse_perm_expr(ctx, args.perm), parse_poly(ctx.Fq, args.f))
    if cfg.output == "json":
        return json.dumps({"result": str(out)})
    return str(out)


def _cmd_fixed(cfg, args, ctx):
    P = parse_perm_expr(ctx, args.perm)
    fixed = None
    count = None
    if args.method in ("direct", "both"):
        fixed = fixed_points_direct(ctx, P)
        count = len(fixed)
    if args.method in ("formula", "both"):
        n = fixed_count_formula(ctx, P)
        if count is not None and n != count:
            raise InternalCheckError("formula count disagrees with direct enumeration")
        count = n
    if cfg.output == "json":
        return json.dumps({
            "fixed": None if fixed is None else [str(f) for f in fixed],
            "count": count,
        })
    lines = [str(f) for f in fixed] if fixed else []
    lines.append("%d fixed points" % count)
    return "\n".join(lines)


def _cmd_graph(cfg, args, ctx):
    P = parse_perm_expr(ctx, args.perm)
    g = graph_Ck(ctx, P) if args.on == "ck" else graph_Ik(ctx, P)
    fmt = args.format or (cfg.output if cfg.output in ("dot", "json") else "dot")
    return g.to_dot() if fmt == "dot" else g.to_json()


def _cmd_spectrum(cfg, args, ctx):
    P = parse_perm_expr(ctx, args.perm)
    sc = spectrum_Ck(ctx, P)
    si = spectrum_Ik(ctx, P)
    if cfg.output == "json":
        return json.dumps({"S": sc.S, "S_star": si.S, "mu": sc.mu, "mu_star": si.mu})
    return "\n".join([
        "S_P = {%s}" % ", ".join(str(n) for n in sc.S),
        "S_P* = {%s}" % ", ".join(str(n) for n in si.S),
        "mu_k = %d" % sc.mu,
        "mu_k* = %d" % si.mu,
    ])


def _cmd_generate(cfg, args, ctx):
    P = parse_perm_expr(ctx, args.perm)
    f0 = parse_poly(ctx.Fq, args.seed_poly)
    report = iterate_generation(ctx, P, f0, max_steps=args.max_steps)
    if cfg.output == "json":
        return report.to_json()
    lines = ["f_%d = %s" % (i, f) for i, f in enumerate(report.produced)]
    lines.append("period = %s" % ("unreached" if report.period is None else report.period))
    return "\n".join(lines)


def _sigma_indices(ctx, raw):
    lex = {str(f): i for i, f in enumerate(enumerate_irreducibles(ctx.Fq, ctx.k))}

    def to_index(v):
        if isinstance(v, int):
            return v
        key = str(parse_poly(ctx.Fq, str(v)))
        if key not in lex:
            raise PreconditionError("%s is not a monic irreducible of degree k" % key)
        return lex[key]

    if isinstance(raw, dict):
        out = {}
        for a, b in raw.items():
            src = int(a) if a.lstrip("-").isdigit() else to_index(a)
            out[src] = to_index(b)
        return out
    if isinstance(raw, list):
        if raw and all(isinstance(v, list) and len(v) == 2 for v in raw):
            return {to_index(a): to_index(b) for a, b in raw}
        return [to_index(v) for v in raw]
    raise MalformedInput("sigma file must hold a JSON object or array")


def _cmd_realize(cfg, args, ctx):
    try:
        with open(args.sigma, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise MalformedInput("cannot read sigma file: %s" % exc)
    except json.JSONDecodeError as exc:
        raise MalformedInput("sigma file is not valid JSON: %s" % exc)
    P = realize_permutation(ctx, _sigma_indices(ctx, raw))
    if cfg.output == "json":
        return json.dumps({"perm": str(P)})
    return str(P)


def _cmd_bounds(cfg, args):
    q = cfg.p ** cfg.m
    if args.family == "tau":
        ceiling = math.ceil(tau(cfg.p, cfg.k) / cfg.k)
        if cfg.output == "json":
            return json.dumps({"family": "tau", "ceiling": ceiling})
        return "ceil(tau/k) = %d" % ceiling
    if args.family == "monomial":
        if args.n is None:
            raise MalformedInput("--family monomial needs --n")
        bound = bound_monomial(q, cfg.k, args.n)
    else:
        if args.g is None:
            raise MalformedInput("--family linearized needs --g")
        bound = bound_linearized(q, cfg.k, parse_poly(_base_field(cfg), args.g))
    if cfg.output == "json":
        return json.dumps({"family": args.family, "bound": str(bound)})
    return "bound = %s" % bound


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="characteristic of the base field")
    common.add_argument("--m", type=int, default=1, help="degree of F_q over F_p (default 1)")
    common.add_argument("--k", type=int, required=True, help="degree of the irreducibles under study")
    common.add_argument("--modulus", help="defining polynomial of F_{q^k} over F_q")
    common.add_argument("--guard-override", type=int, default=None,
                        help="replace the default q^k exhaustive-operation guard")
    common.add_argument("--output", choices=("text", "json", "dot"), default="text",
                        help="output format (default text)")
    common.add_argument("--seed", type=int, default=0,
                        help="factorization seed; results are seed independent")

    parser = _Parser(prog="permdyn",
                     description="Dynamics of permutation polynomials on irreducible "
                                 "polynomials over finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("enumerate", parents=[common], help="list I_k in lex order")
    sp.set_defaults(func=_cmd_enumerate, needs_ctx=True)

    sp = sub.add_parser("star", parents=[common], help="compute P*f")
    sp.add_argument("--perm", required=True, help="x^N, L[POLY], M[a,b,c,d], or a polynomial")
    sp.add_argument("--f", required=True, help="monic irreducible of degree k")
    sp.set_defaults(func=_cmd_star, needs_ctx=True)

    sp = sub.add_parser("diamond", parents=[common], help="compute the minimal polynomial of P(alpha)")
    sp.add_argument("--perm", required=True, help="x^N, L[POLY], M[a,b,c,d], or a polynomial")
    sp.add_argument("--f", required=True, help="monic irreducible of degree k")
    sp.set_defaults(func=_cmd_diamond, needs_ctx=True)

    sp = sub.add_parser("fixed", parents=[common], help="fixed polynomials of the star action")
    sp.add_argument("--perm", required=True)
    sp.add_argument("--method", choices=("direct", "formula", "both"), default="both")
    sp.set_defaults(func=_cmd_fixed, needs_ctx=True)

    sp = sub.add_parser("graph", parents=[common], help="functional graph on C_k or I_k")
    sp.add_argument("--perm", required=True)
    sp.add_argument("--on", choices=("ck", "ik"), required=True)
    sp.add_argument("--format", choices=("dot", "json"), default=None)
    sp.set_defaults(func=_cmd_graph, needs_ctx=True)

    sp = sub.add_parser("spectrum", parents=[common], help="cycle-length spectra on C_k and I_k")
    sp.add_argument("--perm", required=True)
    sp.set_defaults(func=_cmd_spectrum, needs_ctx=True)

    sp = sub.add_parser("generate", parents=[common], help="iterate f -> P*f from a seed")
    sp.add_argument("--perm", required=True)
    sp.add_argument("--seed-poly", required=True, help="irreducible seed f_0")
    sp.add_argument("--max-steps", type=int, default=None)
    sp.set_defaults(func=_cmd_generate, needs_ctx=True)

    sp = sub.add_parser("realize", parents=[common], help="interpolate a permutation of I_k")
    sp.add_argument("--sigma", required=True,
                    help="JSON file: image list, [src, dst] pairs, or an object")
    sp.set_defaults(func=_cmd_realize, needs_ctx=True)

    sp = sub.add_parser("bounds", parents=[common], help="period lower bounds")
    sp.add_argument("--family", choices=("monomial", "linearized", "tau"), required=True)
    sp.add_argument("--n", type=int, default=None, help="monomial exponent")
    sp.add_argument("--g", default=None, help="polynomial for the linearized family")
    sp.set_defaults(func=_cmd_bounds, needs_ctx=False)

    return parser


def main(argv=None):
    """Entry point; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = CliConfig(args)
        if args.needs_ctx:
            out = args.func(cfg, args, _build_ctx(cfg))
        else:
            out = args.func(cfg, args)
    except MalformedInput as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except GuardExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except PreconditionError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 4
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
