"""Command-line front end: ``skewcode <subcommand> --field GF(3^2) --d 1 ...``.

Exit status: 0 success, 1 a requested check failed, 2 parse error,
3 violated hypothesis, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import central, cyclic_code, distance_lab, gqc_code, skew_poly
from .errors import AssumptionError, BudgetError, ParseError
from .galois import DEFAULT_SIZE_BUDGET, SkewAutomorphism, gf
from .notation import format_element, format_poly, parse_element, parse_field, parse_poly

SCHEMA = 1


class Ctx:
    def __init__(self, args):
        self.args = args
        p, m = parse_field(args.field)
        self.field = gf(p, m, budget=args.field_budget)
        if args.d < 1:
            raise AssumptionError(f"σ exponent d={args.d} must be positive")
        self.sigma = SkewAutomorphism(self.field, args.d)
        self.vector = args.vector

    def poly(self, text):
        return parse_poly(self.sigma, text)

    def fmt(self, f):
        return format_poly(f, self.vector)

    def elem(self, a, field=None):
        return format_element(field or self.field, a, self.vector)

    def matrix(self, M):
        return [[self.elem(a, M.field) for a in row] for row in M.rows]


def _blocks(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(b) for b in text.replace(";", ",").split(",") if b.strip())
    except ValueError as exc:
        raise ParseError(f"bad block lengths {text!r}") from exc


def _generators(ctx: Ctx, gens: list[str], l: int | None = None):
    if not gens:
        raise ParseError("at least one --gen is required")
    out = []
    for g in gens:
        parts = [ctx.poly(p) for p in g.split(";")]
        if l is not None and len(parts) != l:
            raise ParseError(f"generator {g!r} has {len(parts)} components, expected {l}")
        out.append(tuple(parts))
    return out


# ---------------------------------------------------------------------------
# subcommands; each returns (report dict, ok flag)

def cmd_mul(ctx, a):
    f, g = ctx.poly(a.f), ctx.poly(a.g)
    return {"product": ctx.fmt(f * g)}, True


def cmd_divide(ctx, a):
    f, g = ctx.poly(a.f), ctx.poly(a.g)
    res = skew_poly.left_divide(f, g) if a.left else skew_poly.right_divide(f, g)
    return {"side": res.side, "quotient": ctx.fmt(res.quotient), "remainder": ctx.fmt(res.remainder)}, True


def _gcd_cmd(fn, bezout=None):
    def run(ctx, a):
        f, g = ctx.poly(a.f), ctx.poly(a.g)
        rep = {"result": ctx.fmt(fn(f, g))}
        if bezout is not None:
            d, u, v = bezout(f, g)
            rep.update(u=ctx.fmt(u), v=ctx.fmt(v))
        return rep, True
    return run


def cmd_roots(ctx, a):
    rs = central.right_roots_of_unity_poly(a.n, ctx.sigma, over=a.over, budget=a.field_budget)
    fld = ctx.field if rs.over_base else rs.tower.top
    return {"n": a.n, "top_field": f"GF({fld.p}^{rs.tower.top.m})", "count": len(rs),
            "gamma_exponents": list(rs.exponents), "roots": [ctx.elem(r, fld) for r in rs.elements]}, True


def cmd_factor(ctx, a):
    target = ctx.poly(a.g) if a.g else skew_poly.x_n_minus_1(ctx.sigma, a.n)
    tree = central.enumerate_linear_factorizations(target, cap=a.cap)
    rep = {"target": ctx.fmt(target), "ordered_chains": tree.ordered_count,
           "factor_multisets": tree.multiset_count}
    if a.list:
        rep["chains"] = [[ctx.fmt(f) for f in tree.factors(c)] for c in tree.chains]
    return rep, True


def cmd_tsm(ctx, a):
    target = ctx.poly(a.g) if a.g else a.n
    tf = central.tsm_factorization(target, ctx.sigma, split=a.split)
    return {"target": ctx.fmt(tf.target), "split": tf.split,
            "factors": [ctx.fmt(f) for f in tf.factors], "two_sided": list(tf.two_sided),
            "idempotents": [ctx.fmt(e) for e in tf.idempotents]}, True


def cmd_cyclic(ctx, a):
    code = cyclic_code.cyclic_from_generator(ctx.poly(a.g), a.n)
    G = cyclic_code.generator_matrix(code)
    rep = {"n": code.n, "q": ctx.field.q, "d_sigma": ctx.sigma.d, "g": ctx.fmt(code.g),
           "h": ctx.fmt(code.h), "k": code.k, "generator_matrix": ctx.matrix(G),
           "classical_cyclic": cyclic_code.is_classical_cyclic(code)}
    if code.h.coeffs and code.h.coeffs[0]:
        rep["dual_generator"] = ctx.fmt(cyclic_code.dual_generator(code))
        rep["dual_matrix"] = ctx.matrix(cyclic_code.dual_generator_matrix(code))
    b = cyclic_code.bch_bound(code, budget=a.field_budget)
    rep["bch"] = {"b": b.b, "delta": b.delta}
    if a.distance:
        rep["distance"] = distance_lab.exact_min_distance(G, a.budget, "auto").to_json()
    return rep, True


def _gqc_report(ctx, a, code):
    rep = {"block_lengths": list(code.block_lengths),
           "generators": [[ctx.fmt(c) for c in g] for g in code.generators],
           "k": gqc_code.dimension(code)}
    G = None
    if code.rho == 1:
        pc = gqc_code.one_gen_parity_check(code)
        G = gqc_code.gqc_generator_matrix(code)
        bound = gqc_code.one_gen_distance_bound(code)
        rep.update(h_i=[ctx.fmt(h) for h in pc.h_blocks], h=ctx.fmt(pc.h),
                   matrix=ctx.matrix(G),
                   bounds={"bch_per_block": list(bound.deltas), "blockwise_sum": bound.bound})
    dec = gqc_code.canonical_decomposition(code, split=a.split)
    rep["decomposition"] = {"split": dec.split, "factors": [ctx.fmt(f) for f in dec.pool],
                            "flags": [list(r) for r in dec.flags],
                            "ranks": [str(r) for r in dec.ranks], "direct": dec.is_direct}
    rep["rho"] = gqc_code.rho_of_decomposition(dec)
    if a.distance:
        M = G if G is not None else gqc_code.code_basis(code)
        rep["distance"] = distance_lab.exact_min_distance(M, a.budget, "auto").to_json()
    return rep, dec


def cmd_gqc(ctx, a):
    blocks = _blocks(a.blocks)
    code = gqc_code.gqc_from_generators(blocks, _generators(ctx, a.gen, len(blocks)), ctx.sigma)
    return _gqc_report(ctx, a, code)[0], True


def cmd_qc(ctx, a):
    gens = _generators(ctx, a.gen)
    l = len(gens[0])
    code = gqc_code.gqc_from_generators((a.n,) * l, gens, ctx.sigma)
    rep, dec = _gqc_report(ctx, a, code)
    B = gqc_code.code_basis(code)
    closed = all(
        gqc_code.module_closure_contains(
            code, B.rows,
            gqc_code.deinterleave(gqc_code.qc_shift(gqc_code.interleave(r, l), l, ctx.sigma), l))
        for r in B.rows)
    rep["shift_invariant"] = closed
    try:
        lr = gqc_code.lally_bound(code)
        rep["bounds"] = dict(rep.get("bounds", {}), lally=lr.bound)
        rep["lally"] = {"d_tilde": lr.d_tilde, "d_B": lr.d_b, "g_tilde": format_poly(lr.g_tilde)}
    except AssumptionError as exc:
        rep["lally"] = {"skipped": str(exc)}
    dr = gqc_code.qc_dual_generator_counts(dec)
    rep["dual"] = {"K": dr.K, "K_prime": dr.K_prime, "predicted_generators": dr.predicted_dual_generators,
                   "self_dual_possible": dr.self_dual_possible, "one_generator_dual": dr.one_generator_dual}
    return rep, closed


def cmd_distance(ctx, a):
    if a.matrix:
        rows = [[parse_element(ctx.field, e) for e in r.split(",")] for r in a.matrix.split(";")]
        if len({len(r) for r in rows}) != 1:
            raise ParseError("matrix rows have different lengths")
        M = cyclic_code.CodeMatrix(ctx.field, tuple(map(tuple, distance_lab.reduce_rows(ctx.field, rows))),
                                   "generator", len(rows[0]))
    elif a.blocks:
        blocks = _blocks(a.blocks)
        code = gqc_code.gqc_from_generators(blocks, _generators(ctx, a.gen, len(blocks)), ctx.sigma)
        M = gqc_code.code_basis(code)
    elif a.g and a.n:
        M = cyclic_code.generator_matrix(cyclic_code.cyclic_from_generator(ctx.poly(a.g), a.n))
    else:
        raise ParseError("distance needs --matrix, --blocks/--gen or --n/--g")
    rep = distance_lab.exact_min_distance(M, a.budget, a.method)
    return rep.to_json() | {"n": rep.n, "enumerated": rep.enumerated}, not rep.truncated


def cmd_verify(ctx, a):
    from .reference_claims import FAIL, run_claims
    claims = run_claims()
    rep = {"claims": [{"suite": c.suite, "claim": c.name, "status": c.status, "detail": c.detail}
                      for c in claims]}
    return rep, all(c.status != FAIL for c in claims)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="GF(3^2)", help='e.g. "GF(3^2)", "GF(9)", "9"')
    common.add_argument("--d", type=int, default=1, help="σ = θ^d")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--vector", action="store_true", help="print elements as coefficient vectors")
    common.add_argument("--budget", type=int, default=distance_lab.DEFAULT_BUDGET,
                        help="codeword enumeration budget")
    common.add_argument("--field-budget", type=int, default=DEFAULT_SIZE_BUDGET,
                        help="largest field (incl. splitting extensions) to build")

    ap = argparse.ArgumentParser(prog="skewcode", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, aliases=()):
        p = sub.add_parser(name, parents=[common], help=help_, aliases=list(aliases))
        p.set_defaults(fn=fn)
        return p

    p = add("mul", cmd_mul, "skew product f·g")
    p.add_argument("f")
    p.add_argument("g")
    p = add("divide", cmd_divide, "right (default) or left division")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--left", action="store_true")
    for name, fn, bez in (("gcrd", skew_poly.gcrd, skew_poly.extended_gcrd),
                          ("gcld", skew_poly.gcld, skew_poly.extended_gcld),
                          ("lclm", skew_poly.lclm, None), ("lcrm", skew_poly.lcrm, None)):
        p = add(name, _gcd_cmd(fn, bez), name)
        p.add_argument("f")
        p.add_argument("g")
    p = add("roots", cmd_roots, "right roots of x^n - 1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--over", choices=("base", "top"), default="base")
    p = add("factor", cmd_factor, "complete linear factorisations")
    p.add_argument("--n", type=int)
    p.add_argument("--g", help="target polynomial (default x^n - 1)")
    p.add_argument("--cap", type=int, default=central.DEFAULT_CHAIN_CAP)
    p.add_argument("--list", action="store_true")
    p = add("tsm", cmd_tsm, "t.s.m factors and CRT idempotents")
    p.add_argument("--n", type=int)
    p.add_argument("--g", help="two-sided target (default x^n - 1)")
    p.add_argument("--split", choices=("center", "field"), default="center")
    p = add("cyclic", cmd_cyclic, "skew cyclic code from a generator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--distance", action="store_true")
    for name, fn in (("gqc", cmd_gqc), ("qc", cmd_qc)):
        p = add(name, fn, f"skew {name.upper()} code")
        if name == "gqc":
            p.add_argument("--blocks", required=True, help="block lengths, e.g. 4,8")
        else:
            p.add_argument("--n", type=int, required=True, help="common block length m")
        p.add_argument("--gen", action="append", default=[], help='components separated by ";"')
        p.add_argument("--split", choices=("center", "field"), default="center")
        p.add_argument("--distance", action="store_true")
    p = add("distance", cmd_distance, "exact minimum distance")
    p.add_argument("--matrix", help='rows separated by ";", entries by ","')
    p.add_argument("--blocks")
    p.add_argument("--gen", action="append", default=[])
    p.add_argument("--n", type=int)
    p.add_argument("--g")
    p.add_argument("--method", choices=("enumerate", "columns", "auto"), default="auto")
    add("verify-paper", cmd_verify, "recompute the published worked examples",
        aliases=("verify-examples",))
    return ap


def _print_text(rep, out, indent=""):
    for key, val in rep.items():
        if key == "claims":
            for c in val:
                line = f"{c['status']:<21} {c['suite']}: {c['claim']}"
                if c["detail"]:
                    line += f"  [{c['detail']}]"
                print(line, file=out)
        elif isinstance(val, dict):
            print(f"{indent}{key}:", file=out)
            _print_text(val, out, indent + "  ")
        elif isinstance(val, list) and val and isinstance(val[0], list):
            print(f"{indent}{key}:", file=out)
            for row in val:
                print(f"{indent}  " + " ".join(map(str, row)), file=out)
        else:
            print(f"{indent}{key}: {val}", file=out)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        ctx = Ctx(args)
        if args.command in ("factor", "tsm") and args.n is None and not args.g:
            raise ParseError("give --n or --g")
        rep, ok = args.fn(ctx, args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 4
    except (AssumptionError, ValueError, ZeroDivisionError) as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return 3
    rep = {"schema": SCHEMA, "command": args.command, **rep, "ok": ok}
    if args.json:
        print(json.dumps(rep, indent=2))
    else:
        _print_text(rep, sys.stdout)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
