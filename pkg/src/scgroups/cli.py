"""Batch front-end: compute any presented group, run verification suites,
specialize symbolic expressions at a prime, decompose matrices on the
tree, and emit the global order tables.

Exit codes: 0 success, 1 failed assertion, 2 usage error.  Output is
deterministic for a fixed (command, seed).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import globalinv, orbitcomplex, tree, verify, witt
from .linalg import FpAb
from .rings import parse_ring
from .scissors import context
from .valuation import (
    QONE,
    qclass,
    specialization,
    sym_act,
    sym_add,
    sym_big_c,
    sym_dbl_bracket,
    sym_g,
    sym_gen,
    sym_psi1,
    sym_scale,
    ring_add,
    ring_mul,
    ring_scale,
)

GROUP_BUILDERS = {
    "P": lambda ctx: ctx.pre_bloch(),
    "B": lambda ctx: ctx.bloch(),
    "S2": lambda ctx: ctx.s2_of_units(),
    "K2": lambda ctx: ctx.k2_cokernel(),
    "RP": lambda ctx: ctx.rp_flat(),
    "RP1": lambda ctx: ctx.rp1(),
    "RB": lambda ctx: ctx.rb(),
    "Ptilde": lambda ctx: ctx.tilde().p_tilde,
    "RPtilde": lambda ctx: ctx.tilde().rp_tilde,
    "RP1tilde": lambda ctx: ctx.tilde().rp1_tilde.group,
    "RBtilde": lambda ctx: ctx.tilde().rb_tilde.group,
    "RPprime": lambda ctx: ctx.rp_prime().flatten(),
    "GW": lambda ctx: witt.gw(ctx.ring),
    "I": lambda ctx: witt.fundamental_ideal(ctx.ring),
    "I2": lambda ctx: witt.i_squared(ctx.ring),
    "E1": lambda ctx: orbitcomplex.build_row_complex(ctx.ring).homology_at(1),
    "E2": lambda ctx: orbitcomplex.build_row_complex(ctx.ring).homology_at(2),
    "E3": lambda ctx: orbitcomplex.build_row_complex(ctx.ring).homology_at(3),
}


def _group_report(which: str, ring_label: str) -> dict:
    ctx = context(ring_label)
    grp: FpAb = GROUP_BUILDERS[which](ctx)
    rep = grp.report()
    rep.update({"ring": ctx.ring.label, "group": which, "describe": grp.describe()})
    return rep


def _emit(report, fmt: str):
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, default=str))
    else:
        if isinstance(report, dict):
            keys = sorted(report)
            print("| " + " | ".join(keys) + " |")
            print("|" + "---|" * len(keys))
            print("| " + " | ".join(str(report[k]) for k in keys) + " |")
        else:
            for row in report:
                print(row)


# ---------------------------------------------------------------------------
# expression grammar for specialize

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>psi1|g|C)|(?P<op><<|>>|[-+*/()\[\]<>]))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad token at {text[pos:]!r}")
        if m.group("num"):
            out.append(("num", int(m.group("num"))))
        elif m.group("name"):
            out.append(("name", m.group("name")))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    out.append(("end", None))
    return out


class _ExprParser:
    """Recursive-descent parser for the specialize grammar: integers,
    rationals, [a], <a>, <<a>>, g(a), psi1(a), C, +, -, *."""

    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def eat(self, kind, value=None):
        t = self.toks[self.i]
        if t[0] != kind or (value is not None and t[1] != value):
            raise ValueError(f"expected {value or kind}, found {t[1]!r}")
        self.i += 1
        return t[1]

    def parse(self):
        v = self.expr()
        self.eat("end")
        return v

    def expr(self):
        v = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            op = self.eat("op")
            w = self.term()
            v = _val_add(v, w if op == "+" else _val_neg(w))
        return v

    def term(self):
        v = self.factor()
        while self.peek() == ("op", "*"):
            self.eat("op", "*")
            v = _val_mul(v, self.factor())
        return v

    def rational(self) -> Fraction:
        sign = 1
        if self.peek() == ("op", "-"):
            self.eat("op", "-")
            sign = -1
        num = self.eat("num")
        if self.peek() == ("op", "/"):
            self.eat("op", "/")
            den = self.eat("num")
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def factor(self):
        kind, val = self.peek()
        if kind == "op" and val == "-":
            self.eat("op", "-")
            return _val_neg(self.factor())
        if kind == "op" and val == "(":
            self.eat("op", "(")
            v = self.expr()
            self.eat("op", ")")
            return v
        if kind == "op" and val == "[":
            self.eat("op", "[")
            a = self.rational()
            self.eat("op", "]")
            return ("mod", sym_gen(a))
        if kind == "op" and val == "<<":
            self.eat("op", "<<")
            a = self.rational()
            self.eat("op", ">>")
            return ("ring", sym_dbl_bracket(a))
        if kind == "op" and val == "<":
            self.eat("op", "<")
            a = self.rational()
            self.eat("op", ">")
            return ("ring", {qclass(a): 1})
        if kind == "name":
            name = self.eat("name")
            if name == "C":
                return ("mod", sym_big_c())
            self.eat("op", "(")
            a = self.rational()
            self.eat("op", ")")
            return ("mod", sym_g(a) if name == "g" else sym_psi1(a))
        if kind == "num":
            return ("num", self.rational())
        raise ValueError(f"unexpected token {val!r}")


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ValueError(f"non-integral scalar {x} cannot scale a module element")
    return x.numerator


def _val_neg(v):
    kind, x = v
    if kind == "num":
        return ("num", -x)
    if kind == "ring":
        return ("ring", ring_scale(-1, x))
    return ("mod", sym_scale(-1, x))


def _val_add(v, w):
    if v[0] == "num" and w[0] == "num":
        return ("num", v[1] + w[1])
    if "mod" in (v[0], w[0]):
        return ("mod", sym_add(_to_mod(v), _to_mod(w)))
    return ("ring", ring_add(_to_ring(v), _to_ring(w)))


def _to_ring(v):
    if v[0] == "ring":
        return v[1]
    if v[0] == "num":
        return {QONE: _as_int(v[1])}
    raise ValueError("cannot add a module element to a scalar")


def _to_mod(v):
    if v[0] == "mod":
        return v[1]
    raise ValueError("cannot add a scalar or class to a module element")


def _val_mul(v, w):
    if v[0] == "num" and w[0] == "num":
        return ("num", v[1] * w[1])
    if v[0] == "num":
        n = _as_int(v[1])
        if w[0] == "ring":
            return ("ring", ring_scale(n, w[1]))
        return ("mod", sym_scale(n, w[1]))
    if w[0] == "num":
        return _val_mul(w, v)
    if v[0] == "ring" and w[0] == "ring":
        return ("ring", ring_mul(v[1], w[1]))
    if v[0] == "ring" and w[0] == "mod":
        return ("mod", sym_act(v[1], w[1]))
    raise ValueError("module elements cannot multiply")


def parse_expression(text: str):
    return _ExprParser(text).parse()


def _specialize_report(p: int, expr: str) -> dict:
    kind, val = parse_expression(expr)
    if kind != "mod":
        raise ValueError("expression must evaluate to a module element")
    ctx = specialization(p)
    ind = ctx.s_v(val)
    dpp = ctx.delta_pi_prime(val)

    def pack(elem):
        red = ctx.rp_tilde.reduce(elem.vec)
        return {"zero": elem.is_zero(), "reduced": [int(x) for x in red]}

    return {
        "p": p,
        "expr": expr,
        "delta_0": pack(ind.comp0),
        "delta_pi": pack(ind.comp_pi),
        "delta_pi_prime": pack(dpp),
    }


# ---------------------------------------------------------------------------
# matrix parsing for tree/amalgam commands


def parse_matrix_arg(text: str):
    rows = text.split(";")
    if len(rows) != 2:
        raise ValueError("matrix must have two ';'-separated rows")
    vals = []
    for row in rows:
        parts = row.split(",")
        if len(parts) != 2:
            raise ValueError("each row needs two ','-separated entries")
        vals.extend(Fraction(p.strip()) for p in parts)
    return tree.mat2(*vals)


def _mat_str(m) -> str:
    return ";".join(",".join(str(x) for x in row) for row in m)


# ---------------------------------------------------------------------------
# command implementations


def cmd_group(args) -> int:
    rep = _group_report(args.which, args.ring)
    _emit(rep, args.format)
    return 0


def cmd_verify(args) -> int:
    checks = verify.run_suite(
        args.suite, ring=args.ring, p=args.p, q=args.q, seed=args.seed
    )
    for c in checks:
        print(c.line())
    return 0 if all(c.ok for c in checks) else 1


def cmd_verify_all(args) -> int:
    jobs = verify.verify_all_jobs(max_q=args.max_q)
    results = []
    if args.jobs > 1:
        import concurrent.futures as cf

        with cf.ProcessPoolExecutor(max_workers=args.jobs) as ex:
            futs = {ex.submit(verify.run_job, job, args.seed): job for job in jobs}
            for fut in cf.as_completed(futs):
                results.append(fut.result())
    else:
        for job in jobs:
            results.append(verify.run_job(job, args.seed))
    results.sort(key=lambda kv: kv[0])
    ok = True
    for key, checks in results:
        for c in checks:
            print(f"{key}: {c.line()}")
            ok = ok and c.ok
    print("verify-all:", "ok" if ok else "FAILED")
    return 0 if ok else 1


def cmd_specialize(args) -> int:
    rep = _specialize_report(args.p, args.expr)
    _emit(rep, args.format)
    return 0


def cmd_tree(args) -> int:
    if args.sub == "ball":
        if args.dot:
            sys.stdout.write(tree.dot_output(args.p, args.radius))
            return 0
        depth, edges = tree.ball(args.p, args.radius)
        per_depth = {}
        for v, d in depth.items():
            per_depth[d] = per_depth.get(d, 0) + 1
        rep = {
            "p": args.p,
            "radius": args.radius,
            "vertices": len(depth),
            "edges": len(edges),
            "per_depth": [per_depth[d] for d in sorted(per_depth)],
            "formula": tree.ball_size_formula(args.p, args.radius),
            "is_tree": tree.ball_is_tree(args.p, min(args.radius, 3)),
        }
        _emit(rep, args.format)
        return 0
    if args.sub == "vertex":
        m = parse_matrix_arg(args.matrix)
        key = tree.canonical_vertex(m, args.p)
        _emit({"p": args.p, "a": key.a, "c": str(key.c)}, args.format)
        return 0
    raise ValueError(f"unknown tree subcommand {args.sub!r}")


def cmd_amalgam(args) -> int:
    g = parse_matrix_arg(args.matrix)
    word = tree.amalgam_decompose(g, args.p)
    rep = {
        "p": args.p,
        "matrix": _mat_str(g),
        "length": len(word),
        "sides": ["G0" if s == tree.G0_SIDE else "G1" for s in word.sides()],
        "factors": [_mat_str(m) for m, _ in word.factors],
        "product_ok": word.product() == g,
        "alternating": all(
            s1 != s2 for s1, s2 in zip(word.sides(), word.sides()[1:])
        ),
    }
    _emit(rep, args.format)
    return 0 if rep["product_ok"] and rep["alternating"] else 1


def cmd_pbar_table(args) -> int:
    reports = globalinv.pbar_table(args.p_min, args.p_max)
    rows = [r.as_dict() for r in reports]
    if args.format == "json":
        print(json.dumps(rows, sort_keys=True))
    elif args.format == "csv":
        cols = ["p", "(p+1)'", "killed", "pbar_odd", "3 | p+1"]
        print(",".join(cols))
        for r in rows:
            print(",".join(str(r[c]) for c in cols))
    else:
        cols = ["p", "(p+1)'", "killed", "pbar_odd", "3 | p+1"]
        print("| " + " | ".join(cols) + " |")
        print("|" + "---|" * len(cols))
        for r in rows:
            print("| " + " | ".join(str(r[c]) for c in cols) + " |")
    return 0


def build_parser() -> argparse.ArgumentParser:
    # the common flags are accepted both before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument(
        "--format", choices=["json", "md", "csv"], default=argparse.SUPPRESS
    )
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)

    ap = argparse.ArgumentParser(
        prog="scgroups",
        description="exact scissors congruence groups, Grothendieck-Witt "
        "invariants, and the SL2 tree over finite local rings",
    )
    ap.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    ap.add_argument("--format", choices=["json", "md", "csv"], default="json")
    ap.add_argument("--jobs", type=int, default=1)
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", help="compute a presented group", parents=[common])
    g.add_argument("which", choices=sorted(GROUP_BUILDERS))
    g.add_argument("--ring", required=True)
    g.set_defaults(func=cmd_group)

    v = sub.add_parser("verify", help="run a named verification suite", parents=[common])
    v.add_argument("suite", choices=verify.all_suite_names())
    v.add_argument("--ring")
    v.add_argument("--p", type=int)
    v.add_argument("--q", type=int)
    v.set_defaults(func=cmd_verify)

    va = sub.add_parser("verify-all", help="run every verification suite", parents=[common])
    va.add_argument("--max-q", type=int, default=13)
    va.set_defaults(func=cmd_verify_all)

    s = sub.add_parser("specialize", help="specialize an expression at p", parents=[common])
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--expr", required=True)
    s.set_defaults(func=cmd_specialize)

    t = sub.add_parser("tree", help="tree computations", parents=[common])
    t.add_argument("sub", choices=["ball", "vertex"])
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--radius", type=int, default=2)
    t.add_argument("--dot", action="store_true")
    t.add_argument("--matrix")
    t.set_defaults(func=cmd_tree)

    a = sub.add_parser("amalgam", help="amalgam decomposition of a matrix", parents=[common])
    a.add_argument("--p", type=int, required=True)
    a.add_argument("--matrix", required=True)
    a.set_defaults(func=cmd_amalgam)

    pt = sub.add_parser("pbar-table", help="global order table over primes", parents=[common])
    pt.add_argument("--p-min", type=int, default=11)
    pt.add_argument("--p-max", type=int, default=97)
    pt.set_defaults(func=cmd_pbar_table)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
