"""Command-line interface.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""

import argparse
import json
import sys
from fractions import Fraction

from .exactmath import format_poly, format_ratfunc, poly_to_json, ratfunc_to_json
from .moments import (
    MonomialSpec,
    conjecture_check,
    full_cycle_properties,
    integrate_orth,
    integrate_unit,
    truncated_trace_moment,
)
from .pairings import format_pairing
from .partitions import format_partition, parse_partition, partitions_of
from .verify import SUITES
from .weingarten import basis, check_pseudo_inverse, gram, wg, wg_matrix_formula, wg_matrix_oracle
from .zonal import zonal_table


class UsageError(Exception):
    pass


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def _value_text(v) -> str:
    return _frac(v) if isinstance(v, (int, Fraction)) else format_ratfunc(v)


def _value_json(v):
    return _frac(v) if isinstance(v, (int, Fraction)) else ratfunc_to_json(v)


def cmd_wg(args, out):
    mu = parse_partition(args.coset)
    if not mu:
        raise UsageError("coset type must be nonempty")
    d = None if args.symbolic or args.d is None else args.d
    val = wg(args.group, mu, d)
    if args.json:
        out({"group": val.group, "coset": format_partition(mu), "d": d, "value": _value_json(val.value),
             "text": _value_text(val.value)})
    else:
        out(_value_text(val.value))
    return 0


def cmd_table(args, out):
    d = None if args.symbolic or args.d is None else args.d
    rows = [(mu, wg(args.group, mu, d).value) for mu in partitions_of(args.n)]
    if args.json:
        out([{"coset": format_partition(mu), "value": _value_json(v), "text": _value_text(v)} for mu, v in rows])
    else:
        for mu, v in rows:
            out(f"({format_partition(mu)})\t{_value_text(v)}")
    return 0


def cmd_integrate(args, out):
    spec = MonomialSpec.parse(args.entries)
    f = integrate_orth if args.group == "orth" else integrate_unit
    val = f(spec, args.d)
    out({"entries": spec.format(), "group": args.group, "d": args.d, "value": _frac(val)} if args.json else _frac(val))
    return 0


def cmd_truncated(args, out):
    val = truncated_trace_moment(args.n, args.k, args.d)
    out({"n": args.n, "k": args.k, "d": args.d, "value": _frac(val)} if args.json else _frac(val))
    return 0


def cmd_fullcycle(args, out):
    rep = full_cycle_properties(args.n)
    coeffs = poly_to_json(rep.poly)
    conj = conjecture_check(args.n)[-1].holds
    if args.json:
        data = {"n": args.n, "coefficients": coeffs, "poly": format_poly(rep.poly)}
        if args.check:
            data.update(degree_ok=rep.degree_ok, leading_ok=rep.leading_ok,
                        constant_ok=rep.constant_ok, nonneg_integer=conj)
        out(data)
    else:
        out(",".join(str(c) for c in reversed(coeffs)) + "\t" + format_poly(rep.poly))
        if args.check:
            for name, ok in (("degree", rep.degree_ok), ("leading", rep.leading_ok),
                             ("constant", rep.constant_ok), ("nonneg-integer", conj)):
                out(f"{name}: {'PASS' if ok else 'FAIL'}")
    if args.check and (args.n >= 2 and not rep.ok):
        return 1
    return 0


def cmd_gram(args, out):
    g = gram(args.n, args.group, args.d)
    labels = [format_pairing(m) for m in basis(args.n, args.group)]
    status = 0
    data = {"basis": labels, "gram": g}
    if args.oracle:
        w = wg_matrix_oracle(args.n, args.group, args.d)
        same = w == wg_matrix_formula(args.n, args.group, args.d)
        rep = check_pseudo_inverse(g, w)
        data.update(weingarten=[[_frac(x) for x in row] for row in w], formula_matches=same,
                    gwg_equals_g=rep.gwg_equals_g, wgw_equals_w=rep.wgw_equals_w, gw_is_identity=rep.gw_is_identity)
        status = 0 if same and rep.ok else 1
    if args.json:
        out(data)
    else:
        for lab, row in zip(labels, g):
            out(lab + "\t" + " ".join(str(x) for x in row))
        if args.oracle:
            out(f"formula matches pseudo-inverse: {data['formula_matches']}")
            out(f"GWG=G: {rep.gwg_equals_g}  WGW=W: {rep.wgw_equals_w}  GW=I: {rep.gw_is_identity}")
    return status


def cmd_zonal(args, out):
    t = zonal_table(args.n)
    cols = [format_partition(r) for r in t.partitions]
    if args.json:
        out({"n": t.n, "columns": cols,
             "rows": [{"lambda": format_partition(lam), "f2lambda": t.dims[i],
                       "omega": [_frac(x) for x in t.omega[i]]} for i, lam in enumerate(t.partitions)]})
    else:
        out("λ \\ ρ\t" + "\t".join(f"({c})" for c in cols))
        for i, lam in enumerate(t.partitions):
            out(f"({format_partition(lam)})\t" + "\t".join(_frac(x) for x in t.omega[i]))
    return 0


def cmd_mc(args, out):
    from .montecarlo import estimate_monomial

    spec = MonomialSpec.parse(args.entries)
    est = estimate_monomial(spec, args.group, args.d, args.samples, args.seed)
    exact = None
    try:
        exact = (integrate_orth if args.group == "orth" else integrate_unit)(spec, args.d)
    except ValueError:
        pass
    data = {"mean": est.mean, "stderr": est.stderr, "samples": est.samples, "seed": est.seed,
            "exact": None if exact is None else _frac(exact),
            "zscore": None if exact is None else est.zscore(float(exact))}
    if args.json:
        out(data)
    else:
        for k, v in data.items():
            out(f"{k}: {v}")
    return 0


def cmd_verify(args, out):
    kwargs = {} if args.nmax is None else {"nmax": args.nmax}
    rows = list(SUITES[args.suite](**kwargs))
    if args.json:
        out([{"check": n, "pass": ok, "detail": det} for n, ok, det in rows])
    else:
        for name, ok, det in rows:
            out(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  [{det}]" if det else ""))
    return 0 if all(ok for _, ok, _ in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="haarwg", description="Exact Weingarten calculus for O(d) and U(d).")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    def group_arg(sp, choices=("orth", "unit")):
        sp.add_argument("--group", choices=choices, default="orth")

    s = sub.add_parser("wg", help="Weingarten function at a coset type")
    group_arg(s)
    s.add_argument("--coset", required=True, help='partition, e.g. "2,1"')
    s.add_argument("--d", type=int)
    s.add_argument("--symbolic", action="store_true")
    s.set_defaults(func=cmd_wg)

    s = sub.add_parser("table", help="Weingarten values for every coset type of weight n")
    group_arg(s)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int)
    s.add_argument("--symbolic", action="store_true")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("integrate", help="exact Haar integral of a monomial")
    group_arg(s)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--entries", required=True, help='e.g. "1,1;1,1;2,2;2,2" or "1,1;1,1*"')
    s.set_defaults(func=cmd_integrate)

    s = sub.add_parser("truncated", help="moment of the trace of the k x k corner")
    s.add_argument("--n", type=int, required=True, help="computes the (2n)-th moment")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_truncated)

    s = sub.add_parser("fullcycle", help="full-cycle numerator polynomial P_n(d)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--check", action="store_true")
    s.set_defaults(func=cmd_fullcycle)

    s = sub.add_parser("gram", help="Gram matrix, optionally against the pseudo-inverse")
    group_arg(s)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--oracle", action="store_true")
    s.set_defaults(func=cmd_gram)

    s = sub.add_parser("zonal-table", help="zonal spherical function values")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_zonal)

    s = sub.add_parser("mc", help="Monte Carlo estimate of a monomial integral")
    group_arg(s)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--entries", required=True)
    s.add_argument("--samples", type=int, default=100_000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_mc)

    s = sub.add_parser("verify", help="run a check battery")
    s.add_argument("--suite", choices=sorted(SUITES), required=True)
    s.add_argument("--nmax", type=int)
    s.set_defaults(func=cmd_verify)
    return p


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    def out(obj):
        if isinstance(obj, str):
            print(obj, file=stdout)
        else:
            print(json.dumps(obj, ensure_ascii=False), file=stdout)

    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
