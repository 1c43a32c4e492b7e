"""Command-line frontend: series evaluation, solving, domain queries, casebook.

Output conventions: data on stdout, diagnostics on stderr, floats in their
shortest round-trip form, so identical invocations produce byte-identical
output.  Exit codes: 0 success, 1 invalid input, 2 no convergent cover
(a legitimate mathematical outcome), 3 internal inconsistency.

Complex literals accept ``a+bi`` (or ``j``), bare reals, a bare ``re,im``
pair where a single complex value is expected, and ``(re,im)`` inside
comma-separated lists.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import casebook, convergence, domain
from .algebraic import AlgebraicEquation, scale_equation, series_root_power, solve_all
from .discriminant import build_family
from .errors import InternalConsistencyError, NoConvergentCover

_DEF_TERMS = 200


def _default_terms() -> int:
    try:
        return int(os.environ.get("FC_TERMS", _DEF_TERMS))
    except ValueError:
        return _DEF_TERMS


def parse_complex(text: str) -> complex:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if "," in s:
        re_s, im_s = s.split(",", 1)
        return complex(float(re_s), float(im_s))
    s = s.replace("i", "j")
    try:
        return complex(s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse complex literal {text!r}") from exc


def _split_list(text: str) -> list[str]:
    items, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    items.append("".join(cur))
    return items


def parse_complex_list(text: str) -> list[complex]:
    return [parse_complex(item) for item in _split_list(text)]


def _fmt_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return repr(z.real)
    return f"{z.real!r}{'+' if z.imag >= 0 else '-'}{abs(z.imag)!r}i"


def _pivot(text: str) -> tuple:
    p, q = (int(x) for x in text.split(","))
    return p, q


def _root_dict(r) -> dict:
    return {
        "re": r.value.real,
        "im": r.value.imag,
        "pivot": list(r.pivot),
        "branch": r.branch,
        "truncation": r.truncation,
        "tail_estimate": r.tail_estimate,
        "residual": r.residual,
    }


def _cmd_eval(args) -> int:
    mus = [float(m) for m in args.mu.split(",")]
    zs = parse_complex_list(args.z)
    if len(zs) != len(mus):
        print("error: --z must match --mu in length", file=sys.stderr)
        return 1
    T = args.terms if args.terms is not None else _default_terms()
    from . import fc

    if len(mus) == 1:
        sv = fc.genfun_eval(mus[0], args.r, zs[0], T)
    else:
        sv = fc.genfun_multi_eval(mus, args.r, zs, T)
    print(f"value = {_fmt_complex(sv.value)}")
    print(f"terms = {sv.truncation_level}")
    print(f"tail_estimate = {sv.tail_estimate!r}")
    return 0


def _cmd_solve(args) -> int:
    eq = AlgebraicEquation(tuple(parse_complex_list(args.coeffs)))
    T = args.terms if args.terms is not None else _default_terms()
    roots = []
    status = "ok"
    if args.pivot is not None:
        p, q = args.pivot
        for ell in range(q - p):
            roots.append(series_root_power(eq, (p, q), ell, 1, T))
    else:
        try:
            roots = solve_all(eq)
        except NoConvergentCover as exc:
            roots = exc.results
            status = f"no-convergent-cover: {exc}"
    if args.json:
        print(json.dumps({"status": status, "roots": [_root_dict(r) for r in roots]}, indent=2))
    else:
        for r in roots:
            print(
                f"root {_fmt_complex(r.value)}  pivot={r.pivot} branch={r.branch} "
                f"residual={r.residual!r} tail={r.tail_estimate!r}"
            )
        if status != "ok":
            print(status, file=sys.stderr)
    return 0 if status == "ok" else 2


def _family_for(args):
    eq = AlgebraicEquation(tuple(parse_complex_list(args.coeffs)))
    p, q = args.pivot
    fam = build_family((p, q), eq.degree, support=eq.support)
    return eq, fam


def _cmd_domain(args) -> int:
    eq, fam = _family_for(args)
    scaled = scale_equation(eq, args.pivot)
    out: dict = {"pivot": list(args.pivot), "free_slots": list(fam.free_slots)}
    if args.action == "member":
        pt = (
            [float(x) for x in args.point.split(",")]
            if args.point
            else [abs(scaled.b.get(j, 0.0)) for j in fam.free_slots]
        )
        v = domain.member(pt, fam)
        out.update({
            "point": pt,
            "inside": v.inside,
            "on_boundary": v.on_boundary,
            "binding": list(v.binding) if v.binding else None,
        })
    elif args.action == "ray":
        if not args.point:
            print("error: ray needs --point as a direction", file=sys.stderr)
            return 1
        d = [float(x) for x in args.point.split(",")]
        lam = domain.boundary_on_ray(d, fam)
        out.update({"direction": d, "boundary_scale": lam})
    else:  # bounds
        p, q = args.pivot
        mus = [(j - p) / (q - p) for j in fam.free_slots]
        box = convergence.necessary_box(mus)
        simplex = convergence.sufficient_simplex(mus)
        lower, upper = convergence.measure_bounds(mus)
        out.update({
            "mu": mus,
            "necessary_box": list(box.per_coordinate_max),
            "sufficient_simplex_radius": simplex.radius,
            "mu_star": simplex.mu_star,
            "mellin_bound": convergence.mellin_bound(mus),
            "measure_lower": lower,
            "measure_upper": upper,
        })
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        for k, v in out.items():
            print(f"{k} = {v!r}")
    return 0


def _cmd_trace(args) -> int:
    eq, fam = _family_for(args)
    jx, jy = (int(x) for x in args.vars.split(","))
    names = {f"b{jx}", f"b{jy}"}
    window = tuple(float(x) for x in args.window.split(","))
    if len(window) != 4:
        print("error: --window needs x0,x1,y0,y1", file=sys.stderr)
        return 1
    members = domain.active_members(fam)
    if args.member:
        members = [m for m in members if m.member_id == args.member]
        if not members:
            print(f"error: no active member {args.member!r}", file=sys.stderr)
            return 1
    traces = {}
    for m in members:
        free = set(m.poly.vars)
        if free != names:
            fixed = {v: 0.0 for v in free - names}
        else:
            fixed = {}
        traces[m.member_id] = domain.trace_level_set(
            m, window, args.grid, var_pair=(f"b{jx}", f"b{jy}"), fixed=fixed
        )
    sys.stdout.write(domain.trace_csv(traces))
    return 0


def _case_report(results, as_json: bool) -> int:
    ok = all(c.status == "pass" for c in results)
    if as_json:
        print(json.dumps([c.as_dict() for c in results], indent=2))
    else:
        for c in results:
            print(f"{c.status.upper():4s} {c.name} (max_error={c.max_error!r})")
    return 0 if ok else 3


def _cmd_casebook(args) -> int:
    name = args.case
    if name == "bring-jerrard":
        res = casebook.bring_jerrard_roots(parse_complex(args.gamma))
        payload = {
            "name": "bring-jerrard",
            "status": "pass" if res.oracle_deviation < 1e-8 else "fail",
            "max_error": res.oracle_deviation,
            "regime": res.regime,
            "threshold": res.threshold,
            "roots": [_root_dict(r) for r in res.roots],
            "citations": ["one-parameter quintic normal form"],
        }
        print(json.dumps(payload, indent=2) if args.json else
              f"regime={res.regime} oracle_deviation={res.oracle_deviation!r}")
        if not args.json:
            for r in res.roots:
                print(f"root {_fmt_complex(r.value)}  pivot={r.pivot} branch={r.branch}")
        return 0 if payload["status"] == "pass" else 3
    if name == "trinomial":
        spec = casebook.TrinomialSpec(args.m, args.n, parse_complex(args.a), parse_complex(args.b))
        res = casebook.trinomial_roots(spec)
        ok = res.oracle_deviation < 1e-8 and res.redundant_series_deviation < 1e-9
        payload = {
            "name": "trinomial",
            "status": "pass" if ok else "fail",
            "max_error": max(res.oracle_deviation, res.redundant_series_deviation),
            "regime": res.regime,
            "roots": [_root_dict(r) for r in res.roots],
            "citations": ["general trinomial series", "redundant reversed-pivot series"],
        }
        print(json.dumps(payload, indent=2) if args.json else
              f"regime={res.regime} oracle_deviation={res.oracle_deviation!r} "
              f"redundant_deviation={res.redundant_series_deviation!r}")
        return 0 if ok else 3
    if name == "cubic-table":
        res = casebook.cubic_domain_table()
        cases = [casebook.CaseResult(
            "cubic-domain-table",
            "pass" if res.all_ok else "fail",
            max(abs(res.axis_bound_a1 - 2.0), abs(res.axis_bound_a3 - math.sqrt(4.0 / 27.0))),
            ("six corrected cubic domains", "flawed two-condition form rejects the origin"),
        )]
        return _case_report(cases, args.json)
    if name == "principal-quintic":
        res = casebook.principal_quintic_domains()
        cases = [casebook.CaseResult(
            "principal-quintic-domains",
            "pass" if res.all_ok else "fail",
            0.0,
            ("six printed quintic domain formulas",),
        )]
        return _case_report(cases, args.json)
    if name == "brioschi":
        res = casebook.brioschi_analysis(parse_complex(args.C))
        payload = {
            "name": "brioschi",
            "status": "covered" if res.covered else "gap",
            "max_error": 0.0,
            "per_pivot": {f"{p}": [o.kind, o.roots] for p, o in sorted(res.per_pivot.items())},
            "thresholds": list(casebook.brioschi_thresholds()),
            "citations": ["one-parameter quintic with dependent coefficients"],
        }
        print(json.dumps(payload, indent=2) if args.json else
              "\n".join([f"covered = {res.covered}"] + [
                  f"pivot {p}: {o.kind}" + (f" ({o.roots} roots)" if o.roots else "")
                  for p, o in sorted(res.per_pivot.items())
              ]))
        if not res.covered:
            print("no convergent series solution for this C (gap)", file=sys.stderr)
            return 2
        return 0
    if name == "identities":
        return _case_report(casebook.identity_suite(), args.json)
    if name == "sturmfels":
        return _case_report(casebook.sturmfels_checks(), args.json)
    print(f"error: unknown case {name!r}", file=sys.stderr)
    return 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fcseries",
        description="Roots of algebraic equations by Fuss-Catalan series, "
                    "with exact domains of absolute convergence.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a generating-function partial sum")
    p.add_argument("--mu", required=True, help="exponent, or comma-separated exponents")
    p.add_argument("--r", type=float, default=1.0, help="power parameter (default 1)")
    p.add_argument("--z", required=True, help="evaluation point(s), complex")
    p.add_argument("--terms", type=int, default=None, help="truncation (env FC_TERMS overrides default)")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("solve", help="series solutions for all roots")
    p.add_argument("--coeffs", required=True, help="a0,...,an (complex entries: a+bi or (re,im))")
    p.add_argument("--pivot", type=_pivot, default=None, help="force one pivot pair p,q")
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("domain", help="membership, boundary, and bound queries")
    p.add_argument("action", choices=["member", "ray", "bounds"])
    p.add_argument("--coeffs", required=True)
    p.add_argument("--pivot", type=_pivot, required=True)
    p.add_argument("--point", default=None, help="amplitude tuple (defaults to the equation's own)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_domain)

    p = sub.add_parser("trace", help="level-set polylines as CSV")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--pivot", type=_pivot, required=True)
    p.add_argument("--vars", required=True, help="slot pair j,j'")
    p.add_argument("--window", required=True, help="x0,x1,y0,y1")
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("--member", default=None, help="restrict to one member id")
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("casebook", help="reproduce a worked case")
    p.add_argument("case", choices=[
        "bring-jerrard", "trinomial", "cubic-table", "principal-quintic",
        "brioschi", "identities", "sturmfels",
    ])
    p.add_argument("--gamma", default="0.6", help="bring-jerrard parameter")
    p.add_argument("--C", default="1e-3", help="brioschi parameter")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--a", default="-1")
    p.add_argument("--b", default="0.3")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_casebook)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NoConvergentCover as exc:
        print(f"no convergent cover: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
