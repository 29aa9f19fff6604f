"""Command-line front end.

Exit codes: 0 pass, 1 verification/sharpness failure, 2 argument error,
3 root-finder failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analytic as an
from . import lab, multidim
from .radii import NoRootFound, RadiusQuery, Theorem, radius_R5, solve, A_STAR
from .tables import DIFF_TOL, compute_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SOLVER = 0, 1, 2, 3

EXTREMAL_A = (0.0, 0.3, 0.656, 0.9)
EXTREMAL_A_T6 = (0.0, 0.3, 0.5, 0.656)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params(args) -> lab.TheoremParams:
    return lab.TheoremParams(k=args.k, m=args.m, p=args.p, lam=args.lam,
                             s=args.s, t=args.t, q=args.q)


# -- subcommands ------------------------------------------------------------


def cmd_radius(args) -> int:
    th = Theorem(args.theorem)
    if th is Theorem.R5 and args.a is None:
        value = radius_R5(args.k, args.p, args.q)
        c = min(args.p, 2.0) / (2.0 + min(args.p, 2.0))
        result = {"value": value, "bracket_lo": value, "bracket_hi": value,
                  "residual": value ** (args.q * args.k) - c, "scan_step": 0.0}
    else:
        query = RadiusQuery(th, k=args.k, m=args.m, p=args.p, q=args.q, s=args.s,
                            t=args.t, lam=args.lam, a=args.a or 0.0)
        res = solve(query, args.tol)
        result = dict(res.__dict__)
    if args.format == "json":
        _emit(json.dumps({"theorem": th.value, **result}, sort_keys=True, indent=2) + "\n", args.out)
    else:
        _emit(f"{result['value']:.6f}\n"
              f"bracket: [{result['bracket_lo']:.15f}, {result['bracket_hi']:.15f}]\n"
              f"residual: {result['residual']:.3e}\n", args.out)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.table_id not in (1, 2, 3):
        print(f"error: unknown table {args.table_id}", file=sys.stderr)
        return EXIT_USAGE
    table = compute_table(args.table_id, args.tol)
    fmt = args.format or "md"
    text = {"md": table.to_markdown, "csv": table.to_csv, "json": table.to_json}[fmt]()
    code = EXIT_OK
    if args.diff:
        dev = table.max_deviation()
        ok = dev <= DIFF_TOL
        text += f"max deviation from printed values: {dev:.3e} ({'ok' if ok else 'MISMATCH'})\n"
        code = EXIT_OK if ok else EXIT_FAIL
    _emit(text, args.out)
    return code


def _family(args, theorem: lab.TheoremId, params: lab.TheoremParams) -> list:
    if args.family == "constant-zero":
        return [an.Constant(0.0)]
    if args.a is not None:
        fam = [lab.extremal_function(theorem, args.a, params)]
    else:
        a_vals = EXTREMAL_A_T6 if theorem is lab.TheoremId.T6 else EXTREMAL_A
        fam = [lab.extremal_function(theorem, a, params) for a in a_vals]
    if args.family == "random":
        fam = []
    fam += random_members(args.random, args.seed, theorem, params)
    return fam


def random_members(count: int, seed: int, theorem: lab.TheoremId,
                   params: lab.TheoremParams) -> list:
    """Random members satisfying the theorem's hypotheses on ``f``."""
    out, i = [], 0
    while len(out) < count:
        f = an.random_member(seed + i, 1 + i % 5, 0)
        i += 1
        if theorem is lab.TheoremId.T5:
            f = an.Lacunary(f, params.q)
        if theorem is lab.TheoremId.T6 and abs(f(0)) > A_STAR:
            continue
        out.append(f)
    return out


def cmd_verify(args) -> int:
    theorem = lab.TheoremId(args.theorem)
    params = _params(args)
    fam = _family(args, theorem, params)
    omega_k = omega_m = None
    if args.schwarz == "random":
        k = 1 if theorem in (lab.TheoremId.A1, lab.TheoremId.A2) else params.k
        omega_k = an.random_member(args.seed + 10_000, 2, k)
        omega_m = an.random_member(args.seed + 20_000, 2, params.m)
    report = lab.verify(theorem, params, fam, angle_count=args.angles,
                        omega_k=omega_k, omega_m=omega_m)
    _emit(report.to_json() + "\n" if args.format == "json" else report.to_markdown(), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_sharpness(args) -> int:
    theorem = lab.TheoremId(args.theorem)
    params = _params(args)
    a_list = [args.a] if args.a is not None else None
    report = lab.sharpness_probe(theorem, params, eps_list=args.eps, a_list=a_list,
                                 relative=args.relative)
    _emit(report.to_json() + "\n" if args.format == "json" else report.to_markdown(), args.out)
    if not report.passed:
        print("NoWitness", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_lemmas(args) -> int:
    report = lab.lemma_checks(seed=args.seed)
    if args.format == "json":
        text = json.dumps(report.summary(), sort_keys=True, indent=2) + "\n"
    else:
        text = "".join(f"{r.name}: {'pass' if r.passed else 'FAIL'} (worst excess {r.worst:.3e})\n"
                       for r in report.results)
    _emit(text, args.out)
    bad = report.first_failure()
    if bad is not None:
        print(f"first failure: {bad.name} at {bad.violation}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_multidim(args) -> int:
    params = _params(args)
    kw = {}
    if args.a is not None:
        kw["a_grid"] = (args.a,)
    if args.r is not None:
        kw["r_grid"] = (args.r,)
    report = multidim.reduction_check(args.which, params, args.d, args.norm, **kw)
    if args.format == "json":
        text = json.dumps(report.summary(), sort_keys=True, indent=2) + "\n"
    else:
        text = (f"{args.which} vs scalar, d={args.d}, norm={args.norm}: "
                f"{'pass' if report.passed else 'FAIL'} "
                f"(max difference {report.max_difference:.3e} over {report.points} points)\n")
    _emit(text, args.out)
    if not report.passed:
        print(f"first mismatch: {report.mismatch}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def _add_theorem_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--p", type=float, default=1.0)
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.add_argument("--a", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-13)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("md", "csv", "json"), default=None)
    common.add_argument("--out", default=None)

    parser = argparse.ArgumentParser(prog="bohrlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", parents=[common], help="solve one radius equation")
    p.add_argument("--theorem", required=True, choices=[t.value for t in Theorem])
    _add_theorem_params(p)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("table", parents=[common], help="recompute a printed table")
    p.add_argument("table_id", type=int)
    p.add_argument("--diff", action="store_true")
    p.set_defaults(func=cmd_table)

    theorem_ids = [t.value for t in lab.TheoremId]
    p = sub.add_parser("verify", parents=[common], help="grid-check an inequality below its radius")
    p.add_argument("theorem", choices=theorem_ids)
    _add_theorem_params(p)
    p.add_argument("--random", type=int, default=0)
    p.add_argument("--family", choices=("extremal", "random", "constant-zero"), default="extremal")
    p.add_argument("--schwarz", choices=("monomial", "random"), default="monomial")
    p.add_argument("--angles", type=int, default=lab.DEFAULT_ANGLES)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sharpness", parents=[common], help="probe just beyond a radius")
    p.add_argument("theorem", choices=theorem_ids)
    _add_theorem_params(p)
    p.add_argument("--eps", type=float, nargs="+", default=[0.01])
    p.add_argument("--relative", action="store_true")
    p.set_defaults(func=cmd_sharpness)

    p = sub.add_parser("lemmas", parents=[common], help="run the lemma oracles")
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("multidim", parents=[common], help="ray reduction checks in C^d")
    p.add_argument("--which", required=True, choices=tuple(multidim.REDUCTIONS))
    p.add_argument("--d", type=int, default=2, choices=(2, 3))
    p.add_argument("--norm", choices=("sup", "l2"), default="sup")
    p.add_argument("--r", type=float, default=None)
    _add_theorem_params(p)
    p.set_defaults(func=cmd_multidim)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NoRootFound as exc:
        print(f"NoRootFound: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
