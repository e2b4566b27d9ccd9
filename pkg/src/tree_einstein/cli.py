"""Command-line entry point: ``tree-einstein <command> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
3 internal invariant breach (including a census guard breach).
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from . import census, certs, schurforms
from .classify import (
    ClassificationResult,
    ConvergenceError,
    SignClass,
    classify_caterpillar,
    classify_exact,
    double_star_phase,
    einstein_metric,
    lambda_estimate_is_decisive,
)
from .trees import CaterpillarParam, TreeError, build_caterpillar, build_named, read_edge_list

OK, MISMATCH, USAGE, INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _report(res: ClassificationResult, out) -> None:
    print(f"sign: {res.sign}", file=out)
    print(f"zero_multiplicity: {res.zero_multiplicity}", file=out)
    print(f"positive_roots: {res.positive_root_count}", file=out)
    print(f"matrix_dim: {res.matrix_dim}", file=out)
    print(f"provenance: exact rational char poly ({res.source}) + Sturm count on (0, inf)", file=out)


def _input_tree(args):
    """Resolve ``--caterpillar`` / ``--tree`` / ``--named`` to ``(tree, param or None)``."""
    given = [x for x in (args.caterpillar, args.tree, args.named) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --caterpillar, --tree, --named")
    try:
        if args.caterpillar is not None:
            p = CaterpillarParam.parse(args.caterpillar)
            return build_caterpillar(p), p
        if args.tree is not None:
            return read_edge_list(args.tree), None
        return build_named(args.named), None
    except (TreeError, ValueError, OSError) as exc:
        raise UsageError(str(exc)) from exc


def _print_metric(em, tol, out) -> None:
    print(f"einstein_weights: {' '.join(f'{w:.12g}' for w in em.weights)}", file=out)
    print(f"lambda_estimate: {em.lambda_estimate:.15g} (numerical, not used for the sign)", file=out)
    print(f"curvature_estimate: {em.curvature:.15g}", file=out)
    print(f"residual_bound: {em.residual_bound:.3g}", file=out)
    print(f"iterations: {em.iterations}", file=out)
    if not lambda_estimate_is_decisive(em, tol):
        print("note: estimate is within tolerance of 0; the exact sign is authoritative", file=out)


def _check_tol(args) -> None:
    if args.tol <= 0:
        raise UsageError("--tol must be positive")


def cmd_classify(args, out=sys.stdout) -> int:
    _check_tol(args)
    tree, p = _input_tree(args)
    if p is not None and not args.full:
        if p.m == 1 and p.a[0] == 0:
            raise UsageError("a single vertex has no edges")
        res = classify_caterpillar(p)
    else:
        try:
            res = classify_exact(tree)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    _report(res, out)
    if args.einstein:
        _print_metric(einstein_metric(tree, tol=args.tol), args.tol, out)
    return OK


def cmd_einstein(args, out=sys.stdout) -> int:
    _check_tol(args)
    tree, _ = _input_tree(args)
    if tree.edge_count == 0:
        raise UsageError("tree has no edges")
    try:
        em = einstein_metric(tree, tol=args.tol, max_iter=args.max_iter)
    except ConvergenceError as exc:
        print(f"no convergence: {exc}", file=sys.stderr)
        return INVARIANT
    _print_metric(em, args.tol, out)
    sign = classify_exact(tree).sign
    print(f"exact sign: {sign}", file=out)
    if lambda_estimate_is_decisive(em, args.tol):
        agrees = (em.lambda_estimate < 0) == (sign is SignClass.NEGATIVE)
        if not agrees:
            print("estimate disagrees with the exact sign", file=sys.stderr)
            return INVARIANT
    return OK


def cmd_enumerate(args, out=sys.stdout) -> int:
    if not (3 <= args.m_min <= args.m_max <= 12):
        raise UsageError("need 3 <= --m-min <= --m-max <= 12")
    status = OK
    for m in range(args.m_min, args.m_max + 1):
        r = census.run_census(m, guard=args.guard, workers=args.workers)
        s = r.stats
        print(
            f"m={m}: classified={s['classified']} negatives={s['negatives']} "
            f"maximal={s['maximal']} boundary={s['boundary']} zero={len(census.zero_candidates(r))} "
            f"({s['seconds']:.2f}s)",
            file=out,
        )
        if args.out is not None:
            try:
                census.write_census(r, args.out)
            except OSError as exc:
                raise UsageError(f"cannot write to {args.out}: {exc}") from exc
        if args.diff_golden:
            d = census.diff_against_golden(r)
            print(d.report(), file=out)
            if not d.ok:
                status = MISMATCH
    return status


def cmd_verify_zero(args, out=sys.stdout) -> int:
    if args.certs is not None:
        try:
            items = certs.read_certificates(args.certs)
        except (OSError, ValueError) as exc:
            raise UsageError(str(exc)) from exc
        if args.stable_family_max_m is not None:
            items += [certs.stable_family_certificate(m) for m in range(2, args.stable_family_max_m + 1)]
    else:
        top = 20 if args.stable_family_max_m is None else args.stable_family_max_m
        items = certs.builtin_certificates(top)
    status = OK
    for c in items:
        try:
            ok = certs.verify_certificate(c)
            why = ""
        except certs.CertificateError as exc:
            ok, why = False, f"  ({exc})"
        print(f"{'PASS' if ok else 'FAIL'} {c.to_line()}{why}", file=out)
        if not ok:
            status = MISMATCH
    print(f"{len(items)} certificate(s) checked", file=out)
    return status


def cmd_schur_check(args, out=sys.stdout) -> int:
    if args.m_max < 4:
        raise UsageError("--m-max must be >= 4")
    rep = schurforms.check_all(m_max=args.m_max, ab_max=args.ab_max)
    c = rep.checked
    print(f"defect determinant identity: {c['defect']} cases, {len(rep.defect_failures)} failures", file=out)
    print(f"endpoint minor formulas:     {c['endpoint']} cases, {len(rep.endpoint_failures)} failures", file=out)
    print(f"B maximum at i=2 and i=m-1:  {c['convexity']} cases, {len(rep.convexity_failures)} failures", file=out)
    for f in rep.defect_failures[:10]:
        print(f"  defect mismatch at m={f[0]}, i={f[1]}", file=out)
    for f in rep.endpoint_failures[:10]:
        print(f"  endpoint mismatch at m={f[0]}, a={f[1]}, b={f[2]}", file=out)
    for f in rep.convexity_failures[:10]:
        print(f"  convexity mismatch at m={f}", file=out)
    print("PASS" if rep.ok else "FAIL", file=out)
    return OK if rep.ok else MISMATCH


def phase_csv(grid) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a", "b", "computed", "predicted", "hyperbola"])
    for (a, b) in sorted(grid.computed):
        w.writerow([a, b, grid.computed[(a, b)], grid.predicted[(a, b)], (a - 1) * (b - 1) - 4])
    return buf.getvalue()


def cmd_phase(args, out=sys.stdout) -> int:
    if args.max < 1:
        raise UsageError("--max must be >= 1")
    grid = double_star_phase(args.max)
    text = phase_csv(grid)
    if args.out is not None:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from exc
    else:
        out.write(text)
    zeros = sorted(k for k, s in grid.computed.items() if s is SignClass.ZERO)
    print(f"cells={len(grid.computed)} mismatches={len(grid.mismatches)} zero={zeros}", file=sys.stderr)
    return OK if not grid.mismatches else MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tree-einstein", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="exact sign of the top Ricci eigenvalue")
    p.add_argument("--caterpillar", metavar="A1,...,AM")
    p.add_argument("--tree", metavar="FILE", help="edge list, one 'u v' pair per line")
    p.add_argument("--named", metavar="NAME", help="s32, star:K, double_star:A,B, path:N, eta:M,I, endpoint:M,A,B")
    p.add_argument("--full", action="store_true", help="use the full edge matrix for --caterpillar")
    p.add_argument("--einstein", action="store_true", help="also print the numerical Einstein metric")
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("einstein", help="numerical Einstein metric (Perron vector)")
    p.add_argument("--caterpillar", metavar="A1,...,AM")
    p.add_argument("--tree", metavar="FILE")
    p.add_argument("--named", metavar="NAME")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--max-iter", type=int, default=1_000_000)
    p.set_defaults(func=cmd_einstein)

    p = sub.add_parser("enumerate", help="caterpillar census by spine order")
    p.add_argument("--m-min", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--out", metavar="DIR")
    p.add_argument("--guard", type=int, default=census.DEFAULT_GUARD)
    p.add_argument("--workers", type=int, default=None, help=f"default: ${census.THREADS_ENV} or 1")
    p.add_argument("--diff-golden", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-zero", help="check positive integer null vectors")
    p.add_argument("--certs", metavar="FILE")
    p.add_argument("--stable-family-max-m", type=int, default=None)
    p.set_defaults(func=cmd_verify_zero)

    p = sub.add_parser("schur-check", help="check the Schur-complement closed forms")
    p.add_argument("--m-max", type=int, default=20)
    p.add_argument("--ab-max", type=int, default=8)
    p.set_defaults(func=cmd_schur_check)

    p = sub.add_parser("phase", help="double-star sign grid")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_phase)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args, out=out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except census.GuardExceeded as exc:
        print(f"guard breach: {exc}", file=sys.stderr)
        return INVARIANT
    except (AssertionError, ArithmeticError) as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return INVARIANT


if __name__ == "__main__":
    sys.exit(main())
