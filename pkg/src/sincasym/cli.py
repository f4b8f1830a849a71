"""Command-line interface.

Commands: coeffs (exact coefficient tables), eval (asymptotic estimates),
oracle (high-precision quadrature), table (regenerate the published
reference tables side by side), verify (the full verification suite).

Output is deterministic for a given configuration.  --format structured
emits a single JSON document with a schema_version field; text is the
human layout.  Exit codes: 0 success, 1 verification/reproduction
failure, 2 usage error.

Exactness contract: nu and the ball exponent a are rational and must be
given as p/q strings for coefficient commands (floats are refused); the
evaluation and oracle commands accept floats for n and for the damping
parameter a of the exponential families.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__, asymeval, coeffgen, oracle, tables, verify
from .ratseries import parse_rational

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    """Strict rational: p or p/q only, no decimal or exponent notation."""
    if any(ch in text for ch in ".eE"):
        raise UsageError(
            f"expected an exact rational 'p/q', got {text!r} (floats are "
            "refused where exact coefficients are produced)")
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "structured":
        payload = {"schema_version": SCHEMA_VERSION, **payload}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_coeffs(args) -> int:
    if args.family == "sinc":
        if args.nu is not None or args.a is not None:
            raise UsageError("the sinc family takes no nu or a")
        K = args.K if args.K is not None else coeffgen.DEFAULT_K_SINC
        table = coeffgen.coeffs_In(K)
    elif args.family == "ball":
        if args.nu is None:
            raise UsageError("the ball family needs --nu p/q")
        K = args.K if args.K is not None else coeffgen.DEFAULT_K_BALL
        table = coeffgen.coeffs_ball(_rational_arg(args.nu), K)
    elif args.family == "ball_general":
        if args.nu is None or args.a is None:
            raise UsageError("the ball_general family needs --nu and --a")
        K = args.K if args.K is not None else coeffgen.DEFAULT_K_BALL
        table = coeffgen.coeffs_ball_general(
            _rational_arg(args.nu), _rational_arg(args.a), K)
    else:
        raise UsageError(f"unknown family {args.family!r}")
    _emit(args, {"coeffs": table.to_dict()}, table.to_text().rstrip("\n"))
    return 0


def _float_arg(text: str, name: str) -> float:
    try:
        return float(Fraction(text)) if "/" in text else float(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"invalid value for {name}: {text!r}") from None


def cmd_eval(args) -> int:
    kmax = args.kmax if args.kmax is not None else "auto"
    if kmax != "auto":
        kmax = int(kmax)
    n = _float_arg(args.n, "--n")
    family = args.family
    if family in ("sinc", "jn"):
        K = args.K if args.K is not None else coeffgen.DEFAULT_K_SINC
        table = coeffgen.coeffs_In(K)
        fn = asymeval.eval_In if family == "sinc" else asymeval.eval_Jn
        result = fn(n, table, k_max=kmax)
        payload, text = _asym_payload(family, n, result)
    elif family == "kn":
        if args.a is None:
            raise UsageError("kn needs --a")
        a = _float_arg(args.a, "--a")
        result = asymeval.eval_Kn(n, a, variant=args.variant)
        payload, text = _asym_payload(family, n, result, a=a,
                                      variant=args.variant)
    elif family == "khat":
        if args.a is None:
            raise UsageError("khat needs --a")
        a = _float_arg(args.a, "--a")
        value = asymeval.eval_Khat(n, a)
        payload = {"family": family, "n": n, "a": a, "value": value}
        text = f"khat(n={n:g}, a={a:g}) ~ {value!r}"
    elif family == "ball":
        if args.nu is None:
            raise UsageError("ball needs --nu p/q")
        nu = _rational_arg(args.nu)
        K = args.K if args.K is not None else coeffgen.DEFAULT_K_BALL
        table = coeffgen.coeffs_ball(nu, K)
        result = asymeval.eval_ball(nu, n, table, k_max=kmax)
        payload, text = _asym_payload(family, n, result, nu=str(nu))
    elif family == "ball_general":
        if args.nu is None or args.a is None:
            raise UsageError("ball_general needs --nu and --a as p/q")
        nu = _rational_arg(args.nu)
        a = _rational_arg(args.a)
        K = args.K if args.K is not None else coeffgen.DEFAULT_K_BALL
        table = coeffgen.coeffs_ball_general(nu, a, K)
        result = asymeval.eval_ball_general(nu, a, n, table, k_max=kmax)
        payload, text = _asym_payload(family, n, result, nu=str(nu), a=str(a))
    else:
        raise UsageError(f"unknown family {args.family!r}")
    _emit(args, payload, text)
    return 0


def _asym_payload(family: str, n: float, result, **extra):
    payload = {"family": family, "n": n, **extra, **result.to_dict()}
    parts = [f"{k}={v}" for k, v in extra.items()]
    head = f"{family}(n={n:g}" + ("".join(", " + p for p in parts)) + ")"
    text = (f"{head} ~ {result.value!r}\n"
            f"  k_used = {result.k_used}\n"
            f"  first omitted term ~ {result.first_omitted:.3e}")
    return payload, text


def cmd_oracle(args) -> int:
    n = _float_arg(args.n, "--n")
    tol = args.tol
    try:
        if args.family == "sinc":
            q = oracle.integrate_In(n, tol)
        elif args.family == "kn":
            if args.a is None:
                raise UsageError("kn needs --a")
            q = oracle.integrate_Kn(n, _float_arg(args.a, "--a"), tol)
        elif args.family == "khat":
            if args.a is None:
                raise UsageError("khat needs --a")
            q = oracle.integrate_Khat(n, _float_arg(args.a, "--a"), tol)
        elif args.family == "ball":
            if args.nu is None or args.a is None:
                raise UsageError("ball needs --nu and --a")
            nu = _rational_arg(args.nu)
            a = _rational_arg(args.a)
            q = oracle.integrate_ball(nu, a, n, tol)
        else:
            raise UsageError(f"unknown family {args.family!r}")
    except oracle.QuadratureError as exc:
        best = exc.best
        _emit(args, {"oracle": best.to_dict(), "converged": False},
              f"FAILED: {exc}\nbest value {best.value!r} "
              f"(err {best.abs_err_est:.2e} + tail {best.tail_cert:.2e})")
        return 1
    _emit(args, {"oracle": q.to_dict(), "converged": True},
          f"value = {q.value!r}\n  abs error estimate {q.abs_err_est:.2e}"
          f"\n  tail certificate {q.tail_cert:.2e}\n  panels {q.panels}")
    return 0


def cmd_table(args) -> int:
    if args.id == 1:
        rows = tables.table_coeffs()
        ok = all(r["match"] for r in rows)
        lines = [f"{'k':>2}  {'computed':>42}  {'published':>42}  match"]
        for r in rows:
            lines.append(f"{r['k']:>2}  {r['computed']:>42}  "
                         f"{r['published']:>42}  {'yes' if r['match'] else 'NO'}")
    elif args.id == 2:
        rows = tables.table_kn(args.tol or tables.KN_TABLE_TOL)
        ok = all(r["kn_match"] and r["asym_match"] for r in rows)
        lines = [f"{'n':>5} {'a':>4}  {'integral':>12} {'published':>12} "
                 f"{'delta':>9} | {'estimate':>12} {'published':>12} {'delta':>9}"]
        for r in rows:
            lines.append(
                f"{r['n']:>5} {r['a']:>4} "
                f" {r['kn_computed']:>12.8f} {r['kn_published']:>12.8f} "
                f"{r['kn_delta']:>9.1e} | {r['asym_computed']:>12.8f} "
                f"{r['asym_published']:>12.8f} {r['asym_delta']:>9.1e}"
                + ("" if r["kn_match"] and r["asym_match"] else "  MISMATCH"))
    elif args.id == 3:
        rows = tables.table_ball(args.tol or tables.BALL_TABLE_TOL)
        ok = True
        lines = [f"{'a':>5} {'k':>2}  {'rel error':>11} {'published':>11} {'ratio':>7}"]
        for r in rows:
            window = 5.0 if r["published"] < 1e-10 else 2.0
            good = (not r["oracle_failed"]
                    and 1.0 / window < r["ratio"] < window)
            ok = ok and good
            lines.append(f"{r['a']:>5} {r['k']:>2}  {r['computed']:>11.3e} "
                         f"{r['published']:>11.3e} {r['ratio']:>7.3f}"
                         + ("" if good else "  MISMATCH"))
    else:
        raise UsageError("table id must be 1, 2 or 3")
    _emit(args, {"table": args.id, "rows": rows, "all_match": ok},
          "\n".join(lines))
    return 0 if ok else 1


def cmd_verify(args) -> int:
    results = verify.run_all(tol_kn=min(args.tol, tables.KN_TABLE_TOL))
    ok = all(r.passed for r in results)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}"
             for r in results]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    _emit(args, {"checks": [r.to_dict() for r in results], "all_passed": ok},
          "\n".join(lines))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sincasym",
        description="Asymptotics of sinc-power and Bessel-power integrals")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, families, tol_default=None):
        p.add_argument("--family", choices=families, default=families[0])
        p.add_argument("--nu", help="order nu as an exact rational p/q")
        p.add_argument("--a", help="exponent/damping parameter")
        p.add_argument("--K", type=int, help="coefficient table order")
        p.add_argument("--format", choices=("text", "structured"),
                       default="text")
        if tol_default is not None:
            p.add_argument("--tol", type=float, default=tol_default,
                           help="relative tolerance")

    p = sub.add_parser("coeffs", help="exact coefficient tables")
    common(p, ("sinc", "ball", "ball_general"))
    p.set_defaults(fn=cmd_coeffs)

    p = sub.add_parser("eval", help="asymptotic estimates")
    common(p, ("sinc", "jn", "kn", "khat", "ball", "ball_general"))
    p.add_argument("--n", required=True, help="large parameter n")
    p.add_argument("--kmax", help="truncation index, or 'auto'")
    p.add_argument("--variant", choices=("derived", "printed"),
                   default="derived",
                   help="1/(8n) correction variant for the kn family")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("oracle", help="high-precision quadrature")
    common(p, ("sinc", "kn", "khat", "ball"), tol_default=oracle.DEFAULT_TOL)
    p.add_argument("--n", required=True, help="power n")
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("table", help="regenerate a reference table")
    p.add_argument("--id", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--tol", type=float, default=None,
                   help="oracle tolerance (default per table)")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--tol", type=float, default=tables.KN_TABLE_TOL)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
