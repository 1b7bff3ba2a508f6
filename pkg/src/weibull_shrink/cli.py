"""Command-line front end.

Subcommands: estimate (from data or a forced pivotal value), risk (analytic
risk at a parameter point), dominance (departure ranges), table (grid
reproduction with optional audit), mc (simulation verification and constant
estimation). Global per-subcommand flags: --format {csv,json,text}, --seed,
--out.

Exit codes: 0 success, 1 failed verification check, 2 data or flag problems
(with file:line for parse failures), 3 inadmissible or degenerate shrinkage
parameters, 4 missing pivotal constant for an unknown design, 5 unwritable
output path. Data goes to stdout (or --out); diagnostics go to stderr. Output
depends only on flags and seed, never on wall clock, so reruns are
byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from weibull_shrink import estimators, montecarlo, risk, tables
from weibull_shrink.model import (
    BUILTIN_H,
    CensoredSample,
    GuessInterval,
    InadmissibleParameterError,
    MissingConstantError,
    PivotalContext,
    ShrinkageConfig,
    WeibullParams,
    lookup_h,
)

_ESTIMATE_K_REPS = 200_000


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# small formatting helpers


def _f4(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def _full(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _kv_text(pairs) -> str:
    return "\n".join(f"{k} = {_f4(v)}" for k, v in pairs) + "\n"


def _rows_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_full(v) for v in row])
    return buf.getvalue()


def _kv_csv(pairs) -> str:
    return _rows_csv([k for k, _ in pairs], [[v for _, v in pairs]])


def _json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _emit_kv(fmt: str, pairs) -> str:
    if fmt == "text":
        return _kv_text(pairs)
    if fmt == "csv":
        return _kv_csv(pairs)
    return _json(dict(pairs))


def _span(r: risk.DominanceRange):
    return [] if r.is_empty else [r.lo, r.hi]


# ---------------------------------------------------------------------------
# estimate


def _read_failure_times(path: str) -> list:
    """One failure time per line; '#' starts a comment; blanks skipped."""
    try:
        fh = open(path, "r", encoding="utf-8")
    except OSError as exc:
        raise _CliError(2, f"cannot read {path}: {exc}") from exc
    values = []
    with fh:
        for lineno, raw in enumerate(fh, start=1):
            stripped = raw.split("#", 1)[0].strip()
            if not stripped:
                continue
            try:
                value = float(stripped)
            except ValueError:
                raise _CliError(
                    2, f"{path}:{lineno}: cannot parse {stripped!r} as a failure time"
                ) from None
            if not math.isfinite(value) or value <= 0.0:
                raise _CliError(
                    2, f"{path}:{lineno}: failure times must be finite and > 0"
                )
            if values and value < values[-1][1]:
                raise _CliError(
                    2,
                    f"{path}:{lineno}: failure times must be nondecreasing "
                    f"({value:g} after {values[-1][1]:g})",
                )
            values.append((lineno, value))
    if not values:
        raise _CliError(2, f"{path}: no failure times found")
    return [v for _, v in values]


def _m_for_h(n: int, h: float) -> int:
    for (nn, mm), hh in BUILTIN_H.items():
        if nn == n and abs(hh - h) <= 1e-4:
            return mm
    return 2


def cmd_estimate(args) -> tuple:
    if (args.t is None) == (args.data is None):
        raise _CliError(2, "give exactly one of --t or --data")
    bain_k = None
    scale = None
    if args.t is not None:
        if args.h is None:
            raise _CliError(2, "--t needs an explicit --h")
        h = args.h
        n = args.n if args.n is not None else 20
        m = args.m if args.m is not None else _m_for_h(n, h)
        t = args.t
    else:
        if args.n is None:
            raise _CliError(2, "--data needs --n (number of units on test)")
        n = args.n
        times = _read_failure_times(args.data)
        try:
            sample = CensoredSample(n=n, observations=tuple(times))
        except ValueError as exc:
            raise _CliError(2, str(exc)) from exc
        m = sample.m
        h = args.h if args.h is not None else lookup_h(n, m)
        if args.bain_k is not None:
            bain_k = args.bain_k
        else:
            bain_k, _ = montecarlo.estimate_bain_constant(
                m, n, _ESTIMATE_K_REPS, args.seed
            )
        scale = estimators.bain_scale_estimate(
            sample, estimators.BainConstants(m=m, n=n, k=bain_k)
        )
        t = h * scale
    try:
        ctx = PivotalContext(n=n, m=m, h=h, t=t)
        interval = GuessInterval(beta1=args.beta1, beta2=args.beta2)
        cfg = ShrinkageConfig(p=args.p, q=args.q)
    except ValueError as exc:
        if isinstance(exc, InadmissibleParameterError):
            raise
        raise _CliError(2, str(exc)) from exc
    estimators.shrink_weight(cfg.p, ctx.h)  # inadmissible p -> exit 3
    pairs = [
        ("n", n),
        ("m", m),
        ("h", float(h)),
        ("t", float(t)),
        ("scale_estimate", scale),
        ("bain_k", bain_k),
        ("beta_unbiased", estimators.beta_unbiased(ctx)),
        ("beta_mmse", estimators.beta_mmse(ctx)),
        ("beta_shrink", estimators.beta_shrink(ctx, interval, cfg)),
        ("beta_shrink_truncated", estimators.beta_shrink_truncated(ctx, interval, cfg)),
        ("delta_hat", estimators.estimate_departure(ctx, interval)),
        ("q_select", estimators.suggest_q(ctx, interval)),
        ("p_admissible", True),
    ]
    return _emit_kv(args.format, pairs), 0


# ---------------------------------------------------------------------------
# risk


def cmd_risk(args) -> tuple:
    have_pair = args.delta1 is not None or args.delta2 is not None
    if have_pair and (args.delta1 is None or args.delta2 is None):
        raise _CliError(2, "--delta1 and --delta2 go together")
    if args.delta is None and not have_pair:
        raise _CliError(2, "give --delta or --delta1/--delta2")
    if args.modified and not have_pair:
        raise _CliError(2, "--modified needs --delta1 and --delta2")
    delta = args.delta if args.delta is not None else 0.5 * (args.delta1 + args.delta2)
    try:
        reports = [
            risk.report_unbiased(args.h),
            risk.report_mmse(args.h),
            risk.report_shrink(args.h, args.p, args.q, delta),
        ]
        if args.modified:
            reports.append(
                risk.report_modified(args.h, args.p, args.q, args.delta1, args.delta2)
            )
    except ValueError as exc:
        if isinstance(exc, InadmissibleParameterError):
            raise
        raise _CliError(2, str(exc)) from exc
    header = ["estimator", "bias", "arb", "rmse", "pre"]
    rows = [
        [r.estimator_id, r.bias_over_beta, r.arb, r.rmse, r.pre_vs_mmse]
        for r in reports
    ]
    if args.format == "csv":
        return _rows_csv(header, rows), 0
    if args.format == "json":
        return _json([r.to_dict() for r in reports]), 0
    lines = [
        f"{'estimator':<20} {'bias':>10} {'arb':>10} {'rmse':>10} {'pre':>12}"
    ]
    for r in reports:
        lines.append(
            f"{r.estimator_id:<20} {r.bias_over_beta:>10.4f} {r.arb:>10.4f} "
            f"{r.rmse:>10.4f} {r.pre_vs_mmse:>12.4f}"
        )
    return "\n".join(lines) + "\n", 0


# ---------------------------------------------------------------------------
# dominance


def cmd_dominance(args) -> tuple:
    r_mse = risk.mse_dominance_range(args.h, args.p, args.q)
    r_arb = risk.arb_dominance_range(args.h, args.p, args.q)
    r_best = risk.best_range(args.h, args.p, args.q)
    named = [("mse_range", r_mse), ("arb_range", r_arb), ("best", r_best)]
    if args.format == "csv":
        rows = [
            [name, None if r.is_empty else r.lo, None if r.is_empty else r.hi]
            for name, r in named
        ]
        return _rows_csv(["range", "lo", "hi"], rows), 0
    if args.format == "json":
        return _json({name: _span(r) for name, r in named}), 0
    lines = []
    for name, r in named:
        body = "empty" if r.is_empty else f"({r.lo:.4f}, {r.hi:.4f})"
        lines.append(f"{name} = {body}")
    return "\n".join(lines) + "\n", 0


# ---------------------------------------------------------------------------
# table


def _parse_design(text: str):
    m, _, h = text.partition(":")
    return int(m), float(h)


def _parse_row(text: str):
    a, _, b = text.partition(":")
    return float(a), float(b)


def cmd_table(args) -> tuple:
    default = tables.GridSpec.default_31 if args.which == "31" else tables.GridSpec.default_51
    spec = default()
    h_values = spec.h_values if not args.design else tuple(args.design)
    delta_rows = spec.delta_rows if not args.rows else tuple(args.rows)
    spec = tables.GridSpec(h_values, spec.p_values, spec.q_values, delta_rows)
    spec = spec.subset(m=args.m, p=args.p, q=args.q)
    cells = tables.table_31(spec) if args.which == "31" else tables.table_51(spec)
    if args.format == "csv":
        out = tables.cells_to_csv(cells)
    elif args.format == "json":
        out = tables.cells_to_json(cells)
    else:
        out = tables.cells_to_text(cells)
    if args.diff:
        if args.which == "31":
            report = tables.format_diff_report(
                tables.audit_table_31(), tables.audit_ranges_31()
            )
        else:
            report = tables.format_diff_report(tables.audit_table_51())
        out = out + "\n" + report
    return out, 0


# ---------------------------------------------------------------------------
# mc


def cmd_mc_estimate_k(args) -> tuple:
    k, se = montecarlo.estimate_bain_constant(args.m, args.n, args.reps, args.seed)
    pairs = [("k", k), ("se", se), ("m", args.m), ("n", args.n),
             ("replicates", args.reps), ("seed", args.seed)]
    return _emit_kv(args.format, pairs), 0


def cmd_mc_estimate_h(args) -> tuple:
    h, se = montecarlo.estimate_degrees_of_freedom(args.m, args.n, args.reps, args.seed)
    pairs = [("h", h), ("se", se), ("m", args.m), ("n", args.n),
             ("replicates", args.reps), ("seed", args.seed)]
    try:
        builtin = lookup_h(args.n, args.m)
    except MissingConstantError:
        builtin = None
    if builtin is not None:
        pairs.append(("builtin_h", builtin))
        pairs.append(("deviation", h - builtin))
    return _emit_kv(args.format, pairs), 0


def cmd_mc_verify(args) -> tuple:
    if args.reps < 1000:
        raise _CliError(2, "verification needs --reps >= 1000")
    have_pair = args.delta1 is not None or args.delta2 is not None
    if have_pair and (args.delta1 is None or args.delta2 is None):
        raise _CliError(2, "--delta1 and --delta2 go together")
    if args.delta is None and not have_pair:
        raise _CliError(2, "give --delta or --delta1/--delta2")
    h = args.h
    delta = args.delta if args.delta is not None else 0.5 * (args.delta1 + args.delta2)
    try:
        cfg = ShrinkageConfig(p=args.p, q=args.q)
    except ValueError as exc:
        if isinstance(exc, InadmissibleParameterError):
            raise
        raise _CliError(2, str(exc)) from exc
    estimators.shrink_weight(cfg.p, h)  # inadmissible p -> exit 3
    # risks are scale-free, so verify at true shape 1 with the guessed
    # interval placed to realize the requested departures
    plan = montecarlo.SimulationPlan(
        replicates=args.reps,
        seed=args.seed,
        params=WeibullParams(alpha=1.0, beta=1.0),
        n=args.n,
        m=args.m,
    )
    mid = GuessInterval(beta1=delta, beta2=delta)
    checks = [
        ("UNBIASED", montecarlo.unbiased_estimator(h), 0.0, risk.rmse_unbiased(h)),
        ("MMSE", montecarlo.mmse_estimator(h), -risk.arb_mmse(h), risk.rmse_mmse(h)),
        (
            "SHRINK_PQ",
            montecarlo.shrink_estimator(h, mid, cfg),
            risk.bias_shrink(h, cfg.p, cfg.q, delta),
            risk.rmse_shrink(h, cfg.p, cfg.q, delta),
        ),
    ]
    if have_pair:
        pair = GuessInterval(beta1=args.delta1, beta2=args.delta2)
        checks.append(
            (
                "SHRINK_PQ_MODIFIED",
                montecarlo.truncated_estimator(h, pair, cfg),
                risk.bias_modified(h, cfg.p, cfg.q, args.delta1, args.delta2),
                risk.mse_modified(h, cfg.p, cfg.q, args.delta1, args.delta2),
            )
        )
    results = []
    for name, estimator, analytic_bias, analytic_mse in checks:
        emp = montecarlo.empirical_risk(plan, estimator, h=h)
        results.append(
            (name, "bias", emp.bias, analytic_bias, 3.0 * emp.se_mean)
        )
        results.append((name, "mse", emp.mse, analytic_mse, 3.0 * emp.se_mse))
    failed = [
        (n, metric) for n, metric, emp, ana, tol in results if abs(emp - ana) > tol
    ]
    code = 1 if failed else 0
    if args.format == "csv":
        rows = [
            [n, metric, emp, ana, tol, "PASS" if abs(emp - ana) <= tol else "FAIL"]
            for n, metric, emp, ana, tol in results
        ]
        return _rows_csv(
            ["estimator", "metric", "empirical", "analytic", "three_se", "status"],
            rows,
        ), code
    if args.format == "json":
        payload = [
            {
                "estimator": n,
                "metric": metric,
                "empirical": emp,
                "analytic": ana,
                "three_se": tol,
                "status": "PASS" if abs(emp - ana) <= tol else "FAIL",
            }
            for n, metric, emp, ana, tol in results
        ]
        return _json(payload), code
    lines = []
    for n, metric, emp, ana, tol in results:
        status = "PASS" if abs(emp - ana) <= tol else "FAIL"
        lines.append(
            f"{status} {n} {metric}: empirical {emp:.6f} vs analytic {ana:.6f} "
            f"(3se {tol:.6f})"
        )
    lines.append(
        f"summary: {len(results) - len(failed)}/{len(results)} checks passed"
    )
    return "\n".join(lines) + "\n", code


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("csv", "json", "text"), default="text",
        help="output format (default text, 4 decimals; csv/json carry full precision)",
    )
    common.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    common.add_argument("--out", help="write output to this path instead of stdout")

    # Parsers nested under `mc` must not re-apply defaults, or a flag given at
    # the `mc` level would be silently clobbered when the sub-namespace is
    # copied back; the `mc` parser itself supplies the defaults.
    common_nested = argparse.ArgumentParser(add_help=False)
    common_nested.add_argument(
        "--format", choices=("csv", "json", "text"), default=argparse.SUPPRESS,
        help="output format (default text, 4 decimals; csv/json carry full precision)",
    )
    common_nested.add_argument(
        "--seed", type=int, default=argparse.SUPPRESS, help="RNG seed (default 0)"
    )
    common_nested.add_argument(
        "--out", default=argparse.SUPPRESS,
        help="write output to this path instead of stdout",
    )

    parser = argparse.ArgumentParser(
        prog="weibull-shrink",
        description="Shrinkage estimation of the Weibull shape under failure censoring",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_est = sub.add_parser("estimate", parents=[common],
                           help="estimate the shape from data or a forced pivotal value")
    p_est.add_argument("--data", help="file with one failure time per line")
    p_est.add_argument("--n", type=int, help="number of units on test")
    p_est.add_argument("--m", type=int, help="number of observed failures (with --t)")
    p_est.add_argument("--t", type=float, help="pivotal statistic, bypassing --data")
    p_est.add_argument("--h", type=float, help="pivotal degrees of freedom")
    p_est.add_argument("--bain-k", type=float, help="unbiasing constant for the design")
    p_est.add_argument("--beta1", type=float, required=True)
    p_est.add_argument("--beta2", type=float, required=True)
    p_est.add_argument("--p", type=float, required=True)
    p_est.add_argument("--q", type=float, required=True)
    p_est.set_defaults(func=cmd_estimate)

    p_risk = sub.add_parser("risk", parents=[common],
                            help="analytic risk at a parameter point")
    p_risk.add_argument("--h", type=float, required=True)
    p_risk.add_argument("--p", type=float, required=True)
    p_risk.add_argument("--q", type=float, required=True)
    p_risk.add_argument("--delta", type=float)
    p_risk.add_argument("--delta1", type=float)
    p_risk.add_argument("--delta2", type=float)
    p_risk.add_argument("--modified", action="store_true",
                        help="include the truncated estimator (needs --delta1/--delta2)")
    p_risk.set_defaults(func=cmd_risk)

    p_dom = sub.add_parser("dominance", parents=[common],
                           help="departure ranges where shrinkage beats the MMSE multiple")
    p_dom.add_argument("--h", type=float, required=True)
    p_dom.add_argument("--p", type=float, required=True)
    p_dom.add_argument("--q", type=float, required=True)
    p_dom.set_defaults(func=cmd_dominance)

    p_tab = sub.add_parser("table", parents=[common], help="reproduce an efficiency table")
    p_tab.add_argument("which", choices=("31", "51"))
    p_tab.add_argument("--diff", action="store_true",
                       help="append the audit against the embedded printed values")
    p_tab.add_argument("--m", action="append", type=int, help="restrict to these m")
    p_tab.add_argument("--p", action="append", type=float, help="restrict to these p")
    p_tab.add_argument("--q", action="append", type=float, help="restrict to these q")
    p_tab.add_argument("--design", action="append", type=_parse_design, metavar="M:H",
                       help="replace the design list (repeatable)")
    p_tab.add_argument("--rows", action="append", type=_parse_row, metavar="D1:D2",
                       help="replace the departure rows (repeatable)")
    p_tab.set_defaults(func=cmd_table)

    p_mc = sub.add_parser("mc", parents=[common], help="Monte Carlo utilities")
    mc_sub = p_mc.add_subparsers(dest="mc_command", required=True)

    p_ver = mc_sub.add_parser("verify", parents=[common_nested],
                              help="check analytic risks against simulation")
    p_ver.add_argument("--h", type=float, required=True)
    p_ver.add_argument("--p", type=float, required=True)
    p_ver.add_argument("--q", type=float, required=True)
    p_ver.add_argument("--delta", type=float)
    p_ver.add_argument("--delta1", type=float)
    p_ver.add_argument("--delta2", type=float)
    p_ver.add_argument("--reps", type=int, default=1_000_000)
    p_ver.add_argument("--n", type=int, default=20)
    p_ver.add_argument("--m", type=int, default=6)
    p_ver.set_defaults(func=cmd_mc_verify)

    p_k = mc_sub.add_parser("estimate-k", parents=[common_nested],
                            help="simulate the unbiasing constant for a design")
    p_k.add_argument("--n", type=int, required=True)
    p_k.add_argument("--m", type=int, required=True)
    p_k.add_argument("--reps", type=int, default=100_000)
    p_k.set_defaults(func=cmd_mc_estimate_k)

    p_h = mc_sub.add_parser("estimate-h", parents=[common_nested],
                            help="simulate the variance-matching pivotal constant")
    p_h.add_argument("--n", type=int, required=True)
    p_h.add_argument("--m", type=int, required=True)
    p_h.add_argument("--reps", type=int, default=100_000)
    p_h.set_defaults(func=cmd_mc_estimate_h)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 after --help; report the
        # code instead of unwinding through library callers
        return exc.code if isinstance(exc.code, int) else 2
    try:
        output, code = args.func(args)
    except _CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except InadmissibleParameterError as exc:
        print(str(exc), file=sys.stderr)
        return 3
    except tables.GridValidationError as exc:
        print(str(exc), file=sys.stderr)
        return 3
    except MissingConstantError as exc:
        print(
            f"{exc}\nhint: run `weibull-shrink mc estimate-h --n N --m M` to "
            "calibrate a surrogate, then pass it via --h",
            file=sys.stderr,
        )
        return 4
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(output)
        except OSError as exc:
            print(f"cannot write {args.out}: {exc}", file=sys.stderr)
            return 5
    else:
        sys.stdout.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
