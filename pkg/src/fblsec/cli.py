"""Command-line front end.

Subcommands: ``ail`` (single-shot evaluation), ``sweep`` (config-driven
CSV experiments), ``optimize`` (blocklength design), ``pareto``
(trade-off frontier CSV) and ``mc`` (direct Monte Carlo access).

SNR enters in dB and is converted once at this boundary
(rho = 10^(dB/10)); the library is linear-domain throughout.  The
legitimate SNR defaults to rho * hb_gain and can be pinned with
--gamma-b.  Exit codes: 0 ok, 2 usage or config error, 3 quadrature
nonconvergence, 4 infeasible design.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .channel import ChannelStats
from .design import LAMBDA_GRID, pareto_front, solve_constrained_closed_form, solve_constrained_oracle, solve_weighted
from .fbl import FblParams, rate_offset
from .leakage import ail_approx, ail_exact, saddle_snr_values
from .mc import MODE_CONDITIONAL, MODE_ERGODIC, McConfig, ail_mc
from .quadrature import QuadratureConvergenceError
from .sop import SopParams, bridging_redundancy_rate, sop
from .sweeps import ConfigError, effective_config, parse_config, rows_to_csv, run_sweep

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NONCONVERGENCE = 3
EXIT_INFEASIBLE = 4


def _add_param_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--m", type=int, default=200, help="information bits per packet")
    sub.add_argument("--n", type=int, default=400, help="blocklength in channel uses")
    sub.add_argument("--eps", type=float, default=1e-3, help="decoding error probability")
    sub.add_argument("--snr-db", type=float, default=0.0, help="transmit SNR in dB")
    sub.add_argument("--hb-gain", type=float, default=1.0, help="legitimate channel gain realization")
    sub.add_argument("--gamma-b", type=float, default=None,
                     help="pin the legitimate SNR instead of rho * hb_gain")
    sub.add_argument("--mu-b", type=float, default=1.0, help="mean legitimate channel gain")
    sub.add_argument("--mu-e", type=float, default=0.1, help="mean eavesdropper channel gain")
    sub.add_argument("--n-max", type=int, default=1000, help="maximum blocklength")
    sub.add_argument("--format", choices=("kv", "json"), default="kv", help="report format")
    sub.add_argument("--out", type=Path, default=None, help="write output to a file instead of stdout")


def _context(args: argparse.Namespace) -> tuple[FblParams, ChannelStats, float]:
    rho = 10.0 ** (args.snr_db / 10.0)
    stats = ChannelStats(rho=rho, mu_b=args.mu_b, mu_e=args.mu_e)
    gamma_b = args.gamma_b if args.gamma_b is not None else rho * args.hb_gain
    params = FblParams(m=args.m, n=args.n, eps=args.eps, n_max=args.n_max)
    return params, stats, float(gamma_b)


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _emit_report(report: dict[str, Any], args: argparse.Namespace) -> None:
    if args.format == "json":
        text = json.dumps(report, indent=2) + "\n"
    else:
        text = "".join(f"{key}={_kv_value(value)}\n" for key, value in report.items())
    _emit(text, args.out)


def _kv_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _parse_methods(raw: str) -> list[str]:
    methods = [entry.strip() for entry in raw.split(",") if entry.strip()]
    allowed = {"approx", "exact", "mc"}
    unknown = [m for m in methods if m not in allowed]
    if unknown or not methods:
        raise ValueError(f"--method must be a comma list from {sorted(allowed)}, got {raw!r}")
    return methods


def cmd_ail(args: argparse.Namespace) -> int:
    params, stats, gamma_b = _context(args)
    methods = _parse_methods(args.method)
    report: dict[str, Any] = {
        "snr_db": args.snr_db,
        "rho": stats.rho,
        "gamma_b": gamma_b,
        "gbar_e": stats.gbar_e,
        "rate_offset": rate_offset(params, gamma_b),
        "saddle_snr": float(saddle_snr_values(float(params.n), params.m, params.eps, gamma_b)),
    }
    if "approx" in methods:
        report["ail_approx"] = ail_approx(params, gamma_b, stats).value
    if "exact" in methods:
        exact = ail_exact(params, gamma_b, stats, abs_tol=args.abs_tol)
        report["ail_exact"] = exact.value
        report["quad_abs_err"] = exact.quadrature_abs_err
    if "mc" in methods:
        estimate = ail_mc(params, gamma_b, stats, McConfig(samples=args.samples, seed=args.seed))
        report["ail_mc"] = estimate.value
        report["mc_stderr"] = estimate.std_error
    redundancy = bridging_redundancy_rate(params, gamma_b)
    report["sop_redundancy_rate"] = redundancy
    report["sop_equivalent"] = sop(SopParams(redundancy_rate=redundancy, gbar_e=stats.gbar_e))
    _emit_report(report, args)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    try:
        doc = json.loads(args.config.read_text())
    except FileNotFoundError:
        raise ConfigError(f"config: file not found: {args.config}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    spec = parse_config(doc)
    if args.methods is not None:
        spec = parse_config({**effective_config(spec), "methods": _parse_methods(args.methods)})
    if args.mc_samples is not None:
        spec = parse_config({**effective_config(spec), "mc_samples": args.mc_samples})
    if args.mc_seed is not None:
        spec = parse_config({**effective_config(spec), "mc_seed": args.mc_seed})
    if args.dump_config is not None:
        args.dump_config.write_text(json.dumps(effective_config(spec), indent=2) + "\n")
    header, rows = run_sweep(spec)
    _emit(rows_to_csv(header, rows), args.out)
    return EXIT_OK


def cmd_optimize(args: argparse.Namespace) -> int:
    params, stats, gamma_b = _context(args)
    if args.mode == "weighted":
        if args.lam is None:
            raise ValueError("--mode weighted requires --lambda")
        outcome = solve_weighted(args.lam, gamma_b, stats, params)
        oracle = solve_weighted(args.lam, gamma_b, stats, params) if args.oracle else None
    else:
        outcome = solve_constrained_closed_form(args.phi, gamma_b, stats, params)
        oracle = solve_constrained_oracle(args.phi, gamma_b, stats, params) if args.oracle else None
    report: dict[str, Any] = {
        "mode": args.mode,
        "n_star": outcome.n_star,
        "est": outcome.est,
        "ail": outcome.ail,
        "feasible": outcome.feasible,
        "method": outcome.method,
    }
    if oracle is not None:
        report["oracle_n_star"] = oracle.n_star
        report["oracle_match"] = oracle.n_star == outcome.n_star and oracle.feasible == outcome.feasible
    _emit_report(report, args)
    return EXIT_OK if outcome.feasible else EXIT_INFEASIBLE


def cmd_pareto(args: argparse.Namespace) -> int:
    params, stats, gamma_b = _context(args)
    points = pareto_front(gamma_b, stats, params)
    scan_hits = {
        solve_weighted(weight, gamma_b, stats, params).n_star for weight in LAMBDA_GRID
    }
    lines = ["n,est,ail,dominated,lambda_scan"]
    for point in points:
        lines.append(
            f"{point.n},{point.est!r},{point.ail!r},"
            f"{'true' if point.dominated else 'false'},"
            f"{'true' if point.n in scan_hits else 'false'}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_mc(args: argparse.Namespace) -> int:
    params, stats, gamma_b = _context(args)
    config = McConfig(samples=args.samples, seed=args.seed, mode=args.mode, workers=args.workers)
    estimate = ail_mc(params, gamma_b, stats, config)
    report = {
        "samples": args.samples,
        "seed": args.seed,
        "mode": args.mode,
        "ail_mc": estimate.value,
        "mc_stderr": estimate.std_error,
    }
    _emit_report(report, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fblsec",
        description="Average information leakage and blocklength design for "
                    "finite-blocklength wiretap links over Rayleigh fading.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ail = sub.add_parser("ail", help="evaluate the average information leakage once")
    _add_param_flags(ail)
    ail.add_argument("--method", default="approx",
                     help="comma list from approx,exact,mc (default: approx)")
    ail.add_argument("--abs-tol", type=float, default=1e-10, help="quadrature error bound")
    ail.add_argument("--samples", type=int, default=100_000, help="Monte Carlo samples")
    ail.add_argument("--seed", type=int, default=0, help="Monte Carlo seed")
    ail.set_defaults(handler=cmd_ail)

    sweep = sub.add_parser("sweep", help="run a config-driven sweep, emit CSV")
    sweep.add_argument("config", type=Path, help="JSON sweep config")
    sweep.add_argument("--methods", default=None, help="override the config's methods")
    sweep.add_argument("--mc-samples", type=int, default=None, help="override Monte Carlo samples")
    sweep.add_argument("--mc-seed", type=int, default=None, help="override Monte Carlo seed")
    sweep.add_argument("--dump-config", type=Path, default=None,
                       help="write the effective config to this path")
    sweep.add_argument("--out", type=Path, default=None, help="write CSV to a file instead of stdout")
    sweep.set_defaults(handler=cmd_sweep)

    optimize = sub.add_parser("optimize", help="design the blocklength")
    _add_param_flags(optimize)
    optimize.add_argument("--mode", choices=("weighted", "constrained"), required=True)
    optimize.add_argument("--lambda", dest="lam", type=float, default=None,
                          help="trade-off weight in [0, 1] (weighted mode)")
    optimize.add_argument("--phi", type=float, default=1e-2,
                          help="maximum tolerable leakage (constrained mode)")
    optimize.add_argument("--oracle", action="store_true",
                          help="cross-check against the exhaustive scan")
    optimize.set_defaults(handler=cmd_optimize)

    pareto = sub.add_parser("pareto", help="emit the throughput/leakage frontier as CSV")
    _add_param_flags(pareto)
    pareto.set_defaults(handler=cmd_pareto)

    mc = sub.add_parser("mc", help="Monte Carlo leakage estimate")
    _add_param_flags(mc)
    mc.add_argument("--samples", type=int, default=100_000, help="number of draws")
    mc.add_argument("--seed", type=int, default=0, help="reproducibility seed")
    mc.add_argument("--mode", choices=(MODE_CONDITIONAL, MODE_ERGODIC), default=MODE_CONDITIONAL)
    mc.add_argument("--workers", type=int, default=1, help="thread count (result is identical)")
    mc.set_defaults(handler=cmd_mc)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QuadratureConvergenceError as exc:
        print(
            f"quadrature did not converge: best value {exc.value!r}, "
            f"achieved bound {exc.error_bound!r}",
            file=sys.stderr,
        )
        return EXIT_NONCONVERGENCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
