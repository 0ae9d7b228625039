"""Command-line front end.

Subcommands ``simulate``, ``fig2``, ``fig3`` and ``fig4`` write CSV (default)
or JSON to ``--out`` or standard output. Exit status: 0 on success, 2 for
invalid flags, 3 when the numerics leave the domain of a formula.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .ensemble import ANALYTIC, MC, discord_surface, sweep_fig4
from .errors import NumericalDomainError, ValidationError
from .gaussian import Coherent, Squeezed, Thermal
from .measures import correlation_report
from .regions import region_map
from .scatter import ModePair, haar_random, output_covariance

EXIT_USAGE = 2
EXIT_NUMERICAL = 3


def format_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        if math.isnan(v):
            return ""
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return format(float(v), ".12g")
    return str(v)


def json_value(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        if math.isnan(v):
            return None
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return float(format(float(v), ".12g"))
    return v


def render(columns: list[str], rows, fmt: str) -> str:
    if fmt == "json":
        records = [{c: json_value(v) for c, v in zip(columns, row)} for row in rows]
        return json.dumps(records, indent=1, allow_nan=False) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(out, "w", newline="", encoding="utf-8") as fh:
            fh.write(text)


def _float_list(text: str) -> list[float]:
    try:
        values = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("list must not be empty")
    return values


def _int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("list must not be empty")
    return values


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--seed", type=_seed, default=0)

    parser = argparse.ArgumentParser(
        prog="scatterq",
        description="Correlations of Gaussian light scattered by a random unitary medium.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", parents=[common], help="one Haar draw, full correlation report")
    p.add_argument("--state", choices=("coherent", "thermal", "squeezed"), required=True)
    p.add_argument("--amplitude", type=complex, default=1.0, help="coherent amplitude, e.g. 1+0.5j")
    p.add_argument("--nbar", type=float, help="thermal mean photon number")
    p.add_argument("--r", type=float, help="squeezing parameter")
    p.add_argument("--theta", type=float, default=0.0, help="squeezing phase (rad)")
    p.add_argument("--n", type=int, default=8, help="number of channels N")
    p.add_argument("--kprime", type=int, default=0, help="occupied input channel")
    p.add_argument("--pair", type=int, nargs=2, metavar=("L", "M"), default=(0, 1))

    p = sub.add_parser("fig2", parents=[common], help="state-class map of the (gamma_x, gamma_p) plane")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--resolution", type=int, default=201)
    p.add_argument("--extent", type=float, default=None)

    p = sub.add_parser("fig3", parents=[common], help="thermal discord over (|S_lk'|, |S_mk'|)")
    p.add_argument("--nbar", type=float, required=True)
    p.add_argument("--resolution", type=int, default=101)
    p.add_argument("--physical-only", action="store_true", help="blank points with t_l^2 + t_m^2 > 1")

    p = sub.add_parser("fig4", parents=[common], help="mean discord versus n_bar and N")
    p.add_argument("--nbar-grid", type=_float_list, default=[1, 2, 5, 10, 20, 50, 100, 200, 500, 1000])
    p.add_argument("--n-grid", type=_int_list, default=[2, 4, 8, 16, 32, 64])
    p.add_argument("--method", choices=(ANALYTIC, MC), default=ANALYTIC)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--workers", type=int, default=1)
    return parser


def _validate(parser: argparse.ArgumentParser, args) -> None:
    if args.command == "simulate":
        if args.n < 2:
            parser.error("--n must be >= 2")
        if args.state == "thermal" and (args.nbar is None or not args.nbar >= 0):
            parser.error("thermal state needs --nbar >= 0")
        if args.state == "squeezed" and (args.r is None or not args.r >= 0):
            parser.error("squeezed state needs --r >= 0")
        if not math.isfinite(args.theta):
            parser.error("--theta must be finite")
        l, m = args.pair
        for name, idx in (("--kprime", args.kprime), ("--pair L", l), ("--pair M", m)):
            if not 0 <= idx < args.n:
                parser.error(f"{name} must lie in 0..{args.n - 1}")
        if l == m:
            parser.error("--pair needs two distinct output modes")
    elif args.command == "fig2":
        if not (args.alpha >= 0.5 and args.beta >= 0.5):
            parser.error("--alpha and --beta must be >= 0.5")
        if args.resolution < 2:
            parser.error("--resolution must be >= 2")
        if args.extent is not None and not args.extent > 0:
            parser.error("--extent must be > 0")
    elif args.command == "fig3":
        if not args.nbar >= 0:
            parser.error("--nbar must be >= 0")
        if args.resolution < 2:
            parser.error("--resolution must be >= 2")
    elif args.command == "fig4":
        if any(not v >= 0 for v in args.nbar_grid):
            parser.error("--nbar-grid values must be >= 0")
        if any(v < 2 for v in args.n_grid):
            parser.error("--n-grid values must be >= 2")
        if args.trials < 1:
            parser.error("--trials must be >= 1")
        if args.workers < 1:
            parser.error("--workers must be >= 1")


def _input_state(args):
    if args.state == "coherent":
        return Coherent(args.amplitude)
    if args.state == "thermal":
        return Thermal(args.nbar)
    return Squeezed(args.r, args.theta)


def cmd_simulate(args) -> str:
    s = haar_random(args.n, args.seed)
    pair = ModePair(args.kprime, args.pair[0], args.pair[1])
    sigma = output_covariance(_input_state(args), s, pair)
    report = correlation_report(sigma)
    context = {
        "state": args.state,
        "N": args.n,
        "seed": args.seed,
        "k_prime": pair.k_prime,
        "l": pair.l,
        "m": pair.m,
        "t_l": float(abs(s[pair.l, pair.k_prime])),
        "t_m": float(abs(s[pair.m, pair.k_prime])),
    }
    record = {**context, **report.to_dict()}
    if args.format == "json":
        return json.dumps({k: json_value(v) for k, v in record.items()}, indent=1) + "\n"
    return render(list(record), [list(record.values())], "csv")


def cmd_fig2(args) -> str:
    grid = region_map(args.alpha, args.beta, args.extent, args.resolution)
    rows = ((gx, gp, cls.name, c) for gx, gp, cls, c in grid.rows())
    return render(["gamma_x", "gamma_p", "class", "c_value"], rows, args.format)


def cmd_fig3(args) -> str:
    t, d = discord_surface(args.nbar, args.resolution, physical_only=args.physical_only)
    rows = ((t[i], t[j], d[i, j]) for i in range(t.size) for j in range(t.size))
    return render(["t_l", "t_m", "discord"], rows, args.format)


def cmd_fig4(args) -> str:
    rows = sweep_fig4(args.nbar_grid, args.n_grid, args.method, args.trials, args.seed, args.workers)
    return render(["n_bar", "N", "mean_discord", "std_error"], rows, args.format)


COMMANDS = {"simulate": cmd_simulate, "fig2": cmd_fig2, "fig3": cmd_fig3, "fig4": cmd_fig4}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        text = COMMANDS[args.command](args)
    except ValidationError as exc:
        print(f"scatterq: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalDomainError as exc:
        print(f"scatterq: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    _emit(text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
