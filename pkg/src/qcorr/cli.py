"""Command-line front end.

    qcorr classify      --r R --s S
    qcorr events        --r R --s S [--gamma G]
    qcorr trajectory    --r R --s S [--gamma G] [--t-max T] [--steps N] [--out FILE]
    qcorr phase-diagram [--grid-n N] [--gamma G] [--out FILE]
    qcorr mc-verify     --r R --s S [--gamma G] [--t-max T] [--samples N] [--seed K]

Exit codes: 0 success, 1 I/O error, 2 unphysical parameters, 3 Monte Carlo
check failed, 64 usage error.
"""
import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import analysis, serialize
from .channel import ChannelParams, NoiseSampleConfig, apply_dephasing, monte_carlo_evolve
from .correlations import lqu_family, negativity_family, pt_spectrum_family
from .states import InvalidParamsError, XStateParams, build_xstate

EXIT_OK = 0
EXIT_IO = 1
EXIT_PARAMS = 2
EXIT_MC_FAIL = 3
EXIT_USAGE = 64

COMMANDS = ("classify", "trajectory", "phase-diagram", "events", "mc-verify")
NEEDS_STATE = {"classify", "trajectory", "events", "mc-verify"}
MC_POINTS = 10
MC_REQUIRED = 9


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--r", type=float)
    common.add_argument("--s", type=float)
    common.add_argument("--gamma", type=float, default=1.0, help="damping rate (default 1)")
    common.add_argument("--t-max", type=float, default=None, help="default 8/gamma")
    common.add_argument("--steps", type=int, default=400)
    common.add_argument("--grid-n", type=int, default=201)
    common.add_argument("--samples", type=int, default=100_000)
    common.add_argument("--seed", type=int, default=None,
                        help="RNG seed (default: $QCORR_SEED, else 42)")
    common.add_argument("--out", default="-", help="output file, '-' for stdout")
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--sidecar", default=None,
                        help="trajectory metadata JSON path (default: OUT with .json suffix)")

    parser = _Parser(prog="qcorr", description="Two-qubit correlations under collective dephasing")
    sub = parser.add_subparsers(dest="command", metavar="command")
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def _resolve(args):
    if args.command in NEEDS_STATE and (args.r is None or args.s is None):
        raise UsageError(f"{args.command} requires --r and --s")
    if not (args.gamma > 0 and np.isfinite(args.gamma)):
        raise UsageError("--gamma must be positive")
    if args.t_max is None:
        args.t_max = 8.0 / args.gamma
    if args.t_max <= 0:
        raise UsageError("--t-max must be positive")
    if args.steps < 2:
        raise UsageError("--steps must be >= 2")
    if args.grid_n < 2:
        raise UsageError("--grid-n must be >= 2")
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    if args.seed is None:
        env = os.environ.get("QCORR_SEED")
        try:
            args.seed = int(env) if env else 42
        except ValueError:
            raise UsageError(f"QCORR_SEED={env!r} is not an integer") from None
    if not 0 <= args.seed < 2**64:
        raise UsageError("--seed must be a 64-bit unsigned integer")
    return args


def _emit(text, out):
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _single_row(doc, fmt):
    if fmt == "csv":
        return serialize._csv_text(list(doc), [list(doc.values())])
    return serialize.dumps_json(doc)


def cmd_classify(args, params, ch):
    tag = analysis.classify(params)
    lqu, betas = lqu_family(params)
    doc = {
        "r": params.r, "s": params.s,
        **tag.to_json(),
        "eta": list(pt_spectrum_family(params)),
        "negativity": negativity_family(params),
        "lqu": lqu,
        "beta1": betas.beta1, "beta2": betas.beta2, "beta3": betas.beta3,
    }
    if args.format == "csv":
        doc.pop("eta")
    _emit(_single_row(doc, args.format or "json"), args.out)


def cmd_events(args, params, ch):
    ev = analysis.event_times(params, ch)
    doc = {"r": params.r, "s": params.s, "gamma": ch.damping_rate, **ev.to_json()}
    _emit(_single_row(doc, args.format or "json"), args.out)


def cmd_trajectory(args, params, ch):
    traj = analysis.trajectory(params, ch, args.t_max, args.steps)
    if (args.format or "csv") == "json":
        _emit(serialize.dumps_json(serialize.trajectory_json(traj)), args.out)
        return
    _emit(serialize.trajectory_csv(traj), args.out)
    sidecar = args.sidecar
    if sidecar is None and args.out != "-":
        out = Path(args.out)
        sidecar = out.with_suffix(".json") if out.suffix != ".json" else out.with_suffix(".events.json")
    if sidecar is not None:
        _emit(serialize.dumps_json(serialize.trajectory_sidecar(traj)), str(sidecar))


def cmd_phase_diagram(args, params, ch):
    points = analysis.phase_diagram(args.grid_n, ch)
    if (args.format or "csv") == "json":
        _emit(serialize.dumps_json(serialize.phase_json(points)), args.out)
    else:
        _emit(serialize.phase_csv(points), args.out)


def mc_verify(params, ch, t_max, samples, seed, n_points=MC_POINTS):
    """Compare the Monte Carlo ensemble with the analytic channel at ``n_points``
    times in ``[0, t_max]``; each time uses its own RNG stream."""
    rho0 = build_xstate(params)
    rows = []
    for k, t in enumerate(np.linspace(0.0, t_max, n_points)):
        t = float(t)
        exact = apply_dephasing(rho0, t, ch).matrix
        mc = monte_carlo_evolve(rho0, t, ch, NoiseSampleConfig(samples, seed, stream=k))
        diff = np.abs(mc.state.matrix - exact)
        rows.append({
            "t": t,
            "max_abs_discrepancy": float(diff.max()),
            "bound_3sigma": mc.max_abs_error,
            "rho23_discrepancy": float(diff[1, 2]),
            "within_bound": bool(diff.max() <= mc.max_abs_error),
        })
    passed = sum(row["within_bound"] for row in rows)
    return {
        "r": params.r, "s": params.s, "gamma": ch.damping_rate,
        "samples": samples, "seed": seed,
        "points": rows,
        "points_within_bound": passed,
        "pass": passed >= min(MC_REQUIRED, n_points),
    }


def cmd_mc_verify(args, params, ch):
    rep = mc_verify(params, ch, args.t_max, args.samples, args.seed)
    if (args.format or "json") == "csv":
        text = serialize.mc_csv(rep["points"])
        text += f"# {'PASS' if rep['pass'] else 'FAIL'} {rep['points_within_bound']}/{len(rep['points'])}\n"
        _emit(text, args.out)
    else:
        _emit(serialize.dumps_json(rep), args.out)
    return EXIT_OK if rep["pass"] else EXIT_MC_FAIL


HANDLERS = {
    "classify": cmd_classify,
    "events": cmd_events,
    "trajectory": cmd_trajectory,
    "phase-diagram": cmd_phase_diagram,
    "mc-verify": cmd_mc_verify,
}


def run(argv=None):
    """Run one command; returns the process exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    if not argv or argv[0] not in COMMANDS:
        if argv and argv[0] in ("-h", "--help"):
            parser.print_help()
            return EXIT_OK
        sys.stderr.write(parser.format_usage())
        if argv:
            sys.stderr.write(f"qcorr: unknown command {argv[0]!r}\n")
        return EXIT_USAGE
    try:
        args = _resolve(parser.parse_args(argv))
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE

    params = None
    if args.command in NEEDS_STATE:
        try:
            params = XStateParams(args.r, args.s)
        except InvalidParamsError as exc:
            sys.stderr.write(f"qcorr: {exc}\n")
            return EXIT_PARAMS
    ch = ChannelParams(args.gamma)

    try:
        code = HANDLERS[args.command](args, params, ch)
    except OSError as exc:
        sys.stderr.write(f"qcorr: {exc}\n")
        return EXIT_IO
    return EXIT_OK if code is None else code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
