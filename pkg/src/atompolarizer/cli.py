"""Command-line front end.

Subcommands::

    atompol spectrum --axis delta -50 50 1001 [--quantity full|left|right|malus]
    atompol sweep2d  --axis delta -50 50 201 --axis rabi 0 20 101
    atompol figure fig2a
    atompol fidelity
    atompol malus --ideal --alpha 1.0471975512 --n 1000000 --seed 1
    atompol verify --draws 10000 --seed 7

Exit status: 0 success, 1 usage or configuration error, 2 numerical or
verification failure.
"""

from __future__ import annotations

import argparse
import contextlib
import logging
import sys
from dataclasses import asdict, replace

from . import __version__
from .config import FORMATS, RunConfig, parse_config
from .errors import ConfigError, PolarizerError
from .malus import PolarizationState, ci_check, ideal_point, malus_analytic, simulate_photons
from .output import record_table, write_table
from .sweep import AXIS_PARAMETERS, FIGURES, QUANTITIES, SweepAxis, SweepPlan, preset_figure
from .verify import run_verification

log = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2

DEFAULT_FIDELITY_AXES = (SweepAxis("delta", -50.0, 50.0, 201), SweepAxis("rabi", 0.0, 100.0, 101))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _axis_arg(values):
    name, start, stop, count = values
    return SweepAxis(name, float(start), float(stop), int(count))


def create_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration")
    common.add_argument("--output", help="output path (default: stdout)")
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("-v", "--verbose", action="store_true")

    sweep = argparse.ArgumentParser(add_help=False)
    sweep.add_argument("--axis", nargs=4, action="append", metavar=("PARAM", "START", "STOP", "COUNT"),
                       help=f"grid axis; PARAM one of {', '.join(AXIS_PARAMETERS)}")
    sweep.add_argument("--quantity", choices=QUANTITIES)
    sweep.add_argument("--alpha", type=float, help="polarization angle for --quantity malus")

    parser = _Parser(prog="atompol", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("spectrum", parents=[common, sweep], help="1D sweep")
    sub.add_parser("sweep2d", parents=[common, sweep], help="2D sweep")
    fig = sub.add_parser("figure", parents=[common], help="reproduce a figure preset")
    fig.add_argument("name", choices=FIGURES)
    sub.add_parser("fidelity", parents=[common, sweep], help="fidelity over a detuning x drive grid")

    malus = sub.add_parser("malus", parents=[common], help="Monte Carlo single-photon Malus's law")
    malus.add_argument("--alpha", type=float)
    malus.add_argument("--n", type=int)
    malus.add_argument("--seed", type=int)
    malus.add_argument("--z", type=float)
    malus.add_argument("--ideal", action="store_true", default=None,
                       help="use the lossless resonant operating point instead of the config model")

    verify = sub.add_parser("verify", parents=[common], help="closed form vs linear-system oracle")
    verify.add_argument("--draws", type=int)
    verify.add_argument("--seed", type=int)
    return parser


def _apply_flags(cfg: RunConfig, args) -> RunConfig:
    out = cfg.output
    if args.output is not None:
        out = replace(out, path=args.output)
    if args.format is not None:
        out = replace(out, format=args.format)
    cfg = replace(cfg, output=out)

    if args.command in ("spectrum", "sweep2d", "fidelity"):
        sw = cfg.sweep
        if args.axis:
            sw = replace(sw, axes=tuple(_axis_arg(a) for a in args.axis))
        if args.quantity is not None:
            sw = replace(sw, quantity=args.quantity)
        if args.alpha is not None:
            sw = replace(sw, alpha=args.alpha)
        cfg = replace(cfg, sweep=sw)
    elif args.command == "malus":
        changes = {k: getattr(args, k) for k in ("alpha", "n", "seed", "z", "ideal")
                   if getattr(args, k) is not None}
        cfg = replace(cfg, malus=replace(cfg.malus, **changes))
    elif args.command == "verify":
        changes = {k: getattr(args, k) for k in ("draws", "seed") if getattr(args, k) is not None}
        cfg = replace(cfg, verify=replace(cfg.verify, **changes))
    return cfg


def _metadata(cfg: RunConfig, command: str, **extra) -> dict:
    config = cfg.resolved()
    # the destination is not part of the result; keeps outputs byte-identical
    del config["output"]["path"]
    return {"tool": "atompolarizer", "version": __version__, "command": command,
            "config": config, **extra}


def _emit_sweep(cfg: RunConfig, command: str, plan: SweepPlan, stream, **extra) -> int:
    records = plan.run()
    names = [a.parameter for a in plan.axes]
    columns, rows = record_table(records, names)
    write_table(stream, _metadata(cfg, command, seed=None, **extra), columns, rows, cfg.output.format)
    bad = sum(1 for r in records if r.error)
    if bad:
        log.warning("%d of %d grid points carry evaluation errors", bad, len(records))
    return EXIT_OK


def run(cfg: RunConfig, command: str, stream, figure: str | None = None) -> int:
    """Execute one subcommand, writing its artifact to ``stream``."""
    if command in ("spectrum", "sweep2d"):
        need = 1 if command == "spectrum" else 2
        if len(cfg.sweep.axes) != need:
            raise ConfigError(f"{command} needs exactly {need} axis/axes, got {len(cfg.sweep.axes)}")
        plan = SweepPlan(cfg.model, cfg.probe, cfg.sweep.axes, cfg.sweep.quantity, cfg.sweep.alpha)
        return _emit_sweep(cfg, command, plan, stream)

    if command == "figure":
        plan = preset_figure(figure)
        return _emit_sweep(cfg, command, plan, stream, figure=plan.metadata,
                           model=plan.params.as_dict(), probe_omega=plan.probe.omega)

    if command == "fidelity":
        axes = cfg.sweep.axes or DEFAULT_FIDELITY_AXES
        plan = SweepPlan(cfg.model, cfg.probe, axes, cfg.sweep.quantity, cfg.sweep.alpha)
        return _emit_sweep(cfg, command, plan, stream, axes=[asdict(a) for a in axes])

    if command == "malus":
        m = cfg.malus
        params, probe = ideal_point() if m.ideal else (cfg.model, cfg.probe)
        pol = PolarizationState(m.alpha)
        analytic = malus_analytic(params, probe, pol)
        counts = simulate_photons(params, probe, pol, m.n, m.seed)
        report = ci_check(counts, analytic.transmit, m.z)
        columns = ("alpha", "n_total", "n_transmitted", "n_reflected", "n_lost", "p_hat",
                   "p_expected", "halfwidth", "z", "reflect_expected", "loss_expected", "pass")
        row = (m.alpha, counts.n_total, counts.n_transmitted, counts.n_reflected, counts.n_lost,
               report.p_hat, report.p_expected, report.halfwidth, m.z, analytic.reflect,
               analytic.loss, report.passed)
        meta = _metadata(cfg, command, seed=m.seed, model=params.as_dict(), probe_omega=probe.omega)
        write_table(stream, meta, columns, [row], cfg.output.format)
        return EXIT_OK if report.passed else EXIT_NUMERIC

    if command == "verify":
        v = cfg.verify
        rep = run_verification(v.draws, v.seed, cfg.model)
        columns = ("draws", "max_flux_dev", "max_t_dev", "max_r_dev", "max_oracle_jump_dev",
                   "failures", "first_failure", "pass")
        row = (rep.draws, rep.max_flux_dev, rep.max_t_dev, rep.max_r_dev, rep.max_oracle_jump_dev,
               rep.failures, rep.first_failure, rep.passed)
        write_table(stream, _metadata(cfg, command, seed=v.seed), columns, [row], cfg.output.format)
        return EXIT_OK if rep.passed else EXIT_NUMERIC

    raise ConfigError(f"unknown command {command!r}")


def main(argv=None) -> int:
    args = create_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        text = ""
        if args.config:
            with open(args.config, encoding="utf-8") as fh:
                text = fh.read()
        cfg = _apply_flags(parse_config(text), args)
    except (OSError, ConfigError, ValueError) as exc:
        print(f"atompol: config error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        with contextlib.ExitStack() as stack:
            if cfg.output.path:
                stream = stack.enter_context(open(cfg.output.path, "w", encoding="utf-8", newline=""))
            else:
                stream = sys.stdout
            return run(cfg, args.command, stream, getattr(args, "name", None))
    except ConfigError as exc:
        print(f"atompol: config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PolarizerError, ArithmeticError) as exc:
        print(f"atompol: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"atompol: invalid input: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
