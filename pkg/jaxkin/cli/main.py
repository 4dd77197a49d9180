"""Command line entry point: ``jaxkin {run,converge,ap-check}``"""
import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from ..errors import ConfigurationError, NumericalFailure
from ..imex import TABLEAUX
from ..scenarios import SCENARIOS, ScenarioConfig, build_problem, scenario, with_overrides
from .config import apply_settings, load_config_file
from .harness import ap_check, spatial_convergence, temporal_convergence
from .output import csv_filename, write_profile_csv, write_report
from .runner import run_scenario

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def _float_list(text: str) -> List[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected comma separated numbers, got {text!r}") from err


def _int_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from err


def build_parser() -> argparse.ArgumentParser:
    """
    :return: Parser with the run, converge and ap-check subcommands
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", default="test1_kinetic", choices=sorted(SCENARIOS), help="named scenario")
    common.add_argument("--config", type=Path, help="key=value file applied on top of the scenario")
    common.add_argument("--scheme", choices=sorted(TABLEAUX), help="IMEX Runge-Kutta scheme")
    common.add_argument("--epsilon", type=float, help="Knudsen number")
    common.add_argument("--nx", type=int, help="number of cells")
    common.add_argument("--nv", type=int, help="number of Gauss-Hermite nodes")
    common.add_argument("--tfinal", type=float, help="final time")
    common.add_argument("--cfl", type=float, help="CFL constant of both time-step rules")
    common.add_argument("--weno", type=int, choices=(3, 5), help="WENO reconstruction order")
    common.add_argument("--kernel", choices=("rta", "epi"), help="scattering kernel")
    common.add_argument("--well-prepared", action="store_true", help="start from the diffusion-limit odd parity")
    common.add_argument("--output-dir", type=Path, default=Path("output"), help="directory of the written files")
    common.add_argument("--threads", type=int, help="XLA CPU threads")
    common.add_argument("--log-level", default="INFO", choices=("DEBUG", "INFO", "WARNING", "ERROR"))

    parser = argparse.ArgumentParser(
        prog="jaxkin", description="Asymptotic-preserving IMEX solver for the 1D semiconductor Boltzmann equation"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", parents=[common], help="integrate a scenario and write profiles")
    run.add_argument("--output-times", type=_float_list, help="comma separated snapshot times")
    run.add_argument("--no-progress", action="store_true", help="hide the progress bar")

    converge = sub.add_parser("converge", parents=[common], help="self-convergence order table")
    converge.add_argument("--mode", choices=("time", "space"), default="time")
    converge.add_argument("--levels", type=int, default=4, help="number of Δt halvings plus one")
    converge.add_argument("--resolutions", type=_int_list, help="doubling cell counts for --mode space")
    converge.add_argument("--schemes", type=lambda s: [t for t in s.split(",") if t], help="schemes to sweep")
    converge.add_argument("--epsilons", type=_float_list, help="Knudsen numbers to sweep")

    sub.add_parser("ap-check", parents=[common], help="compare with the drift-diffusion limit")
    return parser


def configure_threads(threads: Optional[int]) -> None:
    """
    Limits the XLA CPU backend; effective only before the first JAX computation

    :param threads: Thread count, None leaves the backend untouched
    """
    if threads is None:
        return
    if threads < 1:
        raise ConfigurationError(f"--threads must be positive, got {threads}")
    flags = os.environ.get("XLA_FLAGS", "")
    extra = f"--xla_cpu_multi_thread_eigen={'true' if threads > 1 else 'false'} intra_op_parallelism_threads={threads}"
    os.environ["XLA_FLAGS"] = f"{flags} {extra}".strip()


def resolve_config(args: argparse.Namespace) -> ScenarioConfig:
    """
    Scenario defaults, then the config file, then the flags

    :param args: Parsed arguments
    :return: Effective configuration
    """
    config = scenario(args.scenario)
    if args.config is not None:
        config = apply_settings(config, load_config_file(args.config))
    return with_overrides(
        config,
        scheme=args.scheme,
        epsilon=args.epsilon,
        nx=args.nx,
        nv=args.nv,
        t_final=args.tfinal,
        c_h=args.cfl,
        c_m=args.cfl,
        weno_order=args.weno,
        kernel=args.kernel,
        well_prepared=True if args.well_prepared else None,
        output_times=getattr(args, "output_times", None),
    )


def _run(args, config: ScenarioConfig) -> None:
    result = run_scenario(config, progress=not args.no_progress)
    for snap in result.snapshots:
        name = csv_filename(config.name, config.scheme, snap.time)
        write_profile_csv(
            args.output_dir / name, result.problem.grid.centers, snap.state.rho, snap.field.potential, snap.current
        )
    report = args.output_dir / f"{config.name}_{config.scheme}_report.txt"
    write_report(report, result.problem, [["# run", *result.report.lines()]])


def _converge(args, config: ScenarioConfig) -> None:
    lines: List[str] = []
    for scheme in args.schemes or [config.scheme]:
        for epsilon in args.epsilons or [config.epsilon]:
            case = with_overrides(config, scheme=scheme, epsilon=epsilon)
            if args.mode == "time":
                table = temporal_convergence(case, args.levels)
            else:
                table = spatial_convergence(case, args.resolutions or [config.nx, 2 * config.nx, 4 * config.nx])
            lines.extend(table.lines())
    args.output_dir.mkdir(parents=True, exist_ok=True)
    path = args.output_dir / f"{config.name}_convergence_{args.mode}.txt"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print("\n".join(lines))
    logger.info("wrote %s", path)


def _ap_check(args, config: ScenarioConfig) -> None:
    report = ap_check(config)
    sections = [["# ap-check", *report.lines()]]
    if report.residuals:
        sections.append(["# steady-state residual", *(f"{r!r}" for r in report.residuals)])
    write_report(args.output_dir / f"{config.name}_apcheck.txt", build_problem(config), sections)
    print("\n".join(report.lines()))


_COMMANDS = {"run": _run, "converge": _converge, "ap-check": _ap_check}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    :param argv: Arguments without the program name, sys.argv by default
    :return: Exit code, 0 on success, 2 on configuration errors, 3 on numerical failures
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    try:
        configure_threads(args.threads)
        config = resolve_config(args)
        _COMMANDS[args.command](args, config)
    except ConfigurationError as err:
        logger.error("configuration error: %s", err)
        return EXIT_CONFIG
    except NumericalFailure as err:
        logger.error("numerical failure: %s", err)
        return EXIT_NUMERICAL
    except OSError as err:
        logger.error("I/O error: %s", err)
        return EXIT_CONFIG
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
