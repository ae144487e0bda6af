# SPDX-License-Identifier: MIT
"""
Command line interface.

    discordlib trajectory --p 0.15 --grid 0:10:0.05 --out fig1a.csv
    discordlib sweep --p-list 0.15,0.23 --out sweep.csv
    discordlib verify

Exit status: 0 on success, 1 when a verification suite fails or on an
unexpected error, 2 for invalid arguments, 3 for numerical failures.
"""

import argparse
import sys
from collections.abc import Callable

from pydantic import ValidationError

from discordlib import channels, dynamics, verification
from discordlib.config import ConfigManager
from discordlib.enums import CommandEnum, OutputFormatEnum
from discordlib.exception import ArgumentErrorCode, ArgumentException
from discordlib.exception.exception_handler import (
    EXIT_FAILURE,
    EXIT_OK,
    handle_cli_exception,
)
from discordlib.logging import Logger, logger
from discordlib.schema import RunManifest
from discordlib.utils import export_util

DEFAULT_P_LIST = tuple(round(0.05 * k, 2) for k in range(11))

GRID_HELP = (
    "Gamma*t grid as start:stop:step; stop is included when step divides the "
    "span (default from the dynamics configuration, 0:10:0.05)"
)


def _common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--config", help="YAML configuration file")
    parent.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="console log level (logs go to stderr)",
    )
    parent.add_argument("--grid-theta", type=int, help="coarse optimizer grid size in theta")
    parent.add_argument("--grid-phi", type=int, help="coarse optimizer grid size in phi")
    parent.add_argument("--refine-iterations", type=int, help="Nelder-Mead iteration cap")
    parent.add_argument("--refine-tol", type=float, help="Nelder-Mead objective tolerance")
    parent.add_argument(
        "--workers",
        type=int,
        help="worker threads; DISCORD_DYN_THREADS caps the value",
    )
    return parent


def _dynamics_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--grid", help=GRID_HELP)
    parent.add_argument("--out", required=True, help="output table path")
    parent.add_argument(
        "--format",
        choices=[f.value for f in OutputFormatEnum],
        default=OutputFormatEnum.CSV.value,
        help="table format (default: csv)",
    )
    parent.add_argument("--flat-tol", type=float, help="discord flatness tolerance")
    parent.add_argument("--death-tol", type=float, help="negativity zero tolerance")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discordlib",
        description=(
            "Negativity and quantum discord of qubit-qutrit states under local "
            "qutrit dephasing."
        ),
    )
    common = _common_options()
    dyn = _dynamics_options()
    sub = parser.add_subparsers(dest="command", required=True)

    trajectory = sub.add_parser(
        CommandEnum.TRAJECTORY.value,
        parents=[common, dyn],
        help="correlations along a Gamma*t grid, plus a summary sidecar",
    )
    trajectory.add_argument("--p", type=float, required=True, help="family parameter in [0, 0.5]")

    sweep = sub.add_parser(
        CommandEnum.SWEEP.value,
        parents=[common, dyn],
        help="one phenomenon summary per family parameter",
    )
    sweep.add_argument(
        "--p-list",
        help="comma separated family parameters (default: 0,0.05,...,0.5)",
    )

    verify = sub.add_parser(
        CommandEnum.VERIFY.value,
        parents=[common],
        help="run the self-verification suites",
    )
    verify.add_argument("--seed", type=int, default=verification.DEFAULT_SEED)
    verify.add_argument(
        "--inject-fault", choices=sorted(verification.FAULTS), help=argparse.SUPPRESS
    )
    return parser


def _parse_grid(text: str) -> tuple[float, float, float]:
    parts = text.split(":")
    try:
        if len(parts) != 3:
            raise ValueError(text)
        start, stop, step = (float(x) for x in parts)
    except ValueError as e:
        raise ArgumentException(
            ArgumentErrorCode.INVALID_GRID,
            f"grid must look like start:stop:step, got {text!r}",
        ) from e
    return start, stop, step


def _parse_p_list(text: str | None) -> list[float]:
    if text is None:
        return list(DEFAULT_P_LIST)
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise ArgumentException(
            ArgumentErrorCode.INVALID_MANIFEST, f"invalid p list {text!r}"
        ) from e


def _overrides(args: argparse.Namespace) -> dict[str, dict]:
    """Configuration sections overridden by command line flags."""
    flags = {
        "optimizer": {
            "coarse_grid_theta": "grid_theta",
            "coarse_grid_phi": "grid_phi",
            "refine_iterations": "refine_iterations",
            "refine_tolerance": "refine_tol",
        },
        "dynamics": {
            "flat_tol": "flat_tol",
            "death_tol": "death_tol",
            "workers": "workers",
        },
        "log": {"log_level": "log_level"},
    }
    overrides: dict[str, dict] = {}
    for section, fields in flags.items():
        values = {
            key: getattr(args, attr)
            for key, attr in fields.items()
            if getattr(args, attr, None) is not None
        }
        if values:
            overrides[section] = values
    return overrides


def configure(args: argparse.Namespace) -> None:
    """Load configuration with the command line overrides and restart logging."""
    ConfigManager.reset()
    try:
        ConfigManager.initialize_global_config(
            config_file=args.config, custom_configs=_overrides(args)
        )
    except ValueError as e:
        raise ArgumentException(ArgumentErrorCode.INVALID_SETTING, str(e)) from e
    Logger.reset()
    Logger.initialize()
    sources = ", ".join(str(p) for p in ConfigManager.get_sources()) or "built-in defaults"
    logger.debug(f"configuration read from {sources}")


def build_manifest(args: argparse.Namespace) -> RunManifest:
    """
    Turn parsed arguments into a validated manifest.

    Raises:
        ArgumentException: INVALID_GRID, INVALID_MANIFEST.
    """
    command = CommandEnum(args.command)
    dyn = ConfigManager.get_dynamics_config()
    grid = getattr(args, "grid", None)
    start, stop, step = (
        _parse_grid(grid) if grid else (dyn.grid_start, dyn.grid_stop, dyn.grid_step)
    )
    try:
        manifest = RunManifest(
            command=command,
            p=getattr(args, "p", None),
            p_values=_parse_p_list(args.p_list) if command == CommandEnum.SWEEP else None,
            grid_start=start,
            grid_stop=stop,
            grid_step=step,
            optimizer=_overrides(args).get("optimizer", {}),
            output_path=getattr(args, "out", None),
            format=getattr(args, "format", OutputFormatEnum.CSV.value),
            inject_fault=getattr(args, "inject_fault", None),
            seed=getattr(args, "seed", None),
        )
    except ValidationError as e:
        raise ArgumentException(ArgumentErrorCode.INVALID_MANIFEST, str(e)) from e

    if command != CommandEnum.VERIFY and manifest.grid_start != 0.0:
        raise ArgumentException(
            ArgumentErrorCode.INVALID_MANIFEST,
            f"phenomenon detection needs a grid starting at 0, got {manifest.grid_start}",
        )
    return manifest


def _grid(manifest: RunManifest) -> tuple[float, ...]:
    return dynamics.make_grid(manifest.grid_start, manifest.grid_stop, manifest.grid_step)


def cmd_trajectory(manifest: RunManifest) -> int:
    """Write the trajectory table and its ``<stem>.summary.json`` sidecar."""
    cfg = dynamics.TrajectoryConfig(
        _grid(manifest),
        p=manifest.p,
        optimizer=ConfigManager.get_optimizer_config(),
    )
    tr = dynamics.run_trajectory(cfg)
    summary = dynamics.summarize(tr)

    if manifest.format == OutputFormatEnum.CSV:
        export_util.trajectory_exporter.export(
            tr.to_frame(), manifest.output_path, OutputFormatEnum.CSV
        )
    else:
        export_util.write_json(tr.to_document(), manifest.output_path)
    sidecar = export_util.write_json(summary, export_util.summary_path(manifest.output_path))
    logger.info(f"wrote {manifest.output_path} and {sidecar}")
    return EXIT_OK


def cmd_sweep(manifest: RunManifest) -> int:
    """Write one summary row per family parameter."""
    rows = dynamics.sweep_p(
        manifest.p_values or [],
        _grid(manifest),
        ConfigManager.get_optimizer_config(),
    )
    if manifest.format == OutputFormatEnum.CSV:
        export_util.sweep_exporter.export(
            dynamics.sweep_frame(rows), manifest.output_path, OutputFormatEnum.CSV
        )
    else:
        export_util.write_json(
            [row.model_dump(mode="json", by_alias=True) for row in rows],
            manifest.output_path,
        )
    return EXIT_OK


def cmd_verify(manifest: RunManifest) -> int:
    """Print the pass/fail table; non-zero exit if any suite fails."""
    factory = (
        verification.FAULTS[manifest.inject_fault]
        if manifest.inject_fault
        else channels.dephasing_from_gamma_t
    )
    seed = verification.DEFAULT_SEED if manifest.seed is None else manifest.seed
    results = verification.run_verification(factory, seed)
    print(verification.format_table(results))
    failed = [r.suite for r in results if not r.passed]
    if failed:
        logger.warning(f"failed suites: {', '.join(failed)}")
        return EXIT_FAILURE
    return EXIT_OK


COMMANDS: dict[CommandEnum, Callable[[RunManifest], int]] = {
    CommandEnum.TRAJECTORY: cmd_trajectory,
    CommandEnum.SWEEP: cmd_sweep,
    CommandEnum.VERIFY: cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        if e.code is None:
            return EXIT_OK
        return e.code if isinstance(e.code, int) else EXIT_FAILURE

    context = {k: v for k, v in vars(args).items() if v is not None}
    try:
        configure(args)
        manifest = build_manifest(args)
        return COMMANDS[manifest.command](manifest)
    except Exception as e:
        code, message = handle_cli_exception(e, context)
        print(f"error: {message}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
