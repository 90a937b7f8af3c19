"""Command-line entry point: ``laser-sl <subcommand> --config <path> [--output <path>]``.

Subcommands:
    gamma     Gamma coefficients of the HL or DHL reservoirs (CSV).
    build     Generator summary, optionally the binary matrix.
    match     Matching report between Gamma coefficients and AS parameters.
    compare   Frobenius distance between two generators, total and per block.
    evolve    Expectation-value trajectory (CSV).
    sl-check  Second-order convergence table toward Gamma_- (CSV).

Example:
    $ laser-sl compare --config configs/hl_vs_as.toml
    block,abs,rel
    total,...
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from laser_sl import __version__
from laser_sl.cli.commands import COMMANDS
from laser_sl.cli.config import load_config
from laser_sl.cli.error_handlers import EXIT_OK, handle_error
from laser_sl.core.settings import get_settings

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laser-sl",
        description="Stochastic-limit laser generators and their equivalence checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="<subcommand>")
    for name, command in COMMANDS.items():
        summary = (command.__doc__ or "").strip().splitlines()[0]
        sub = subparsers.add_parser(name, help=summary, description=summary)
        sub.add_argument("--config", required=True, type=Path, help="TOML run configuration")
        sub.add_argument("--output", type=Path, default=None, help="Artifact path (default stdout)")
        sub.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    return parser


def configure_logging(verbose: bool) -> None:
    """Root logger on stderr, DEBUG with --verbose, else the configured level."""
    level = logging.DEBUG if verbose else get_settings().log_level
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    """Run one subcommand and return its exit code."""
    args = build_parser().parse_args(argv)
    try:
        configure_logging(args.verbose)
        config = load_config(args.config)
        logger.info("Running %s on %s", args.command, args.config)
        COMMANDS[args.command](config, args.output, sys.stdout)
    except Exception as exc:
        return handle_error(exc)
    logger.info("Finished %s", args.command)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
