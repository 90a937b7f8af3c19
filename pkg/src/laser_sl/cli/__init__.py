"""Command-line interface: run configurations, subcommands and exit codes."""

from laser_sl.cli.config import RunConfig, load_config, parse_config
from laser_sl.cli.error_handlers import handle_error
from laser_sl.cli.main import main

__all__ = [
    "RunConfig",
    "handle_error",
    "load_config",
    "main",
    "parse_config",
]
