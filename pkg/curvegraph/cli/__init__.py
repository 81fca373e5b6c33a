# flake8: noqa: F401
from .commands import COMMANDS, CommandResult
from .config import RunConfig, parse_tolerance, tolerances
from .main import build_parser, main, parse_config, render, run
from .repro import EXPERIMENTS, Check, ReproReport, repro
