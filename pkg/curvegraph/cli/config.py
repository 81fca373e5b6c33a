"""Run configuration of the command line and tolerance overrides."""

import argparse
import contextlib
from typing import Dict, Iterator, NamedTuple, Optional, Tuple

from .. import __config__ as cfg
from ..utils import errors

FORMATS = ("json", "text", "csv")
TEXT_BY_DEFAULT = ("ntc",)


class RunConfig(NamedTuple):
    """Everything a subcommand needs; identical configs give identical reports."""

    command: str
    inputs: Tuple[str, ...] = ()
    output_format: str = "json"
    scheme: str = "monte_carlo"
    samples: Optional[int] = None
    seed: int = 0
    tolerances: Tuple[Tuple[str, float], ...] = ()
    options: Dict[str, object] = {}

    def asdict(self):
        return self._asdict()  # pylint: disable=no-member

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> "RunConfig":
        values = dict(vars(namespace))
        command = values.pop("command")
        common = {
            "command": command,
            "inputs": tuple(values.pop("inputs", None) or ()),
            "output_format": values.pop("output_format", None)
            or ("text" if command in TEXT_BY_DEFAULT else "json"),
            "scheme": values.pop("scheme", "monte_carlo"),
            "samples": values.pop("samples", None),
            "seed": values.pop("seed", 0),
            "tolerances": tuple(parse_tolerance(item) for item in values.pop("tol", None) or ()),
        }
        return cls(**common, options=values)


def parse_tolerance(text: str) -> Tuple[str, float]:
    """Parse 'NAME=value' for one of the tolerances in __config__.TOLERANCES.

    Examples:
        >>> parse_tolerance("separation_tol=1e-8") # -> ('SEPARATION_TOL', 1e-08)
    """
    name, sep, value = text.partition("=")
    name = name.strip().upper()
    if not sep or name not in cfg.TOLERANCES:
        raise errors.BadParameters(
            f"Tolerance override should be NAME=value with NAME in {cfg.TOLERANCES}, got {text!r}"
        )
    try:
        number = float(value)
    except ValueError as exc:
        raise errors.BadParameters(f"Tolerance {name} needs a number, got {value!r}") from exc
    if number <= 0:
        raise errors.BadParameters(f"Tolerance {name} should be positive, got {number}")
    return name, number


@contextlib.contextmanager
def tolerances(overrides: Tuple[Tuple[str, float], ...]) -> Iterator[None]:
    """Set package tolerances for the duration of one run."""
    saved = {name: getattr(cfg, name) for name, _ in overrides}
    try:
        for name, value in overrides:
            setattr(cfg, name, value)
        yield
    finally:
        for name, value in saved.items():
            setattr(cfg, name, value)
