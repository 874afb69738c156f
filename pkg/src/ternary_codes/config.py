"""
.. Run configuration
"""

from __future__ import annotations

__all__ = ("RunConfig", "parse_weight_classes")

import json
import logging
from argparse import Namespace
from collections.abc import Iterator, Mapping
from contextlib import contextmanager
from dataclasses import dataclass, fields

from typing_extensions import Any, Self

from . import utils
from .functions import Family, WeightClassFunction, make
from .utils import arg_value_error, arg_value_error_msg, arg_value_error_range

logger = logging.getLogger(__name__)

# Classes ======================================================================


@dataclass(frozen=True)
class RunConfig:
    """The settings of one command-line run.

    Values are merged, in increasing precedence, from the defaults below, an
    optional JSON file whose keys are the long option names and the command-line
    options.

    TIP:
        Instances are immutable.
    """

    family: Family = Family.G
    """Function family"""

    m: int = 5
    """Dimension"""

    k: int = 2
    """Family parameter"""

    S: tuple[int, ...] | None = None
    """Weight classes for :py:attr:`Family.F`; ``{1}`` when not given"""

    brute_force_max_m: int | None = None
    minimality_max_m: int | None = None
    spectrum_max_m: int | None = None
    """Caps; ``None`` keeps the current setting"""

    format: str = "table"
    """``json`` or ``table``"""

    output: str | None = None
    """Output path; standard output if ``None``"""

    jobs: int | None = None
    """Worker processes; ``None`` keeps the current default"""

    brute: bool = False
    """Cross-check closed forms against the brute-force oracles"""

    unchecked: bool = False
    """Accept parameters outside the theorem range"""

    m_max: int | None = None
    """Largest ``m`` of sweeps and scans; each command has its own default"""

    m_min: int = 5
    """Smallest ``m`` of scans"""

    families: tuple[Family, ...] = (Family.G, Family.GBAR, Family.F)
    """Families of scans"""

    def __post_init__(self) -> None:
        if self.format not in ("json", "table"):
            raise arg_value_error("format", self.format, "must be 'json' or 'table'")
        for name in _POSITIVE:
            value = getattr(self, name)
            if value is not None and value < 1:
                raise arg_value_error_range(name, value)

    @property
    def weight_classes(self) -> tuple[int, ...]:
        """*S* for :py:attr:`Family.F`, defaulting to ``(1,)``; empty otherwise"""
        if self.family is not Family.F:
            return ()
        return (1,) if self.S is None else self.S

    @contextmanager
    def budget(self) -> Iterator[None]:
        """Applies the given caps and number of jobs for the duration of the block."""
        saved_budget, saved_jobs = dict(utils._budget), utils._default_jobs
        utils._budget.update(
            (name, value)
            for name in utils._BUDGET_DEFAULTS
            if (value := getattr(self, name)) is not None
        )
        if self.jobs is not None:
            utils._default_jobs = self.jobs
        try:
            yield
        finally:
            utils._budget.update(saved_budget)
            utils._default_jobs = saved_jobs

    def function(
        self, family: Family | None = None, m: int | None = None, k: int | None = None
    ) -> WeightClassFunction:
        """Builds the configured family member, with optional overrides.

        Raises:
            ParameterRangeError: Out-of-range parameters.
            LinearFunctionError: A degenerate unchecked table.
        """
        family = self.family if family is None else family
        return make(
            family,
            self.m if m is None else m,
            self.k if k is None else k,
            ((1,) if self.S is None else self.S) if family is Family.F else (),
            unchecked=self.unchecked,
        )

    @classmethod
    def from_args(cls, args: Namespace) -> Self:
        """Merges the defaults, the file named by ``args.config`` and the options
        that were given (not ``None``).

        Raises:
            ValueError: Unreadable or malformed configuration file or value.
        """
        values: dict[str, Any] = {}
        if getattr(args, "config", None):
            values.update(cls._read_file(args.config))
        names = {field.name for field in fields(cls)}
        values.update(
            (name, value)
            for name, value in vars(args).items()
            if name in names and value is not None
        )
        return cls.from_mapping(values)

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any]) -> Self:
        """Creates an instance from raw option values.

        Raises:
            ValueError: Unknown key or malformed value.
        """
        names = {field.name for field in fields(cls)}
        converted: dict[str, Any] = {}
        for key, value in values.items():
            name = key.replace("-", "_")
            if name not in names:
                raise arg_value_error_msg("Unknown configuration key", key)
            converted[name] = _CONVERTERS.get(name, _identity)(value)

        return cls(**converted)

    @staticmethod
    def _read_file(path: str) -> dict[str, Any]:
        try:
            with open(path, encoding="utf-8") as file:
                data = json.load(file)
        except (OSError, json.JSONDecodeError) as e:
            raise arg_value_error_msg(
                "Unreadable configuration file", path, str(e)
            ) from None
        if not isinstance(data, dict):
            raise arg_value_error_msg("Configuration must be a JSON object", path)
        logger.debug("Read configuration %s from %s", data, path)

        return data


# Functions ====================================================================


def parse_weight_classes(value: str | Any) -> tuple[int, ...]:
    """Parses ``"1,2"`` (or a JSON list) into sorted distinct weight classes.

    Raises:
        ValueError: A class is not an integer.
    """
    if isinstance(value, str):
        items: Any = [item for item in value.split(",") if item.strip()]
    else:
        items = value
    try:
        return tuple(sorted({int(item) for item in items}))
    except (TypeError, ValueError):
        raise arg_value_error("S", value, "expected comma-separated integers") from None


def _families(value: str | Any) -> tuple[Family, ...]:
    if isinstance(value, str):
        value = [item.strip() for item in value.split(",")]
    return tuple(map(Family, value))


def _identity(value: Any) -> Any:
    return value


# Variables ====================================================================

_CONVERTERS = {
    "family": Family,
    "families": _families,
    "S": parse_weight_classes,
    "m": int,
    "k": int,
    "m_max": int,
    "m_min": int,
    "jobs": int,
    "brute_force_max_m": int,
    "minimality_max_m": int,
    "spectrum_max_m": int,
    "brute": bool,
    "unchecked": bool,
}

_POSITIVE = (
    "brute_force_max_m",
    "minimality_max_m",
    "spectrum_max_m",
    "jobs",
    "m_max",
    "m_min",
)
