"""
ternary-codes

Minimal ternary linear codes from weight-class functions
"""

from __future__ import annotations

__all__ = (
    "DEFAULT_BRUTE_FORCE_MAX_M",
    "DEFAULT_MINIMALITY_MAX_M",
    "DEFAULT_SPECTRUM_MAX_M",
    "get_brute_force_max_m",
    "get_default_jobs",
    "get_minimality_max_m",
    "get_spectrum_max_m",
    "set_brute_force_max_m",
    "set_default_jobs",
    "set_minimality_max_m",
    "set_spectrum_max_m",
)

import logging

from typing_extensions import Final

from . import utils
from .utils import arg_value_error_range

version_info = (0, 1, 0)

# Follows https://semver.org/spec/v2.0.0.html
__version__ = ".".join(map(str, version_info[:3]))
if version_info[3:]:
    __version__ += "-" + ".".join(map(str, version_info[3:]))

DEFAULT_BRUTE_FORCE_MAX_M: Final[int] = utils._BUDGET_DEFAULTS["brute_force_max_m"]
"""Default cap on ``m`` for the weight distribution and enumerator oracles

.. seealso:: :py:func:`set_brute_force_max_m`.
"""

DEFAULT_MINIMALITY_MAX_M: Final[int] = utils._BUDGET_DEFAULTS["minimality_max_m"]
"""Default cap on ``m`` for the brute-force covering check

.. seealso:: :py:func:`set_minimality_max_m`.
"""

DEFAULT_SPECTRUM_MAX_M: Final[int] = utils._BUDGET_DEFAULTS["spectrum_max_m"]
"""Default cap on ``m`` for full Walsh spectra

.. seealso:: :py:func:`set_spectrum_max_m`.
"""


def get_brute_force_max_m() -> int:
    """Returns the current cap on ``m`` for the brute-force oracles.

    .. seealso:: :py:func:`set_brute_force_max_m`.
    """
    return utils._budget["brute_force_max_m"]


def get_default_jobs() -> int:
    """Returns the default number of worker processes.

    .. seealso:: :py:func:`set_default_jobs`.
    """
    return utils._default_jobs


def get_minimality_max_m() -> int:
    """Returns the current cap on ``m`` for the brute-force covering check.

    .. seealso:: :py:func:`set_minimality_max_m`.
    """
    return utils._budget["minimality_max_m"]


def get_spectrum_max_m() -> int:
    """Returns the current cap on ``m`` for full Walsh spectra.

    .. seealso:: :py:func:`set_spectrum_max_m`.
    """
    return utils._budget["spectrum_max_m"]


def set_brute_force_max_m(m: int) -> None:
    """Sets the cap on ``m`` for the weight distribution and enumerator oracles.

    Args:
        m: The largest dimension enumerated; the work grows as ``9^m``.

    Raises:
        ValueError: *m* is less than ``1``.

    The initial value is :py:data:`DEFAULT_BRUTE_FORCE_MAX_M`, unless overridden by
    the ``TERNARY_CODES_BRUTE_FORCE_MAX_M`` environment variable.
    """
    _set_budget("brute_force_max_m", m)


def set_default_jobs(jobs: int) -> None:
    """Sets the default number of worker processes for exhaustive computations.

    Args:
        jobs: ``1`` (the initial value) computes in the calling process.

    Raises:
        ValueError: *jobs* is less than ``1``.
    """
    if jobs < 1:
        raise arg_value_error_range("jobs", jobs)

    utils._default_jobs = jobs


def set_minimality_max_m(m: int) -> None:
    """Sets the cap on ``m`` for the brute-force covering check.

    Args:
        m: The largest dimension checked; the work grows as ``27^m``.

    Raises:
        ValueError: *m* is less than ``1``.

    The initial value is :py:data:`DEFAULT_MINIMALITY_MAX_M`, unless overridden by
    the ``TERNARY_CODES_MINIMALITY_MAX_M`` environment variable.
    """
    _set_budget("minimality_max_m", m)


def set_spectrum_max_m(m: int) -> None:
    """Sets the cap on ``m`` for full Walsh spectra.

    Args:
        m: The largest dimension transformed; the work grows as ``9^m``.

    Raises:
        ValueError: *m* is less than ``1``.

    The initial value is :py:data:`DEFAULT_SPECTRUM_MAX_M`, unless overridden by
    the ``TERNARY_CODES_SPECTRUM_MAX_M`` environment variable.
    """
    _set_budget("spectrum_max_m", m)


def _set_budget(name: str, m: int) -> None:
    if m < 1:
        raise arg_value_error_range("m", m)

    utils._budget[name] = m


logging.getLogger(__name__).addHandler(logging.NullHandler())
