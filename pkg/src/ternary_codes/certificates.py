"""
.. Certificates for the supporting binomial inequalities
"""

from __future__ import annotations

__all__ = (
    "CertificateReport",
    "LemmaTag",
    "Slack",
    "check_binom_growth",
    "check_gap_monotone",
    "check_gap_positive",
    "check_tail_dominance",
    "check_tail_monotone",
    "distance_gain",
    "gap_value",
    "sweep",
    "tail_value",
)

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

from typing_extensions import Any, NamedTuple

from .combinatorics import ball_size, binomial
from .exceptions import ParameterRangeError
from .functions import check_theorem_range
from .utils import arg_value_error_msg, arg_value_error_range, parallel_map

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]
"""Parameters of a checked instance, ``(m,)`` or ``(m, k)``"""

# Enumerations =================================================================


class LemmaTag(str, Enum):
    """The certified inequalities"""

    BINOM_GROWTH = "binom_growth"
    """``C(m+1, t) > 3·C(m-1, t)`` with ``t = ⌊(m-1)/2⌋``, for ``m >= 16``"""

    GAP_POSITIVE = "gap_positive"
    """``3^{m-1} - 2^k·C(m-1, k) - Σ_{j=0}^k 2^j·C(m, j) > 0``"""

    TAIL_DOMINANCE = "tail_dominance"
    """The tail difference at ``k = ⌊(m-1)/2⌋`` is positive"""

    MONOTONE = "monotone"
    """The gap and the tail difference decrease strictly as ``k`` increases"""


# Classes ======================================================================


class Slack(NamedTuple):
    """The outcome of a single instance.

    Args:
        holds: ``slack > 0``.
        slack: The exact difference of the two sides.
    """

    holds: bool
    slack: int


@dataclass(frozen=True)
class CertificateReport:
    """The outcome of a sweep over a parameter range.

    Args:
        tag: The inequality.
        m_range: The ``(first, last)`` values of ``m`` checked.
        failures: The points at which the inequality does not hold.
        margins: The exact slack at every point inside the claimed range.
        informational: The slack at points outside the claimed range. They never
          count as failures.
    """

    __slots__ = ("tag", "m_range", "failures", "margins", "informational")

    tag: LemmaTag
    m_range: tuple[int, int]
    failures: tuple[Point, ...]
    margins: Mapping[Point, int]
    informational: Mapping[Point, int]

    @property
    def holds(self) -> bool:
        """``True`` iff no failure was found"""
        return not self.failures

    @property
    def min_slack(self) -> int | None:
        """The smallest slack inside the claimed range, if any point was checked"""
        return min(self.margins.values(), default=None)

    def to_dict(self) -> dict[str, Any]:
        """Returns the JSON-ready form; integers are decimal strings."""
        return {
            "lemma": self.tag.value,
            "m_range": [str(self.m_range[0]), str(self.m_range[1])],
            "failures": [[str(x) for x in point] for point in self.failures],
            "min_slack": None if self.min_slack is None else str(self.min_slack),
            "margins": _margins_to_list(self.margins),
            "informational": _margins_to_list(self.informational),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> CertificateReport:
        """Creates an instance from the form returned by :py:meth:`to_dict`.

        Raises:
            ValueError: Missing or malformed fields.
        """
        try:
            first, last = map(int, data["m_range"])
            return cls(
                LemmaTag(data["lemma"]),
                (first, last),
                tuple(tuple(map(int, point)) for point in data["failures"]),
                _margins_from_list(data["margins"]),
                _margins_from_list(data["informational"]),
            )
        except (KeyError, TypeError) as e:
            raise arg_value_error_msg("Malformed certificate report", e) from None


# Functions ====================================================================


def check_binom_growth(m: int) -> Slack:
    """Checks ``C(m+1, t) > 3·C(m-1, t)`` with ``t = ⌊(m-1)/2⌋``.

    The inequality is claimed for ``m >= 16``; smaller *m* are evaluated all the
    same.
    """
    _check_m(m, 2)
    t = (m - 1) // 2
    slack = binomial(m + 1, t) - 3 * binomial(m - 1, t)
    return Slack(slack > 0, slack)


def check_gap_monotone(m: int) -> Slack:
    """Checks that :py:func:`gap_value` decreases strictly over
    ``k = 1..⌊(m-1)/2⌋``.

    Returns:
        The smallest decrease between consecutive ``k``; ``0`` if there is a
        single ``k``.
    """
    _check_m(m, 5)
    values = [gap_value(m, k) for k in range(1, (m - 1) // 2 + 1)]
    return _decrease(values)


def check_gap_positive(m: int, k: int) -> Slack:
    """Checks ``3^{m-1} - 2^k·C(m-1, k) - Σ_{j=0}^k 2^j·C(m, j) > 0``.

    Raises:
        ParameterRangeError: ``m < 5`` or *k* outside ``1..⌊(m-1)/2⌋``.
    """
    slack = gap_value(m, k)
    return Slack(slack > 0, slack)


def check_tail_dominance(m: int) -> Slack:
    """Checks :py:func:`tail_value` at ``k = ⌊(m-1)/2⌋`` is positive."""
    _check_m(m, 2)
    slack = tail_value(m, (m - 1) // 2)
    return Slack(slack > 0, slack)


def check_tail_monotone(m: int) -> Slack:
    """Checks that :py:func:`tail_value` decreases strictly over
    ``k = 0..⌊(m-1)/2⌋``.

    Returns:
        The smallest decrease between consecutive ``k``; ``0`` if there is a
        single ``k``.
    """
    _check_m(m, 2)
    return _decrease([tail_value(m, k) for k in range((m - 1) // 2 + 1)])


def distance_gain(m: int, k: int) -> int:
    """Returns ``d(C_ḡ) - d(C_g)`` for the same ``(m, k)``.

    Raises:
        ParameterRangeError: ``(m, k)`` is outside the theorem range.
    """
    check_theorem_range(m, k)
    return 3**m - 3 ** (m - 1) - 2**k * binomial(m - 1, k) - ball_size(m, k)


def gap_value(m: int, k: int) -> int:
    """Returns ``3^{m-1} - 2^k·C(m-1, k) - Σ_{j=0}^k 2^j·C(m, j)``.

    Raises:
        ParameterRangeError: ``m < 5`` or *k* outside ``1..⌊(m-1)/2⌋``.
    """
    if m < 5:
        raise ParameterRangeError(f"'m' out of range (got: {m}; must be >= 5)")
    if not 1 <= k <= (m - 1) // 2:
        raise ParameterRangeError(
            f"'k' out of range (got: {k}; must be in 1..{(m - 1) // 2})"
        )
    return 3 ** (m - 1) - 2**k * binomial(m - 1, k) - ball_size(m, k, start=0)


def sweep(
    m_max: int, tag: LemmaTag | str, jobs: int | None = None
) -> CertificateReport:
    """Checks an inequality at every point of its range up to *m_max*.

    Args:
        m_max: Largest ``m``, at most ``200``.
        tag: The inequality.
        jobs: Worker processes (see :py:func:`~ternary_codes.utils.parallel_map`).

    The ranges are ``m >= 16`` for :py:attr:`~LemmaTag.BINOM_GROWTH` (with
    ``5 <= m <= 15`` reported as informational), ``m >= 5`` and
    ``1 <= k <= ⌊(m-1)/2⌋`` for :py:attr:`~LemmaTag.GAP_POSITIVE`, ``m >= 2`` for
    :py:attr:`~LemmaTag.TAIL_DOMINANCE` and ``m >= 5`` for
    :py:attr:`~LemmaTag.MONOTONE`.
    """
    tag = LemmaTag(tag)
    if not 2 <= m_max <= _M_MAX:
        raise arg_value_error_range("m_max", m_max, f"must be in 2..{_M_MAX}")

    first = _FIRST_M[tag]
    margins: dict[Point, int] = {}
    informational: dict[Point, int] = {}
    for points in parallel_map(
        _sweep_m, [(tag, m) for m in range(first, m_max + 1)], jobs
    ):
        for point, slack, claimed in points:
            (margins if claimed else informational)[point] = slack

    report = CertificateReport(
        tag,
        (first, m_max),
        tuple(point for point, slack in margins.items() if slack <= 0),
        margins,
        informational,
    )
    logger.info(
        "Swept %s up to m = %d: %d failures", tag.value, m_max, len(report.failures)
    )

    return report


def tail_value(m: int, k: int) -> int:
    """Returns
    ``Σ_{j=k+1}^{m-1} 2^j·C(m-1, j) - Σ_{j=0}^{k-1} 2^{j+1}·C(m-1, j)``.

    This equals ``3^{m-1} - Σ_{j=0}^k 2^j·C(m, j)``, the amount by which the
    weight of ``(u != 0, v = 0)`` in ``C_ḡ`` exceeds that of ``(u = 0, v != 0)``.
    """
    _check_m(m, 2)
    if not 0 <= k <= m - 1:
        raise arg_value_error_range("k", k, f"must be in 0..{m - 1}")
    return sum(2**j * binomial(m - 1, j) for j in range(k + 1, m)) - sum(
        2 ** (j + 1) * binomial(m - 1, j) for j in range(k)
    )


def _check_m(m: int, least: int) -> None:
    if m < least:
        raise arg_value_error_range("m", m, f"must be >= {least}")


def _decrease(values: List[int]) -> Slack:
    steps = [a - b for a, b in zip(values, values[1:])]
    if not steps:
        return Slack(True, 0)
    smallest = min(steps)
    return Slack(smallest > 0, smallest)


def _margins_from_list(entries: List[Dict[str, Any]]) -> dict[Point, int]:
    margins: dict[Point, int] = {}
    for entry in entries:
        point: Point = (int(entry["m"]),)
        if entry.get("k") is not None:
            point += (int(entry["k"]),)
        margins[point] = int(entry["slack"])
    return margins


def _margins_to_list(margins: Mapping[Point, int]) -> list[dict[str, Any]]:
    return [
        {
            "m": str(point[0]),
            "k": str(point[1]) if len(point) > 1 else None,
            "slack": str(slack),
        }
        for point, slack in margins.items()
    ]


def _sweep_m(work: tuple[LemmaTag, int]) -> list[tuple[Point, int, bool]]:
    """Returns ``(point, slack, claimed)`` for every point with the given ``m``."""
    tag, m = work
    if tag is LemmaTag.BINOM_GROWTH:
        return [((m,), check_binom_growth(m).slack, m >= 16)]
    if tag is LemmaTag.GAP_POSITIVE:
        return [
            ((m, k), check_gap_positive(m, k).slack, True)
            for k in range(1, (m - 1) // 2 + 1)
        ]
    if tag is LemmaTag.TAIL_DOMINANCE:
        return [((m,), check_tail_dominance(m).slack, True)]

    slack = min(check_tail_monotone(m).slack, check_gap_monotone(m).slack)
    return [((m,), slack, True)]


# Variables ====================================================================

_FIRST_M = {
    LemmaTag.BINOM_GROWTH: 5,
    LemmaTag.GAP_POSITIVE: 5,
    LemmaTag.TAIL_DOMINANCE: 2,
    LemmaTag.MONOTONE: 5,
}

_M_MAX = 200
