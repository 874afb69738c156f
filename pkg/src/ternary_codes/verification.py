"""
.. The acceptance battery
"""

from __future__ import annotations

__all__ = ("CheckResult", "Ledger", "VerificationItem", "ITEMS", "run_battery")

import logging
import time
from collections.abc import Callable, Iterable, Iterator
from itertools import combinations
from typing import List, Tuple

import numpy as np
from typing_extensions import Any, NamedTuple

from . import code, utils
from .certificates import LemmaTag, distance_gain, sweep
from .combinatorics import ball_size, binomial, krawtchouk, lloyd
from .eisenstein import EisensteinInt
from .exceptions import InconsistencyError
from .functions import Family, WeightClassFunction, make, set_a_size
from .gf3 import enumerate_vectors, weight_table
from .minimality import (
    ab_condition_closed,
    ab_report,
    is_minimal_brute,
    is_minimal_spectral,
)
from .utils import arg_value_error
from .walsh import (
    character_sum,
    mesnager_check,
    walsh_class,
    walsh_re2_closed,
    walsh_spectrum_brute,
)

logger = logging.getLogger(__name__)

# Classes ======================================================================


class VerificationItem(NamedTuple):
    """A named check of the battery.

    Args:
        name: Identifier used on the command line and in the ledger.
        description: One-line summary.
        run: Performs the check and returns a short detail line.

    *run* signals failure by raising; any exception counts.
    """

    name: str
    description: str
    run: Callable[[], str]


class CheckResult(NamedTuple):
    """The outcome of one item."""

    name: str
    passed: bool
    detail: str
    seconds: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


class Ledger(Tuple[CheckResult, ...]):
    """The per-item outcomes of a run, in battery order."""

    __slots__ = ()

    @property
    def passed(self) -> bool:
        """``True`` iff every item passed"""
        return all(result.passed for result in self)

    @property
    def failures(self) -> tuple[str, ...]:
        return tuple(result.name for result in self if not result.passed)

    def format_table(self) -> str:
        """Returns one ``PASS``/``FAIL`` line per item and a summary line."""
        width = max((len(result.name) for result in self), default=0)
        lines = [
            f"{'PASS' if result.passed else 'FAIL'}  {result.name:<{width}}  "
            f"{result.detail} ({result.seconds:.2f}s)"
            for result in self
        ]
        lines.append(f"{len(self) - len(self.failures)}/{len(self)} passed")
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "items": [result.to_dict() for result in self],
        }


# Functions ====================================================================


def run_battery(names: Iterable[str] | None = None) -> Ledger:
    """Runs the named items (all of them by default) and collects their outcomes.

    Raises:
        ValueError: An unknown item name.

    Ranges of exhaustive items are limited by the current budget caps, so a
    lowered cap shrinks them instead of failing.
    """
    items = {item.name: item for item in ITEMS}
    if names is None:
        selected = list(ITEMS)
    else:
        selected = []
        for name in names:
            if name not in items:
                raise arg_value_error(
                    "item", name, f"expected one of {', '.join(items)}"
                )
            selected.append(items[name])

    results: List[CheckResult] = []
    for item in selected:
        logger.info("Running %s: %s", item.name, item.description)
        start = time.perf_counter()
        try:
            detail = item.run()
        except Exception as e:
            logger.debug("%s failed", item.name, exc_info=True)
            passed, detail = False, f"{type(e).__name__}: {e}"
        else:
            passed = True
        results.append(
            CheckResult(item.name, passed, detail, time.perf_counter() - start)
        )
        logger.info("%s %s", item.name, "passed" if passed else "failed")

    return Ledger(results)


def _expect(condition: Any, message: str) -> None:
    if not condition:
        raise InconsistencyError(message)


def _instances(m: int, k_max: int | None = None) -> Iterator[WeightClassFunction]:
    """Yields every family member with dimension *m*: ``g`` and ``ḡ`` for each *k*
    and ``f`` for each nonempty *S*.
    """
    top = (m - 1) // 2 if k_max is None else min(k_max, (m - 1) // 2)
    for k in range(2, top + 1):
        yield make(Family.G, m, k)
        yield make(Family.GBAR, m, k)
        for S in _subsets(k):
            yield make(Family.F, m, k, S)


def _subsets(k: int) -> Iterator[tuple[int, ...]]:
    for size in range(1, k + 1):
        yield from combinations(range(1, k + 1), size)


def _theorem_range(m_first: int, m_last: int) -> Iterator[tuple[int, int]]:
    for m in range(m_first, m_last + 1):
        for k in range(2, (m - 1) // 2 + 1):
            yield m, k


# Items ========================================================================


def _golden_example() -> str:
    fn = make(Family.GBAR, 9, 2)
    spec = code.parameters(fn)
    _expect(str(spec) == "[19682, 10, 13010]", f"parameters are {spec}")

    dist = code.weight_distribution_closed(fn)
    _expect(dict(dist) == _GOLDEN_DISTRIBUTION, f"distribution {dist.to_polynomial()}")

    ab = ab_report(dist)
    _expect(
        (ab.w_min, ab.w_max, ab.violates_ab) == (13010, 19520, True),
        f"AB report is {ab}",
    )

    counts = code.codeword_counts_closed(fn, 1, 1)
    _expect(
        (counts.t0, counts.weight) == (6672, 13010), f"counts at wt(v) = 1: {counts}"
    )
    counts = code.codeword_counts_closed(fn, 1, 0)
    _expect(counts == (162, 19520, 0), f"counts at v = 0: {counts}")

    return f"{spec}, {len(dist)} weights, w_min/w_max = 13010/19520 violates AB"


def _oracle_equivalence() -> str:
    m_last = min(7, utils._budget["brute_force_max_m"])
    count = 0
    for m in range(5, m_last + 1):
        for fn in _instances(m):
            brute = code.cwe_brute(fn)
            _expect(code.cwe_closed(fn) == brute, f"{fn.label}: enumerators differ")
            _expect(
                code.weight_distribution_closed(fn) == brute.weight_distribution(),
                f"{fn.label}: distributions differ",
            )
            count += 1

    return f"{count} instances, m = 5..{m_last}"


def _walsh_closed_form() -> str:
    m_last = min(7, utils._budget["spectrum_max_m"])
    count = 0
    for m in range(5, m_last + 1):
        weights = weight_table(m)
        for fn in _instances(m):
            k = fn.k or 0
            closed = np.array(
                [walsh_re2_closed(fn.family, m, k, fn.S, i) for i in range(m + 1)],
                dtype=np.int64,
            )
            _expect(
                np.array_equal(walsh_spectrum_brute(fn).re2, closed[weights]),
                f"{fn.label}: spectrum differs from the closed form",
            )
            _expect(
                [walsh_class(fn, i).re2 for i in range(m + 1)] == closed.tolist(),
                f"{fn.label}: class values differ from the closed form",
            )
            count += 1

    return f"{count} instances, m = 5..{m_last}"


def _minimality_cross_method() -> str:
    m_last = min(6, utils._budget["minimality_max_m"])
    both = 0
    for m in range(5, m_last + 1):
        for fn in _instances(m, k_max=2):
            brute, spectral = is_minimal_brute(fn), is_minimal_spectral(fn)
            _expect(
                brute.minimal and spectral.minimal,
                f"{fn.label}: brute {brute.minimal}, spectral {spectral.minimal}",
            )
            both += 1

    spectral_only = 0
    for m in range(7, 10):
        for fn in _instances(m):
            _expect(is_minimal_spectral(fn).minimal, f"{fn.label}: not minimal")
            spectral_only += 1

    return f"{both} by both methods, {spectral_only} spectral only"


def _krawtchouk_identities() -> str:
    count = 0
    for h in (2, 3, 4):
        for m in range(1, 13):
            for t in range(m + 1):
                _expect(
                    krawtchouk(t, 0, m, h) == (h - 1) ** t * binomial(m, t),
                    f"K_{t}(0, {m}) with h = {h}",
                )
            for k in range(1, m):
                bound = (h - 1) ** k * binomial(m - 1, k)
                for x in range(1, m + 1):
                    value = lloyd(k, x, m, h)
                    _expect(
                        value == krawtchouk(k, x - 1, m - 1, h),
                        f"Ψ_{k}({x}, {m}) with h = {h} is not K_{k}({x - 1}, {m - 1})",
                    )
                    _expect(abs(value) <= bound, f"|Ψ_{k}({x}, {m})| > {bound}")
                    count += 1
                _expect(lloyd(k, 1, m, h) == bound, f"Ψ_{k}(1, {m}) != {bound}")

    for m in range(1, 13):
        for i in range(m + 1):
            total = sum(krawtchouk(t, i, m) for t in range(m + 1))
            _expect(total == (3**m if i == 0 else 0), f"Σ_t K_t({i}, {m}) = {total}")

    m_last = min(6, utils._budget["spectrum_max_m"])
    sums = 0
    for m in range(1, m_last + 1):
        for u in enumerate_vectors(m):
            for t in range(m + 1):
                expected = EisensteinInt(krawtchouk(t, u.weight, m), 0)
                _expect(character_sum(u, t) == expected, f"character sum at {u}, {t}")
                sums += 1

    return f"{count} polynomial points, {sums} character sums (m <= {m_last})"


def _spectral_equality() -> str:
    count = 0
    for m, k in _theorem_range(5, 7):
        g = make(Family.G, m, k)
        g_values = [walsh_class(g, i).re2 for i in range(m + 1)]
        g_dist, g_cwe = code.weight_distribution_closed(g), code.cwe_closed(g)
        differs = False
        for S in _subsets(k):
            f = make(Family.F, m, k, S)
            _expect(
                [walsh_class(f, i).re2 for i in range(m + 1)] == g_values,
                f"{f.label}: real parts differ from {g.label}",
            )
            _expect(
                code.weight_distribution_closed(f) == g_dist,
                f"{f.label}: distribution differs from {g.label}",
            )
            if set_a_size(m, S) != ball_size(m, k):
                differs |= code.cwe_closed(f) != g_cwe
            count += 1
        _expect(differs, f"every f_({m},{k},S) has the enumerator of {g.label}")

    return f"{count} instances, m = 5..7"


def _inequality_certificates() -> str:
    slacks = []
    for tag in LemmaTag:
        report = sweep(50, tag)
        _expect(report.holds, f"{tag.value} fails at {report.failures}")
        slacks.append(f"{tag.value} >= {report.min_slack}")

    binom = sweep(16, LemmaTag.BINOM_GROWTH).margins[(16,)]
    _expect(binom == 143, f"binom_growth slack at m = 16 is {binom}")
    tail = sweep(5, LemmaTag.TAIL_DOMINANCE).margins[(5,)]
    _expect(tail == 30, f"tail_dominance slack at m = 5 is {tail}")

    return f"m <= 50: {', '.join(slacks)}"


def _distance_improvement() -> str:
    smallest = None
    for m, k in _theorem_range(5, 12):
        gain = distance_gain(m, k)
        d_g = code.parameters(make(Family.G, m, k)).d
        d_gbar = code.parameters(make(Family.GBAR, m, k)).d
        _expect(gain == d_gbar - d_g, f"({m}, {k}): gain {gain} != {d_gbar} - {d_g}")
        _expect(gain > 0, f"({m}, {k}): gain {gain}")
        smallest = gain if smallest is None else min(smallest, gain)

    return f"smallest gain {smallest}, m <= 12"


def _mesnager_identity() -> str:
    rng = np.random.default_rng(_SEED)
    count = 0
    for m in range(3, min(5, utils._budget["spectrum_max_m"]) + 1):
        vectors = list(enumerate_vectors(m))[1:]
        subsets = [[v for v in vectors if v.weight <= k] for k in range(m + 1)]
        subsets.extend(
            [v for v, keep in zip(vectors, rng.integers(0, 2, len(vectors))) if keep]
            for _ in range(50)
        )
        for D in subsets:
            _expect(mesnager_check(D, m), f"m = {m}, |D| = {len(D)}")
            count += 1

    return f"{count} subsets"


def _ab_conditions() -> str:
    count = 0
    for m, k in _theorem_range(5, 12):
        functions = [make(Family.G, m, k), make(Family.GBAR, m, k)]
        functions.extend(make(Family.F, m, k, S) for S in _subsets(k))
        for fn in functions:
            closed = ab_condition_closed(fn.family, m, k)
            verdict = ab_report(code.weight_distribution_closed(fn)).violates_ab
            _expect(
                closed == verdict, f"{fn.label}: closed {closed}, verdict {verdict}"
            )
            count += 1

    return f"{count} instances, m <= 12"


# Variables ====================================================================

ITEMS: Tuple[VerificationItem, ...] = (
    VerificationItem(
        "golden-example",
        "parameters and distribution of gbar_(9,2)",
        _golden_example,
    ),
    VerificationItem(
        "oracle-equivalence",
        "closed-form distributions and enumerators against enumeration",
        _oracle_equivalence,
    ),
    VerificationItem(
        "walsh-closed-form",
        "closed-form Walsh values against full spectra",
        _walsh_closed_form,
    ),
    VerificationItem(
        "minimality-cross-method",
        "covering search against the spectral criterion",
        _minimality_cross_method,
    ),
    VerificationItem(
        "krawtchouk-identities",
        "Krawtchouk and Lloyd identities and character sums",
        _krawtchouk_identities,
    ),
    VerificationItem(
        "spectral-equality",
        "f and g share real parts but not enumerators",
        _spectral_equality,
    ),
    VerificationItem(
        "inequality-certificates",
        "binomial inequality sweeps up to m = 50",
        _inequality_certificates,
    ),
    VerificationItem(
        "distance-improvement",
        "d of gbar exceeds d of g",
        _distance_improvement,
    ),
    VerificationItem(
        "mesnager-identity",
        "complementary-set identity for characteristic functions",
        _mesnager_identity,
    ),
    VerificationItem(
        "ab-conditions",
        "closed-form AB criteria against distributions",
        _ab_conditions,
    ),
)
"""The battery, in running order"""

_GOLDEN_DISTRIBUTION = {
    0: 1,
    13010: 36,
    13052: 288,
    13085: 1344,
    13094: 1024,
    13109: 4032,
    13115: 4608,
    13122: 19682,
    13124: 8064,
    13127: 9216,
    13130: 10752,
    19520: 2,
}

_SEED = 20240229
