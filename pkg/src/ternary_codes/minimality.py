"""
.. Minimality verdicts
"""

from __future__ import annotations

__all__ = (
    "AbReport",
    "MinimalityVerdict",
    "SpectralViolation",
    "ab_condition_closed",
    "ab_report",
    "covers",
    "is_minimal_brute",
    "is_minimal_spectral",
)

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np
from numpy.typing import NDArray
from typing_extensions import Any, NamedTuple, Union

from .code import CodeSpec, WeightDistribution
from .combinatorics import ball_size, binomial
from .exceptions import LinearFunctionError
from .functions import (
    Family,
    TernaryFunction,
    WeightClassFunction,
    check_theorem_range,
    table_dimension,
)
from .gf3 import F3Vector, index_array, vector_table
from .matrix import generator_matrix
from .utils import (
    arg_value_error,
    arg_value_error_msg,
    check_budget,
    chunk_ranges,
    parallel_map,
)
from .walsh import linear_coincidence, walsh_class, walsh_spectrum_brute

logger = logging.getLogger(__name__)

CodeLike = Union[TernaryFunction, CodeSpec, NDArray[np.integer]]
"""A function, the parameters of its code or any generator matrix"""

Witness = Tuple[Tuple[int, int], Tuple[int, int]]

# Enumerations =================================================================


class Method(str, Enum):
    """How a verdict was reached"""

    BRUTE = "brute"
    SPECTRAL = "spectral"


class Condition(str, Enum):
    """The two inequalities of the spectral criterion, on doubled real parts"""

    DIFFERENCE = "re2(w1) + re2(w2) - 2*re2(w3) != 2*3^m"
    SUM = "re2(w1) + re2(w2) + re2(w3) != 2*3^m"


# Classes ======================================================================


class AbReport(NamedTuple):
    """The extreme nonzero weights of a code and the Ashikhmin-Barg ratio test.

    Args:
        w_min: Smallest nonzero weight.
        w_max: Largest weight.
        violates_ab: ``3·w_min <= 2·w_max``, i.e. the sufficient condition
          ``w_min/w_max > 2/3`` for minimality fails.
    """

    w_min: int
    w_max: int
    violates_ab: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "w_min": str(self.w_min),
            "w_max": str(self.w_max),
            "violates_ab": self.violates_ab,
        }


class SpectralViolation(NamedTuple):
    """A triple ``w1 + w2 + w3 = 0`` at which a spectral condition fails.

    Args:
        w1: First vector.
        w2: Second vector.
        w3: ``-(w1 + w2)``.
        condition: The failing inequality.
    """

    w1: F3Vector
    w2: F3Vector
    w3: F3Vector
    condition: Condition

    @property
    def weights(self) -> tuple[int, int, int]:
        return (self.w1.weight, self.w2.weight, self.w3.weight)

    def to_dict(self) -> dict[str, Any]:
        return {
            "w1": str(self.w1),
            "w2": str(self.w2),
            "w3": str(self.w3),
            "condition": self.condition.value,
        }


@dataclass(frozen=True)
class MinimalityVerdict:
    """The outcome of a minimality check.

    Args:
        minimal: The verdict.
        method: How it was reached.
        witness: For a brute-force ``False`` verdict, the coefficient pairs
          ``((u, v_index), (u', v'_index))`` of a codeword and a codeword it covers
          that is not a multiple of it.
        violation: For a spectral ``False`` verdict, the failing triple.
        checked: Number of codeword pairs or vector triples examined.
        vacuous: ``True`` if there was nothing to check.
    """

    __slots__ = ("minimal", "method", "witness", "violation", "checked", "vacuous")

    minimal: bool
    method: Method
    witness: Witness | None
    violation: SpectralViolation | None
    checked: int
    vacuous: bool

    def __bool__(self) -> bool:
        return self.minimal

    def to_dict(self, ab: AbReport | None = None) -> dict[str, Any]:
        """Returns the JSON-ready form, merged with *ab* if given."""
        data: dict[str, Any] = {
            "minimal": self.minimal,
            "method": self.method.value,
            "witness": None if self.witness is None else [*map(list, self.witness)],
        }
        if self.violation is not None:
            data["violation"] = self.violation.to_dict()
        if self.vacuous:
            data["vacuous"] = True
        if ab is not None:
            data.update(ab.to_dict())
        return data


# Functions ====================================================================


def ab_condition_closed(family: Family | str, m: int, k: int) -> bool:
    """Evaluates a family's closed-form criterion for ``w_min/w_max <= 2/3``.

    For :py:attr:`~Family.G` and :py:attr:`~Family.F`:
    ``3Σ <= 2(3^m - 3^{m-1}) + 2^{k+1}·C(m-1, k) - 2``; for
    :py:attr:`~Family.GBAR`: ``2Σ <= 3·2^k·C(m-1, k)``; where
    ``Σ = Σ_{j=1}^k 2^j·C(m, j)``.

    Raises:
        ParameterRangeError: ``(m, k)`` is outside the theorem range.
    """
    family = Family(family)
    if family is Family.CUSTOM:
        raise arg_value_error("family", family, "no closed-form criterion")
    check_theorem_range(m, k)

    total = ball_size(m, k)
    if family is Family.GBAR:
        return 2 * total <= 3 * 2**k * binomial(m - 1, k)
    bound = 2 * (3**m - 3 ** (m - 1)) + 2 ** (k + 1) * binomial(m - 1, k) - 2
    return 3 * total <= bound


def ab_report(wd: WeightDistribution) -> AbReport:
    """Compares the extreme nonzero weights of a distribution.

    Raises:
        ValueError: The distribution has no nonzero weight.
    """
    weights = [w for w in wd if w]
    if not weights:
        raise arg_value_error_msg("No nonzero weight in distribution", dict(wd))

    w_min, w_max = min(weights), max(weights)
    return AbReport(w_min, w_max, 3 * w_min <= 2 * w_max)


def covers(a: Sequence[int], b: Sequence[int]) -> bool:
    """Returns ``True`` if ``Supp(b) ⊆ Supp(a)``.

    Raises:
        ValueError: Length mismatch.
    """
    if len(a) != len(b):
        raise arg_value_error_msg("Length mismatch", (len(a), len(b)))
    return all(x or not y for x, y in zip(a, b))


def is_minimal_brute(code: CodeLike, jobs: int | None = None) -> MinimalityVerdict:
    """Decides minimality by testing every ordered pair of nonzero codewords.

    Args:
        code: A function (its code ``C_f``), its :py:class:`CodeSpec` or any
          generator matrix.
        jobs: Worker processes (see :py:func:`~ternary_codes.utils.parallel_map`).

    Raises:
        BudgetExceededError: The number of rows less one exceeds the
          ``minimality_max_m`` cap.

    Pairs ``(a, b)`` with ``b`` in ``{0, a, 2a}`` are skipped. The witness is the
    first covering pair in the order of the coefficient indices, whatever the
    number of workers.
    """
    if isinstance(code, CodeSpec):
        code = code.fn
    G = generator_matrix(code) if isinstance(code, TernaryFunction) else code
    G = np.asarray(G, dtype=np.int64) % 3
    dim = G.shape[0]
    check_budget("minimality_max_m", dim - 1)
    logger.info(
        "Checking minimality of a [%d, %d] code by brute force", G.shape[1], dim
    )

    # One coefficient vector per projective point: the first nonzero entry is 1
    coefficients = vector_table(dim)
    leading = np.take_along_axis(
        coefficients, np.argmax(coefficients != 0, axis=1)[:, None], axis=1
    )[:, 0]
    (labels,) = np.nonzero(leading == 1)
    words = coefficients[labels].astype(np.int64) @ G % 3
    nonzero = words.any(axis=1)
    labels, words = labels[nonzero], words[nonzero]

    count = len(words)
    chunks = chunk_ranges(count, max(jobs or 1, count * count // _CHUNK_ELEMENTS))
    hits = parallel_map(_covering_chunk, [(words, chunk) for chunk in chunks], jobs)
    first = next((hit for hit in hits if hit is not None), None)
    checked = count * (count - 1)

    if first is None:
        return MinimalityVerdict(True, Method.BRUTE, None, None, checked, not checked)

    size = 3 ** (dim - 1)
    a, b = (divmod(int(labels[index]), size) for index in first)
    logger.debug("Codeword %s covers codeword %s", a, b)
    return MinimalityVerdict(False, Method.BRUTE, (a, b), None, checked, False)


def is_minimal_spectral(
    fn: TernaryFunction, jobs: int | None = None
) -> MinimalityVerdict:
    """Decides minimality of ``C_f`` from the real parts of the Walsh transform.

    ``C_f`` is minimal iff, for all pairwise distinct ``w1, w2, w3`` with
    ``w1 + w2 + w3 = 0``::

        re2(w1) + re2(w2) - 2·re2(w3) != 2·3^m
        re2(w1) + re2(w2) + re2(w3) != 2·3^m

    where ``re2(w) = 2·Re(f̂(w))``.

    For weight-class functions only the ``m + 1`` class values are computed and
    every realizable triple of weights is checked. Other functions need the full
    spectrum and every pair ``(w1, w2)``.

    Raises:
        LinearFunctionError: *fn* coincides with a linear form.
        BudgetExceededError: A non-class function and ``m`` exceeds the
          ``spectrum_max_m`` cap.
    """
    if (w := linear_coincidence(fn)) is not None:
        raise LinearFunctionError(w)

    if isinstance(fn, WeightClassFunction):
        return _spectral_by_class(fn)
    return _spectral_by_vector(fn, jobs)


def _covering_chunk(
    work: tuple[NDArray[np.int64], range]
) -> tuple[int, int] | None:
    """Returns the first ``(a, b)`` in the chunk of rows *a* such that ``a`` covers
    ``b`` and ``b`` is not a multiple of ``a``.
    """
    words, chunk = work
    support = (words != 0).astype(np.float32)
    rows = words[chunk.start : chunk.stop]
    # Zero exactly where Supp(b) ⊆ Supp(a); float32 sums are exact below 2^24
    outside = (1 - support[chunk.start : chunk.stop]) @ support.T
    candidates = np.argwhere(outside == 0)
    for a, b in candidates.tolist():
        word_a, word_b = rows[a], words[b]
        if np.array_equal(word_a, word_b) or np.array_equal(word_a * 2 % 3, word_b):
            continue
        return chunk.start + a, b
    return None


def _realizable_triples(m: int) -> Iterator[tuple[int, int, int, tuple[int, ...]]]:
    """Yields ``(i1, i2, i3, pattern)`` for every coordinate pattern of pairwise
    distinct ``w1 + w2 + w3 = 0``.

    A coordinate is either zero in all three vectors, zero in exactly one of them
    (``p1``, ``p2``, ``p3``) or equal and nonzero in all three (``q``).
    """
    for p1 in range(m + 1):
        for p2 in range(m + 1 - p1):
            for p3 in range(m + 1 - p1 - p2):
                if not p1 + p2 + p3:
                    continue
                for q in range(m + 1 - p1 - p2 - p3):
                    yield (
                        p2 + p3 + q,
                        p1 + p3 + q,
                        p1 + p2 + q,
                        (p1, p2, p3, q),
                    )


def _spectral_by_class(fn: WeightClassFunction) -> MinimalityVerdict:
    m = fn.m
    target = 2 * 3**m
    re2 = [walsh_class(fn, i).re2 for i in range(m + 1)]

    checked = 0
    for i1, i2, i3, pattern in _realizable_triples(m):
        checked += 1
        for condition, value in (
            (Condition.DIFFERENCE, re2[i1] + re2[i2] - 2 * re2[i3]),
            (Condition.SUM, re2[i1] + re2[i2] + re2[i3]),
        ):
            if value == target:
                violation = SpectralViolation(
                    *_triple_from_pattern(m, pattern), condition
                )
                logger.debug("Spectral condition fails at %s", violation)
                return MinimalityVerdict(
                    False, Method.SPECTRAL, None, violation, checked, False
                )

    return MinimalityVerdict(True, Method.SPECTRAL, None, None, checked, not checked)


def _spectral_by_vector(fn: TernaryFunction, jobs: int | None) -> MinimalityVerdict:
    m = fn.m
    re2 = walsh_spectrum_brute(fn, jobs).re2
    size = 3**m
    chunks = chunk_ranges(size, max(jobs or 1, size * size * m // _CHUNK_ELEMENTS))
    hits = parallel_map(_spectral_chunk, [(re2, chunk) for chunk in chunks], jobs)
    checked = size * (size - 1)

    for hit in hits:
        if hit is not None:
            (a, b, c), condition = hit
            vectors = vector_table(m)
            violation = SpectralViolation(
                *(F3Vector._new(vectors[index].tolist()) for index in (a, b, c)),
                condition,
            )
            return MinimalityVerdict(
                False, Method.SPECTRAL, None, violation, checked, False
            )

    return MinimalityVerdict(True, Method.SPECTRAL, None, None, checked, not checked)


def _spectral_chunk(
    work: tuple[NDArray[np.int64], range]
) -> tuple[tuple[int, int, int], Condition] | None:
    re2, chunk = work
    size = re2.shape[0]
    m = table_dimension(re2)
    target = 2 * size
    vectors = vector_table(m).astype(np.int64)

    first = vectors[chunk.start : chunk.stop]
    third = index_array(-(first[:, None, :] + vectors[None, :, :]) % 3)
    r1 = re2[chunk.start : chunk.stop, None]
    r3 = re2[third]
    # w1 != w2 makes the triple pairwise distinct
    distinct = np.arange(chunk.start, chunk.stop)[:, None] != np.arange(size)[None, :]

    for condition, values in (
        (Condition.DIFFERENCE, r1 + re2[None, :] - 2 * r3),
        (Condition.SUM, r1 + re2[None, :] + r3),
    ):
        hits = np.argwhere((values == target) & distinct)
        if hits.size:
            a, b = hits[0].tolist()
            return (chunk.start + a, b, int(third[a, b])), condition

    return None


def _triple_from_pattern(
    m: int, pattern: tuple[int, ...]
) -> tuple[F3Vector, F3Vector, F3Vector]:
    p1, p2, p3, q = pattern
    columns = (
        [(0, 1, 2)] * p1 + [(1, 0, 2)] * p2 + [(1, 2, 0)] * p3 + [(1, 1, 1)] * q
    )
    columns += [(0, 0, 0)] * (m - len(columns))
    w1, w2, w3 = zip(*columns)

    return F3Vector._new(w1), F3Vector._new(w2), F3Vector._new(w3)


# Variables ====================================================================

_CHUNK_ELEMENTS = 1 << 22
"""Upper bound on the size of intermediate pair arrays"""
