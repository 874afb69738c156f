"""
.. Walsh transforms of ternary functions
"""

from __future__ import annotations

__all__ = (
    "WalshSpectrum",
    "character_sum",
    "linear_coincidence",
    "mesnager_check",
    "walsh_brute",
    "walsh_class",
    "walsh_re2_closed",
    "walsh_spectrum_brute",
    "weight_from_re2",
)

import logging
from collections.abc import Collection, Iterable, Iterator
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .combinatorics import ball_size, krawtchouk, lloyd
from .eisenstein import EisensteinInt, zeta_pow
from .exceptions import InconsistencyError, ParameterRangeError
from .functions import (
    Family,
    FunctionLike,
    WeightClassFunction,
    as_table,
    characteristic,
    check_theorem_range,
    check_weight_classes,
    table_dimension,
)
from .gf3 import F3Vector, enumerate_by_weight, vector_table, weight_table
from .utils import (
    arg_value_error_msg,
    arg_value_error_range,
    check_budget,
    chunk_ranges,
    parallel_map,
)

logger = logging.getLogger(__name__)

# Classes ======================================================================


@dataclass(frozen=True)
class WalshSpectrum:
    """The Walsh transform of a function at every ``w`` of 𝔽₃^m.

    Args:
        m: Dimension.
        values: ``f̂(w)`` for every ``w``, in canonical order.

    TIP:
        Instances are immutable and hashable.
    """

    __slots__ = ("m", "values")

    m: int
    """The dimension"""

    values: tuple[EisensteinInt, ...]
    """``f̂(w)``, indexed by the canonical index of ``w``"""

    def __getitem__(self, w: F3Vector) -> EisensteinInt:
        return self.values[w.index]

    def __iter__(self) -> Iterator[EisensteinInt]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def re2(self) -> NDArray[np.int64]:
        """``2·Re(f̂(w))`` for every ``w``, in canonical order"""
        return np.fromiter((value.re2 for value in self.values), np.int64, len(self))

    def re2_by_weight(self) -> dict[int, int]:
        """Returns ``2·Re(f̂(w))`` keyed by ``wt(w)``.

        Raises:
            InconsistencyError: The real part is not constant on some weight class.
        """
        by_weight: dict[int, int] = {}
        for value, i in zip(self.values, weight_table(self.m).tolist()):
            if by_weight.setdefault(i, value.re2) != value.re2:
                raise InconsistencyError(
                    f"Walsh spectrum is not constant on weight class {i}"
                )
        return by_weight

    def is_weight_class_invariant(self) -> bool:
        """Returns ``True`` if ``f̂(w)`` depends on ``w`` only through ``wt(w)``."""
        first: dict[int, EisensteinInt] = {}
        return all(
            first.setdefault(i, value) == value
            for value, i in zip(self.values, weight_table(self.m).tolist())
        )


# Functions ====================================================================


def character_sum(u: F3Vector, t: int) -> EisensteinInt:
    """Computes ``Σ_{v : wt(v) = t} ζ₃^{u·v}`` by brute force.

    The sum equals the Krawtchouk value ``K_t(wt(u), m)`` for ``h = 3``.

    Raises:
        ValueError: *t* is out of range.
    """
    m = len(u)
    if not 0 <= t <= m:
        raise arg_value_error_range("t", t, f"must be in 0..{m}")

    vectors = vector_table(m)[weight_table(m) == t].astype(np.int64)
    exponents = vectors @ np.asarray(u, dtype=np.int64) % 3
    c0, c1, c2 = np.bincount(exponents, minlength=3).tolist()

    return EisensteinInt.from_counts(c0, c1, c2)


def linear_coincidence(fn: FunctionLike) -> F3Vector | None:
    """Finds the linear form a function coincides with, if any.

    Args:
        fn: A function with ``f(0) = 0``.

    Returns:
        The unique ``w`` with ``f(x) = w·x`` for all ``x``, or ``None``.

    For weight-class functions the coincidence is detected by
    ``Re(f̂(w)) = 3^m`` on the closed-form spectrum. A table is compared with the
    only linear form that can match it, the one agreeing at the unit vectors.
    """
    if isinstance(fn, WeightClassFunction):
        m = fn.m
        for i in range(m + 1):
            if walsh_class(fn, i).re2 == 2 * 3**m:
                w = next(enumerate_by_weight(m, i))
                if np.array_equal(fn.table(), _linear_table(w)):
                    return w
        return None

    table = as_table(fn)
    m = table_dimension(table)
    # A linear form is determined by its values at the unit vectors
    w = F3Vector._new([int(table[3 ** (m - 1 - j)]) for j in range(m)])
    if np.array_equal(table, _linear_table(w)):
        return w
    return None


def mesnager_check(D: Collection[F3Vector], m: int) -> bool:
    """Checks the complementary-set identity for the Walsh transforms of
    characteristic functions.

    Args:
        D: A set of nonzero vectors of 𝔽₃^m.
        m: Dimension.

    Returns:
        ``True`` iff for every ``w``, ``f̂_D(w) + f̂_D̄(w)`` equals
        ``(q-1)ζ₃ + q + 1`` when ``w = 0`` and ``1 - ζ₃`` otherwise, where
        ``q = 3^m`` and ``D̄`` is the complement of *D* in 𝔽₃^m∖{0}. Both
        transforms are computed by brute force.
    """
    check_budget("spectrum_max_m", m)
    q = 3**m
    D = set(D)
    complement = (
        x for x in map(F3Vector._new, vector_table(m)[1:].tolist()) if x not in D
    )
    spectrum = walsh_spectrum_brute(characteristic(D, m)).values
    co_spectrum = walsh_spectrum_brute(characteristic(complement, m)).values

    at_zero = EisensteinInt(q + 1, q - 1)
    elsewhere = EisensteinInt(1, -1)
    return all(
        a + b == (elsewhere if index else at_zero)
        for index, (a, b) in enumerate(zip(spectrum, co_spectrum))
    )


def walsh_brute(fn: FunctionLike, w: F3Vector) -> EisensteinInt:
    """Computes ``f̂(w) = Σ_x ζ₃^{f(x) - w·x}`` by summing over all of 𝔽₃^m.

    Args:
        fn: A function or its table of values.
        w: The transform variable.

    Raises:
        ValueError: Dimension mismatch.
    """
    table = as_table(fn)
    m = table_dimension(table)
    if len(w) != m:
        raise arg_value_error_msg("Dimension mismatch", (len(w), m))

    vectors = vector_table(m).astype(np.int64)
    exponents = (table - vectors @ np.asarray(w, dtype=np.int64)) % 3
    c0, c1, c2 = np.bincount(exponents, minlength=3).tolist()

    return EisensteinInt.from_counts(c0, c1, c2)


def walsh_class(fn: WeightClassFunction, i: int) -> EisensteinInt:
    """Computes ``f̂(w)`` for any ``w`` of weight *i* in closed form.

    Returns:
        ``Σ_{j=0}^m K_j(i, m)·ζ₃^{c_j}``.

    Raises:
        ValueError: *i* is out of range.

    The Krawtchouk values are real, so the value is the same for ``w`` and ``-w``
    and, indeed, for every ``w`` of weight *i*.
    """
    m = fn.m
    if not 0 <= i <= m:
        raise arg_value_error_range("i", i, f"must be in 0..{m}")

    total = EisensteinInt(0, 0)
    for j, c in enumerate(fn.class_values):
        total += krawtchouk(j, i, m) * zeta_pow(c)

    return total


def walsh_re2_closed(
    family: Family | str, m: int, k: int, S: Iterable[int] = (), i: int = 0
) -> int:
    """Returns ``2·Re(f̂(w))`` for ``wt(w) = i`` from the family formulas.

    Args:
        family: :py:attr:`~Family.G`, :py:attr:`~Family.GBAR` or
          :py:attr:`~Family.F`.
        m: Dimension.
        k: Family parameter.
        S: For :py:attr:`Family.F`, a nonempty subset of ``1..k``. The real part
          does not depend on it.
        i: Weight class of ``w``.

    Raises:
        ParameterRangeError: Parameters outside the theorem range, or *S* is not a
          nonempty subset of ``1..k`` for :py:attr:`Family.F` (empty otherwise).
        ValueError: *i* is out of range.
    """
    family = Family(family)
    if family is Family.CUSTOM:
        raise ParameterRangeError("No closed form for custom class tables")
    check_theorem_range(m, k)
    check_weight_classes(family, k, S)
    if not 0 <= i <= m:
        raise arg_value_error_range("i", i, f"must be in 0..{m}")

    if family is Family.GBAR:
        if i == 0:
            return -(3**m) + 3 * ball_size(m, k, start=0)
        return 3 * lloyd(k, i, m)

    if i == 0:
        return 2 * 3**m - 3 * ball_size(m, k)
    return -3 * (lloyd(k, i, m) - 1)


def walsh_spectrum_brute(fn: FunctionLike, jobs: int | None = None) -> WalshSpectrum:
    """Computes ``f̂(w)`` for every ``w``, by brute force.

    Args:
        fn: A function or its table of values.
        jobs: Worker processes (see :py:func:`~ternary_codes.utils.parallel_map`).

    Raises:
        BudgetExceededError: ``m`` exceeds the ``spectrum_max_m`` cap.

    The work is ``Θ(9^m)``; ``w`` is processed in chunks to bound memory.
    """
    table = as_table(fn)
    m = table_dimension(table)
    check_budget("spectrum_max_m", m)

    size = 3**m
    chunks = chunk_ranges(size, max(jobs or 1, size * size // _CHUNK_ELEMENTS))
    parts = parallel_map(_spectrum_chunk, [(table, chunk) for chunk in chunks], jobs)
    a = np.concatenate([part[0] for part in parts])
    b = np.concatenate([part[1] for part in parts])
    logger.debug("Computed the full Walsh spectrum over F_3^%d", m)

    return WalshSpectrum(m, tuple(map(EisensteinInt, a.tolist(), b.tolist())))


def weight_from_re2(re2: int, m: int) -> int:
    """Returns the weight ``2·3^{m-1} - Re(f̂(v))·2/3`` of the codeword
    ``(u f(x) + v·x)`` for ``u != 0``, given ``re2 = 2·Re(f̂(-u⁻¹v))``.

    Raises:
        InconsistencyError: *re2* is not divisible by 3, which no Walsh value of a
          function vanishing at zero can produce.
    """
    quotient, remainder = divmod(re2, 3)
    if remainder:
        raise InconsistencyError(f"2·Re = {re2} is not divisible by 3")
    return 2 * 3 ** (m - 1) - quotient


def _linear_table(w: F3Vector) -> NDArray[np.int64]:
    vectors = vector_table(len(w)).astype(np.int64)
    return vectors @ np.asarray(w, dtype=np.int64) % 3


def _spectrum_chunk(
    work: tuple[NDArray[np.int64], range]
) -> tuple[NDArray[np.int64], NDArray[np.int64]]:
    table, chunk = work
    size = table.shape[0]
    vectors = vector_table(table_dimension(table)).astype(np.int64)
    exponents = (table[None, :] - vectors[chunk.start : chunk.stop] @ vectors.T) % 3
    c1 = np.count_nonzero(exponents == 1, axis=1)
    c2 = np.count_nonzero(exponents == 2, axis=1)

    return size - c1 - 2 * c2, c1 - c2


# Variables ====================================================================

_CHUNK_ELEMENTS = 1 << 22
"""Upper bound on the size of intermediate ``(chunk, 3^m)`` arrays"""
