"""
.. Generator matrices
"""

from __future__ import annotations

__all__ = (
    "MatrixHeader",
    "format_generator_matrix",
    "generator_matrix",
    "rank_f3",
    "read_generator_matrix",
    "span_weight_distribution",
    "write_generator_matrix",
)

import logging
import os
from collections import Counter

import numpy as np
from numpy.typing import NDArray
from typing_extensions import NamedTuple, Union

from .code import WeightDistribution
from .exceptions import LinearFunctionError, MatrixFormatError
from .functions import TernaryFunction, WeightClassFunction, as_table
from .gf3 import vector_table
from .utils import arg_value_error_msg, check_budget, chunk_ranges
from .walsh import linear_coincidence

logger = logging.getLogger(__name__)

PathLike = Union[str, "os.PathLike[str]"]

# Classes ======================================================================


class MatrixHeader(NamedTuple):
    """The first line of an exported generator matrix.

    Args:
        m: Dimension of the underlying space.
        k: Family parameter, ``None`` if not applicable.
        family: Family tag, or ``table`` for arbitrary functions.
        n: Number of columns, ``3^m - 1``.
        dim: Number of rows, ``m + 1``.
    """

    m: int
    k: int | None
    family: str
    n: int
    dim: int

    def __str__(self) -> str:
        return " ".join(
            map(str, (self.m, "-" if self.k is None else self.k, *self[2:]))
        )

    @classmethod
    def of(cls, fn: TernaryFunction) -> MatrixHeader:
        """Returns the header of the generator matrix of ``C_fn``."""
        if isinstance(fn, WeightClassFunction):
            k, family = fn.k, fn.family.value
        else:
            k, family = None, "table"
        return cls(fn.m, k, family, 3**fn.m - 1, fn.m + 1)


# Functions ====================================================================


def format_generator_matrix(fn: TernaryFunction) -> str:
    """Returns the plain-text export of the generator matrix of ``C_fn``.

    The first line is ``m k family n dim`` (``-`` for a missing *k*), followed by
    one line of space-separated digits per row.
    """
    G = generator_matrix(fn)
    lines = [str(MatrixHeader.of(fn))]
    lines.extend(" ".join(map(str, row)) for row in G.tolist())

    return "\n".join(lines) + "\n"


def generator_matrix(fn: TernaryFunction) -> NDArray[np.int8]:
    """Returns the ``(m+1) × (3^m-1)`` generator matrix of ``C_fn``.

    Row ``0`` holds ``f(x)`` and row ``j`` holds ``x_j``, with the nonzero ``x`` in
    canonical order, so the codeword ``(u, v)`` is ``(u, v) @ G``.

    Raises:
        LinearFunctionError: *fn* coincides with a linear form, so the rows are
          dependent.
    """
    if (w := linear_coincidence(fn)) is not None:
        raise LinearFunctionError(w)

    m = fn.m
    G = np.empty((m + 1, 3**m - 1), dtype=np.int8)
    G[0] = as_table(fn)[1:]
    G[1:] = vector_table(m)[1:].T

    return G


def rank_f3(G: NDArray[np.integer]) -> int:
    """Returns the rank of a matrix over 𝔽₃, by Gaussian elimination."""
    A = np.array(G, dtype=np.int64) % 3
    rows, cols = A.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        (pivots,) = np.nonzero(A[rank:, col])
        if not pivots.size:
            continue
        pivot = rank + pivots[0]
        A[[rank, pivot]] = A[[pivot, rank]]
        # Every nonzero element of 𝔽₃ is its own inverse
        A[rank] = A[rank] * A[rank, col] % 3
        others = np.arange(rows) != rank
        A[others] = (A[others] - np.outer(A[others, col], A[rank])) % 3
        rank += 1

    return rank


def read_generator_matrix(path: PathLike) -> tuple[MatrixHeader, NDArray[np.int8]]:
    """Reads a matrix written by :py:func:`write_generator_matrix`.

    Raises:
        MatrixFormatError: Malformed header, wrong shape or a symbol not in
          ``{0, 1, 2}``; the message names the offending line.
    """
    with open(path, encoding="utf-8") as file:
        lines = [line.split() for line in file if line.strip()]
    if not lines:
        raise MatrixFormatError(f"{path}: empty file")

    try:
        m_, k_, family, n_, dim_ = lines[0]
        header = MatrixHeader(
            int(m_), None if k_ == "-" else int(k_), family, int(n_), int(dim_)
        )
    except ValueError:
        raise MatrixFormatError(
            f"{path}, line 1: expected 'm k family n dim' (got: {' '.join(lines[0])!r})"
        ) from None

    rows = lines[1:]
    if len(rows) != header.dim:
        raise MatrixFormatError(
            f"{path}: expected {header.dim} rows (got: {len(rows)})"
        )
    for number, row in enumerate(rows, 2):
        if len(row) != header.n:
            raise MatrixFormatError(
                f"{path}, line {number}: expected {header.n} entries (got: {len(row)})"
            )
        if not set(row) <= {"0", "1", "2"}:
            raise MatrixFormatError(
                f"{path}, line {number}: symbols must be 0, 1 or 2"
            )

    G = np.array([list(map(int, row)) for row in rows], dtype=np.int8)
    logger.debug("Read a %dx%d generator matrix from %s", *G.shape, path)

    return header, G


def span_weight_distribution(
    G: NDArray[np.integer], m: int | None = None
) -> WeightDistribution:
    """Derives the weight distribution from the row span of a generator matrix.

    Args:
        G: A ``dim × n`` matrix over 𝔽₃.
        m: Dimension reported in the result; ``dim - 1`` by default.

    Every coefficient vector is counted, so dependent rows give multiplicities
    that are multiples of a power of 3.

    Raises:
        BudgetExceededError: ``dim - 1`` exceeds the ``brute_force_max_m`` cap.
    """
    G = np.asarray(G, dtype=np.int64) % 3
    dim = G.shape[0]
    if dim < 2:
        raise arg_value_error_msg("Expected at least 2 rows", dim)
    check_budget("brute_force_max_m", dim - 1)

    coefficients = vector_table(dim).astype(np.int64)
    weights: Counter[int] = Counter()
    size = coefficients.shape[0]
    for chunk in chunk_ranges(size, max(1, size * G.shape[1] // _CHUNK_ELEMENTS)):
        words = coefficients[chunk.start : chunk.stop] @ G % 3
        values, counts = np.unique(
            np.count_nonzero(words, axis=1), return_counts=True
        )
        weights.update(dict(zip(values.tolist(), counts.tolist())))

    return WeightDistribution(dim - 1 if m is None else m, weights)


def write_generator_matrix(fn: TernaryFunction, path: PathLike) -> None:
    """Writes :py:func:`format_generator_matrix` output to *path*."""
    with open(path, "w", encoding="utf-8") as file:
        file.write(format_generator_matrix(fn))
    logger.info("Wrote the generator matrix of %r to %s", fn, path)


# Variables ====================================================================

_CHUNK_ELEMENTS = 1 << 22
"""Upper bound on the size of intermediate ``(chunk, n)`` arrays"""
