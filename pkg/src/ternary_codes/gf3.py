"""
.. Arithmetic over 𝔽₃ and 𝔽₃^m
"""

from __future__ import annotations

__all__ = (
    "F3",
    "F3Vector",
    "add",
    "coordinate_vector",
    "enumerate_by_weight",
    "enumerate_vectors",
    "index_array",
    "inner_product",
    "negate",
    "scale",
    "support",
    "vector_index",
    "vector_table",
    "weight",
    "weight_table",
)

from collections.abc import Iterable, Iterator
from itertools import combinations, product

import numpy as np
from numpy.typing import NDArray
from typing_extensions import Tuple, overload

from .utils import (
    _sequence_repr,
    arg_value_error_msg,
    arg_value_error_range,
    cached,
)

# Classes ======================================================================


class F3(int):
    """An element of 𝔽₃.

    Args:
        value: ``0``, ``1`` or ``2``.

    Raises:
        ValueError: *value* is not a residue modulo 3.

    ``2`` stands for ``-1``. Arithmetic with other integers is carried out
    modulo 3 and yields :py:class:`F3` instances.

    TIP:
        This is a subclass of :py:class:`int`; instances can be used as indices.
    """

    __slots__ = ()

    def __new__(cls, value: int) -> F3:
        if not 0 <= value <= 2:
            raise arg_value_error_range("value", value)
        return _ELEMENTS[value]

    def __repr__(self) -> str:
        return f"F3({int(self)})"

    def __str__(self) -> str:
        return str(int(self))

    def __neg__(self) -> F3:
        return _ELEMENTS[-int(self) % 3]

    def __add__(self, other: int) -> F3:  # type: ignore[override]
        return _ELEMENTS[(int(self) + int(other)) % 3]

    __radd__ = __add__

    def __sub__(self, other: int) -> F3:  # type: ignore[override]
        return _ELEMENTS[(int(self) - int(other)) % 3]

    def __rsub__(self, other: int) -> F3:  # type: ignore[override]
        return _ELEMENTS[(int(other) - int(self)) % 3]

    def __mul__(self, other: int) -> F3:  # type: ignore[override]
        return _ELEMENTS[int(self) * int(other) % 3]

    __rmul__ = __mul__


class F3Vector(Tuple[F3, ...]):
    """A vector of 𝔽₃^m.

    Args:
        coords: The coordinates, each ``0``, ``1`` or ``2``.

    Raises:
        ValueError: *coords* is empty or a coordinate is not a residue modulo 3.

    TIP:
        This is a subclass of :py:class:`tuple`; instances are immutable and
        hashable, and compare equal to tuples of the same integers.
    """

    __slots__ = ()

    def __new__(cls, coords: Iterable[int]) -> F3Vector:
        coords = tuple(map(F3, coords))
        if not coords:
            raise arg_value_error_msg("A vector needs at least one coordinate", coords)

        return tuple.__new__(cls, coords)

    def __repr__(self) -> str:
        return f"F3Vector({_sequence_repr(self)})"

    def __str__(self) -> str:
        return _sequence_repr(self)

    @property
    def m(self) -> int:
        """The dimension"""
        return len(self)

    @property
    def weight(self) -> int:
        """The Hamming weight, ``|Supp(v)|``"""
        return len(self) - self.count(0)

    @property
    def support(self) -> tuple[int, ...]:
        """The (zero-based) positions of the nonzero coordinates"""
        return tuple(j for j, digit in enumerate(self) if digit)

    @property
    def index(self) -> int:
        """Position of the vector in the canonical order of 𝔽₃^m.

        The canonical index is the integer whose base-3 expansion, most-significant
        digit first, is the coordinate sequence. The zero vector has index ``0``.
        """
        index = 0
        for digit in self:
            index = index * 3 + int(digit)
        return index

    @classmethod
    def _new(cls, coords: Iterable[int]) -> F3Vector:
        """Alternate constructor for internal use only.

        Coordinates are not validated.
        """
        return tuple.__new__(cls, [_ELEMENTS[digit] for digit in coords])


# Functions ====================================================================


def add(u: F3Vector, v: F3Vector) -> F3Vector:
    """Returns ``u + v``.

    Raises:
        ValueError: Dimension mismatch.
    """
    _check_dimensions(u, v)
    return F3Vector._new((a + b) % 3 for a, b in zip(u, v))


def coordinate_vector(m: int, j: int) -> F3Vector:
    """Returns the *j*-th coordinate position of the generic construction.

    Args:
        m: Dimension.
        j: Coordinate index, ``1 <= j <= 3^m - 1``.

    Returns:
        The nonzero vector whose base-3 expansion (most-significant digit first)
        is *j*.

    Raises:
        ValueError: *m* is non-positive or *j* is out of range.

    The map is a bijection from ``1, ..., 3^m - 1`` onto 𝔽₃^m∖{0}.
    """
    if m < 1:
        raise arg_value_error_range("m", m)
    if not 1 <= j < 3**m:
        raise arg_value_error_range("j", j, f"must be in 1..{3 ** m - 1}")

    return _vector_at(m, j)


def enumerate_by_weight(m: int, i: int) -> Iterator[F3Vector]:
    """Yields every vector of 𝔽₃^m with Hamming weight *i*, exactly once.

    Args:
        m: Dimension.
        i: Weight, ``0 <= i <= m``.

    Raises:
        ValueError: *m* or *i* is out of range.

    Vectors come in lexicographic order of their supports and, within a support,
    in lexicographic order of the nonzero digits. There are ``2^i·C(m, i)`` of
    them.
    """
    if m < 1:
        raise arg_value_error_range("m", m)
    if not 0 <= i <= m:
        raise arg_value_error_range("i", i, f"must be in 0..{m}")

    for positions in combinations(range(m), i):
        for digits in product((1, 2), repeat=i):
            coords = [0] * m
            for position, digit in zip(positions, digits):
                coords[position] = digit
            yield F3Vector._new(coords)


def enumerate_vectors(m: int, indices: range | None = None) -> Iterator[F3Vector]:
    """Yields vectors of 𝔽₃^m in canonical order.

    Args:
        m: Dimension.
        indices: A sub-range of ``range(3^m)``, as produced by
          :py:func:`~ternary_codes.utils.chunk_ranges`. Defaults to all of 𝔽₃^m,
          zero vector included.

    Raises:
        ValueError: *indices* leaves ``range(3^m)``.
    """
    if m < 1:
        raise arg_value_error_range("m", m)
    size = 3**m
    if indices is None:
        indices = range(size)
    elif indices.step != 1 or indices.start < 0 or indices.stop > size:
        raise arg_value_error_range("indices", indices, f"must lie in range({size})")

    for index in indices:
        yield _vector_at(m, index)


def inner_product(u: F3Vector, v: F3Vector) -> F3:
    """Returns ``u·v = u₁v₁ + ⋯ + u_m v_m`` in 𝔽₃.

    Raises:
        ValueError: Dimension mismatch.
    """
    _check_dimensions(u, v)
    return _ELEMENTS[sum(a * b for a, b in zip(u, v) if a and b) % 3]


@overload
def negate(x: F3) -> F3: ...


@overload
def negate(x: F3Vector) -> F3Vector: ...


def negate(x: F3 | F3Vector) -> F3 | F3Vector:
    """Returns ``-x``, for a scalar or a vector.

    ``negate(1) == 2``, ``negate(2) == 1`` and ``negate(0) == 0``.
    """
    if isinstance(x, F3Vector):
        return F3Vector._new(-digit % 3 for digit in x)
    return _ELEMENTS[-x % 3]


def scale(c: int, v: F3Vector) -> F3Vector:
    """Returns the scalar multiple ``c·v``."""
    return F3Vector._new(c * digit % 3 for digit in v)


def support(v: F3Vector) -> tuple[int, ...]:
    """Returns ``Supp(v)``, the zero-based positions of the nonzero coordinates."""
    return v.support


def vector_index(v: F3Vector) -> int:
    """Returns the canonical index of *v* (see :py:attr:`F3Vector.index`)."""
    return v.index


def weight(v: F3Vector) -> int:
    """Returns the Hamming weight ``wt(v) = |Supp(v)|``."""
    return v.weight


@cached
def vector_table(m: int) -> NDArray[np.int8]:
    """Returns all of 𝔽₃^m as a read-only ``(3^m, m)`` array in canonical order.

    Row ``j`` holds the coordinates of the vector with canonical index ``j``.
    """
    if m < 1:
        raise arg_value_error_range("m", m)

    indices = np.arange(3**m, dtype=np.int64)
    powers = 3 ** np.arange(m - 1, -1, -1, dtype=np.int64)
    table = ((indices[:, None] // powers) % 3).astype(np.int8)
    table.setflags(write=False)

    return table


@cached
def weight_table(m: int) -> NDArray[np.int64]:
    """Returns the Hamming weights of all of 𝔽₃^m, in canonical order, as a
    read-only array.
    """
    weights = np.count_nonzero(vector_table(m), axis=1).astype(np.int64)
    weights.setflags(write=False)

    return weights


def index_array(digits: NDArray[np.integer]) -> NDArray[np.int64]:
    """Returns the canonical indices of the rows of an ``(N, m)`` digit array."""
    m = digits.shape[-1]
    powers = 3 ** np.arange(m - 1, -1, -1, dtype=np.int64)
    return (digits.astype(np.int64) % 3) @ powers


def _check_dimensions(u: F3Vector, v: F3Vector) -> None:
    if len(u) != len(v):
        raise arg_value_error_msg(
            "Dimension mismatch", (len(u), len(v)), "vectors must have equal m"
        )


def _vector_at(m: int, index: int) -> F3Vector:
    digits = [0] * m
    for position in range(m - 1, -1, -1):
        index, digits[position] = divmod(index, 3)
    return F3Vector._new(digits)


# Variables ====================================================================

_ELEMENTS = tuple(int.__new__(F3, value) for value in range(3))
