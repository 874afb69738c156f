"""
.. Ternary functions for the generic construction
"""

from __future__ import annotations

__all__ = (
    "Family",
    "FunctionLike",
    "SetA",
    "TableFunction",
    "TernaryFunction",
    "WeightClassFunction",
    "as_table",
    "characteristic",
    "check_theorem_range",
    "check_weight_classes",
    "evaluate",
    "make",
    "plant_covering_pair",
    "random_class_function",
    "random_table_function",
    "set_a_size",
    "table_dimension",
)

import logging
import warnings
from abc import ABCMeta, abstractmethod
from collections.abc import Collection, Iterable, Mapping
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import NDArray
from typing_extensions import Any, NamedTuple, Union, override

from .combinatorics import weight_class_size
from .exceptions import (
    LinearFunctionError,
    ParameterRangeError,
    TernaryCodesUserWarning,
)
from .gf3 import F3, F3Vector, vector_table, weight_table
from .utils import arg_value_error, arg_value_error_msg, arg_value_error_range

logger = logging.getLogger(__name__)

# Enumerations =================================================================


class Family(Enum):
    """Function family enumeration"""

    G = "g"
    """``g_(m,k)``: ``1`` on nonzero vectors of weight at most *k*, else ``0``"""

    GBAR = "gbar"
    """``ḡ_(m,k)``: ``1`` on vectors of weight greater than *k*, else ``0``"""

    F = "f"
    """``f_(m,k)``: ``-1`` on weights in *S*, ``1`` on the other weights in
    ``1..k``, else ``0``
    """

    CUSTOM = "custom"
    """Any other class table"""


# Classes ======================================================================


class SetA(NamedTuple):
    """The set ``A = {x : wt(x) ∈ S}`` of a :py:attr:`Family.F` function.

    Args:
        S: Weight classes.
        size: ``|A| = Σ_{j∈S} 2^j·C(m, j)``.
    """

    S: frozenset[int]
    size: int


class TernaryFunction(metaclass=ABCMeta):
    """A function 𝔽₃^m → 𝔽₃ vanishing at the zero vector.

    ATTENTION:
        This is an abstract base class. Hence, only **concrete** subclasses can be
        instantiated.
    """

    __slots__ = ()

    m: int
    """The dimension"""

    def __call__(self, x: F3Vector) -> F3:
        """Evaluates the function at *x*.

        Raises:
            ValueError: Dimension mismatch.
        """
        if len(x) != self.m:
            raise arg_value_error_msg(
                "Dimension mismatch", (len(x), self.m), "vector and function m differ"
            )
        return self._evaluate_(x)

    @abstractmethod
    def table(self) -> NDArray[np.int8]:
        """Returns the values at every vector of 𝔽₃^m, in canonical order."""
        raise NotImplementedError

    @abstractmethod
    def _evaluate_(self, x: F3Vector) -> F3:
        raise NotImplementedError


@dataclass(frozen=True)
class WeightClassFunction(TernaryFunction):
    """A function whose value depends only on the Hamming weight of its argument.

    Args:
        m: Dimension.
        class_values: ``c_0, ..., c_m``; the value on vectors of weight ``j`` is
          ``c_j``.
        family: The family the table belongs to.
        k: The family parameter, if any.
        S: The weight classes on which a :py:attr:`Family.F` function is ``-1``.

    Raises:
        ValueError: *class_values* does not have ``m + 1`` entries, ``c_0 != 0`` or
          an entry is not a residue modulo 3.

    Use :py:func:`make` to build the families; it validates the parameters.

    TIP:
        * Instances are immutable and hashable.
        * Instances with equal fields compare equal.
    """

    # Class Attributes =========================================================

    __slots__ = ("m", "class_values", "family", "k", "S")

    # Instance Attributes ======================================================

    m: int

    class_values: tuple[F3, ...]
    """``c_0, ..., c_m``"""

    family: Family
    """Family tag"""

    k: int | None
    """Family parameter; ``None`` for custom tables"""

    S: frozenset[int]
    """Weight classes mapped to ``-1`` by a :py:attr:`Family.F` function; empty for
    the other families
    """

    # Special Methods ==========================================================

    def __init__(
        self,
        m: int,
        class_values: Iterable[int],
        family: Family = Family.CUSTOM,
        k: int | None = None,
        S: Iterable[int] = (),
    ) -> None:
        if m < 1:
            raise arg_value_error_range("m", m)
        values = tuple(map(F3, class_values))
        if len(values) != m + 1:
            raise arg_value_error_msg(
                f"Expected {m + 1} class values", len(values), "one per weight 0..m"
            )
        if values[0]:
            raise arg_value_error("class_values", values, "c_0 must be 0")

        _setattr = super().__setattr__
        _setattr("m", m)
        _setattr("class_values", values)
        _setattr("family", Family(family))
        _setattr("k", k)
        _setattr("S", frozenset(S))

    def __repr__(self) -> str:
        if self.family is Family.CUSTOM:
            return "{}(m={}, class_values={})".format(
                type(self).__name__, self.m, "".join(map(str, self.class_values))
            )
        return "{}({})".format(type(self).__name__, self.label)

    # Properties ===============================================================

    @property
    def label(self) -> str:
        """A short human-readable name, e.g. ``gbar_(9,2)`` or ``f_(5,2,S={1})``"""
        if self.family is Family.CUSTOM:
            return "custom_({},{})".format(self.m, "".join(map(str, self.class_values)))
        if self.family is Family.F:
            classes = ",".join(map(str, sorted(self.S)))
            return f"f_({self.m},{self.k},S={{{classes}}})"
        return f"{self.family.value}_({self.m},{self.k})"

    @property
    def set_a(self) -> SetA:
        """The set ``A`` of weight classes in :py:attr:`S` and its size"""
        return SetA(self.S, set_a_size(self.m, self.S))

    @property
    def support_classes(self) -> tuple[int, ...]:
        """The weights ``j`` with ``c_j != 0``"""
        return tuple(j for j, value in enumerate(self.class_values) if value)

    # Public Methods ===========================================================

    @override
    def table(self) -> NDArray[np.int8]:
        return np.asarray(self.class_values, dtype=np.int8)[weight_table(self.m)]

    def to_dict(self) -> dict[str, Any]:
        """Returns the JSON-ready form ``{m, k, S, family, class_values}``."""
        return {
            "m": self.m,
            "k": self.k,
            "S": sorted(self.S),
            "family": self.family.value,
            "class_values": list(map(int, self.class_values)),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> WeightClassFunction:
        """Creates an instance from the form returned by :py:meth:`to_dict`.

        Raises:
            ValueError: Missing or inconsistent fields.
        """
        try:
            instance = cls(
                int(data["m"]),
                data["class_values"],
                Family(data["family"]),
                None if data.get("k") is None else int(data["k"]),
                map(int, data.get("S", ())),
            )
        except KeyError as e:
            raise arg_value_error_msg("Missing field", e.args[0]) from None

        if instance.family is not Family.CUSTOM:
            expected = make(
                instance.family, instance.m, instance.k or 0, instance.S, unchecked=True
            )
            if expected.class_values != instance.class_values:
                raise arg_value_error(
                    "class_values",
                    data["class_values"],
                    f"inconsistent with {expected}",
                )
        return instance

    # Extension methods ========================================================

    @override
    def _evaluate_(self, x: F3Vector) -> F3:
        return self.class_values[x.weight]


@dataclass(frozen=True)
class TableFunction(TernaryFunction):
    """An arbitrary function 𝔽₃^m → 𝔽₃, given by its values in canonical
    order.

    Args:
        m: Dimension.
        values: ``3^m`` residues; ``values[j]`` is the value at the vector with
          canonical index ``j``.

    Raises:
        ValueError: Wrong number of values, a value is not a residue modulo 3 or the
          function does not vanish at zero.
    """

    __slots__ = ("m", "values")

    m: int

    values: tuple[int, ...]
    """The values, in canonical order"""

    def __init__(self, m: int, values: Iterable[int]) -> None:
        if m < 1:
            raise arg_value_error_range("m", m)
        values = tuple(map(int, map(F3, values)))
        if len(values) != 3**m:
            raise arg_value_error_msg(f"Expected {3 ** m} values", len(values))
        if values[0]:
            raise arg_value_error("values", values[0], "f(0) must be 0")

        _setattr = super().__setattr__
        _setattr("m", m)
        _setattr("values", values)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(m={self.m}, support={self.support_size})"

    @property
    def support_size(self) -> int:
        """The number of vectors with a nonzero value"""
        return len(self.values) - self.values.count(0)

    @override
    def table(self) -> NDArray[np.int8]:
        return np.asarray(self.values, dtype=np.int8)

    @classmethod
    def from_function(cls, fn: TernaryFunction) -> TableFunction:
        """Tabulates any ternary function."""
        return cls(fn.m, fn.table().tolist())

    @override
    def _evaluate_(self, x: F3Vector) -> F3:
        return F3(self.values[x.index])


# Functions ====================================================================


def as_table(fn: FunctionLike) -> NDArray[np.int64]:
    """Returns the values of a function, or of a raw table reduced modulo 3, as an
    ``int64`` array in canonical order.
    """
    if isinstance(fn, TernaryFunction):
        return fn.table().astype(np.int64)
    return np.asarray(fn, dtype=np.int64) % 3


def characteristic(D: Iterable[F3Vector], m: int) -> TableFunction:
    """Returns the characteristic function ``f_D`` of a set of nonzero vectors.

    Raises:
        ValueError: *D* holds the zero vector or a vector of another dimension.
    """
    values = [0] * 3**m
    for x in D:
        if len(x) != m:
            raise arg_value_error_msg("Dimension mismatch", (len(x), m))
        if not x.weight:
            raise arg_value_error("D", x, "must not contain the zero vector")
        values[x.index] = 1

    return TableFunction(m, values)


def check_theorem_range(m: int, k: int) -> None:
    """Checks ``m >= 5`` and ``2 <= k <= ⌊(m-1)/2⌋``.

    Raises:
        ParameterRangeError: A bound is violated; the message names it.
    """
    if m < 5:
        raise ParameterRangeError(f"'m' out of range (got: {m}; must be >= 5)")
    if k < 2:
        raise ParameterRangeError(f"'k' out of range (got: {k}; must be >= 2)")
    if k > (m - 1) // 2:
        raise ParameterRangeError(
            f"'k' out of range (got: {k}; must be <= (m-1)//2 = {(m - 1) // 2})"
        )


def check_weight_classes(family: Family, k: int, S: Iterable[int]) -> frozenset[int]:
    """Checks that *S* is a nonempty subset of ``1..k`` for :py:attr:`Family.F` and
    empty otherwise.

    Returns:
        *S* as a set.

    Raises:
        ParameterRangeError: *S* is out of range; the message names the bound.
    """
    S = frozenset(S)
    if family is Family.F:
        if not S:
            raise ParameterRangeError("'S' must be a nonempty subset of 1..k")
        if not S <= set(range(1, k + 1)):
            raise ParameterRangeError(
                f"'S' out of range (got: {sorted(S)}; must be a subset of 1..{k})"
            )
    elif S:
        raise ParameterRangeError(f"'S' only applies to family f (got: {sorted(S)})")

    return S


def evaluate(fn: TernaryFunction, x: F3Vector) -> F3:
    """Evaluates *fn* at *x*.

    Raises:
        ValueError: Dimension mismatch.
    """
    return fn(x)


def make(
    family: Family | str,
    m: int,
    k: int,
    S: Collection[int] = (),
    *,
    unchecked: bool = False,
) -> WeightClassFunction:
    """Builds a member of one of the three function families.

    Args:
        family: :py:attr:`~Family.G`, :py:attr:`~Family.GBAR` or
          :py:attr:`~Family.F` (or the value of one).
        m: Dimension.
        k: Family parameter.
        S: For :py:attr:`Family.F` only, a nonempty subset of ``1..k``.
        unchecked: If ``True``, parameters outside the theorem range
          (``m >= 5``, ``2 <= k <= ⌊(m-1)/2⌋``) are accepted with a warning, as long
          as ``1 <= k <= m``.

    Returns:
        The class table.

    Raises:
        ParameterRangeError: Parameters out of range; the message names the bound.
        LinearFunctionError: The table coincides with a linear form (possible only
          for degenerate unchecked parameters).

    WARNING:
        Closed-form results are only guaranteed inside the theorem range.
    """
    family = Family(family)
    if family is Family.CUSTOM:
        raise arg_value_error("family", family, "use WeightClassFunction directly")

    if unchecked:
        if not 1 <= k <= m:
            raise ParameterRangeError(f"'k' out of range (got: {k}; must be in 1..{m})")
        try:
            check_theorem_range(m, k)
        except ParameterRangeError as e:
            warnings.warn(
                f"{family.value}_({m},{k}) is outside the theorem range ({e})",
                TernaryCodesUserWarning,
                stacklevel=2,
            )
    else:
        check_theorem_range(m, k)

    S = check_weight_classes(family, k, S)

    if family is Family.G:
        values = [int(1 <= j <= k) for j in range(m + 1)]
    elif family is Family.GBAR:
        values = [int(j > k) for j in range(m + 1)]
    else:
        values = [2 if j in S else int(1 <= j <= k) for j in range(m + 1)]

    fn = WeightClassFunction(m, values, family, k, S)

    from .walsh import linear_coincidence

    if (w := linear_coincidence(fn)) is not None:
        raise LinearFunctionError(w)

    logger.debug("Built %s with class table %s", fn.label, values)

    return fn


def plant_covering_pair(
    m: int, rng: np.random.Generator, v: F3Vector | None = None
) -> TableFunction:
    """Returns a random function whose code is **not** minimal.

    The function is nonzero wherever ``v·x != 0``, so the codeword ``(u=1, v=0)``
    covers the codeword ``(u=0, v)`` without being a multiple of it.

    Args:
        m: Dimension, at least ``2``.
        rng: Source of randomness.
        v: The planted ``v``; random nonzero if ``None``.
    """
    if m < 2:
        raise arg_value_error_range("m", m, "must be >= 2")

    vectors = vector_table(m)
    if v is None:
        v = F3Vector._new(vectors[int(rng.integers(1, 3**m))].tolist())
    dots = vectors.astype(np.int64) @ np.asarray(v, dtype=np.int64) % 3

    while True:
        values = rng.integers(0, 3, size=3**m)
        values[dots != 0] = rng.integers(1, 3, size=int(np.count_nonzero(dots)))
        values[0] = 0
        # `f = ±v·x` would make the covered codeword a multiple of the covering one
        if not (np.array_equal(values, dots) or np.array_equal(values, -dots % 3)):
            return TableFunction(m, values.tolist())


def random_class_function(m: int, rng: np.random.Generator) -> WeightClassFunction:
    """Returns a custom class table with uniformly random ``c_1, ..., c_m`` that is
    not identically zero.
    """
    while True:
        values = [0, *rng.integers(0, 3, size=m).tolist()]
        if any(values):
            return WeightClassFunction(m, values)


def random_table_function(m: int, rng: np.random.Generator) -> TableFunction:
    """Returns a uniformly random function vanishing at zero that is not linear."""
    vectors = vector_table(m).astype(np.int64)
    while True:
        values = rng.integers(0, 3, size=3**m)
        values[0] = 0
        # Linear functions are exactly the tables `X @ w`; `w_j` is the value at e_j
        w = np.array([values[3 ** (m - 1 - j)] for j in range(m)], dtype=np.int64)
        if not np.array_equal(values, vectors @ w % 3):
            return TableFunction(m, values.tolist())


def set_a_size(m: int, S: Iterable[int]) -> int:
    """Returns ``|A| = Σ_{j∈S} 2^j·C(m, j)``, where ``A = {x : wt(x) ∈ S}``."""
    return sum(weight_class_size(m, j) for j in set(S))


def table_dimension(table: NDArray[np.integer]) -> int:
    """Returns ``m`` for a table of ``3^m`` values.

    Raises:
        ValueError: The length is not a positive power of 3.
    """
    size = table.shape[0]
    m = 0
    while 3**m < size:
        m += 1
    if 3**m != size or m < 1:
        raise arg_value_error_msg("Table length is not a power of 3", size)
    return m


# Variables ====================================================================

FunctionLike = Union[TernaryFunction, NDArray[np.integer]]
"""A ternary function or its table of values in canonical order"""
