"""
.. The code construction API
"""

from __future__ import annotations

__all__ = (
    "CodeSpec",
    "CompleteWeightEnumerator",
    "GbarWeights",
    "SymbolCounts",
    "WeightDistribution",
    "codeword_counts_brute",
    "codeword_counts_closed",
    "cwe_brute",
    "cwe_closed",
    "gbar_weights",
    "nlambda_closed",
    "parameters",
    "weight_distribution_brute",
    "weight_distribution_closed",
)

import logging
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np
from numpy.typing import NDArray
from typing_extensions import Any, NamedTuple

from .combinatorics import ball_size, binomial, krawtchouk, lloyd, weight_class_size
from .exceptions import InconsistencyError
from .functions import (
    Family,
    TernaryFunction,
    WeightClassFunction,
    as_table,
    check_theorem_range,
    table_dimension,
)
from .gf3 import F3Vector, vector_table
from .utils import (
    arg_value_error,
    arg_value_error_msg,
    arg_value_error_range,
    check_budget,
    chunk_ranges,
    parallel_map,
)

logger = logging.getLogger(__name__)

# Classes ======================================================================


class SymbolCounts(NamedTuple):
    """The number of occurrences of each symbol in a codeword.

    Args:
        t0: Number of ``0`` coordinates.
        t1: Number of ``1`` coordinates.
        t2: Number of ``2`` coordinates.

    The codeword contributes the monomial ``w0^t0 w1^t1 w2^t2`` to the complete
    weight enumerator.
    """

    t0: int
    t1: int
    t2: int

    @property
    def length(self) -> int:
        """``t0 + t1 + t2``"""
        return self.t0 + self.t1 + self.t2

    @property
    def weight(self) -> int:
        """The Hamming weight, ``t1 + t2``"""
        return self.t1 + self.t2

    def to_monomial(self) -> str:
        """Renders the monomial, e.g. ``w0^192 w1^50``."""
        factors = [
            f"w{symbol}" if exponent == 1 else f"w{symbol}^{exponent}"
            for symbol, exponent in enumerate(self)
            if exponent
        ]
        return " ".join(factors) or "1"


class _Enumerator(Mapping[Any, int]):
    """Common base of the immutable enumerator mappings"""

    __slots__ = ("m", "_terms")

    m: int
    _terms: dict[Any, int]

    def __init__(self, m: int, terms: Mapping[Any, int]) -> None:
        if m < 1:
            raise arg_value_error_range("m", m)
        self.m = m
        self._terms = {key: count for key, count in sorted(terms.items()) if count}

    def __eq__(self, other: object) -> bool:
        if isinstance(other, type(self)):
            return self.m == other.m and self._terms == other._terms
        return NotImplemented

    def __getitem__(self, key: Any) -> int:
        return self._terms[key]

    def __hash__(self) -> int:
        return hash((self.m, tuple(self._terms.items())))

    def __iter__(self) -> Iterator[Any]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(m={self.m}, {self.to_polynomial()})"

    @property
    def total(self) -> int:
        """The number of codewords counted, ``3^{m+1}`` for a complete table"""
        return sum(self._terms.values())

    def check_total(self) -> None:
        """Checks that exactly ``3^{m+1}`` codewords were counted.

        Raises:
            InconsistencyError: The multiplicities do not add up.
        """
        if self.total != 3 ** (self.m + 1):
            raise InconsistencyError(
                f"{type(self).__name__} counts {self.total} codewords, "
                f"expected 3^{self.m + 1}"
            )

    def to_polynomial(self) -> str:
        raise NotImplementedError


class WeightDistribution(_Enumerator):
    """The weight distribution ``{w: A_w}`` of a code ``C_f``.

    Args:
        m: Dimension of the underlying space; the code has length ``3^m - 1``.
        terms: ``A_w`` keyed by weight. Zero multiplicities are dropped.

    Codewords are counted by their ``(u, v)`` coefficient pairs.

    TIP:
        Instances are immutable, hashable read-only mappings.
    """

    __slots__ = ()

    _terms: dict[int, int]

    def __init__(self, m: int, terms: Mapping[int, int]) -> None:
        super().__init__(m, {int(w): int(count) for w, count in terms.items()})

    @property
    def max_weight(self) -> int:
        """The largest weight"""
        return max(self._terms)

    @property
    def min_nonzero_weight(self) -> int:
        """The minimum distance"""
        return min(w for w in self._terms if w)

    def to_dict(self, fn: TernaryFunction | None = None) -> dict[str, Any]:
        """Returns the JSON-ready form; all numbers are decimal strings.

        Args:
            fn: The function of the code, to fill in the header fields.
        """
        return {
            **_header(self.m, fn),
            "dist": [{"w": str(w), "A": str(A)} for w, A in self._terms.items()],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> WeightDistribution:
        """Creates an instance from the form returned by :py:meth:`to_dict`.

        Raises:
            ValueError: Missing or malformed fields.
        """
        try:
            return cls(
                int(data["m"]),
                {int(term["w"]): int(term["A"]) for term in data["dist"]},
            )
        except (KeyError, TypeError) as e:
            raise arg_value_error_msg("Malformed weight distribution", e) from None

    def to_polynomial(self) -> str:
        """Renders ``1+36z^13010+...``, in ascending order of weight."""
        terms = []
        for w, A in self._terms.items():
            if not w:
                terms.append(str(A))
            else:
                terms.append(f"{A if A != 1 else ''}z^{w}")
        return "+".join(terms)


class CompleteWeightEnumerator(_Enumerator):
    """The complete weight enumerator of a code ``C_f``.

    Args:
        m: Dimension of the underlying space.
        terms: Multiplicities keyed by :py:class:`SymbolCounts`.

    Raises:
        ValueError: A key does not describe a word of length ``3^m - 1``.

    TIP:
        Instances are immutable, hashable read-only mappings.
    """

    __slots__ = ()

    _terms: dict[SymbolCounts, int]

    def __init__(self, m: int, terms: Mapping[SymbolCounts, int]) -> None:
        counts = {SymbolCounts(*key): int(count) for key, count in terms.items()}
        for key in counts:
            if key.length != 3**m - 1 or min(key) < 0:
                raise arg_value_error("terms", key, f"length must be {3 ** m - 1}")
        super().__init__(m, counts)

    def to_dict(self, fn: TernaryFunction | None = None) -> dict[str, Any]:
        """Returns the JSON-ready form; all numbers are decimal strings.

        Args:
            fn: The function of the code, to fill in the header fields.
        """
        return {
            **_header(self.m, fn),
            "terms": [
                {"t0": str(t0), "t1": str(t1), "t2": str(t2), "mult": str(mult)}
                for (t0, t1, t2), mult in self._terms.items()
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> CompleteWeightEnumerator:
        """Creates an instance from the form returned by :py:meth:`to_dict`.

        Raises:
            ValueError: Missing or malformed fields.
        """
        try:
            return cls(
                int(data["m"]),
                {
                    SymbolCounts(int(t["t0"]), int(t["t1"]), int(t["t2"])): int(
                        t["mult"]
                    )
                    for t in data["terms"]
                },
            )
        except (KeyError, TypeError) as e:
            raise arg_value_error_msg("Malformed enumerator", e) from None

    def to_polynomial(self) -> str:
        """Renders ``w0^242 + 2 w0^192 w1^50 + ...``, the zero word first."""
        return " + ".join(
            key.to_monomial() if mult == 1 else f"{mult} {key.to_monomial()}"
            for key, mult in sorted(self._terms.items(), reverse=True)
        )

    def weight_distribution(self) -> WeightDistribution:
        """Collapses the enumerator by setting ``w0 = 1`` and ``w1 = w2 = z``."""
        weights: Counter[int] = Counter()
        for key, mult in self._terms.items():
            weights[key.weight] += mult
        return WeightDistribution(self.m, weights)


@dataclass(frozen=True)
class CodeSpec:
    """The parameters ``[n, dim, d]`` of a code ``C_f``.

    Args:
        fn: The defining function.
        n: Length, ``3^m - 1``.
        dim: Dimension, ``m + 1``.
        d: Minimum distance.
        w_max: Largest weight.
    """

    __slots__ = ("fn", "n", "dim", "d", "w_max")

    fn: WeightClassFunction
    n: int
    dim: int
    d: int
    w_max: int

    def __str__(self) -> str:
        return f"[{self.n}, {self.dim}, {self.d}]"

    @property
    def w_min(self) -> int:
        """The smallest nonzero weight, i.e. :py:attr:`d`"""
        return self.d

    def to_dict(self) -> dict[str, Any]:
        return {
            **_header(self.fn.m, self.fn),
            "n": str(self.n),
            "dim": str(self.dim),
            "d": str(self.d),
            "w_min": str(self.w_min),
            "w_max": str(self.w_max),
        }


class GbarWeights(NamedTuple):
    """The three kinds of nonzero weights of ``C_ḡ``.

    Args:
        by_class: ``3^m - 3^{m-1} - Ψ_k(i, m)`` for ``u != 0`` and ``wt(v) = i``,
          ``i = 1..m``.
        at_zero: ``3^m - Σ_{j=0}^k 2^j·C(m, j)``, for ``u != 0`` and ``v = 0``.
        linear: ``3^m - 3^{m-1}``, for ``u = 0`` and ``v != 0``.
    """

    by_class: tuple[int, ...]
    at_zero: int
    linear: int


# Functions ====================================================================


def codeword_counts_brute(fn: TernaryFunction, u: int, v: F3Vector) -> SymbolCounts:
    """Counts the symbols of ``(u·f(x) + v·x)`` over the nonzero ``x``.

    Raises:
        ValueError: *u* is not a residue or *v* has the wrong dimension.
    """
    _check_u(u)
    if len(v) != fn.m:
        raise arg_value_error_msg("Dimension mismatch", (len(v), fn.m))

    points = vector_table(fn.m)[1:].astype(np.int64)
    word = (u * as_table(fn)[1:] + points @ np.asarray(v, dtype=np.int64)) % 3
    t0, t1, t2 = np.bincount(word, minlength=3).tolist()

    return SymbolCounts(t0, t1, t2)


def codeword_counts_closed(fn: WeightClassFunction, u: int, i: int) -> SymbolCounts:
    """Returns the symbol counts of the codewords ``(u, v)`` with ``wt(v) = i``.

    The ``x = 0`` position, where every codeword is ``0``, is not a coordinate of
    the code, so ``t0 = N_0 - 1``.
    """
    n0, n1, n2 = (nlambda_closed(fn, u, i, lam) for lam in range(3))
    return SymbolCounts(n0 - 1, n1, n2)


def cwe_brute(fn: TernaryFunction, jobs: int | None = None) -> CompleteWeightEnumerator:
    """Computes the complete weight enumerator by enumerating every codeword.

    Raises:
        BudgetExceededError: ``m`` exceeds the ``brute_force_max_m`` cap.
    """
    m = fn.m
    check_budget("brute_force_max_m", m)
    logger.info("Enumerating the 3^%d codewords of %r", m + 1, fn)

    table = as_table(fn)
    size = 3**m
    chunks = chunk_ranges(size, max(jobs or 1, size * size // _CHUNK_ELEMENTS))
    totals: Counter[SymbolCounts] = Counter()
    for part in parallel_map(_cwe_chunk, [(table, chunk) for chunk in chunks], jobs):
        totals.update(part)

    cwe = CompleteWeightEnumerator(m, totals)
    cwe.check_total()
    logger.info("Enumerated %d distinct monomials", len(cwe))

    return cwe


def cwe_closed(fn: WeightClassFunction) -> CompleteWeightEnumerator:
    """Assembles the complete weight enumerator from the symbol counts of each
    ``(u, wt(v))`` branch.
    """
    terms: Counter[SymbolCounts] = Counter()
    for u, i, mult in _branches(fn.m):
        terms[codeword_counts_closed(fn, u, i)] += mult

    cwe = CompleteWeightEnumerator(fn.m, terms)
    cwe.check_total()

    return cwe


def gbar_weights(m: int, k: int) -> GbarWeights:
    """Returns the nonzero weights of ``C_ḡ`` for ``ḡ = gbar_(m,k)``.

    Raises:
        ParameterRangeError: ``(m, k)`` is outside the theorem range.
    """
    check_theorem_range(m, k)
    return GbarWeights(
        tuple(3**m - 3 ** (m - 1) - lloyd(k, i, m) for i in range(1, m + 1)),
        3**m - ball_size(m, k, start=0),
        3**m - 3 ** (m - 1),
    )


def nlambda_closed(fn: WeightClassFunction, u: int, i: int, lam: int) -> int:
    """Returns ``N_λ(u, v) = |{x ∈ 𝔽₃^m : u·f(x) + v·x = λ}|`` for any
    ``v`` of weight *i*.

    Args:
        fn: A weight-class function with class table ``c``.
        u: The coefficient of ``f``.
        i: The weight of ``v``.
        lam: The symbol ``λ``.

    Returns:
        ``3^{m-1} + (1/3)·Σ_j K_j(i, m)·τ(u·c_j - λ)``, where ``τ(0) = 2`` and
        ``τ(±1) = -1``.

    Raises:
        ValueError: An argument is out of range.
        InconsistencyError: The sum is not divisible by 3.

    The count includes ``x = 0``.
    """
    m = fn.m
    _check_u(u)
    _check_u(lam, "lam")
    if not 0 <= i <= m:
        raise arg_value_error_range("i", i, f"must be in 0..{m}")

    total = sum(
        krawtchouk(j, i, m) * _TAU[(u * c - lam) % 3]
        for j, c in enumerate(fn.class_values)
    )
    quotient, remainder = divmod(total, 3)
    if remainder:
        raise InconsistencyError(
            f"N_{lam}(u={u}, wt(v)={i}) of {fn!r}: {total} is not divisible by 3"
        )

    return 3 ** (m - 1) + quotient


def parameters(fn: WeightClassFunction) -> CodeSpec:
    """Returns the parameters of ``C_f``.

    For the three families, ``d`` and ``w_max`` come from their formulas and are
    cross-checked against the closed-form weight distribution; for custom tables
    they are read off the distribution.

    Raises:
        ParameterRangeError: A family function outside the theorem range.
        InconsistencyError: A formula disagrees with the distribution.
    """
    m = fn.m
    if fn.family is not Family.CUSTOM:
        check_theorem_range(m, fn.k or 0)

    dist = weight_distribution_closed(fn)
    d, w_max = dist.min_nonzero_weight, dist.max_weight

    if fn.family is not Family.CUSTOM:
        k = fn.k or 0
        if fn.family is Family.GBAR:
            expected = (
                3**m - 3 ** (m - 1) - 2**k * binomial(m - 1, k),
                3**m - ball_size(m, k, start=0),
            )
        else:
            expected = (
                ball_size(m, k),
                2 * 3 ** (m - 1) + 2**k * binomial(m - 1, k) - 1,
            )
        if expected != (d, w_max):
            raise InconsistencyError(
                f"{fn.label}: formula (d, w_max) = {expected}, "
                f"distribution gives {(d, w_max)}"
            )

    return CodeSpec(fn, 3**m - 1, m + 1, d, w_max)


def weight_distribution_brute(
    fn: TernaryFunction, jobs: int | None = None
) -> WeightDistribution:
    """Computes the weight distribution by enumerating every codeword.

    Raises:
        BudgetExceededError: ``m`` exceeds the ``brute_force_max_m`` cap.
    """
    return cwe_brute(fn, jobs).weight_distribution()


def weight_distribution_closed(fn: WeightClassFunction) -> WeightDistribution:
    """Computes the weight distribution from the ``N_0`` counts of each
    ``(u, wt(v))`` branch.
    """
    weights: Counter[int] = Counter()
    for u, i, mult in _branches(fn.m):
        weights[3**fn.m - nlambda_closed(fn, u, i, 0)] += mult

    dist = WeightDistribution(fn.m, weights)
    dist.check_total()

    return dist


def _branches(m: int) -> Iterable[tuple[int, int, int]]:
    """Yields ``(u, i, multiplicity)`` for every ``u`` and weight class of ``v``."""
    for u in range(3):
        for i in range(m + 1):
            yield u, i, weight_class_size(m, i)


def _check_u(u: int, name: str = "u") -> None:
    if u not in (0, 1, 2):
        raise arg_value_error_range(name, u, "must be in 0..2")


def _cwe_chunk(work: tuple[NDArray[np.int64], range]) -> Counter[SymbolCounts]:
    table, chunk = work
    n = table.shape[0] - 1
    vectors = vector_table(table_dimension(table)).astype(np.int64)
    linear = vectors[chunk.start : chunk.stop] @ vectors[1:].T
    counts: Counter[SymbolCounts] = Counter()
    for u in range(3):
        words = (linear + u * table[1:]) % 3
        t1 = np.count_nonzero(words == 1, axis=1)
        t2 = np.count_nonzero(words == 2, axis=1)
        keys, mult = np.unique(np.stack([t1, t2], axis=1), axis=0, return_counts=True)
        for (a, b), c in zip(keys.tolist(), mult.tolist()):
            counts[SymbolCounts(n - a - b, a, b)] += c
    logger.debug("Counted codewords for v in %s", chunk)

    return counts


def _header(m: int, fn: TernaryFunction | None) -> dict[str, Any]:
    if isinstance(fn, WeightClassFunction):
        return {
            "m": str(m),
            "k": None if fn.k is None else str(fn.k),
            "family": fn.family.value,
            "S": [str(j) for j in sorted(fn.S)],
        }
    return {"m": str(m), "k": None, "family": "table", "S": []}


# Variables ====================================================================

_CHUNK_ELEMENTS = 1 << 20
"""Upper bound on the size of intermediate ``(chunk, 3^m)`` arrays"""

_TAU = (2, -1, -1)
"""``2·Re(ζ₃^e)`` for ``e = 0, 1, 2``"""
