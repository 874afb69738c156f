"""
.. Binomials, Krawtchouk and Lloyd polynomials
"""

from __future__ import annotations

__all__ = (
    "ball_size",
    "binomial",
    "krawtchouk",
    "lloyd",
    "weight_class_size",
)

from math import comb

from .utils import arg_value_error_range, cached


@cached
def binomial(n: int, r: int) -> int:
    """Returns the binomial coefficient ``C(n, r)``.

    ``C(n, r) = 0`` when ``r < 0`` or ``r > n``.

    Raises:
        ValueError: *n* is negative.
    """
    if n < 0:
        raise arg_value_error_range("n", n)
    if not 0 <= r <= n:
        return 0
    return comb(n, r)


def krawtchouk(t: int, x: int, m: int, h: int = 3) -> int:
    """Evaluates the Krawtchouk polynomial of degree *t*.

    Args:
        t: Degree, non-negative.
        x: Evaluation point, ``0 <= x <= m``.
        m: Length parameter, positive.
        h: Alphabet size, at least ``2``.

    Returns:
        ``K_t(x, m) = Σ_{j=0}^t (-1)^j (h-1)^{t-j} C(x, j) C(m-x, t-j)``, exactly.

    Raises:
        ValueError: An argument is out of range.

    For ``h = 3``, ``K_t(wt(u), m)`` is the character sum of ``ζ₃^{u·v}`` over the
    vectors ``v`` of weight *t*.
    """
    _check_polynomial_args(x, m, h)
    if t < 0:
        raise arg_value_error_range("t", t)

    return sum(
        (-1) ** j * (h - 1) ** (t - j) * binomial(x, j) * binomial(m - x, t - j)
        for j in range(t + 1)
    )


def lloyd(k: int, x: int, m: int, h: int = 3) -> int:
    """Evaluates the Lloyd polynomial ``Ψ_k(x, m) = Σ_{t=0}^k K_t(x, m)``.

    Args:
        k: Degree, ``0 <= k <= m``.
        x: Evaluation point, ``0 <= x <= m``.
        m: Length parameter, positive.
        h: Alphabet size, at least ``2``.

    Raises:
        ValueError: An argument is out of range.
    """
    _check_polynomial_args(x, m, h)
    if not 0 <= k <= m:
        raise arg_value_error_range("k", k, f"must be in 0..{m}")

    return sum(krawtchouk(t, x, m, h) for t in range(k + 1))


def weight_class_size(m: int, i: int) -> int:
    """Returns ``2^i·C(m, i)``, the number of vectors of 𝔽₃^m with weight *i*."""
    return 2**i * binomial(m, i)


def ball_size(m: int, k: int, start: int = 1) -> int:
    """Returns ``Σ_{j=start}^k 2^j·C(m, j)``.

    With the default *start*, this is ``|S(m, k)|``, the number of nonzero vectors
    of 𝔽₃^m with weight at most *k*.
    """
    return sum(weight_class_size(m, j) for j in range(max(start, 0), k + 1))


def _check_polynomial_args(x: int, m: int, h: int) -> None:
    if m < 1:
        raise arg_value_error_range("m", m)
    if not 0 <= x <= m:
        raise arg_value_error_range("x", x, f"must be in 0..{m}")
    if h < 2:
        raise arg_value_error_range("h", h, "must be >= 2")
