"""
.. Exact arithmetic in ℤ[ζ₃]
"""

from __future__ import annotations

__all__ = ("EisensteinInt", "ZETA", "zeta_pow")

from dataclasses import dataclass

from typing_extensions import Union

from .utils import arg_type_error

_Operand = Union["EisensteinInt", int]


@dataclass(frozen=True)
class EisensteinInt:
    """An Eisenstein integer ``a + b·ζ₃``, ``ζ₃`` being a primitive cube root of
    unity.

    Args:
        a: The rational part.
        b: The ``ζ₃`` coefficient.

    ``ζ₃² = -1 - ζ₃``, so the ring is closed under the arithmetic operators.
    Plain integers are accepted as operands.

    TIP:
        * Instances are immutable and hashable.
        * Instances with equal fields compare equal.
    """

    # Class Attributes =========================================================

    __slots__ = ("a", "b")

    # Instance Attributes ======================================================

    a: int
    """The rational part"""

    b: int
    """The coefficient of ``ζ₃``"""

    # Special Methods ==========================================================

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}ζ"

    def __add__(self, other: _Operand) -> EisensteinInt:
        other = _coerce(other)
        return EisensteinInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: _Operand) -> EisensteinInt:
        other = _coerce(other)
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: _Operand) -> EisensteinInt:
        return _coerce(other) - self

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: _Operand) -> EisensteinInt:
        other = _coerce(other)
        a, b = self.a, self.b
        c, d = other.a, other.b
        bd = b * d
        # (a + bζ)(c + dζ) = ac + (ad + bc)ζ + bd(-1 - ζ)
        return EisensteinInt(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    # Properties ===============================================================

    @property
    def norm(self) -> int:
        """The field norm ``|a + bζ₃|² = a² - ab + b²``"""
        return self.a * self.a - self.a * self.b + self.b * self.b

    @property
    def re2(self) -> int:
        """Twice the real part, ``2a - b``.

        ``Re(ζ₃) = -1/2``, so the real part itself is a half-integer in general.
        """
        return 2 * self.a - self.b

    # Public Methods ===========================================================

    def conjugate(self) -> EisensteinInt:
        """Returns the complex conjugate, ``(a - b) - b·ζ₃``."""
        return EisensteinInt(self.a - self.b, -self.b)

    @classmethod
    def from_counts(cls, c0: int, c1: int, c2: int) -> EisensteinInt:
        """Returns ``c0·1 + c1·ζ₃ + c2·ζ₃²``.

        This is the value of a character sum in which the exponents ``0``, ``1`` and
        ``2`` occur *c0*, *c1* and *c2* times.
        """
        return cls(c0 - c2, c1 - c2)


def zeta_pow(e: int) -> EisensteinInt:
    """Returns ``ζ₃^e``; *e* is reduced modulo 3."""
    return _ZETA_POWERS[e % 3]


def _coerce(value: _Operand) -> EisensteinInt:
    if isinstance(value, EisensteinInt):
        return value
    if isinstance(value, int):
        return EisensteinInt(value, 0)
    raise arg_type_error("other", value)


_ZETA_POWERS = (EisensteinInt(1, 0), EisensteinInt(0, 1), EisensteinInt(-1, -1))

ZETA = _ZETA_POWERS[1]
"""The primitive cube root of unity ``ζ₃``"""
