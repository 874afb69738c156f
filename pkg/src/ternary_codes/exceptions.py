"""
.. Custom Exceptions
"""

from __future__ import annotations

__all__ = (
    "TernaryCodesWarning",
    "TernaryCodesUserWarning",
    "TernaryCodesError",
    "BudgetExceededError",
    "InconsistencyError",
    "LinearFunctionError",
    "MatrixFormatError",
    "ParameterRangeError",
)

from typing_extensions import TYPE_CHECKING

if TYPE_CHECKING:
    from .gf3 import F3Vector


class TernaryCodesWarning(Warning):
    """Package-specific warning base category."""


class TernaryCodesUserWarning(TernaryCodesWarning, UserWarning):
    """Package-specific user warning sub-category."""


class TernaryCodesError(Exception):
    """Exception baseclass. Raised for generic errors."""


class BudgetExceededError(TernaryCodesError):
    """Raised when an exhaustive computation is refused because its dimension is
    beyond the configured cap.

    Args:
        name: Name of the cap that was hit.
        required: The dimension the computation needs.
        limit: The current value of the cap.
    """

    def __init__(self, name: str, required: int, limit: int) -> None:
        super().__init__(
            f"Exhaustive computation needs m={required} but {name!r} is {limit} "
            f"(raise the cap to at least {required} to proceed)"
        )
        self.name = name
        self.required = required
        self.limit = limit


class InconsistencyError(TernaryCodesError):
    """Raised when two independent computations of the same quantity disagree, or
    an exact identity the engine relies on fails.
    """


class LinearFunctionError(TernaryCodesError):
    """Raised when a function coincides with a linear form ``w·x``, in which case
    the generic construction loses a dimension.

    Args:
        vector: The coincident ``w``.
    """

    def __init__(self, vector: F3Vector) -> None:
        super().__init__(
            f"Function coincides with the linear form w·x for w={vector} "
            "(the code would have dimension m)"
        )
        self.vector = vector


class MatrixFormatError(TernaryCodesError, ValueError):
    """Raised for malformed generator matrix text."""


class ParameterRangeError(TernaryCodesError, ValueError):
    """Raised when code parameters lie outside the supported range.

    The message always names the violated bound.
    """
