"""
.. Utilities
"""

from __future__ import annotations

__all__ = (
    "cached",
    "check_budget",
    "chunk_ranges",
    "parallel_map",
)

import logging
import os
import warnings
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from functools import wraps
from threading import RLock

from typing_extensions import Any, ParamSpec, TypeVar

from .exceptions import BudgetExceededError, TernaryCodesUserWarning

logger = logging.getLogger(__name__)

# Type Variables and Aliases

P = ParamSpec("P")
T = TypeVar("T")
R = TypeVar("R")

# Decorator Functions


def no_redecorate(decor: Callable[P, T]) -> Callable[P, T]:
    """Prevents a decorator from re-decorating objects.

    Args:
        decor: The decorator to be wrapped.
    """
    if getattr(decor, "_no_redecorate_", False):
        return decor

    @wraps(decor)
    def no_redecorate_wrapper(*args: P.args, **kwargs: P.kwargs) -> T:
        obj = args[0]
        if not getattr(obj, f"_{decor.__name__}_", False):
            obj = decor(*args, **kwargs)
            setattr(obj, f"_{decor.__name__}_", True)
        return obj  # type: ignore[return-value]

    setattr(no_redecorate_wrapper, "_no_redecorate_", True)

    return no_redecorate_wrapper


@no_redecorate
def cached(func: Callable[P, T]) -> Callable[P, T]:
    """Enables return value caching.

    Args:
        func: The function to be wrapped.

    An *_invalidate_cache* function is set as an attribute of the returned wrapper
    which when called clears the cache, so that the next call actually calls the
    wrapped function.

    NOTE:
        It's thread-safe, i.e there is no race condition between calls to the same
        decorated object across threads of the same process.

        Only works when function arguments, if any, are hashable.
    """

    @wraps(func)
    def cached_wrapper(*args: P.args, **kwargs: P.kwargs) -> T:
        arguments = (args, tuple(kwargs.items()))
        with lock:
            try:
                return cache[arguments]
            except KeyError:
                return cache.setdefault(arguments, func(*args, **kwargs))

    def invalidate() -> None:
        with lock:
            logger.debug("Dropping %d cached values of %s", len(cache), func.__name__)
            cache.clear()

    cache: dict[tuple[Any, tuple[tuple[str, Any], ...]], T] = {}
    lock = RLock()
    setattr(cached_wrapper, "_invalidate_cache", invalidate)

    return cached_wrapper


# Non-decorators


def arg_type_error(arg: str, value: Any, got_extra: str = "") -> TypeError:
    return TypeError(
        f"Invalid type for {arg!r} (got: {type(value).__qualname__}; {got_extra})"
        if got_extra
        else f"Invalid type for {arg!r} (got: {type(value).__qualname__})"
    )


def arg_value_error(arg: str, value: Any, got_extra: str = "") -> ValueError:
    return ValueError(
        f"Invalid value for {arg!r} (got: {value!r}; {got_extra})"
        if got_extra
        else f"Invalid value for {arg!r} (got: {value!r})"
    )


def arg_value_error_msg(msg: str, value: Any, got_extra: str = "") -> ValueError:
    return ValueError(
        f"{msg} (got: {value!r}; {got_extra})"
        if got_extra
        else f"{msg} (got: {value!r})"
    )


def arg_value_error_range(arg: str, value: Any, got_extra: str = "") -> ValueError:
    return ValueError(
        f"{arg!r} out of range (got: {value!r}; {got_extra})"
        if got_extra
        else f"{arg!r} out of range (got: {value!r})"
    )


def check_budget(name: str, m: int) -> None:
    """Refuses an exhaustive computation over 𝔽₃^m beyond the named cap.

    Args:
        name: One of ``"brute_force_max_m"``, ``"minimality_max_m"`` or
          ``"spectrum_max_m"``.
        m: The dimension the computation needs.

    Raises:
        BudgetExceededError: *m* exceeds the cap.
    """
    limit = _budget[name]
    if m > limit:
        raise BudgetExceededError(name, m, limit)


def chunk_ranges(total: int, parts: int) -> list[range]:
    """Splits ``range(total)`` into at most *parts* contiguous, disjoint chunks.

    Chunk sizes differ by at most one and the chunks are returned in order, so
    concatenating them gives back ``range(total)``.
    """
    if total < 0:
        raise arg_value_error_range("total", total)
    if parts < 1:
        raise arg_value_error_range("parts", parts)

    parts = min(parts, total) or 1
    size, extra = divmod(total, parts)
    ranges = []
    start = 0
    for index in range(parts):
        stop = start + size + (index < extra)
        ranges.append(range(start, stop))
        start = stop

    return ranges


def parallel_map(
    func: Callable[[T], R], items: Iterable[T], jobs: int | None = None
) -> list[R]:
    """Maps *func* over *items*, optionally across worker processes.

    Args:
        func: A picklable (module-level) function.
        items: Picklable work items.
        jobs: Number of worker processes. ``None`` means the global default
          (see :py:func:`ternary_codes.set_default_jobs`); ``1`` runs serially in
          the calling process.

    Returns:
        The results, in the order of *items*, regardless of completion order.
    """
    items = list(items)
    if jobs is None:
        jobs = _default_jobs
    if jobs < 1:
        raise arg_value_error_range("jobs", jobs)

    if jobs == 1 or len(items) < 2:
        return [func(item) for item in items]

    logger.debug("Scheduling %d chunks over %d workers", len(items), jobs)
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as executor:
        return list(executor.map(func, items))


def _read_env_budget(name: str, default: int) -> int:
    env_name = f"TERNARY_CODES_{name.upper()}"
    raw = os.environ.get(env_name)
    if raw is None:
        return default
    try:
        value = int(raw)
        if value < 1:
            raise ValueError
    except ValueError:
        warnings.warn(
            f"Ignoring malformed value {raw!r} of {env_name}; using {default}",
            TernaryCodesUserWarning,
            stacklevel=2,
        )
        return default

    return value


def _sequence_repr(values: Sequence[Any]) -> str:
    return "(" + ",".join(map(str, values)) + ")"


# Variables

_BUDGET_DEFAULTS = {
    "brute_force_max_m": 7,
    "minimality_max_m": 6,
    "spectrum_max_m": 8,
}
_budget = {
    name: _read_env_budget(name, default) for name, default in _BUDGET_DEFAULTS.items()
}
_default_jobs = 1
