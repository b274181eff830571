"""Hard size limits for exhaustive enumeration and linear algebra.

Limits live in a context variable so they can be raised for a block of code
without touching global state::

    with resource_limits(max_enumeration_n=10):
        hilbert_series(10)
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, replace
from typing import Iterator

from .errors import ResourceGuardError


@dataclass(frozen=True)
class ResourceLimits:
    max_enumeration_n: int = 9
    max_slice_dim: int = 2_000_000
    max_character_n: int = 12
    max_trace_n: int = 6
    max_conjecture_n: int = 10


_LIMITS: contextvars.ContextVar[ResourceLimits] = contextvars.ContextVar(
    "shadowring_limits", default=ResourceLimits()
)


def current_limits() -> ResourceLimits:
    return _LIMITS.get()


@contextlib.contextmanager
def resource_limits(**overrides: int) -> Iterator[ResourceLimits]:
    token = _LIMITS.set(replace(_LIMITS.get(), **overrides))
    try:
        yield _LIMITS.get()
    finally:
        _LIMITS.reset(token)


def check_enumeration(n: int, what: str = "enumeration over S_n") -> None:
    limit = current_limits().max_enumeration_n
    if n > limit:
        raise ResourceGuardError(f"{what} refused for n={n} (limit n <= {limit})")


def check_limit(value: int, limit_name: str, what: str) -> None:
    limit = getattr(current_limits(), limit_name)
    if value > limit:
        raise ResourceGuardError(f"{what} refused: {value} exceeds {limit_name}={limit}")
