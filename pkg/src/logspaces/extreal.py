"""Non-negative extended reals: measure and norm values that may be infinite."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import LogSpaceError


@dataclass(frozen=True, order=True)
class ExtendedReal:
    """A value in [0, +inf].

    Finite values are non-negative floats; infinity is ``value == math.inf``.
    Ordering and equality are those of the underlying float, so
    ``finite(a) < INF`` always holds.
    """

    value: float

    def __post_init__(self):
        v = self.value
        if isinstance(v, int):
            object.__setattr__(self, "value", float(v))
            v = float(v)
        if not isinstance(v, float) or math.isnan(v) or v < 0.0:
            raise LogSpaceError(f"extended real must be >= 0 and not NaN, got {v!r}")

    @property
    def is_finite(self) -> bool:
        return not math.isinf(self.value)

    def __add__(self, other: "ExtendedReal") -> "ExtendedReal":
        return ExtendedReal(self.value + other.value)

    def __float__(self) -> float:
        return self.value

    def __repr__(self) -> str:
        return "ExtendedReal(inf)" if not self.is_finite else f"ExtendedReal({self.value!r})"


INF = ExtendedReal(math.inf)


def finite(v: float) -> ExtendedReal:
    """A finite extended real; rejects infinities as well as negatives and NaN."""
    if math.isinf(v):
        raise LogSpaceError("finite() got an infinite value")
    return ExtendedReal(v)


def ext_sum(values: Iterable[ExtendedReal]) -> ExtendedReal:
    """Sum with infinity absorbing; finite parts use compensated summation."""
    parts = []
    for v in values:
        if not v.is_finite:
            return INF
        parts.append(v.value)
    return ExtendedReal(math.fsum(parts))
