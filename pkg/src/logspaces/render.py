"""Deterministic text formatting shared by reports and the CLI."""

from __future__ import annotations

import math


def format_real(x: float) -> str:
    """Shortest round-trip decimal; integral values drop the decimal point."""
    if math.isnan(x):
        raise ValueError("cannot render NaN")
    if math.isinf(x):
        return "inf"
    if x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return repr(float(x))
