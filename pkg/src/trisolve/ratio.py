"""The componendo-dividendo ratio transform and its equivalence check.

For reals with b*d != 0, a + b != 0 and c + d != 0:

    a/b == c/d   if and only if   (a-b)/(a+b) == (c-d)/(c+d)
"""

import math

from .errors import DomainError

# Denominators at or below this magnitude are treated as zero to avoid
# overflow-driven garbage.
SUM_ZERO_TOL = 1e-300


def componendo(x: float, y: float) -> float:
    """(x - y) / (x + y); undefined when x + y vanishes."""
    if not (math.isfinite(x) and math.isfinite(y)):
        raise DomainError("componendo requires finite arguments")
    s = x + y
    if abs(s) <= SUM_ZERO_TOL:
        raise DomainError(f"componendo undefined: x + y = {s} for x={x}, y={y}")
    return (x - y) / s


def lemma_equivalence_check(a: float, b: float, c: float, d: float) -> tuple[float, float]:
    """Return (|a/b - c/d|, |componendo(a,b) - componendo(c,d)|).

    The equivalence asserts one entry is ~0 iff the other is; callers assert
    quantitative bounds on whichever side they derived.
    """
    if b == 0.0 or d == 0.0:
        raise DomainError("lemma hypotheses require b*d != 0")
    left = abs(a / b - c / d)
    right = abs(componendo(a, b) - componendo(c, d))
    return left, right
