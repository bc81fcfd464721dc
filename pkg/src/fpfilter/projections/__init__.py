"""Interval projections for arithmetic constraints x = y op z.

Direct projections narrow the result variable and are optimal: both bounds
of the returned interval are reachable.  Inverse projections narrow an
operand and are correct over-approximations, tight in most corners but not
guaranteed optimal.  All of them intersect with the projected variable's
current interval before returning.
"""

from .addition import add_direct, add_inverse
from .common import BoundOutcome, OperandClass, PostFilter, ProjectionResult, classify, span
from .subtraction import sub_direct, sub_inverse_first, sub_inverse_second

__all__ = [
    "BoundOutcome",
    "OperandClass",
    "PostFilter",
    "ProjectionResult",
    "add_direct",
    "add_inverse",
    "classify",
    "span",
    "sub_direct",
    "sub_inverse_first",
    "sub_inverse_second",
]
