"""Shared machinery for the projection tables.

Every projection dispatches on a six-way classification of each operand
bound (infinities, signed zeros, nonzero negatives and positives), looks
up a case function, and intersects the resulting bound pair with the
projected variable's current interval.  A table cell can also prove the
constraint unsatisfiable; that outcome is carried as None in place of a
bound value, and turns the whole result empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, auto
from typing import Callable, TypeAlias

from ..intervals import FpInterval
from ..softfloat import FloatFormat, FloatVal, Kind, sym_le

__all__ = [
    "OperandClass",
    "BoundOutcome",
    "PostFilter",
    "ProjectionResult",
    "classify",
    "span",
    "negative_part",
    "positive_part",
]


class OperandClass(Enum):
    NEG_INF = auto()
    NEG = auto()
    NEG_ZERO = auto()
    POS_ZERO = auto()
    POS = auto()
    POS_INF = auto()


def classify(v: FloatVal) -> OperandClass:
    if v.kind is Kind.NEG_INF:
        return OperandClass.NEG_INF
    if v.kind is Kind.POS_INF:
        return OperandClass.POS_INF
    if v.m == 0:
        return OperandClass.NEG_ZERO if v.sign < 0 else OperandClass.POS_ZERO
    return OperandClass.NEG if v.sign < 0 else OperandClass.POS


# a bound computed from a table: either a value or proof of unsatisfiability
BoundOutcome: TypeAlias = "FloatVal | None"

# hook for an external narrowing filter (e.g. a maximum-ULP argument); it
# receives the computed interval and must return one containing the same
# solutions
PostFilter: TypeAlias = Callable[[FpInterval], FpInterval]


@dataclass(frozen=True)
class ProjectionResult:
    """A projected interval, already intersected with the variable's input
    domain; direct projections additionally promise their bounds are
    attained by concrete operand choices."""

    interval: FpInterval
    optimal: bool = False


def span(lo: BoundOutcome, hi: BoundOutcome) -> FpInterval:
    """[lo, hi] as an interval; empty when a side is unsatisfiable or the
    bounds cross (both happen at impossible operand corners)."""
    if lo is None or hi is None or not sym_le(lo, hi):
        return FpInterval.empty()
    return FpInterval(lo, hi)


def negative_part(a: FpInterval, fmt: FloatFormat) -> FpInterval:
    """The sub-interval at-or-below -0."""
    return a.meet(FpInterval(FloatVal.inf(fmt, -1), FloatVal.zero(fmt, -1)))


def positive_part(a: FpInterval, fmt: FloatFormat) -> FpInterval:
    """The sub-interval at-or-above +0."""
    return a.meet(FpInterval(FloatVal.zero(fmt, 1), FloatVal.inf(fmt, 1)))
