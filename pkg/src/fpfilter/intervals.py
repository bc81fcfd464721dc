"""Intervals over the symbolic float order, plus the NaN flag domain.

An interval is either empty or a pair [lo, hi] of non-NaN values of one
format with lo preceding-or-equal hi in the symbolic order.  Because the
order distinguishes the signed zeros, [-0, -0], [-0, +0] and [+0, +0] are
three different intervals; projection tables rely on that distinction.

NaN admissibility is tracked separately as a two-point lattice: a variable
is either known not to be NaN or may be NaN.  A variable's whole domain is
the pair (interval, flag); it is unsatisfiable only when the interval is
empty and NaN is excluded too.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, auto

from .softfloat import FloatFormat, FloatVal, parse_value, sym_le, to_hex, total_count, unrank

__all__ = [
    "FpInterval",
    "NanFlag",
    "VarDomain",
    "parse_interval",
    "format_interval",
]


@dataclass(frozen=True)
class FpInterval:
    """Empty (both bounds None) or [lo, hi] with lo <= hi symbolically."""

    lo: FloatVal | None = None
    hi: FloatVal | None = None

    def __post_init__(self) -> None:
        if (self.lo is None) != (self.hi is None):
            raise ValueError("both bounds or neither")
        if self.lo is not None:
            if self.lo.is_nan or self.hi.is_nan:
                raise ValueError("interval bounds cannot be NaN")
            if self.lo.fmt != self.hi.fmt:
                raise ValueError("interval bounds must share a format")
            if not sym_le(self.lo, self.hi):
                raise ValueError(f"bounds out of order: {self.lo!r} > {self.hi!r}")

    @staticmethod
    def empty() -> FpInterval:
        return _EMPTY

    @staticmethod
    def bounds(lo: FloatVal, hi: FloatVal) -> FpInterval:
        return FpInterval(lo, hi)

    @staticmethod
    def point(v: FloatVal) -> FpInterval:
        return FpInterval(v, v)

    @staticmethod
    def full(fmt: FloatFormat) -> FpInterval:
        return FpInterval(unrank(fmt, 0), unrank(fmt, total_count(fmt) - 1))

    @property
    def is_empty(self) -> bool:
        return self.lo is None

    @property
    def is_point(self) -> bool:
        return self.lo is not None and self.lo.rank == self.hi.rank

    @property
    def count(self) -> int:
        """Number of member values."""
        if self.is_empty:
            return 0
        return self.hi.rank - self.lo.rank + 1

    def contains(self, v: FloatVal) -> bool:
        if self.is_empty or v.is_nan:
            return False
        return self.lo.rank <= v.rank <= self.hi.rank

    def members(self):
        if not self.is_empty:
            fmt = self.lo.fmt
            for r in range(self.lo.rank, self.hi.rank + 1):
                yield unrank(fmt, r)

    def meet(self, other: FpInterval) -> FpInterval:
        """Set intersection (always an interval)."""
        if self.is_empty or other.is_empty:
            return _EMPTY
        lo = self.lo if self.lo.rank >= other.lo.rank else other.lo
        hi = self.hi if self.hi.rank <= other.hi.rank else other.hi
        if lo.rank > hi.rank:
            return _EMPTY
        return FpInterval(lo, hi)

    def convex_union(self, other: FpInterval) -> FpInterval:
        """Smallest interval containing both."""
        if self.is_empty:
            return other
        if other.is_empty:
            return self
        lo = self.lo if self.lo.rank <= other.lo.rank else other.lo
        hi = self.hi if self.hi.rank >= other.hi.rank else other.hi
        return FpInterval(lo, hi)

    def split(self) -> tuple[FpInterval, FpInterval]:
        """Halve at the rank midpoint, so subnormal-dense regions split
        evenly; requires at least two members."""
        if self.count < 2:
            raise ValueError("can only split an interval with at least two values")
        fmt = self.lo.fmt
        mid = (self.lo.rank + self.hi.rank) // 2
        return (
            FpInterval(self.lo, unrank(fmt, mid)),
            FpInterval(unrank(fmt, mid + 1), self.hi),
        )

    def __str__(self) -> str:
        return format_interval(self)


_EMPTY = FpInterval(None, None)


class NanFlag(Enum):
    MAY_BE_NAN = auto()
    NOT_NAN = auto()

    def meet(self, other: NanFlag) -> NanFlag:
        if self is NanFlag.NOT_NAN or other is NanFlag.NOT_NAN:
            return NanFlag.NOT_NAN
        return NanFlag.MAY_BE_NAN


@dataclass(frozen=True)
class VarDomain:
    """The full domain of one variable: an interval plus NaN admissibility."""

    interval: FpInterval
    nan: NanFlag = NanFlag.MAY_BE_NAN

    @property
    def is_empty(self) -> bool:
        return self.interval.is_empty and self.nan is NanFlag.NOT_NAN

    @staticmethod
    def full(fmt: FloatFormat) -> VarDomain:
        return VarDomain(FpInterval.full(fmt), NanFlag.MAY_BE_NAN)


def format_interval(iv: FpInterval) -> str:
    if iv.is_empty:
        return "empty"
    return f"[{to_hex(iv.lo)}, {to_hex(iv.hi)}]"


def parse_interval(fmt: FloatFormat, text: str) -> FpInterval:
    """Parse `[lo, hi]` or `empty`; bounds use the literal syntax of
    parse_value and must come out ordered."""
    t = text.strip()
    if t == "empty":
        return FpInterval.empty()
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"malformed interval {text!r}")
    parts = t[1:-1].split(",")
    if len(parts) != 2:
        raise ValueError(f"malformed interval {text!r}")
    lo = parse_value(fmt, parts[0])
    hi = parse_value(fmt, parts[1])
    return FpInterval(lo, hi)
