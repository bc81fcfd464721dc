"""Worst-case rounding-mode selection.

When the rounding mode in effect is only known to lie in some nonempty set
S, interval propagation must bound results across every mode in S.  The
selectors here reduce S to a single mode per bound: a mode whose result is
guaranteed to lie at-or-below (resp. at-or-above) the result under any
mode of S, with both extremes attained by members of S.

Toward-zero is never returned: it acts like rounding down on positive
values and like rounding up on negative ones, so the sign of the exact
result (for direct projections) or of the known bound and operand (for
inverse projections) picks the directed mode that mimics it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .softfloat import FloatVal, RoundingMode, exact_op

__all__ = [
    "RoundingModeSet",
    "sel_direct",
    "sel_inverse_left",
    "sel_inverse_right",
]

_TOKENS = {m.value: m for m in RoundingMode}


@dataclass(frozen=True)
class RoundingModeSet:
    """A nonempty subset of the four rounding modes."""

    modes: frozenset[RoundingMode]

    def __post_init__(self) -> None:
        if not self.modes:
            raise ValueError("rounding-mode set cannot be empty")

    @staticmethod
    def of(*modes: RoundingMode) -> RoundingModeSet:
        return RoundingModeSet(frozenset(modes))

    @staticmethod
    def all_modes() -> RoundingModeSet:
        return RoundingModeSet(frozenset(RoundingMode))

    @staticmethod
    def parse(tokens: list[str]) -> RoundingModeSet:
        modes = set()
        for t in tokens:
            mode = _TOKENS.get(t.strip())
            if mode is None:
                raise ValueError(f"unknown rounding mode {t.strip()!r}")
            modes.add(mode)
        return RoundingModeSet(frozenset(modes))

    def __contains__(self, m: RoundingMode) -> bool:
        return m in self.modes

    def __iter__(self):
        return iter(sorted(self.modes, key=lambda m: m.value))

    def __len__(self) -> int:
        return len(self.modes)

    def __str__(self) -> str:
        return "{" + ", ".join(m.value for m in self) + "}"


def _exact_sign(y: FloatVal, op: str, z: FloatVal) -> int | None:
    """Sign of the exact real y op z; None when the combination is invalid
    (the tables make the selector output irrelevant then, but the selector
    stays total by treating the sign tests as false)."""
    if y.is_nan or z.is_nan:
        return None
    v = exact_op(y.to_real(), op, z.to_real())
    if v is None:
        return None
    return (v > 0) - (v < 0)


def sel_direct(
    S: RoundingModeSet, y: FloatVal, op: str, z: FloatVal
) -> tuple[RoundingMode, RoundingMode]:
    """Modes (r_l, r_u) bounding y op z from below and above over S.

    Total even where y op z has no real value (invalid forms, division by
    zero): the result is then the same under every mode, so any defined
    answer is correct, and the sign tests simply fail.
    """
    sign = _exact_sign(y, op, z)

    if RoundingMode.DOWN in S or (RoundingMode.TO_ZERO in S and sign == 1):
        r_l = RoundingMode.DOWN
    elif RoundingMode.NEAREST in S:
        r_l = RoundingMode.NEAREST
    else:
        r_l = RoundingMode.UP

    if RoundingMode.UP in S or (RoundingMode.TO_ZERO in S and sign is not None and sign <= 0):
        r_u = RoundingMode.UP
    elif RoundingMode.NEAREST in S:
        r_u = RoundingMode.NEAREST
    else:
        r_u = RoundingMode.DOWN

    return r_l, r_u


def _rhat_l(S: RoundingModeSet, op: str, b: FloatVal) -> RoundingMode:
    neg_or_add_zero = b.signum < 0 or (b.is_finite and b.m == 0 and (b.sign < 0 or op in ("+", "-")))
    if RoundingMode.UP in S or (RoundingMode.TO_ZERO in S and neg_or_add_zero):
        return RoundingMode.UP
    if RoundingMode.NEAREST in S:
        return RoundingMode.NEAREST
    return RoundingMode.DOWN


def _rhat_u(S: RoundingModeSet, b: FloatVal) -> RoundingMode:
    nonneg = b.signum > 0 or (b.is_finite and b.m == 0 and b.sign > 0)
    if RoundingMode.DOWN in S or (RoundingMode.TO_ZERO in S and nonneg):
        return RoundingMode.DOWN
    if RoundingMode.NEAREST in S:
        return RoundingMode.NEAREST
    return RoundingMode.UP


def sel_inverse_left(
    S: RoundingModeSet, b: FloatVal, op: str, a: FloatVal
) -> tuple[RoundingMode, RoundingMode]:
    """Modes bounding the left operand's pre-image, given a bound b on the
    result and the known right operand a; swapped for antitone cases."""
    lo, up = _rhat_l(S, op, b), _rhat_u(S, b)
    if op in ("+", "-") or a.signum > 0 or (a.is_finite and a.m == 0 and a.sign > 0):
        return lo, up
    return up, lo


def sel_inverse_right(
    S: RoundingModeSet, b: FloatVal, op: str, a: FloatVal
) -> tuple[RoundingMode, RoundingMode]:
    """Like sel_inverse_left but for the right operand, whose direction of
    monotonicity flips for subtraction and division."""
    lo, up = _rhat_l(S, op, b), _rhat_u(S, b)
    a_nonneg = a.signum > 0 or (a.is_finite and a.m == 0 and a.sign > 0)
    if op == "+" or (op == "*" and a_nonneg) or (op == "/" and not a_nonneg):
        return lo, up
    return up, lo
