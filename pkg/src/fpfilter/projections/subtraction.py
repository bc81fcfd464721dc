"""Interval projections for the constraint x = y - z.

The direct projection narrows x and is optimal.  The two inverse
projections narrow y (where the relation reads y = x + z) and z (where it
reads z = y - x); both are correct over-approximations.  The difference is
antitone in z, so lower bounds pair the minuend's lower bound with the
subtrahend's upper bound and vice versa.
"""

from __future__ import annotations

from ..errfun import (
    EvalMode,
    Leaf,
    Scalar,
    bound_above,
    bound_below,
    err2_near_neg,
    err2_near_pos,
    half,
)
from ..intervals import FpInterval
from ..roundsel import RoundingModeSet, sel_direct, sel_inverse_left, sel_inverse_right
from ..softfloat import FloatVal, RoundingMode, fp_op, is_odd, pred, succ
from .common import (
    BoundOutcome,
    OperandClass as C,
    PostFilter,
    ProjectionResult,
    classify,
    span,
)

__all__ = ["sub_direct", "sub_inverse_first", "sub_inverse_second"]


def sub_direct(
    x: FpInterval, y: FpInterval, z: FpInterval, modes: RoundingModeSet
) -> ProjectionResult:
    """Refine x under x = y - z; y and z must be nonempty."""
    if y.is_empty or z.is_empty:
        raise ValueError("projection requires nonempty operand intervals")
    r_l, _ = sel_direct(modes, y.lo, "-", z.hi)
    _, r_u = sel_direct(modes, y.hi, "-", z.lo)
    lo = _diff_lo(y.lo, z.hi, r_l)
    hi = _diff_hi(y.hi, z.lo, r_u)
    return ProjectionResult(x.meet(span(lo, hi)), optimal=True)


def sub_inverse_first(
    x: FpInterval,
    y: FpInterval,
    z: FpInterval,
    modes: RoundingModeSet,
    mode: EvalMode = EvalMode.EXACT,
    post_filter: PostFilter | None = None,
) -> ProjectionResult:
    """Refine y under x = y - z; x and z must be nonempty."""
    if x.is_empty or z.is_empty:
        raise ValueError("projection requires nonempty operand intervals")
    r_l = sel_inverse_left(modes, x.lo, "-", z.lo)[0]
    r_u = sel_inverse_left(modes, x.hi, "-", z.hi)[1]
    lo = _minuend_lo(x.lo, z.lo, r_l, mode)
    hi = _minuend_hi(x.hi, z.hi, r_u, mode)
    interval = y.meet(span(lo, hi))
    if post_filter is not None:
        interval = interval.meet(post_filter(interval))
    return ProjectionResult(interval, optimal=False)


def sub_inverse_second(
    x: FpInterval,
    y: FpInterval,
    z: FpInterval,
    modes: RoundingModeSet,
    mode: EvalMode = EvalMode.EXACT,
    post_filter: PostFilter | None = None,
) -> ProjectionResult:
    """Refine z under x = y - z; x and y must be nonempty."""
    if x.is_empty or y.is_empty:
        raise ValueError("projection requires nonempty operand intervals")
    r_l = sel_inverse_right(modes, x.hi, "-", y.lo)[0]
    r_u = sel_inverse_right(modes, x.lo, "-", y.hi)[1]
    lo = _subtrahend_lo(y.lo, x.hi, r_l, mode)
    hi = _subtrahend_hi(y.hi, x.lo, r_u, mode)
    interval = z.meet(span(lo, hi))
    if post_filter is not None:
        interval = interval.meet(post_filter(interval))
    return ProjectionResult(interval, optimal=False)


def _exact_zero(fmt, r: RoundingMode) -> FloatVal:
    # the sign an exactly zero, opposite-signed sum takes under mode r
    return FloatVal.zero(fmt, -1 if r is RoundingMode.DOWN else 1)


# -- direct tables -------------------------------------------------------------


def _diff_lo(y: FloatVal, z: FloatVal, r: RoundingMode) -> FloatVal:
    """Smallest difference over pairs with y' at-or-above y, z' at-or-below z."""
    fmt = y.fmt
    cy, cz = classify(y), classify(z)
    if cy is C.POS_INF or cz is C.NEG_INF:
        return FloatVal.inf(fmt, 1)
    if cy is C.NEG_INF or cz is C.POS_INF:
        return FloatVal.inf(fmt, -1)
    if cy in (C.NEG, C.POS):
        return fp_op(fmt, y, "-", z, r) if cz in (C.NEG, C.POS) else y
    if cz in (C.NEG, C.POS):
        return -z
    if cy is C.NEG_ZERO and cz is C.POS_ZERO:
        # -0 - (+0) keeps its sign under every mode
        return FloatVal.zero(fmt, -1)
    if cy is C.POS_ZERO and cz is C.NEG_ZERO:
        return FloatVal.zero(fmt, 1)
    return _exact_zero(fmt, r)


def _diff_hi(y: FloatVal, z: FloatVal, r: RoundingMode) -> FloatVal:
    """Largest difference over pairs with y' at-or-below y, z' at-or-above z."""
    fmt = y.fmt
    cy, cz = classify(y), classify(z)
    if cy is C.NEG_INF or cz is C.POS_INF:
        return FloatVal.inf(fmt, -1)
    if cy is C.POS_INF or cz is C.NEG_INF:
        return FloatVal.inf(fmt, 1)
    if cy in (C.NEG, C.POS):
        return fp_op(fmt, y, "-", z, r) if cz in (C.NEG, C.POS) else y
    if cz in (C.NEG, C.POS):
        return -z
    if cy is C.NEG_ZERO and cz is C.POS_ZERO:
        return FloatVal.zero(fmt, -1)
    if cy is C.POS_ZERO and cz is C.NEG_ZERO:
        return FloatVal.zero(fmt, 1)
    return _exact_zero(fmt, r)


# -- first inverse: y = x + z --------------------------------------------------


def _minuend_lo(x: FloatVal, z: FloatVal, r: RoundingMode, mode: EvalMode) -> BoundOutcome:
    """Least y with y - z' in [x, ..] reachable for some z' at-or-above z."""
    fmt = x.fmt
    cx, cz = classify(x), classify(z)
    if cx is C.NEG_INF:
        return FloatVal.inf(fmt, -1)
    if cz is C.NEG_INF:
        # y - (-inf) is +inf whenever defined, so any y above -inf works
        return FloatVal.largest(fmt, -1)
    if cz is C.POS_INF:
        return None
    if cx is C.POS_INF:
        if cz is C.NEG:
            return _overflow_minuend_lo(z, r, mode)
        return FloatVal.inf(fmt, 1)
    if cx in (C.NEG, C.POS):
        return _minuend_lo_reals(x, z, r, mode) if cz in (C.NEG, C.POS) else x
    if cx is C.NEG_ZERO:
        return z if cz in (C.NEG, C.POS) else FloatVal.zero(fmt, -1)
    # x is +0
    if cz is C.NEG_ZERO:
        return FloatVal.zero(fmt, 1 if r is RoundingMode.DOWN else -1)
    down = r is RoundingMode.DOWN
    return succ(z) if down else z


def _minuend_hi(x: FloatVal, z: FloatVal, r: RoundingMode, mode: EvalMode) -> BoundOutcome:
    """Greatest y with y - z' in [.., x] reachable for some z' at-or-below z."""
    fmt = x.fmt
    cx, cz = classify(x), classify(z)
    if cx is C.POS_INF:
        return FloatVal.inf(fmt, 1)
    if cz is C.NEG_INF:
        return None
    if cz is C.POS_INF:
        return FloatVal.largest(fmt, 1)
    if cx is C.NEG_INF:
        if cz is C.POS:
            return _overflow_minuend_hi(z, r, mode)
        return FloatVal.inf(fmt, -1)
    if cx in (C.NEG, C.POS):
        return _minuend_hi_reals(x, z, r, mode) if cz in (C.NEG, C.POS) else x
    if cx is C.NEG_ZERO:
        if cz is C.POS_ZERO:
            # y = -0 against z = +0 gives -0 under every mode, so -0 stays in
            return FloatVal.zero(fmt, 1 if r is RoundingMode.DOWN else -1)
        return z if r is RoundingMode.DOWN else pred(z)
    # x is +0
    return z if cz in (C.NEG, C.POS) else FloatVal.zero(fmt, 1)


def _minuend_lo_reals(x: FloatVal, z: FloatVal, r: RoundingMode, mode: EvalMode) -> FloatVal:
    fmt = x.fmt
    if r is RoundingMode.NEAREST:
        gap = err2_near_neg(x)
        if gap == FloatVal.smallest(fmt, -1):
            if x == -z:
                return FloatVal.zero(fmt, -1)
            return fp_op(fmt, x, "+", z, RoundingMode.UP)
        e = Leaf(x) + (Scalar(half(gap), fmt) + Leaf(z))
        return bound_below(e, strict=is_odd(x), mode=mode)
    if r is RoundingMode.DOWN:
        if x == -z:
            return FloatVal.zero(fmt, -1)
        return fp_op(fmt, x, "+", z, RoundingMode.UP)
    return succ(fp_op(fmt, pred(x), "+", z, RoundingMode.DOWN))


def _minuend_hi_reals(x: FloatVal, z: FloatVal, r: RoundingMode, mode: EvalMode) -> FloatVal:
    fmt = x.fmt
    if r is RoundingMode.NEAREST:
        gap = err2_near_pos(x)
        if gap == FloatVal.smallest(fmt, 1):
            if x == -z:
                return FloatVal.zero(fmt, 1)
            return fp_op(fmt, x, "+", z, RoundingMode.DOWN)
        e = Leaf(x) + (Scalar(half(gap), fmt) + Leaf(z))
        return bound_above(e, strict=is_odd(x), mode=mode)
    if r is RoundingMode.UP:
        if x == -z:
            return FloatVal.zero(fmt, 1)
        return fp_op(fmt, x, "+", z, RoundingMode.DOWN)
    return pred(fp_op(fmt, succ(x), "+", z, RoundingMode.UP))


def _overflow_minuend_lo(z: FloatVal, r: RoundingMode, mode: EvalMode) -> FloatVal:
    """Least y with y - z' reaching +inf for some z' at-or-above z (negative)."""
    fmt = z.fmt
    if r is RoundingMode.DOWN:
        return FloatVal.inf(fmt, 1)
    if r is RoundingMode.UP:
        return succ(fp_op(fmt, FloatVal.largest(fmt, 1), "+", z, RoundingMode.DOWN))
    top = FloatVal.largest(fmt, 1)
    e = Leaf(top) + (Scalar(half(err2_near_pos(top)), fmt) + Leaf(z))
    return bound_below(e, strict=False, mode=mode)


def _overflow_minuend_hi(z: FloatVal, r: RoundingMode, mode: EvalMode) -> FloatVal:
    """Greatest y with y - z' reaching -inf for some z' at-or-below z (positive)."""
    fmt = z.fmt
    if r is RoundingMode.UP:
        return FloatVal.inf(fmt, -1)
    if r is RoundingMode.DOWN:
        return pred(fp_op(fmt, FloatVal.largest(fmt, -1), "+", z, RoundingMode.UP))
    bottom = FloatVal.largest(fmt, -1)
    e = Leaf(bottom) + (Scalar(half(err2_near_neg(bottom)), fmt) + Leaf(z))
    return bound_above(e, strict=False, mode=mode)


# -- second inverse: z = y - x (antitone in x) ---------------------------------


def _subtrahend_lo(y: FloatVal, x: FloatVal, r: RoundingMode, mode: EvalMode) -> BoundOutcome:
    """Least z with y' - z in [.., x] reachable for some y' at-or-above y.

    y is the known operand's lower bound, x the result's upper bound.
    """
    fmt = y.fmt
    cy, cx = classify(y), classify(x)
    if cx is C.POS_INF:
        return FloatVal.inf(fmt, -1)
    if cy is C.NEG_INF:
        return FloatVal.largest(fmt, -1)
    if cy is C.POS_INF:
        return None
    if cx is C.NEG_INF:
        if cy is C.NEG:
            return _overflow_subtrahend_lo(y, r, mode)
        return FloatVal.inf(fmt, 1)
    down = r is RoundingMode.DOWN
    if cy in (C.NEG, C.POS):
        if cx in (C.NEG, C.POS):
            return _subtrahend_lo_reals(y, x, r, mode)
        if cx is C.NEG_ZERO:
            return y if down else succ(y)
        return y
    if cy is C.NEG_ZERO:
        if cx in (C.NEG, C.POS):
            return -x
        if cx is C.NEG_ZERO:
            return FloatVal.zero(fmt, -1 if down else 1)
        return FloatVal.zero(fmt, -1)
    # y is +0
    if cx in (C.NEG, C.POS):
        return -x
    if cx is C.NEG_ZERO:
        return y if down else succ(y)
    return FloatVal.zero(fmt, -1)


def _subtrahend_hi(y: FloatVal, x: FloatVal, r: RoundingMode, mode: EvalMode) -> BoundOutcome:
    """Greatest z with y' - z in [x, ..] reachable for some y' at-or-below y."""
    fmt = y.fmt
    cy, cx = classify(y), classify(x)
    if cx is C.NEG_INF:
        return FloatVal.inf(fmt, 1)
    if cy is C.NEG_INF:
        return None
    if cy is C.POS_INF:
        return FloatVal.largest(fmt, 1)
    if cx is C.POS_INF:
        if cy is C.POS:
            return _overflow_subtrahend_hi(y, r, mode)
        return FloatVal.inf(fmt, -1)
    down = r is RoundingMode.DOWN
    if cy in (C.NEG, C.POS):
        if cx in (C.NEG, C.POS):
            return _subtrahend_hi_reals(y, x, r, mode)
        if cx is C.NEG_ZERO:
            return y
        return pred(y) if down else y
    if cy is C.NEG_ZERO:
        if cx in (C.NEG, C.POS):
            return -x
        if cx is C.NEG_ZERO:
            return FloatVal.zero(fmt, 1)
        return pred(y) if down else y
    # y is +0
    if cx in (C.NEG, C.POS):
        return -x
    if cx is C.NEG_ZERO:
        return FloatVal.zero(fmt, 1)
    return FloatVal.zero(fmt, -1 if down else 1)


def _subtrahend_lo_reals(y: FloatVal, x: FloatVal, r: RoundingMode, mode: EvalMode) -> FloatVal:
    fmt = y.fmt
    if r is RoundingMode.NEAREST:
        gap = err2_near_pos(x)
        if gap == FloatVal.smallest(fmt, 1):
            if x == y:
                return FloatVal.zero(fmt, -1)
            return fp_op(fmt, y, "-", x, RoundingMode.UP)
        e = Leaf(y) - (Leaf(x) + Scalar(half(gap), fmt))
        return bound_below(e, strict=is_odd(x), mode=mode)
    if r is RoundingMode.UP:
        if x == y:
            return FloatVal.zero(fmt, -1)
        return fp_op(fmt, y, "-", x, RoundingMode.UP)
    return succ(fp_op(fmt, y, "-", succ(x), RoundingMode.DOWN))


def _subtrahend_hi_reals(y: FloatVal, x: FloatVal, r: RoundingMode, mode: EvalMode) -> FloatVal:
    fmt = y.fmt
    if r is RoundingMode.NEAREST:
        gap = err2_near_neg(x)
        if gap == FloatVal.smallest(fmt, -1):
            if x == y:
                return FloatVal.zero(fmt, 1)
            return fp_op(fmt, y, "-", x, RoundingMode.DOWN)
        e = Leaf(y) - (Leaf(x) + Scalar(half(gap), fmt))
        return bound_above(e, strict=is_odd(x), mode=mode)
    if r is RoundingMode.UP:
        return pred(fp_op(fmt, y, "-", pred(x), RoundingMode.UP))
    if x == y:
        return FloatVal.zero(fmt, 1)
    return fp_op(fmt, y, "-", x, RoundingMode.DOWN)


def _overflow_subtrahend_lo(y: FloatVal, r: RoundingMode, mode: EvalMode) -> FloatVal:
    """Least z with y' - z reaching -inf for some y' at-or-above y (negative)."""
    fmt = y.fmt
    if r is RoundingMode.UP:
        return FloatVal.inf(fmt, 1)
    if r is RoundingMode.DOWN:
        return succ(fp_op(fmt, y, "+", FloatVal.largest(fmt, 1), RoundingMode.DOWN))
    top = FloatVal.largest(fmt, 1)
    e = Leaf(top) + (Scalar(half(err2_near_pos(top)), fmt) + Leaf(y))
    return bound_below(e, strict=False, mode=mode)


def _overflow_subtrahend_hi(y: FloatVal, r: RoundingMode, mode: EvalMode) -> FloatVal:
    """Greatest z with y' - z reaching +inf for some y' at-or-below y (positive)."""
    fmt = y.fmt
    if r is RoundingMode.DOWN:
        return FloatVal.inf(fmt, -1)
    if r is RoundingMode.UP:
        return pred(fp_op(fmt, y, "-", FloatVal.largest(fmt, 1), RoundingMode.UP))
    bottom = FloatVal.largest(fmt, -1)
    e = Leaf(bottom) + (Scalar(half(err2_near_neg(bottom)), fmt) + Leaf(y))
    return bound_above(e, strict=False, mode=mode)
