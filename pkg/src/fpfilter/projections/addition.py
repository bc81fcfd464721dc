"""Interval projections for the constraint x = y + z.

The direct projection narrows x from [y] and [z]; it is optimal, meaning
both bounds of the result are attained by concrete operand choices.  The
inverse projection narrows y from [x] and [z] (narrowing z is the same
call with the roles of y and z swapped).  Its bound tables reason about
the rounding error of the result bound: a sum that rounded to x must have
had an exact value within half a neighbor gap of x under round-to-nearest,
or within one gap under a directed mode, and those real thresholds are
then bounded by representable values.
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
from ..roundsel import RoundingModeSet, sel_direct, sel_inverse_left
from ..softfloat import FloatVal, RoundingMode, fp_op, is_odd, pred, succ
from .common import (
    BoundOutcome,
    OperandClass as C,
    PostFilter,
    ProjectionResult,
    classify,
    span,
)

__all__ = ["add_direct", "add_inverse"]


def add_direct(
    x: FpInterval, y: FpInterval, z: FpInterval, modes: RoundingModeSet
) -> ProjectionResult:
    """Refine x under x = y + z; y and z must be nonempty."""
    if y.is_empty or z.is_empty:
        raise ValueError("projection requires nonempty operand intervals")
    r_l, _ = sel_direct(modes, y.lo, "+", z.lo)
    _, r_u = sel_direct(modes, y.hi, "+", z.hi)
    lo = _sum_lo(y.lo, z.lo, r_l)
    hi = _sum_hi(y.hi, z.hi, r_u)
    return ProjectionResult(x.meet(span(lo, hi)), optimal=True)


def add_inverse(
    x: FpInterval,
    y: FpInterval,
    z: FpInterval,
    modes: RoundingModeSet,
    mode: EvalMode = EvalMode.EXACT,
    post_filter: PostFilter | None = None,
) -> ProjectionResult:
    """Refine y under x = y + z; x and z must be nonempty."""
    if x.is_empty or z.is_empty:
        raise ValueError("projection requires nonempty operand intervals")
    r_l = sel_inverse_left(modes, x.lo, "+", z.hi)[0]
    r_u = sel_inverse_left(modes, x.hi, "+", z.lo)[1]
    lo = _addend_lo(x.lo, z.hi, r_l, mode)
    hi = _addend_hi(x.hi, z.lo, r_u, mode)
    interval = y.meet(span(lo, hi))
    if post_filter is not None:
        interval = interval.meet(post_filter(interval))
    return ProjectionResult(interval, optimal=False)


def _exact_zero(fmt, r: RoundingMode) -> FloatVal:
    # the sign an exactly zero sum takes under mode r
    return FloatVal.zero(fmt, -1 if r is RoundingMode.DOWN else 1)


def _sum_lo(y: FloatVal, z: FloatVal, r: RoundingMode) -> FloatVal:
    """Smallest sum over pairs at-or-above (y, z), keyed on operand class."""
    fmt = y.fmt
    cy, cz = classify(y), classify(z)
    if cy is C.POS_INF or cz is C.POS_INF:
        # one operand pinned at +inf; against a -inf bound only NaN remains,
        # and +inf here crosses the -inf upper bound into emptiness
        return FloatVal.inf(fmt, 1)
    if cy is C.NEG_INF or cz is C.NEG_INF:
        return FloatVal.inf(fmt, -1)
    if cy in (C.NEG, C.POS):
        return fp_op(fmt, y, "+", z, r) if cz in (C.NEG, C.POS) else y
    if cz in (C.NEG, C.POS):
        return z
    return y if cy is cz else _exact_zero(fmt, r)


def _sum_hi(y: FloatVal, z: FloatVal, r: RoundingMode) -> FloatVal:
    """Largest sum over pairs at-or-below (y, z)."""
    fmt = y.fmt
    cy, cz = classify(y), classify(z)
    if cy is C.NEG_INF or cz is C.NEG_INF:
        return FloatVal.inf(fmt, -1)
    if cy is C.POS_INF or cz is C.POS_INF:
        return FloatVal.inf(fmt, 1)
    if cy in (C.NEG, C.POS):
        return fp_op(fmt, y, "+", z, r) if cz in (C.NEG, C.POS) else y
    if cz in (C.NEG, C.POS):
        return z
    return y if cy is cz else _exact_zero(fmt, r)


def _addend_lo(x: FloatVal, z: FloatVal, r: RoundingMode, mode: EvalMode) -> BoundOutcome:
    """Least y with y + z' in [x, ..] reachable for some z' at-or-below z.

    x is the result's lower bound, z the known operand's upper bound; None
    means no y works at all.
    """
    fmt = x.fmt
    cx, cz = classify(x), classify(z)
    if cx is C.NEG_INF:
        return FloatVal.inf(fmt, -1)
    if cz is C.NEG_INF:
        # z pinned at -inf: sums are -inf or NaN, never at-or-above x
        return None
    if cz is C.POS_INF:
        return FloatVal.largest(fmt, -1)
    if cx is C.POS_INF:
        if cz is C.POS:
            return _overflow_addend_lo(z, r, mode)
        # with z at-or-below zero no finite sum can overflow upward
        return FloatVal.inf(fmt, 1)
    if cx in (C.NEG, C.POS):
        return _addend_lo_reals(x, z, r, mode) if cz in (C.NEG, C.POS) else x
    if cx is C.NEG_ZERO:
        return -z if cz in (C.NEG, C.POS) else FloatVal.zero(fmt, -1)
    # x is +0: under rounding down an exact zero sum lands at -0, so y must
    # clear the mirror point by one step
    if cz is C.POS_ZERO:
        return FloatVal.zero(fmt, 1 if r is RoundingMode.DOWN else -1)
    neg = -z
    return succ(neg) if r is RoundingMode.DOWN else neg


def _addend_hi(x: FloatVal, z: FloatVal, r: RoundingMode, mode: EvalMode) -> BoundOutcome:
    """Greatest y with y + z' in [.., x] reachable for some z' at-or-above z."""
    fmt = x.fmt
    cx, cz = classify(x), classify(z)
    if cx is C.POS_INF:
        # no constraint from above; +inf itself may be reachable
        return FloatVal.inf(fmt, 1)
    if cz is C.NEG_INF:
        # y + (-inf) stays at-or-below any x except for the NaN at y = +inf
        return FloatVal.largest(fmt, 1)
    if cz is C.POS_INF:
        # z pinned at +inf: the sum is +inf for every y above -inf
        return None
    if cx is C.NEG_INF:
        if cz is C.NEG:
            return _overflow_addend_hi(z, r, mode)
        return FloatVal.inf(fmt, -1)
    if cx in (C.NEG, C.POS):
        return _addend_hi_reals(x, z, r, mode) if cz in (C.NEG, C.POS) else x
    if cx is C.NEG_ZERO:
        if cz is C.NEG_ZERO:
            return FloatVal.zero(fmt, 1 if r is RoundingMode.DOWN else -1)
        neg = -z
        return neg if r is RoundingMode.DOWN else pred(neg)
    # x is +0
    return -z if cz in (C.NEG, C.POS) else FloatVal.zero(fmt, 1)


def _addend_lo_reals(x: FloatVal, z: FloatVal, r: RoundingMode, mode: EvalMode) -> FloatVal:
    """Least y with y + z rounding at-or-above x, both bounds nonzero reals."""
    fmt = x.fmt
    if r is RoundingMode.NEAREST:
        gap = err2_near_neg(x)
        if gap == FloatVal.smallest(fmt, -1):
            # down to the midpoint of the tightest gap, every real in it
            # rounds back into range, so the threshold collapses to x - z
            if x == z:
                return FloatVal.zero(fmt, -1)
            return fp_op(fmt, x, "-", z, RoundingMode.UP)
        e = Leaf(x) + (Scalar(half(gap), fmt) - Leaf(z))
        return bound_below(e, strict=is_odd(x), mode=mode)
    if r is RoundingMode.DOWN:
        if x == z:
            return FloatVal.zero(fmt, -1)
        return fp_op(fmt, x, "-", z, RoundingMode.UP)
    return succ(fp_op(fmt, pred(x), "-", z, RoundingMode.DOWN))


def _addend_hi_reals(x: FloatVal, z: FloatVal, r: RoundingMode, mode: EvalMode) -> FloatVal:
    """Greatest y with y + z rounding at-or-below x."""
    fmt = x.fmt
    if r is RoundingMode.NEAREST:
        gap = err2_near_pos(x)
        if gap == FloatVal.smallest(fmt, 1):
            if x == z:
                return FloatVal.zero(fmt, 1)
            return fp_op(fmt, x, "-", z, RoundingMode.DOWN)
        e = Leaf(x) + (Scalar(half(gap), fmt) - Leaf(z))
        return bound_above(e, strict=is_odd(x), mode=mode)
    if r is RoundingMode.UP:
        if x == z:
            return FloatVal.zero(fmt, 1)
        return fp_op(fmt, x, "-", z, RoundingMode.DOWN)
    return pred(fp_op(fmt, succ(x), "-", z, RoundingMode.UP))


def _overflow_addend_lo(z: FloatVal, r: RoundingMode, mode: EvalMode) -> FloatVal:
    """Least y whose sum with some z' at-or-below z (positive) reaches +inf."""
    fmt = z.fmt
    if r is RoundingMode.DOWN:
        return FloatVal.inf(fmt, 1)
    if r is RoundingMode.UP:
        return succ(fp_op(fmt, FloatVal.largest(fmt, 1), "-", z, RoundingMode.DOWN))
    top = FloatVal.largest(fmt, 1)
    e = Leaf(top) + (Scalar(half(err2_near_pos(top)), fmt) - Leaf(z))
    return bound_below(e, strict=False, mode=mode)


def _overflow_addend_hi(z: FloatVal, r: RoundingMode, mode: EvalMode) -> FloatVal:
    """Greatest y whose sum with some z' at-or-above z (negative) reaches -inf."""
    fmt = z.fmt
    if r is RoundingMode.UP:
        return FloatVal.inf(fmt, -1)
    if r is RoundingMode.DOWN:
        return pred(fp_op(fmt, FloatVal.largest(fmt, -1), "-", z, RoundingMode.UP))
    bottom = FloatVal.largest(fmt, -1)
    e = Leaf(bottom) + (Scalar(half(err2_near_neg(bottom)), fmt) - Leaf(z))
    return bound_above(e, strict=False, mode=mode)
