"""Rounding-error functions and directed evaluation of real expressions.

The error functions measure the distance from a value to its neighbors.
The two round-to-nearest variants are twice the actual error bound: the
bound itself would be fmin/2 for the smallest values, which no format can
represent, while twice the bound is always a member of the format (or an
infinity).  Call sites therefore halve these terms symbolically, as exact
scalars, never through a floating-point division.

Expression trees pair those scalars with float constants under the real
operations + - * /.  They can be evaluated in two modes:

* Exact: the tree is evaluated over the rationals and rounded once, so
  the result is the correctly rounded value of the expression.
* Composed: every node is computed with one directed-rounded floating
  point operation, mirroring what an implementation without big-number
  support would do.  Results stay sound but may be one or more ulps wide.

eval_down(e) never exceeds the rounded-down exact value, and eval_up(e)
never falls below the rounded-up exact value; each also reports whether
it achieved the correctly rounded result, which callers use to pick the
sharper of two narrowing rules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, auto
from fractions import Fraction

from .softfloat import (
    ExactReal,
    FloatFormat,
    FloatVal,
    Kind,
    RoundingMode,
    exact_op,
    fp_op,
    pred,
    round_to_format,
    succ,
    sym_max,
    sym_min,
)

__all__ = [
    "err_down",
    "err_up",
    "err2_near_neg",
    "err2_near_pos",
    "half",
    "RealExpr",
    "Leaf",
    "Scalar",
    "Node",
    "EvalMode",
    "eval_down",
    "eval_up",
    "bound_below",
    "bound_above",
]


# -- error functions ----------------------------------------------------------


def _as_val(fmt: FloatFormat, d: ExactReal) -> FloatVal:
    if isinstance(d, float):
        return FloatVal.inf(fmt, 1 if d > 0 else -1)
    return FloatVal.from_fraction(fmt, d)


def err_down(x: FloatVal) -> FloatVal:
    """Distance succ(x) - x; +inf at -fmax's far end and at fmax."""
    if x.kind is Kind.POS_INF or x.is_nan:
        raise ValueError(f"err_down undefined for {x!r}")
    return _as_val(x.fmt, succ(x).to_real() - x.to_real())


def err_up(x: FloatVal) -> FloatVal:
    """Distance pred(x) - x, always at-or-below zero."""
    if x.kind is Kind.NEG_INF or x.is_nan:
        raise ValueError(f"err_up undefined for {x!r}")
    return _as_val(x.fmt, pred(x).to_real() - x.to_real())


def err2_near_neg(x: FloatVal) -> FloatVal:
    """Twice the magnitude of the worst downward nearest-rounding error."""
    if x.is_nan:
        raise ValueError("err2_near_neg undefined for NaN")
    if x.kind is Kind.NEG_INF:
        return FloatVal.inf(x.fmt, 1)
    if x.is_finite and x.sign < 0 and x.m == x.fmt.full_mant - 1 and x.e == x.fmt.emax:
        return _as_val(x.fmt, x.to_real() - succ(x).to_real())
    return _as_val(x.fmt, pred(x).to_real() - x.to_real())


def err2_near_pos(x: FloatVal) -> FloatVal:
    """Twice the magnitude of the worst upward nearest-rounding error."""
    if x.is_nan:
        raise ValueError("err2_near_pos undefined for NaN")
    if x.kind is Kind.POS_INF:
        return FloatVal.inf(x.fmt, -1)
    if x.is_finite and x.sign > 0 and x.m == x.fmt.full_mant - 1 and x.e == x.fmt.emax:
        return _as_val(x.fmt, x.to_real() - pred(x).to_real())
    return _as_val(x.fmt, succ(x).to_real() - x.to_real())


def half(v: FloatVal) -> ExactReal:
    """The exact scalar v/2, infinite when v is."""
    r = v.to_real()
    return r / 2 if isinstance(r, Fraction) else r


# -- expression trees ---------------------------------------------------------


class RealExpr:
    """Base of the small expression language; build with Leaf/Scalar/Node."""

    __slots__ = ()

    def __add__(self, other: RealExpr) -> RealExpr:
        return Node("+", self, other)

    def __sub__(self, other: RealExpr) -> RealExpr:
        return Node("-", self, other)

    def __mul__(self, other: RealExpr) -> RealExpr:
        return Node("*", self, other)

    def __truediv__(self, other: RealExpr) -> RealExpr:
        return Node("/", self, other)


@dataclass(frozen=True, slots=True)
class Leaf(RealExpr):
    value: FloatVal


@dataclass(frozen=True, slots=True)
class Scalar(RealExpr):
    """An exact constant that need not be representable, e.g. err/2."""

    value: ExactReal
    fmt: FloatFormat


@dataclass(frozen=True, slots=True)
class Node(RealExpr):
    op: str
    left: RealExpr
    right: RealExpr


class EvalMode(Enum):
    EXACT = auto()
    COMPOSED = auto()


def _fmt_of(e: RealExpr) -> FloatFormat:
    while isinstance(e, Node):
        e = e.left
    return e.value.fmt if isinstance(e, Leaf) else e.fmt


def _exact(e: RealExpr) -> ExactReal:
    if isinstance(e, Leaf):
        return e.value.to_real()
    if isinstance(e, Scalar):
        return e.value
    v = exact_op(_exact(e.left), e.op, _exact(e.right))
    if v is None:
        raise ValueError("expression has no defined real value")
    return v


def _round_ext(fmt: FloatFormat, v: ExactReal, r: RoundingMode) -> FloatVal:
    if isinstance(v, float):
        return FloatVal.inf(fmt, 1 if v > 0 else -1)
    return round_to_format(fmt, v, r)


def _pair(fmt: FloatFormat, e: RealExpr) -> tuple[FloatVal, FloatVal]:
    """Composed lower/upper evaluation, one rounded operation per node."""
    if isinstance(e, Leaf):
        return e.value, e.value
    if isinstance(e, Scalar):
        if isinstance(e.value, float):
            v = FloatVal.inf(fmt, 1 if e.value > 0 else -1)
            return v, v
        return (
            round_to_format(fmt, e.value, RoundingMode.DOWN),
            round_to_format(fmt, e.value, RoundingMode.UP),
        )
    la, ha = _pair(fmt, e.left)
    lb, hb = _pair(fmt, e.right)
    if e.op == "+":
        lo = fp_op(fmt, la, "+", lb, RoundingMode.DOWN)
        hi = fp_op(fmt, ha, "+", hb, RoundingMode.UP)
        return _widen_nan(fmt, lo, hi)
    if e.op == "-":
        lo = fp_op(fmt, la, "-", hb, RoundingMode.DOWN)
        hi = fp_op(fmt, ha, "-", lb, RoundingMode.UP)
        return _widen_nan(fmt, lo, hi)
    if e.op == "*":
        down = [fp_op(fmt, a, "*", b, RoundingMode.DOWN) for a in (la, ha) for b in (lb, hb)]
        up = [fp_op(fmt, a, "*", b, RoundingMode.UP) for a in (la, ha) for b in (lb, hb)]
    elif e.op == "/":
        if lb.is_nan or hb.is_nan or lb.signum <= 0 <= hb.signum:
            # denominator bounds straddle or touch zero: no finite bound
            return FloatVal.inf(fmt, -1), FloatVal.inf(fmt, 1)
        down = [fp_op(fmt, a, "/", b, RoundingMode.DOWN) for a in (la, ha) for b in (lb, hb)]
        up = [fp_op(fmt, a, "/", b, RoundingMode.UP) for a in (la, ha) for b in (lb, hb)]
    else:
        raise ValueError(f"unknown operator {e.op!r}")
    lo, hi = down[0], up[0]
    for v in down[1:]:
        lo = v if v.is_nan or lo.is_nan else sym_min(lo, v)
    for v in up[1:]:
        hi = v if v.is_nan or hi.is_nan else sym_max(hi, v)
    return _widen_nan(fmt, lo, hi)


def _widen_nan(fmt: FloatFormat, lo: FloatVal, hi: FloatVal) -> tuple[FloatVal, FloatVal]:
    # an invalid intermediate form (inf - inf, 0 * inf) gives no information
    if lo.is_nan:
        lo = FloatVal.inf(fmt, -1)
    if hi.is_nan:
        hi = FloatVal.inf(fmt, 1)
    return lo, hi


def eval_down(e: RealExpr, mode: EvalMode = EvalMode.EXACT) -> tuple[FloatVal, bool]:
    """A value at-or-below the rounded-down expression, and whether it is
    exactly the correctly rounded one."""
    fmt = _fmt_of(e)
    exact = _exact(e)
    if exact == 0:
        raise ValueError("directed evaluation requires a nonzero expression value")
    best = _round_ext(fmt, exact, RoundingMode.DOWN)
    if mode is EvalMode.EXACT:
        return best, True
    lo, _ = _pair(fmt, e)
    return lo, lo == best


def eval_up(e: RealExpr, mode: EvalMode = EvalMode.EXACT) -> tuple[FloatVal, bool]:
    """A value at-or-above the rounded-up expression, and whether it is
    exactly the correctly rounded one."""
    fmt = _fmt_of(e)
    exact = _exact(e)
    if exact == 0:
        raise ValueError("directed evaluation requires a nonzero expression value")
    best = _round_ext(fmt, exact, RoundingMode.UP)
    if mode is EvalMode.EXACT:
        return best, True
    _, hi = _pair(fmt, e)
    return hi, hi == best


def bound_below(e: RealExpr, strict: bool = False, mode: EvalMode = EvalMode.EXACT) -> FloatVal:
    """Sound floating-point lower bound for any float x with x >= e (or
    x > e when strict); sharper when the evaluation is exact."""
    if strict:
        lo, _ = eval_down(e, mode)
        if lo.kind is Kind.POS_INF:
            return lo
        return succ(lo)
    hi, hi_exact = eval_up(e, mode)
    if hi_exact:
        return hi
    lo, _ = eval_down(e, mode)
    return lo


def bound_above(e: RealExpr, strict: bool = False, mode: EvalMode = EvalMode.EXACT) -> FloatVal:
    """Sound floating-point upper bound for any float x with x <= e (or
    x < e when strict)."""
    if strict:
        hi, _ = eval_up(e, mode)
        if hi.kind is Kind.NEG_INF:
            return hi
        return pred(hi)
    lo, lo_exact = eval_down(e, mode)
    if lo_exact:
        return lo
    hi, _ = eval_up(e, mode)
    return hi
