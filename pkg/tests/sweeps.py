"""Exhaustive selector sweeps over a small format, shared between the unit
tests and the acceptance suite.

Each checker walks every operand pair of the format and returns a list of
violation messages; an empty list means the property holds everywhere.
Results come from the oracle's independently built operation tables, never
from the code under test.
"""

from __future__ import annotations

import random
from itertools import combinations

import numpy as np

from fpfilter.errfun import (
    EvalMode,
    Leaf,
    RealExpr,
    Scalar,
    bound_above,
    bound_below,
    err2_near_neg,
    err2_near_pos,
    err_down,
    err_up,
    eval_down,
    eval_up,
    half,
)
from fpfilter.roundsel import (
    RoundingModeSet,
    sel_direct,
    sel_inverse_left,
    sel_inverse_right,
)
from fpfilter.softfloat import ExactReal, FloatVal, RoundingMode, exact_op

from oracle import NAN_RANK, OPS, OracleTables

ALL_MODE_SETS: tuple[RoundingModeSet, ...] = tuple(
    RoundingModeSet.of(*combo)
    for k in range(1, 5)
    for combo in combinations(tuple(RoundingMode), k)
)


def direct_selector_violations(
    tabs: OracleTables, op: str, S: RoundingModeSet
) -> list[str]:
    """Check that on every operand pair the selected pair of modes brackets
    the results of all modes in S, and that both extremes are attained."""
    bad: list[str] = []
    member_tables = [tabs.table(op, r) for r in S]
    for i, y in enumerate(tabs.vals):
        for j, z in enumerate(tabs.vals):
            r_l, r_u = sel_direct(S, y, op, z)
            if RoundingMode.TO_ZERO in (r_l, r_u):
                bad.append(f"{op} {y!r},{z!r} S={S}: selected toward-zero")
                continue
            lo = int(tabs.table(op, r_l)[i, j])
            hi = int(tabs.table(op, r_u)[i, j])
            ranks = [int(t[i, j]) for t in member_tables]
            if NAN_RANK in (lo, hi, *ranks):
                # invalid forms are mode-independent: all NaN or none
                if not (lo == hi == NAN_RANK and set(ranks) == {NAN_RANK}):
                    bad.append(f"{op} {y!r},{z!r} S={S}: NaN disagreement")
                continue
            if not (lo <= min(ranks) and max(ranks) <= hi):
                bad.append(
                    f"{op} {y!r},{z!r} S={S}: bracket [{lo},{hi}] misses {ranks}"
                )
            elif lo not in ranks or hi not in ranks:
                bad.append(f"{op} {y!r},{z!r} S={S}: extreme not attained")
    return bad


def inverse_selector_violations(
    tabs: OracleTables, op: str, S: RoundingModeSet, side: str
) -> list[str]:
    """Check the pre-image bracketing of the inverse selectors: whenever
    x = known op_r unknown (side "right") or x = unknown op_r known (side
    "left") has solutions for some r in S, any solutions under the selected
    lower (resp. upper) mode reach at least as low (resp. high).

    The selected-mode pre-image itself can be empty while others are not
    (rounding up and down partition inexact results differently), so only
    the direction is checked here; the per-operator inverse projections are
    held to full soundness against the brute-force solution sets."""
    bad: list[str] = []
    sel = sel_inverse_left if side == "left" else sel_inverse_right
    axis = 0 if side == "left" else 1

    def line(table: np.ndarray, k: int) -> np.ndarray:
        return table[:, k] if axis == 0 else table[k, :]

    member_tables = [tabs.table(op, r) for r in S]
    for k, known in enumerate(tabs.vals):
        lines = [line(t, k) for t in member_tables]
        for x_rank in sorted({int(v) for ln in lines for v in np.unique(ln)}):
            if x_rank == NAN_RANK:
                continue
            sols = np.nonzero(np.vstack([ln == x_rank for ln in lines]).any(axis=0))[0]
            if sols.size == 0:
                continue
            x = tabs.vals[x_rank]
            r_l, r_u = sel(S, x, op, known)
            if RoundingMode.TO_ZERO in (r_l, r_u):
                bad.append(f"{op} {side} x={x!r} known={known!r}: toward-zero")
                continue
            lo_sols = np.nonzero(line(tabs.table(op, r_l), k) == x_rank)[0]
            hi_sols = np.nonzero(line(tabs.table(op, r_u), k) == x_rank)[0]
            if lo_sols.size and not lo_sols[0] <= sols[0]:
                bad.append(
                    f"{op} {side} x={x!r} known={known!r} S={S}: "
                    f"lower pre-image starts at {lo_sols[0]}, above {sols[0]}"
                )
            if hi_sols.size and not sols[-1] <= hi_sols[-1]:
                bad.append(
                    f"{op} {side} x={x!r} known={known!r} S={S}: "
                    f"upper pre-image ends at {hi_sols[-1]}, below {sols[-1]}"
                )
    return bad


def _shift_terms(tabs: OracleTables):
    """Per-rank values of x plus each error term, None where the term has
    no extended-real value."""
    value = [v.to_real() for v in tabs.vals]
    t_pred: list[ExactReal | None] = [None] * tabs.n
    t_succ: list[ExactReal | None] = [None] * tabs.n
    g_neg: list[ExactReal | None] = [None] * tabs.n
    g_pos: list[ExactReal | None] = [None] * tabs.n
    for i, x in enumerate(tabs.vals):
        if x.is_finite:
            t_pred[i] = value[i] + err_up(x).to_real()
            t_succ[i] = value[i] + err_down(x).to_real()
            g_neg[i] = value[i] + half(err2_near_neg(x))
            g_pos[i] = value[i] + half(err2_near_pos(x))
    return value, t_pred, t_succ, g_neg, g_pos


def _prefix_max(terms, keep):
    best = None
    out = []
    for i, t in enumerate(terms):
        if t is not None and keep(i) and (best is None or t > best):
            best = t
        out.append(best)
    return out


def _suffix_min(terms, keep):
    best = None
    out = [None] * len(terms)
    for i in range(len(terms) - 1, -1, -1):
        t = terms[i]
        if t is not None and keep(i) and (best is None or t < best):
            best = t
        out[i] = best
    return out


def real_shift_violations(tabs: OracleTables) -> list[str]:
    """Check, on every operand pair of every operator, the exact-real
    inequalities entailed by symbolic comparison with a rounded result:
    the rounded-down result never exceeds the exact one, comparison with
    the rounded-up result shifts by one neighbor gap, and comparison with
    the nearest-rounded result shifts by half an even-odd error term."""
    bad: list[str] = []
    vals = tabs.vals
    value, t_pred, t_succ, g_neg, g_pos = _shift_terms(tabs)

    def even(i: int) -> bool:
        return vals[i].is_finite and vals[i].m % 2 == 0

    def odd(i: int) -> bool:
        return vals[i].is_finite and vals[i].m % 2 == 1

    def anyx(i: int) -> bool:
        return True

    pm_val = _prefix_max(value, anyx)
    pm_pred = _prefix_max(t_pred, anyx)
    pm_gneg_even = _prefix_max(g_neg, even)
    pm_gneg_odd = _prefix_max(g_neg, odd)
    sm_val = _suffix_min(value, anyx)
    sm_succ = _suffix_min(t_succ, anyx)
    sm_gpos_even = _suffix_min(g_pos, even)
    sm_gpos_odd = _suffix_min(g_pos, odd)

    down, up, near = RoundingMode.DOWN, RoundingMode.UP, RoundingMode.NEAREST
    for op in OPS:
        t_down, t_up, t_near = (tabs.table(op, r) for r in (down, up, near))
        for i in range(tabs.n):
            for j in range(tabs.n):
                v = exact_op(value[i], op, value[j])
                if v is None:
                    continue
                where = f"{vals[i]!r} {op} {vals[j]!r}"
                b = int(t_down[i, j])
                if b != NAN_RANK:
                    if not pm_val[b] <= v:
                        bad.append(f"{where}: below rounded-down exceeds exact")
                    if sm_succ[b] is not None and not sm_succ[b] > v:
                        bad.append(f"{where}: above rounded-down within one gap")
                b = int(t_up[i, j])
                if b != NAN_RANK:
                    if pm_pred[b] is not None and not pm_pred[b] < v:
                        bad.append(f"{where}: below rounded-up within one gap")
                    if not sm_val[b] >= v:
                        bad.append(f"{where}: above rounded-up under exact")
                b = int(t_near[i, j])
                if b != NAN_RANK:
                    if pm_gneg_even[b] is not None and not pm_gneg_even[b] <= v:
                        bad.append(f"{where}: even half-shift below nearest")
                    if pm_gneg_odd[b] is not None and not pm_gneg_odd[b] < v:
                        bad.append(f"{where}: odd half-shift below nearest")
                    if sm_gpos_even[b] is not None and not sm_gpos_even[b] >= v:
                        bad.append(f"{where}: even half-shift above nearest")
                    if sm_gpos_odd[b] is not None and not sm_gpos_odd[b] > v:
                        bad.append(f"{where}: odd half-shift above nearest")
    return bad


def _expr_value(parts: list[FloatVal | ExactReal], ops: list[str]) -> ExactReal | None:
    """Exact left-to-right value of a small expression, None if undefined
    anywhere; computed here, not by the evaluation code under test."""
    v = parts[0].to_real() if isinstance(parts[0], FloatVal) else parts[0]
    for op, part in zip(ops, parts[1:]):
        w = part.to_real() if isinstance(part, FloatVal) else part
        if v is None or w is None:
            return None
        v = exact_op(v, op, w)
        if v is None:
            return None
    return v


def _as_expr(fmt, part: FloatVal | ExactReal) -> RealExpr:
    return Leaf(part) if isinstance(part, FloatVal) else Scalar(part, fmt)


def _sharp_ge(tabs: OracleTables, v: ExactReal, strict: bool) -> int | None:
    """Rank of the least float at-or-above (or strictly above) v."""
    for i, x in enumerate(tabs.vals):
        w = x.to_real()
        if w > v or (not strict and w == v):
            return i
    return None


def _sharp_le(tabs: OracleTables, v: ExactReal, strict: bool) -> int | None:
    for i in range(tabs.n - 1, -1, -1):
        w = tabs.vals[i].to_real()
        if w < v or (not strict and w == v):
            return i
    return None


def eval_bound_violations(
    tabs: OracleTables, expressions: list[tuple[list, list]]
) -> list[str]:
    """Check directed evaluation and the derived variable bounds on given
    (parts, ops) expressions: both evaluation modes must stay outside the
    correctly rounded values, exact mode must land on them, and the bounds
    must be sound for every float related to the expression's value (sharp
    in exact mode)."""
    bad: list[str] = []
    fmt = tabs.fmt
    for parts, ops in expressions:
        v = _expr_value(parts, ops)
        expr = _as_expr(fmt, parts[0])
        for op, part in zip(ops, parts[1:]):
            expr = _node(op, expr, _as_expr(fmt, part))
        where = f"{parts} {ops}"
        if v is None or v == 0:
            try:
                eval_down(expr)
            except ValueError:
                continue
            bad.append(f"{where}: undefined or zero value not rejected")
            continue
        rd = _round_rank(tabs, v, RoundingMode.DOWN)
        ru = _round_rank(tabs, v, RoundingMode.UP)
        for mode in (EvalMode.EXACT, EvalMode.COMPOSED):
            lo, lo_exact = eval_down(expr, mode)
            hi, hi_exact = eval_up(expr, mode)
            if lo.rank > rd or hi.rank < ru:
                bad.append(f"{where} [{mode.name}]: evaluation inside rounded value")
            if (lo_exact and lo.rank != rd) or (hi_exact and hi.rank != ru):
                bad.append(f"{where} [{mode.name}]: exactness flag wrong")
            if mode is EvalMode.EXACT and not (lo_exact and hi_exact):
                bad.append(f"{where}: exact mode not exact")
            for strict in (False, True):
                below = bound_below(expr, strict=strict, mode=mode)
                above = bound_above(expr, strict=strict, mode=mode)
                ge = _sharp_ge(tabs, v, strict)
                le = _sharp_le(tabs, v, strict)
                if ge is not None and below.rank > ge:
                    bad.append(f"{where} [{mode.name} strict={strict}]: lower bound unsound")
                if le is not None and above.rank < le:
                    bad.append(f"{where} [{mode.name} strict={strict}]: upper bound unsound")
                if mode is EvalMode.EXACT:
                    if ge is not None and below.rank != ge:
                        bad.append(f"{where} [strict={strict}]: lower bound not sharp")
                    if le is not None and above.rank != le:
                        bad.append(f"{where} [strict={strict}]: upper bound not sharp")
    return bad


def _round_rank(tabs: OracleTables, v: ExactReal, r: RoundingMode) -> int:
    if isinstance(v, float):
        return tabs.n - 1 if v > 0 else 0
    return tabs.round(v, r).rank


def _node(op: str, left: RealExpr, right: RealExpr) -> RealExpr:
    return {"+": left.__add__, "-": left.__sub__, "*": left.__mul__, "/": left.__truediv__}[
        op
    ](right)


def expression_corpus(tabs: OracleTables, depth2: int, seed: int) -> list[tuple[list, list]]:
    """Every one-operation expression over the format, plus a seeded sample
    of two-operation shapes, some involving exact half-error scalars."""
    vals = tabs.vals
    out: list[tuple[list, list]] = []
    for op in OPS:
        for y in vals:
            for z in vals:
                out.append(([y, z], [op]))
    rng = random.Random(seed)
    finite = [v for v in vals if v.is_finite]
    for _ in range(depth2):
        a, b, c = (rng.choice(vals) for _ in range(3))
        o1, o2 = (rng.choice(OPS) for _ in range(2))
        out.append(([a, b, c], [o1, o2]))
        x = rng.choice(finite)
        err = half(err2_near_neg(x) if rng.random() < 0.5 else err2_near_pos(x))
        if not isinstance(err, float):
            out.append(([a, err, c], [o1, o2]))
    return out


# -- projection sweeps ---------------------------------------------------------


def interval_corpus(tabs: OracleTables, wide: int, seed: int):
    """All degenerate intervals of the format plus a seeded sample of wider
    ones, as (lo_rank, hi_rank, FpInterval) triples."""
    from fpfilter.intervals import FpInterval

    points = [(i, i, FpInterval.point(v)) for i, v in enumerate(tabs.vals)]
    rng = random.Random(seed)
    out = list(points)
    for _ in range(wide):
        i = rng.randrange(tabs.n)
        j = rng.randrange(tabs.n)
        if i > j:
            i, j = j, i
        out.append((i, j, FpInterval(tabs.vals[i], tabs.vals[j])))
    return out


def direct_projection_violations(tabs, op, fn, S, pairs) -> list[str]:
    """fn(full, Y, Z, S) must coincide with the brute-force hull of the
    reachable results for every (Y, Z) in pairs, and claim optimality."""
    from fpfilter.intervals import FpInterval

    full = FpInterval.full(tabs.fmt)
    bad: list[str] = []
    for (_, _, yiv), (_, _, ziv) in pairs:
        res = fn(full, yiv, ziv, S)
        want = tabs.brute_direct(full, yiv, ziv, op, S)
        if res.interval != want:
            bad.append(f"{op} S={S} Y={yiv} Z={ziv}: got {res.interval}, want {want}")
        if not res.optimal:
            bad.append(f"{op} S={S} Y={yiv} Z={ziv}: optimality flag dropped")
        if len(bad) > 20:
            break
    return bad


def inverse_projection_violations(tabs, op, fn, S, refines, pairs, mode) -> list[str]:
    """fn must keep every operand value that can produce a result inside X.

    refines says which operand fn narrows; pairs supplies (X, K) where K is
    the other, known operand's interval.  The projected variable starts at
    the full interval, so any excluded solution is a soundness bug.
    """
    from fpfilter.intervals import FpInterval

    full = FpInterval.full(tabs.fmt)
    bad: list[str] = []
    for (_, _, xiv), (_, _, kiv) in pairs:
        if refines == "y":
            res = fn(xiv, full, kiv, S, mode)
            sols = tabs.solution_operands(xiv, full, kiv, op, S, "y")
        else:
            res = fn(xiv, kiv, full, S, mode)
            sols = tabs.solution_operands(xiv, kiv, full, op, S, "z")
        iv = res.interval
        if sols.size:
            lo, hi = int(sols[0]), int(sols[-1])
            if iv.is_empty or not (iv.contains(tabs.vals[lo]) and iv.contains(tabs.vals[hi])):
                bad.append(
                    f"{op}/{refines} S={S} [{mode.name}] X={xiv} K={kiv}: "
                    f"{iv} drops solutions ranks [{lo}, {hi}]"
                )
        if res.optimal:
            bad.append(f"{op}/{refines} S={S} X={xiv} K={kiv}: inverse claims optimality")
        if len(bad) > 20:
            break
    return bad
