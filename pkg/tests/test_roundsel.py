"""Worst-case rounding-mode selection.

The bracketing sweeps here cover addition exhaustively on the tiny format;
the acceptance suite repeats them for all four operators.  Ground truth
comes from the oracle's operation tables.
"""

from __future__ import annotations

import pytest

from fpfilter.roundsel import (
    RoundingModeSet,
    sel_direct,
    sel_inverse_left,
    sel_inverse_right,
)
from fpfilter.softfloat import FloatVal, RoundingMode, parse_value

import sweeps
from oracle import NAN_RANK

D, Z, U, N = (
    RoundingMode.DOWN,
    RoundingMode.TO_ZERO,
    RoundingMode.UP,
    RoundingMode.NEAREST,
)


class TestModeSet:
    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            RoundingModeSet.of()

    def test_parse_and_str(self):
        s = RoundingModeSet.parse(["up", " n "])
        assert U in s and N in s and len(s) == 2
        assert str(s) == "{n, up}"

    def test_parse_rejects_unknown(self):
        with pytest.raises(ValueError):
            RoundingModeSet.parse(["sideways"])

    def test_all_sets_enumeration(self):
        assert len(sweeps.ALL_MODE_SETS) == 15
        assert len(set(sweeps.ALL_MODE_SETS)) == 15
        assert RoundingModeSet.all_modes() in sweeps.ALL_MODE_SETS


class TestSingletons:
    """A one-mode set selects that mode, except toward-zero, which maps to
    the directed mode acting identically on the operands at hand."""

    def test_directed_and_nearest_singletons(self, tiny):
        vals = [parse_value(tiny, t) for t in ("-inf", "-0x1.8p1", "-0x0", "0x1p-3", "inf")]
        for r in (D, U, N):
            S = RoundingModeSet.of(r)
            for y in vals:
                for z in vals:
                    for op in "+-*/":
                        assert sel_direct(S, y, op, z) == (r, r)
                        assert sel_inverse_left(S, y, op, z) == (r, r)
                        assert sel_inverse_right(S, y, op, z) == (r, r)

    def test_toward_zero_singleton_reproduces_its_results(self, tiny, tiny_oracle):
        S = RoundingModeSet.of(Z)
        want = {op: tiny_oracle.table(op, Z) for op in "+-*/"}
        for i, y in enumerate(tiny_oracle.vals):
            for j, z in enumerate(tiny_oracle.vals):
                for op in "+-*/":
                    r_l, r_u = sel_direct(S, y, op, z)
                    assert Z not in (r_l, r_u)
                    assert tiny_oracle.table(op, r_l)[i, j] == want[op][i, j]
                    assert tiny_oracle.table(op, r_u)[i, j] == want[op][i, j]


class TestDirectSelector:
    def test_toward_zero_follows_the_exact_sign(self, tiny):
        S = RoundingModeSet.of(Z)
        two = parse_value(tiny, "0x1p1")
        # positive results: truncation rounds down; negative: rounds up
        assert sel_direct(S, two, "*", two) == (D, D)
        assert sel_direct(S, -two, "*", two) == (U, U)

    def test_both_directions_dominate(self, tiny):
        S = RoundingModeSet.of(D, U, N)
        two = parse_value(tiny, "0x1p1")
        assert sel_direct(S, two, "+", two) == (D, U)

    def test_invalid_form_is_total(self, tiny):
        S = RoundingModeSet.of(Z)
        inf = FloatVal.inf(tiny, 1)
        r_l, r_u = sel_direct(S, inf, "-", inf)
        assert Z not in (r_l, r_u)
        # division by zero takes the same totalized path
        r_l, r_u = sel_direct(S, two := parse_value(tiny, "0x1p1"), "/", FloatVal.zero(tiny, 1))
        assert Z not in (r_l, r_u)

    def test_addition_bracketing_exhaustive(self, tiny_oracle):
        for S in sweeps.ALL_MODE_SETS:
            assert sweeps.direct_selector_violations(tiny_oracle, "+", S) == []


class TestInverseSelector:
    def test_bound_sign_picks_the_direction_under_toward_zero(self, tiny):
        S = RoundingModeSet.of(Z)
        three = parse_value(tiny, "0x1.8p1")
        # truncation acted like rounding down on positive results, like
        # rounding up on negative ones; +0 sums may come from either side
        assert sel_inverse_left(S, three, "+", three) == (D, D)
        assert sel_inverse_left(S, -three, "+", three) == (U, U)
        assert sel_inverse_left(S, FloatVal.zero(tiny, 1), "+", three) == (U, D)

    def test_multiplier_sign_swaps_the_pair(self, tiny):
        S = RoundingModeSet.of(D)
        b = parse_value(tiny, "0x1p1")
        assert sel_inverse_left(S, b, "*", b) == (D, D)
        assert sel_inverse_left(S, b, "*", -b) == (D, D)
        S2 = RoundingModeSet.of(D, U)
        assert sel_inverse_left(S2, b, "*", b) == (U, D)
        assert sel_inverse_left(S2, b, "*", -b) == (D, U)

    def test_right_operand_swaps_for_subtraction(self, tiny):
        S = RoundingModeSet.of(D, U)
        b = parse_value(tiny, "0x1p1")
        assert sel_inverse_right(S, b, "+", b) == (U, D)
        assert sel_inverse_right(S, b, "-", b) == (D, U)

    def test_addition_preimage_bracketing_exhaustive(self, tiny_oracle):
        for S in sweeps.ALL_MODE_SETS:
            assert sweeps.inverse_selector_violations(tiny_oracle, "+", S, "left") == []
            assert sweeps.inverse_selector_violations(tiny_oracle, "+", S, "right") == []

    def test_multiplication_preimage_spot_sets(self, tiny_oracle):
        for S in (RoundingModeSet.of(N), RoundingModeSet.of(Z), RoundingModeSet.all_modes()):
            assert sweeps.inverse_selector_violations(tiny_oracle, "*", S, "left") == []
