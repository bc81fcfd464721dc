"""Software model of parametric IEEE 754 binary floating-point formats.

A format F(p, emax) contains all signed zero and non-zero numbers of the
form (-1)^s * 2^e * m where emin <= e <= emax (emin = 1 - emax) and the
mantissa m, 0 <= m < 2, has p binary digits; plus the infinities and the
quiet/signaling NaNs.  Every finite member is an integral multiple of the
smallest subnormal magnitude fmin = 2^(emin+1-p).

Values are immutable and carry their format.  Arithmetic is performed
exactly over rationals and then rounded, so results are bit-exact and
reproducible for any format, including tiny test formats that hardware
cannot represent.

The module also provides the symbolic total order on non-NaN values, in
which -0 strictly precedes +0, together with rank/unrank conversions that
number the values from -inf to +inf.  Ranks back interval splitting and
exhaustive enumeration.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum, IntEnum, auto
from fractions import Fraction

__all__ = [
    "FloatFormat",
    "BINARY32",
    "BINARY64",
    "Kind",
    "FloatVal",
    "Ordering",
    "RoundingMode",
    "ExactReal",
    "sym_cmp",
    "sym_le",
    "sym_lt",
    "sym_min",
    "sym_max",
    "succ",
    "pred",
    "is_even",
    "is_odd",
    "round_to_format",
    "fp_op",
    "exact_op",
    "enumerate_all",
    "total_count",
    "to_hex",
    "parse_value",
]

# Exact extended-real scalar: finite values are Fraction, the only float
# values ever stored are +-math.inf (mixing Fraction with an infinity
# yields an infinite float, which loses nothing).
ExactReal = Fraction | float


class Kind(IntEnum):
    NEG_INF = auto()
    FINITE = auto()
    POS_INF = auto()
    QNAN = auto()
    SNAN = auto()


class Ordering(Enum):
    LT = auto()
    EQ = auto()
    GT = auto()
    UNORDERED = auto()


class RoundingMode(Enum):
    """The four IEEE 754 rounding-direction attributes."""

    DOWN = "down"      # toward minus infinity
    TO_ZERO = "zero"   # toward zero
    UP = "up"          # toward plus infinity
    NEAREST = "n"      # to nearest, ties to even


def _pow2(k: int) -> Fraction:
    if k >= 0:
        return Fraction(1 << k)
    return Fraction(1, 1 << -k)


@dataclass(frozen=True)
class FloatFormat:
    """A binary format F(p, emax) with p significant digits."""

    p: int
    emax: int
    emin: int = field(init=False, compare=False, repr=False)
    fmin: Fraction = field(init=False, compare=False, repr=False)
    fnor_min: Fraction = field(init=False, compare=False, repr=False)
    fmax: Fraction = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.p < 2 or self.emax < 1:
            raise ValueError(f"invalid format parameters p={self.p}, emax={self.emax}")
        emin = 1 - self.emax
        object.__setattr__(self, "emin", emin)
        object.__setattr__(self, "fmin", _pow2(emin + 1 - self.p))
        object.__setattr__(self, "fnor_min", _pow2(emin))
        object.__setattr__(self, "fmax", _pow2(self.emax) * (2 - _pow2(1 - self.p)))

    @property
    def half_mant(self) -> int:
        """Integral significand of the smallest normal: 2^(p-1)."""
        return 1 << (self.p - 1)

    @property
    def full_mant(self) -> int:
        """One past the largest integral significand: 2^p."""
        return 1 << self.p

    def __str__(self) -> str:
        return f"F({self.p},{self.emax})"


BINARY32 = FloatFormat(p=24, emax=127)
BINARY64 = FloatFormat(p=53, emax=1023)


@dataclass(frozen=True)
class FloatVal:
    """One member of a format.

    Finite values are canonical triples (sign, e, m) with integral
    significand m: normal values have half_mant <= m < full_mant and
    emin <= e <= emax, zeros and subnormals have e = emin and
    0 <= m < half_mant.  The represented magnitude is m * 2^(e+1-p).
    """

    fmt: FloatFormat
    kind: Kind
    sign: int = 1
    e: int = 0
    m: int = 0

    def __post_init__(self) -> None:
        if self.kind is Kind.FINITE:
            f = self.fmt
            if self.sign not in (-1, 1):
                raise ValueError("sign must be -1 or +1")
            if self.e == f.emin:
                ok = 0 <= self.m < f.full_mant
            else:
                ok = f.emin < self.e <= f.emax and f.half_mant <= self.m < f.full_mant
            if not ok:
                raise ValueError(f"non-canonical finite value e={self.e}, m={self.m}")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(fmt: FloatFormat, sign: int = 1) -> FloatVal:
        return FloatVal(fmt, Kind.FINITE, sign, fmt.emin, 0)

    @staticmethod
    def inf(fmt: FloatFormat, sign: int = 1) -> FloatVal:
        return FloatVal(fmt, Kind.POS_INF if sign > 0 else Kind.NEG_INF)

    @staticmethod
    def qnan(fmt: FloatFormat) -> FloatVal:
        return FloatVal(fmt, Kind.QNAN)

    @staticmethod
    def snan(fmt: FloatFormat) -> FloatVal:
        return FloatVal(fmt, Kind.SNAN)

    @staticmethod
    def finite(fmt: FloatFormat, sign: int, e: int, m: int) -> FloatVal:
        return FloatVal(fmt, Kind.FINITE, sign, e, m)

    @staticmethod
    def largest(fmt: FloatFormat, sign: int = 1) -> FloatVal:
        return FloatVal(fmt, Kind.FINITE, sign, fmt.emax, fmt.full_mant - 1)

    @staticmethod
    def smallest(fmt: FloatFormat, sign: int = 1) -> FloatVal:
        """The subnormal of least magnitude, signed."""
        return FloatVal(fmt, Kind.FINITE, sign, fmt.emin, 1)

    @staticmethod
    def from_fraction(fmt: FloatFormat, v: Fraction | int) -> FloatVal:
        """Exact conversion; raises if v is not representable in fmt."""
        v = Fraction(v)
        if v == 0:
            return FloatVal.zero(fmt)
        w = round_to_format(fmt, v, RoundingMode.NEAREST)
        if w.kind is not Kind.FINITE or w.to_fraction() != v:
            raise ValueError(f"{v} is not representable in {fmt}")
        return w

    # -- predicates --------------------------------------------------------

    @property
    def is_nan(self) -> bool:
        return self.kind in (Kind.QNAN, Kind.SNAN)

    @property
    def is_inf(self) -> bool:
        return self.kind in (Kind.NEG_INF, Kind.POS_INF)

    @property
    def is_finite(self) -> bool:
        return self.kind is Kind.FINITE

    @property
    def is_zero(self) -> bool:
        return self.kind is Kind.FINITE and self.m == 0

    @property
    def is_subnormal(self) -> bool:
        return self.kind is Kind.FINITE and 0 < self.m < self.fmt.half_mant

    @property
    def is_normal(self) -> bool:
        return self.kind is Kind.FINITE and self.m >= self.fmt.half_mant

    @property
    def signum(self) -> int:
        """-1, 0 or +1 by numeric value; zeros give 0, infinities their sign."""
        if self.kind is Kind.NEG_INF:
            return -1
        if self.kind is Kind.POS_INF:
            return 1
        if self.is_nan:
            raise ValueError("signum of NaN")
        return 0 if self.m == 0 else self.sign

    @property
    def sign_bit(self) -> int:
        """-1 or +1 including the sign of zeros and infinities."""
        if self.kind is Kind.NEG_INF:
            return -1
        if self.kind is Kind.POS_INF:
            return 1
        if self.is_nan:
            raise ValueError("sign of NaN")
        return self.sign

    # -- value views -------------------------------------------------------

    def to_fraction(self) -> Fraction:
        if self.kind is not Kind.FINITE:
            raise ValueError("only finite values have a rational value")
        return self.sign * self.m * _pow2(self.e + 1 - self.fmt.p)

    def to_real(self) -> ExactReal:
        if self.kind is Kind.NEG_INF:
            return -math.inf
        if self.kind is Kind.POS_INF:
            return math.inf
        return self.to_fraction()

    @property
    def rank(self) -> int:
        """Position in the symbolic order, 0 for -inf up to total_count-1."""
        k = _top_index(self.fmt)
        if self.kind is Kind.NEG_INF:
            return 0
        if self.kind is Kind.POS_INF:
            return 2 * k + 3
        if self.is_nan:
            raise ValueError("NaN has no rank")
        idx = _nonneg_index(self.fmt, self.e, self.m)
        if self.sign < 0:
            return 1 + (k - idx)
        return k + 2 + idx

    def __neg__(self) -> FloatVal:
        if self.kind is Kind.NEG_INF:
            return FloatVal(self.fmt, Kind.POS_INF)
        if self.kind is Kind.POS_INF:
            return FloatVal(self.fmt, Kind.NEG_INF)
        if self.is_nan:
            return self
        return FloatVal(self.fmt, Kind.FINITE, -self.sign, self.e, self.m)

    def __repr__(self) -> str:
        return f"<{to_hex(self)} in {self.fmt}>"


def _nonneg_index(fmt: FloatFormat, e: int, m: int) -> int:
    if e == fmt.emin:
        return m
    return (e - fmt.emin) * fmt.half_mant + m


def _top_index(fmt: FloatFormat) -> int:
    return (fmt.emax - fmt.emin) * fmt.half_mant + fmt.full_mant - 1


def total_count(fmt: FloatFormat) -> int:
    """Number of non-NaN values in the format, both zeros included."""
    return 2 * _top_index(fmt) + 4


def unrank(fmt: FloatFormat, r: int) -> FloatVal:
    """Inverse of FloatVal.rank."""
    k = _top_index(fmt)
    if not 0 <= r <= 2 * k + 3:
        raise ValueError(f"rank {r} out of range for {fmt}")
    if r == 0:
        return FloatVal(fmt, Kind.NEG_INF)
    if r == 2 * k + 3:
        return FloatVal(fmt, Kind.POS_INF)
    if r <= k + 1:
        sign, idx = -1, k - (r - 1)
    else:
        sign, idx = 1, r - (k + 2)
    if idx < fmt.full_mant:
        return FloatVal(fmt, Kind.FINITE, sign, fmt.emin, idx)
    e = fmt.emin + idx // fmt.half_mant - 1
    m = idx - (e - fmt.emin) * fmt.half_mant
    return FloatVal(fmt, Kind.FINITE, sign, e, m)


def enumerate_all(fmt: FloatFormat):
    """All non-NaN values in strictly increasing symbolic order."""
    for r in range(total_count(fmt)):
        yield unrank(fmt, r)


# -- order ------------------------------------------------------------------


def sym_cmp(a: FloatVal, b: FloatVal) -> Ordering:
    """Compare in the symbolic order; NaN is unordered with everything."""
    if a.fmt != b.fmt:
        raise ValueError("cannot compare values from different formats")
    if a.is_nan or b.is_nan:
        return Ordering.UNORDERED
    ra, rb = a.rank, b.rank
    if ra < rb:
        return Ordering.LT
    if ra > rb:
        return Ordering.GT
    return Ordering.EQ


def sym_le(a: FloatVal, b: FloatVal) -> bool:
    return sym_cmp(a, b) in (Ordering.LT, Ordering.EQ)


def sym_lt(a: FloatVal, b: FloatVal) -> bool:
    return sym_cmp(a, b) is Ordering.LT


def sym_min(a: FloatVal, b: FloatVal) -> FloatVal:
    return a if sym_le(a, b) else b


def sym_max(a: FloatVal, b: FloatVal) -> FloatVal:
    return b if sym_le(a, b) else a


# -- neighbors and parity -----------------------------------------------------


def succ(x: FloatVal) -> FloatVal:
    """Next value up in the symbolic order; undefined for +inf and NaN."""
    if x.kind is Kind.POS_INF or x.is_nan:
        raise ValueError(f"succ undefined for {x!r}")
    if x.kind is Kind.NEG_INF:
        return FloatVal.largest(x.fmt, -1)
    f = x.fmt
    if x.m == 0:
        return FloatVal.smallest(f, 1)
    if x.sign > 0:
        m, e = x.m + 1, x.e
        if m == f.full_mant:
            if e == f.emax:
                return FloatVal.inf(f, 1)
            m, e = f.half_mant, e + 1
        return FloatVal(f, Kind.FINITE, 1, e, m)
    m, e = x.m - 1, x.e
    if m < f.half_mant and e > f.emin:
        m, e = f.full_mant - 1, e - 1
    return FloatVal(f, Kind.FINITE, -1, e, m)


def pred(x: FloatVal) -> FloatVal:
    """Mirror of succ: pred(x) = -succ(-x); undefined for -inf and NaN."""
    if x.kind is Kind.NEG_INF or x.is_nan:
        raise ValueError(f"pred undefined for {x!r}")
    return -succ(-x)


def is_even(x: FloatVal) -> bool:
    """Parity of the last mantissa digit; zeros count as even."""
    if not x.is_finite:
        raise ValueError(f"parity undefined for {x!r}")
    return x.m % 2 == 0


def is_odd(x: FloatVal) -> bool:
    return not is_even(x)


# -- rounding -----------------------------------------------------------------


def _floor_log2(a: Fraction) -> int:
    # largest e with 2^e <= a, for a > 0
    e = a.numerator.bit_length() - a.denominator.bit_length()
    if _pow2(e) > a:
        e -= 1
    elif _pow2(e + 1) <= a:
        e += 1
    return e


def _floor_pos(fmt: FloatFormat, a: Fraction) -> tuple[int, int]:
    """Largest canonical (e, m) with value <= a, for 0 < a; caps at fmax."""
    if a >= fmt.fmax:
        return fmt.emax, fmt.full_mant - 1
    if a < fmt.fnor_min:
        e = fmt.emin
    else:
        e = _floor_log2(a)
    scaled = a / _pow2(e + 1 - fmt.p)
    return e, scaled.numerator // scaled.denominator


def _ceil_pos(fmt: FloatFormat, a: Fraction) -> tuple[int, int] | None:
    """Smallest canonical (e, m) with value >= a, for 0 < a <= fmax; None = +inf."""
    if a > fmt.fmax:
        return None
    e, m = _floor_pos(fmt, a)
    if m * _pow2(e + 1 - fmt.p) == a:
        return e, m
    m += 1
    if m == fmt.full_mant:
        if e == fmt.emax:
            return None
        e, m = e + 1, fmt.half_mant
    return e, m


def round_to_format(fmt: FloatFormat, v: Fraction, r: RoundingMode) -> FloatVal:
    """Round a nonzero rational into the format.

    Zero is excluded because the sign of an exactly zero result depends on
    the operation that produced it; fp_op decides those signs itself.
    Nonzero results that round to zero magnitude keep the sign of v.
    """
    v = Fraction(v)
    if v == 0:
        raise ValueError("round_to_format requires a nonzero value")
    if v < 0:
        flipped = {RoundingMode.UP: RoundingMode.DOWN, RoundingMode.DOWN: RoundingMode.UP}
        return -round_to_format(fmt, -v, flipped.get(r, r))

    if r is RoundingMode.TO_ZERO:
        r = RoundingMode.DOWN

    if r is RoundingMode.DOWN:
        e, m = _floor_pos(fmt, v)
        return FloatVal(fmt, Kind.FINITE, 1, e, m)
    if r is RoundingMode.UP:
        em = _ceil_pos(fmt, v)
        if em is None:
            return FloatVal.inf(fmt, 1)
        return FloatVal(fmt, Kind.FINITE, 1, em[0], em[1])

    # to nearest, ties to even; beyond fmax the cut is at 2^emax * (2 - 2^-p)
    if v > fmt.fmax:
        cut = _pow2(fmt.emax) * (2 - _pow2(-fmt.p))
        if v < cut:
            return FloatVal.largest(fmt, 1)
        return FloatVal.inf(fmt, 1)
    e_lo, m_lo = _floor_pos(fmt, v)
    lo = FloatVal(fmt, Kind.FINITE, 1, e_lo, m_lo)
    lo_val = lo.to_fraction()
    if lo_val == v:
        return lo
    hi = succ(lo)
    d_lo = v - lo_val
    d_hi = hi.to_fraction() - v
    if d_lo < d_hi or (d_lo == d_hi and lo.m % 2 == 0):
        return lo
    return hi


# -- arithmetic ---------------------------------------------------------------


def exact_op(y: ExactReal, op: str, z: ExactReal) -> ExactReal | None:
    """Exact extended-real arithmetic; None for the IEEE-invalid forms
    (inf - inf, 0 * inf, 0 / 0, inf / inf) and for division by zero."""
    try:
        if op == "+":
            v = y + z
        elif op == "-":
            v = y - z
        elif op == "*":
            v = y * z
        elif op == "/":
            if z == 0:
                return None
            v = y / z
        else:
            raise ValueError(f"unknown operator {op!r}")
    except ZeroDivisionError:
        return None
    if isinstance(v, float):
        if math.isnan(v):
            return None
        if math.isinf(v):
            return v
        # finite float arises only from finite / inf, which is exactly 0
        return Fraction(0)
    return v


def fp_op(fmt: FloatFormat, y: FloatVal, op: str, z: FloatVal, r: RoundingMode) -> FloatVal:
    """Correctly rounded y op z with full IEEE special-case behavior.

    Invalid operations return a quiet NaN; signaling NaN operands are
    quieted.  Exactly zero sums and differences are signed +0 except under
    rounding toward minus infinity, zero products and quotients take the
    XOR of the operand signs.
    """
    if y.fmt != fmt or z.fmt != fmt:
        raise ValueError("operands must belong to the target format")
    if y.is_nan or z.is_nan:
        return FloatVal.qnan(fmt)

    if op in ("+", "-"):
        zz = -z if op == "-" else z
        if y.is_inf or zz.is_inf:
            if y.is_inf and zz.is_inf and y.kind != zz.kind:
                return FloatVal.qnan(fmt)
            return y if y.is_inf else zz
        exact = y.to_fraction() + zz.to_fraction()
        if exact == 0:
            if y.is_zero and zz.is_zero and y.sign == zz.sign:
                return FloatVal.zero(fmt, y.sign)
            return FloatVal.zero(fmt, -1 if r is RoundingMode.DOWN else 1)
        return round_to_format(fmt, exact, r)

    sign = y.sign_bit * z.sign_bit
    if op == "*":
        if y.is_inf or z.is_inf:
            if y.is_zero or z.is_zero:
                return FloatVal.qnan(fmt)
            return FloatVal.inf(fmt, sign)
        if y.is_zero or z.is_zero:
            return FloatVal.zero(fmt, sign)
        return round_to_format(fmt, y.to_fraction() * z.to_fraction(), r)

    if op == "/":
        if y.is_inf and z.is_inf:
            return FloatVal.qnan(fmt)
        if y.is_zero and z.is_zero:
            return FloatVal.qnan(fmt)
        if y.is_inf:
            return FloatVal.inf(fmt, sign)
        if z.is_inf:
            return FloatVal.zero(fmt, sign)
        if z.is_zero:
            return FloatVal.inf(fmt, sign)
        if y.is_zero:
            return FloatVal.zero(fmt, sign)
        return round_to_format(fmt, y.to_fraction() / z.to_fraction(), r)

    raise ValueError(f"unknown operator {op!r}")


# -- text ---------------------------------------------------------------------

_HEX_RE = re.compile(
    r"""^(?P<sign>[+-]?)0[xX]
        (?P<int>[0-9a-fA-F]+)
        (?:\.(?P<frac>[0-9a-fA-F]*))?
        (?:[pP](?P<exp>[+-]?\d+))?$""",
    re.VERBOSE,
)

_DEC_RE = re.compile(
    r"""^(?P<sign>[+-]?)
        (?P<int>\d+)
        (?:\.(?P<frac>\d*))?
        (?:[eE](?P<exp>[+-]?\d+))?$""",
    re.VERBOSE,
)


def to_hex(v: FloatVal) -> str:
    """Canonical C99 hexadecimal literal: zeros as 0x0/-0x0, trimmed
    mantissa digits, no + in the exponent, e.g. 13.0 -> 0x1.ap3."""
    if v.kind is Kind.QNAN or v.kind is Kind.SNAN:
        return "nan"
    if v.kind is Kind.NEG_INF:
        return "-inf"
    if v.kind is Kind.POS_INF:
        return "+inf"
    s = "-" if v.sign < 0 else ""
    if v.m == 0:
        return s + "0x0"
    m, e2 = v.m, v.e + 1 - v.fmt.p
    tz = (m & -m).bit_length() - 1
    m >>= tz
    e2 += tz
    bits = m.bit_length() - 1
    exp = e2 + bits  # value = 1.frac * 2^exp
    frac = m - (1 << bits)
    if bits == 0:
        return f"{s}0x1p{exp}"
    pad = -bits % 4
    digits = format(frac << pad, "x").rjust((bits + pad) // 4, "0").rstrip("0")
    if not digits:
        return f"{s}0x1p{exp}"
    return f"{s}0x1.{digits}p{exp}"


def parse_value(fmt: FloatFormat, text: str, r: RoundingMode = RoundingMode.NEAREST) -> FloatVal:
    """Parse a hexfloat or decimal literal or one of the tokens
    -inf/+inf/inf/-0/+0/nan; inexact literals are rounded with r."""
    t = text.strip()
    low = t.lower()
    if low in ("inf", "+inf", "infinity", "+infinity"):
        return FloatVal.inf(fmt, 1)
    if low in ("-inf", "-infinity"):
        return FloatVal.inf(fmt, -1)
    if low in ("nan", "+nan", "-nan"):
        return FloatVal.qnan(fmt)

    m = _HEX_RE.match(t)
    base = 16
    if m is None:
        m = _DEC_RE.match(t)
        if m is None:
            raise ValueError(f"cannot parse {text!r} as a floating-point literal")
        base = 10
    sign = -1 if m.group("sign") == "-" else 1
    int_part = int(m.group("int"), base)
    frac_digits = m.group("frac") or ""
    exp = int(m.group("exp") or 0)
    v = Fraction(int_part)
    if frac_digits:
        v += Fraction(int(frac_digits, base), base ** len(frac_digits))
    v *= _pow2(exp) if base == 16 else Fraction(10) ** exp
    if v == 0:
        return FloatVal.zero(fmt, sign)
    return round_to_format(fmt, sign * v, r)
