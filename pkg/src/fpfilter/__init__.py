"""Interval constraint filtering for IEEE 754 binary floating-point arithmetic.

fpfilter narrows the variable domains of ternary constraints x = y op z,
where op is one of + - * /, evaluated under any nonempty set of IEEE 754
rounding modes.  It ships sound direct projections (refining x) that are
also optimal, sound inverse projections (refining y or z), a fixpoint
propagation engine with a NaN domain and labeling search, and detectors
for floating-point anomalies: overflow to infinity, NaN generation,
gradual/hard/soft underflow, and absorption.
"""

from .softfloat import (
    BINARY32,
    BINARY64,
    FloatFormat,
    FloatVal,
    RoundingMode,
    fp_op,
)
from .intervals import FpInterval, NanFlag, VarDomain
from .roundsel import RoundingModeSet

__all__ = [
    "BINARY32",
    "BINARY64",
    "FloatFormat",
    "FloatVal",
    "RoundingMode",
    "RoundingModeSet",
    "fp_op",
    "FpInterval",
    "NanFlag",
    "VarDomain",
]

__version__ = "0.1.0"
