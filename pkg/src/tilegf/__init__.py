"""Exact counting of k x 1 strip tilings and their generating functions."""

from ._jit import NUMBA_ENABLED
from .errors import (
    AlignmentAmbiguous,
    BudgetExceeded,
    NoRootInUnitInterval,
    NonzeroConstant,
    OddArea,
    OracleDisagreement,
    ParseError,
    RegimeMismatch,
    RoundingUnsafe,
    TilingError,
    UnnormalizedGF,
    ZeroConstantTerm,
)

__version__ = "0.1.0"
