"""Exponential growth rates from the smallest positive root of a denominator.

Root brackets are certified with exact rational evaluation, so the sign
change reported is never an artefact of floating-point cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NoRootInUnitInterval
from .gfcore import IntPolynomial, RationalGF, compress_power, series_expand

SCAN_POINTS = 1024

SIMPLE_ROOT_CAVEAT = (
    "simplicity and strict dominance of the root are not verified symbolically; "
    "compare per_k_growth with empirical_ratio"
)


@dataclass(frozen=True)
class RootBracket:
    lo: Fraction
    hi: Fraction

    @property
    def value(self) -> float:
        return float((self.lo + self.hi) / 2)

    @property
    def width(self) -> float:
        return float(self.hi - self.lo)


@dataclass(frozen=True)
class GrowthReport:
    rho: float
    rho_bracket: RootBracket
    per_k_growth: float
    per_column_growth: float
    empirical_ratio: float
    discrepancy: float
    n_max: int
    k: int
    caveat: str = SIMPLE_ROOT_CAVEAT

    def as_dict(self) -> dict:
        return {
            "rho": repr(self.rho),
            "rho_bracket": [str(self.rho_bracket.lo), str(self.rho_bracket.hi)],
            "rho_error_bound": repr(self.rho_bracket.width / 2),
            "per_k_growth": repr(self.per_k_growth),
            "per_column_growth": repr(self.per_column_growth),
            "empirical_ratio": repr(self.empirical_ratio),
            "discrepancy": repr(self.discrepancy),
            "n_max": str(self.n_max),
            "k": str(self.k),
            "caveat": self.caveat,
        }


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def dominant_root(den: IntPolynomial, tol: float = 1e-12, scan_points: int = SCAN_POINTS) -> RootBracket:
    """Smallest root of ``den`` in (0, 1], bracketed to width ``tol``."""
    if den[0] != 1:
        raise ValueError("denominator must satisfy den(0) = 1")
    tol_q = Fraction(tol)
    prev_t, prev_s = Fraction(0), 1
    for i in range(1, scan_points + 1):
        t = Fraction(i, scan_points)
        s = _sign(den(t))
        if s == 0:
            return RootBracket(t, t)
        if s != prev_s:
            lo, hi = prev_t, t
            break
        prev_t, prev_s = t, s
    else:
        raise NoRootInUnitInterval(f"no sign change of {den} on (0, 1]")

    s_lo = prev_s
    while hi - lo > tol_q:
        mid = (lo + hi) / 2
        s = _sign(den(mid))
        if s == 0:
            return RootBracket(mid, mid)
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return RootBracket(lo, hi)


def growth_report(gf: RationalGF, k: int, n_max: int, tol: float = 1e-12) -> GrowthReport:
    """Growth of the coefficients of ``gf``, a function of ``x**k``.

    ``per_k_growth`` is ``1/rho`` with rho the dominant root of the
    denominator in ``t = x**k``; ``empirical_ratio`` is
    ``c[n_max] / c[n_max - k]``.
    """
    if n_max % k or n_max < k:
        raise ValueError(f"n_max={n_max} must be a positive multiple of k={k}")
    den_t = compress_power(gf.den, k)
    bracket = dominant_root(den_t, tol)
    rho = bracket.value
    per_k = 1.0 / rho
    coeffs = series_expand(gf, n_max)
    prev = coeffs[n_max - k]
    ratio = Fraction(coeffs[n_max], prev) if prev else math.nan
    ratio = float(ratio)
    return GrowthReport(
        rho=rho,
        rho_bracket=bracket,
        per_k_growth=per_k,
        per_column_growth=per_k ** (1.0 / k),
        empirical_ratio=ratio,
        discrepancy=abs(ratio - per_k) / per_k,
        n_max=n_max,
        k=k,
    )
