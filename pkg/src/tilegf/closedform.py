"""Closed-form generating functions for k x 1 tilings of m x n strips.

Every constructor checks the (m, k) range its formula is proved for and
raises :class:`RegimeMismatch` outside it; there are no fallbacks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .errors import NonzeroConstant, OddArea, RegimeMismatch, RoundingUnsafe
from .gfcore import IntPolynomial, MPoly, MultiGF, RationalGF, poly_pow, poly_sub, substitute_power

THIN, EQUAL, MAIN, WIDE = "thin", "equal", "main", "wide"

KASTELEYN_MAX_SIDE = 16
KASTELEYN_RTOL = 1e-6


@dataclass(frozen=True)
class RegimeParams:
    k: int
    m: int

    def __post_init__(self):
        if self.k < 2:
            raise RegimeMismatch(f"tile length k={self.k} must be >= 2")
        if self.m < 1:
            raise RegimeMismatch(f"strip height m={self.m} must be >= 1")

    @property
    def regime(self) -> str:
        if self.m < self.k:
            return THIN
        if self.m == self.k:
            return EQUAL
        if self.m < 2 * self.k:
            return MAIN
        return WIDE


def regime_of(m: int, k: int) -> str:
    return RegimeParams(k, m).regime


def _require(m: int, k: int, *allowed: str) -> None:
    reg = regime_of(m, k)
    if reg not in allowed:
        raise RegimeMismatch(f"(m={m}, k={k}) is in the {reg} regime; need {'/'.join(allowed)}")


def _xk(k: int) -> IntPolynomial:
    return IntPolynomial.monomial(k)


def _one_minus(p: IntPolynomial) -> IntPolynomial:
    return poly_sub(IntPolynomial.constant(1), p)


def klarner_exists(m: int, n: int, k: int) -> bool:
    """An m x n board has a k x 1 tiling iff k divides m or n."""
    if min(m, n, k) < 0 or k == 0:
        raise ValueError("dimensions must be nonnegative and k positive")
    return m % k == 0 or n % k == 0


def kasteleyn_product(m: int, n: int, dps: int = 40) -> mpmath.mpf:
    """Unrounded domino product at ``dps`` decimal digits."""
    with mpmath.workdps(dps):
        total = mpmath.mpf(1)
        for j in range(1, (m + 1) // 2 + 1):
            cj = 4 * mpmath.cos(j * mpmath.pi / (m + 1)) ** 2
            for i in range(1, (n + 1) // 2 + 1):
                total *= cj + 4 * mpmath.cos(i * mpmath.pi / (n + 1)) ** 2
        return +total


def kasteleyn_count(m: int, n: int, *, max_side: int = KASTELEYN_MAX_SIDE, rtol: float = KASTELEYN_RTOL) -> int:
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    if (m * n) % 2:
        raise OddArea(f"{m}x{n} board has odd area")
    if max(m, n) > max_side:
        raise RoundingUnsafe(f"side exceeds float-safety bound {max_side}")
    value = kasteleyn_product(m, n)
    nearest = int(mpmath.nint(value))
    err = abs(value - nearest) / max(1, abs(nearest))
    if err > rtol:
        raise RoundingUnsafe(f"product {value} is {float(err):.3g} (relative) from {nearest}")
    return nearest


def kasteleyn_discrepancy(m: int, n: int) -> float:
    value = kasteleyn_product(m, n)
    nearest = mpmath.nint(value)
    return float(abs(value - nearest) / max(1, abs(nearest)))


def gf_thin(m: int, k: int) -> RationalGF:
    _require(m, k, THIN)
    return RationalGF(IntPolynomial.constant(1), _one_minus(_xk(k)))


def gf_rect_k_by_n(k: int) -> RationalGF:
    """Tilings of the k x n strip: ``1/(1 - x - x^k)``."""
    if k <= 1:
        raise RegimeMismatch("k must be > 1")
    den = IntPolynomial.constant(1) - IntPolynomial.monomial(1) - _xk(k)
    return RationalGF(IntPolynomial.constant(1), den)


def faultfree_count(m: int, ell: int, k: int) -> int:
    _require(m, k, MAIN)
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if ell == 1:
        return m - k + 2
    return (m - k + 1) * math.comb(k + ell - 3, k - 2)


def gf_faultfree(m: int, k: int) -> RationalGF:
    """Fault-free series ``x^k + (m-k+1) x^k / (1-x^k)^(k-1)`` over one denominator."""
    _require(m, k, MAIN)
    xk = _xk(k)
    base = poly_pow(_one_minus(xk), k - 1)
    num = xk * base + (m - k + 1) * xk
    return RationalGF(num, base)


def gf_main(m: int, k: int) -> RationalGF:
    _require(m, k, MAIN)
    one_minus = _one_minus(_xk(k))
    num = poly_pow(one_minus, k - 1)
    den = poly_pow(one_minus, k) - (m - k + 1) * _xk(k)
    return RationalGF(num, den)


def compose_h_from_a(a: RationalGF) -> RationalGF:
    """``1 / (1 - A)`` for a series without constant term."""
    if a.num[0] != 0:
        raise NonzeroConstant("A(0) must be 0")
    return RationalGF(a.den, a.den - a.num)


def gf_for_regime(m: int, k: int) -> RationalGF:
    """Plain k x 1 tiling series for any regime that has a closed form."""
    reg = regime_of(m, k)
    if reg == THIN:
        return gf_thin(m, k)
    if reg == EQUAL:
        return gf_rect_k_by_n(k)
    if reg == MAIN:
        return gf_main(m, k)
    raise RegimeMismatch(f"no closed form for m={m} >= 2k={2 * k}")


# bivariate / trivariate forms ------------------------------------------------

def _mx(k: int) -> MPoly:
    return MPoly.mono(n=k)


def gf_vertical(m: int, k: int) -> MultiGF:
    """x marks columns, y marks vertical tiles."""
    _require(m, k, MAIN)
    one_minus = 1 - _mx(k)
    num = one_minus ** (k - 1)
    den = one_minus ** k - MPoly.mono(n=k, r=k, c=m - k + 1)
    return MultiGF(num, den)


def faultfree_mixed_count(m: int, ell: int, k: int) -> int:
    _require(m, k, MAIN)
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if ell == 1:
        return 2 * m - 2 * k + 3
    return 2 ** (ell - 1) * (m - k + 1) * math.comb(ell + k - 3, ell - 1)


def gf_faultfree_mixed(m: int, k: int) -> RationalGF:
    """``(m-k+2) x^k + (m-k+1) x^k / (1-2x^k)^(k-1)``."""
    _require(m, k, MAIN)
    xk = _xk(k)
    base = poly_pow(_one_minus(2 * xk), k - 1)
    num = (m - k + 2) * xk * base + (m - k + 1) * xk
    return RationalGF(num, base)


def gf_mixed(m: int, k: int) -> RationalGF:
    """k x 1 and k x k tiles together."""
    _require(m, k, MAIN)
    xk = _xk(k)
    base = poly_pow(_one_minus(2 * xk), k - 1)
    den = base * _one_minus((m - k + 2) * xk) - (m - k + 1) * xk
    return RationalGF(base, den)


def gf_mixed_refined(m: int, k: int) -> MultiGF:
    """x columns, y vertical k x 1 tiles, z square tiles."""
    _require(m, k, MAIN)
    c = m - k + 1
    xk = _mx(k)
    base = (1 - xk - MPoly.mono(n=k, s=1)) ** (k - 1)
    den = (1 - xk - MPoly.mono(n=k, s=1, c=c)) * base - MPoly.mono(n=k, r=k, c=c)
    return MultiGF(base, den)


def gf_brick3d(m: int, k: int) -> RationalGF:
    """k x k x 1 bricks in an m x n x k box; same series as :func:`gf_mixed`."""
    _require(m, k, MAIN)
    return gf_mixed(m, k)


def gf_brick3d_refined(m: int, k: int) -> MultiGF:
    """y counts bricks parallel to the yz-plane, z those parallel to the xy-plane."""
    return gf_mixed_refined(m, k).power_substitute("z", k)
