"""Exact polynomial and rational generating-function arithmetic.

Coefficients are Python ints throughout, so nothing overflows. Univariate
polynomials are dense; the multivariate ones used for the refined counts
are sparse maps keyed by exponent triples ``(n, r, s)`` in ``(x, y, z)``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .errors import UnnormalizedGF, ZeroConstantTerm

__all__ = [
    "IntPolynomial",
    "RationalGF",
    "LinearRecurrence",
    "MPoly",
    "MultiGF",
    "TruncatedMSeries",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_pow",
    "substitute_power",
    "compress_power",
    "series_expand",
    "recurrence_from_gf",
    "mseries_expand",
]


def _strip(coeffs: Iterable[int]) -> Tuple[int, ...]:
    c = [int(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; ``coeffs[i]`` multiplies ``x**i``."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        """Highest exponent with a nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __call__(self, x):
        # Horner; works for int, Fraction and float arguments alike.
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        return poly_add(self, _as_poly(other))

    __radd__ = __add__

    def __sub__(self, other):
        return poly_sub(self, _as_poly(other))

    def __rsub__(self, other):
        return poly_sub(_as_poly(other), self)

    def __mul__(self, other):
        return poly_mul(self, _as_poly(other))

    __rmul__ = __mul__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __pow__(self, e: int):
        return poly_pow(self, e)

    def truncate(self, order: int) -> "IntPolynomial":
        return IntPolynomial(self.coeffs[: order + 1])

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}{'*' if mono else ''}{mono}"
            parts.append(("-" if c < 0 else "+") + term)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


def _as_poly(p) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    if isinstance(p, int):
        return IntPolynomial((p,))
    raise TypeError(f"cannot coerce {type(p).__name__} to IntPolynomial")


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    return IntPolynomial(p[i] + q[i] for i in range(n))


def poly_sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    return IntPolynomial(p[i] - q[i] for i in range(n))


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if p.is_zero() or q.is_zero():
        return IntPolynomial()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return IntPolynomial(out)


def poly_pow(p: IntPolynomial, e: int) -> IntPolynomial:
    if e < 0:
        raise ValueError("negative exponent")
    result = IntPolynomial((1,))
    base = p
    while e:
        if e & 1:
            result = poly_mul(result, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return result


def substitute_power(p: IntPolynomial, k: int) -> IntPolynomial:
    """Return ``p(x**k)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = [0] * (k * max(p.degree, 0) + 1)
    for i, c in enumerate(p.coeffs):
        out[k * i] = c
    return IntPolynomial(out)


def compress_power(p: IntPolynomial, k: int) -> IntPolynomial:
    """Inverse of :func:`substitute_power`: write ``p(x)`` as ``q(x**k)``.

    Raises ValueError if some exponent is not a multiple of ``k``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    for i, c in enumerate(p.coeffs):
        if c and i % k:
            raise ValueError(f"x^{i} has nonzero coefficient; not a function of x^{k}")
    return IntPolynomial(p.coeffs[::k])


@dataclass(frozen=True)
class RationalGF:
    """``num / den`` with ``den(0) == 1``.

    Construction normalizes: if ``den(0) == -1`` both parts are negated, any
    other constant term is rejected. No common factors are cancelled, so
    compare two instances with :meth:`equals` (cross-multiplication) rather
    than ``==``.
    """

    num: IntPolynomial
    den: IntPolynomial

    def __post_init__(self):
        c0 = self.den[0]
        if c0 == -1:
            object.__setattr__(self, "num", -self.num)
            object.__setattr__(self, "den", -self.den)
        elif c0 != 1:
            raise UnnormalizedGF(f"denominator constant term is {c0}, expected +-1")

    def normalized(self) -> "RationalGF":
        return RationalGF(self.num, self.den)

    def equals(self, other: "RationalGF") -> bool:
        return poly_mul(self.num, other.den) == poly_mul(other.num, self.den)

    def series(self, order: int) -> List[int]:
        return series_expand(self, order)

    def __str__(self):
        return f"({self.num}) / ({self.den})"


def series_expand(gf: RationalGF, order: int) -> List[int]:
    """Coefficients ``c_0 .. c_order`` of the power series of ``gf``."""
    if order < 0:
        raise ValueError("order must be >= 0")
    den = gf.den.coeffs
    if not den or den[0] != 1:
        raise UnnormalizedGF("denominator constant term must be 1")
    q = [(i, den[i]) for i in range(1, len(den)) if den[i]]
    c: List[int] = []
    for n in range(order + 1):
        v = gf.num[n]
        for i, qi in q:
            if i > n:
                break
            v -= qi * c[n - i]
        c.append(v)
    return c


@dataclass(frozen=True)
class LinearRecurrence:
    """``c_n = sum(coefficients[i-1] * c_{n-i} for i in 1..order)`` for ``n >= start``."""

    order: int
    coefficients: Tuple[int, ...]
    initial: Tuple[int, ...]

    @property
    def start(self) -> int:
        return len(self.initial)

    def extend(self, length: int) -> List[int]:
        c = list(self.initial[:length])
        while len(c) < length:
            n = len(c)
            c.append(sum(a * c[n - i] for i, a in enumerate(self.coefficients, 1) if a))
        return c

    def holds_for(self, seq: Sequence[int]) -> bool:
        for n in range(self.start, len(seq)):
            rhs = sum(a * seq[n - i] for i, a in enumerate(self.coefficients, 1) if a)
            if seq[n] != rhs:
                return False
        return True


def recurrence_from_gf(gf: RationalGF) -> LinearRecurrence:
    den = gf.den.coeffs
    if not den or den[0] != 1:
        raise UnnormalizedGF("denominator constant term must be 1")
    d = gf.den.degree
    coeffs = tuple(-den[i] for i in range(1, d + 1))
    seed_len = max(gf.num.degree + 1, d)
    initial = tuple(series_expand(gf, seed_len - 1)) if seed_len > 0 else ()
    return LinearRecurrence(d, coeffs, initial)


# --------------------------------------------------------------------------
# sparse multivariate side

Exp = Tuple[int, int, int]


def _clean(terms: Mapping[Exp, int]) -> Dict[Exp, int]:
    return {e: int(c) for e, c in terms.items() if c}


@dataclass(frozen=True)
class MPoly:
    """Sparse integer polynomial in ``x, y, z`` keyed by ``(n, r, s)``."""

    terms: Mapping[Exp, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean(self.terms))

    @classmethod
    def const(cls, c: int) -> "MPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def mono(cls, n: int = 0, r: int = 0, s: int = 0, c: int = 1) -> "MPoly":
        return cls({(n, r, s): c})

    @classmethod
    def from_univariate(cls, p: IntPolynomial) -> "MPoly":
        return cls({(i, 0, 0): c for i, c in enumerate(p.coeffs)})

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "MPoly") -> "MPoly":
        out = defaultdict(int, self.terms)
        for e, c in _as_mpoly(other).terms.items():
            out[e] += c
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_mpoly(other))

    def __rsub__(self, other):
        return _as_mpoly(other) - self

    def __mul__(self, other) -> "MPoly":
        other = _as_mpoly(other)
        out: Dict[Exp, int] = defaultdict(int)
        for (a, b, c), u in self.terms.items():
            for (d, e, f), v in other.terms.items():
                out[(a + d, b + e, c + f)] += u * v
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = MPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def constant_term(self) -> int:
        return self.terms.get((0, 0, 0), 0)

    def substitute(self, y=None, z=None) -> "MPoly":
        """Set ``y`` and/or ``z`` to 0 or 1 (None leaves the variable alone)."""
        out: Dict[Exp, int] = defaultdict(int)
        for (n, r, s), c in self.terms.items():
            if (y == 0 and r) or (z == 0 and s):
                continue
            out[(n, 0 if y is not None else r, 0 if z is not None else s)] += c
        return MPoly(out)

    def power_substitute(self, var: str, k: int) -> "MPoly":
        """Replace ``var`` (one of ``"x", "y", "z"``) by its k-th power."""
        idx = "xyz".index(var)
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[idx] *= k
            out[tuple(e2)] = c
        return MPoly(out)

    def to_univariate(self) -> IntPolynomial:
        deg = max((n for n, _, _ in self.terms), default=-1)
        coeffs = [0] * (deg + 1)
        for (n, r, s), c in self.terms.items():
            if r or s:
                raise ValueError("polynomial depends on y or z")
            coeffs[n] += c
        return IntPolynomial(coeffs)


def _as_mpoly(p) -> MPoly:
    if isinstance(p, MPoly):
        return p
    if isinstance(p, int):
        return MPoly.const(p)
    if isinstance(p, IntPolynomial):
        return MPoly.from_univariate(p)
    raise TypeError(f"cannot coerce {type(p).__name__} to MPoly")


@dataclass(frozen=True)
class MultiGF:
    """Unexpanded ``num / den`` over ``x, y, z``, kept as the closed form reads."""

    num: MPoly
    den: MPoly
    symbols: Tuple[str, str, str] = ("x", "y", "z")

    def substitute(self, y=None, z=None) -> "MultiGF":
        return MultiGF(self.num.substitute(y=y, z=z), self.den.substitute(y=y, z=z), self.symbols)

    def power_substitute(self, var: str, k: int) -> "MultiGF":
        return MultiGF(self.num.power_substitute(var, k), self.den.power_substitute(var, k), self.symbols)

    def expand(self, x_order: int) -> "TruncatedMSeries":
        return mseries_expand(self.num, self.den, x_order, self.symbols)

    def to_rational(self) -> RationalGF:
        return RationalGF(self.num.to_univariate(), self.den.to_univariate())


@dataclass(frozen=True)
class TruncatedMSeries:
    """Coefficients of a trivariate series, exact for x-exponents up to ``x_order``."""

    terms: Mapping[Exp, int]
    x_order: int
    symbols: Tuple[str, str, str] = ("x", "y", "z")

    def __post_init__(self):
        kept = {e: c for e, c in _clean(self.terms).items() if e[0] <= self.x_order}
        object.__setattr__(self, "terms", kept)

    def __getitem__(self, e: Exp) -> int:
        return self.terms.get(tuple(e), 0)

    def at_zero(self, var: str) -> "TruncatedMSeries":
        idx = "xyz".index(var)
        return TruncatedMSeries({e: c for e, c in self.terms.items() if e[idx] == 0}, self.x_order, self.symbols)

    def at_one(self, var: str) -> "TruncatedMSeries":
        idx = "xyz".index(var)
        out: Dict[Exp, int] = defaultdict(int)
        for e, c in self.terms.items():
            e2 = list(e)
            e2[idx] = 0
            out[tuple(e2)] += c
        return TruncatedMSeries(out, self.x_order, self.symbols)

    def truncate(self, x_order: int) -> "TruncatedMSeries":
        return TruncatedMSeries(self.terms, min(x_order, self.x_order), self.symbols)

    def slice_n(self, n: int) -> Dict[Tuple[int, int], int]:
        """``{(r, s): coefficient}`` at ``x**n``."""
        return {(r, s): c for (m, r, s), c in self.terms.items() if m == n}

    def univariate(self) -> List[int]:
        """Sum over ``y`` and ``z`` exponents."""
        out = [0] * (self.x_order + 1)
        for (n, _, _), c in self.terms.items():
            out[n] += c
        return out

    def rows(self) -> List[Tuple[int, int, int, int]]:
        return sorted((n, r, s, c) for (n, r, s), c in self.terms.items())


def mseries_expand(num: MPoly, den: MPoly, x_order: int, symbols=("x", "y", "z")) -> TruncatedMSeries:
    """Long division of ``num`` by ``den`` up to x-exponent ``x_order``.

    Every non-constant term of ``den`` must carry a positive power of x;
    that makes each x-slice of the quotient depend only on lower slices.
    """
    c0 = den.constant_term()
    if c0 not in (1, -1):
        raise ZeroConstantTerm(f"denominator constant term is {c0}")
    if c0 == -1:
        num, den = -num, -den
    rest = [(e, c) for e, c in den.terms.items() if e != (0, 0, 0)]
    for (n, r, s), _ in rest:
        if n == 0:
            raise ZeroConstantTerm("denominator has an x-free non-constant term")

    by_n: Dict[int, Dict[Tuple[int, int], int]] = defaultdict(dict)
    num_by_n: Dict[int, Dict[Tuple[int, int], int]] = defaultdict(dict)
    for (n, r, s), c in num.terms.items():
        num_by_n[n][(r, s)] = c
    for n in range(x_order + 1):
        cur: Dict[Tuple[int, int], int] = defaultdict(int, num_by_n.get(n, {}))
        for (dn, dr, ds), dc in rest:
            if dn > n:
                continue
            for (r, s), v in by_n[n - dn].items():
                cur[(r + dr, s + ds)] -= dc * v
        by_n[n] = {rs: v for rs, v in cur.items() if v}
    terms = {(n, r, s): v for n, sl in by_n.items() for (r, s), v in sl.items()}
    return TruncatedMSeries(terms, x_order, tuple(symbols))
