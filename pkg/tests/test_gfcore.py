import pytest
from hypothesis import given, settings, strategies as st

from tilegf import closedform as cf
from tilegf.errors import UnnormalizedGF, ZeroConstantTerm
from tilegf.gfcore import (
    IntPolynomial,
    MPoly,
    RationalGF,
    compress_power,
    mseries_expand,
    poly_add,
    poly_mul,
    poly_pow,
    recurrence_from_gf,
    series_expand,
    substitute_power,
)

P = IntPolynomial
one_minus_x = P((1, -1))

coeff_lists = st.lists(st.integers(-10**30, 10**30), max_size=8)
polys = coeff_lists.map(P)


def test_zero_polynomial_has_no_coefficients():
    assert P((0, 0, 0)).coeffs == ()
    assert P((0, 0, 0)).degree == -1
    assert P((1, 2, 0, 0)).coeffs == (1, 2)


def test_difference_of_squares():
    assert poly_mul(one_minus_x, P((1, 1))) == P((1, 0, -1))


def test_binomial_square():
    assert poly_pow(P((1, 0, 0, -1)), 2) == P((1, 0, 0, -2, 0, 0, 1))


def test_zeroth_power():
    assert poly_pow(P((1, 0, 0, -1)), 0) == P((1,))


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        poly_pow(one_minus_x, -1)


def test_big_coefficients_stay_exact():
    p = poly_pow(P((1, 1)), 200)
    assert p[100] == __import__("math").comb(200, 100)
    assert p[100] > 2**190


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert poly_add(p, q) == poly_add(q, p)
    assert poly_mul(p, q) == poly_mul(q, p)
    assert poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r))
    assert poly_mul(p, poly_add(q, r)) == poly_add(poly_mul(p, q), poly_mul(p, r))


@given(polys, polys)
def test_product_degree(p, q):
    if not p.is_zero() and not q.is_zero():
        assert poly_mul(p, q).degree == p.degree + q.degree


@pytest.mark.parametrize("p, k, expected", [
    (one_minus_x, 3, P((1, 0, 0, -1))),
    (P((1, 1, 1)), 2, P((1, 0, 1, 0, 1))),
    (P((4, -2, 7)), 1, P((4, -2, 7))),
])
def test_substitute_power(p, k, expected):
    assert substitute_power(p, k) == expected


@given(polys, st.integers(1, 5))
def test_compress_inverts_substitute(p, k):
    q = substitute_power(p, k)
    assert compress_power(q, k) == p
    for j, c in enumerate(p.coeffs):
        assert q[k * j] == c


def test_compress_rejects_stray_exponent():
    with pytest.raises(ValueError):
        compress_power(P((1, 1, 1)), 2)


def test_normalization():
    g = RationalGF(P((2,)), P((-1, 1)))
    assert g.den == P((1, -1)) and g.num == P((-2,))
    assert g.normalized() == g
    assert g.normalized().normalized() == g.normalized()
    with pytest.raises(UnnormalizedGF):
        RationalGF(P((1,)), P((2, 1)))
    with pytest.raises(UnnormalizedGF):
        RationalGF(P((1,)), P((0, 1)))


def test_series_tribonacci_like():
    gf = RationalGF(P((1,)), P((1, -1, 0, -1)))
    assert series_expand(gf, 8) == [1, 1, 1, 2, 3, 4, 6, 9, 13]


def test_series_domino_strip_in_x_squared():
    gf = RationalGF(P((1, 0, -1)), P((1, 0, -4, 0, 1)))
    assert series_expand(gf, 8)[::2] == [1, 3, 11, 41, 153]


def test_series_constant():
    assert series_expand(RationalGF(P((1,)), P((1,))), 3) == [1, 0, 0, 0]


def test_series_rejects_bad_den():
    # bypass the constructor's normalization
    bad = object.__new__(RationalGF)
    object.__setattr__(bad, "num", P((1,)))
    object.__setattr__(bad, "den", P((3, 1)))
    with pytest.raises(UnnormalizedGF):
        series_expand(bad, 3)
    with pytest.raises(UnnormalizedGF):
        recurrence_from_gf(bad)


def test_recurrence_main_3_2():
    rec = recurrence_from_gf(cf.gf_main(3, 2))
    assert rec.order == 4
    assert rec.coefficients == (0, 4, 0, -1)


def test_recurrence_geometric():
    rec = recurrence_from_gf(RationalGF(P((1,)), one_minus_x))
    assert rec.coefficients == (1,)
    assert rec.initial == (1,)
    assert rec.extend(5) == [1, 1, 1, 1, 1]


def test_recurrence_main_5_3():
    rec = recurrence_from_gf(cf.gf_main(5, 3))
    assert rec.order == 9
    assert rec.coefficients[2::3] == (6, -3, 1)
    assert all(c == 0 for i, c in enumerate(rec.coefficients) if i % 3 != 2)


CLOSED_FORMS = [
    (name, m, k)
    for name in ("gf_main", "gf_faultfree", "gf_mixed", "gf_brick3d")
    for k in (2, 3, 4)
    for m in range(k + 1, 2 * k)
]


@pytest.mark.parametrize("name, m, k", CLOSED_FORMS)
def test_round_trip_and_recurrence(name, m, k):
    gf = getattr(cf, name)(m, k)
    N = 60
    c = series_expand(gf, N)
    back = poly_mul(P(c), gf.den).truncate(N)
    assert back == gf.num.truncate(N)
    rec = recurrence_from_gf(gf)
    assert rec.holds_for(c)
    assert rec.extend(N + 1) == c


@settings(max_examples=60)
@given(coeff_lists, st.lists(st.integers(-5, 5), max_size=5), st.integers(0, 25))
def test_round_trip_random(num, tail, order):
    gf = RationalGF(P(num), P([1] + tail))
    c = series_expand(gf, order)
    assert poly_mul(P(c), gf.den).truncate(order) == gf.num.truncate(order)


# multivariate -----------------------------------------------------------------

def test_mseries_vertical_3_2():
    s = cf.gf_vertical(3, 2).expand(4)
    assert s[(2, 0, 0)] == 1
    assert s[(2, 2, 0)] == 2
    assert s[(4, 2, 0)] == 6  # frozen from the naive enumerator


def test_mseries_marginal_matches_univariate():
    s = cf.gf_vertical(3, 2).expand(12)
    assert s.at_one("y").univariate() == cf.gf_main(3, 2).series(12)


def test_mseries_trivial():
    s = mseries_expand(MPoly.const(1), MPoly.const(1), 5)
    assert s.terms == {(0, 0, 0): 1}


def test_mseries_rejects_zero_constant():
    with pytest.raises(ZeroConstantTerm):
        mseries_expand(MPoly.const(1), MPoly.mono(n=1), 3)
    with pytest.raises(ZeroConstantTerm):
        mseries_expand(MPoly.const(1), 1 - MPoly.mono(r=1), 3)


def test_mseries_truncation_drops_high_terms():
    s = mseries_expand(MPoly.mono(n=5), MPoly.const(1), 3)
    assert s.terms == {}


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4).flatmap(lambda k: st.tuples(st.just(k), st.integers(k + 1, 2 * k - 1))),
       st.integers(0, 16))
def test_mseries_substitution_commutes_with_truncation(km, order):
    k, m = km
    full = cf.gf_mixed_refined(m, k).expand(16)
    part = cf.gf_mixed_refined(m, k).expand(order)
    assert full.truncate(order).terms == part.terms
    for var in ("y", "z"):
        assert full.at_zero(var).truncate(order).terms == part.at_zero(var).terms
        assert full.at_one(var).truncate(order).terms == part.at_one(var).terms
    assert full.at_one("y").at_one("z").univariate()[: order + 1] == part.univariate()


def test_mpoly_substitution_and_power():
    p = MPoly({(1, 2, 0): 3, (0, 0, 1): -1, (2, 0, 0): 5})
    assert p.substitute(y=0).terms == {(0, 0, 1): -1, (2, 0, 0): 5}
    assert p.substitute(y=1, z=1).terms == {(1, 0, 0): 3, (0, 0, 0): -1, (2, 0, 0): 5}
    assert p.power_substitute("z", 3).terms == {(1, 2, 0): 3, (0, 0, 3): -1, (2, 0, 0): 5}
    assert (1 - MPoly.mono(n=1)) ** 2 == MPoly({(0, 0, 0): 1, (1, 0, 0): -2, (2, 0, 0): 1})
