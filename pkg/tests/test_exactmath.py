from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccx.exactmath import (
    NonZeroRemainder,
    NotConstant,
    Poly,
    RatFun,
    binomial_poly,
    poly_divide_exact,
    poly_gcd,
    poly_shift,
    rational_roots,
)


def test_eval_product():
    p = Poly([1, 1]) * Poly([2, 3])  # (m+1)(3m+2)
    assert p(1) == 10
    assert p(F(1, 2)) == F(21, 4)


def test_eval_dihedral_face_poly():
    # (am+2)(m+1)/2 with a=4 at m=3
    p = Poly([2, 4]) * Poly([1, 1]) / 2
    assert p(3) == 28


def test_subtraction_to_zero():
    p = Poly([3, -2, 5])
    assert (p - p).is_zero()
    assert p - p == Poly()


def test_shift_square():
    assert poly_shift(Poly([0, 0, 1])) == Poly([1, -2, 1])


def test_shift_pentagon_f_to_h():
    # F(x) = x^2 + 5x + 5 becomes x^2 + 3x + 1
    assert poly_shift(Poly([5, 5, 1])) == Poly([1, 3, 1])


def test_shift_constant():
    assert poly_shift(Poly([1])) == Poly([1])


def test_divide_exact():
    p = Poly([1, 1]) * Poly([2, 3])
    assert poly_divide_exact(p, Poly([1, 1])) == Poly([2, 3])


def test_divide_three_edge_sum():
    # sum over labels a1,a2,a3 of (a_i m + 2)(m+1)/2, divided by m+1
    a = (4, 3, 2)
    total = Poly()
    for ai in a:
        total = total + Poly([2, ai]) * Poly([1, 1]) / 2
    q = poly_divide_exact(total, Poly([1, 1]))
    assert q == Poly([3, F(sum(a), 2)])  # (am+6)/2


def test_divide_nonexact_raises():
    with pytest.raises(NonZeroRemainder):
        poly_divide_exact(Poly([1, 0, 1]), Poly([1, 1]))


def test_ratfun_constant():
    assert RatFun(Poly([4, 2]), Poly([2, 1])).constant_value() == 2


def test_ratfun_not_constant():
    with pytest.raises(NotConstant):
        RatFun(Poly([1, 0, 1]), Poly([1, 1])).constant_value()


def test_rational_roots_dihedral_facet_poly():
    p = Poly([2, 3]) * Poly([1, 1]) / 2  # N(A2, m)
    rs = rational_roots(p)
    assert rs.rational == ((F(-1), 1), (F(-2, 3), 1))
    assert rs.residual is None


def test_rational_roots_multiplicity():
    rs = rational_roots(Poly([0, 0, 1]))
    assert rs.rational == ((F(0), 2),)


def test_rational_roots_irrational_residual():
    # (m^2 - 2)(m - 1/3): rational root 1/3, residual m^2 - 2
    p = Poly([-2, 0, 1]) * Poly([F(-1, 3), 1])
    rs = rational_roots(p)
    assert rs.rational == ((F(1, 3), 1),)
    assert list(rs.residual.coeffs) == [-2, 0, 1]
    assert rs.residual_approx == pytest.approx((-(2**0.5), 2**0.5), abs=1e-9)


def test_binomial_poly_matches_binomials():
    from math import comb

    p = Poly([0, 3])  # 3m
    q = binomial_poly(p, 3)
    for m in range(1, 6):
        assert q(m) == comb(3 * m, 3)


small_fracs = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)
polys = st.lists(small_fracs, min_size=0, max_size=5).map(Poly)


@given(polys, polys)
@settings(max_examples=60, deadline=None)
def test_multiply_then_divide_roundtrips(p, q):
    if q.is_zero():
        return
    assert poly_divide_exact(p * q, q) == p


@given(polys, polys, small_fracs)
@settings(max_examples=60, deadline=None)
def test_eval_is_ring_homomorphism(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)


@given(polys, polys)
@settings(max_examples=40, deadline=None)
def test_gcd_divides_both(p, q):
    g = poly_gcd(p, q)
    if g.is_zero():
        assert p.is_zero() and q.is_zero()
        return
    poly_divide_exact(p, g)
    poly_divide_exact(q, g)


@given(polys)
@settings(max_examples=60, deadline=None)
def test_root_extraction_reassembles(p):
    if p.is_zero():
        return
    # rational_roots asserts the exact refactorization internally
    rs = rational_roots(p)
    assert sum(mult for _, mult in rs.rational) + (
        rs.residual.degree if rs.residual is not None else 0
    ) == p.degree


@given(polys, st.integers(min_value=-3, max_value=3))
@settings(max_examples=40, deadline=None)
def test_shift_agrees_pointwise(p, x):
    assert poly_shift(p)(x) == p(x - 1)
