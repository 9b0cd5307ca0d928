from __future__ import annotations

import pytest
from hypothesis import given, settings

from strategies import laurents, nonzero_polys, polys
from thicksl2.arith import (
    LaurentQ,
    MultiPoly,
    laurent_bar,
    laurent_mul,
    poly_div_exact,
    poly_mul,
    poly_swap_vars,
)
from thicksl2.errors import InexactDivisionError, UsageError

x1, x2, x3 = (MultiPoly.var(i, 3) for i in (1, 2, 3))
q = LaurentQ.q


def test_difference_of_squares():
    assert poly_mul(x1 + x2, x1 - x2) == x1**2 - x2**2


def test_multiply_by_zero():
    assert (x1 + 3 * x2) * MultiPoly.zero(3) == MultiPoly.zero(3)


def test_square_of_linear_form():
    sq = (x1 + x2 + x3) ** 2
    assert len(sq.terms) == 6
    assert sq.coeff((1, 1, 0)) == sq.coeff((1, 0, 1)) == sq.coeff((0, 1, 1)) == 2
    assert sq.coeff((2, 0, 0)) == 1


def test_swap_examples():
    assert poly_swap_vars(x1, 1) == x2
    assert poly_swap_vars(x1 * x2, 1) == x1 * x2
    assert poly_swap_vars(x1**2 * x3, 1) == x2**2 * x3


def test_div_exact_examples():
    assert poly_div_exact(x1**2 - x2**2, x1 - x2) == x1 + x2
    assert poly_div_exact(MultiPoly.zero(3), x1 - x2) == MultiPoly.zero(3)
    assert poly_div_exact(x1**3 - x2**3, x1 - x2) == x1**2 + x1 * x2 + x2**2


def test_div_exact_rejects_remainder():
    with pytest.raises(InexactDivisionError):
        poly_div_exact(x1**2 + x2, x1 - x2)


def test_variable_count_mismatch():
    with pytest.raises(UsageError):
        x1 + MultiPoly.var(1, 2)


def test_laurent_examples():
    assert laurent_mul(q(1) + q(-1), q(1) + q(-1)) == q(2) + 2 + q(-2)
    assert laurent_bar(q(3)) == q(-3)
    assert (q(1) - q(-1)) * (q(1) + q(-1)) == q(2) - q(-2)


def test_laurent_div_exact():
    assert ((q(1) + q(-1)) * (q(2) + 1)).div_exact(q(2) + 1) == q(1) + q(-1)
    with pytest.raises(InexactDivisionError):
        (q(1) + 1).div_exact(q(1) - 1)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_poly_ring_axioms(p, r, s):
    assert (p * r) * s == p * (r * s)
    assert p * (r + s) == p * r + p * s
    assert p * r == r * p
    assert p + r == r + p
    assert p - p == MultiPoly.zero(3)


@settings(max_examples=60, deadline=None)
@given(laurents(), laurents(), laurents())
def test_laurent_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert (f * g).bar() == f.bar() * g.bar()
    assert f.bar().bar() == f


@settings(max_examples=60, deadline=None)
@given(polys(), nonzero_polys())
def test_div_exact_roundtrip(p, d):
    assert poly_div_exact(poly_mul(p, d), d) == p


@settings(max_examples=40, deadline=None)
@given(laurents(), laurents().filter(bool))
def test_laurent_div_exact_roundtrip(f, g):
    assert (f * g).div_exact(g) == f


@settings(max_examples=60, deadline=None)
@given(polys(), polys())
def test_swap_is_involutive_homomorphism(p, r):
    for i in (1, 2):
        assert poly_swap_vars(poly_swap_vars(p, i), i) == p
        assert poly_swap_vars(p * r, i) == poly_swap_vars(p, i) * poly_swap_vars(r, i)
        assert poly_swap_vars(p + r, i) == poly_swap_vars(p, i) + poly_swap_vars(r, i)


@settings(max_examples=60, deadline=None)
@given(polys())
def test_divided_difference_matches_quotient(p):
    from thicksl2.nilhecke import divided_difference_by_quotient

    for i in (1, 2):
        assert p.divided_difference(i) == divided_difference_by_quotient(p, i)
