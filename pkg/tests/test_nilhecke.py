from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import polys
from thicksl2.arith import MultiPoly
from thicksl2.checks import random_nh
from thicksl2.errors import UsageError
from thicksl2.nh_relations import RELATIONS, families, relation_pairs
from thicksl2.nilhecke import (
    NHElement,
    block_cross,
    delta_poly,
    e_alpha,
    e_l,
    embed_tensor,
    from_matrix_entries,
    gen_dd,
    gen_x,
    idempotent_e,
    lambda_alpha,
    lambda_l,
    longest_dd,
    matrix_entries,
    matrix_unit,
    nh_apply,
    nh_equal,
    schur_box,
    sigma_alpha,
    sigma_l,
    splitter_merge,
    splitter_split,
    sq_sequences,
    staircase_basis,
    thick_identity,
)
from thicksl2.partitions import enumerate_P
from thicksl2.symfun import elementary


def x(i, a):
    return MultiPoly.var(i, a)


def test_generator_relations():
    for a in (2, 3, 4):
        for i in range(1, a):
            assert gen_dd(i, a) * gen_dd(i, a) == NHElement.zero(a)
            assert gen_x(i, a) * gen_dd(i, a) - gen_dd(i, a) * gen_x(i + 1, a) == NHElement.one(a)
    d1, d2 = gen_dd(1, 3), gen_dd(2, 3)
    assert d1 * d2 * d1 == d2 * d1 * d2


def test_gen_dd_out_of_range():
    with pytest.raises(UsageError):
        gen_dd(2, 2)


def test_apply_examples():
    assert nh_apply(gen_dd(1, 2), x(1, 2)) == MultiPoly.one(2)
    assert nh_apply(gen_dd(1, 2), x(1, 2) * x(2, 2)) == MultiPoly.zero(2)
    assert nh_apply(longest_dd(2), x(1, 2) ** 2) == x(1, 2) + x(2, 2)


def test_equality_examples():
    e = idempotent_e(3)
    assert nh_equal(e, e * e)
    assert nh_equal(gen_dd(1, 2) * gen_x(1, 2), gen_x(2, 2) * gen_dd(1, 2) + NHElement.one(2))
    assert not nh_equal(gen_dd(1, 2), gen_x(1, 2) * gen_dd(1, 2))


def test_idempotent_examples():
    assert idempotent_e(1) == NHElement.one(1)
    assert idempotent_e(2) == gen_x(1, 2) * gen_dd(1, 2)
    for a in (2, 3, 4):
        assert longest_dd(a) * idempotent_e(a) == longest_dd(a)


@pytest.mark.parametrize("a", [2, 3])
def test_DafDa(a):
    rng = random.Random(a)
    D = longest_dd(a)
    for _ in range(8):
        f = MultiPoly.zero(a)
        for _ in range(3):
            exps = [rng.randint(0, 4) for _ in range(a)]
            while sum(exps) > 4:
                exps[rng.randrange(a)] = 0
            f = f + MultiPoly.monomial(tuple(exps), rng.randint(-3, 3))
        lhs = D * NHElement.poly(f) * D
        assert nh_equal(lhs, NHElement.poly(nh_apply(D, f)) * D)
        # x_i has degree 2 in the algebra grading
        if f.degree() is not None and 2 * f.degree() < a * (a - 1):
            assert lhs == NHElement.zero(a)


def test_tensor_examples():
    assert embed_tensor(NHElement.one(1), NHElement.one(1)) == NHElement.one(2)
    for a, b in [(1, 2), (2, 1), (2, 2), (1, 3)]:
        # D_{a+b} is the block crossing stacked on D_a (x) D_b, or below D_b (x) D_a
        assert block_cross(a, b) * embed_tensor(longest_dd(a), longest_dd(b)) == longest_dd(a + b)
        assert embed_tensor(longest_dd(b), longest_dd(a)) * block_cross(a, b) == longest_dd(a + b)


def test_splitter_examples():
    for a in (1, 2, 3):
        assert splitter_split(a, 0) == idempotent_e(a)
        assert splitter_merge(a, 0) == idempotent_e(a)
    assert splitter_split(1, 1) == gen_dd(1, 2)
    for a, b in [(1, 2), (2, 1), (2, 2)]:
        assert splitter_split(a, b).degree() == -2 * a * b
        assert splitter_merge(a, b).degree() == 0


def test_schur_box_examples():
    assert schur_box((), 3) == NHElement.one(3)
    assert schur_box((1,), 2) == NHElement.poly(x(1, 2) + x(2, 2))


def test_pair_idempotent_hand_value():
    # e_{empty} for a=b=1: sigma = d_1, lambda = -x1 d1 x2, product 1 - x1 d1
    e0 = e_alpha(1, 1, ())
    assert e0 == NHElement.one(2) - gen_x(1, 2) * gen_dd(1, 2)
    assert e_alpha(1, 1, (1,)) == gen_x(1, 2) * gen_dd(1, 2)


@pytest.mark.parametrize("a,b", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_pair_decomposition(a, b):
    shapes = enumerate_P(a, b)
    total = NHElement.zero(a + b)
    for al in shapes:
        total = total + sigma_alpha(a, b, al) * lambda_alpha(a, b, al)
    assert nh_equal(total, thick_identity(a, b))
    for al in shapes:
        for be in shapes:
            want = idempotent_e(a + b) if al == be else NHElement.zero(a + b)
            assert nh_equal(lambda_alpha(a, b, be) * sigma_alpha(a, b, al), want)


def test_sigma_alpha_rejects_big_shape():
    with pytest.raises(UsageError):
        sigma_alpha(1, 1, (2,))


def test_sq_sequences():
    assert sq_sequences(2) == [(0,), (1,)]
    assert len(sq_sequences(4)) == 24
    total = e_l((0,), 2) + e_l((1,), 2)
    assert total == NHElement.one(2)


def test_sq_three_idempotents():
    for ell in sq_sequences(3):
        e = e_l(ell, 3)
        assert e * e == e
        assert lambda_l(ell, 3) * sigma_l(ell, 3) == idempotent_e(3)


def test_matrix_units_two():
    a = 2
    one = MultiPoly.one(a)
    for l1 in sq_sequences(a):
        for l2 in sq_sequences(a):
            for l3 in sq_sequences(a):
                for l4 in sq_sequences(a):
                    got = matrix_unit(l1, l2, one, a) * matrix_unit(l3, l4, one, a)
                    want = matrix_unit(l1, l4, one, a) if l2 == l3 else NHElement.zero(a)
                    assert got == want
    y = elementary(1, a)
    for ell in sq_sequences(a):
        assert NHElement.poly(y) * e_l(ell, a) == e_l(ell, a) * NHElement.poly(y)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3))
def test_mul_matches_composition(seed, a):
    rng = random.Random(seed)
    u, v = random_nh(rng, a), random_nh(rng, a)
    uv = u * v
    for p in staircase_basis(a):
        assert nh_apply(uv, p) == nh_apply(u, nh_apply(v, p))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_matrix_entries_roundtrip(seed):
    rng = random.Random(seed)
    u = random_nh(rng, 2, terms=3)
    assert from_matrix_entries(matrix_entries(u), 2) == u


@settings(max_examples=30, deadline=None)
@given(polys(nvars=3, max_deg=3))
def test_symmetric_polynomials_are_central(f):
    sym = MultiPoly.zero(3)
    for w in ((0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)):
        sym = sym + f.permute(w)
    z = NHElement.poly(sym)
    for i in (1, 2):
        assert z * gen_dd(i, 3) == gen_dd(i, 3) * z


def test_staircase_basis_size():
    assert len(staircase_basis(4)) == 24
    assert delta_poly(3) in staircase_basis(3)


def test_relation_families_rank_four():
    for name, params in families(4):
        for label, lhs, rhs in relation_pairs(name, params):
            assert nh_equal(lhs, rhs), (name, params, label)


def test_every_family_is_scheduled():
    assert {name for name, _ in families(4)} == set(RELATIONS)


def test_unknown_family():
    with pytest.raises(UsageError):
        list(relation_pairs("nh.nope", {}))


@pytest.mark.parametrize("a,b", [(1, 1), (2, 1), (2, 2)])
def test_degrees(a, b):
    for al in enumerate_P(a, b):
        assert sigma_alpha(a, b, al).degree() == 2 * al.weight - 2 * a * b
        assert lambda_alpha(a, b, al).degree() == 2 * a * b - 2 * al.weight
        assert e_alpha(a, b, al).degree() == 0
