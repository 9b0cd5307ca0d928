from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import partitions_in_box
from thicksl2.arith import MultiPoly
from thicksl2.grassmannian import LambdaElement
from thicksl2.nilhecke import longest_dd, nh_apply
from thicksl2.partitions import EMPTY, Partition, enumerate_P, partitions_up_to
from thicksl2.symfun import (
    apply_Da_to_monomial_exponents,
    bubble_slide_coeff_identity,
    complete,
    elementary,
    elementary_coproduct_gap,
    eh_relation,
    lr_coeff,
    lr_iterated,
    lr_iterated_direct,
    lr_product,
    schur,
    schur_bialternant,
    schur_combo_to_poly,
    schur_decompose,
    schur_dual_giambelli,
    schur_jacobi_trudy,
    skew_schur_det,
    skew_schur_lr,
    staircase,
    two_alphabet_expand,
)

x = [MultiPoly.var(i, 3) for i in (1, 2, 3)]
y = [MultiPoly.var(i, 2) for i in (1, 2)]
P = Partition


def test_elementary_and_complete_examples():
    assert elementary(2, 3) == x[0] * x[1] + x[0] * x[2] + x[1] * x[2]
    assert elementary(4, 3) == MultiPoly.zero(3)
    assert elementary(-1, 3) == MultiPoly.zero(3)
    assert complete(2, 2) == y[0] ** 2 + y[0] * y[1] + y[1] ** 2
    assert complete(-1, 2) == MultiPoly.zero(2)


def test_complete_does_not_vanish_above_variable_count():
    # h_m(x_1..x_a) is nonzero for every m >= 0; only epsilon_m vanishes for m > a
    assert complete(3, 1) == MultiPoly.var(1, 1) ** 3


def test_bialternant_examples():
    assert schur_bialternant((1,), 2) == y[0] + y[1]
    assert schur_bialternant((1, 1, 1), 2) == MultiPoly.zero(2)
    assert schur_bialternant((2, 1), 2) == y[0] ** 2 * y[1] + y[0] * y[1] ** 2


def test_determinant_forms_examples():
    assert schur_jacobi_trudy((2, 1), 2) == y[0] ** 2 * y[1] + y[0] * y[1] ** 2
    for k in range(1, 4):
        assert schur_jacobi_trudy((1,) * k, 3) == elementary(k, 3)
    assert schur_jacobi_trudy((), 3) == MultiPoly.one(3)
    assert schur_dual_giambelli((), 3) == MultiPoly.one(3)


@pytest.mark.parametrize("a", [2, 3, 4])
def test_three_schur_formulas_agree(a):
    for al in enumerate_P(4, 4):
        s = schur_bialternant(al, a)
        assert schur_jacobi_trudy(al, a) == s
        assert schur_dual_giambelli(al, a) == s
        assert schur(al, a) == s


def test_apply_Da_examples():
    assert apply_Da_to_monomial_exponents(staircase(4)) == (1, EMPTY)
    assert apply_Da_to_monomial_exponents((1, 1)) == (0, None)
    assert apply_Da_to_monomial_exponents((0, 1)) == (-1, EMPTY)


@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_schur_from_longest_divided_difference(a):
    D = longest_dd(a)
    for al in enumerate_P(a, 3):
        exps = tuple(p + s for p, s in zip(al.padded(a), staircase(a)))
        assert nh_apply(D, MultiPoly.monomial(exps)) == schur_bialternant(al, a)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=3, max_size=3))
def test_apply_Da_rule_matches_operator(exps):
    sign, lam = apply_Da_to_monomial_exponents(exps)
    got = nh_apply(longest_dd(3), MultiPoly.monomial(tuple(exps)))
    want = MultiPoly.zero(3) if lam is None else schur(lam, 3) * sign
    assert got == want


@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_eh_relation(a):
    for m in range(1, 9):
        assert not eh_relation(m, a)


def test_elementary_coproduct():
    for a in range(1, 4):
        for b in range(1, 4):
            for s in range(7):
                assert not elementary_coproduct_gap(s, a, b)


def test_lr_examples():
    assert lr_coeff((1,), (1,), (2,)) == 1
    assert lr_coeff((1,), (1,), (1, 1)) == 1
    assert lr_coeff((2, 1), (1,), (2,)) == 0
    for al in partitions_up_to(3):
        assert lr_product(al, ()) == {al: 1}
    assert lr_product((2, 1), (2, 1)) == {
        P((4, 2)): 1, P((4, 1, 1)): 1, P((3, 3)): 1, P((3, 2, 1)): 2, P((3, 1, 1, 1)): 1,
        P((2, 2, 2)): 1, P((2, 2, 1, 1)): 1,
    }


def test_lr_symmetries():
    shapes = partitions_up_to(3)
    for al in shapes:
        for be in shapes:
            prod = lr_product(al, be)
            assert prod == lr_product(be, al)
            conj = {g.conjugate(): c for g, c in prod.items()}
            assert lr_product(al.conjugate(), be.conjugate()) == conj


def test_lr_nonnegative_and_weight_additive():
    for al in partitions_up_to(4):
        for be in partitions_up_to(4):
            for ga, c in lr_product(al, be).items():
                assert c > 0
                assert ga.weight == al.weight + be.weight


def test_lr_stable_in_variable_count():
    for al in partitions_up_to(3):
        for be in partitions_up_to(3):
            n = al.length + be.length
            assert lr_product(al, be, n) == lr_product(al, be, n + 2)


@pytest.mark.parametrize("a,b", [(a, b) for a in range(1, 4) for b in range(1, 4)])
def test_rectangle_rules(a, b):
    box = P((b,) * a)
    shapes = enumerate_P(a, b)
    for al in shapes:
        for be in shapes:
            assert lr_coeff(al, be, box) == (1 if be == al.complement(a, b) else 0)
    if a * b <= 4:
        for al in shapes:
            for be in shapes:
                for ga in shapes:
                    if al.weight + be.weight + ga.weight == a * b:
                        assert lr_iterated([al, be, ga], box) == lr_coeff(al, be, ga.complement(a, b))


def test_iterated_lr():
    assert lr_iterated([(1,), (1,), (1,)], (3,)) == 1
    assert lr_iterated([(1,), (1,), (1,)], (2, 1)) == 2
    assert lr_iterated([(2,), (), (1,)], (3,)) == lr_coeff((2,), (1,), (3,))
    for beta in partitions_up_to(4):
        assert lr_iterated([(1,), (2, 1)], beta) == lr_iterated_direct([(1,), (2, 1)], beta)


def test_skew_schur_examples():
    assert skew_schur_det((1,), (), 1) == LambdaElement.schur((1,), 1)
    assert skew_schur_det((2, 1), (1,), 2) == LambdaElement(3, {(2,): 1, (1, 1): 1})
    assert not skew_schur_det((1,), (2,), 2)


@pytest.mark.parametrize("i", [1, 2, 3])
def test_skew_schur_det_matches_lr(i):
    for beta in partitions_up_to(5):
        if beta.length > i:
            continue
        for mu in partitions_up_to(beta.weight):
            if mu.length <= i and beta.contains(mu):
                assert skew_schur_det(beta, mu, i) == LambdaElement(beta.weight, skew_schur_lr(beta, mu))


def test_two_alphabet_examples():
    assert two_alphabet_expand((1,), 1, 1) == {(P((1,)), P()): 1, (P(), P((1,))): 1}
    assert two_alphabet_expand((2,), 1, 1) == {(P((2,)), P()): 1, (P((1,)), P((1,))): 1, (P(), P((2,))): 1}
    assert two_alphabet_expand((1, 1), 1, 1) == {(P((1,)), P((1,))): 1}


def test_two_alphabet_matches_lr():
    for ga in partitions_up_to(4):
        for (al, be), c in two_alphabet_expand(ga, 2, 2).items():
            assert c == lr_coeff(al, be, ga)


@pytest.mark.parametrize("a", range(5))
def test_bubble_slide_identity(a):
    assert bubble_slide_coeff_identity(a)


@settings(max_examples=30, deadline=None)
@given(partitions_in_box(3, 3), partitions_in_box(2, 2))
def test_schur_decompose_roundtrip(al, be):
    f = schur(al, 3) * schur(be, 3)
    assert schur_combo_to_poly(schur_decompose(f), 3) == f
