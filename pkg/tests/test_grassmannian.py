from __future__ import annotations

import pytest

from thicksl2.arith import MultiPoly
from thicksl2.grassmannian import (
    BubbleLabel,
    LambdaElement,
    antipode,
    bubble_value,
    central_element_check,
    central_element_coeffs,
    coproduct,
    counit,
    fake_bubble_series,
    grassmannian_series_product,
    higher_grassmannian_check,
    higher_grassmannian_direct,
    phi_n,
    phi_n_inverse,
    thick_bubble,
    thick_bubble_closed_form,
)
from thicksl2.partitions import EMPTY, Partition, enumerate_P, partitions_up_to

P = Partition
L = LambdaElement


def test_phi_examples():
    assert phi_n(L.h(0, 4), 2) == {(): 1}
    assert bubble_value(BubbleLabel("cw", 2, 0), 4) == L.one(4)
    assert bubble_value(BubbleLabel("ccw", 2, -1), 4) == L.zero(4)
    assert not L.e(-1, 4)
    prod = L.h(1, 4) * L.h(2, 4)
    mono = phi_n(prod, 1)
    assert mono == {(BubbleLabel("cw", 1, 1), BubbleLabel("cw", 1, 2)): 1} or mono == {
        (BubbleLabel("cw", 1, 2), BubbleLabel("cw", 1, 1)): 1
    }
    assert phi_n_inverse(mono, 4) == prod


def test_phi_roundtrip_and_degrees():
    for al in partitions_up_to(5):
        f = L.schur(al, 5)
        for orient in ("cw", "ccw"):
            images = phi_n(f, -1, orient)
            assert phi_n_inverse(images, 5) == f
            for labels in images:
                assert sum(lab.degree for lab in labels) == 2 * al.weight


def test_spade_and_fake_labels():
    assert BubbleLabel("cw", 3, 0).dots == 2
    assert BubbleLabel("ccw", 3, 2).dots == -2
    assert BubbleLabel("ccw", 3, 2).fake
    assert not BubbleLabel("cw", 3, 2).fake


def test_fake_bubble_series_low_terms():
    series = fake_bubble_series(0, 6)
    assert series[0] == L.one(6)
    assert series[1] == -L.e(1, 6)
    for r, v in enumerate(series):
        assert v == bubble_value(BubbleLabel("ccw", 0, r), 6)


@pytest.mark.parametrize("n", [-2, 0, 1, 3])
def test_infinite_grassmannian_relation(n):
    pieces = grassmannian_series_product(n, 8)
    assert pieces[0] == L.one(8)
    assert all(not p for p in pieces[1:])


def test_thick_bubble_examples():
    assert thick_bubble((2,), 1, "cw", 4) == L.schur((2,), 4)
    assert thick_bubble((1, 1), 2, "cw", 4) == -L.schur((1, 1), 4)
    assert thick_bubble((2,), 2, "ccw", 4) == -L.schur((1, 1), 4)


@pytest.mark.parametrize("a", [1, 2, 3])
@pytest.mark.parametrize("orientation", ["cw", "ccw"])
def test_thick_bubble_closed_form(a, orientation):
    for al in enumerate_P(a, 4):
        got = thick_bubble(al, a, orientation, al.weight, n=1)
        assert got == thick_bubble_closed_form(al, a, orientation, al.weight)
        assert got.q_degree() == 2 * al.weight


def test_hopf_examples():
    for r in range(5):
        assert antipode(L.h(r, 6)) == L.e(r, 6) * (-1) ** r
    for n in range(5):
        want = {(P((1,) * i), P((1,) * (n - i))): 1 for i in range(n + 1)}
        assert coproduct(L.e(n, 6)) == want
    for al in partitions_up_to(6):
        f = L.schur(al, 6)
        assert antipode(antipode(f)) == f
    assert counit(L.one(3)) == 1
    assert counit(L.h(2, 3)) == 0


def test_higher_grassmannian_examples():
    assert higher_grassmannian_direct(()) == L.one(0)
    assert not higher_grassmannian_direct((1,))
    for al in partitions_up_to(5):
        assert higher_grassmannian_check(al)


def test_central_element_examples():
    h0 = central_element_coeffs(0, 2, 2)
    assert list(h0) == [(0, 0, 0)]
    h1 = central_element_coeffs(1, 1, 1)
    assert set(h1) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    h2 = central_element_coeffs(2, 2, 2)
    assert set(h2) == {(p, q, 2 - p - q) for p in range(3) for q in range(3 - p)}
    total = MultiPoly.zero(6)
    for term in h2.values():
        total = total + term
    assert len(total.terms) == 21
    for i in range(5):
        for a in range(4):
            for b in range(4):
                assert central_element_check(i, a, b)


def test_truncation_flag():
    f = L.h(3, 4) * L.h(3, 4)
    assert f.truncated
    assert not f
    g = L.h(1, 4) * L.h(1, 4)
    assert not g.truncated
    assert g == L(4, {(2,): 1, (1, 1): 1})
    assert EMPTY in L.one(2).coeffs
