"""Registered verification checks.

A check is a top-level function taking keyword parameters and returning
``(ok, witness)``; the witness explains a failure.  ``plan`` expands a
``SuiteConfig`` into the list of (check name, params) jobs for one suite.
Checks are addressed by name so they can run in worker processes.
"""

from __future__ import annotations

import itertools
import random
from math import comb
from typing import Callable

from .arith import LaurentQ, MultiPoly
from .config import SuiteConfig
from .errors import UsageError
from .grassmannian import (
    BubbleLabel,
    LambdaElement,
    bubble_value,
    central_element_check,
    fake_bubble_series,
    grassmannian_series_product,
    higher_grassmannian_direct,
    higher_grassmannian_hopf,
    phi_n,
    phi_n_inverse,
    thick_bubble,
    thick_bubble_closed_form,
)
from .nh_relations import RELATIONS, families, relation_pairs
from .nilhecke import (
    NHElement,
    all_perms,
    e_alpha,
    e_l,
    from_matrix_entries,
    gen_dd,
    gen_x,
    idempotent_e,
    lambda_alpha,
    lambda_l,
    lambda_l_iterated,
    longest_dd,
    matrix_entries,
    matrix_unit,
    nh_apply,
    nh_equal,
    sigma_alpha,
    sigma_l,
    sigma_l_iterated,
    sq_sequences,
    staircase_basis,
    thick_identity,
)
from .partitions import Partition, enumerate_P, partitions_of, partitions_up_to, q_cardinality
from .symfun import (
    bubble_slide_sides,
    elementary,
    elementary_coproduct_gap,
    eh_relation,
    lr_iterated,
    lr_iterated_direct,
    lr_product,
    schur,
    schur_bialternant,
    schur_dual_giambelli,
    schur_jacobi_trudy,
    skew_schur_det,
    skew_schur_lr,
    staircase,
)
from .udot import (
    E,
    F,
    FE,
    EF,
    Tag,
    UdotElement,
    act_equal,
    canonical_basis,
    decomposition_multiplicities_EE,
    decomposition_multiplicities_EF,
    decomposition_multiplicities_FE,
    gamma_is_unitriangular,
    hom_rank_enumeration,
    hom_rank_formula,
    mul,
    multiplicity_series,
    one,
    qbin,
    qbin_pascal,
    to_canonical,
    to_ef,
    to_fe,
    triple_not_both_canonical,
)

Outcome = tuple[bool, "str | None"]
WITNESS_LIMIT = 4000


def _witness(*parts: object) -> str:
    text = " | ".join(str(p) for p in parts)
    return text if len(text) <= WITNESS_LIMIT else text[:WITNESS_LIMIT] + " ..."


# random elements

def random_poly(rng: random.Random, nvars: int, terms: int = 4, max_deg: int = 3, coeff: int = 5) -> MultiPoly:
    out = MultiPoly.zero(nvars)
    for _ in range(terms):
        exps = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        out = out + MultiPoly.monomial(exps, rng.randint(-coeff, coeff))
    return out


def random_laurent(rng: random.Random, terms: int = 4, span: int = 5, coeff: int = 5) -> LaurentQ:
    return LaurentQ({rng.randint(-span, span): rng.randint(-coeff, coeff) for _ in range(terms)})


def random_nh(rng: random.Random, a: int, terms: int = 4, max_deg: int = 4) -> NHElement:
    perms = all_perms(a)
    out = NHElement.zero(a)
    for _ in range(terms):
        w = rng.choice(perms)
        f = random_poly(rng, a, terms=2, max_deg=max_deg // 2)
        out = out + NHElement.poly(f) * NHElement.dd(w)
    return out


# arith / partitions

def arith_ring_axioms(seed: int, trials: int, nvars: int) -> Outcome:
    rng = random.Random(seed)
    for _ in range(trials):
        p, r, s = (random_poly(rng, nvars) for _ in range(3))
        if (p * r) * s != p * (r * s):
            return False, _witness("associativity", p, r, s)
        if p * (r + s) != p * r + p * s:
            return False, _witness("distributivity", p, r, s)
        if p * r != r * p or p + r != r + p:
            return False, _witness("commutativity", p, r)
        f, g, h = (random_laurent(rng) for _ in range(3))
        if (f * g) * h != f * (g * h) or f * (g + h) != f * g + f * h or f * g != g * f:
            return False, _witness("laurent ring axioms", f, g, h)
    return True, None


def arith_div_exact_roundtrip(seed: int, trials: int, nvars: int) -> Outcome:
    rng = random.Random(seed)
    for _ in range(trials):
        p = random_poly(rng, nvars)
        d = random_poly(rng, nvars, terms=2, max_deg=2)
        if not d:
            continue
        if (p * d).div_exact(d) != p:
            return False, _witness("polynomial", p, d)
        f, g = random_laurent(rng), random_laurent(rng)
        if g and (f * g).div_exact(g) != f:
            return False, _witness("laurent", f, g)
    return True, None


def arith_swap(seed: int, trials: int, nvars: int) -> Outcome:
    rng = random.Random(seed)
    for _ in range(trials):
        p, r = random_poly(rng, nvars), random_poly(rng, nvars)
        for i in range(1, nvars):
            if p.swap(i).swap(i) != p:
                return False, _witness("involution", i, p)
            if (p * r).swap(i) != p.swap(i) * r.swap(i) or (p + r).swap(i) != p.swap(i) + r.swap(i):
                return False, _witness("homomorphism", i, p, r)
    return True, None


def arith_qbin_pascal(m_range: int, j_max: int) -> Outcome:
    for m in range(-m_range, m_range + 1):
        for j in range(j_max + 1):
            if qbin(m, j) != qbin_pascal(m, j):
                return False, _witness(f"m={m} j={j}", qbin(m, j), qbin_pascal(m, j))
            if m >= j and qbin(m, j) != qbin(m, j).bar():
                return False, _witness("bar invariance", m, j)
    return True, None


def partitions_box_count(box_max: int) -> Outcome:
    for a in range(box_max + 1):
        for b in range(box_max + 1):
            if len(enumerate_P(a, b)) != comb(a + b, a):
                return False, _witness(a, b, len(enumerate_P(a, b)))
    return True, None


def partitions_involutions(box_max: int) -> Outcome:
    for a in range(box_max + 1):
        for b in range(box_max + 1):
            for al in enumerate_P(a, b):
                if al.complement(a, b).complement(a, b) != al:
                    return False, _witness("complement", a, b, al)
                if al.conjugate().conjugate() != al:
                    return False, _witness("conjugate", al)
                if al.hat(a, b).hat(b, a) != al:
                    return False, _witness("hat", a, b, al)
    return True, None


def partitions_q_cardinality(box_max: int) -> Outcome:
    for a in range(box_max + 1):
        for b in range(box_max + 1):
            qc = q_cardinality(a, b)
            if qc != qc.bar() or not qc.is_nonnegative():
                return False, _witness(a, b, qc)
    return True, None


# symmetric functions

def symfun_schur_triple(a: int, box: int) -> Outcome:
    for al in enumerate_P(a, box):
        s = schur(al, a)
        for name, f in (("bialternant", schur_bialternant), ("jacobi-trudy", schur_jacobi_trudy), ("dual giambelli", schur_dual_giambelli)):
            v = f(al, a)
            if v != s:
                return False, _witness(name, al, v, s)
    return True, None


def symfun_schur_Da(a: int, box: int) -> Outcome:
    D = longest_dd(a)
    for al in enumerate_P(a, box):
        exps = tuple(p + s for p, s in zip(al.padded(a), staircase(a)))
        got = nh_apply(D, MultiPoly.monomial(exps))
        if got != schur_bialternant(al, a):
            return False, _witness(al, got)
    return True, None


def symfun_eh_relation(m_max: int, a_max: int) -> Outcome:
    for a in range(1, a_max + 1):
        for m in range(1, m_max + 1):
            r = eh_relation(m, a)
            if r:
                return False, _witness(m, a, r)
    return True, None


def symfun_elementary_coproduct(s_max: int, a_max: int) -> Outcome:
    for a in range(1, a_max + 1):
        for b in range(1, a_max + 1):
            for s in range(s_max + 1):
                gap = elementary_coproduct_gap(s, a, b)
                if gap:
                    return False, _witness(s, a, b, gap)
    return True, None


def symfun_lr_basic(weight_max: int) -> Outcome:
    shapes = partitions_up_to(weight_max)
    for al in shapes:
        for be in shapes:
            for ga, c in lr_product(al, be).items():
                if c < 0 or ga.weight != al.weight + be.weight:
                    return False, _witness(al, be, ga, c)
                if not (ga.contains(al) and ga.contains(be)):
                    return False, _witness("containment", al, be, ga)
            # stable once the variable count reaches len(alpha) + len(beta)
            big = lr_product(al, be, nvars=al.length + be.length + 1)
            if big != lr_product(al, be):
                return False, _witness("stability", al, be)
    return True, None


def symfun_lr_rectangle(a: int, b: int) -> Outcome:
    box = Partition((b,) * a)
    shapes = enumerate_P(a, b)
    for al in shapes:
        for be in shapes:
            want = 1 if be == al.complement(a, b) else 0
            got = lr_product(al, be).get(box, 0)
            if got != want:
                return False, _witness("pair", al, be, got, want)
    for al, be, ga in itertools.product(shapes, repeat=3):
        if al.weight + be.weight + ga.weight != a * b:
            continue
        triple = lr_iterated([al, be, ga], box)
        pair = lr_product(al, be).get(ga.complement(a, b), 0)
        if triple != pair:
            return False, _witness("triple", al, be, ga, triple, pair)
        if a * b <= 4 and triple != lr_iterated_direct([al, be, ga], box):
            return False, _witness("iterated vs direct", al, be, ga)
    return True, None


def symfun_skew_schur(i: int, weight_max: int) -> Outcome:
    for n in range(weight_max + 1):
        for be in partitions_of(n, max_len=i):
            for k in range(n + 1):
                for mu in partitions_of(k, max_len=i):
                    if not be.contains(mu):
                        continue
                    det_form = skew_schur_det(be, mu, i)
                    lr_form = LambdaElement(be.weight, skew_schur_lr(be, mu))
                    if det_form != lr_form:
                        return False, _witness(be, mu, det_form, lr_form)
    return True, None


# nilHecke

def nh_relation(family: str, **params) -> Outcome:
    for label, lhs, rhs in relation_pairs(family, params):
        if not nh_equal(lhs, rhs):
            return False, _witness(label, f"lhs = {lhs}", f"rhs = {rhs}")
    return True, None


def nh_mul_vs_composition(seed: int, a: int, trials: int) -> Outcome:
    rng = random.Random(seed)
    basis = staircase_basis(a)
    for _ in range(trials):
        u, v = random_nh(rng, a), random_nh(rng, a)
        uv = u * v
        for p in basis:
            if nh_apply(uv, p) != nh_apply(u, nh_apply(v, p)):
                return False, _witness(u, v, p)
    return True, None


def nh_pair_decomposition(a: int, b: int) -> Outcome:
    n = a + b
    shapes = enumerate_P(a, b)
    total = NHElement.zero(n)
    for al in shapes:
        total = total + e_alpha(a, b, al)
    if not nh_equal(total, thick_identity(a, b)):
        return False, _witness("sum of e_alpha", total)
    e = idempotent_e(n)
    for al in shapes:
        s = sigma_alpha(a, b, al)
        for be in shapes:
            got = lambda_alpha(a, b, be) * s
            want = e if al == be else NHElement.zero(n)
            if not nh_equal(got, want):
                return False, _witness("orthogonality", al, be, got)
    return True, None


def nh_degrees(a: int, b: int) -> Outcome:
    for al in enumerate_P(a, b):
        s, l, e = sigma_alpha(a, b, al), lambda_alpha(a, b, al), e_alpha(a, b, al)
        want = 2 * al.weight - 2 * a * b
        if not (s.is_homogeneous() and s.degree() == want):
            return False, _witness("sigma", al, s.degrees())
        if not (l.is_homogeneous() and l.degree() == -want):
            return False, _witness("lambda", al, l.degrees())
        if not (e.is_homogeneous() and e.degree() == 0):
            return False, _witness("e_alpha", al, e.degrees())
    return True, None


def nh_matrix_decomposition(a: int) -> Outcome:
    seqs = sq_sequences(a)
    if len(seqs) != len(all_perms(a)):
        return False, _witness("|Sq(a)|", len(seqs))
    total = NHElement.zero(a)
    for ell in seqs:
        total = total + e_l(ell, a)
    if not nh_equal(total, NHElement.one(a)):
        return False, _witness("sum of e_l", total)
    e = idempotent_e(a)
    sig = {ell: sigma_l(ell, a) for ell in seqs}
    for ell2 in seqs:
        lam = lambda_l(ell2, a)
        for ell in seqs:
            got = lam * sig[ell]
            want = e if ell == ell2 else NHElement.zero(a)
            if got != want:
                return False, _witness("orthogonality", ell2, ell, got)
    return True, None


def nh_iterated_forms(a: int) -> Outcome:
    for ell in sq_sequences(a):
        if not nh_equal(sigma_l(ell, a), sigma_l_iterated(ell, a)):
            return False, _witness("sigma", ell)
        if not nh_equal(lambda_l(ell, a), lambda_l_iterated(ell, a)):
            return False, _witness("lambda", ell)
    return True, None


def nh_matrix_units(a: int) -> Outcome:
    seqs = sq_sequences(a)
    ys = [MultiPoly.one(a), elementary(1, a), elementary(a, a)]
    for l1, l2, l3, l4 in itertools.product(seqs, repeat=4):
        for y, z in ((ys[0], ys[1]), (ys[1], ys[2])):
            got = matrix_unit(l1, l2, y, a) * matrix_unit(l3, l4, z, a)
            want = matrix_unit(l1, l4, y * z, a) if l2 == l3 else NHElement.zero(a)
            if got != want:
                return False, _witness("product", l1, l2, l3, l4)
    gens = [gen_x(i, a) for i in range(1, a + 1)] + [gen_dd(i, a) for i in range(1, a)]
    for g in gens:
        if from_matrix_entries(matrix_entries(g), a) != g:
            return False, _witness("roundtrip", g)
    return True, None


# Grassmannian

def grass_series_inversion(n: int, cutoff: int) -> Outcome:
    prod = grassmannian_series_product(n, cutoff)
    for m, piece in enumerate(prod):
        want = LambdaElement.one(cutoff) if m == 0 else LambdaElement.zero(cutoff)
        if piece != want:
            return False, _witness("product", m, piece)
    inverted = fake_bubble_series(n, cutoff)
    for r, v in enumerate(inverted):
        direct = bubble_value(BubbleLabel("ccw", n, r), cutoff)
        if v != direct:
            return False, _witness("inverted series", r, v, direct)
    return True, None


def grass_phi_roundtrip(n: int, cutoff: int) -> Outcome:
    for al in partitions_up_to(cutoff):
        f = LambdaElement.schur(al, cutoff)
        for orient in ("cw", "ccw"):
            back = phi_n_inverse(phi_n(f, n, orient), cutoff)
            if back != f:
                return False, _witness(orient, al, back)
            for labels in phi_n(f, n, orient):
                if sum(lab.degree for lab in labels) != 2 * al.weight:
                    return False, _witness("degree", orient, al, labels)
    return True, None


def grass_thick_bubble(a: int, box: int, n: int) -> Outcome:
    for al in enumerate_P(a, box):
        cutoff = al.weight
        for orient in ("cw", "ccw"):
            got = thick_bubble(al, a, orient, cutoff, n)
            want = thick_bubble_closed_form(al, a, orient, cutoff)
            if got != want:
                return False, _witness(orient, al, got, want)
            if got.q_degree() != 2 * al.weight:
                return False, _witness("degree", orient, al, got.q_degree())
    return True, None


def grass_higher_relation(weight_max: int) -> Outcome:
    for al in partitions_up_to(weight_max):
        expected = 1 if not al else 0
        direct = higher_grassmannian_direct(al)
        if direct != LambdaElement(al.weight, {Partition(): expected}):
            return False, _witness("direct", al, direct)
        hopf = higher_grassmannian_hopf(al)
        if hopf != MultiPoly.const(expected, hopf.nvars):
            return False, _witness("hopf", al, hopf)
    return True, None


def grass_bubble_slide(a: int) -> Outcome:
    lhs, rhs = bubble_slide_sides(a)
    return (True, None) if lhs == rhs else (False, _witness(a, lhs, rhs))


def grass_central_element(i_max: int, box: int) -> Outcome:
    for i in range(i_max + 1):
        for a in range(box + 1):
            for b in range(box + 1):
                if not central_element_check(i, a, b):
                    return False, _witness(i, a, b)
    return True, None


# quantum group

def _udot_relation_pairs(a: int, b: int, n: int):
    """(label, lhs, rhs) for every defining relation at powers a, b and weight n."""
    yield "1_n 1_m", mul(one(n), one(n + 2)), UdotElement.zero(n + 2, n)
    yield "1_n 1_n", mul(one(n), one(n)), one(n)
    yield "E 1", mul(E(a, n), one(n)), E(a, n)
    yield "1 E", mul(one(n + 2 * a), E(a, n)), E(a, n)
    yield "F 1", mul(F(b, n), one(n)), F(b, n)
    yield "1 F", mul(one(n - 2 * b), F(b, n)), F(b, n)
    yield "EE", mul(E(a, n + 2 * b), E(b, n)), E(a + b, n).scale(qbin(a + b, a))
    yield "FF", mul(F(a, n - 2 * b), F(b, n)), F(a + b, n).scale(qbin(a + b, a))
    ef = mul(E(a, n - 2 * b), F(b, n))
    rhs = UdotElement.zero(n, n + 2 * a - 2 * b)
    for j in range(min(a, b) + 1):
        rhs = rhs + FE(a - j, b - j, n).scale(qbin(a - b + n, j))
    yield "EF", ef, rhs
    fe = mul(F(b, n + 2 * a), E(a, n))
    rhs = UdotElement.zero(n, n + 2 * a - 2 * b)
    for j in range(min(a, b) + 1):
        rhs = rhs + EF(a - j, b - j, n).scale(qbin(b - a - n, j))
    yield "FE", fe, rhs


def udot_relations(power_max: int, n_range: int, act_max: int) -> Outcome:
    for a in range(power_max + 1):
        for b in range(power_max + 1):
            for n in range(-n_range, n_range + 1):
                for label, lhs, rhs in _udot_relation_pairs(a, b, n):
                    if to_ef(lhs) != to_ef(rhs):
                        return False, _witness(label, a, b, n, to_ef(lhs), to_ef(rhs))
                    if not act_equal(lhs, rhs, act_max):
                        return False, _witness("action", label, a, b, n)
    return True, None


def _canonical_elements(power_max: int, n_range: int) -> list[UdotElement]:
    out = []
    for n in range(-n_range, n_range + 1):
        for a in range(power_max + 1):
            for b in range(power_max + 1):
                tag = Tag("EF", a, b) if n <= b - a else Tag("FE", a, b)
                out.append(UdotElement.from_tag(tag.normalized(), n))
    return out


def udot_positivity(power_max: int, n_range: int) -> Outcome:
    elems = _canonical_elements(power_max, n_range)
    by_source: dict[int, list[UdotElement]] = {}
    for x in elems:
        by_source.setdefault(x.n, []).append(x)
    for y in elems:
        for x in by_source.get(y.m, []):
            prod = to_canonical(mul(x, y))
            if not prod.is_canonical_form():
                return False, _witness("not canonical", x, y, prod)
            for c in prod.terms.values():
                if not c.is_nonnegative():
                    return False, _witness(x, y, prod)
    return True, None


def udot_associativity(seed: int, trials: int, power_max: int, n_range: int) -> Outcome:
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(-n_range, n_range)
        z = UdotElement.from_tag(Tag(rng.choice(["EF", "FE"]), rng.randint(0, power_max), rng.randint(0, power_max)), n)
        y = UdotElement.from_tag(Tag(rng.choice(["EF", "FE"]), rng.randint(0, power_max), rng.randint(0, power_max)), z.m)
        x = UdotElement.from_tag(Tag(rng.choice(["EF", "FE"]), rng.randint(0, power_max), rng.randint(0, power_max)), y.m)
        left, right = mul(mul(x, y), z), mul(x, mul(y, z))
        if left != right:
            return False, _witness(x, y, z, left, right)
    return True, None


def udot_canonical_roundtrip(power_max: int, n_range: int) -> Outcome:
    for n in range(-n_range, n_range + 1):
        for a in range(power_max + 1):
            for b in range(power_max + 1):
                for order in ("EF", "FE"):
                    u = UdotElement.from_tag(Tag(order, a, b), n)
                    c = to_canonical(u)
                    if not c.is_canonical_form() or to_canonical(to_ef(c)) != c or to_ef(c) != to_ef(u):
                        return False, _witness(u, c)
                    if to_ef(to_fe(u)) != to_ef(u):
                        return False, _witness("fe roundtrip", u)
    return True, None


def udot_q_cardinality(box_max: int) -> Outcome:
    for a in range(box_max + 1):
        for b in range(box_max + 1):
            if q_cardinality(a, b) != qbin(a + b, a):
                return False, _witness(a, b, q_cardinality(a, b), qbin(a + b, a))
    return True, None


def udot_triple_canonical(power_max: int, n_range: int) -> Outcome:
    for a, b, c in itertools.product(range(1, power_max + 1), repeat=3):
        for n in range(-n_range, n_range + 1):
            if not triple_not_both_canonical(a, b, c, n):
                return False, _witness(a, b, c, n)
    return True, None


def udot_decomposition_EE(power_max: int) -> Outcome:
    for a in range(power_max + 1):
        for b in range(power_max + 1):
            if decomposition_multiplicities_EE(a, b) != qbin(a + b, a):
                return False, _witness(a, b)
            # the same coefficient is what multiplication produces
            if mul(E(a, 2 * b), E(b, 0)).coeff(Tag("EF", a + b, 0)) != decomposition_multiplicities_EE(a, b):
                return False, _witness("mul", a, b)
    return True, None


def udot_decomposition_EF(power_max: int, n_range: int) -> Outcome:
    for a in range(power_max + 1):
        for b in range(power_max + 1):
            for n in range(-n_range, n_range + 1):
                if n >= b - a:
                    series = multiplicity_series(decomposition_multiplicities_EF(a, b, n))
                    expanded = to_fe(EF(a, b, n))
                    coeffs = {j: expanded.coeff(Tag("FE", a - j, b - j)) for j in range(min(a, b) + 1)}
                    if {j: c for j, c in coeffs.items() if c} != series:
                        return False, _witness("EF", a, b, n, series, coeffs)
                if n <= b - a:
                    series = multiplicity_series(decomposition_multiplicities_FE(a, b, n))
                    expanded = to_ef(FE(a, b, n))
                    coeffs = {j: expanded.coeff(Tag("EF", a - j, b - j)) for j in range(min(a, b) + 1)}
                    if {j: c for j, c in coeffs.items() if c} != series:
                        return False, _witness("FE", a, b, n, series, coeffs)
    return True, None


def udot_gamma(power_max: int, n_range: int) -> Outcome:
    for n in range(-n_range, n_range + 1):
        for d in range(-power_max, power_max + 1):
            if not gamma_is_unitriangular(n, n + 2 * d, power_max):
                return False, _witness(n, d)
            if len(canonical_basis(n, n + 2 * d, power_max)) != power_max + 1 - abs(d):
                return False, _witness("basis size", n, d)
    return True, None


def udot_hom_rank(power_max: int, n: int, degree: int) -> Outcome:
    for a, b, d in itertools.product(range(power_max + 1), repeat=3):
        r1 = hom_rank_formula(a, b, d, n, degree)
        r2 = hom_rank_enumeration(a, b, d, n, degree)
        if r1 != r2:
            return False, _witness(a, b, d, n, r1, r2)
        if not r1.is_nonnegative():
            return False, _witness("negative coefficient", a, b, d, n, r1)
    return True, None


# registry: name -> (function, anchor)

CHECKS: dict[str, tuple[Callable[..., Outcome], str]] = {
    "arith.ring_axioms": (arith_ring_axioms, "exact arithmetic: ring axioms"),
    "arith.div_exact": (arith_div_exact_roundtrip, "exact arithmetic: exact division"),
    "arith.swap": (arith_swap, "exact arithmetic: s_i action"),
    "arith.qbin_pascal": (arith_qbin_pascal, "eq_Pab_card (balanced q-binomial)"),
    "partitions.box_count": (partitions_box_count, "eq_Pab_card"),
    "partitions.involutions": (partitions_involutions, "complement / conjugate / hat"),
    "partitions.q_cardinality": (partitions_q_cardinality, "eq_Pab_card"),
    "symfun.schur_triple": (symfun_schur_triple, "eq_schur_bialt / Jacobi-Trudy / dual Giambelli"),
    "symfun.schur_Da": (symfun_schur_Da, "eq_SchurDa"),
    "symfun.eh_relation": (symfun_eh_relation, "eq_eh_rel"),
    "symfun.elementary_coproduct": (symfun_elementary_coproduct, "eq_thickbubslide (split alphabets)"),
    "symfun.lr_basic": (symfun_lr_basic, "eq_prod_schur"),
    "symfun.lr_rectangle": (symfun_lr_rectangle, "LR rectangle rule"),
    "symfun.skew_schur": (symfun_skew_schur, "eq_weird_det / eq_skew_schur"),
    "nh.mul_vs_composition": (nh_mul_vs_composition, "nilHecke action on polynomials"),
    "nh.pair_decomposition": (nh_pair_decomposition, "e_{a,b} = sum e_alpha / cor_oval_small"),
    "nh.degrees": (nh_degrees, "eq_def_sigmalambda_alpha degrees"),
    "nh.matrix_decomposition": (nh_matrix_decomposition, "matrix decomposition of NH_a"),
    "nh.iterated_forms": (nh_iterated_forms, "iterated splitter forms of sigma_l, lambda_l"),
    "nh.matrix_units": (nh_matrix_units, "matrix units of NH_a"),
    "grass.series_inversion": (grass_series_inversion, "infinite Grassmannian relation"),
    "grass.phi_roundtrip": (grass_phi_roundtrip, "phi^n dictionary"),
    "grass.thick_bubble": (grass_thick_bubble, "thm_thickbub_det / prop_image_thickbub"),
    "grass.higher_relation": (grass_higher_relation, "hgr"),
    "grass.bubble_slide": (grass_bubble_slide, "prop_Schur-elem"),
    "grass.central_element": (grass_central_element, "central element lemma"),
    "udot.relations": (udot_relations, "eq_AUrel1 - eq_EaFb1"),
    "udot.positivity": (udot_positivity, "structure constants are in Z+[q,q^-1]"),
    "udot.associativity": (udot_associativity, "associativity of multiplication"),
    "udot.canonical_roundtrip": (udot_canonical_roundtrip, "canonical basis change of basis"),
    "udot.q_cardinality": (udot_q_cardinality, "eq_Pab_card"),
    "udot.triple_canonical": (udot_triple_canonical, "lem_triple_canonical"),
    "udot.decomposition_EE": (udot_decomposition_EE, "thm_cal_EaEb"),
    "udot.decomposition_EF": (udot_decomposition_EF, "eq_cat_EaFb"),
    "udot.gamma": (udot_gamma, "cor_overZ"),
    "udot.hom_rank": (udot_hom_rank, "HOM rank formula"),
}
for _family, (_fn, _anchor) in RELATIONS.items():
    CHECKS[_family] = (nh_relation, _anchor)


def run_check(name: str, params: dict) -> Outcome:
    try:
        fn, _ = CHECKS[name]
    except KeyError:
        raise UsageError(f"unknown check {name!r}") from None
    if fn is nh_relation:
        return nh_relation(name, **params)
    return fn(**params)


def anchor(name: str) -> str:
    return CHECKS[name][1]


def plan(suite: str, cfg: SuiteConfig) -> list[tuple[str, dict]]:
    """Jobs for one suite under the configured ranges."""
    r, w, seed = cfg.rank_max, cfg.weight_cutoff, cfg.seed
    if suite == "arith":
        jobs = [
            ("arith.ring_axioms", {"seed": seed, "trials": 40, "nvars": 3}),
            ("arith.div_exact", {"seed": seed, "trials": 40, "nvars": 3}),
            ("arith.swap", {"seed": seed, "trials": 40, "nvars": 3}),
            ("arith.qbin_pascal", {"m_range": 10, "j_max": 8}),
            ("partitions.box_count", {"box_max": 6}),
            ("partitions.involutions", {"box_max": 5}),
            ("partitions.q_cardinality", {"box_max": 6}),
        ]
    elif suite == "symfun":
        jobs = []
        for a in range(2, min(r, 4) + 1):
            jobs.append(("symfun.schur_triple", {"a": a, "box": 4}))
        for a in range(1, r + 1):
            jobs.append(("symfun.schur_Da", {"a": a, "box": 3}))
        jobs += [
            ("symfun.eh_relation", {"m_max": w, "a_max": min(r, 4)}),
            ("symfun.elementary_coproduct", {"s_max": 6, "a_max": 3}),
            ("symfun.lr_basic", {"weight_max": min(w, 4)}),
        ]
        for a in range(1, 4):
            for b in range(1, 4):
                jobs.append(("symfun.lr_rectangle", {"a": a, "b": b}))
        for i in range(1, 4):
            jobs.append(("symfun.skew_schur", {"i": i, "weight_max": min(w, 6)}))
    elif suite == "nilhecke":
        jobs = [(name, params) for name, params in families(r)]
        for a in range(1, min(r, 3) + 1):
            jobs.append(("nh.mul_vs_composition", {"seed": seed, "a": a, "trials": 10}))
        for a, b in cfg.decomposition_pairs:
            jobs.append(("nh.pair_decomposition", {"a": a, "b": b}))
            jobs.append(("nh.degrees", {"a": a, "b": b}))
        for a in range(2, min(r, 4) + 1):
            jobs.append(("nh.matrix_decomposition", {"a": a}))
            jobs.append(("nh.iterated_forms", {"a": a}))
        for a in range(2, min(r, 3) + 1):
            jobs.append(("nh.matrix_units", {"a": a}))
    elif suite == "grassmannian":
        jobs = []
        for n in range(-2, 3):
            jobs.append(("grass.series_inversion", {"n": n, "cutoff": w}))
        jobs.append(("grass.phi_roundtrip", {"n": 0, "cutoff": min(w, 6)}))
        for a in range(1, 4):
            jobs.append(("grass.thick_bubble", {"a": a, "box": 4, "n": 0}))
        jobs += [
            ("grass.higher_relation", {"weight_max": 5}),
            ("grass.central_element", {"i_max": 4, "box": 3}),
        ]
        for a in range(1, 5):
            jobs.append(("grass.bubble_slide", {"a": a}))
    elif suite == "udot":
        p, nr = cfg.power_max, cfg.n_range
        jobs = [
            ("udot.relations", {"power_max": p, "n_range": nr, "act_max": 2 * p + 4}),
            ("udot.positivity", {"power_max": p, "n_range": nr}),
            ("udot.associativity", {"seed": seed, "trials": 60, "power_max": p, "n_range": nr}),
            ("udot.canonical_roundtrip", {"power_max": p, "n_range": nr}),
            ("udot.q_cardinality", {"box_max": 6}),
            ("udot.triple_canonical", {"power_max": p, "n_range": nr + 2}),
            ("udot.decomposition_EE", {"power_max": p}),
            ("udot.decomposition_EF", {"power_max": p, "n_range": nr}),
            ("udot.gamma", {"power_max": p, "n_range": nr}),
        ]
        for n in range(-cfg.hom_n_range, cfg.hom_n_range + 1):
            jobs.append(("udot.hom_rank", {"power_max": p, "n": n, "degree": cfg.hom_degree}))
    else:
        raise UsageError(f"unknown suite {suite!r}")
    return jobs
