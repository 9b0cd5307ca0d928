"""Diagrammatic nilHecke relations written as pairs of algebra elements.

Each ``rel_*`` function yields ``(label, lhs, rhs)`` triples for one family of
relations at the given ranks; the verification suite compares them with
``nh_equal``.  Diagrams are read bottom to top, so a product ``u * v`` puts
``u`` above ``v``.  Strands are numbered left to right.
"""

from __future__ import annotations

from typing import Iterator

from .arith import MultiPoly
from .errors import UsageError
from .nilhecke import (
    NHElement,
    block_cross,
    box_on,
    delta_a,
    gen_dd,
    gen_x,
    idempotent_e,
    longest_dd,
    merge_chain,
    splitter_merge,
    splitter_split,
    splitter_split_via_cross,
    split_chain,
    tensor,
    thick_cross,
    thick_identity,
)
from .partitions import Partition, enumerate_P, partitions_up_to
from .symfun import (
    apply_Da_to_monomial_exponents,
    complete,
    elementary,
    lr_product,
    schur,
    staircase,
)

Triple = tuple[str, NHElement, NHElement]


def _one(k: int) -> NHElement:
    return NHElement.one(k)


def _tensor(*parts: NHElement | None) -> NHElement:
    return tensor(*(p for p in parts if p is not None))


def rel_partial_Da_zero(a: int) -> Iterator[Triple]:
    D = longest_dd(a)
    z = NHElement.zero(a)
    for i in range(1, a):
        yield f"d{i}*D", gen_dd(i, a) * D, z
        yield f"D*d{i}", D * gen_dd(i, a), z


def rel_Daea(a: int) -> Iterator[Triple]:
    D, e = longest_dd(a), idempotent_e(a)
    yield "D*e=D", D * e, D
    yield "e*e=e", e * e, e
    yield "D*delta*D=D", D * delta_a(a) * D, D


def rel_boxes_1(a: int) -> Iterator[Triple]:
    """e_a absorbs e_{a-1} on the left a-1 strands, from either side."""
    if a < 2:
        return
    e = idempotent_e(a)
    low = _tensor(idempotent_e(a - 1), _one(1))
    yield "e_a(e_{a-1}x1)", e * low, e
    yield "(e_{a-1}x1)e_a", low * e, e


def rel_projector_absorb(a: int) -> Iterator[Triple]:
    """e_a (1_k x e_{a-k}) = e_a = e_a (e_{a-k} x 1_k), 1 <= k < a."""
    e = idempotent_e(a)
    for k in range(1, a):
        yield f"right k={k}", e * _tensor(_one(k), idempotent_e(a - k)), e
        yield f"left k={k}", e * _tensor(idempotent_e(a - k), _one(k)), e


def rel_boxes_2(a: int) -> Iterator[Triple]:
    """A box of a-1 strands above a crossing absorbs e_a below it."""
    if a < 2:
        return
    e = idempotent_e(a)
    top = _tensor(idempotent_e(a - 1), _one(1)) * block_cross(1, a - 1)
    yield "thin strand crosses left", top * e, top
    top2 = _tensor(_one(1), idempotent_e(a - 1)) * block_cross(a - 1, 1)
    yield "thin strand crosses right", top2 * e, top2


def rel_undercross(a: int) -> Iterator[Triple]:
    """Dots on the outer strand of a (1, a-1) or (a-1, 1) split then merge."""
    if a < 2:
        return
    e = idempotent_e(a)
    z = NHElement.zero(a)
    for b in range(a):
        left = splitter_merge(1, a - 1) * gen_x(1, a) ** b * splitter_split(1, a - 1)
        yield f"left b={b}", left, e if b == a - 1 else z
        right = splitter_merge(a - 1, 1) * gen_x(a, a) ** b * splitter_split(a - 1, 1)
        yield f"right b={b}", right, e.scale((-1) ** (a - 1)) if b == a - 1 else z


def rel_twobox(a: int, b: int) -> Iterator[Triple]:
    """Thin-line boxes on either side of a block crossing slide through."""
    cr = block_cross(a, b)
    top = _tensor(_one(b), idempotent_e(a))
    yield "a-box", top * cr * _tensor(idempotent_e(a), _one(b)), top * cr
    top2 = _tensor(idempotent_e(b), _one(a))
    yield "b-box", top2 * cr * _tensor(_one(a), idempotent_e(b)), top2 * cr


def rel_eaebcross(a: int, b: int) -> Iterator[Triple]:
    """(e_a x e_b) crossing e_{a+b} equals (delta_a x delta_b) D_{a+b}."""
    s = splitter_split(a, b)
    yield "via crossing", splitter_split_via_cross(a, b) * idempotent_e(a + b), s
    yield "crossing form", splitter_split_via_cross(a, b), s
    yield "split absorbs e_{a+b}", s * idempotent_e(a + b), s
    yield "merge absorbs e_{a+b}", idempotent_e(a + b) * splitter_merge(a, b), splitter_merge(a, b)


def rel_split_assoc(a: int, b: int, c: int) -> Iterator[Triple]:
    s_l = _tensor(splitter_split(a, b), idempotent_e(c)) * splitter_split(a + b, c)
    s_r = _tensor(idempotent_e(a), splitter_split(b, c)) * splitter_split(a, b + c)
    yield "split", s_l, s_r
    m_l = splitter_merge(a + b, c) * _tensor(splitter_merge(a, b), idempotent_e(c))
    m_r = splitter_merge(a, b + c) * _tensor(idempotent_e(a), splitter_merge(b, c))
    yield "merge", m_l, m_r


def rel_defn_thick_cross(a: int, b: int) -> Iterator[Triple]:
    t = thick_cross(a, b)
    yield "boxes above only", thick_identity(b, a) * block_cross(a, b), t
    yield "split after merge", splitter_split(b, a) * splitter_merge(a, b), t


def rel_triangle(a: int, b: int, c: int) -> Iterator[Triple]:
    """A thick line sliding past a splitter: both displayed forms."""
    lhs = (
        _tensor(idempotent_e(a), splitter_merge(c, b))
        * _tensor(thick_cross(c, a), idempotent_e(b))
        * _tensor(idempotent_e(c), splitter_split(a, b))
    )
    yield "left slide", lhs, splitter_split(a, b + c) * splitter_merge(c, a + b)
    lhs2 = (
        _tensor(splitter_merge(b, c), idempotent_e(a))
        * _tensor(idempotent_e(b), thick_cross(a, c))
        * _tensor(splitter_split(b, a), idempotent_e(c))
    )
    yield "right slide", lhs2, splitter_split(b + c, a) * splitter_merge(a + b, c)


def rel_R3(a: int, b: int, c: int) -> Iterator[Triple]:
    left = (
        _tensor(thick_cross(b, c), idempotent_e(a))
        * _tensor(idempotent_e(b), thick_cross(a, c))
        * _tensor(thick_cross(a, b), idempotent_e(c))
    )
    right = (
        _tensor(idempotent_e(c), thick_cross(a, b))
        * _tensor(thick_cross(a, c), idempotent_e(b))
        * _tensor(idempotent_e(a), thick_cross(b, c))
    )
    through = split_chain([c, b, a]) * merge_chain([a, b, c])
    yield "braid", left, right
    yield "through a single thick line", left, through


def rel_alpha_slide_up(a: int, b: int) -> Iterator[Triple]:
    """Dots on the rightmost strand pulled across the other a-1 strands below D_a."""
    if a < 2:
        return
    D = longest_dd(a)
    h = complete(b + 1 - a, a) if b + 1 - a >= 0 else MultiPoly.zero(a)
    lhs = block_cross(a - 1, 1) * gen_x(a, a) ** b * D
    rhs = NHElement.poly(h).scale((-1) ** (a - 1)) * D
    yield f"b={b}", lhs, rhs


def rel_explode(a: int) -> Iterator[Triple]:
    e, D = idempotent_e(a), longest_dd(a)
    yield "merge then explode with delta", e * delta_a(a) * D, e
    if a > 1:
        yield "merge then explode", e * D, NHElement.zero(a)


def rel_split_bs(a: int, max_dots: int) -> Iterator[Triple]:
    """Swapping the dot counts on two adjacent exploded strands flips the sign."""
    e, D = idempotent_e(a), longest_dd(a)

    def dotted(exps):
        return e * NHElement.poly(MultiPoly.monomial(exps)) * D

    for i in range(a - 1):
        for p in range(max_dots + 1):
            for r in range(max_dots + 1):
                exps = [0] * a
                exps[i], exps[i + 1] = p, r
                swapped = list(exps)
                swapped[i], swapped[i + 1] = r, p
                yield f"swap {i + 1} ({p},{r})", dotted(exps), -dotted(swapped)


def rel_schur_thin(a: int, max_weight: int) -> Iterator[Triple]:
    """pi_alpha e_a = e_a x^{alpha + delta} D_a."""
    e, D = idempotent_e(a), longest_dd(a)
    for al in partitions_up_to(max_weight, max_len=a):
        exps = tuple(p + s for p, s in zip(al.padded(a), staircase(a)))
        yield f"alpha={al}", NHElement.poly(schur(al, a)) * e, e * NHElement.poly(MultiPoly.monomial(exps)) * D


def rel_schur_splitter(a: int, max_weight: int) -> Iterator[Triple]:
    """A Schur box on a thick line passes through an explosion or a merge."""
    e, D = idempotent_e(a), longest_dd(a)
    for al in partitions_up_to(max_weight, max_len=a):
        p = NHElement.poly(schur(al, a))
        yield f"explode alpha={al}", D * p * e, p * D
        yield f"merge alpha={al}", e * p, p * e


def rel_schur_fork_slide(a: int, b: int, max_weight: int) -> Iterator[Triple]:
    """A Schur box on the a+b line slides through the splitter and the merge."""
    n = a + b
    s, m = splitter_split(a, b), splitter_merge(a, b)
    for gamma in partitions_up_to(max_weight, max_len=n):
        g = NHElement.poly(schur(gamma, n))
        split_side = NHElement.zero(n)
        merge_side = NHElement.zero(n)
        for al in partitions_up_to(gamma.weight, max_len=a):
            for be in partitions_up_to(gamma.weight - al.weight, max_len=b):
                if al.weight + be.weight != gamma.weight:
                    continue
                c = lr_product(al, be).get(gamma, 0)
                if not c:
                    continue
                boxes = box_on(schur(al, a), 0, n) * box_on(schur(be, b), a, n)
                split_side = split_side + (boxes * s).scale(c)
                merge_side = merge_side + (m * boxes).scale(c)
        yield f"split gamma={gamma}", s * g, split_side
        yield f"merge gamma={gamma}", g * m, merge_side


def rel_thickline_schur_mult(a: int, max_weight: int) -> Iterator[Triple]:
    e = idempotent_e(a)
    shapes = partitions_up_to(max_weight, max_len=a)
    for al in shapes:
        for be in shapes:
            if al > be:
                continue
            rhs = NHElement.zero(a)
            for ga, c in lr_product(al, be).items():
                if ga.length <= a:
                    rhs = rhs + NHElement.poly(schur(ga, a)).scale(c) * e
            lhs = NHElement.poly(schur(al, a)) * NHElement.poly(schur(be, a)) * e
            yield f"{al} * {be}", lhs, rhs


def schur_leftright_prediction(a: int, b: int, alpha: Partition, beta: Partition) -> tuple[int, Partition | None]:
    """Sign and partition for merge(a,b)(pi_alpha x pi_beta)split(a,b)."""
    exps = tuple(p + s for p, s in zip(alpha.padded(a), staircase(a))) + tuple(
        p + s for p, s in zip(beta.padded(b), staircase(b))
    )
    return apply_Da_to_monomial_exponents(exps)


def rel_schur_leftright(a: int, b: int, box: int) -> Iterator[Triple]:
    """Bubble of boxes between split and merge collapses to one signed Schur box or to zero."""
    n = a + b
    s, m, e = splitter_split(a, b), splitter_merge(a, b), idempotent_e(n)
    for al in enumerate_P(a, box):
        for be in enumerate_P(b, box):
            lhs = m * box_on(schur(al, a), 0, n) * box_on(schur(be, b), a, n) * s
            sign, gamma = schur_leftright_prediction(a, b, al, be)
            rhs = NHElement.zero(n) if gamma is None else (NHElement.poly(schur(gamma, n)) * e).scale(sign)
            yield f"alpha={al} beta={be}", lhs, rhs


def nil_EaEb_prediction(a: int, b: int, alpha: Partition, beta: Partition) -> tuple[int, Partition | None]:
    """Sign and partition predicted for the crossing sandwich T(b,a)(pi_beta x pi_alpha)T(a,b).

    The crossings turn the sandwich into split(a,b) (x) merge(a,b) around a Schur
    box on the thick a+b line; the box comes from applying D_{a+b} to the
    b-line exponents followed by the a-line exponents.
    """
    exps = tuple(p + s for p, s in zip(beta.padded(b), staircase(b))) + tuple(
        p + s for p, s in zip(alpha.padded(a), staircase(a))
    )
    return apply_Da_to_monomial_exponents(exps)


def rel_nil_EaEb(a: int, b: int, box: int) -> Iterator[Triple]:
    n = a + b
    s, m = splitter_split(a, b), splitter_merge(a, b)
    for al in enumerate_P(a, box):
        for be in enumerate_P(b, box):
            lhs = thick_cross(b, a) * box_on(schur(be, b), 0, n) * box_on(schur(al, a), b, n) * thick_cross(a, b)
            sign, gamma = nil_EaEb_prediction(a, b, al, be)
            rhs = NHElement.zero(n) if gamma is None else (s * NHElement.poly(schur(gamma, n)) * m).scale(sign)
            yield f"alpha={al} beta={be}", lhs, rhs


def rel_EaEone(a: int) -> Iterator[Triple]:
    """e_a x 1 decomposes through the thick a+1 line."""
    n = a + 1
    lhs = _tensor(idempotent_e(a), _one(1))
    rhs = NHElement.zero(n)
    for s in range(a + 1):
        eps = box_on(elementary(a - s, a), 0, n)
        term = eps * splitter_split(a, 1) * splitter_merge(a, 1) * gen_x(n, n) ** s
        rhs = rhs + term.scale((-1) ** s)
    yield "identity", lhs, rhs


def rel_basic(a: int) -> Iterator[Triple]:
    """Defining relations of NH_a."""
    z, one = NHElement.zero(a), NHElement.one(a)
    for i in range(1, a):
        d = gen_dd(i, a)
        yield f"d{i}^2", d * d, z
        yield f"x{i}d{i} - d{i}x{i + 1}", gen_x(i, a) * d - d * gen_x(i + 1, a), one
        yield f"d{i}x{i} - x{i + 1}d{i}", d * gen_x(i, a) - gen_x(i + 1, a) * d, one
        for j in range(1, a + 1):
            if j not in (i, i + 1):
                yield f"d{i}x{j}", d * gen_x(j, a), gen_x(j, a) * d
        for j in range(i + 2, a):
            yield f"d{i}d{j}", d * gen_dd(j, a), gen_dd(j, a) * d
        if i + 1 < a:
            d2 = gen_dd(i + 1, a)
            yield f"braid {i}", d * d2 * d, d2 * d * d2


def rel_alpha_slide_up_range(a: int) -> Iterator[Triple]:
    for b in range(a + 4):
        yield from rel_alpha_slide_up(a, b)


# family name -> (generator, anchor)
RELATIONS = {
    "nh.basic": (rel_basic, "nilHecke defining relations"),
    "nh.partial_Da_zero": (rel_partial_Da_zero, "eq_partial_Da_zero"),
    "nh.Daea": (rel_Daea, "eq_Daea / eq_partial-en"),
    "nh.boxes_1": (rel_boxes_1, "eq-boxes-1"),
    "nh.projector_absorb": (rel_projector_absorb, "eq_projector_absorb"),
    "nh.boxes_2": (rel_boxes_2, "eq-boxes-2"),
    "nh.undercross": (rel_undercross, "eq-boxes_undercross1 / eq-boxes_undercross2"),
    "nh.alpha_slide_up": (rel_alpha_slide_up_range, "lem_alpha_slide_up"),
    "nh.explode": (rel_explode, "eq_explode_rel"),
    "nh.split_bs": (rel_split_bs, "eq_split_bs"),
    "nh.schur_thin": (rel_schur_thin, "eq_schur_thin / eq_SchurDa"),
    "nh.schur_splitter": (rel_schur_splitter, "prop_schur_splitter"),
    "nh.thickline_schur_mult": (rel_thickline_schur_mult, "eq_thickline_schur_mult"),
    "nh.EaEone": (rel_EaEone, "lem_EaEone"),
    "nh.twobox": (rel_twobox, "lem-twobox"),
    "nh.eaebcross": (rel_eaebcross, "eq_eaebcross"),
    "nh.defn_thick_cross": (rel_defn_thick_cross, "eq_defn_thick_cross"),
    "nh.schur_fork_slide": (rel_schur_fork_slide, "eq_thickbubslide / eq_schur_fork_slide"),
    "nh.schur_leftright": (rel_schur_leftright, "prop_schur_leftright"),
    "nh.nil_EaEb": (rel_nil_EaEb, "eq_nil_EaEb"),
    "nh.split_assoc": (rel_split_assoc, "eq_split_assoc"),
    "nh.triangle": (rel_triangle, "eq_triangle"),
    "nh.R3": (rel_R3, "thick R3 corollary"),
}


def families(rank_max: int) -> list[tuple[str, dict]]:
    """(family name, params) for every relation family with at most ``rank_max`` strands."""
    if rank_max < 1:
        raise UsageError("rank_max must be positive")
    r = rank_max
    out: list[tuple[str, dict]] = []
    for a in range(1, r + 1):
        for name in ("nh.basic", "nh.partial_Da_zero", "nh.Daea", "nh.boxes_1", "nh.projector_absorb",
                     "nh.boxes_2", "nh.undercross", "nh.alpha_slide_up", "nh.explode"):
            out.append((name, {"a": a}))
        out.append(("nh.split_bs", {"a": a, "max_dots": 2}))
        out.append(("nh.schur_thin", {"a": a, "max_weight": 3}))
        out.append(("nh.schur_splitter", {"a": a, "max_weight": 3}))
        out.append(("nh.thickline_schur_mult", {"a": a, "max_weight": 2}))
        if a + 1 <= r:
            out.append(("nh.EaEone", {"a": a}))
    for a in range(1, r):
        for b in range(1, r - a + 1):
            for name in ("nh.twobox", "nh.eaebcross", "nh.defn_thick_cross"):
                out.append((name, {"a": a, "b": b}))
            out.append(("nh.schur_fork_slide", {"a": a, "b": b, "max_weight": 2}))
            out.append(("nh.schur_leftright", {"a": a, "b": b, "box": 2}))
            out.append(("nh.nil_EaEb", {"a": a, "b": b, "box": 2}))
            for c in range(1, r - a - b + 1):
                for name in ("nh.split_assoc", "nh.triangle", "nh.R3"):
                    out.append((name, {"a": a, "b": b, "c": c}))
    return out


def relation_pairs(name: str, params: dict) -> Iterator[Triple]:
    try:
        gen = RELATIONS[name][0]
    except KeyError:
        raise UsageError(f"unknown relation family {name!r}") from None
    return gen(**params)
