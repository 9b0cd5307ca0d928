"""Truncated symmetric functions, the bubble dictionary and Grassmannian relations.

``LambdaElement`` stores an element of the ring of symmetric functions in the
Schur basis, keeping only weights up to a cutoff.  Bubbles in END(1_n) are
identified with this ring through the dictionary h_r <-> clockwise bubble of
degree 2r and (-1)^r epsilon_r <-> counter-clockwise bubble of degree 2r.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .arith import MultiPoly
from .errors import UsageError
from .partitions import EMPTY, Partition
from .symfun import (
    complete,
    det,
    elementary,
    lr_coeff,
    lr_product,
    schur,
    two_alphabet_expand,
)


class LambdaElement:
    """Integer combination of Schur functions with weights at most ``cutoff``.

    Products that would produce weights above the cutoff drop those terms and
    set ``truncated``; checks assert the flag stays clear on their range.
    """

    __slots__ = ("cutoff", "coeffs", "truncated")

    def __init__(self, cutoff: int, coeffs: Mapping[Iterable[int], int] | None = None, truncated: bool = False):
        self.cutoff = cutoff
        self.truncated = truncated
        clean: dict[Partition, int] = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            if not c:
                continue
            if lam.weight > cutoff:
                self.truncated = True
                continue
            clean[lam] = clean.get(lam, 0) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    # constructors

    @classmethod
    def zero(cls, cutoff: int) -> "LambdaElement":
        return cls(cutoff)

    @classmethod
    def one(cls, cutoff: int) -> "LambdaElement":
        return cls(cutoff, {EMPTY: 1})

    @classmethod
    def schur(cls, alpha: Iterable[int], cutoff: int) -> "LambdaElement":
        return cls(cutoff, {Partition(alpha): 1})

    @classmethod
    def h(cls, r: int, cutoff: int) -> "LambdaElement":
        return cls(cutoff, {Partition((r,)): 1}) if r >= 0 else cls(cutoff)

    @classmethod
    def e(cls, r: int, cutoff: int) -> "LambdaElement":
        return cls(cutoff, {Partition((1,) * r): 1}) if r >= 0 else cls(cutoff)

    # ring structure

    def _same(self, other: "LambdaElement | int") -> "LambdaElement":
        if isinstance(other, int):
            return LambdaElement(self.cutoff, {EMPTY: other})
        return other

    def __add__(self, other: "LambdaElement | int") -> "LambdaElement":
        other = self._same(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LambdaElement(min(self.cutoff, other.cutoff), out, self.truncated or other.truncated)

    __radd__ = __add__

    def __neg__(self) -> "LambdaElement":
        return LambdaElement(self.cutoff, {k: -v for k, v in self.coeffs.items()}, self.truncated)

    def __sub__(self, other: "LambdaElement | int") -> "LambdaElement":
        return self + (-self._same(other))

    def __mul__(self, other: "LambdaElement | int") -> "LambdaElement":
        if isinstance(other, int):
            return LambdaElement(self.cutoff, {k: v * other for k, v in self.coeffs.items()}, self.truncated)
        cutoff = min(self.cutoff, other.cutoff)
        truncated = self.truncated or other.truncated
        out: dict[Partition, int] = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                if a.weight + b.weight > cutoff:
                    truncated = True
                    continue
                for g, c in lr_product(a, b).items():
                    out[g] = out.get(g, 0) + ca * cb * c
        return LambdaElement(cutoff, out, truncated)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LambdaElement(self.cutoff, {EMPTY: other})
        if not isinstance(other, LambdaElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def weights(self) -> set[int]:
        return {k.weight for k in self.coeffs}

    def q_degree(self) -> int | None:
        """2|alpha| if homogeneous, None otherwise (zero counts as homogeneous of any degree)."""
        w = self.weights()
        if len(w) > 1:
            return None
        return 2 * w.pop() if w else 0

    def to_poly(self, nvars: int) -> MultiPoly:
        out = MultiPoly.zero(nvars)
        for lam, c in self.coeffs.items():
            out = out + schur(lam, nvars) * c
        return out

    def __repr__(self) -> str:
        return f"LambdaElement({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        items = sorted(self.coeffs.items(), key=lambda kv: (kv[0].weight, tuple(-x for x in kv[0])))
        return " + ".join(f"{c}*s[{lam}]" for lam, c in items).replace("+ -", "- ")


# h- and e-monomial expansions

class MonomialCombo(dict):
    """Integer combination of products h_lambda (or e_lambda), keyed by the partition lambda."""

    def __add__(self, other: "MonomialCombo") -> "MonomialCombo":
        out = MonomialCombo(self)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
            if not out[k]:
                del out[k]
        return out

    def __sub__(self, other: "MonomialCombo") -> "MonomialCombo":
        return self + MonomialCombo({k: -v for k, v in other.items()})

    def __mul__(self, other: "MonomialCombo") -> "MonomialCombo":
        out = MonomialCombo()
        for k1, v1 in self.items():
            for k2, v2 in other.items():
                k = Partition(sorted(tuple(k1) + tuple(k2), reverse=True))
                out[k] = out.get(k, 0) + v1 * v2
                if not out[k]:
                    del out[k]
        return out

    @staticmethod
    def generator(r: int) -> "MonomialCombo":
        if r < 0:
            return MonomialCombo()
        return MonomialCombo({Partition((r,)): 1})


def schur_in_h(alpha: Iterable[int]) -> MonomialCombo:
    """Jacobi-Trudy expansion of pi_alpha in the h-monomial basis."""
    alpha = Partition(alpha)
    n = len(alpha)
    rows = [[MonomialCombo.generator(alpha[i] + j - i) for j in range(n)] for i in range(n)]
    return det(rows, MonomialCombo(), MonomialCombo({EMPTY: 1}))


def schur_in_e(alpha: Iterable[int]) -> MonomialCombo:
    """Dual Giambelli expansion of pi_alpha in the e-monomial basis."""
    conj = Partition(alpha).conjugate()
    n = len(conj)
    rows = [[MonomialCombo.generator(conj[i] + j - i) for j in range(n)] for i in range(n)]
    return det(rows, MonomialCombo(), MonomialCombo({EMPTY: 1}))


def to_monomials(f: LambdaElement, kind: str) -> MonomialCombo:
    expand = schur_in_h if kind == "h" else schur_in_e
    out = MonomialCombo()
    for lam, c in f.coeffs.items():
        out = out + MonomialCombo({k: v * c for k, v in expand(lam).items()})
    return out


def from_monomials(combo: Mapping[Partition, int], kind: str, cutoff: int) -> LambdaElement:
    gen = LambdaElement.h if kind == "h" else LambdaElement.e
    out = LambdaElement.zero(cutoff)
    for lam, c in combo.items():
        term = LambdaElement.one(cutoff)
        for r in lam:
            term = term * gen(r, cutoff)
        out = out + term * c
    return out


# bubbles

@dataclass(frozen=True, order=True)
class BubbleLabel:
    """A dotted bubble in END(1_n): orientation, weight n and offset from the spade baseline."""

    orientation: str
    n: int
    offset: int

    def __post_init__(self) -> None:
        if self.orientation not in ("cw", "ccw"):
            raise UsageError(f"orientation must be 'cw' or 'ccw', got {self.orientation!r}")

    @property
    def spade(self) -> int:
        return self.n - 1 if self.orientation == "cw" else -self.n - 1

    @property
    def dots(self) -> int:
        return self.spade + self.offset

    @property
    def degree(self) -> int:
        return 2 * self.offset

    @property
    def fake(self) -> bool:
        return self.dots < 0

    def __str__(self) -> str:
        return f"{self.orientation}[n={self.n}](spade+{self.offset})"


BubbleMonomials = dict[tuple[BubbleLabel, ...], int]


def phi_n(f: LambdaElement, n: int, orientation: str = "cw") -> BubbleMonomials:
    """Image of f as a combination of products of bubbles of one orientation.

    Clockwise uses h_r -> cw(spade+r); counter-clockwise uses
    (-1)^r epsilon_r -> ccw(spade+r).  Offsets are never negative: bubbles of
    negative degree vanish.
    """
    kind = "h" if orientation == "cw" else "e"
    out: BubbleMonomials = {}
    for lam, c in to_monomials(f, kind).items():
        sign = (-1) ** lam.weight if orientation == "ccw" else 1
        key = tuple(BubbleLabel(orientation, n, r) for r in lam if r)
        out[key] = out.get(key, 0) + sign * c
    return {k: v for k, v in out.items() if v}


def bubble_value(label: BubbleLabel, cutoff: int) -> LambdaElement:
    """Inverse dictionary on a single bubble."""
    if label.offset < 0:
        return LambdaElement.zero(cutoff)
    if label.orientation == "cw":
        return LambdaElement.h(label.offset, cutoff)
    return LambdaElement.e(label.offset, cutoff) * (-1) ** label.offset


def phi_n_inverse(monomials: Mapping[tuple[BubbleLabel, ...], int], cutoff: int) -> LambdaElement:
    out = LambdaElement.zero(cutoff)
    for labels, c in monomials.items():
        term = LambdaElement.one(cutoff)
        for lab in labels:
            term = term * bubble_value(lab, cutoff)
        out = out + term * c
    return out


def fake_bubble_series(n: int, cutoff: int) -> list[LambdaElement]:
    """Counter-clockwise bubble values obtained by inverting the clockwise series.

    ccw_0 = 1 and ccw_m = -sum_{r=1}^m cw_r ccw_{m-r}, with cw_r the image of
    the clockwise bubble of offset r.  The weight n only enters the labels.
    """
    cw = [bubble_value(BubbleLabel("cw", n, r), cutoff) for r in range(cutoff + 1)]
    ccw = [LambdaElement.one(cutoff)]
    for m in range(1, cutoff + 1):
        acc = LambdaElement.zero(cutoff)
        for r in range(1, m + 1):
            acc = acc + cw[r] * ccw[m - r]
        ccw.append(-acc)
    return ccw


def fake_labels(n: int, cutoff: int, orientation: str) -> list[BubbleLabel]:
    """Labels of the bubbles of offset 0..cutoff that have a negative dot count."""
    return [lab for r in range(cutoff + 1) if (lab := BubbleLabel(orientation, n, r)).fake]


def grassmannian_series_product(n: int, cutoff: int) -> list[LambdaElement]:
    """Homogeneous pieces of (sum cw_r t^r)(sum ccw_r t^r) up to t^cutoff."""
    cw = [bubble_value(BubbleLabel("cw", n, r), cutoff) for r in range(cutoff + 1)]
    ccw = [bubble_value(BubbleLabel("ccw", n, r), cutoff) for r in range(cutoff + 1)]
    out = []
    for m in range(cutoff + 1):
        acc = LambdaElement.zero(cutoff)
        for r in range(m + 1):
            acc = acc + cw[r] * ccw[m - r]
        out.append(acc)
    return out


def thick_bubble(alpha: Iterable[int], a: int, orientation: str, cutoff: int, n: int = 0) -> LambdaElement:
    """(-1)^{a(a-1)/2} det[bubble(spade + alpha_s + t - s)] of thin bubbles, read in Lambda."""
    alpha = Partition(alpha)
    if len(alpha) > a:
        raise UsageError(f"{alpha} has more than {a} parts")
    rows = [
        [bubble_value(BubbleLabel(orientation, n, alpha.part(s) + t - s), cutoff) for t in range(1, a + 1)]
        for s in range(1, a + 1)
    ]
    d = det(rows, LambdaElement.zero(cutoff), LambdaElement.one(cutoff))
    return d * (-1) ** (a * (a - 1) // 2)


def thick_bubble_closed_form(alpha: Iterable[int], a: int, orientation: str, cutoff: int) -> LambdaElement:
    alpha = Partition(alpha)
    sign = (-1) ** (a * (a - 1) // 2)
    if orientation == "cw":
        return LambdaElement.schur(alpha, cutoff) * sign
    return LambdaElement.schur(alpha.conjugate(), cutoff) * (sign * (-1) ** alpha.weight)


# Hopf structure

def antipode(f: LambdaElement) -> LambdaElement:
    """S(pi_alpha) = (-1)^{|alpha|} pi_{conj(alpha)}."""
    return LambdaElement(
        f.cutoff, {lam.conjugate(): c * (-1) ** lam.weight for lam, c in f.coeffs.items()}, f.truncated
    )


def coproduct(f: LambdaElement) -> dict[tuple[Partition, Partition], int]:
    """Delta(pi_alpha) = sum c_{beta,gamma}^alpha pi_beta (x) pi_gamma."""
    from .partitions import partitions_of

    out: dict[tuple[Partition, Partition], int] = {}
    for alpha, c in f.coeffs.items():
        for k in range(alpha.weight + 1):
            for beta in partitions_of(k):
                if not alpha.contains(beta):
                    continue
                for gamma in partitions_of(alpha.weight - k):
                    v = lr_coeff(beta, gamma, alpha)
                    if v:
                        out[(beta, gamma)] = out.get((beta, gamma), 0) + c * v
    return {k: v for k, v in out.items() if v}


def counit(f: LambdaElement) -> int:
    return f.coeffs.get(EMPTY, 0)


def higher_grassmannian_direct(alpha: Iterable[int], cutoff: int | None = None) -> LambdaElement:
    """sum_{beta,gamma} (-1)^{|beta|} c_{beta,gamma}^alpha pi_{conj beta} pi_gamma in Lambda."""
    alpha = Partition(alpha)
    cutoff = alpha.weight if cutoff is None else cutoff
    out = LambdaElement.zero(cutoff)
    for (beta, gamma), c in coproduct(LambdaElement.schur(alpha, cutoff)).items():
        term = LambdaElement.schur(beta.conjugate(), cutoff) * LambdaElement.schur(gamma, cutoff)
        out = out + term * (c * (-1) ** beta.weight)
    return out


def _h_to_signed_e(r: int, nvars: int) -> MultiPoly:
    return elementary(r, nvars) * (-1) ** r


def higher_grassmannian_hopf(alpha: Iterable[int]) -> MultiPoly:
    """M (S (x) I) Delta applied to pi_alpha, in a polynomial model.

    The coproduct comes from splitting pi_alpha over two alphabets, the
    antipode is the ring map h_r -> (-1)^r epsilon_r applied to a Jacobi-Trudy
    expansion, and M is polynomial multiplication.  No LR coefficient or closed
    antipode formula is used.
    """
    alpha = Partition(alpha)
    n = max(1, alpha.weight)
    out = MultiPoly.zero(n)
    for (beta, gamma), c in two_alphabet_expand(alpha, n, n).items():
        s_beta = MultiPoly.zero(n)
        for lam, v in schur_in_h(beta).items():
            term = MultiPoly.one(n)
            for r in lam:
                term = term * _h_to_signed_e(r, n)
            s_beta = s_beta + term * v
        out = out + s_beta * schur(gamma, n) * c
    return out


def higher_grassmannian_check(alpha: Iterable[int]) -> bool:
    alpha = Partition(alpha)
    expected = 1 if not alpha else 0
    direct = higher_grassmannian_direct(alpha)
    hopf = higher_grassmannian_hopf(alpha)
    return direct == LambdaElement(alpha.weight, {EMPTY: expected}) and hopf == MultiPoly.const(expected, hopf.nvars)


# alphabet splitting behind the central element lemma

def central_element_coeffs(i: int, a: int, b: int, c: int | None = None) -> dict[tuple[int, int, int], MultiPoly]:
    """h_i(x,y,z) split as sum h_p(x) h_q(y) h_r(z) with |x|=a, |y|=b, |z|=c.

    The Lambda-part z is modelled by c >= i variables, which is faithful in
    degree i.  Returns the nonzero summands keyed by (p, q, r).
    """
    c = max(i, 1) if c is None else c
    n = a + b + c
    out = {}
    for p in range(i + 1):
        for q in range(i - p + 1):
            r = i - p - q
            term = complete(p, a).embed(n, 0) * complete(q, b).embed(n, a) * complete(r, c).embed(n, a + b)
            if term:
                out[(p, q, r)] = term
    return out


def central_element_check(i: int, a: int, b: int, c: int | None = None) -> bool:
    """The split sums to h_i in a+b+c variables, and x_a = y_b = 0 lands on the (a-1, b-1) split."""
    c = max(i, 1) if c is None else c
    n = a + b + c
    total = MultiPoly.zero(n)
    for term in central_element_coeffs(i, a, b, c).values():
        total = total + term
    if total != complete(i, n):
        return False
    if a == 0 or b == 0:
        return True
    keep = [k for k in range(1, n + 1) if k not in (a, a + b)]
    smaller = MultiPoly.zero(n - 2)
    for term in central_element_coeffs(i, a - 1, b - 1, c).values():
        smaller = smaller + term
    return total.restrict(keep) == smaller
