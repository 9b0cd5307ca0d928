"""The idempotented quantum group for sl2 over Z[q,q^-1].

Elements of ``1_m U 1_n`` are stored as combinations of tags ``EF(a,b)``
(meaning E^(a) F^(b) 1_n) and ``FE(a,b)`` (meaning F^(b) E^(a) 1_n).  In
both tags ``a`` is the E-power and ``b`` the F-power, so the target weight is
always ``n + 2a - 2b``.  Multiplication rewrites into the EF order; the
canonical basis is derived from that normal form.

An independent check is available through the action on the irreducible
modules V(N), see ``act``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .arith import LaurentQ
from .errors import UsageError
from .partitions import enumerate_P, partitions_up_to

# q-integers and q-binomials


def qint(m: int) -> LaurentQ:
    """[m] = q^{m-1} + q^{m-3} + ... + q^{1-m}; [0] = 0 and [-m] = -[m]."""
    if m < 0:
        return -qint(-m)
    return LaurentQ({m - 1 - 2 * k: 1 for k in range(m)})


@lru_cache(maxsize=None)
def qfact(a: int) -> LaurentQ:
    if a < 0:
        raise UsageError("q-factorial of a negative number")
    out = LaurentQ.one()
    for i in range(1, a + 1):
        out = out * qint(i)
    return out


@lru_cache(maxsize=None)
def qbin(m: int, j: int) -> LaurentQ:
    """Balanced q-binomial [m choose j] for any integer m and j >= 0 (zero for j < 0).

    Nonnegative m uses the product formula with one exact Laurent division;
    negative m uses the reflection [m choose j] = (-1)^j [j-m-1 choose j].
    """
    if j < 0:
        return LaurentQ.zero()
    if j == 0:
        return LaurentQ.one()
    if m < 0:
        return qbin(-m + j - 1, j) * (-1) ** j
    num = LaurentQ.one()
    for i in range(j):
        num = num * qint(m - i)
    return num.div_exact(qfact(j))


@lru_cache(maxsize=None)
def qbin_pascal(m: int, j: int) -> LaurentQ:
    """Same values from the q-Pascal rule alone, starting at [0 choose j] = delta_{j,0}.

    [m choose j] = q^{-j} [m-1 choose j] + q^{m-j} [m-1 choose j-1], run upward
    for m > 0 and solved for [m-1 choose j] to run downward for m < 0.
    """
    if j < 0:
        return LaurentQ.zero()
    if m == 0:
        return LaurentQ.one() if j == 0 else LaurentQ.zero()
    if m > 0:
        return qbin_pascal(m - 1, j).shift(-j) + qbin_pascal(m - 1, j - 1).shift(m - j)
    # m < 0: use the rule at m+1 and solve for [m choose j]
    up = m + 1
    return (qbin_pascal(up, j) - qbin_pascal(m, j - 1).shift(up - j)).shift(j)


# tags and elements


@dataclass(frozen=True, order=True)
class Tag:
    """``EF``: E^(a) F^(b) 1_n.  ``FE``: F^(b) E^(a) 1_n."""

    order: str
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.order not in ("EF", "FE"):
            raise UsageError(f"unknown tag order {self.order!r}")
        if self.a < 0 or self.b < 0:
            raise UsageError("divided powers must be nonnegative")

    def normalized(self) -> "Tag":
        """Words with a zero power have no order; they are stored as EF."""
        if self.order == "FE" and min(self.a, self.b) == 0:
            return Tag("EF", self.a, self.b)
        return self

    def target(self, n: int) -> int:
        return n + 2 * self.a - 2 * self.b

    def label(self, n: int) -> str:
        if self.a == 0 and self.b == 0:
            return f"1_{n}"
        e = f"E^({self.a})" if self.a else ""
        f = f"F^({self.b})" if self.b else ""
        body = e + f if self.order == "EF" else f + e
        return f"{body}1_{n}"


def is_canonical(tag: Tag, n: int, boundary: str = "EF") -> bool:
    """Canonical-basis membership with the boundary n = b - a assigned to one tag order.

    Words with a zero power are canonical in either order.

    ``boundary="both"`` accepts either order at the boundary (the two words are
    equal there).
    """
    if min(tag.a, tag.b) == 0:
        return True
    d = tag.b - tag.a
    if tag.order == "EF":
        return n < d or (n == d and boundary in ("EF", "both"))
    return n > d or (n == d and boundary in ("FE", "both"))


class UdotElement:
    """A Z[q,q^-1]-combination of tags, all with source ``n`` and target ``m``."""

    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms: Mapping[Tag, LaurentQ] | None = None):
        self.n, self.m = n, m
        clean: dict[Tag, LaurentQ] = {}
        for t, c in (terms or {}).items():
            t = t.normalized()
            if t.target(n) != m:
                raise UsageError(f"{t.label(n)} does not land in weight {m}")
            if c:
                clean[t] = clean[t] + c if t in clean else c
        self.terms = {t: c for t, c in clean.items() if c}

    @classmethod
    def from_tag(cls, tag: Tag, n: int, coeff: LaurentQ | int = 1) -> "UdotElement":
        c = LaurentQ.const(coeff) if isinstance(coeff, int) else coeff
        return cls(n, tag.target(n), {tag: c})

    @classmethod
    def zero(cls, n: int, m: int) -> "UdotElement":
        return cls(n, m)

    def __add__(self, other: "UdotElement") -> "UdotElement":
        if (self.n, self.m) != (other.n, other.m):
            raise UsageError("adding elements of different weight spaces")
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out[t] + c if t in out else c
        return UdotElement(self.n, self.m, out)

    def __neg__(self) -> "UdotElement":
        return UdotElement(self.n, self.m, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other: "UdotElement") -> "UdotElement":
        return self + (-other)

    def scale(self, c: LaurentQ | int) -> "UdotElement":
        c = LaurentQ.const(c) if isinstance(c, int) else c
        return UdotElement(self.n, self.m, {t: v * c for t, v in self.terms.items()})

    def __mul__(self, other: "UdotElement") -> "UdotElement":
        return mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UdotElement):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, self.m, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_canonical_form(self, boundary: str = "EF") -> bool:
        return all(is_canonical(t, self.n, boundary) for t in self.terms)

    def coeff(self, tag: Tag) -> LaurentQ:
        return self.terms.get(tag.normalized(), LaurentQ.zero())

    def as_json(self) -> list[dict]:
        return [
            {"term": t.label(self.n), "order": t.order, "E": t.a, "F": t.b, "coeff": c.as_json()}
            for t, c in sorted(self.terms.items())
        ]

    def __repr__(self) -> str:
        return f"UdotElement({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{t.label(self.n)}" for t, c in sorted(self.terms.items()))


def E(a: int, n: int) -> UdotElement:
    return UdotElement.from_tag(Tag("EF", a, 0), n)


def F(b: int, n: int) -> UdotElement:
    return UdotElement.from_tag(Tag("EF", 0, b), n)


def one(n: int) -> UdotElement:
    return UdotElement.from_tag(Tag("EF", 0, 0), n)


def EF(a: int, b: int, n: int) -> UdotElement:
    return UdotElement.from_tag(Tag("EF", a, b), n)


def FE(a: int, b: int, n: int) -> UdotElement:
    return UdotElement.from_tag(Tag("FE", a, b), n)


# rewriting between the two orders

def fe_as_ef(a: int, b: int, n: int) -> dict[Tag, LaurentQ]:
    """F^(b) E^(a) 1_n = sum_j [b-a-n choose j] E^(a-j) F^(b-j) 1_n."""
    return {Tag("EF", a - j, b - j): qbin(b - a - n, j) for j in range(min(a, b) + 1) if qbin(b - a - n, j)}


def ef_as_fe(a: int, b: int, n: int) -> dict[Tag, LaurentQ]:
    """E^(a) F^(b) 1_n = sum_j [a-b+n choose j] F^(b-j) E^(a-j) 1_n."""
    return {Tag("FE", a - j, b - j): qbin(a - b + n, j) for j in range(min(a, b) + 1) if qbin(a - b + n, j)}


def _collect(n: int, m: int, pieces: Iterable[tuple[Mapping[Tag, LaurentQ], LaurentQ]]) -> UdotElement:
    out: dict[Tag, LaurentQ] = {}
    for mapping, c in pieces:
        for t, v in mapping.items():
            out[t] = out[t] + v * c if t in out else v * c
    return UdotElement(n, m, out)


def to_ef(u: UdotElement) -> UdotElement:
    pieces = []
    for t, c in u.terms.items():
        if t.order == "EF":
            pieces.append(({t: LaurentQ.one()}, c))
        else:
            pieces.append((fe_as_ef(t.a, t.b, u.n), c))
    return _collect(u.n, u.m, pieces)


def to_fe(u: UdotElement) -> UdotElement:
    pieces = []
    for t, c in u.terms.items():
        if t.order == "FE":
            pieces.append(({t: LaurentQ.one()}, c))
        else:
            pieces.append((ef_as_fe(t.a, t.b, u.n), c))
    return _collect(u.n, u.m, pieces)


def to_canonical(u: UdotElement) -> UdotElement:
    """Rewrite in the canonical basis (EF chosen at the boundary n = b - a)."""
    pieces = []
    for t, c in to_ef(u).terms.items():
        if is_canonical(t, u.n):
            pieces.append(({t: LaurentQ.one()}, c))
        else:
            pieces.append((ef_as_fe(t.a, t.b, u.n), c))
    return _collect(u.n, u.m, pieces)


def mul(u: UdotElement, v: UdotElement) -> UdotElement:
    """Product u v (v on the right), returned in EF normal form.

    1_k 1_l = delta_{k,l} 1_k, so incompatible weights give zero.
    """
    if u.n != v.m:
        return UdotElement.zero(v.n, u.m)
    n = v.n
    pieces = []
    for t1, c1 in to_ef(u).terms.items():
        for t2, c2 in to_ef(v).terms.items():
            a, b, c, d = t1.a, t1.b, t2.a, t2.b
            w = n - 2 * d  # weight where E^(c) acts
            for j in range(min(b, c) + 1):
                k = qbin(b - c - w, j)
                if not k:
                    continue
                coeff = k * qbin(a + c - j, a) * qbin(b - j + d, d) * c1 * c2
                pieces.append(({Tag("EF", a + c - j, b + d - j): LaurentQ.one()}, coeff))
    return _collect(n, u.m, pieces)


def word(letters: Iterable[tuple[str, int]], n: int) -> UdotElement:
    """Product of divided powers read left to right, acting on 1_n from the right.

    ``word([("E", 1), ("F", 2)], n)`` is E^(1) F^(2) 1_n.
    """
    seq = list(letters)
    out = one(n)
    weight = n
    for kind, p in reversed(seq):
        if kind == "E":
            g = E(p, weight)
            weight += 2 * p
        elif kind == "F":
            g = F(p, weight)
            weight -= 2 * p
        else:
            raise UsageError(f"unknown generator {kind!r}")
        out = mul(g, out)
    return out


# canonical basis and structure constants

def canonical_element(a: int, b: int, n: int) -> UdotElement:
    """The canonical basis vector with E-power a, F-power b and source n."""
    tag = Tag("EF", a, b) if n <= b - a else Tag("FE", a, b)
    return UdotElement.from_tag(tag.normalized(), n)


def canonical_basis(n: int, m: int, max_power: int) -> list[Tag]:
    """Canonical tags in 1_m U 1_n with both powers at most ``max_power``."""
    if (m - n) % 2:
        return []
    d = (m - n) // 2
    out = []
    for a in range(max_power + 1):
        b = a - d
        if 0 <= b <= max_power:
            out.append((Tag("EF", a, b) if n <= b - a else Tag("FE", a, b)).normalized())
    return out


def structure_constants(x: UdotElement, y: UdotElement) -> dict[Tag, LaurentQ]:
    """m_{x,y}^z for canonical x, y."""
    return dict(to_canonical(mul(x, y)).terms)


def triple_not_both_canonical(a: int, b: int, c: int, n: int) -> bool:
    """The two middle subproducts of E^(a)F^(b)E^(c)1_n (and of F^(a)E^(b)F^(c)1_n) are never both canonical."""
    if min(a, b, c) <= 0:
        raise UsageError("all of a, b, c must be positive")
    # E^(a) F^(b) 1_{n+2c} and F^(b) E^(c) 1_n
    first = is_canonical(Tag("EF", a, b), n + 2 * c, "both") and is_canonical(Tag("FE", c, b), n, "both")
    # F^(a) E^(b) 1_{n-2c} and E^(b) F^(c) 1_n
    second = is_canonical(Tag("FE", b, a), n - 2 * c, "both") and is_canonical(Tag("EF", b, c), n, "both")
    return not first and not second


# action on the irreducible modules V(N)

def act(u: UdotElement, N: int) -> dict[int, tuple[int, LaurentQ]]:
    """Matrix of u on V(N) with basis v_0..v_N (v_k of weight N - 2k).

    F^(b) v_k = [k+b choose b] v_{k+b} and E^(a) v_k = [N-k+a choose a] v_{k-a}.
    Returns k -> (k', coefficient) for the basis vectors not killed.
    """
    out: dict[int, tuple[int, LaurentQ]] = {}
    if (N - u.n) % 2:
        return out
    k = (N - u.n) // 2
    if not 0 <= k <= N:
        return out
    total = LaurentQ.zero()
    k_out = k - (u.m - u.n) // 2
    for t, c in u.terms.items():
        seq = [("F", t.b), ("E", t.a)] if t.order == "EF" else [("E", t.a), ("F", t.b)]
        pos, coeff = k, c
        for kind, p in seq:
            if kind == "F":
                if pos + p > N:
                    coeff = LaurentQ.zero()
                    break
                coeff = coeff * qbin(pos + p, p)
                pos += p
            else:
                if pos - p < 0:
                    coeff = LaurentQ.zero()
                    break
                coeff = coeff * qbin(N - pos + p, p)
                pos -= p
        total = total + coeff
    if total:
        out[k] = (k_out, total)
    return out


def act_equal(u: UdotElement, v: UdotElement, max_N: int) -> bool:
    """u and v act identically on every V(N) with N <= max_N."""
    if (u.n, u.m) != (v.n, v.m):
        return False
    return all(act(u, N) == act(v, N) for N in range(max_N + 1))


# Grothendieck-level decompositions

def decomposition_multiplicities_EE(a: int, b: int, n: int = 0) -> LaurentQ:
    """Generating function of the shifts {2|alpha| - ab : alpha in P(a,b)}."""
    shifts = Counter(2 * al.weight - a * b for al in enumerate_P(a, b))
    return LaurentQ(dict(shifts))


def decomposition_multiplicities_EF(a: int, b: int, n: int) -> dict[tuple[int, int], int]:
    """Multiset {(j, shift)} for E^(a)F^(b)1_n with n >= b - a.

    Summands F^(b-j)E^(a-j)1_n{2|alpha| - j(m-j)}, alpha in P(j, m-j), m = n+a-b.
    """
    if n < b - a:
        raise UsageError(f"E^({a})F^({b})1_{n} decomposes into FE terms only when n >= b - a")
    m = n + a - b
    out: Counter = Counter()
    for j in range(min(a, b) + 1):
        if m - j < 0:
            continue
        for al in enumerate_P(j, m - j):
            out[(j, 2 * al.weight - j * (m - j))] += 1
    return dict(out)


def decomposition_multiplicities_FE(a: int, b: int, n: int) -> dict[tuple[int, int], int]:
    """Multiset {(j, shift)} for F^(b)E^(a)1_n with n <= b - a, m = b-a-n."""
    if n > b - a:
        raise UsageError(f"F^({b})E^({a})1_{n} decomposes into EF terms only when n <= b - a")
    m = b - a - n
    out: Counter = Counter()
    for j in range(min(a, b) + 1):
        if m - j < 0:
            continue
        for al in enumerate_P(j, m - j):
            out[(j, 2 * al.weight - j * (m - j))] += 1
    return dict(out)


def multiplicity_series(mult: Mapping[tuple[int, int], int]) -> dict[int, LaurentQ]:
    """Group a (j, shift) multiset into one generating function per j."""
    out: dict[int, dict[int, int]] = {}
    for (j, s), c in mult.items():
        out.setdefault(j, {})
        out[j][s] = out[j].get(s, 0) + c
    return {j: LaurentQ(v) for j, v in out.items()}


def gamma_transition(n: int, m: int, max_power: int) -> dict[Tag, dict[Tag, LaurentQ]]:
    """EF words of 1_m U 1_n expanded in the canonical basis.

    The matrix is unitriangular (the word with powers (a,b) has coefficient 1
    on the canonical vector with powers (a,b) and otherwise only lower powers),
    so the EF words and the canonical basis span the same free module.
    """
    if (m - n) % 2:
        return {}
    d = (m - n) // 2
    out = {}
    for a in range(max_power + 1):
        b = a - d
        if 0 <= b <= max_power:
            out[Tag("EF", a, b)] = dict(to_canonical(EF(a, b, n)).terms)
    return out


def gamma_is_unitriangular(n: int, m: int, max_power: int) -> bool:
    for tag, row in gamma_transition(n, m, max_power).items():
        for t, c in row.items():
            if (t.a, t.b) == (tag.a, tag.b):
                if c != LaurentQ.one():
                    return False
            elif t.a >= tag.a:
                return False
    return True


# graded rank of HOM spaces

def _g_series(x: int, cutoff: int) -> dict[int, int]:
    """prod_{i=1}^x 1/(1 - q^{2i}) as a power series truncated above q^cutoff."""
    series = {0: 1}
    for i in range(1, x + 1):
        step = 2 * i
        new: dict[int, int] = {}
        for e, c in series.items():
            k = e
            while k <= cutoff:
                new[k] = new.get(k, 0) + c
                k += step
        series = new
    return series


def _series_mul(p: dict[int, int], r: dict[int, int], cutoff: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for e1, c1 in p.items():
        for e2, c2 in r.items():
            if e1 + e2 <= cutoff:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return out


def hom_base_degree(a: int, b: int, delta: int, n: int, j: int) -> int:
    return 2 * j * (j + b - a - n) + delta * delta + delta * (b - a - n + 2 * j)


def hom_rank_formula(a: int, b: int, delta: int, n: int, cutoff: int) -> LaurentQ:
    """sum_j q^{base(j)} g(a-j) g(b-j) g(delta+j) g(j), terms of degree <= cutoff."""
    _check_hom_args(a, b, delta)
    out: dict[int, int] = {}
    for j in range(min(a, b) + 1):
        base = hom_base_degree(a, b, delta, n, j)
        room = cutoff - base
        if room < 0:
            continue
        prod = {0: 1}
        for x in (a - j, b - j, delta + j, j):
            prod = _series_mul(prod, _g_series(x, room), room)
        for e, c in prod.items():
            out[e + base] = out.get(e + base, 0) + c
    return LaurentQ(out)


def hom_rank_enumeration(a: int, b: int, delta: int, n: int, cutoff: int) -> LaurentQ:
    """Count basis diagrams (alpha, beta, gamma, sigma) by degree, keeping degrees <= cutoff."""
    _check_hom_args(a, b, delta)
    out: dict[int, int] = {}
    for j in range(min(a, b) + 1):
        base = hom_base_degree(a, b, delta, n, j)
        room = cutoff - base
        if room < 0:
            continue
        w_max = room // 2
        shapes = [partitions_up_to(w_max, max_len=x) for x in (a - j, b - j, delta + j, j)]
        weights = [Counter(p.weight for p in s) for s in shapes]
        # fold the four factors one at a time, counting shapes per total weight
        acc = Counter({0: 1})
        for wc in weights:
            nxt: Counter = Counter()
            for w1, c1 in acc.items():
                for w2, c2 in wc.items():
                    if w1 + w2 <= w_max:
                        nxt[w1 + w2] += c1 * c2
            acc = nxt
        for w, c in acc.items():
            out[base + 2 * w] = out.get(base + 2 * w, 0) + c
    return LaurentQ(out)


def hom_rank(a: int, b: int, delta: int, n: int, cutoff: int) -> tuple[LaurentQ, LaurentQ]:
    """Both routes; callers compare them."""
    return hom_rank_formula(a, b, delta, n, cutoff), hom_rank_enumeration(a, b, delta, n, cutoff)


def _check_hom_args(a: int, b: int, delta: int) -> None:
    if min(a, b, delta) < 0:
        raise UsageError("a, b and delta must be nonnegative")
