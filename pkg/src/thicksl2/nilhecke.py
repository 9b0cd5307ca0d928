"""The nilHecke algebra NH_a in normal form, and the thick calculus built inside it.

An element is stored as ``sum_w f_w * d_w``: polynomials on the left,
divided-difference operators on the right, one term per permutation ``w``.
Products follow the operator convention: ``u * v`` applies ``v`` first, which
in the diagrams means ``u`` is stacked on top of ``v``.

Permutations are 0-based one-line tuples; ``w[k]`` is where the strand that
starts at bottom position ``k`` ends at the top.  ``d_w`` for a reduced word
``s_{i1}...s_{ir}`` is ``d_{i1}...d_{ir}``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .arith import MultiPoly
from .errors import RepresentationMismatch, UsageError
from .partitions import Partition
from .symfun import elementary, schur, staircase

Perm = tuple[int, ...]

# Set to False to skip the operator-action cross-check inside nh_equal.
ACTION_CROSSCHECK = True


# permutations

class Permutation(tuple):
    """One-line notation of a permutation of {0..a-1}, with its length."""

    def __new__(cls, images: Iterable[int]):
        p = tuple(images)
        if sorted(p) != list(range(len(p))):
            raise UsageError(f"{p} is not a permutation")
        return super().__new__(cls, p)

    @property
    def length(self) -> int:
        return perm_length(tuple(self))

    def reduced_word(self) -> tuple[int, ...]:
        return reduced_word(tuple(self))


def identity_perm(a: int) -> Perm:
    return tuple(range(a))


def longest_perm(a: int) -> Perm:
    return tuple(range(a - 1, -1, -1))


@lru_cache(maxsize=None)
def perm_length(w: Perm) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def _left_swap(i: int, w: Perm) -> Perm:
    # s_i o w: exchange the values i-1 and i (i is 1-based)
    lo, hi = i - 1, i
    return tuple(hi if v == lo else lo if v == hi else v for v in w)


def _is_left_descent(i: int, w: Perm) -> bool:
    # l(s_i w) < l(w) iff value i appears before value i-1
    return w.index(i) < w.index(i - 1)


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    """Reduced word (1-based letters) by repeatedly peeling the smallest left descent."""
    word = []
    while True:
        for i in range(1, len(w)):
            if _is_left_descent(i, w):
                word.append(i)
                w = _left_swap(i, w)
                break
        else:
            return tuple(word)


@lru_cache(maxsize=None)
def compose_if_additive(v: Perm, u: Perm) -> Perm | None:
    """v o u when lengths add, else None (so that d_v d_u = d_{vu} or 0)."""
    vu = tuple(v[k] for k in u)
    if perm_length(vu) == perm_length(v) + perm_length(u):
        return vu
    return None


# divided differences on polynomials

@lru_cache(maxsize=None)
def _dd_word_on_monomial(w: Perm, exps: tuple[int, ...]) -> MultiPoly:
    p = MultiPoly.monomial(exps)
    for i in reversed(reduced_word(w)):
        p = p.divided_difference(i)
        if not p:
            break
    return p


def apply_dd(w: Perm, p: MultiPoly) -> MultiPoly:
    """d_w(p)."""
    out = MultiPoly.zero(p.nvars)
    for e, c in p.terms.items():
        out = out + _dd_word_on_monomial(w, e) * c
    return out


def divided_difference_by_quotient(p: MultiPoly, i: int) -> MultiPoly:
    """(p - s_i p)/(x_i - x_{i+1}) through exact division; the oracle for the direct formula."""
    n = p.nvars
    return (p - p.swap(i)).div_exact(MultiPoly.var(i, n) - MultiPoly.var(i + 1, n))


# d_w composed with a monomial, as a normal-form element

@lru_cache(maxsize=None)
def _dd_times_monomial(w: Perm, exps: tuple[int, ...]) -> tuple[tuple[Perm, MultiPoly], ...]:
    if perm_length(w) == 0:
        return ((w, MultiPoly.monomial(exps)),)
    word = reduced_word(w)
    i = word[0]
    rest = _left_swap(i, w)
    acc: dict[Perm, MultiPoly] = {}
    for v, p in _dd_times_monomial(rest, exps):
        # d_i o p = s_i(p) d_i + d_i(p)
        sv = _left_swap(i, v)
        if perm_length(sv) == perm_length(v) + 1:
            _acc_add(acc, sv, p.swap(i))
        dp = p.divided_difference(i)
        if dp:
            _acc_add(acc, v, dp)
    return tuple((k, acc[k]) for k in sorted(acc) if acc[k])


def _acc_add(acc: dict[Perm, MultiPoly], key: Perm, p: MultiPoly) -> None:
    cur = acc.get(key)
    acc[key] = p if cur is None else cur + p


# the element type

class NHElement:
    """Normal-form element sum_w f_w d_w of NH_a."""

    __slots__ = ("a", "terms")

    def __init__(self, a: int, terms: Mapping[Perm, MultiPoly] | None = None):
        self.a = a
        clean = {}
        for w, f in (terms or {}).items():
            w = tuple(w)
            if len(w) != a or f.nvars != a:
                raise UsageError(f"term of the wrong rank for NH_{a}")
            if f:
                clean[w] = f
        self.terms = clean

    @classmethod
    def _raw(cls, a: int, terms: dict[Perm, MultiPoly]) -> "NHElement":
        obj = cls.__new__(cls)
        obj.a = a
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, a: int) -> "NHElement":
        return cls._raw(a, {})

    @classmethod
    def one(cls, a: int) -> "NHElement":
        return cls._raw(a, {identity_perm(a): MultiPoly.one(a)})

    @classmethod
    def poly(cls, f: MultiPoly) -> "NHElement":
        return cls._raw(f.nvars, {identity_perm(f.nvars): f} if f else {})

    @classmethod
    def dd(cls, w: Iterable[int]) -> "NHElement":
        w = tuple(w)
        Permutation(w)
        return cls._raw(len(w), {w: MultiPoly.one(len(w))})

    # ring structure

    def _check(self, other: "NHElement") -> None:
        if not isinstance(other, NHElement):
            raise TypeError(f"cannot combine NHElement with {type(other).__name__}")
        if other.a != self.a:
            raise UsageError(f"rank mismatch: NH_{self.a} vs NH_{other.a}")

    def __add__(self, other: "NHElement") -> "NHElement":
        self._check(other)
        out = dict(self.terms)
        for w, f in other.terms.items():
            g = out.get(w)
            s = f if g is None else g + f
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NHElement._raw(self.a, out)

    def __neg__(self) -> "NHElement":
        return NHElement._raw(self.a, {w: -f for w, f in self.terms.items()})

    def __sub__(self, other: "NHElement") -> "NHElement":
        return self + (-other)

    def scale(self, c: "int | MultiPoly") -> "NHElement":
        """Left multiplication by an integer or a polynomial."""
        if isinstance(c, int):
            if not c:
                return NHElement.zero(self.a)
            return NHElement._raw(self.a, {w: f * c for w, f in self.terms.items()})
        out = {w: c * f for w, f in self.terms.items()}
        return NHElement._raw(self.a, {w: f for w, f in out.items() if f})

    def __mul__(self, other: "NHElement | int | MultiPoly") -> "NHElement":
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, MultiPoly):
            other = NHElement.poly(other)
        self._check(other)
        return nh_mul(self, other)

    def __rmul__(self, other: "int | MultiPoly") -> "NHElement":
        return self.scale(other)

    def __pow__(self, k: int) -> "NHElement":
        if k < 0:
            raise UsageError("negative powers are not defined")
        out = NHElement.one(self.a)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NHElement):
            return NotImplemented
        return self.a == other.a and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.a, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # structure

    def apply(self, p: MultiPoly) -> MultiPoly:
        return nh_apply(self, p)

    def degrees(self) -> set[int]:
        """Set of degrees 2 deg(mono) - 2 l(w) over all terms."""
        out = set()
        for w, f in self.terms.items():
            for e in f.terms:
                out.add(2 * sum(e) - 2 * perm_length(w))
        return out

    def degree(self) -> int | None:
        """Degree if homogeneous (zero is homogeneous of every degree and reports None)."""
        d = self.degrees()
        return d.pop() if len(d) == 1 else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def tensor(self, other: "NHElement") -> "NHElement":
        return embed_tensor(self, other)

    def __repr__(self) -> str:
        return f"NHElement({self.a}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda v: (perm_length(v), v)):
            f = self.terms[w]
            word = reduced_word(w)
            op = "".join(f"d{i}" for i in word)
            poly = str(f)
            if not op:
                parts.append(f"({poly})")
            elif poly == "1":
                parts.append(op)
            else:
                parts.append(f"({poly})*{op}")
        return " + ".join(parts)


def nh_mul(u: NHElement, v: NHElement) -> NHElement:
    """Normal-form product u*v (v acts first)."""
    a = u.a
    out: dict[Perm, MultiPoly] = {}
    for w, f in u.terms.items():
        inner: dict[Perm, MultiPoly] = {}
        for x, g in v.terms.items():
            for e, c in g.terms.items():
                for y, p in _dd_times_monomial(w, e):
                    z = compose_if_additive(y, x)
                    if z is None:
                        continue
                    _acc_add(inner, z, p * c if c != 1 else p)
        for z, p in inner.items():
            if p:
                _acc_add(out, z, f * p)
    return NHElement._raw(a, {z: p for z, p in out.items() if p})


def nh_apply(u: NHElement, p: MultiPoly) -> MultiPoly:
    """Operator action of u on a polynomial."""
    if p.nvars != u.a:
        raise UsageError(f"NH_{u.a} acts on polynomials in {u.a} variables, got {p.nvars}")
    out = MultiPoly.zero(u.a)
    for w, f in u.terms.items():
        q = apply_dd(w, p)
        if q:
            out = out + f * q
    return out


@lru_cache(maxsize=None)
def staircase_basis(a: int) -> tuple[MultiPoly, ...]:
    """The a! monomials x^beta with 0 <= beta_i <= a-i."""
    out = []

    def rec(prefix: list[int]) -> None:
        i = len(prefix)
        if i == a:
            out.append(MultiPoly.monomial(prefix))
            return
        for b in range(a - i):
            rec(prefix + [b])

    rec([])
    return tuple(out)


def action_equal(u: NHElement, v: NHElement) -> bool:
    return all(nh_apply(u, p) == nh_apply(v, p) for p in staircase_basis(u.a))


def nh_equal(u: NHElement, v: NHElement, crosscheck: bool | None = None) -> bool:
    """Normal-form equality, cross-checked against the action on the staircase basis."""
    if u.a != v.a:
        raise UsageError(f"rank mismatch: NH_{u.a} vs NH_{v.a}")
    same = u == v
    if ACTION_CROSSCHECK if crosscheck is None else crosscheck:
        if action_equal(u, v) != same:
            raise RepresentationMismatch(f"normal form says {same} for {u} vs {v}, action disagrees")
    return same


# generators and named elements

def gen_x(i: int, a: int) -> NHElement:
    return NHElement.poly(MultiPoly.var(i, a))


def gen_dd(i: int, a: int) -> NHElement:
    if not 1 <= i <= a - 1:
        raise UsageError(f"d_{i} does not exist in NH_{a}")
    return NHElement.dd(_left_swap(i, identity_perm(a)))


def longest_dd(a: int) -> NHElement:
    """D_a = d_{w_0}."""
    return NHElement.dd(longest_perm(a))


def delta_poly(a: int) -> MultiPoly:
    return MultiPoly.monomial(staircase(a))


def delta_a(a: int) -> NHElement:
    return NHElement.poly(delta_poly(a))


@lru_cache(maxsize=None)
def idempotent_e(a: int) -> NHElement:
    """e_a = delta_a D_a."""
    return NHElement._raw(a, {longest_perm(a): delta_poly(a)})


def embed_tensor(u: NHElement, v: NHElement) -> NHElement:
    """Side-by-side juxtaposition u (x) v in NH_{a+b}, v on the right."""
    a, b = u.a, v.a
    n = a + b
    out: dict[Perm, MultiPoly] = {}
    for w1, f in u.terms.items():
        fe = f.embed(n, 0)
        for w2, g in v.terms.items():
            w = tuple(w1) + tuple(a + k for k in w2)
            out[w] = fe * g.embed(n, a)
    return NHElement._raw(n, out)


def tensor(*parts: NHElement) -> NHElement:
    out = parts[0]
    for p in parts[1:]:
        out = embed_tensor(out, p)
    return out


def block_cross(p: int, q: int) -> NHElement:
    """d of the shuffle taking a left block of p strands over to the right of q strands."""
    w = tuple(k + q for k in range(p)) + tuple(k - p for k in range(p, p + q))
    return NHElement.dd(w)


def poly_element(f: MultiPoly) -> NHElement:
    return NHElement.poly(f)


def schur_box(alpha: Iterable[int], a: int) -> NHElement:
    """pi_alpha(x_1..x_a) as a central element."""
    return NHElement.poly(schur(alpha, a))


def box_on(f: MultiPoly, offset: int, n: int) -> NHElement:
    """Polynomial f placed on the strands offset+1..offset+nvars of NH_n."""
    return NHElement.poly(f.embed(n, offset))


# splitters and thick crossings

@lru_cache(maxsize=None)
def splitter_split(a: int, b: int) -> NHElement:
    """Thick a+b line splitting into a (left) and b (right): (delta_a (x) delta_b) D_{a+b}."""
    f = delta_poly(a).embed(a + b, 0) * delta_poly(b).embed(a + b, a)
    return NHElement._raw(a + b, {longest_perm(a + b): f})


def splitter_split_via_cross(a: int, b: int) -> NHElement:
    """(e_a (x) e_b) composed with the crossing of the b-block over the a-block."""
    return embed_tensor(idempotent_e(a), idempotent_e(b)) * block_cross(b, a)


@lru_cache(maxsize=None)
def splitter_merge(a: int, b: int) -> NHElement:
    """Thick a (left) and b (right) merging into a+b: e_{a+b} (e_a (x) e_b)."""
    return idempotent_e(a + b) * embed_tensor(idempotent_e(a), idempotent_e(b))


def thick_identity(*widths: int) -> NHElement:
    return tensor(*(idempotent_e(w) for w in widths))


@lru_cache(maxsize=None)
def thick_cross(a: int, b: int) -> NHElement:
    """Bottom (a, b) to top (b, a): (e_b (x) e_a) d_cross (e_a (x) e_b)."""
    return thick_identity(b, a) * block_cross(a, b) * thick_identity(a, b)


def split_chain(widths: Sequence[int]) -> NHElement:
    """Split one thick line into the given widths, always peeling the leftmost."""
    n = sum(widths)
    out = idempotent_e(n)
    rest = n
    done: list[int] = []
    for w in widths[:-1]:
        rest -= w
        step = tensor(*(idempotent_e(d) for d in done), splitter_split(w, rest)) if done else splitter_split(w, rest)
        out = step * out
        done.append(w)
    return out


def merge_chain(widths: Sequence[int]) -> NHElement:
    """Merge the given widths into one thick line, always absorbing the rightmost pair first."""
    out = thick_identity(*widths)
    ws = list(widths)
    while len(ws) > 1:
        r = ws.pop()
        l = ws.pop()
        left = [idempotent_e(w) for w in ws]
        step = tensor(*left, splitter_merge(l, r)) if left else splitter_merge(l, r)
        out = step * out
        ws.append(l + r)
    return out


# sigma/lambda for a pair of thick lines

def sigma_alpha(a: int, b: int, alpha: Iterable[int]) -> NHElement:
    """Split a+b into (a, b) with pi_alpha on the a-line above the splitter."""
    alpha = Partition(alpha)
    if not alpha.fits(a, b):
        raise UsageError(f"{alpha} is not in P({a},{b})")
    return box_on(schur(alpha, a), 0, a + b) * splitter_split(a, b)


def lambda_alpha(a: int, b: int, alpha: Iterable[int]) -> NHElement:
    """(-1)^{|hat alpha|} merge(a,b) with pi_{hat alpha} on the b-line below the merge."""
    alpha = Partition(alpha)
    if not alpha.fits(a, b):
        raise UsageError(f"{alpha} is not in P({a},{b})")
    h = alpha.hat(a, b)
    return (splitter_merge(a, b) * box_on(schur(h, b), a, a + b)).scale((-1) ** h.weight)


def e_alpha(a: int, b: int, alpha: Iterable[int]) -> NHElement:
    return sigma_alpha(a, b, alpha) * lambda_alpha(a, b, alpha)


# the full matrix decomposition

def sq_sequences(a: int) -> list[tuple[int, ...]]:
    """Sq(a): sequences l_1..l_{a-1} with 0 <= l_nu <= nu; a! of them."""
    out: list[tuple[int, ...]] = [()]
    for nu in range(1, a):
        out = [s + (v,) for s in out for v in range(nu + 1)]
    return out


def _check_sq(ell: Sequence[int], a: int) -> tuple[int, ...]:
    ell = tuple(ell)
    if len(ell) != a - 1 or any(not 0 <= v <= nu for nu, v in enumerate(ell, start=1)):
        raise UsageError(f"{ell} is not in Sq({a})")
    return ell


def std_elem_poly(ell: Sequence[int], a: int) -> MultiPoly:
    """epsilon_{l} = prod_nu epsilon_{l_nu}(x_1..x_nu) in a variables."""
    ell = _check_sq(ell, a)
    out = MultiPoly.one(a)
    for nu, v in enumerate(ell, start=1):
        out = out * elementary(v, nu).embed(a, 0)
    return out


def std_elem_monomial(ell: Sequence[int], a: int) -> NHElement:
    return NHElement.poly(std_elem_poly(ell, a))


def sigma_l(ell: Sequence[int], a: int) -> NHElement:
    """epsilon_l on the exploded thick a-line: epsilon_l D_a."""
    return std_elem_monomial(ell, a) * longest_dd(a)


def sigma_l_iterated(ell: Sequence[int], a: int) -> NHElement:
    """Same element built as a tower of (nu-1, 1) splitters with epsilon^(nu) boxes between them."""
    ell = _check_sq(ell, a)
    out = idempotent_e(a)
    for nu in range(a, 1, -1):
        ones = [NHElement.one(1)] * (a - nu)
        step = tensor(splitter_split(nu - 1, 1), *ones) if ones else splitter_split(nu - 1, 1)
        out = step * out
        if nu - 1 >= 1:
            box = box_on(elementary(ell[nu - 2], nu - 1), 0, a)
            out = box * out
    return out


def lambda_l_dots(ell: Sequence[int], a: int) -> MultiPoly:
    """(-1)^{|hat l|} x_2^{hat l_1} ... x_a^{hat l_{a-1}} with hat l_j = j - l_j."""
    ell = _check_sq(ell, a)
    hat = [j - v for j, v in enumerate(ell, start=1)]
    exps = (0,) + tuple(hat)
    return MultiPoly.monomial(exps, (-1) ** sum(hat))


def lambda_l(ell: Sequence[int], a: int) -> NHElement:
    """Signed dots on thin strands merged into the thick a-line."""
    return idempotent_e(a) * NHElement.poly(lambda_l_dots(ell, a))


def lambda_l_iterated(ell: Sequence[int], a: int) -> NHElement:
    """Same element built as a tower of (nu-1, 1) merges."""
    out = NHElement.poly(lambda_l_dots(ell, a))
    for nu in range(2, a + 1):
        ones = [NHElement.one(1)] * (a - nu)
        step = tensor(splitter_merge(nu - 1, 1), *ones) if ones else splitter_merge(nu - 1, 1)
        out = step * out
    return out


def e_l(ell: Sequence[int], a: int) -> NHElement:
    return sigma_l(ell, a) * lambda_l(ell, a)


def matrix_unit(ell: Sequence[int], ell2: Sequence[int], y: MultiPoly, a: int) -> NHElement:
    """sigma_l y lambda_l' for a symmetric polynomial y."""
    return sigma_l(ell, a) * NHElement.poly(y) * lambda_l(ell2, a)


def matrix_entries(u: NHElement) -> dict[tuple[tuple[int, ...], tuple[int, ...]], MultiPoly]:
    """Central entries y_{l,l'} with lambda_l u sigma_l' = y_{l,l'} e_a."""
    a = u.a
    ea = idempotent_e(a)
    out = {}
    for ell in sq_sequences(a):
        left = lambda_l(ell, a) * u
        for ell2 in sq_sequences(a):
            m = left * sigma_l(ell2, a)
            if not m:
                continue
            # m = y e_a with y symmetric; read y off the D_a coefficient
            f = m.terms.get(longest_perm(a))
            if f is None or set(m.terms) != {longest_perm(a)}:
                raise UsageError("entry is not a multiple of e_a")
            y = f.div_exact(delta_poly(a))
            if NHElement.poly(y) * ea != m or not y.is_symmetric():
                raise UsageError("entry is not central")
            out[(ell, ell2)] = y
    return out


def from_matrix_entries(entries: Mapping[tuple[tuple[int, ...], tuple[int, ...]], MultiPoly], a: int) -> NHElement:
    out = NHElement.zero(a)
    for (ell, ell2), y in entries.items():
        out = out + matrix_unit(ell, ell2, y, a)
    return out


def all_perms(a: int) -> list[Perm]:
    return sorted(permutations(range(a)))
