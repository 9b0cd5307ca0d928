"""Schur polynomials, Littlewood-Richardson coefficients and symmetric-function identities.

All polynomials are ``MultiPoly`` in a stated number of variables.  Three
independent Schur formulas (bialternant, Jacobi-Trudy, dual Giambelli) sit next
to a cached branching-rule workhorse ``schur`` so each can act as an oracle for
the others.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from typing import Iterable, Mapping, Sequence, TypeVar

from .arith import MultiPoly
from .errors import UsageError
from .partitions import Partition

T = TypeVar("T")
SchurCombo = dict[Partition, int]


# determinants over an arbitrary commutative ring

def det(matrix: Sequence[Sequence[T]], zero: T, one: T) -> T:
    """Determinant by Laplace expansion along rows, memoized on the used column set."""
    n = len(matrix)
    if n == 0:
        return one
    memo: dict[int, T] = {}

    def rec(row: int, used: int) -> T:
        if row == n:
            return one
        if used in memo:
            return memo[used]
        total = zero
        sign_pos = 0
        for col in range(n):
            if used >> col & 1:
                continue
            entry = matrix[row][col]
            sgn = -1 if sign_pos % 2 else 1
            sign_pos += 1
            if _is_zero(entry):
                continue
            minor = rec(row + 1, used | (1 << col))
            if _is_zero(minor):
                continue
            term = entry * minor
            total = total + term if sgn > 0 else total - term
        memo[used] = total
        return total

    return rec(0, 0)


def _is_zero(x: object) -> bool:
    if isinstance(x, int):
        return x == 0
    return not x


def permutation_sign(perm: Sequence[int]) -> int:
    sgn = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sgn = -sgn
    return sgn


# elementary and complete symmetric polynomials

@lru_cache(maxsize=None)
def elementary(m: int, a: int) -> MultiPoly:
    """epsilon_m(x_1..x_a); zero for m < 0 and m > a."""
    if m < 0 or m > a:
        return MultiPoly.zero(a)
    terms = {}
    for idx in combinations(range(a), m):
        e = [0] * a
        for k in idx:
            e[k] = 1
        terms[tuple(e)] = 1
    return MultiPoly(a, terms)


@lru_cache(maxsize=None)
def complete(m: int, a: int) -> MultiPoly:
    """h_m(x_1..x_a); zero for m < 0.  Nonzero for every m >= 0 once a >= 1."""
    if m < 0:
        return MultiPoly.zero(a)
    terms: dict[tuple[int, ...], int] = {}
    for idx in combinations_with_replacement(range(a), m):
        e = [0] * a
        for k in idx:
            e[k] += 1
        terms[tuple(e)] = 1
    return MultiPoly(a, terms)


# Schur polynomials

@lru_cache(maxsize=None)
def _schur_branching(alpha: Partition, a: int) -> MultiPoly:
    if len(alpha) > a:
        return MultiPoly.zero(a)
    if a == 0:
        return MultiPoly.one(0)
    if not alpha:
        return MultiPoly.one(a)
    # s_alpha(x_1..x_a) = sum over mu interlacing alpha of s_mu(x_1..x_{a-1}) x_a^{|alpha|-|mu|}
    padded = alpha.padded(a)
    ranges = [range(padded[k + 1], padded[k] + 1) for k in range(a - 1)]
    out = MultiPoly.zero(a)
    for mu_parts in _product(ranges):
        mu = Partition(mu_parts)
        sub = _schur_branching(mu, a - 1)
        k = alpha.weight - mu.weight
        terms = {e + (k,): c for e, c in sub.terms.items()}
        out = out + MultiPoly(a, terms)
    return out


def _product(ranges: list[range]) -> Iterable[tuple[int, ...]]:
    if not ranges:
        yield ()
        return
    for head in ranges[0]:
        for tail in _product(ranges[1:]):
            yield (head,) + tail


def schur(alpha: Iterable[int], a: int) -> MultiPoly:
    """pi_alpha(x_1..x_a) via the branching rule (cached); zero if alpha has more than a parts."""
    return _schur_branching(Partition(alpha), a)


def vandermonde(a: int) -> MultiPoly:
    out = MultiPoly.one(a)
    for r in range(1, a + 1):
        for s in range(r + 1, a + 1):
            out = out * (MultiPoly.var(r, a) - MultiPoly.var(s, a))
    return out


def alternant(exps: Sequence[int]) -> MultiPoly:
    """det[x_i^{exps_j}] as a signed sum of monomials."""
    a = len(exps)
    terms: dict[tuple[int, ...], int] = {}
    for perm in permutations(range(a)):
        e = [0] * a
        for j, i in enumerate(perm):
            e[i] = exps[j]
        key = tuple(e)
        terms[key] = terms.get(key, 0) + permutation_sign(perm)
    return MultiPoly(a, terms)


def schur_bialternant(alpha: Iterable[int], a: int) -> MultiPoly:
    """|x_i^{alpha_j + a - j}| divided exactly by the Vandermonde determinant."""
    alpha = Partition(alpha)
    if len(alpha) > a:
        return MultiPoly.zero(a)
    padded = alpha.padded(a)
    num = alternant([padded[j] + a - 1 - j for j in range(a)])
    return num.div_exact(vandermonde(a))


def schur_jacobi_trudy(alpha: Iterable[int], a: int) -> MultiPoly:
    """det[h_{alpha_i + j - i}] of size len(alpha)."""
    alpha = Partition(alpha)
    n = len(alpha)
    rows = [[complete(alpha[i] + j - i, a) for j in range(n)] for i in range(n)]
    return det(rows, MultiPoly.zero(a), MultiPoly.one(a))


def schur_dual_giambelli(alpha: Iterable[int], a: int) -> MultiPoly:
    """det[epsilon_{conj(alpha)_i + j - i}] of size alpha_1."""
    conj = Partition(alpha).conjugate()
    n = len(conj)
    rows = [[elementary(conj[i] + j - i, a) for j in range(n)] for i in range(n)]
    return det(rows, MultiPoly.zero(a), MultiPoly.one(a))


def apply_Da_to_monomial_exponents(exps: Sequence[int]) -> tuple[int, Partition | None]:
    """D_a(x^b) as sign * pi_{b''}; ``(0, None)`` when two exponents coincide.

    Exponents are sorted to strictly decreasing order b' with the sign of the
    sorting permutation, then b''_i = b'_i - a + i.

    >>> apply_Da_to_monomial_exponents((0, 1))
    (-1, Partition())
    """
    a = len(exps)
    if any(e < 0 for e in exps):
        raise UsageError(f"negative exponent in {tuple(exps)}")
    if len(set(exps)) < a:
        return 0, None
    order = sorted(range(a), key=lambda k: -exps[k])
    sgn = permutation_sign(order)
    bprime = [exps[k] for k in order]
    return sgn, Partition(bprime[i - 1] - a + i for i in range(1, a + 1))


# Schur-basis decomposition

def schur_decompose(f: MultiPoly) -> SchurCombo:
    """Write a symmetric polynomial as an integer combination of Schur polynomials.

    The graded-lex leading monomial of a symmetric polynomial is x^lambda for a
    partition lambda, and pi_lambda has leading monomial x^lambda with
    coefficient one, so peeling leading terms is a triangular solve.
    """
    a = f.nvars
    out: SchurCombo = {}
    rem = f
    while rem:
        e, c = rem.leading_term()
        if any(e[k] < e[k + 1] for k in range(a - 1)):
            raise UsageError(f"polynomial is not symmetric: leading exponent {e}")
        lam = Partition(e)
        out[lam] = out.get(lam, 0) + c
        rem = rem - schur(lam, a) * c
    return out


def schur_combo_to_poly(combo: Mapping[Partition, int], a: int) -> MultiPoly:
    out = MultiPoly.zero(a)
    for lam, c in combo.items():
        out = out + schur(lam, a) * c
    return out


# Littlewood-Richardson coefficients

@lru_cache(maxsize=None)
def _lr_product(alpha: Partition, beta: Partition, n: int) -> tuple[tuple[Partition, int], ...]:
    prod = schur(alpha, n) * schur(beta, n)
    return tuple(sorted(schur_decompose(prod).items()))


def lr_product(alpha: Iterable[int], beta: Iterable[int], nvars: int | None = None) -> SchurCombo:
    """pi_alpha * pi_beta in the Schur basis.

    The default variable count len(alpha)+len(beta) is the least count at which
    every pi_gamma with nonzero coefficient survives.
    """
    alpha, beta = Partition(alpha), Partition(beta)
    if alpha > beta:
        alpha, beta = beta, alpha
    n = len(alpha) + len(beta) if nvars is None else nvars
    return dict(_lr_product(alpha, beta, n))


def lr_coeff(alpha: Iterable[int], beta: Iterable[int], gamma: Iterable[int], nvars: int | None = None) -> int:
    """c_{alpha,beta}^gamma."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if gamma.weight != alpha.weight + beta.weight:
        return 0
    return lr_product(alpha, beta, nvars).get(gamma, 0)


def lr_iterated(alphas: Sequence[Iterable[int]], beta: Iterable[int]) -> int:
    """c_{alpha_1,...,alpha_k}^beta through a chain of pairwise coefficients."""
    if len(alphas) < 2:
        raise UsageError("iterated LR coefficients need at least two factors")
    beta = Partition(beta)
    layer: SchurCombo = {Partition(alphas[0]): 1}
    for nxt in alphas[1:]:
        new: SchurCombo = {}
        for theta, c in layer.items():
            for gamma, d in lr_product(theta, nxt).items():
                new[gamma] = new.get(gamma, 0) + c * d
        layer = new
    return layer.get(beta, 0)


def lr_iterated_direct(alphas: Sequence[Iterable[int]], beta: Iterable[int]) -> int:
    """Same coefficient from one expansion of the full product."""
    parts = [Partition(x) for x in alphas]
    n = max(1, sum(len(p) for p in parts))
    prod = MultiPoly.one(n)
    for p in parts:
        prod = prod * schur(p, n)
    return schur_decompose(prod).get(Partition(beta), 0)


def skew_schur_det(beta: Iterable[int], mu: Iterable[int], i: int):
    """det[h_{beta_s - mu_t + t - s}]_{s,t<=i} evaluated in the ring of symmetric functions."""
    from .grassmannian import LambdaElement

    beta, mu = Partition(beta), Partition(mu)
    if len(beta) > i or len(mu) > i:
        raise UsageError(f"shapes must have at most {i} parts")
    cutoff = beta.weight
    rows = [
        [LambdaElement.h(beta.part(s) - mu.part(t) + t - s, cutoff) for t in range(1, i + 1)]
        for s in range(1, i + 1)
    ]
    return det(rows, LambdaElement.zero(cutoff), LambdaElement.one(cutoff))


def skew_schur_lr(beta: Iterable[int], mu: Iterable[int]) -> SchurCombo:
    """sum over chi of c_{mu,chi}^beta pi_chi."""
    from .partitions import partitions_of

    beta, mu = Partition(beta), Partition(mu)
    out: SchurCombo = {}
    for chi in partitions_of(beta.weight - mu.weight):
        c = lr_coeff(mu, chi, beta)
        if c:
            out[chi] = c
    return out


def two_alphabet_expand(gamma: Iterable[int], a: int, b: int) -> dict[tuple[Partition, Partition], int]:
    """pi_gamma(x,y) as a combination of pi_alpha(x) pi_beta(y), x of size a and y of size b."""
    f = schur(gamma, a + b)
    out: dict[tuple[Partition, Partition], int] = {}
    rem = f
    while rem:
        e, c = rem.leading_term()
        ex, ey = e[:a], e[a:]
        if any(ex[k] < ex[k + 1] for k in range(a - 1)) or any(ey[k] < ey[k + 1] for k in range(b - 1)):
            raise UsageError(f"not symmetric in the split alphabets: {e}")
        alpha, beta = Partition(ex), Partition(ey)
        out[(alpha, beta)] = out.get((alpha, beta), 0) + c
        rem = rem - split_product(alpha, beta, a, b) * c
    return out


def split_product(alpha: Iterable[int], beta: Iterable[int], a: int, b: int) -> MultiPoly:
    """pi_alpha(x_1..x_a) * pi_beta(x_{a+1}..x_{a+b})."""
    return schur(alpha, a).embed(a + b, 0) * schur(beta, b).embed(a + b, a)


# identities used elsewhere

def eh_relation(m: int, a: int) -> MultiPoly:
    """sum_{r=0}^m (-1)^r epsilon_r h_{m-r}; vanishes for m >= 1."""
    out = MultiPoly.zero(a)
    for r in range(m + 1):
        term = elementary(r, a) * complete(m - r, a)
        out = out + term if r % 2 == 0 else out - term
    return out


def elementary_coproduct_gap(s: int, a: int, b: int) -> MultiPoly:
    """epsilon_s(x,y) - sum_l epsilon_{s-l}(x) epsilon_l(y); zero by the coproduct rule."""
    n = a + b
    rhs = MultiPoly.zero(n)
    for ell in range(s + 1):
        rhs = rhs + elementary(s - ell, a).embed(n, 0) * elementary(ell, b).embed(n, a)
    return elementary(s, n) - rhs


def bubble_slide_sides(a: int) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the Schur/elementary identity behind the thin bubble slides."""
    lhs = MultiPoly.zero(a)
    for p in range(a + 1):
        for q in range(p + 1):
            lam = Partition((p, q)).conjugate()
            lhs = lhs + schur(lam, a) * ((-1) ** (p + q) * (p - q + 1))
    rhs = MultiPoly.zero(a)
    for m in range(2 * a + 1):
        inner = MultiPoly.zero(a)
        for x in range(min(m, a) + 1):
            y = m - x
            if y <= a:
                inner = inner + elementary(x, a) * elementary(y, a)
        rhs = rhs + inner * (-1) ** m
    return lhs, rhs


def bubble_slide_coeff_identity(a: int) -> bool:
    lhs, rhs = bubble_slide_sides(a)
    return lhs == rhs


def staircase(a: int) -> tuple[int, ...]:
    """Exponents of delta_a = x_1^{a-1} x_2^{a-2} ... x_{a-1}."""
    return tuple(a - 1 - k for k in range(a))
