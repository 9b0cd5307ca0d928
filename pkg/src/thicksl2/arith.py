"""Exact integer polynomial arithmetic.

Two carriers live here:

* ``MultiPoly``: sparse polynomials in ``x_1..x_n`` with integer coefficients.
* ``LaurentQ``: Laurent polynomials in a single variable ``q``.

Both are immutable, keep no zero coefficients, and compare by their term maps,
so equal values always have identical internal state.  Python ints give the
arbitrary precision.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import InexactDivisionError, UsageError

Exps = tuple[int, ...]


def _grlex_key(e: Exps) -> tuple[int, Exps]:
    return (sum(e), e)


class MultiPoly:
    """Sparse polynomial over the integers in a fixed number of variables.

    Variables are 1-indexed in the public API (``x_1`` is ``var(1, n)``).

    >>> x1, x2 = MultiPoly.var(1, 2), MultiPoly.var(2, 2)
    >>> (x1 + x2) * (x1 - x2) == x1**2 - x2**2
    True
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exps, int] | None = None):
        if nvars < 0:
            raise UsageError(f"negative variable count {nvars}")
        clean: dict[Exps, int] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise UsageError(f"exponent {e} has wrong length for {nvars} variables")
                if c:
                    clean[tuple(e)] = c
        self.nvars = nvars
        self.terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exps, int]) -> "MultiPoly":
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, c: int, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.const(1, nvars)

    @classmethod
    def var(cls, i: int, nvars: int) -> "MultiPoly":
        if not 1 <= i <= nvars:
            raise UsageError(f"variable x{i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i - 1] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> "MultiPoly":
        e = tuple(exps)
        if any(k < 0 for k in e):
            raise UsageError(f"negative exponent in {e}")
        return cls._raw(len(e), {e: coeff} if coeff else {})

    # basic protocol

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == MultiPoly.const(other, self.nvars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __iter__(self) -> Iterator[tuple[Exps, int]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[Exps, int]]:
        """Terms in decreasing graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def coeff(self, exps: Iterable[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def _coerce(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly.const(other, self.nvars)
        if not isinstance(other, MultiPoly):
            raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")
        if other.nvars != self.nvars:
            raise UsageError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        return other

    # ring operations

    def __add__(self, other: "MultiPoly | int") -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly | int") -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            if not other:
                return MultiPoly.zero(self.nvars)
            return MultiPoly._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if len(self.terms) < len(other.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        out: dict[Exps, int] = {}
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise UsageError("negative power of a polynomial")
        result = MultiPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # structure

    def degree(self) -> int:
        """Total polynomial degree (the algebra grading is twice this). Zero has degree -1."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading_term(self) -> tuple[Exps, int]:
        if not self.terms:
            raise UsageError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def swap(self, i: int) -> "MultiPoly":
        """Apply the transposition s_i exchanging x_i and x_{i+1}."""
        if not 1 <= i <= self.nvars - 1:
            raise UsageError(f"swap index {i} out of range for {self.nvars} variables")
        k = i - 1
        out = {}
        for e, c in self.terms.items():
            f = list(e)
            f[k], f[k + 1] = f[k + 1], f[k]
            out[tuple(f)] = c
        return MultiPoly._raw(self.nvars, out)

    def permute(self, perm: Iterable[int]) -> "MultiPoly":
        """Substitute x_k -> x_{perm[k]} (0-based perm given in one-line form)."""
        p = tuple(perm)
        out = {}
        for e, c in self.terms.items():
            f = [0] * self.nvars
            for k, ek in enumerate(e):
                f[p[k]] = ek
            out[tuple(f)] = c
        return MultiPoly._raw(self.nvars, out)

    def is_symmetric(self) -> bool:
        return all(self.swap(i) == self for i in range(1, self.nvars))

    def embed(self, nvars: int, offset: int = 0) -> "MultiPoly":
        """View as a polynomial in ``nvars`` variables, placing x_k at x_{k+offset}."""
        if offset < 0 or offset + self.nvars > nvars:
            raise UsageError(f"cannot embed {self.nvars} variables at offset {offset} into {nvars}")
        pre, post = (0,) * offset, (0,) * (nvars - offset - self.nvars)
        return MultiPoly._raw(nvars, {pre + e + post: c for e, c in self.terms.items()})

    def restrict(self, keep: Iterable[int]) -> "MultiPoly":
        """Set every variable outside ``keep`` (1-based) to zero and drop it."""
        idx = [k - 1 for k in keep]
        drop = [k for k in range(self.nvars) if k not in set(idx)]
        out: dict[Exps, int] = {}
        for e, c in self.terms.items():
            if any(e[k] for k in drop):
                continue
            f = tuple(e[k] for k in idx)
            out[f] = out.get(f, 0) + c
        return MultiPoly._raw(len(idx), {e: c for e, c in out.items() if c})

    def set_zero(self, i: int) -> "MultiPoly":
        """Substitute x_i = 0, keeping the variable count."""
        k = i - 1
        return MultiPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if not e[k]})

    # exact division

    def div_exact(self, d: "MultiPoly") -> "MultiPoly":
        """Quotient q with q*d == self; raises InexactDivisionError otherwise."""
        d = self._coerce(d)
        if d.is_zero():
            raise InexactDivisionError("division by the zero polynomial")
        de, dc = d.leading_term()
        rem = dict(self.terms)
        quot: dict[Exps, int] = {}
        while rem:
            re = max(rem, key=_grlex_key)
            rc = rem[re]
            qe = tuple(a - b for a, b in zip(re, de))
            if any(k < 0 for k in qe) or rc % dc:
                raise InexactDivisionError(f"{self} is not divisible by {d}")
            qc = rc // dc
            quot[qe] = qc
            for e, c in d.terms.items():
                m = tuple(a + b for a, b in zip(qe, e))
                v = rem.get(m, 0) - qc * c
                if v:
                    rem[m] = v
                else:
                    rem.pop(m, None)
        return MultiPoly._raw(self.nvars, quot)

    def divided_difference(self, i: int) -> "MultiPoly":
        """(f - s_i f)/(x_i - x_{i+1}) computed monomial by monomial."""
        if not 1 <= i <= self.nvars - 1:
            raise UsageError(f"divided difference index {i} out of range for {self.nvars} variables")
        k = i - 1
        out: dict[Exps, int] = {}
        for e, c in self.terms.items():
            p, r = e[k], e[k + 1]
            if p == r:
                continue
            if p > r:
                hi, lo, sgn = p, r, 1
            else:
                hi, lo, sgn = r, p, -1
            f = list(e)
            for t in range(hi - lo):
                f[k], f[k + 1] = hi - 1 - t, lo + t
                m = tuple(f)
                out[m] = out.get(m, 0) + sgn * c
        return MultiPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    # display

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{k + 1}" if ek == 1 else f"x{k + 1}^{ek}" for k, ek in enumerate(e) if ek
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class LaurentQ:
    """Laurent polynomial in q with integer coefficients.

    >>> q = LaurentQ.q()
    >>> (q + q**-1) ** 2
    LaurentQ(q^2 + 2 + q^-2)
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self.terms: dict[int, int] = {int(k): v for k, v in (terms or {}).items() if v}
        self._hash: int | None = None

    @classmethod
    def q(cls, k: int = 1) -> "LaurentQ":
        return cls({k: 1})

    @classmethod
    def const(cls, c: int) -> "LaurentQ":
        return cls({0: c})

    @classmethod
    def zero(cls) -> "LaurentQ":
        return cls()

    @classmethod
    def one(cls) -> "LaurentQ":
        return cls({0: 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentQ.const(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def coeff(self, k: int) -> int:
        return self.terms.get(k, 0)

    @staticmethod
    def _lift(other: "LaurentQ | int") -> "LaurentQ":
        if isinstance(other, int):
            return LaurentQ.const(other)
        if not isinstance(other, LaurentQ):
            raise TypeError(f"cannot combine LaurentQ with {type(other).__name__}")
        return other

    def __add__(self, other: "LaurentQ | int") -> "LaurentQ":
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentQ(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentQ":
        return LaurentQ({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LaurentQ | int") -> "LaurentQ":
        return self + (-self._lift(other))

    def __rsub__(self, other: int) -> "LaurentQ":
        return self._lift(other) - self

    def __mul__(self, other: "LaurentQ | int") -> "LaurentQ":
        other = self._lift(other)
        out: dict[int, int] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentQ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentQ":
        if k < 0:
            if len(self.terms) == 1:
                (e, c), = self.terms.items()
                if c in (1, -1):
                    return LaurentQ({-e * (-k): c ** (-k)})
            raise UsageError("only monomials with unit coefficient can be inverted")
        result = LaurentQ.one()
        for _ in range(k):
            result = result * self
        return result

    def bar(self) -> "LaurentQ":
        """The involution q -> q^-1."""
        return LaurentQ({-k: c for k, c in self.terms.items()})

    def shift(self, k: int) -> "LaurentQ":
        """Multiply by q^k."""
        return LaurentQ({e + k: c for e, c in self.terms.items()})

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def min_degree(self) -> int:
        return min(self.terms)

    def max_degree(self) -> int:
        return max(self.terms)

    def truncate(self, cutoff: int) -> "LaurentQ":
        """Drop every term of q-degree above ``cutoff``."""
        return LaurentQ({k: c for k, c in self.terms.items() if k <= cutoff})

    def div_exact(self, d: "LaurentQ | int") -> "LaurentQ":
        """Exact Laurent division by long division from the top degree."""
        d = self._lift(d)
        if d.is_zero():
            raise InexactDivisionError("division by zero in Z[q,q^-1]")
        dtop = d.max_degree()
        dc = d.terms[dtop]
        dlow = d.min_degree()
        rem = dict(self.terms)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            # once the remainder sits below the divisor's span it can never clear
            if top - dtop < min(rem) - dlow:
                raise InexactDivisionError(f"{self} is not divisible by {d}")
            c = rem[top]
            if c % dc:
                raise InexactDivisionError(f"{self} is not divisible by {d}")
            k, qc = top - dtop, c // dc
            quot[k] = qc
            for e, v in d.terms.items():
                m = e + k
                nv = rem.get(m, 0) - qc * v
                if nv:
                    rem[m] = nv
                else:
                    rem.pop(m, None)
        return LaurentQ(quot)

    def as_json(self) -> dict[str, int]:
        return {str(k): self.terms[k] for k in sorted(self.terms)}

    def __repr__(self) -> str:
        return f"LaurentQ({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


# Function-style aliases for the operations named in the design notes.

def poly_add(p: MultiPoly, r: MultiPoly) -> MultiPoly:
    return p + r


def poly_mul(p: MultiPoly, r: MultiPoly) -> MultiPoly:
    return p * r


def poly_swap_vars(p: MultiPoly, i: int) -> MultiPoly:
    return p.swap(i)


def poly_div_exact(p: MultiPoly, d: MultiPoly) -> MultiPoly:
    return p.div_exact(d)


def laurent_add(f: LaurentQ, g: LaurentQ) -> LaurentQ:
    return f + g


def laurent_mul(f: LaurentQ, g: LaurentQ) -> LaurentQ:
    return f * g


def laurent_bar(f: LaurentQ) -> LaurentQ:
    return f.bar()
