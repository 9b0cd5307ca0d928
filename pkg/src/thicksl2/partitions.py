"""Partitions, box-bounded enumeration and the operations used to index Schur functions."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .arith import LaurentQ
from .errors import UsageError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros stripped).

    >>> Partition((2, 1, 0))
    Partition(2, 1)
    >>> Partition((2, 1)).conjugate()
    Partition(2, 1)
    """

    def __new__(cls, parts: Iterable[int] = ()):
        p = list(parts)
        for k in range(len(p) - 1):
            if p[k] < p[k + 1]:
                raise UsageError(f"parts {tuple(p)} are not weakly decreasing")
        if p and p[-1] < 0:
            raise UsageError(f"negative part in {tuple(p)}")
        while p and p[-1] == 0:
            p.pop()
        return super().__new__(cls, p)

    def __repr__(self) -> str:
        return f"Partition{tuple(self)}" if len(self) != 1 else f"Partition({self[0]})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "∅"

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (1-based), zero past the end."""
        return self[i - 1] if i <= len(self) else 0

    def padded(self, a: int) -> tuple[int, ...]:
        if len(self) > a:
            raise UsageError(f"{self} has more than {a} parts")
        return tuple(self) + (0,) * (a - len(self))

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def fits(self, a: int, b: int | None = None) -> bool:
        """Membership in P(a,b); ``b=None`` means no column bound, i.e. P(a)."""
        if len(self) > a:
            return False
        return b is None or not self or self[0] <= b

    def complement(self, a: int, b: int) -> "Partition":
        """(b - alpha_a, ..., b - alpha_1) inside the a x b box."""
        if not self.fits(a, b):
            raise UsageError(f"{self} is not in P({a},{b})")
        return Partition(b - self.part(a + 1 - i) for i in range(1, a + 1))

    def hat(self, a: int, b: int) -> "Partition":
        """Conjugate of the complement; lands in P(b,a)."""
        return self.complement(a, b).conjugate()

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))


EMPTY = Partition()


def shift(alpha: Iterable[int], m: int, length: int) -> Partition | None:
    """alpha + m over a fixed length; ``None`` when the result is not a partition."""
    p = Partition(alpha)
    parts = [x + m for x in p.padded(length)]
    if parts and parts[-1] < 0:
        return None
    return Partition(parts)


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1"``, ``"∅"``, ``"0"`` or ``""``."""
    t = text.strip().strip("()[]")
    if t in ("", "∅", "0", "empty"):
        return EMPTY
    try:
        parts = [int(s) for s in t.replace(" ", "").split(",") if s]
    except ValueError:
        raise UsageError(f"cannot parse partition {text!r}") from None
    return Partition(parts)


@lru_cache(maxsize=None)
def _box(a: int, b: int) -> tuple[Partition, ...]:
    # padded vectors with entries in [0,b], weakly decreasing
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], cap: int) -> None:
        if len(prefix) == a:
            out.append(tuple(prefix))
            return
        for v in range(cap, -1, -1):
            rec(prefix + [v], v)

    rec([], b)
    parts = [Partition(v) for v in out]
    parts.sort(key=lambda p: p.padded(a))
    return tuple(parts)


def enumerate_P(a: int, b: int) -> list[Partition]:
    """All partitions in the a x b box, in lexicographic order of the padded part vectors.

    >>> [str(p) for p in enumerate_P(2, 2)]
    ['∅', '1', '1,1', '2', '2,1', '2,2']
    """
    if a < 0 or b < 0:
        raise UsageError("box dimensions must be nonnegative")
    return list(_box(a, b))


@lru_cache(maxsize=None)
def _of_weight(n: int, max_part: int, max_len: int) -> tuple[Partition, ...]:
    if n == 0:
        return (EMPTY,)
    if max_len == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _of_weight(n - first, first, max_len - 1):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_of(n: int, max_len: int | None = None, max_part: int | None = None) -> list[Partition]:
    """Partitions of n in lexicographically decreasing order."""
    if n < 0:
        return []
    return list(_of_weight(n, n if max_part is None else max_part, n if max_len is None else max_len))


def partitions_up_to(d: int, max_len: int | None = None) -> list[Partition]:
    return [p for n in range(d + 1) for p in partitions_of(n, max_len)]


def q_cardinality(a: int, b: int) -> LaurentQ:
    """Sum of q^(2|alpha| - ab) over P(a,b)."""
    out: dict[int, int] = {}
    for p in enumerate_P(a, b):
        k = 2 * p.weight - a * b
        out[k] = out.get(k, 0) + 1
    return LaurentQ(out)
