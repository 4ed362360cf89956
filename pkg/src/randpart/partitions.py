"""Integer partitions, half-integer point configurations and rim hooks.

A partition ``lam`` is encoded by its weakly decreasing positive parts.  The
associated descent set ``{lam_i - i + 1/2}`` lives in the half-integers and is
the coordinate system used by all correlation computations, so half-integers
get a small exact type of their own (stored as doubled integers; no floats).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import factorial
from typing import Iterable, Iterator

#: Enumeration guard: p(80) ~ 1.5e7 is the practical desk-scale ceiling.
MAX_ENUM_N = 80


@total_ordering
@dataclass(frozen=True, slots=True)
class HalfInt:
    """An element of Z + 1/2, stored as its doubled value (always odd)."""

    twice: int

    def __post_init__(self) -> None:
        if self.twice % 2 == 0:
            raise ValueError(f"HalfInt must be a true half-integer, got {self.twice}/2")

    @property
    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __float__(self) -> float:
        return self.twice / 2.0

    def __add__(self, n: int) -> "HalfInt":
        if not isinstance(n, int):
            return NotImplemented
        return HalfInt(self.twice + 2 * n)

    def __sub__(self, n: int) -> "HalfInt":
        if not isinstance(n, int):
            return NotImplemented
        return HalfInt(self.twice - 2 * n)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __lt__(self, other: "HalfInt") -> bool:
        return self.twice < other.twice

    def __str__(self) -> str:
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self.twice}/2)"


@dataclass(frozen=True, slots=True)
class FrobeniusCoords:
    """Modified Frobenius coordinates: positive and negative half-integers."""

    plus: tuple[HalfInt, ...]
    minus: tuple[HalfInt, ...]

    def __post_init__(self) -> None:
        if len(self.plus) != len(self.minus):
            raise ValueError("Frobenius coordinate sets must have equal size")

    def as_set(self) -> frozenset[HalfInt]:
        return frozenset(self.plus) | frozenset(self.minus)


class Partition:
    """A weakly decreasing tuple of positive integers; () is the empty partition."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):  # immutable value type
        raise AttributeError("Partition is immutable")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def part(self, i: int) -> int:
        """The i-th part with 1-based index i, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def diagonal_length(self) -> int:
        return sum(1 for i, p in enumerate(self.parts, start=1) if p >= i)

    def contains(self, other: "Partition") -> bool:
        """Diagram containment: other fits inside self."""
        if len(other) > len(self):
            return False
        return all(other.parts[i] <= self.parts[i] for i in range(len(other)))

    def dimension(self) -> int:
        """Number of standard tableaux, by the hook length formula."""
        hooks = 1
        for h, _ in hooks_and_contents(self):
            hooks *= h
        return factorial(self.size) // hooks


EMPTY = Partition()


def s_set_prefix(lam: Partition, depth: int) -> list[HalfInt]:
    """First ``depth`` elements of the descent set {lam_i - i + 1/2}."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    return [HalfInt(2 * lam.part(i) - 2 * i + 1) for i in range(1, depth + 1)]


def contains(lam: Partition, x: HalfInt) -> bool:
    """Membership of x in the descent set of lam.

    Below -len(lam)+1/2 the set coincides with the tail {-i+1/2}, so deep
    negative values are decided without scanning the parts.
    """
    ell = len(lam)
    if x.twice < -2 * ell + 1:
        return True
    m = (x.twice - 1) // 2  # need lam_i - i == m for some row i <= ell
    for i in range(1, ell + 1):
        d = lam.parts[i - 1] - i
        if d == m:
            return True
        if d < m:
            return False  # lam_i - i strictly decreases
    return False


def frobenius(lam: Partition) -> FrobeniusCoords:
    """Modified Frobenius coordinates of lam."""
    d = lam.diagonal_length()
    conj = lam.conjugate()
    plus = tuple(HalfInt(2 * lam.parts[i - 1] - 2 * i + 1) for i in range(1, d + 1))
    minus = tuple(HalfInt(-(2 * conj.parts[j - 1] - 2 * j + 1)) for j in range(1, d + 1))
    return FrobeniusCoords(plus=plus, minus=minus)


def hooks_and_contents(lam: Partition) -> list[tuple[int, int]]:
    """Per cell, in row-major order: (hook length, content = column - row)."""
    conj = lam.conjugate()
    out = []
    for i, p in enumerate(lam.parts):
        for j in range(p):
            arm = p - j - 1
            leg = conj.parts[j] - i - 1
            out.append((arm + leg + 1, j - i))
    return out


def iter_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n in descending lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > MAX_ENUM_N:
        raise ValueError(f"partition enumeration capped at n = {MAX_ENUM_N}")
    for parts in iter_partition_tuples(n):
        yield Partition(parts)


def iter_partition_tuples(n: int) -> Iterator[tuple[int, ...]]:
    """Tuple-level enumeration used by hot loops; same order as iter_partitions."""
    if n == 0:
        yield ()
        return
    r = (n,)
    yield r
    while True:
        i = len(r) - 1
        while i >= 0 and r[i] == 1:
            i -= 1
        if i < 0:
            return
        # decrement the last part > 1, then redistribute the remainder greedily
        head = r[:i] + (r[i] - 1,)
        rest = len(r) - i
        while rest > 0:
            nxt = min(head[-1], rest)
            head += (nxt,)
            rest -= nxt
        r = head
        yield r


def enumerate_partitions(n: int) -> list[Partition]:
    """Materialized iter_partitions; prefer the iterator inside large sums."""
    return list(iter_partitions(n))


def iter_partitions_chunked(n: int, nchunks: int) -> list[list[Partition]]:
    """Deterministic split of the partitions of n by largest part.

    Chunks partition the enumeration (no overlap, stable order within each),
    so parallel sums can reduce chunk results in index order.
    """
    if nchunks < 1:
        raise ValueError("nchunks must be >= 1")
    chunks: list[list[Partition]] = [[] for _ in range(nchunks)]
    for lam in iter_partitions(n):
        key = (lam.part(1)) % nchunks
        chunks[key].append(lam)
    return chunks


def partition_counts(nmax: int) -> list[int]:
    """p(0..nmax) by the bounded-largest-part recurrence."""
    table = [[0] * (nmax + 1) for _ in range(nmax + 1)]
    for m in range(nmax + 1):
        table[0][m] = 1
    for c in range(1, nmax + 1):
        for m in range(1, nmax + 1):
            table[c][m] = table[c][m - 1] + (table[c - m][m] if c >= m else 0)
    return [table[c][nmax] for c in range(nmax + 1)]


def _beta_prefix(lam: Partition, depth: int) -> list[int]:
    """Doubled descent-set prefix, largest first."""
    return [2 * lam.part(i) - 2 * i + 1 for i in range(1, depth + 1)]


def _partition_from_beta(beta: list[int]) -> Partition:
    """Rebuild a partition from a doubled descent-set prefix.

    The prefix must extend at least as deep as every modified entry; entries
    below the prefix are the untouched tail -i+1/2.
    """
    beta = sorted(beta, reverse=True)
    parts = []
    for i, tw in enumerate(beta, start=1):
        p = (tw - 1 + 2 * i) // 2
        if p > 0:
            parts.append(p)
    return Partition(parts)


def rim_hooks(mu: Partition, n: int) -> list[tuple[Partition, int]]:
    """All partitions obtained from mu by attaching a rim hook of size n.

    Returns (lam, height) pairs with height = rows occupied - 1, sorted by
    lam in descending lexicographic order.  Works on the descent set: adding
    a rim hook of size n moves one element x to the vacant x+n, and the
    height counts the set elements strictly between them.
    """
    if n < 1:
        raise ValueError("rim hook size must be >= 1")
    depth = len(mu) + n + 1
    beta = _beta_prefix(mu, depth)
    occupied = set(beta)
    out = []
    for pos, x in enumerate(beta):
        y = x + 2 * n
        if y in occupied:
            continue
        height = sum(1 for b in beta if x < b < y)
        new_beta = beta[:pos] + [y] + beta[pos + 1 :]
        out.append((_partition_from_beta(new_beta), height))
    out.sort(key=lambda t: t[0].parts, reverse=True)
    return out


def rim_hook_removals(lam: Partition, n: int) -> list[tuple[Partition, int]]:
    """All partitions obtained from lam by removing a rim hook of size n."""
    if n < 1:
        raise ValueError("rim hook size must be >= 1")
    depth = len(lam) + 1
    beta = _beta_prefix(lam, depth)
    occupied = set(beta)
    out = []
    for pos, x in enumerate(beta):
        y = x - 2 * n
        if y in occupied or y < -2 * depth + 1:
            continue
        height = sum(1 for b in beta if y < b < x)
        new_beta = beta[:pos] + [y] + beta[pos + 1 :]
        out.append((_partition_from_beta(new_beta), height))
    out.sort(key=lambda t: t[0].parts, reverse=True)
    return out
