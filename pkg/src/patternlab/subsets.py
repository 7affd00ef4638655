"""Subsets of the ground set [n] = {1, ..., n}: colex ranking, halvings, GF(2) chains."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .gf2 import Gf2Matrix, Gf2Vector, row_basis

Subset = tuple[int, ...]


def _normalize(s: Iterable[int], n: int) -> Subset:
    t = tuple(sorted(s))
    if len(set(t)) != len(t):
        raise ValueError(f"repeated element in {t}")
    if t and (t[0] < 1 or t[-1] > n):
        raise ValueError(f"{t} is not a subset of [{n}]")
    return t


def subset_rank(s: Iterable[int], n: int) -> int:
    """Colex index of ``s`` among subsets of [n] of its size: sum of C(a_i - 1, i)."""
    t = _normalize(s, n)
    return sum(comb(a - 1, i) for i, a in enumerate(t, start=1))


def subset_unrank(idx: int, n: int, m: int) -> Subset:
    total = comb(n, m)
    if not 0 <= idx < total:
        raise ValueError(f"index {idx} out of range [0, {total})")
    out = []
    a = n
    for i in range(m, 0, -1):
        while comb(a - 1, i) > idx:
            a -= 1
        out.append(a)
        idx -= comb(a - 1, i)
        a -= 1
    return tuple(reversed(out))


@lru_cache(maxsize=None)
def _colex_table(n: int, m: int) -> tuple[Subset, ...]:
    subs = [tuple(c) for c in combinations(range(1, n + 1), m)]
    subs.sort(key=lambda s: tuple(reversed(s)))
    return tuple(subs)


@dataclass(frozen=True)
class SubsetIndexer:
    """Bijection between m-subsets of [n] and 0..C(n, m)-1 in colex order."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.m < 0:
            raise ValueError("n and m must be nonnegative")

    @property
    def total(self) -> int:
        return comb(self.n, self.m)

    def __len__(self) -> int:
        return self.total

    def rank(self, s: Iterable[int]) -> int:
        t = tuple(s)
        if len(t) != self.m:
            raise ValueError(f"expected a {self.m}-subset, got {t}")
        return subset_rank(t, self.n)

    def unrank(self, idx: int) -> Subset:
        if not 0 <= idx < self.total:
            raise ValueError(f"index {idx} out of range")
        return self.subsets()[idx]

    def subsets(self) -> tuple[Subset, ...]:
        return _colex_table(self.n, self.m)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.subsets())

    @property
    def index(self) -> dict[Subset, int]:
        return _index_map(self.n, self.m)


@lru_cache(maxsize=None)
def _index_map(n: int, m: int) -> dict[Subset, int]:
    return {s: i for i, s in enumerate(_colex_table(n, m))}


def enumerate_halvings(F: Iterable[int], h: int) -> list[tuple[Subset, Subset]]:
    """Unordered partitions of ``F`` into two ``h``-sets, each listed once.

    The side holding ``min(F)`` comes first.
    """
    t = tuple(sorted(F))
    if len(set(t)) != len(t):
        raise ValueError("F has repeated elements")
    if len(t) != 2 * h or h < 1:
        raise ValueError(f"|F| = {len(t)} is not 2*{h}")
    first, rest = t[0], t[1:]
    out = []
    for others in combinations(rest, h - 1):
        sigma = (first,) + others
        tau = tuple(x for x in rest if x not in others)
        out.append((sigma, tau))
    return out


@dataclass(frozen=True)
class Chain:
    """GF(2) chain on the full simplex over [n]; faces of ``dimension`` are (dimension+1)-sets."""

    n: int
    dimension: int
    coeffs: Gf2Vector

    def __post_init__(self) -> None:
        if self.coeffs.length != comb(self.n, self.dimension + 1):
            raise ValueError("coefficient vector length must be C(n, dimension+1)")

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int]], dimension: int | None = None) -> Chain:
        faces = [tuple(sorted(f)) for f in faces]
        if dimension is None:
            if not faces:
                raise ValueError("dimension required for an empty chain")
            dimension = len(faces[0]) - 1
        idx = SubsetIndexer(n, dimension + 1)
        bits = 0
        for f in faces:
            bits ^= 1 << idx.rank(f)
        return cls(n, dimension, Gf2Vector(idx.total, bits))

    def faces(self) -> list[Subset]:
        table = _colex_table(self.n, self.dimension + 1)
        return [table[j] for j in self.coeffs.support()]

    def is_zero(self) -> bool:
        return self.coeffs.bits == 0

    def __add__(self, other: Chain) -> Chain:
        if (self.n, self.dimension) != (other.n, other.dimension):
            raise ValueError("chains live in different groups")
        return Chain(self.n, self.dimension, self.coeffs + other.coeffs)


def boundary(c: Chain) -> Chain:
    if c.dimension < 1:
        raise ValueError("boundary of a 0-chain is not defined here")
    lower = _index_map(c.n, c.dimension)
    bits = 0
    for face in c.faces():
        for x in face:
            bits ^= 1 << lower[tuple(y for y in face if y != x)]
    return Chain(c.n, c.dimension - 1, Gf2Vector(comb(c.n, c.dimension), bits))


def boundary_matrix(n: int, dimension: int) -> Gf2Matrix:
    """Rows are faces of ``dimension``; row f is the boundary of f on (dimension-1)-faces."""
    upper = _colex_table(n, dimension + 1)
    lower = _index_map(n, dimension)
    rows = []
    for face in upper:
        bits = 0
        for x in face:
            bits ^= 1 << lower[tuple(y for y in face if y != x)]
        rows.append(bits)
    return Gf2Matrix(len(upper), comb(n, dimension), tuple(rows))


def cocycle_basis(n: int, m: int) -> list[Gf2Vector]:
    """Basis of GF(2) cochains on m-subsets of [n] that vanish on every boundary of an (m+1)-set.

    The simplex is acyclic, so these are the coboundaries of cochains on
    (m-1)-sets; the basis is the reduced row echelon form of those images.
    """
    if m < 1:
        raise ValueError("m must be positive")
    return row_basis(boundary_matrix(n, m - 1).transpose())


def complement(s: Sequence[int], n: int) -> Subset:
    ss = set(s)
    return tuple(x for x in range(1, n + 1) if x not in ss)
