"""Exact linear algebra over GF(2) on int bitsets.

Bit ``j`` of a packed row is the entry in column ``j``.  Python ints act as
arbitrarily wide machine words, so a row of any width XORs in one operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class Gf2Vector:
    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond vector length")

    @classmethod
    def zeros(cls, length: int) -> Gf2Vector:
        return cls(length, 0)

    @classmethod
    def unit(cls, length: int, i: int) -> Gf2Vector:
        if not 0 <= i < length:
            raise IndexError(i)
        return cls(length, 1 << i)

    @classmethod
    def from_list(cls, values: Iterable[int]) -> Gf2Vector:
        values = list(values)
        return cls(len(values), _pack(values))

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __len__(self) -> int:
        return self.length

    def __add__(self, other: Gf2Vector) -> Gf2Vector:
        if other.length != self.length:
            raise ValueError("length mismatch")
        return Gf2Vector(self.length, self.bits ^ other.bits)

    __xor__ = __add__

    def dot(self, other: Gf2Vector) -> int:
        if other.length != self.length:
            raise ValueError("length mismatch")
        return (self.bits & other.bits).bit_count() & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        return [j for j in range(self.length) if (self.bits >> j) & 1]


@dataclass(frozen=True)
class Gf2Matrix:
    """Dense GF(2) matrix stored as one packed int per row."""

    rows: int
    cols: int
    row_data: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.row_data) != self.rows:
            raise ValueError("row count mismatch")
        for r in self.row_data:
            if r < 0 or r >> self.cols:
                raise ValueError("row has bits beyond column count")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Gf2Matrix:
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, size: int) -> Gf2Matrix:
        return cls(size, size, tuple(1 << i for i in range(size)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> Gf2Matrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(_pack(r) for r in rows))

    @classmethod
    def from_vectors(cls, vectors: Sequence[Gf2Vector], cols: int | None = None) -> Gf2Matrix:
        if cols is None:
            cols = vectors[0].length if vectors else 0
        if any(v.length != cols for v in vectors):
            raise ValueError("vector length mismatch")
        return cls(len(vectors), cols, tuple(v.bits for v in vectors))

    @classmethod
    def from_numpy(cls, array: np.ndarray) -> Gf2Matrix:
        a = np.asarray(array, dtype=np.uint8) & 1
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        return cls.from_rows(a.tolist(), cols=a.shape[1])

    def to_numpy(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for i, r in enumerate(self.row_data):
            for j in _bits(r):
                out[i, j] = 1
        return out

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.row_data]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return (self.row_data[i] >> j) & 1

    def row(self, i: int) -> Gf2Vector:
        return Gf2Vector(self.cols, self.row_data[i])

    def column(self, j: int) -> Gf2Vector:
        return Gf2Vector(self.rows, sum(((r >> j) & 1) << i for i, r in enumerate(self.row_data)))

    def transpose(self) -> Gf2Matrix:
        out = [0] * self.cols
        for i, r in enumerate(self.row_data):
            for j in _bits(r):
                out[j] |= 1 << i
        return Gf2Matrix(self.cols, self.rows, tuple(out))

    @property
    def T(self) -> Gf2Matrix:
        return self.transpose()

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and self.transpose().row_data == self.row_data

    def is_zero(self) -> bool:
        return not any(self.row_data)

    def diagonal(self) -> Gf2Vector:
        size = min(self.rows, self.cols)
        return Gf2Vector(size, sum(((self.row_data[i] >> i) & 1) << i for i in range(size)))

    def __add__(self, other: Gf2Matrix) -> Gf2Matrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Gf2Matrix(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.row_data, other.row_data)))

    def __matmul__(self, other):
        if isinstance(other, Gf2Vector):
            return self.apply(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for r in self.row_data:
            acc = 0
            for j in _bits(r):
                acc ^= other.row_data[j]
            out.append(acc)
        return Gf2Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Gf2Vector) -> Gf2Vector:
        """Matrix-vector product ``self @ v``."""
        if v.length != self.cols:
            raise ValueError("shape mismatch")
        bits = 0
        for i, r in enumerate(self.row_data):
            if (r & v.bits).bit_count() & 1:
                bits |= 1 << i
        return Gf2Vector(self.rows, bits)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Gf2Matrix:
        out = []
        for i in rows:
            r = self.row_data[i]
            out.append(sum(((r >> c) & 1) << t for t, c in enumerate(cols)))
        return Gf2Matrix(len(rows), len(cols), tuple(out))


@dataclass(frozen=True)
class AffineSolutionSpace:
    """Solution set ``particular + span(nullspace_basis)``; ``particular`` is None when infeasible."""

    particular: Gf2Vector | None
    nullspace_basis: tuple[Gf2Vector, ...]

    @property
    def feasible(self) -> bool:
        return self.particular is not None

    @property
    def dimension(self) -> int:
        return len(self.nullspace_basis) if self.feasible else -1

    def member(self, combination: int) -> Gf2Vector:
        """Solution selected by the bits of ``combination`` over the nullspace basis."""
        if self.particular is None:
            raise ValueError("infeasible system has no members")
        bits = self.particular.bits
        for t in _bits(combination):
            bits ^= self.nullspace_basis[t].bits
        return Gf2Vector(self.particular.length, bits)

    def sample(self, rng: np.random.Generator) -> Gf2Vector:
        mask = int.from_bytes(rng.bytes((len(self.nullspace_basis) + 7) // 8 or 1), "little")
        return self.member(mask & ((1 << len(self.nullspace_basis)) - 1))


def _pack(values: Iterable[int]) -> int:
    bits = 0
    for j, x in enumerate(values):
        if x & 1:
            bits |= 1 << j
    return bits


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _eliminate(row_data: Sequence[int], n_cols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form, scanning columns left to right.

    Among the rows still unused, the lowest-indexed one holding the current
    column becomes its pivot.  Returns (pivot rows, pivot columns).
    """
    work = list(row_data)
    pivot_cols: list[int] = []
    start = 0
    for col in range(n_cols):
        bit = 1 << col
        piv = next((r for r in range(start, len(work)) if work[r] & bit), None)
        if piv is None:
            continue
        work[start], work[piv] = work[piv], work[start]
        prow = work[start]
        for r in range(len(work)):
            if r != start and work[r] & bit:
                work[r] ^= prow
        pivot_cols.append(col)
        start += 1
        if start == len(work):
            break
    return work[:start], pivot_cols


def rank(m: Gf2Matrix) -> int:
    """Dimension of the row space of ``m`` over GF(2)."""
    return len(_eliminate(m.row_data, m.cols)[1])


def row_basis(m: Gf2Matrix) -> list[Gf2Vector]:
    """Reduced row echelon basis of the row space of ``m``."""
    rows, _ = _eliminate(m.row_data, m.cols)
    return [Gf2Vector(m.cols, r) for r in rows]


def solve_affine(coeff: Gf2Matrix, rhs: Gf2Vector) -> AffineSolutionSpace:
    """Solve ``coeff @ x = rhs``.

    Never raises on inconsistency: an infeasible system comes back with
    ``particular=None`` and an empty basis.
    """
    if rhs.length != coeff.rows:
        raise ValueError("rhs length must equal the number of rows")
    n = coeff.cols
    aug_bit = 1 << n
    augmented = [r | (aug_bit if (rhs.bits >> i) & 1 else 0) for i, r in enumerate(coeff.row_data)]
    rows, pivots = _eliminate(augmented, n + 1)
    if pivots and pivots[-1] == n:
        return AffineSolutionSpace(None, ())
    particular = 0
    for r, c in zip(rows, pivots):
        if r & aug_bit:
            particular |= 1 << c
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = 1 << f
        for r, c in zip(rows, pivots):
            if (r >> f) & 1:
                v |= 1 << c
        basis.append(Gf2Vector(n, v))
    return AffineSolutionSpace(Gf2Vector(n, particular), tuple(basis))


def gram(form: Gf2Matrix, vectors: Sequence[Gf2Vector]) -> Gf2Matrix:
    """Gramian ``G[i][j] = v_i^T form v_j`` of ``vectors`` under a symmetric form."""
    if not form.is_square():
        raise ValueError("form must be square")
    if not form.is_symmetric():
        raise ValueError("form must be symmetric")
    for v in vectors:
        if v.length != form.rows:
            raise ValueError("vector length does not match form dimension")
    images = [form.apply(v).bits for v in vectors]
    out = []
    for v in vectors:
        out.append(sum(((v.bits & w).bit_count() & 1) << j for j, w in enumerate(images)))
    return Gf2Matrix(len(vectors), len(vectors), tuple(out))


def random_matrix(rng: np.random.Generator, rows: int, cols: int) -> Gf2Matrix:
    return Gf2Matrix.from_numpy(rng.integers(0, 2, size=(rows, cols), dtype=np.uint8))


def random_symmetric(rng: np.random.Generator, size: int, zero_diagonal: bool = False) -> Gf2Matrix:
    a = rng.integers(0, 2, size=(size, size), dtype=np.uint8)
    a = np.triu(a, 1 if zero_diagonal else 0)
    a = a | np.triu(a, 1).T
    return Gf2Matrix.from_numpy(a)
