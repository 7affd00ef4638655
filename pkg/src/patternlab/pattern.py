"""Symmetric GF(2) matrices indexed by (k+2)-subsets of [n], their conditions and reductions.

Conditions checked here:

* triviality -- ``A[P, Q] = 0`` whenever P and Q are disjoint;
* linear dependence -- for every (k+3)-set F the rows ``A[F - i]``, i in F,
  sum to zero (each column is a cocycle);
* non-triviality -- for every i and (2k+2)-set F avoiding i, the sum of
  ``A[i+s, i+t]`` over unordered halvings {s, t} of F equals 1;
* heredity -- ``A_{G+i, j} = A_{G+j, i}`` for the sums above.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Sequence

from . import gf2
from .gf2 import Gf2Matrix
from .subsets import Subset, SubsetIndexer, _colex_table, _index_map, complement, enumerate_halvings

WITNESS_CAP = 100


class PatternFormatError(ValueError):
    """Malformed pattern-matrix text; ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


@dataclass(frozen=True)
class PatternMatrix:
    n: int
    k: int
    entries: Gf2Matrix

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("k must be nonnegative")
        if self.n < self.k + 2:
            raise ValueError(f"need n >= k+2, got n={self.n}, k={self.k}")
        size = comb(self.n, self.k + 2)
        if self.entries.rows != size or self.entries.cols != size:
            raise ValueError(f"entries must be {size}x{size}")
        if not self.entries.is_symmetric():
            raise ValueError("pattern matrix must be symmetric")

    @property
    def labels(self) -> SubsetIndexer:
        return SubsetIndexer(self.n, self.k + 2)

    @property
    def size(self) -> int:
        return self.entries.rows

    @property
    def subsets(self) -> tuple[Subset, ...]:
        return _colex_table(self.n, self.k + 2)

    def index(self, P: Iterable[int]) -> int:
        t = tuple(sorted(P))
        try:
            return _index_map(self.n, self.k + 2)[t]
        except KeyError:
            raise ValueError(f"{t} is not a {self.k + 2}-subset of [{self.n}]") from None

    def __getitem__(self, PQ: tuple[Iterable[int], Iterable[int]]) -> int:
        P, Q = PQ
        return self.entries[self.index(P), self.index(Q)]

    def rank(self) -> int:
        return gf2.rank(self.entries)

    def nonzero_pairs(self) -> list[tuple[Subset, Subset]]:
        """Nonzero entries with index(P) <= index(Q), ordered by (index P, index Q)."""
        subs = self.subsets
        out = []
        for a, row in enumerate(self.entries.row_data):
            row >>= a
            b = a
            while row:
                if row & 1:
                    out.append((subs[a], subs[b]))
                row >>= 1
                b += 1
        return out

    @classmethod
    def zeros(cls, n: int, k: int) -> PatternMatrix:
        size = comb(n, k + 2)
        return cls(n, k, Gf2Matrix.zeros(size, size))

    @classmethod
    def from_pairs(cls, n: int, k: int, pairs: Iterable[tuple[Iterable[int], Iterable[int]]]) -> PatternMatrix:
        """Matrix whose nonzero entries are the symmetric closure of ``pairs``."""
        idx = _index_map(n, k + 2)
        size = comb(n, k + 2)
        rows = [0] * size
        for P, Q in pairs:
            a, b = idx[tuple(sorted(P))], idx[tuple(sorted(Q))]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(n, k, Gf2Matrix(size, size, tuple(rows)))

    @classmethod
    def from_function(cls, n: int, k: int, value: Callable[[Subset, Subset], int]) -> PatternMatrix:
        subs = _colex_table(n, k + 2)
        size = len(subs)
        rows = [0] * size
        for a in range(size):
            for b in range(a, size):
                if value(subs[a], subs[b]) & 1:
                    rows[a] |= 1 << b
                    rows[b] |= 1 << a
        return cls(n, k, Gf2Matrix(size, size, tuple(rows)))


@dataclass(frozen=True)
class CheckReport:
    condition: str
    holds: bool
    witnesses: tuple = ()
    total: int = 0
    vacuous: bool = False
    note: str = ""

    def __post_init__(self) -> None:
        if self.holds != (self.total == 0):
            raise ValueError("holds must agree with an empty witness list")

    def to_json(self) -> dict:
        return {
            "condition": self.condition,
            "holds": self.holds,
            "vacuous": self.vacuous,
            "violations": self.total,
            "witnesses": [[list(x) if isinstance(x, tuple) else x for x in w] for w in self.witnesses],
            **({"note": self.note} if self.note else {}),
        }


def _report(condition: str, violations: Iterable, vacuous: bool = False, note: str = "") -> CheckReport:
    witnesses = []
    total = 0
    for w in violations:
        total += 1
        if len(witnesses) < WITNESS_CAP:
            witnesses.append(w)
    return CheckReport(condition, total == 0, tuple(witnesses), total, vacuous, note)


def _disjoint_pairs(A: PatternMatrix):
    subs = A.subsets
    masks = [sum(1 << x for x in s) for s in subs]
    rows = A.entries.row_data
    for a in range(len(subs)):
        r = rows[a]
        for b in range(a + 1, len(subs)):
            if not masks[a] & masks[b]:
                yield a, b, (r >> b) & 1


def check_triviality(A: PatternMatrix) -> CheckReport:
    subs = A.subsets
    vacuous = A.n < 2 * (A.k + 2)
    bad = ((subs[a], subs[b]) for a, b, v in _disjoint_pairs(A) if v)
    return _report("triviality", bad, vacuous=vacuous)


def check_linear_dependence(A: PatternMatrix) -> CheckReport:
    n, k = A.n, A.k
    if n < k + 3:
        return _report("linear_dependence", (), vacuous=True, note=f"no {k + 3}-subsets of [{n}]")
    idx = _index_map(n, k + 2)
    subs = A.subsets
    rows = A.entries.row_data

    def violations():
        for F in _colex_table(n, k + 3):
            acc = 0
            for i in F:
                acc ^= rows[idx[tuple(x for x in F if x != i)]]
            while acc:
                low = acc & -acc
                yield (F, subs[low.bit_length() - 1])
                acc ^= low

    return _report("linear_dependence", violations())


def nontriviality_sum(A: PatternMatrix, F: Iterable[int], i: int) -> int:
    """Sum of ``A[i+s, i+t]`` over unordered halvings {s, t} of the (2k+2)-set F."""
    t = tuple(sorted(F))
    k = A.k
    if len(t) != 2 * k + 2:
        raise ValueError(f"|F| must be {2 * k + 2}")
    if i in t or not 1 <= i <= A.n or (t and (t[0] < 1 or t[-1] > A.n)):
        raise ValueError("need F a subset of [n] and i in [n] outside F")
    return _halving_sum(A, t, i)


def _halving_sum(A: PatternMatrix, F: Subset, i: int) -> int:
    idx = _index_map(A.n, A.k + 2)
    rows = A.entries.row_data
    total = 0
    for s, t in enumerate_halvings(F, A.k + 1):
        a = idx[tuple(sorted(s + (i,)))]
        b = idx[tuple(sorted(t + (i,)))]
        total ^= (rows[a] >> b) & 1
    return total


def check_nontriviality(A: PatternMatrix) -> CheckReport:
    n, k = A.n, A.k
    if n < 2 * k + 3:
        return _report("nontriviality", (), vacuous=True, note=f"no (i, F) with |F| = {2 * k + 2} in [{n}]")

    def violations():
        for i in range(1, n + 1):
            for F in combinations(complement((i,), n), 2 * k + 2):
                if _halving_sum(A, F, i) != 1:
                    yield (i, F)

    return _report("nontriviality", violations())


def check_heredity(A: PatternMatrix) -> CheckReport:
    n, k = A.n, A.k
    if n < 2 * k + 3:
        return _report("heredity", (), vacuous=True, note=f"no (G, i, j) with |G| = {2 * k + 1} in [{n}]")

    def violations():
        for i, j in combinations(range(1, n + 1), 2):
            for G in combinations(complement((i, j), n), 2 * k + 1):
                left = _halving_sum(A, tuple(sorted(G + (i,))), j)
                right = _halving_sum(A, tuple(sorted(G + (j,))), i)
                if left != right:
                    yield (G, i, j)

    return _report("heredity", violations())


def is_even(A: PatternMatrix) -> bool:
    return A.entries.diagonal().bits == 0


def check_all(A: PatternMatrix) -> dict[str, CheckReport]:
    return {
        "triviality": check_triviality(A),
        "linear_dependence": check_linear_dependence(A),
        "nontriviality": check_nontriviality(A),
        "heredity": check_heredity(A),
    }


def passes_conditions(A: PatternMatrix, even: bool = False) -> bool:
    """True when triviality, linear dependence and non-triviality hold (and evenness if asked)."""
    if even and not is_even(A):
        return False
    return (
        check_triviality(A).holds
        and check_linear_dependence(A).holds
        and check_nontriviality(A).holds
    )


def _relabel_map(A: PatternMatrix, ground: Sequence[int]) -> list[int]:
    """For each colex subset of [len(ground)], the old index of its image in ``ground``."""
    old = _index_map(A.n, A.k + 2)
    return [old[tuple(ground[x - 1] for x in s)] for s in _colex_table(len(ground), A.k + 2)]


def _pull_back(A: PatternMatrix, ground: Sequence[int], value: Callable[[int, int], int] | None = None) -> PatternMatrix:
    old_of = _relabel_map(A, ground)
    rows = A.entries.row_data
    size = len(old_of)
    new_rows = []
    for a in range(size):
        r = rows[old_of[a]]
        bits = 0
        for b in range(size):
            v = (r >> old_of[b]) & 1
            if value is not None:
                v ^= value(old_of[a], old_of[b])
            if v:
                bits |= 1 << b
        new_rows.append(bits)
    return PatternMatrix(len(ground), A.k, Gf2Matrix(size, size, tuple(new_rows)))


def _ground(S: Iterable[int], n: int) -> tuple[int, ...]:
    g = tuple(sorted(set(S)))
    if g and (g[0] < 1 or g[-1] > n):
        raise ValueError(f"{g} is not a subset of [{n}]")
    return g


def restrict(A: PatternMatrix, S: Iterable[int]) -> PatternMatrix:
    """Entries on (k+2)-subsets of S, relabelled order-preservingly onto [|S|]."""
    ground = _ground(S, A.n)
    if len(ground) < A.k + 2:
        raise ValueError(f"|S| = {len(ground)} < k+2")
    return _pull_back(A, ground)


def deflate_diag(A: PatternMatrix, X: Iterable[int], keep: int | None = None) -> PatternMatrix:
    """``B[P, Q] = A[P, Q] + A[P, X] A[Q, X]`` on ([n] - X) + {keep}, relabelled to [n-k-1].

    This is the Gramian of the A-orthogonal projections ``P + A[P, X] X``;
    ``A[X, X] = 1`` splits off X, so the rank drops by at least one.
    """
    Xs = tuple(sorted(X))
    if len(Xs) != A.k + 2:
        raise ValueError(f"X must be a {A.k + 2}-subset")
    x = A.index(Xs)
    if not A.entries[x, x]:
        raise ValueError("deflate_diag needs A[X, X] = 1")
    if keep is None:
        keep = Xs[0]
    if keep not in Xs:
        raise ValueError("keep must be an element of X")
    ground = tuple(sorted(set(complement(Xs, A.n)) | {keep}))
    if len(ground) < A.k + 2:
        raise ValueError("deflated ground set is too small")
    col_x = A.entries.row_data[x]
    return _pull_back(A, ground, lambda a, b: (col_x >> a) & (col_x >> b) & 1)


def project_offdiag(A: PatternMatrix, X: Iterable[int], Y: Iterable[int]) -> PatternMatrix:
    """Restriction to [n] - X for an even trivial A with ``A[X, Y] = 1``.

    On subsets avoiding X the projections ``P + A[X,P] Y + A[Y,P] X`` to the
    complement of <X, Y> have Gramian equal to this restriction, and X, Y span
    a hyperbolic plane, so the rank drops by at least two.
    """
    x, y = A.index(X), A.index(Y)
    if not is_even(A):
        raise ValueError("project_offdiag needs an even matrix")
    if not A.entries[x, y]:
        raise ValueError("project_offdiag needs A[X, Y] = 1")
    if not check_triviality(A).holds:
        raise ValueError("project_offdiag needs triviality")
    ground = complement(tuple(X), A.n)
    if len(ground) < A.k + 2:
        raise ValueError("ground set after removing X is too small")
    return _pull_back(A, ground)


# --- text format v1 -----------------------------------------------------------

HEADER = "pattern-matrix v1"


def dumps(A: PatternMatrix) -> str:
    lines = [f"{HEADER} n={A.n} k={A.k}"]
    for P, Q in A.nonzero_pairs():
        lines.append(f"{','.join(map(str, P))};{','.join(map(str, Q))}")
    return "\n".join(lines) + "\n"


def _parse_set(text: str, lineno: int, source: str | None) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise PatternFormatError(f"bad subset {text!r}", lineno, source) from None
    if list(vals) != sorted(set(vals)):
        raise PatternFormatError(f"subset {text!r} is not strictly increasing", lineno, source)
    return vals


def loads(text: str, source: str | None = None) -> PatternMatrix:
    lines = text.splitlines()
    if not lines:
        raise PatternFormatError("empty input", 1, source)
    head = lines[0].split()
    if head[:2] != HEADER.split() or len(head) != 4:
        raise PatternFormatError(f"expected header '{HEADER} n=<n> k=<k>'", 1, source)
    try:
        fields = dict(h.split("=", 1) for h in head[2:])
        n, k = int(fields["n"]), int(fields["k"])
    except (ValueError, KeyError):
        raise PatternFormatError("malformed n=/k= fields", 1, source) from None
    if k < 0 or n < k + 2:
        raise PatternFormatError(f"need 0 <= k and n >= k+2 (n={n}, k={k})", 1, source)
    idx = _index_map(n, k + 2)
    size = comb(n, k + 2)
    rows = [0] * size
    seen = set()
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(";")
        if len(parts) != 2:
            raise PatternFormatError("expected 'P;Q'", lineno, source)
        P, Q = (_parse_set(p.strip(), lineno, source) for p in parts)
        try:
            a, b = idx[P], idx[Q]
        except KeyError:
            raise PatternFormatError(f"entries must be {k + 2}-subsets of [{n}]", lineno, source) from None
        key = (min(a, b), max(a, b))
        if key in seen:
            raise PatternFormatError(f"duplicate entry {line!r}", lineno, source)
        seen.add(key)
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return PatternMatrix(n, k, Gf2Matrix(size, size, tuple(rows)))


def load(path) -> PatternMatrix:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), source=str(path))


def dump(A: PatternMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(A))
