"""Affine GF(2) model of the pattern conditions and minimum-rank witness search.

Variables are the upper-triangle entries ``A[a, b]`` (a <= b, colex indices of
(k+2)-subsets).  Row kinds:

* ``triviality``  -- ``A[P, Q] = 0`` for disjoint P, Q;
* ``dependence``  -- ``sum_{i in F} A[F - i, P] = 0``;
* ``nontriviality`` -- the halving sum for (i, F) equals 1;
* ``even``        -- ``A[P, P] = 0`` (even mode only).

Rank search.  Every row of an admissible matrix is a cocycle, so its row space
lies in the cocycle space W.  A symmetric matrix of rank <= r with row space
inside an r-dimensional subspace spanned by the rows of G has the form
``G^T C G`` with C symmetric, and the remaining conditions are affine in the
entries of C.  Enumerating the r-dimensional subspaces of W (as reduced echelon
forms) and solving a tiny system per subspace decides "rank <= r" exactly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import gf2
from .gf2 import AffineSolutionSpace, Gf2Matrix, Gf2Vector
from .pattern import PatternMatrix, passes_conditions, restrict
from .subsets import _colex_table, _index_map, cocycle_basis, complement, enumerate_halvings

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**7
DEFAULT_SAMPLES = 2000
BATCH = 4096

EXACT = "EXACT"
BOUNDED = "BOUNDED"
INFEASIBLE = "INFEASIBLE"


@dataclass(frozen=True)
class FeasibilityModel:
    n: int
    k: int
    even_mode: bool
    variables: tuple[tuple[int, int], ...]
    coeff: Gf2Matrix
    rhs: Gf2Vector
    row_kinds: tuple[str, ...]

    @cached_property
    def var_index(self) -> dict[tuple[int, int], int]:
        return {v: i for i, v in enumerate(self.variables)}

    @property
    def size(self) -> int:
        return comb(self.n, self.k + 2)

    @cached_property
    def solution_space(self) -> AffineSolutionSpace:
        return gf2.solve_affine(self.coeff, self.rhs)

    def decode(self, x: Gf2Vector) -> PatternMatrix:
        if x.length != len(self.variables):
            raise ValueError("solution length mismatch")
        rows = [0] * self.size
        for t in x.support():
            a, b = self.variables[t]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return PatternMatrix(self.n, self.k, Gf2Matrix(self.size, self.size, tuple(rows)))

    def encode(self, A: PatternMatrix) -> Gf2Vector:
        if (A.n, A.k) != (self.n, self.k):
            raise ValueError("matrix does not match model shape")
        bits = 0
        for a, row in enumerate(A.entries.row_data):
            for b in range(a, self.size):
                if (row >> b) & 1:
                    bits |= 1 << self.var_index[(a, b)]
        return Gf2Vector(len(self.variables), bits)

    def residual(self, A: PatternMatrix) -> Gf2Vector:
        """``coeff @ x + rhs`` for the entries of A; zero exactly when A is in the feasible set."""
        return self.coeff.apply(self.encode(A)) + self.rhs

    def contains(self, A: PatternMatrix) -> bool:
        return self.residual(A).bits == 0

    def kind_counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for kind in self.row_kinds:
            out[kind] = out.get(kind, 0) + 1
        return out


def build_model(n: int, k: int, even_mode: bool = False) -> FeasibilityModel:
    if k < 0 or n < k + 2:
        raise ValueError(f"need n >= k+2 (n={n}, k={k})")
    subs = _colex_table(n, k + 2)
    idx = _index_map(n, k + 2)
    size = len(subs)
    variables = tuple((a, b) for a in range(size) for b in range(a, size))
    vi = {v: i for i, v in enumerate(variables)}

    def var(a: int, b: int) -> int:
        return vi[(a, b) if a <= b else (b, a)]

    rows: list[int] = []
    rhs: list[int] = []
    kinds: list[str] = []

    masks = [sum(1 << x for x in s) for s in subs]
    for a, b in combinations(range(size), 2):
        if not masks[a] & masks[b]:
            rows.append(1 << var(a, b))
            rhs.append(0)
            kinds.append("triviality")

    for F in _colex_table(n, k + 3):
        faces = [idx[tuple(x for x in F if x != i)] for i in F]
        for p in range(size):
            bits = 0
            for f in faces:
                bits ^= 1 << var(f, p)
            rows.append(bits)
            rhs.append(0)
            kinds.append("dependence")

    if n >= 2 * k + 3:
        for i in range(1, n + 1):
            for F in combinations(complement((i,), n), 2 * k + 2):
                bits = 0
                for s, t in enumerate_halvings(F, k + 1):
                    bits ^= 1 << var(idx[tuple(sorted(s + (i,)))], idx[tuple(sorted(t + (i,)))])
                rows.append(bits)
                rhs.append(1)
                kinds.append("nontriviality")

    if even_mode:
        for a in range(size):
            rows.append(1 << var(a, a))
            rhs.append(0)
            kinds.append("even")

    coeff = Gf2Matrix(len(rows), len(variables), tuple(rows))
    rhs_vec = Gf2Vector(len(rows), sum(b << i for i, b in enumerate(rhs)))
    return FeasibilityModel(n, k, even_mode, variables, coeff, rhs_vec, tuple(kinds))


# --- rank search ---------------------------------------------------------------

@dataclass
class MinRankResult:
    n: int
    k: int
    even_mode: bool
    status: str
    lower: int | None
    upper: int | None
    witness: PatternMatrix | None
    evaluations: int
    log: list[dict] = field(default_factory=list)
    witness_source: str | None = None

    @property
    def value(self) -> int | None:
        return self.lower if self.status == EXACT else None

    def summary(self) -> dict:
        return {
            "status": self.status,
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "witness_source": self.witness_source,
            "provenance": "computed",
        }


def gaussian_binomial(w: int, r: int) -> int:
    """Number of r-dimensional subspaces of GF(2)^w."""
    if r < 0 or r > w:
        return 0
    num = den = 1
    for i in range(r):
        num *= (1 << (w - i)) - 1
        den *= (1 << (i + 1)) - 1
    return num // den


class _CoreSystem:
    """Constraint rows other than dependence, as term lists for batched evaluation."""

    def __init__(self, model: FeasibilityModel):
        ta, tb, offsets, rhs = [], [], [], []
        for row, kind, b in zip(model.coeff.row_data, model.row_kinds, model.rhs.to_list()):
            if kind == "dependence":
                continue
            offsets.append(len(ta))
            rhs.append(b)
            for t in gf2._bits(row):
                a, c = model.variables[t]
                ta.append(a)
                tb.append(c)
        self.ta = np.array(ta, dtype=np.intp)
        self.tb = np.array(tb, dtype=np.intp)
        self.offsets = np.array(offsets, dtype=np.intp)
        self.rhs = np.array(rhs, dtype=np.uint32)

    @property
    def n_rows(self) -> int:
        return len(self.offsets)

    def core_rows(self, G: np.ndarray) -> np.ndarray:
        """Packed equations in the core entries for a batch G of shape (B, r, N).

        Bit ``u`` of each row is the coefficient of the u-th entry of the
        upper triangle of C (row-major); bit ``nv`` is the right-hand side.
        """
        B, r, _ = G.shape
        out = np.zeros((B, self.n_rows), dtype=np.uint32)
        if self.n_rows == 0:
            return out
        Ga = G[:, :, self.ta]
        Gb = G[:, :, self.tb]
        u = 0
        for s in range(r):
            for t in range(s, r):
                if s == t:
                    terms = Ga[:, s] & Gb[:, s]
                else:
                    terms = (Ga[:, s] & Gb[:, t]) ^ (Ga[:, t] & Gb[:, s])
                col = np.bitwise_xor.reduceat(terms, self.offsets, axis=1).astype(np.uint32)
                out |= col << np.uint32(u)
                u += 1
        out |= self.rhs[None, :] << np.uint32(u)
        return out


def _consistent(rows: np.ndarray, nv: int) -> np.ndarray:
    """Per batch element, whether the packed GF(2) system is solvable."""
    rows = rows.copy()
    ar = np.arange(rows.shape[0])
    for col in range(nv):
        bit = (rows >> np.uint32(col)) & np.uint32(1)
        piv = np.argmax(bit, axis=1)
        prow = rows[ar, piv]
        rows ^= bit * prow[:, None]
    return ~np.any((rows >> np.uint32(nv)) & np.uint32(1), axis=1)


def _rref_batches(w: int, r: int, batch: int = BATCH):
    """Yield arrays (B, r, w) of reduced echelon forms, covering every r-dim subspace once."""
    for pivots in combinations(range(w), r):
        pset = set(pivots)
        free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, w) if j not in pset]
        f = len(free)
        total = 1 << f
        fi = np.array([i for i, _ in free], dtype=np.intp)
        fj = np.array([j for _, j in free], dtype=np.intp)
        for start in range(0, total, batch):
            xs = np.arange(start, min(total, start + batch), dtype=np.uint64)
            R = np.zeros((len(xs), r, w), dtype=np.uint8)
            for i, p in enumerate(pivots):
                R[:, i, p] = 1
            if f:
                bits = ((xs[:, None] >> np.arange(f, dtype=np.uint64)[None, :]) & np.uint64(1)).astype(np.uint8)
                R[:, fi, fj] = bits
            yield R


def _core_to_matrix(model: FeasibilityModel, G: np.ndarray, core_bits: int) -> PatternMatrix:
    r, N = G.shape
    C = np.zeros((r, r), dtype=np.int64)
    u = 0
    for s in range(r):
        for t in range(s, r):
            if (core_bits >> u) & 1:
                C[s, t] = C[t, s] = 1
            u += 1
    A = (G.T.astype(np.int64) @ C @ G.astype(np.int64)) & 1
    return PatternMatrix(model.n, model.k, Gf2Matrix.from_numpy(A))


def _solve_core(rows: np.ndarray, nv: int) -> int:
    packed = [int(x) for x in rows]
    coeff = Gf2Matrix(len(packed), nv, tuple(x & ((1 << nv) - 1) for x in packed))
    rhs = Gf2Vector(len(packed), sum(((x >> nv) & 1) << i for i, x in enumerate(packed)))
    space = gf2.solve_affine(coeff, rhs)
    assert space.particular is not None
    return space.particular.bits


def search_rank_exactly(model: FeasibilityModel, r: int, basis: np.ndarray, core: _CoreSystem,
                        batch: int = BATCH) -> tuple[PatternMatrix | None, int]:
    """Decide whether some admissible matrix has rank <= r; returns (witness or None, subspaces tested)."""
    w = basis.shape[0]
    nv = r * (r + 1) // 2
    tested = 0
    basis32 = basis.astype(np.int32)
    for R in _rref_batches(w, r, batch):
        G = ((R.astype(np.int32) @ basis32) & 1).astype(np.uint8)
        rows = core.core_rows(G)
        ok = _consistent(rows, nv)
        tested += len(R)
        if ok.any():
            b = int(np.argmax(ok))
            bits = _solve_core(rows[b], nv)
            return _core_to_matrix(model, G[b], bits), tested
    return None, tested


def _basis_array(model: FeasibilityModel) -> np.ndarray:
    vecs = cocycle_basis(model.n, model.k + 2)
    out = np.zeros((len(vecs), model.size), dtype=np.uint8)
    for i, v in enumerate(vecs):
        for j in v.support():
            out[i, j] = 1
    return out


def min_rank(
    model: FeasibilityModel,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    hints: Iterable[tuple[str, PatternMatrix]] = (),
    samples: int = DEFAULT_SAMPLES,
) -> MinRankResult:
    """Smallest rank of a matrix in the model's feasible set.

    Ranks are tried in ascending order; a rank level is attempted only when
    its whole subspace enumeration fits the remaining budget, so EXACT always
    rests on completed enumerations.  ``hints`` are (source, matrix) pairs
    that, once verified, certify upper bounds.  When the budget stops the
    ascent, seeded random members of the solution space are ranked.
    """
    res = MinRankResult(model.n, model.k, model.even_mode, BOUNDED, 0, None, None, 0)
    space = model.solution_space
    if not space.feasible:
        res.status, res.lower = INFEASIBLE, None
        return res

    best: PatternMatrix | None = None
    best_rank: int | None = None

    def offer(A: PatternMatrix, source: str) -> None:
        nonlocal best, best_rank
        if (A.n, A.k) != (model.n, model.k) or not passes_conditions(A, even=model.even_mode):
            log.info("rejected hint %s", source)
            return
        rk = A.rank()
        if best_rank is None or rk < best_rank:
            best, best_rank = A, rk
            res.witness_source = source

    for source, A in hints:
        offer(A, source)

    zero = PatternMatrix.zeros(model.n, model.k)
    if model.contains(zero):
        res.status, res.lower, res.upper, res.witness, res.witness_source = EXACT, 0, 0, zero, "zero matrix"
        res.log.append({"rank": 0, "outcome": "feasible"})
        return res
    res.log.append({"rank": 0, "outcome": "infeasible", "method": "zero matrix violates the system"})
    lower = 1

    basis = _basis_array(model)
    core = _CoreSystem(model)
    w = basis.shape[0]
    r = 1
    while True:
        if best_rank is not None and best_rank <= r:
            lower = r
            break
        if model.even_mode and r % 2:
            res.log.append({"rank": r, "outcome": "infeasible", "method": "alternating matrices have even rank"})
            r += 1
            lower = r
            continue
        count = gaussian_binomial(w, r)
        if count == 0:
            break
        if res.evaluations + count > budget:
            res.log.append({"rank": r, "outcome": "skipped", "subspaces": count, "reason": "budget"})
            break
        witness, tested = search_rank_exactly(model, r, basis, core)
        res.evaluations += tested
        if witness is not None:
            res.log.append({"rank": r, "outcome": "feasible", "subspaces_tested": tested})
            offer(witness, f"subspace enumeration at rank {r}")
            lower = r
            break
        res.log.append({"rank": r, "outcome": "infeasible", "subspaces_tested": tested})
        r += 1
        lower = r

    if best_rank is None or best_rank > lower:
        rng = np.random.default_rng(seed)
        n_samples = max(0, min(samples, budget - res.evaluations))
        for t in range(n_samples):
            A = model.decode(space.sample(rng))
            rk = A.rank()
            if best_rank is None or rk < best_rank:
                best, best_rank = A, rk
                res.witness_source = f"random sample {t} (seed {seed})"
        res.evaluations += n_samples
        res.log.append({"method": "random sampling", "samples": n_samples, "best_rank": best_rank})

    res.lower = lower
    res.witness = best
    res.upper = best_rank
    if best_rank is not None and best_rank < lower:
        raise AssertionError("witness rank below a proven lower bound")
    res.status = EXACT if best_rank == lower else BOUNDED
    return res


def shipped_hints(n: int, k: int) -> list[tuple[str, PatternMatrix]]:
    """Pattern matrices of the bundled surface embeddings restricted to [n] (k = 1 only)."""
    if k != 1:
        return []
    from .surface import SHIPPED, build_pattern_matrix, load_shipped

    out = []
    for name in SHIPPED:
        surface = load_shipped(name)
        m = surface.rotation.num_vertices
        if m >= n >= 3:
            A = build_pattern_matrix(surface)
            out.append((f"{name} restricted to [{n}]" if m > n else name, restrict(A, range(1, n + 1))))
    return out


# --- tables and bound comparison -------------------------------------------------

@dataclass
class RankRow:
    n: int
    any: MinRankResult | None
    even: MinRankResult | None

    @property
    def status(self) -> str:
        cols = [c for c in (self.any, self.even) if c is not None]
        return EXACT if all(c.status == EXACT for c in cols) else BOUNDED


@dataclass
class RankTable:
    k: int
    rows: list[RankRow]
    budget: int
    seed: int

    def column(self, even: bool) -> dict[int, MinRankResult]:
        return {row.n: (row.even if even else row.any) for row in self.rows if (row.even if even else row.any)}


def build_table(k: int, nmax: int, budget: int = DEFAULT_BUDGET, seed: int = 0,
                modes: Sequence[bool] = (False, True), use_hints: bool = True) -> RankTable:
    """Min ranks for n = k+2..nmax, tightened by monotonicity in n.

    Restriction keeps the conditions, so a witness at n restricts to one at
    n-1 and a lower bound at n-1 holds at n.
    """
    rows = []
    for n in range(k + 2, nmax + 1):
        cols = {}
        for even in modes:
            hints = shipped_hints(n, k) if use_hints else []
            cols[even] = min_rank(build_model(n, k, even), budget=budget, seed=seed, hints=hints)
        rows.append(RankRow(n, cols.get(False), cols.get(True)))
    for even in modes:
        col = [row.even if even else row.any for row in rows]
        for i in range(len(col) - 1, 0, -1):
            hi, lo = col[i], col[i - 1]
            if hi.witness is not None and (lo.upper is None or hi.upper < lo.upper):
                A = restrict(hi.witness, range(1, lo.n + 1))
                if passes_conditions(A, even=even):
                    lo.witness, lo.upper = A, A.rank()
                    lo.witness_source = f"restriction of the n={hi.n} witness"
        for i in range(1, len(col)):
            prev, cur = col[i - 1], col[i]
            if prev.lower is not None and cur.lower is not None and prev.lower > cur.lower:
                cur.lower = prev.lower
                cur.log.append({"method": "monotonicity", "lower": prev.lower})
        for c in col:
            if c.status != INFEASIBLE:
                c.status = EXACT if c.upper is not None and c.upper == c.lower else BOUNDED
    return RankTable(k, rows, budget, seed)


def _frac(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator, "value": float(x)}


def claimed_bounds(n: int, k: int) -> dict[str, Fraction]:
    return {
        "rank_bound_any": Fraction(n - 2 * k - 1, k + 1),
        "rank_bound_even": Fraction(2 * (n - 2 * k - 1), k + 2),
    }


def recursion_limits(k: int, rmax: int, sharp: bool = True) -> tuple[list[int], list[int]]:
    """Upper bounds on n_r (any) and n~_r (even) by chaining the recursions from n_0 = n~_0 = 2k+2.

    Sharp: n~_r <= n~_{r-2} + k + 2 and n_r <= max(n_{r-1} + k + 1, n~_r).
    Weak: steps 2k + 3 and k + 2 instead.  An even matrix has even rank,
    so n~_r = n~_{r-1} for odd r.
    """
    step_even, step_any = (k + 2, k + 1) if sharp else (2 * k + 3, k + 2)
    even = [2 * k + 2]
    anyr = [2 * k + 2]
    for r in range(1, rmax + 1):
        even.append(even[r - 1] if r % 2 else even[r - 2] + step_even)
        anyr.append(max(anyr[r - 1] + step_any, even[r]))
    return anyr, even


def _min_r(limits: list[int], n: int) -> int | None:
    for r, lim in enumerate(limits):
        if lim >= n:
            return r
    return None


def _threshold(col: dict[int, MinRankResult], r: int, nmax: int) -> dict:
    """Largest n with min rank <= r, as far as the column determines it."""
    certain = [n for n, c in col.items() if c.upper is not None and c.upper <= r]
    excluded = [n for n, c in col.items() if c.lower is not None and c.lower > r]
    lo = max(certain) if certain else None
    first_excluded = min(excluded) if excluded else None
    exact = lo is not None and first_excluded == lo + 1
    return {"r": r, "value": lo if exact else None, "at_least": lo, "below": first_excluded, "exact": exact}


def bounds_report(table: RankTable) -> dict:
    k = table.k
    anycol, evencol = table.column(False), table.column(True)
    ns = [row.n for row in table.rows]
    nmax = max(ns)
    ranks = [c.upper for c in list(anycol.values()) + list(evencol.values()) if c.upper is not None]
    rmax = max(ranks + [2]) + 2
    rec_any, rec_even = recursion_limits(k, rmax, sharp=True)
    old_any, old_even = recursion_limits(k, rmax, sharp=False)

    rows, flags = [], []
    for row in table.rows:
        n = row.n
        claims = claimed_bounds(n, k)
        entry = {
            "n": n,
            "status": row.status,
            "min_rank_any": row.any.summary() if row.any else None,
            "min_rank_even": row.even.summary() if row.even else None,
            "claims": {
                "rank_bound_any": {**_frac(claims["rank_bound_any"]), "provenance": "claimed"},
                "rank_bound_even": {**_frac(claims["rank_bound_even"]), "provenance": "claimed"},
            },
            "recursion_bounds": {
                "sharp_any": _min_r(rec_any, n),
                "sharp_even": _min_r(rec_even, n),
                "weak_any": _min_r(old_any, n),
                "weak_even": _min_r(old_even, n),
                "provenance": "computed",
            },
        }
        if k == 1:
            heawood = Fraction((n - 3) * (n - 4), 12)
            entry["heawood_genus"] = {**_frac(heawood), "provenance": "claimed"}
            entry["heawood_rank"] = {"value": 2 * -(-heawood.numerator // heawood.denominator) if heawood > 0 else 0,
                                     "provenance": "computed"}
        kuhnel = kuhnel_bound(n - 1, k)
        entry["kuhnel_rank"] = {**_frac(kuhnel), "provenance": "claimed"}
        rows.append(entry)

        for name, col, claim in (("rank_bound_any", row.any, claims["rank_bound_any"]),
                                 ("rank_bound_even", row.even, claims["rank_bound_even"])):
            if col is not None and col.upper is not None and claim > col.upper:
                flags.append({
                    "n": n,
                    "bound": name,
                    "claimed": _frac(claim),
                    "computed_upper": col.upper,
                    "computed_exact": col.status == EXACT,
                    "witness_source": col.witness_source,
                    "provenance": "computed",
                })
        for name, col, val in (("sharp_any", row.any, entry["recursion_bounds"]["sharp_any"]),
                               ("sharp_even", row.even, entry["recursion_bounds"]["sharp_even"])):
            if col is not None and col.upper is not None and val is not None and val > col.upper:
                flags.append({"n": n, "bound": name, "claimed": val, "computed_upper": col.upper,
                              "computed_exact": col.status == EXACT, "provenance": "computed"})

    rmax_t = max([c.upper for c in anycol.values() if c.upper is not None] + [0]) + 1
    thresholds_any = [_threshold(anycol, r, nmax) for r in range(rmax_t + 1)] if anycol else []
    thresholds_even = [_threshold(evencol, r, nmax) for r in range(rmax_t + 1)] if evencol else []
    checks = recursion_checks(k, thresholds_any, thresholds_even)
    return {
        "k": k,
        "rows": rows,
        "flags": flags,
        "thresholds": {"any": thresholds_any, "even": thresholds_even},
        "recursion_checks": checks,
        "budgets": {"per_search": table.budget},
        "seeds": {"sampling": table.seed},
    }


def recursion_checks(k: int, th_any: list[dict], th_even: list[dict]) -> list[dict]:
    """Evaluate the four recursions wherever every term is exactly known."""
    val_any = {t["r"]: t["value"] for t in th_any}
    val_even = {t["r"]: t["value"] for t in th_even}
    out = []
    for r in sorted(set(val_any) | set(val_even)):
        for name, lhs, rhs in (
            ("even_sharp", val_even.get(r), None if val_even.get(r - 2) is None else val_even[r - 2] + k + 2),
            ("even_weak", val_even.get(r), None if val_even.get(r - 2) is None else val_even[r - 2] + 2 * k + 3),
            ("any_sharp", val_any.get(r), _max_or_none(val_any.get(r - 1), k + 1, val_even.get(r))),
            ("any_weak", val_any.get(r), _max_or_none(val_any.get(r - 1), k + 2, val_even.get(r))),
        ):
            if lhs is None or rhs is None or r < 1:
                continue
            out.append({"recursion": name, "r": r, "lhs": lhs, "rhs": rhs, "holds": lhs <= rhs})
    return out


def _max_or_none(prev: int | None, step: int, even: int | None) -> int | None:
    if prev is None or even is None:
        return None
    return max(prev + step, even)


def kuhnel_bound(n: int, k: int) -> Fraction:
    """Conjectured lower bound for Delta_n^k: prod_{j=k+2}^{2k+2} (n-j) / prod_{j=k+1}^{2k+1} j."""
    num = 1
    for j in range(k + 2, 2 * k + 3):
        num *= n - j
    den = 1
    for j in range(k + 1, 2 * k + 2):
        den *= j
    return Fraction(num, den)
