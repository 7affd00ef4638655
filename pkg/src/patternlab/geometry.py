"""Exact integer predicates for straight-line maps of a simplex into R^1, R^2, R^3.

Checks the parity statements for vertex-disjoint faces:

* d = 1: among the three pairings of 4 points on a line (or circle), exactly
  one has interleaved pairs;
* d = 2: five points in general position in the plane -- the number of
  crossing pairs of disjoint K5 edges is odd;
* d = 3: six points in general position in space -- the number of pairs of
  disjoint triangles whose boundaries are linked mod 2 is odd.

Everything is Python-int or Fraction arithmetic; no floats are involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

import numpy as np

from .subsets import enumerate_halvings

Point = tuple[int, ...]
DEFAULT_MAGNITUDE = 10**6
MAX_REJECTIONS = 10**4


class DegenerateError(ValueError):
    """The input map is not in general position."""


class PointMapFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = "".join(f"{x}:" for x in (source, line) if x is not None)
        super().__init__(f"{where} {message}" if where else message)


@dataclass(frozen=True)
class LinearPointMap:
    """Images of the d+3 vertices of a simplex, labelled 1..d+3."""

    d: int
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        if self.d not in (1, 2, 3):
            raise ValueError("d must be 1, 2 or 3")
        if len(self.points) != self.d + 3:
            raise ValueError(f"need {self.d + 3} points for d={self.d}")
        for p in self.points:
            if len(p) != self.d or not all(isinstance(c, int) for c in p):
                raise ValueError(f"point {p} must have {self.d} integer coordinates")

    @classmethod
    def of(cls, points: Sequence[Sequence[int]]) -> LinearPointMap:
        pts = tuple(tuple(int(c) for c in p) for p in points)
        return cls(len(pts[0]), pts)

    def point(self, label: int) -> Point:
        return self.points[label - 1]

    @property
    def labels(self) -> range:
        return range(1, len(self.points) + 1)

    def transformed(self, matrix: Sequence[Sequence[int]], shift: Sequence[int] | None = None) -> LinearPointMap:
        shift = shift or (0,) * self.d
        pts = tuple(
            tuple(sum(matrix[i][j] * p[j] for j in range(self.d)) + shift[i] for i in range(self.d))
            for p in self.points
        )
        return LinearPointMap(self.d, pts)

    def relabeled(self, perm: Sequence[int]) -> LinearPointMap:
        """Vertex ``i`` of the result sits where vertex ``perm[i-1]`` was."""
        return LinearPointMap(self.d, tuple(self.point(p) for p in perm))


@dataclass(frozen=True)
class ParityReport:
    instance: str
    contributions: dict
    total: int
    extra: dict | None = None

    def __post_init__(self) -> None:
        acc = 0
        for bit in self.contributions.values():
            acc ^= bit
        if acc != self.total:
            raise ValueError("total parity must be the XOR of contributions")

    @property
    def count(self) -> int:
        return sum(self.contributions.values())

    def to_json(self) -> dict:
        return {
            "instance": self.instance,
            "total_parity": self.total,
            "odd_pairs": self.count,
            "pairs": [[_key(k), v] for k, v in self.contributions.items()],
            **(self.extra or {}),
        }


def _key(k):
    return [list(x) if isinstance(x, tuple) else x for x in k]


# --- predicates ------------------------------------------------------------------

def orient2(a: Point, b: Point, c: Point) -> int:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orient3(a: Point, b: Point, c: Point, d: Point) -> int:
    """Sign-carrying determinant of (b-a, c-a, d-a)."""
    u = [b[i] - a[i] for i in range(3)]
    v = [c[i] - a[i] for i in range(3)]
    w = [d[i] - a[i] for i in range(3)]
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def general_position(m: LinearPointMap) -> bool:
    pts = m.points
    if m.d == 1:
        return len({p[0] for p in pts}) == len(pts)
    if m.d == 2:
        return all(orient2(a, b, c) != 0 for a, b, c in combinations(pts, 3))
    return all(orient3(a, b, c, d) != 0 for a, b, c, d in combinations(pts, 4))


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Whether open plane segments ab and cd meet; any collinear triple is degenerate."""
    o1, o2 = orient2(a, b, c), orient2(a, b, d)
    o3, o4 = orient2(c, d, a), orient2(c, d, b)
    if 0 in (o1, o2, o3, o4):
        raise DegenerateError("collinear triple among segment endpoints")
    return _sign(o1) != _sign(o2) and _sign(o3) != _sign(o4)


def segment_pierces_triangle(p: Point, q: Point, a: Point, b: Point, c: Point) -> bool:
    """Whether the open segment pq meets the open triangle abc in R^3."""
    s1, s2 = _sign(orient3(a, b, c, p)), _sign(orient3(a, b, c, q))
    t = (_sign(orient3(p, q, a, b)), _sign(orient3(p, q, b, c)), _sign(orient3(p, q, c, a)))
    if 0 in (s1, s2) or 0 in t:
        raise DegenerateError("segment touches the triangle plane or an edge line")
    return s1 != s2 and t[0] == t[1] == t[2]


# --- d = 1 ---------------------------------------------------------------------

PAIRINGS_4 = tuple(enumerate_halvings((1, 2, 3, 4), 2))


def chord_parity_d1(order: Sequence[int]) -> ParityReport:
    """Interleaving of the three pairings of labels 1..4 placed on a circle in ``order``.

    ``extra["coloring"]`` is the unique intertwined two-colouring: the
    interleaved pairing, one colour class per chord.
    """
    order = tuple(order)
    if sorted(order) != [1, 2, 3, 4]:
        raise ValueError("order must be a permutation of 1..4")
    pos = {label: i for i, label in enumerate(order)}
    contributions = {}
    coloring = None
    for s, t in PAIRINGS_4:
        lo, hi = sorted((pos[s[0]], pos[s[1]]))
        inside = sum(lo < pos[x] < hi for x in t)
        bit = int(inside == 1)
        contributions[(s, t)] = bit
        if bit:
            coloring = (s, t)
    total = 0
    for bit in contributions.values():
        total ^= bit
    return ParityReport(f"circle order {order}", contributions, total, {"coloring": [list(c) for c in coloring] if coloring else None})


def linking_parity_d1(m: LinearPointMap) -> ParityReport:
    """Line map of 4 points: pairs of disjoint edges whose endpoint pairs are linked."""
    if m.d != 1:
        raise ValueError("d = 1 map expected")
    if not general_position(m):
        raise DegenerateError("coincident points on the line")
    order = sorted(m.labels, key=lambda i: m.point(i)[0])
    return chord_parity_d1(order)


# --- d = 2 ---------------------------------------------------------------------

def disjoint_edge_pairs(n_vertices: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    edges = list(combinations(range(1, n_vertices + 1), 2))
    return [(e, f) for e, f in combinations(edges, 2) if not set(e) & set(f)]


def crossing_parity_d2(m: LinearPointMap) -> ParityReport:
    if m.d != 2:
        raise ValueError("d = 2 map expected")
    if not general_position(m):
        raise DegenerateError("three collinear points")
    contributions = {}
    for e, f in disjoint_edge_pairs(5):
        contributions[(e, f)] = int(segments_cross(m.point(e[0]), m.point(e[1]), m.point(f[0]), m.point(f[1])))
    return ParityReport("K5 in R^2", contributions, sum(contributions.values()) & 1)


# --- d = 3 ---------------------------------------------------------------------

def triangle_pairs(n_vertices: int = 6) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Unordered pairs of disjoint triples of [6]; the triple holding 1 comes first."""
    return enumerate_halvings(range(1, n_vertices + 1), n_vertices // 2)


def _cycle_edges(tri: Sequence[int]) -> list[tuple[int, int]]:
    a, b, c = tri
    return [(a, b), (b, c), (c, a)]


def piercing_parity(m: LinearPointMap, s: Sequence[int], t: Sequence[int]) -> int:
    """Mod-2 linking of the triangle boundaries: edges of s piercing the flat triangle t."""
    tp = [m.point(x) for x in t]
    hits = 0
    for u, v in _cycle_edges(s):
        hits += segment_pierces_triangle(m.point(u), m.point(v), *tp)
    return hits & 1


PROJECTIONS = ((0, 0), (1, 2), (2, -1), (3, 5), (-4, 1), (5, 7), (7, -3), (11, 13))


def projection_linking(m: LinearPointMap, s: Sequence[int], t: Sequence[int], shear: tuple[int, int]) -> int:
    """Integer linking number from the diagram ``(x, y, z) -> (x + a z, y + b z)``.

    Sum of crossing signs over the crossings where the s-cycle passes above
    (larger z).  Raises DegenerateError when the projection is not generic.
    """
    a, b = shear

    def proj(p):
        return (p[0] + a * p[2], p[1] + b * p[2])

    projected = {x: proj(m.point(x)) for x in m.labels}
    if len(set(projected.values())) != len(projected):
        raise DegenerateError("projection identifies two vertices")
    lk = 0
    for p1, p2 in _cycle_edges(s):
        for q1, q2 in _cycle_edges(t):
            P1, P2, Q1, Q2 = projected[p1], projected[p2], projected[q1], projected[q2]
            if not segments_cross(P1, P2, Q1, Q2):
                continue
            dP = (P2[0] - P1[0], P2[1] - P1[1])
            dQ = (Q2[0] - Q1[0], Q2[1] - Q1[1])
            den = dP[0] * dQ[1] - dP[1] * dQ[0]
            wx, wy = Q1[0] - P1[0], Q1[1] - P1[1]
            sp = Fraction(wx * dQ[1] - wy * dQ[0], den)
            sq = Fraction(wx * dP[1] - wy * dP[0], den)
            zp = m.point(p1)[2] + sp * (m.point(p2)[2] - m.point(p1)[2])
            zq = m.point(q1)[2] + sq * (m.point(q2)[2] - m.point(q1)[2])
            if zp == zq:
                raise DegenerateError("cycles meet in space")
            if zp > zq:
                lk += _sign(den)
    return lk


def projection_parity(m: LinearPointMap, s: Sequence[int], t: Sequence[int]) -> tuple[int, tuple[int, int]]:
    """Linking parity from the first generic shear projection; also returns the shear used."""
    for shear in PROJECTIONS:
        try:
            return projection_linking(m, s, t, shear) & 1, shear
        except DegenerateError:
            continue
    raise DegenerateError("no generic projection among the candidates")


def cgs_parity_d3(m: LinearPointMap, cross_check: bool = True) -> ParityReport:
    """Linked pairs of disjoint triangles of K6; bits from piercing, checked against projections.

    With ``cross_check`` each pair bit is also computed as piercing of the
    other triangle and from a projection diagram; any disagreement raises
    AssertionError.  ``extra["algorithms_agree"]`` records the outcome.
    """
    if m.d != 3:
        raise ValueError("d = 3 map expected")
    if not general_position(m):
        raise DegenerateError("four coplanar points")
    contributions = {}
    for s, t in triangle_pairs(6):
        bit = piercing_parity(m, s, t)
        if cross_check:
            other = piercing_parity(m, t, s)
            proj, _ = projection_parity(m, s, t)
            if not bit == other == proj:
                raise AssertionError(f"linking algorithms disagree on {s} | {t}: {bit}, {other}, {proj}")
        contributions[(s, t)] = bit
    total = sum(contributions.values()) & 1
    return ParityReport("K6 in R^3", contributions, total, {"algorithms_agree": cross_check})


# --- random instances ----------------------------------------------------------

def random_map(d: int, seed, magnitude: int = DEFAULT_MAGNITUDE) -> LinearPointMap:
    """Uniform integer points in [-magnitude, magnitude]^d, resampled until in general position.

    ``seed`` may be an int or a tuple such as (seed, trial_index).
    """
    if d not in (1, 2, 3):
        raise ValueError("d must be 1, 2 or 3")
    rng = np.random.default_rng(seed)
    for _ in range(MAX_REJECTIONS):
        raw = rng.integers(-magnitude, magnitude, size=(d + 3, d), endpoint=True)
        m = LinearPointMap(d, tuple(tuple(int(c) for c in row) for row in raw))
        if general_position(m):
            return m
    raise RuntimeError(f"no general-position map after {MAX_REJECTIONS} draws")


def parity_for(m: LinearPointMap) -> ParityReport:
    if m.d == 1:
        return linking_parity_d1(m)
    if m.d == 2:
        return crossing_parity_d2(m)
    return cgs_parity_d3(m)


def campaign(d: int, trials: int, seed: int = 0, magnitude: int = DEFAULT_MAGNITUDE) -> dict:
    """Run ``trials`` seeded random maps; trial i uses seed (seed, i)."""
    failures = []
    histogram: dict[int, int] = {}
    for i in range(trials):
        m = random_map(d, (seed, i), magnitude)
        rep = parity_for(m)
        histogram[rep.count] = histogram.get(rep.count, 0) + 1
        if rep.total != 1:
            failures.append({"trial": i, "points": [list(p) for p in m.points], "odd_pairs": rep.count})
    return {
        "d": d,
        "trials": trials,
        "seed": seed,
        "magnitude": magnitude,
        "parity_failures": len(failures),
        "failures": failures[:20],
        "odd_pair_histogram": {str(c): histogram[c] for c in sorted(histogram)},
    }


# --- instance file format v1 -----------------------------------------------------

def loads_pointmap(text: str, source: str | None = None) -> LinearPointMap:
    lines = [(i, l.strip()) for i, l in enumerate(text.splitlines(), start=1)]
    lines = [(i, l) for i, l in lines if l and not l.startswith("#")]
    if not lines:
        raise PointMapFormatError("empty input", 1, source)
    lineno, head = lines[0]
    parts = head.split()
    if parts[:2] != ["pointmap", "v1"] or len(parts) != 3 or not parts[2].startswith("d="):
        raise PointMapFormatError("expected header 'pointmap v1 d=<d>'", lineno, source)
    try:
        d = int(parts[2][2:])
    except ValueError:
        raise PointMapFormatError("bad dimension", lineno, source) from None
    if d not in (1, 2, 3):
        raise PointMapFormatError("d must be 1, 2 or 3", lineno, source)
    points = []
    for lineno, line in lines[1:]:
        try:
            p = tuple(int(x) for x in line.split())
        except ValueError:
            raise PointMapFormatError("non-integer coordinate", lineno, source) from None
        if len(p) != d:
            raise PointMapFormatError(f"expected {d} coordinates", lineno, source)
        points.append(p)
    if len(points) != d + 3:
        raise PointMapFormatError(f"expected {d + 3} points, got {len(points)}", None, source)
    return LinearPointMap(d, tuple(points))


def dumps_pointmap(m: LinearPointMap) -> str:
    return "\n".join([f"pointmap v1 d={m.d}"] + [" ".join(map(str, p)) for p in m.points]) + "\n"


def all_orders_d1() -> list[ParityReport]:
    return [chord_parity_d1(p) for p in permutations((1, 2, 3, 4))]
