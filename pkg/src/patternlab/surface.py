"""Rotation systems on orientable surfaces and the mod-2 intersection pairing of cycles.

Darts: edge ``e`` has darts ``2e`` (leaving ``edges[e][0]``) and ``2e + 1``
(leaving ``edges[e][1]``).  Faces are orbits of ``d -> sigma(alpha(d))`` where
``alpha`` flips a dart and ``sigma`` is the next dart in the rotation.

The pairing contracts a BFS spanning tree.  Walking once around the tree
lists the ends of the remaining edges in the cyclic order they acquire at the
single merged vertex; two such loops cross exactly when their ends interlace.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import gf2
from .gf2 import Gf2Matrix, Gf2Vector
from .pattern import PatternMatrix
from .subsets import _colex_table, enumerate_halvings

SHIPPED = ("k4_planar.rot", "k5_torus.rot", "k6_torus.rot", "k7_torus.rot")


class RotationFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = "".join(f"{x}:" for x in (source, line) if x is not None)
        super().__init__(f"{where} {message}" if where else message)


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic order of darts around each vertex ``1..num_vertices``."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    rotations: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rotations) != self.num_vertices:
            raise ValueError("one rotation per vertex required")
        seen = set()
        for v, rot in enumerate(self.rotations, start=1):
            for d in rot:
                if not 0 <= d < 2 * len(self.edges):
                    raise ValueError(f"unknown dart {d}")
                if d in seen:
                    raise ValueError(f"dart {d} appears twice")
                seen.add(d)
                if self.dart_vertex(d) != v:
                    raise ValueError(f"dart {d} placed at vertex {v}, belongs to {self.dart_vertex(d)}")
        if len(seen) != 2 * len(self.edges):
            raise ValueError("every edge end must appear in a rotation")

    @classmethod
    def from_neighbors(cls, num_vertices: int, neighbors: Mapping[int, Sequence[int]]) -> RotationSystem:
        """Simple graph given by the cyclic neighbour order at each vertex."""
        edge_id: dict[frozenset, int] = {}
        edges: list[tuple[int, int]] = []
        for v in range(1, num_vertices + 1):
            nbrs = list(neighbors.get(v, ()))
            if len(set(nbrs)) != len(nbrs):
                raise ValueError(f"vertex {v} lists a neighbour twice")
            for u in nbrs:
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
                if not 1 <= u <= num_vertices:
                    raise ValueError(f"vertex {v}: neighbour {u} out of range")
                if v not in neighbors.get(u, ()):
                    raise ValueError(f"edge {v}-{u} missing from rotation at {u}")
                key = frozenset((u, v))
                if key not in edge_id:
                    edge_id[key] = len(edges)
                    edges.append((min(u, v), max(u, v)))
        rotations = []
        for v in range(1, num_vertices + 1):
            rot = []
            for u in neighbors.get(v, ()):
                e = edge_id[frozenset((u, v))]
                rot.append(2 * e + (0 if edges[e][0] == v else 1))
            rotations.append(tuple(rot))
        return cls(num_vertices, tuple(edges), tuple(rotations))

    @classmethod
    def from_edge_rotations(cls, rotations: Mapping[int, Sequence[str]]) -> RotationSystem:
        """Graph given by cyclic orders of edge labels; a loop's label appears twice at its vertex."""
        verts = sorted(rotations)
        if verts != list(range(1, len(verts) + 1)):
            raise ValueError("vertices must be 1..m")
        ends: dict[str, list[tuple[int, int]]] = {}
        for v in verts:
            for pos, label in enumerate(rotations[v]):
                ends.setdefault(label, []).append((v, pos))
        labels = sorted(ends, key=lambda l: ends[l][0])
        edges = []
        dart_at: dict[tuple[int, int], int] = {}
        for e, label in enumerate(labels):
            occ = ends[label]
            if len(occ) != 2:
                raise ValueError(f"edge {label!r} must have exactly two ends")
            edges.append((occ[0][0], occ[1][0]))
            dart_at[occ[0]] = 2 * e
            dart_at[occ[1]] = 2 * e + 1
        rots = tuple(tuple(dart_at[(v, pos)] for pos in range(len(rotations[v]))) for v in verts)
        return cls(len(verts), tuple(edges), rots)

    def dart_vertex(self, d: int) -> int:
        return self.edges[d >> 1][d & 1]

    @cached_property
    def _position(self) -> dict[int, tuple[int, int]]:
        return {d: (v, i) for v, rot in enumerate(self.rotations) for i, d in enumerate(rot)}

    def sigma(self, d: int) -> int:
        v, i = self._position[d]
        rot = self.rotations[v]
        return rot[(i + 1) % len(rot)]

    def neighbors(self, v: int) -> list[int]:
        return [self.dart_vertex(d ^ 1) for d in self.rotations[v - 1]]

    def is_simple(self) -> bool:
        keys = [frozenset(e) for e in self.edges]
        return all(len(k) == 2 for k in keys) and len(set(keys)) == len(keys)

    def is_connected(self) -> bool:
        if self.num_vertices == 0:
            return True
        seen = {1}
        queue = deque([1])
        while queue:
            v = queue.popleft()
            for u in self.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == self.num_vertices

    def is_complete(self) -> bool:
        m = self.num_vertices
        return self.is_simple() and len(self.edges) == m * (m - 1) // 2

    def induced(self, vertices: Iterable[int]) -> RotationSystem:
        """Rotation system of the induced subgraph, relabelled to 1..len(vertices) in sorted order."""
        keep = sorted(set(vertices))
        new = {v: i for i, v in enumerate(keep, start=1)}
        nbrs = {new[v]: [new[u] for u in self.neighbors(v) if u in new] for v in keep}
        return RotationSystem.from_neighbors(len(keep), nbrs)


@dataclass(frozen=True)
class CycleOnSurface:
    """Edge set with every vertex of even degree."""

    edges: frozenset[int]

    @classmethod
    def checked(cls, rotation: RotationSystem, edges: Iterable[int]) -> CycleOnSurface:
        es = frozenset(edges)
        degree = [0] * (rotation.num_vertices + 1)
        for e in es:
            if not 0 <= e < len(rotation.edges):
                raise ValueError(f"unknown edge {e}")
            u, v = rotation.edges[e]
            degree[u] += 1
            degree[v] += 1
        odd = [v for v in range(1, rotation.num_vertices + 1) if degree[v] % 2]
        if odd:
            raise ValueError(f"edge set has odd degree at vertices {odd}")
        return cls(es)

    def __add__(self, other: CycleOnSurface) -> CycleOnSurface:
        return CycleOnSurface(self.edges ^ other.edges)


@dataclass(frozen=True)
class EmbeddedSurface:
    rotation: RotationSystem
    faces: tuple[tuple[int, ...], ...]
    euler_char: int
    genus: int
    tree_edges: frozenset[int] = field(repr=False)
    loops: tuple[int, ...] = field(repr=False)
    form: Gf2Matrix = field(repr=False)

    @cached_property
    def loop_index(self) -> dict[int, int]:
        return {e: i for i, e in enumerate(self.loops)}

    @cached_property
    def edge_between(self) -> dict[frozenset, int]:
        return {frozenset(uv): e for e, uv in enumerate(self.rotation.edges)}

    def loop_vector(self, c: CycleOnSurface) -> Gf2Vector:
        """Homology class in the basis of fundamental cycles: the non-tree edges of c."""
        bits = 0
        for e in c.edges:
            if e not in self.tree_edges:
                bits |= 1 << self.loop_index[e]
        return Gf2Vector(len(self.loops), bits)

    def cycle(self, vertices: Sequence[int]) -> CycleOnSurface:
        """Closed walk through ``vertices`` (consecutive ones adjacent) as an edge set."""
        es: set[int] = set()
        for a, b in zip(vertices, list(vertices[1:]) + [vertices[0]]):
            try:
                e = self.edge_between[frozenset((a, b))]
            except KeyError:
                raise ValueError(f"no edge {a}-{b}") from None
            es ^= {e}
        return CycleOnSurface.checked(self.rotation, es)

    def triangle(self, P: Sequence[int]) -> CycleOnSurface:
        if len(set(P)) != 3:
            raise ValueError("triangle needs three distinct vertices")
        return self.cycle(tuple(P))

    def face_boundary(self, f: int) -> CycleOnSurface:
        es: set[int] = set()
        for d in self.faces[f]:
            es ^= {d >> 1}
        return CycleOnSurface(frozenset(es))

    def fundamental_cycle(self, loop: int) -> CycleOnSurface:
        e = self.loops[loop]
        u, v = self.rotation.edges[e]
        return CycleOnSurface(frozenset({e}) ^ self._tree_path(u, v))

    @cached_property
    def _tree_parent(self) -> dict[int, tuple[int, int]]:
        parent: dict[int, tuple[int, int]] = {}
        adj: dict[int, list[tuple[int, int]]] = {}
        for e in self.tree_edges:
            u, v = self.rotation.edges[e]
            adj.setdefault(u, []).append((v, e))
            adj.setdefault(v, []).append((u, e))
        parent[1] = (0, -1)
        queue = deque([1])
        while queue:
            v = queue.popleft()
            for u, e in sorted(adj.get(v, ())):
                if u not in parent:
                    parent[u] = (v, e)
                    queue.append(u)
        return parent

    def _tree_path(self, u: int, v: int) -> frozenset[int]:
        def to_root(x):
            out = []
            while x != 1:
                p, e = self._tree_parent[x]
                out.append(e)
                x = p
            return out

        return frozenset(to_root(u)) ^ frozenset(to_root(v))


def trace_faces(rot: RotationSystem) -> EmbeddedSurface:
    if not rot.is_connected():
        raise ValueError("graph is disconnected")
    darts = 2 * len(rot.edges)
    seen = [False] * darts
    faces = []
    for start in range(darts):
        if seen[start]:
            continue
        walk = []
        d = start
        while not seen[d]:
            seen[d] = True
            walk.append(d)
            d = rot.sigma(d ^ 1)
        faces.append(tuple(walk))
    chi = rot.num_vertices - len(rot.edges) + len(faces)
    if chi % 2:
        raise ValueError(f"odd Euler characteristic {chi}")
    tree = _bfs_tree(rot)
    loops, form = _loop_form(rot, tree)
    return EmbeddedSurface(rot, tuple(faces), chi, (2 - chi) // 2, tree, loops, form)


def _bfs_tree(rot: RotationSystem) -> frozenset[int]:
    seen = {1}
    tree = set()
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for d in rot.rotations[v - 1]:
            u = rot.dart_vertex(d ^ 1)
            if u not in seen:
                seen.add(u)
                tree.add(d >> 1)
                queue.append(u)
    return frozenset(tree)


def _loop_form(rot: RotationSystem, tree: frozenset[int]) -> tuple[tuple[int, ...], Gf2Matrix]:
    if not rot.edges:
        return (), Gf2Matrix.zeros(0, 0)
    start = next(d for r in rot.rotations for d in r)
    order: list[int] = []
    d = start
    while True:
        if d >> 1 in tree:
            d = rot.sigma(d ^ 1)
        else:
            order.append(d >> 1)
            d = rot.sigma(d)
        if d == start:
            break
    loops = tuple(sorted(set(order)))
    index = {e: i for i, e in enumerate(loops)}
    pos: dict[int, list[int]] = {}
    for p, e in enumerate(order):
        pos.setdefault(e, []).append(p)
    rows = [0] * len(loops)
    for a, b in combinations(loops, 2):
        a0, a1 = pos[a]
        if sum(a0 < p < a1 for p in pos[b]) == 1:
            rows[index[a]] |= 1 << index[b]
            rows[index[b]] |= 1 << index[a]
    return loops, Gf2Matrix(len(loops), len(loops), tuple(rows))


def intersection_parity(surface: EmbeddedSurface, c1: CycleOnSurface, c2: CycleOnSurface) -> int:
    for c in (c1, c2):
        CycleOnSurface.checked(surface.rotation, c.edges)
    v1, v2 = surface.loop_vector(c1), surface.loop_vector(c2)
    return v1.dot(surface.form.apply(v2))


def homology_rank(surface: EmbeddedSurface) -> int:
    return 2 * surface.genus


def homology_basis(surface: EmbeddedSurface) -> list[CycleOnSurface]:
    """Cycles whose classes form a basis of H_1(surface; Z_2).

    Fundamental cycles span the cycle space; face boundaries span the
    null-homologous part.  Loops are added greedily while they stay
    independent of the face span.
    """
    L = len(surface.loops)
    span = [surface.loop_vector(surface.face_boundary(f)).bits for f in range(len(surface.faces))]
    base = gf2.rank(Gf2Matrix(len(span), L, tuple(span)))
    basis = []
    for i in range(L):
        trial = span + [1 << i]
        r = gf2.rank(Gf2Matrix(len(trial), L, tuple(trial)))
        if r > base:
            span, base = trial, r
            basis.append(surface.fundamental_cycle(i))
    return basis


def pairing_gram(surface: EmbeddedSurface, cycles: Sequence[CycleOnSurface]) -> Gf2Matrix:
    return gf2.gram(surface.form, [surface.loop_vector(c) for c in cycles])


def build_pattern_matrix(surface: EmbeddedSurface) -> PatternMatrix:
    """``A[P, Q]`` = intersection parity of the triangle boundaries of P and Q (k = 1)."""
    rot = surface.rotation
    m = rot.num_vertices
    if m < 3 or not rot.is_complete():
        raise ValueError("build_pattern_matrix needs a complete graph on at least 3 vertices")
    triangles = [surface.loop_vector(surface.triangle(P)) for P in _colex_table(m, 3)]
    return PatternMatrix(m, 1, gf2.gram(surface.form, triangles))


def cone_pairing_sum(surface: EmbeddedSurface, vertices: Sequence[int]) -> int:
    """Sum over the three halvings {s, t} of the first four vertices of parity(s+v5, t+v5)."""
    vs = tuple(vertices)
    if len(vs) != 5 or len(set(vs)) != 5:
        raise ValueError("need five distinct vertices")
    cone = vs[4]
    total = 0
    for s, t in enumerate_halvings(vs[:4], 2):
        total ^= intersection_parity(surface, surface.triangle(s + (cone,)), surface.triangle(t + (cone,)))
    return total


def cone_pairing_sweep(surface: EmbeddedSurface) -> dict:
    """Cone-pairing sum for every 5-subset and every choice of cone vertex."""
    m = surface.rotation.num_vertices
    values = {}
    for five in combinations(range(1, m + 1), 5):
        for cone in five:
            base = tuple(x for x in five if x != cone)
            values[(five, cone)] = cone_pairing_sum(surface, base + (cone,))
    return values


# --- rotation file format v1 ---------------------------------------------------

def loads_rotation(text: str, source: str | None = None) -> RotationSystem:
    lines = text.splitlines()
    if not lines:
        raise RotationFormatError("empty input", 1, source)
    head = lines[0].split()
    if head[:2] != ["rotation", "v1"] or len(head) != 3 or not head[2].startswith("vertices="):
        raise RotationFormatError("expected header 'rotation v1 vertices=<m>'", 1, source)
    try:
        m = int(head[2].split("=", 1)[1])
    except ValueError:
        raise RotationFormatError("bad vertex count", 1, source) from None
    nbrs: dict[int, list[int]] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        v_text, sep, rest = line.partition(":")
        if not sep:
            raise RotationFormatError("expected 'v: u1 u2 ...'", lineno, source)
        try:
            v = int(v_text)
            us = [int(x) for x in rest.split()]
        except ValueError:
            raise RotationFormatError("non-integer vertex label", lineno, source) from None
        if not 1 <= v <= m:
            raise RotationFormatError(f"vertex {v} out of range 1..{m}", lineno, source)
        if v in nbrs:
            raise RotationFormatError(f"vertex {v} listed twice", lineno, source)
        nbrs[v] = us
    missing = [v for v in range(1, m + 1) if v not in nbrs]
    if missing:
        raise RotationFormatError(f"no rotation for vertices {missing}", None, source)
    try:
        return RotationSystem.from_neighbors(m, nbrs)
    except ValueError as exc:
        raise RotationFormatError(str(exc), None, source) from None


def dumps_rotation(rot: RotationSystem) -> str:
    if not rot.is_simple():
        raise ValueError("rotation v1 files hold simple graphs only")
    lines = [f"rotation v1 vertices={rot.num_vertices}"]
    for v in range(1, rot.num_vertices + 1):
        lines.append(f"{v}: " + " ".join(map(str, rot.neighbors(v))))
    return "\n".join(lines) + "\n"


def load_rotation(path) -> RotationSystem:
    with open(path, encoding="utf-8") as fh:
        return loads_rotation(fh.read(), source=str(path))


def _manifest() -> dict[str, tuple[str, int]]:
    text = resources.files("patternlab.data").joinpath("MANIFEST.sha256").read_text()
    out = {}
    for line in text.splitlines():
        if line.strip() and not line.startswith("#"):
            digest, name, chi = line.split()
            out[name] = (digest, int(chi.split("=", 1)[1]))
    return out


def load_shipped(name: str) -> EmbeddedSurface:
    """Load a bundled embedding, verifying checksum, simplicity and Euler characteristic."""
    manifest = _manifest()
    if name not in manifest:
        raise KeyError(f"no shipped embedding {name!r}")
    raw = resources.files("patternlab.data").joinpath(name).read_bytes()
    digest, chi = manifest[name]
    if hashlib.sha256(raw).hexdigest() != digest:
        raise RuntimeError(f"checksum mismatch for shipped file {name}")
    rot = loads_rotation(raw.decode(), source=name)
    if not rot.is_simple():
        raise RuntimeError(f"shipped file {name} is not a simple graph")
    surface = trace_faces(rot)
    if surface.euler_char != chi:
        raise RuntimeError(f"shipped file {name}: expected chi={chi}, traced {surface.euler_char}")
    return surface


def shipped_path(name: str):
    return resources.files("patternlab.data").joinpath(name)
