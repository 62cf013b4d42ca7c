"""Graphs, rotation systems, faces and colorings.

Vertices are the dense ids ``0..n-1``.  All types here are immutable once
built, so they can be shared freely between the solver, oracle and auditor.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    AsymmetricAdjacency,
    DegreeExceeded,
    InputError,
    NonPlanarEmbedding,
    ParallelEdge,
    RotationMismatch,
    SelfLoop,
    VertexOutOfRange,
)

MAX_DEGREE = 4


class Graph:
    """Simple undirected graph stored as sorted adjacency tuples.

    The constructor does not validate; use :meth:`from_edges` or
    :func:`validate` for untrusted input.
    """

    __slots__ = ("n", "adj", "_sets", "_hash")

    def __init__(self, n: int, adjacency: Iterable[Iterable[int]]):
        adj = tuple(tuple(sorted(a)) for a in adjacency)
        if len(adj) != n:
            raise InputError(f"adjacency has {len(adj)} rows, expected {n}")
        self.n = n
        self.adj = adj
        self._sets = tuple(frozenset(a) for a in adj)
        self._hash: int | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], *, check: bool = True) -> "Graph":
        rows: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            if len(e) != 2:
                raise InputError(f"edge {list(e)!r} does not have two endpoints")
            u, v = int(e[0]), int(e[1])
            for w in (u, v):
                if not 0 <= w < n:
                    raise VertexOutOfRange(w, n)
            if u == v:
                raise SelfLoop(u)
            rows[u].append(v)
            rows[v].append(u)
        g = cls(n, rows)
        if check:
            validate(g)
        return g

    # queries

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def nbrs(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            out.append(sorted(comp))
        return out

    @property
    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Subgraph induced on ``keep``, relabeled so ``keep[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(keep)}
        return Graph(len(keep), ([index[w] for w in self.adj[v] if w in index] for v in keep))

    def distances_from(self, s: int) -> list[int]:
        dist = [-1] * self.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in self.adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def validate(g: Graph, require_max4: bool = False) -> None:
    """Raise on the first structural defect; return ``None`` if ``g`` is fine."""
    for v, row in enumerate(g.adj):
        prev = None
        for w in row:
            if not 0 <= w < g.n:
                raise VertexOutOfRange(w, g.n)
            if w == v:
                raise SelfLoop(v)
            if w == prev:
                raise ParallelEdge(min(v, w), max(v, w))
            prev = w
        for w in row:
            if v not in g.nbrs(w):
                raise AsymmetricAdjacency(v, w)
    if require_max4:
        for v, row in enumerate(g.adj):
            if len(row) > MAX_DEGREE:
                raise DegreeExceeded(v, len(row))


def square(g: Graph) -> Graph:
    """Add an edge between every pair of vertices at distance two."""
    rows = []
    for v in range(g.n):
        near = set(g.adj[v])
        for w in g.adj[v]:
            near.update(g.adj[w])
        near.discard(v)
        rows.append(near)
    return Graph(g.n, rows)


# embeddings and faces


@dataclass(frozen=True)
class Embedding:
    """Rotation system: ``rotations[v]`` lists the neighbors of ``v`` clockwise."""

    rotations: tuple[tuple[int, ...], ...]

    @classmethod
    def from_lists(cls, rotations: Iterable[Iterable[int]]) -> "Embedding":
        return cls(tuple(tuple(int(w) for w in r) for r in rotations))

    def check(self, g: Graph) -> None:
        if len(self.rotations) != g.n:
            raise InputError(f"rotation system covers {len(self.rotations)} vertices, graph has {g.n}")
        for v, rot in enumerate(self.rotations):
            if tuple(sorted(rot)) != g.adj[v]:
                raise RotationMismatch(v)


@dataclass(frozen=True)
class Face:
    """A face given by its boundary walk of directed edges.

    A bridge is walked once in each direction, so it counts twice towards
    :attr:`length`.  An isolated vertex has a single face with an empty walk
    and records the vertex in ``isolated``.
    """

    boundary: tuple[tuple[int, int], ...]
    isolated: int | None = None

    @property
    def length(self) -> int:
        return len(self.boundary)

    @property
    def walk(self) -> tuple[int, ...]:
        """Vertices in boundary order, one entry per occurrence (corner)."""
        if self.isolated is not None:
            return ()
        return tuple(d[0] for d in self.boundary)

    @property
    def vertices(self) -> frozenset[int]:
        if self.isolated is not None:
            return frozenset((self.isolated,))
        return frozenset(self.walk)


def trace_faces(g: Graph, emb: Embedding) -> list[Face]:
    """Trace every face of the rotation system without the Euler check."""
    emb.check(g)
    rot = emb.rotations
    pos = [{w: i for i, w in enumerate(r)} for r in rot]
    seen: set[tuple[int, int]] = set()
    faces = []
    for v in range(g.n):
        if not rot[v]:
            faces.append(Face((), isolated=v))
            continue
        for u in rot[v]:
            if (v, u) in seen:
                continue
            walk = []
            dart = (v, u)
            while dart not in seen:
                seen.add(dart)
                walk.append(dart)
                a, b = dart
                r = rot[b]
                dart = (b, r[(pos[b][a] + 1) % len(r)])
            faces.append(Face(tuple(walk)))
    return faces


def euler_counts(g: Graph, faces: Sequence[Face]) -> list[tuple[int, int, int]]:
    """Per-component ``(|V|, |E|, |F|)`` triples."""
    comp_of = [0] * g.n
    comps = g.components()
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    counts = [[len(c), 0, 0] for c in comps]
    for v in range(g.n):
        for w in g.adj[v]:
            if v < w:
                counts[comp_of[v]][1] += 1
    for f in faces:
        v = f.isolated if f.isolated is not None else f.boundary[0][0]
        counts[comp_of[v]][2] += 1
    return [tuple(c) for c in counts]  # type: ignore[misc]


def faces_of(g: Graph, emb: Embedding) -> list[Face]:
    """Trace the faces of ``emb`` and insist on Euler's formula per component."""
    faces = trace_faces(g, emb)
    for nv, ne, nf in euler_counts(g, faces):
        if nv - ne + nf != 2:
            raise NonPlanarEmbedding(nv, ne, nf)
    return faces


# colorings


@dataclass(frozen=True)
class Coloring:
    """Assignment of palette indices ``1..k``; ``None`` marks an uncolored vertex."""

    assignment: tuple[int | None, ...]
    k: int

    def __post_init__(self):
        for c in self.assignment:
            if c is not None and not 1 <= c <= self.k:
                raise InputError(f"color {c} outside palette 1..{self.k}")

    @classmethod
    def from_list(cls, colors: Iterable[int | None], k: int | None = None) -> "Coloring":
        a = tuple(None if c is None or c == 0 else int(c) for c in colors)
        if k is None:
            k = max((c for c in a if c is not None), default=1)
        return cls(a, k)

    def __getitem__(self, v: int) -> int | None:
        return self.assignment[v]

    def __len__(self) -> int:
        return len(self.assignment)

    def __iter__(self) -> Iterator[int | None]:
        return iter(self.assignment)

    @property
    def is_total(self) -> bool:
        return all(c is not None for c in self.assignment)

    def colors_of(self, vertices: Iterable[int]) -> set[int]:
        return {c for c in (self.assignment[v] for v in vertices) if c is not None}

    @property
    def num_colors(self) -> int:
        return len({c for c in self.assignment if c is not None})

    def is_proper(self, g: Graph) -> bool:
        a = self.assignment
        return all(a[u] is None or a[u] != a[v] for u, v in g.edges())
