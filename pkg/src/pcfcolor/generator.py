"""Named corpus graphs and seeded random plane graphs with maximum degree 4.

Random graphs are planar by construction: an embedded tree (or a truncated
grid) is grown and chords are only ever added inside a single face, with the
rotations updated at the two corners involved.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .errors import InputError, UnknownName
from .graph import Embedding, Graph, faces_of, trace_faces, validate

RNG_NAME = "numpy.PCG64"
MODES = ("tree-plus-edges", "grid-perturb")
MAX_ATTEMPTS = 50


@dataclass(frozen=True)
class GenSpec:
    seed: int
    n: int
    mode: str = "tree-plus-edges"

    def meta(self) -> dict:
        return {"seed": self.seed, "n": self.n, "mode": self.mode, "rng": RNG_NAME}


class _Plane:
    """Mutable rotation system used while growing a graph."""

    def __init__(self, n: int):
        self.rot: list[list[int]] = [[] for _ in range(n)]

    def add_leaf(self, parent: int, child: int, pos: int) -> None:
        self.rot[parent].insert(pos, child)
        self.rot[child] = [parent]

    def adjacent(self, a: int, b: int) -> bool:
        return b in self.rot[a]

    def delete(self, a: int, b: int) -> None:
        self.rot[a].remove(b)
        self.rot[b].remove(a)

    def chord(self, a: int, a_prev: int, b: int, b_prev: int) -> None:
        # place the new edge right after the face's incoming neighbor at each corner
        self.rot[a].insert(self.rot[a].index(a_prev) + 1, b)
        self.rot[b].insert(self.rot[b].index(b_prev) + 1, a)

    def freeze(self) -> tuple[Graph, Embedding]:
        g = Graph(len(self.rot), self.rot)
        return g, Embedding.from_lists(self.rot)


def _corners(g: Graph, emb: Embedding):
    """Per face, the list of corners ``(vertex, predecessor on the walk)``."""
    out = []
    for f in trace_faces(g, emb):
        if f.isolated is None:
            out.append([(b, a) for a, b in f.boundary])
    return out


def _add_chords(p: _Plane, rng: np.random.Generator, target: int) -> None:
    # each dart (a, b) enters corner b; the face continues after a in rot(b).
    # A chord splits its face, so at most one chord per face per round.
    added = 0
    while added < target:
        g, emb = p.freeze()
        options = []
        for fi, corners in enumerate(_corners(g, emb)):
            for i, (a, ap) in enumerate(corners):
                if len(p.rot[a]) > 3:
                    continue
                for b, bp in corners[i + 1:]:
                    if b != a and len(p.rot[b]) <= 3 and not p.adjacent(a, b):
                        options.append((fi, a, ap, b, bp))
        if not options:
            return
        batch = max(1, (target - added) // 4)
        faces: set[int] = set()
        got = 0
        for idx in rng.permutation(len(options)):
            fi, a, ap, b, bp = options[int(idx)]
            if fi in faces or len(p.rot[a]) > 3 or len(p.rot[b]) > 3 or p.adjacent(a, b):
                continue
            p.chord(a, ap, b, bp)
            faces.add(fi)
            added += 1
            got += 1
            if got >= batch or added >= target:
                break


def _tree_plus_edges(n: int, rng: np.random.Generator) -> _Plane:
    p = _Plane(n)
    for v in range(1, n):
        open_ = [u for u in range(v) if len(p.rot[u]) < 4]
        parent = open_[int(rng.integers(len(open_)))]
        p.add_leaf(parent, v, int(rng.integers(len(p.rot[parent]) + 1)))
    _add_chords(p, rng, int(rng.uniform(0.5, 1.05) * (n + 1)))
    return p


def _grid_perturb(n: int, rng: np.random.Generator) -> _Plane:
    w = max(1, math.ceil(math.sqrt(n)))
    pos = {v: (v % w, v // w) for v in range(n)}
    p = _Plane(n)
    for v in range(n):
        x, y = pos[v]
        nb = [u for u in (v - 1, v + 1, v - w, v + w) if 0 <= u < n and abs(pos[u][0] - x) + abs(pos[u][1] - y) == 1]
        nb.sort(key=lambda u: math.atan2(pos[u][1] - y, pos[u][0] - x))
        p.rot[v] = nb
    edges = [(v, u) for v in range(n) for u in p.rot[v] if v < u]
    drop = int(rng.uniform(0.0, 0.25) * len(edges))
    for idx in rng.permutation(len(edges))[:drop]:
        a, b = edges[int(idx)]
        p.delete(a, b)
        if not Graph(n, p.rot).is_connected:
            p.rot[a].append(b)  # order restored below
            p.rot[b].append(a)
            for v in (a, b):
                x, y = pos[v]
                p.rot[v].sort(key=lambda u: math.atan2(pos[u][1] - y, pos[u][0] - x))
    _add_chords(p, rng, int(rng.uniform(0.1, 0.6) * n))
    return p


def generate(spec: GenSpec) -> tuple[Graph, Embedding]:
    """Deterministic connected plane graph with maximum degree 4 for ``spec``."""
    if spec.n < 1:
        raise InputError("n must be at least 1")
    if spec.mode not in MODES:
        raise InputError(f"unknown mode {spec.mode!r}; expected one of {', '.join(MODES)}")
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    build = _tree_plus_edges if spec.mode == "tree-plus-edges" else _grid_perturb
    for _ in range(MAX_ATTEMPTS):
        g, emb = build(spec.n, rng).freeze()
        try:
            validate(g, require_max4=True)
            emb.check(g)
            faces_of(g, emb)
        except InputError:
            continue
        if g.is_connected:
            return g, emb
    raise RuntimeError(f"generator failed for {spec}")  # not reached in practice


def seeded_instance(seed: int) -> GenSpec:
    """Sweep used by the solver soundness run: n in 20..60, modes alternate."""
    return GenSpec(seed, 20 + seed % 41, MODES[seed % 2])


# corpus


def _from_nx(h: nx.Graph) -> tuple[Graph, Embedding | None]:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    g = Graph.from_edges(h.number_of_nodes(), h.edges())
    planar, emb = nx.check_planarity(h)
    if not planar:
        return g, None
    return g, Embedding.from_lists(list(emb.neighbors_cw_order(v)) for v in range(g.n))


def _rhombic_dodecahedron() -> nx.Graph:
    # cube corners (degree 3) joined to the octahedron's axis points (degree 4)
    h = nx.Graph()
    for corner in itertools.product((-1, 1), repeat=3):
        for axis in range(3):
            tip = tuple(corner[axis] if i == axis else 0 for i in range(3))
            h.add_edge(corner, tip)
    return h


def _ladder(m: int) -> nx.Graph:
    return nx.ladder_graph(m)


def _prism(k: int) -> nx.Graph:
    return nx.circular_ladder_graph(k)


_FIXED = {
    "k4": lambda: nx.complete_graph(4),
    "c5": lambda: nx.cycle_graph(5),
    "cube": lambda: nx.hypercube_graph(3),
    "dodecahedron": nx.dodecahedral_graph,
    "octahedron": nx.octahedral_graph,
    "rhombic-dodecahedron": _rhombic_dodecahedron,
    "petersen": nx.petersen_graph,
    "c4-ladder": lambda: _ladder(5),
}
_PARAM = {
    "grid": (2, lambda a: nx.grid_2d_graph(a[1], a[0])),
    "prism": (1, lambda a: _prism(a[0])),
    "ladder": (1, lambda a: _ladder(a[0])),
}

CORPUS = (
    "k4", "c5", "cube", "octahedron", "dodecahedron", "rhombic-dodecahedron", "petersen", "c4-ladder",
    "grid(2,2)", "grid(3,3)", "grid(3,4)", "grid(4,4)", "grid(5,5)", "grid(6,4)", "grid(8,8)", "grid(10,10)",
    "prism(3)", "prism(4)", "prism(5)", "prism(6)", "prism(8)", "prism(12)",
    "ladder(3)", "ladder(6)", "ladder(12)",
)
NON_PLANAR = frozenset({"petersen"})


def _normalize(name: str) -> str:
    return re.sub(r"[\s_]+", "-", name.strip().lower())


def corpus(name: str) -> tuple[Graph, Embedding | None]:
    """Named instance; the embedding is ``None`` only for non-planar entries."""
    key = _normalize(name)
    if key in _FIXED:
        return _from_nx(_FIXED[key]())
    m = re.fullmatch(r"([a-z]+)\(([\d,\s]*)\)", key.replace("-", ""))
    if m and m.group(1) in _PARAM:
        arity, make = _PARAM[m.group(1)]
        try:
            args = [int(a) for a in m.group(2).split(",")]
        except ValueError:
            raise UnknownName(name) from None
        if len(args) == arity and all(a >= 1 for a in args):
            return _from_nx(make(args))
    raise UnknownName(name)


def planar_corpus() -> list[tuple[str, Graph, Embedding]]:
    out = []
    for name in CORPUS:
        g, emb = corpus(name)
        if emb is not None:
            out.append((name, g, emb))
    return out
