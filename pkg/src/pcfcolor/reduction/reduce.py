"""S-reduced graphs and the forbidden color sets built on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import NotOnBoundary, SReductionPrecondition
from ..graph import Graph
from .configs import ConfigKind, ConfigMatch

# roles removed by each kind; K2 and K10 depend on the subcase
_REMOVED = {
    ConfigKind.K1: ("v",),
    ConfigKind.K3: ("x", "y", "z"),
    ConfigKind.K4: ("x", "y", "z"),
    ConfigKind.K5: ("x", "y", "z", "w"),
    ConfigKind.K6: ("x", "y", "z", "w"),
    ConfigKind.K7: ("v",),
    ConfigKind.K8: ("x", "y", "z", "u", "v"),
    ConfigKind.K9: ("x", "y", "z", "u", "v", "z1"),
}


def removed_roles(m: ConfigMatch) -> tuple[str, ...]:
    if m.kind is ConfigKind.K2:
        return ("x", "x1") if m.subcase == "x1=3" else ("x", "y", "z")
    if m.kind is ConfigKind.K10:
        return ("x", "y", "z", "u", "v", "z1", "u1") if m.subcase == "z" else ("x", "y", "z", "u", "v", "u1", "v1")
    return _REMOVED[m.kind]


@dataclass(frozen=True)
class ReductionPlan:
    """One reduction step.

    ``reduced`` is relabeled densely; ``kept[i]`` is the id in the parent
    graph of reduced vertex ``i``.  ``added_edges`` are in parent ids.
    """

    kind: ConfigKind
    match: ConfigMatch
    S: tuple[int, ...]
    reduced: Graph
    kept: tuple[int, ...]
    added_edges: tuple[tuple[int, int], ...]

    @property
    def script(self) -> ConfigKind:
        return self.kind

    def to_json(self, ids: Sequence[int] | None = None) -> dict:
        """Trace entry; ``ids`` translates parent ids (e.g. back to the input graph)."""
        t = (lambda v: v) if ids is None else (lambda v: ids[v])
        doc = {
            "kind": self.kind.value,
            "S": sorted(t(v) for v in self.S),
            "added_edges": sorted(sorted((t(a), t(b))) for a, b in self.added_edges),
            "roles": {r: t(v) for r, v in self.match.roles if v is not None},
        }
        if self.match.subcase is not None:
            doc["subcase"] = self.match.subcase
        return doc


def s_reduced(g: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...], tuple[tuple[int, int], ...]]:
    """Delete ``S`` and join outside vertices sharing a neighbor in ``S``.

    Returns ``(reduced, kept, added_edges)``.
    """
    S = set(S)
    for s in sorted(S):
        outside = [w for w in g.adj[s] if w not in S]
        if len(outside) > 2:
            raise SReductionPrecondition(f"vertex {s} of S has {len(outside)} neighbors outside S")
    added = set()
    for s in S:
        outside = [w for w in g.adj[s] if w not in S]
        if len(outside) == 2:
            a, b = outside
            if not g.has_edge(a, b):
                added.add((min(a, b), max(a, b)))
    return _rebuild(g, S, added)


def _rebuild(g: Graph, S: set[int], added: set[tuple[int, int]]):
    kept = tuple(v for v in range(g.n) if v not in S)
    index = {v: i for i, v in enumerate(kept)}
    rows = [[index[w] for w in g.adj[v] if w in index] for v in kept]
    for a, b in added:
        rows[index[a]].append(index[b])
        rows[index[b]].append(index[a])
    return Graph(len(kept), rows), kept, tuple(sorted(added))


def reduce(g: Graph, m: ConfigMatch) -> ReductionPlan:
    """Build the reduced graph for a located configuration."""
    S = tuple(sorted(m[r] for r in removed_roles(m)))
    if m.kind is ConfigKind.K7:
        # not an S-reduction: drop v and join x to u
        x, u = m["x"], m["u"]
        added = set() if g.has_edge(x, u) else {(min(x, u), max(x, u))}
        reduced, kept, added_edges = _rebuild(g, set(S), added)
    else:
        reduced, kept, added_edges = s_reduced(g, S)
    return ReductionPlan(m.kind, m, S, reduced, kept, added_edges)


# forbidden palettes


def reduced_neighbors(g: Graph, S: set[int] | frozenset[int], u: int) -> set[int]:
    """Neighborhood of an outside vertex ``u`` in the S-reduced graph (in ``g``'s ids)."""
    out = {w for w in g.adj[u] if w not in S}
    for s in g.adj[u]:
        if s in S:
            out.update(w for w in g.adj[s] if w not in S and w != u)
    return out


def reduced_unique_colors(g: Graph, S, phi: Sequence[int | None], u: int) -> list[int]:
    """Unique colors of ``u`` in the S-reduced graph, preferred ones first.

    Colors carried by a neighbor of ``u`` outside ``S`` in ``g`` come first
    (ascending), then the remaining ones (ascending).  Only the first ones
    survive into the original graph whatever ``S`` is colored with.
    """
    S = set(S)
    counts: dict[int, int] = {}
    for w in reduced_neighbors(g, S, u):
        c = phi[w]
        if c is not None:
            counts[c] = counts.get(c, 0) + 1
    uniq = {c for c, k in counts.items() if k == 1}
    own = {phi[w] for w in g.adj[u] if w not in S}
    return sorted(uniq & own) + sorted(uniq - own)


def boundary_palette(g: Graph, S, phi: Sequence[int | None], u: int) -> frozenset[int]:
    """Colors a vertex of ``S`` next to ``u`` must avoid for ``u``'s sake (B_S(u)).

    ``phi`` is indexed by ``g``'s vertices; vertices of ``S`` are ignored.
    """
    S = set(S)
    if u in S or not any(w in S for w in g.adj[u]):
        raise NotOnBoundary(f"vertex {u} is not an outside vertex with a neighbor in S")
    outside = [phi[w] for w in g.adj[u] if w not in S]
    if len(set(outside)) == len(outside):
        return frozenset([phi[u], *reduced_unique_colors(g, S, phi, u)[:2]]) - {None}
    return frozenset([phi[u], *outside]) - {None}


def forbidden_base(g: Graph, S, phi: Sequence[int | None], v: int) -> frozenset[int]:
    """Union of :func:`boundary_palette` over the outside neighbors of ``v`` (C(v))."""
    S = set(S)
    out: set[int] = set()
    for u in g.adj[v]:
        if u not in S:
            out |= boundary_palette(g, S, phi, u)
    return frozenset(out)
