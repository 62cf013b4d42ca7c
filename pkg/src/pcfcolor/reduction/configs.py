"""The ten reducible configurations and their detection.

Kinds are searched in priority order K1..K10.  Later kinds rely on earlier
ones being absent (K9's script, say, needs ``x1`` and ``v1`` to be
4-vertices, which the absence of K4 guarantees), so a match of kind ``Ki``
is only meaningful in a graph with no match of any earlier kind.

Within a kind the match with the lexicographically smallest role tuple wins,
roles compared in the order of :data:`ROLE_ORDER`.  Auxiliary roles that the
primary roles determine (e.g. ``y1``/``y2``, the off-triangle neighbors of
``y`` in increasing id order) are listed after the primary ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping

from ..graph import Graph


class ConfigKind(str, Enum):
    K1 = "K1"    # 2^- vertex
    K2 = "K2"    # triangle with a 3-vertex
    K3 = "K3"    # triangle of 4-vertices
    K4 = "K4"    # 3-3-3 path whose middle vertex has a 4-neighbor
    K5 = "K5"    # path on four 3-vertices
    K6 = "K6"    # 4-cycle with two adjacent 3-vertices
    K7 = "K7"    # 3-vertex on two 4-cycles sharing an edge
    K8 = "K8"    # 5-cycle with three consecutive 3-vertices
    K9 = "K9"    # 3,4,3,4,3 5-cycle whose lone 3-vertex has a 3-neighbor off the cycle
    K10 = "K10"  # 3,4,3,4,3 5-cycle with a bad 3-vertex

    def __str__(self) -> str:
        return self.value


KINDS: tuple[ConfigKind, ...] = tuple(ConfigKind)

ROLE_ORDER: dict[ConfigKind, tuple[str, ...]] = {
    ConfigKind.K1: ("v",),
    ConfigKind.K2: ("x", "y", "z", "x1", "y1", "y2", "z1", "z2"),
    ConfigKind.K3: ("x", "y", "z", "x1", "x2", "y1", "y2", "z1", "z2"),
    ConfigKind.K4: ("x", "y", "z", "y1"),
    ConfigKind.K5: ("x", "y", "z", "w", "y1", "z1"),
    ConfigKind.K6: ("x", "y", "z", "w", "x1", "y1", "z1", "z2", "w1", "w2"),
    ConfigKind.K7: ("v", "x", "y", "z", "u", "w", "z1"),
    ConfigKind.K8: ("x", "y", "z", "u", "v", "y1", "z1", "u1"),
    ConfigKind.K9: ("x", "y", "z", "u", "v", "z1", "x1", "v1"),
    ConfigKind.K10: ("x", "y", "z", "u", "v", "z1", "u1", "v1", "x1"),
}


@dataclass(frozen=True)
class ConfigMatch:
    """A located configuration.

    ``roles`` maps role names to vertex ids; a role that does not exist for
    this particular match (``y2`` when ``y`` is a 3-vertex) maps to ``None``.
    ``subcase`` distinguishes the two branches of K2 (``"x1=3"``, ``"x1=4"``)
    and of K10 (``"z"``: ``z`` is bad, ``"v"``: ``v`` is bad).
    """

    kind: ConfigKind
    roles: tuple[tuple[str, int | None], ...]
    subcase: str | None = None

    @classmethod
    def make(cls, kind: ConfigKind, roles: Mapping[str, int | None], subcase: str | None = None) -> "ConfigMatch":
        return cls(kind, tuple((r, roles.get(r)) for r in ROLE_ORDER[kind]), subcase)

    @property
    def role_map(self) -> dict[str, int | None]:
        return dict(self.roles)

    def __getitem__(self, role: str) -> int | None:
        for r, v in self.roles:
            if r == role:
                return v
        raise KeyError(role)

    @property
    def key(self) -> tuple:
        return tuple(-1 if v is None else v for _, v in self.roles)

    def vertices(self) -> set[int]:
        return {v for _, v in self.roles if v is not None}

    def to_json(self) -> dict:
        doc = {"kind": self.kind.value, "roles": {r: v for r, v in self.roles if v is not None}}
        if self.subcase is not None:
            doc["subcase"] = self.subcase
        return doc


def _others(g: Graph, v: int, exclude: Iterable[int]) -> list[int]:
    ex = set(exclude)
    return [w for w in g.adj[v] if w not in ex]


def _distinct(*vs: int | None) -> bool:
    vals = [v for v in vs if v is not None]
    return len(vals) == len(set(vals))


def _pad(vals: list[int], size: int) -> list[int | None]:
    return vals + [None] * (size - len(vals))


class _Finder:
    def __init__(self, g: Graph, allowed: Iterable[int] | None):
        self.g = g
        self.deg = g.degrees
        self.starts = sorted(allowed) if allowed is not None else range(g.n)

    def d(self, v: int) -> int:
        return self.deg[v]

    # each finder yields matches in increasing role-tuple order

    def k1(self) -> Iterator[ConfigMatch]:
        for v in self.starts:
            if self.d(v) <= 2:
                yield ConfigMatch.make(ConfigKind.K1, {"v": v})

    def k2(self) -> Iterator[ConfigMatch]:
        g = self.g
        for x in self.starts:
            if self.d(x) != 3:
                continue
            for y in g.adj[x]:
                for z in g.adj[x]:
                    if z == y or not g.has_edge(y, z):
                        continue
                    if self.d(y) != 3 and self.d(z) == 3:
                        continue  # normalized: a 3-vertex among y, z is called y
                    (x1,) = _others(g, x, (y, z))
                    y1, y2 = _pad(_others(g, y, (x, z)), 2)
                    z1, z2 = _pad(_others(g, z, (x, y)), 2)
                    yield ConfigMatch.make(
                        ConfigKind.K2,
                        dict(x=x, y=y, z=z, x1=x1, y1=y1, y2=y2, z1=z1, z2=z2),
                        "x1=3" if self.d(x1) == 3 else "x1=4",
                    )

    def k3(self) -> Iterator[ConfigMatch]:
        g = self.g
        for x in self.starts:
            if self.d(x) != 4:
                continue
            for y in g.adj[x]:
                if self.d(y) != 4:
                    continue
                for z in g.adj[x]:
                    if z == y or self.d(z) != 4 or not g.has_edge(y, z):
                        continue
                    x1, x2 = _others(g, x, (y, z))
                    y1, y2 = _others(g, y, (x, z))
                    z1, z2 = _others(g, z, (x, y))
                    yield ConfigMatch.make(ConfigKind.K3, dict(x=x, y=y, z=z, x1=x1, x2=x2, y1=y1, y2=y2, z1=z1, z2=z2))

    def k4(self) -> Iterator[ConfigMatch]:
        g = self.g
        for x in self.starts:
            if self.d(x) != 3:
                continue
            for y in g.adj[x]:
                if self.d(y) != 3:
                    continue
                for z in g.adj[y]:
                    if z == x or self.d(z) != 3:
                        continue
                    if g.has_edge(x, z):
                        continue  # a triangle, handled by K2
                    (y1,) = _others(g, y, (x, z))
                    if self.d(y1) == 4:
                        yield ConfigMatch.make(ConfigKind.K4, dict(x=x, y=y, z=z, y1=y1))

    def k5(self) -> Iterator[ConfigMatch]:
        g = self.g
        for x in self.starts:
            if self.d(x) != 3:
                continue
            for y in g.adj[x]:
                if self.d(y) != 3:
                    continue
                for z in g.adj[y]:
                    if z == x or self.d(z) != 3:
                        continue
                    for w in g.adj[z]:
                        if w in (x, y) or self.d(w) != 3:
                            continue
                        y1 = _others(g, y, (x, z))
                        z1 = _others(g, z, (y, w))
                        if len(y1) != 1 or len(z1) != 1 or y1[0] in (w, z1[0]) or z1[0] == x:
                            continue  # a triangle, handled by K2
                        yield ConfigMatch.make(ConfigKind.K5, dict(x=x, y=y, z=z, w=w, y1=y1[0], z1=z1[0]))

    def k6(self) -> Iterator[ConfigMatch]:
        g = self.g
        for x in self.starts:
            if self.d(x) != 3:
                continue
            for y in g.adj[x]:
                if self.d(y) != 3:
                    continue
                for z in g.adj[y]:
                    if z == x or self.d(z) != 4:
                        continue
                    for w in g.adj[z]:
                        if w in (x, y) or not g.has_edge(w, x):
                            continue
                        (x1,) = _others(g, x, (y, w))
                        (y1,) = _others(g, y, (x, z))
                        z1, z2 = _others(g, z, (y, w))
                        w1, w2 = _pad(_others(g, w, (x, z)), 2)
                        if g.has_edge(x, z) or g.has_edge(y, w) or not _distinct(x1, y1, z1, z2, w1, w2):
                            continue
                        yield ConfigMatch.make(
                            ConfigKind.K6, dict(x=x, y=y, z=z, w=w, x1=x1, y1=y1, z1=z1, z2=z2, w1=w1, w2=w2))

    def k7(self) -> Iterator[ConfigMatch]:
        g = self.g
        for v in self.starts:
            if self.d(v) != 3:
                continue
            for x in g.adj[v]:
                if self.d(x) != 4:
                    continue
                for y in g.adj[x]:
                    if y == v:
                        continue
                    for z in g.adj[y]:
                        if z in (x, v) or not g.has_edge(z, v) or self.d(z) != 4:
                            continue
                        (u,) = _others(g, v, (x, z))
                        if self.d(u) != 4:
                            continue
                        for w in g.adj[u]:
                            if w in (v, x, y, z) or not g.has_edge(w, z):
                                continue
                            (z1,) = _others(g, z, (y, v, w))
                            yield ConfigMatch.make(ConfigKind.K7, dict(v=v, x=x, y=y, z=z, u=u, w=w, z1=z1))

    def _five_cycles(self, pattern: tuple[int, int, int, int, int]) -> Iterator[tuple[int, int, int, int, int]]:
        g = self.g
        px, py, pz, pu, pv = pattern
        for x in self.starts:
            if self.d(x) != px:
                continue
            for y in g.adj[x]:
                if self.d(y) != py:
                    continue
                for z in g.adj[y]:
                    if z == x or self.d(z) != pz:
                        continue
                    for u in g.adj[z]:
                        if u in (x, y) or self.d(u) != pu:
                            continue
                        for v in g.adj[u]:
                            if v in (x, y, z) or self.d(v) != pv or not g.has_edge(v, x):
                                continue
                            yield x, y, z, u, v

    def k8(self) -> Iterator[ConfigMatch]:
        g = self.g
        for x, y, z, u, v in self._five_cycles((4, 3, 3, 3, 4)):
            y1 = _others(g, y, (x, z))
            z1 = _others(g, z, (y, u))
            u1 = _others(g, u, (z, v))
            if len(y1) != 1 or len(z1) != 1 or len(u1) != 1:
                continue  # chord: a triangle, handled earlier
            if not _distinct(x, y, z, u, v, y1[0], z1[0], u1[0]) or self.d(y1[0]) != 4 or self.d(u1[0]) != 4:
                continue
            yield ConfigMatch.make(ConfigKind.K8, dict(x=x, y=y, z=z, u=u, v=v, y1=y1[0], z1=z1[0], u1=u1[0]))

    def _pentagon_343(self) -> Iterator[dict]:
        g = self.g
        for x, y, z, u, v in self._five_cycles((3, 4, 3, 4, 3)):
            x1 = _others(g, x, (y, v))
            z1 = _others(g, z, (y, u))
            v1 = _others(g, v, (u, x))
            if len(x1) != 1 or len(z1) != 1 or len(v1) != 1 or not _distinct(x, y, z, u, v, x1[0], v1[0]):
                continue
            if z1[0] in (x, y, z, u, v) or g.has_edge(y, u):
                continue
            yield dict(x=x, y=y, z=z, u=u, v=v, x1=x1[0], z1=z1[0], v1=v1[0])

    def k9(self) -> Iterator[ConfigMatch]:
        for r in self._pentagon_343():
            if self.d(r["z1"]) == 3 and r["z1"] not in (r["x1"], r["v1"]) \
                    and self.d(r["x1"]) == 4 and self.d(r["v1"]) == 4:
                yield ConfigMatch.make(ConfigKind.K9, r)

    def k10(self) -> Iterator[ConfigMatch]:
        yield from self._k10("z")
        yield from self._k10("v")

    def _k10(self, which: str) -> Iterator[ConfigMatch]:
        g = self.g
        for r in self._pentagon_343():
            if not all(self.d(r[a]) == 4 for a in ("x1", "z1", "v1")):
                continue
            anchor = r["z1"] if which == "z" else r["v1"]
            for u1 in _others(g, r["u"], (r["z"], r["v"])):
                if u1 not in (r["x1"], r["z1"], r["v1"]) and g.has_edge(u1, anchor):
                    yield ConfigMatch.make(ConfigKind.K10, dict(r, u1=u1), which)


_FINDERS = {kind: f"k{kind.value[1:]}" for kind in KINDS}
# from K4 on the scripts assume no triangles (K2 and K3 are absent); a triangle
# among the roles would let two roles that must stay apart share a neighbor
_TRIANGLE_FREE = frozenset(KINDS[3:])


def _has_triangle(g: Graph, vs: set[int]) -> bool:
    return any(len(g.nbrs(a) & g.nbrs(b) & vs) for a in vs for b in g.adj[a] if b in vs and a < b)


def _search(finder: _Finder, kind: ConfigKind) -> Iterator[ConfigMatch]:
    found = getattr(finder, _FINDERS[kind])()
    if kind not in _TRIANGLE_FREE:
        return found
    return (m for m in found if not _has_triangle(finder.g, m.vertices()))


def matches(g: Graph, kind: ConfigKind, allowed: Iterable[int] | None = None) -> Iterator[ConfigMatch]:
    """Every match of one kind, in tie-break order, ignoring the priority of earlier kinds."""
    return _search(_Finder(g, allowed), ConfigKind(kind))


def find_kind(g: Graph, kind: ConfigKind, allowed: Iterable[int] | None = None) -> ConfigMatch | None:
    return next(matches(g, kind, allowed), None)


def find_configuration(g: Graph, allowed: Iterable[int] | None = None) -> ConfigMatch | None:
    """First match in priority order K1 > K2 > ... > K10, or ``None``.

    ``allowed`` restricts the first role of each pattern to the given vertices
    (the solver passes the components that are still too large for the base
    case).
    """
    finder = _Finder(g, allowed)
    for kind in KINDS:
        m = next(_search(finder, kind), None)
        if m is not None:
            return m
    return None


def kinds_present(g: Graph) -> set[ConfigKind]:
    return {kind for kind in KINDS if find_kind(g, kind) is not None}
