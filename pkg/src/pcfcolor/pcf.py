"""h-PCF verification.

A coloring is h-PCF when it is proper and every vertex ``v`` sees at least
``min(h, deg(v))`` colors that occur exactly once on its neighborhood.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import PartialColoring, UnassignedNeighbor
from .graph import Coloring, Graph
from .kernels import pcf_mask

IMPROPER_EDGE = "ImproperEdge"
TOO_FEW_UNIQUE = "TooFewUnique"


@dataclass(frozen=True)
class Violation:
    vertex: int
    kind: str
    unique: int
    required: int
    neighbor: int | None = None

    def to_json(self) -> dict:
        doc = {"vertex": self.vertex, "kind": self.kind, "unique": self.unique, "required": self.required}
        if self.neighbor is not None:
            doc["neighbor"] = self.neighbor
        return doc


@dataclass(frozen=True)
class PcfReport:
    valid: bool
    violations: tuple[Violation, ...]
    h: int

    def to_json(self) -> dict:
        return {"valid": self.valid, "h": self.h, "violations": [x.to_json() for x in self.violations]}

    def __bool__(self) -> bool:
        return self.valid


def color_counts(g: Graph, phi: Coloring, v: int) -> Counter:
    return Counter(phi[w] for w in g.adj[v] if phi[w] is not None)


def unique_colors(g: Graph, phi: Coloring, v: int) -> frozenset[int]:
    """Colors carried by exactly one neighbor of ``v``."""
    for w in g.adj[v]:
        if phi[w] is None:
            raise UnassignedNeighbor(f"neighbor {w} of {v} is uncolored")
    return frozenset(c for c, m in color_counts(g, phi, v).items() if m == 1)


def is_h_pcf(g: Graph, phi: Coloring, h: int) -> PcfReport:
    """Check every vertex and list every failure, not just the first."""
    if len(phi) != g.n:
        raise PartialColoring(f"coloring has {len(phi)} entries for {g.n} vertices")
    if not phi.is_total:
        missing = [v for v in range(g.n) if phi[v] is None]
        raise PartialColoring(f"uncolored vertices: {missing[:10]}")
    out = []
    for v in range(g.n):
        uniq = len(unique_colors(g, phi, v))
        need = min(h, g.degree(v))
        for w in g.adj[v]:
            if v < w and phi[v] == phi[w]:
                out.append(Violation(v, IMPROPER_EDGE, uniq, need, neighbor=w))
        if uniq < need:
            out.append(Violation(v, TOO_FEW_UNIQUE, uniq, need))
    return PcfReport(not out, tuple(out), h)


def is_proper(g: Graph, phi: Coloring) -> bool:
    return phi.is_proper(g)


def check_many(g: Graph, colorings: np.ndarray, h: int, backend: str | None = None) -> np.ndarray:
    """Vectorized :func:`is_h_pcf` over the rows of an ``(m, n)`` integer array."""
    return pcf_mask(g, colorings, h, backend=backend)
