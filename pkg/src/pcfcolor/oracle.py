"""Exact h-PCF search used as ground truth and as the solver's last resort."""

from __future__ import annotations

import heapq
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import InputError, InstanceTooLarge
from .graph import Coloring, Graph

DEFAULT_BUDGET = 10**8


@dataclass
class SearchStats:
    nodes: int = 0
    backtracks: int = 0
    elapsed: float = 0.0

    def to_json(self) -> dict:
        # wall time is left out so identical runs print identical bytes
        return {"nodes": self.nodes, "backtracks": self.backtracks}


@dataclass
class OracleResult:
    h: int
    k: int
    coloring: Coloring | None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def feasible(self) -> bool:
        return self.coloring is not None

    def to_json(self) -> dict:
        return {
            "feasible": self.feasible,
            "h": self.h,
            "k": self.k,
            "coloring": list(self.coloring.assignment) if self.coloring is not None else None,
            "stats": self.stats.to_json(),
        }


def degeneracy_order(g: Graph) -> list[int]:
    """Peel minimum-degree vertices (smallest id on ties); return the reverse peel order."""
    deg = list(g.degrees)
    alive = [True] * g.n
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    peeled = []
    while heap:
        d, v = heapq.heappop(heap)
        if not alive[v] or d != deg[v]:
            continue
        alive[v] = False
        peeled.append(v)
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    peeled.reverse()
    return peeled


def _run(g: Graph, order, fixed, h: int, k: int, budget: int, sym_break: bool):
    nbr, deg = kernels.neighbor_table(g)
    req = np.minimum(deg, h)
    return kernels.search(nbr, deg, np.asarray(order, dtype=np.int64), np.asarray(fixed, dtype=np.int64),
                          req, int(k), int(budget), bool(sym_break))


def _prefixes(g: Graph, order: list[int], k: int, want: int) -> tuple[int, list[tuple[int, ...]]]:
    """Canonical proper color prefixes for the first ``p`` vertices of ``order``, lexicographic."""
    prefixes: list[tuple[int, ...]] = [()]
    depth = 0
    while len(prefixes) < want and depth < len(order):
        v = order[depth]
        earlier = {u: i for i, u in enumerate(order[:depth])}
        grown = []
        for pre in prefixes:
            top = min(k, max(pre, default=0) + 1)
            banned = {pre[earlier[w]] for w in g.adj[v] if w in earlier}
            grown.extend(pre + (c,) for c in range(1, top + 1) if c not in banned)
        prefixes = grown
        depth += 1
    return depth, prefixes


def _job(args):
    g, order, fixed, h, k, budget = args
    status, colors, nodes, backtracks = _run(g, order, fixed, h, k, budget, True)
    return int(status), [int(c) for c in colors], int(nodes), int(backtracks)


def exists_h_pcf_k(g: Graph, h: int, k: int, *, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> OracleResult:
    """Decide whether ``g`` has an h-PCF k-coloring; return a witness if so.

    The witness is the lexicographically smallest canonical coloring along
    the degeneracy order, whatever ``jobs`` is.  Raises
    :class:`InstanceTooLarge` once ``budget`` node expansions are spent.
    """
    if k < 1 or h < 0:
        raise InputError("need k >= 1 and h >= 0")
    t0 = time.perf_counter()
    stats = SearchStats()
    if g.n == 0:
        return OracleResult(h, k, Coloring((), k), stats)
    order = degeneracy_order(g)
    if jobs <= 1:
        status, colors, stats.nodes, stats.backtracks = _run(g, order, np.zeros(g.n), h, k, budget, True)
        outcomes = [(int(status), colors)]
    else:
        depth, prefixes = _prefixes(g, order, k, 4 * jobs)
        tasks = []
        for pre in prefixes:
            fixed = [0] * g.n
            for v, c in zip(order[:depth], pre):
                fixed[v] = c
            tasks.append((g, order, fixed, h, k, budget))
        outcomes = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for status, colors, nodes, backtracks in pool.map(_job, tasks):
                stats.nodes += nodes
                stats.backtracks += backtracks
                outcomes.append((status, colors))
    stats.elapsed = time.perf_counter() - t0
    for status, colors in outcomes:
        if status == kernels.FOUND:
            return OracleResult(h, k, Coloring(tuple(int(c) for c in colors), k), stats)
        if status == kernels.BUDGET:
            raise InstanceTooLarge(budget)
    return OracleResult(h, k, None, stats)


def min_k(g: Graph, h: int, *, budget: int = DEFAULT_BUDGET) -> int:
    return minimize(g, h, budget=budget).k


def minimize(g: Graph, h: int, *, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Smallest palette admitting an h-PCF coloring, with its witness."""
    if g.n == 0:
        raise InputError("min_k needs a nonempty graph")
    total = SearchStats()
    k = 1
    while True:
        res = exists_h_pcf_k(g, h, k, budget=budget)
        total.nodes += res.stats.nodes
        total.backtracks += res.stats.backtracks
        total.elapsed += res.stats.elapsed
        if res.feasible:
            res.stats = total
            return res
        k += 1


def complete_coloring(g: Graph, partial: Coloring, h: int, k: int, *, budget: int = DEFAULT_BUDGET) -> Coloring | None:
    """Color the uncolored vertices of ``partial`` so the result is h-PCF, keeping the rest fixed."""
    fixed = [c or 0 for c in partial.assignment]
    pinned = [v for v in range(g.n) if fixed[v]]
    free = [v for v in degeneracy_order(g) if not fixed[v]]
    status, colors, _, _ = _run(g, pinned + free, fixed, h, k, budget, False)
    if status == kernels.BUDGET:
        raise InstanceTooLarge(budget)
    if status != kernels.FOUND:
        return None
    return Coloring(tuple(int(c) for c in colors), k)


def chromatic_number(g: Graph) -> int:
    """Plain backtracking chromatic number, kept independent of the h-PCF kernel."""
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    color = [0] * g.n

    def place(i: int, k: int, used: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        banned = {color[w] for w in g.adj[v]}
        for c in range(1, min(k, used + 1) + 1):
            if c not in banned:
                color[v] = c
                if place(i + 1, k, max(used, c)):
                    return True
                color[v] = 0
        return False

    k = 1
    while not place(0, k, 0):
        k += 1
    return k
