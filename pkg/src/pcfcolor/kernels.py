"""Array kernels: exhaustive h-PCF search and batch verification.

Graphs enter as a padded neighbor table ``nbr`` (``-1`` past each row's
degree) plus a ``deg`` vector, see :func:`neighbor_table`.
"""

from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, kernel
from .graph import Graph

FOUND = 1
INFEASIBLE = 0
BUDGET = -1


def neighbor_table(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    width = max(1, g.max_degree)
    nbr = np.full((g.n, width), -1, dtype=np.int64)
    deg = np.zeros(g.n, dtype=np.int64)
    for v, row in enumerate(g.adj):
        deg[v] = len(row)
        nbr[v, : len(row)] = row
    return nbr, deg


@kernel
def search(nbr, deg, order, fixed, req, k, budget, sym_break):
    """Depth-first search for a proper coloring meeting per-vertex unique-color demands.

    Vertices are colored in ``order``; ``fixed[v] > 0`` pins a color.  With
    ``sym_break`` a free vertex may only open the next unused color, which is
    complete because palette permutations preserve every constraint; callers
    must then place all pinned vertices at the front of ``order``.

    Returns ``(status, colors, nodes, backtracks)`` with status FOUND,
    INFEASIBLE or BUDGET.  Colors are tried in increasing order, so a FOUND
    witness is the lexicographically smallest one in ``order``.
    """
    n = order.shape[0]
    color = np.zeros(n, dtype=np.int64)
    cnt = np.zeros((n, k + 2), dtype=np.int64)
    uniq = np.zeros(n, dtype=np.int64)
    ncol = np.zeros(n, dtype=np.int64)
    nxt = np.ones(n + 1, dtype=np.int64)
    maxused = np.zeros(n + 1, dtype=np.int64)
    nodes = 0
    backtracks = 0
    if n == 0:
        return 1, color, nodes, backtracks
    pos = 0
    while True:
        v = order[pos]
        if fixed[v] > 0:
            lo = fixed[v]
            hi = fixed[v] if nxt[pos] <= fixed[v] else 0
        else:
            lo = nxt[pos]
            hi = k
            if sym_break and maxused[pos] + 1 < hi:
                hi = maxused[pos] + 1
        placed = False
        c = lo
        while c <= hi:
            ok = True
            for j in range(deg[v]):
                w = nbr[v, j]
                if color[w] == c:
                    ok = False
                    break
            if ok:
                for j in range(deg[v]):
                    w = nbr[v, j]
                    cnt[w, c] += 1
                    if cnt[w, c] == 1:
                        uniq[w] += 1
                    elif cnt[w, c] == 2:
                        uniq[w] -= 1
                    ncol[w] += 1
                for j in range(deg[v]):
                    w = nbr[v, j]
                    if uniq[w] + deg[w] - ncol[w] < req[w]:
                        ok = False
                        break
                if ok:
                    color[v] = c
                    nxt[pos] = c + 1
                    placed = True
                    break
                for j in range(deg[v]):
                    w = nbr[v, j]
                    cnt[w, c] -= 1
                    if cnt[w, c] == 0:
                        uniq[w] -= 1
                    elif cnt[w, c] == 1:
                        uniq[w] += 1
                    ncol[w] -= 1
            c += 1
        if placed:
            nodes += 1
            if pos == n - 1:
                return 1, color, nodes, backtracks
            if nodes >= budget:
                return -1, color, nodes, backtracks
            m = maxused[pos]
            if color[v] > m:
                m = color[v]
            maxused[pos + 1] = m
            pos += 1
            nxt[pos] = 1
            continue
        # exhausted this level: undo the previous vertex and advance it
        backtracks += 1
        nxt[pos] = 1
        if pos == 0:
            return 0, color, nodes, backtracks
        pos -= 1
        u = order[pos]
        c = color[u]
        color[u] = 0
        for j in range(deg[u]):
            w = nbr[u, j]
            cnt[w, c] -= 1
            if cnt[w, c] == 0:
                uniq[w] -= 1
            elif cnt[w, c] == 1:
                uniq[w] += 1
            ncol[w] -= 1


@kernel
def _pcf_mask_loop(nbr, deg, colorings, req):
    m, n = colorings.shape
    out = np.ones(m, dtype=np.bool_)
    for i in range(m):
        row = colorings[i]
        good = True
        for v in range(n):
            d = deg[v]
            u = 0
            for a in range(d):
                ca = row[nbr[v, a]]
                if ca == row[v]:
                    good = False
                    break
                dup = 0
                for b in range(d):
                    if row[nbr[v, b]] == ca:
                        dup += 1
                if dup == 1:
                    u += 1
            if not good or u < req[v]:
                good = False
                break
        out[i] = good
    return out


def _pcf_mask_numpy(nbr, deg, colorings, req):
    m, n = colorings.shape
    width = nbr.shape[1]
    valid = nbr >= 0
    nc = colorings[:, np.where(valid, nbr, 0)]  # (m, n, width)
    nc = np.where(valid[None], nc, -1 - np.arange(width)[None, None, :])  # padding never collides
    proper = ~((nc == colorings[:, :, None]) & valid[None]).any(axis=2)
    same = nc[:, :, :, None] == nc[:, :, None, :]
    singles = (same.sum(axis=3) == 1) & valid[None]
    enough = singles.sum(axis=2) >= req[None, :]
    return (proper & enough).all(axis=1)


def pcf_mask(g: Graph, colorings: np.ndarray, h: int, *, backend: str | None = None,
             chunk: int = 1 << 16) -> np.ndarray:
    """Boolean mask over rows of ``colorings`` (shape ``(m, n)``) marking h-PCF rows.

    ``backend`` is ``"loop"`` (the jitted kernel when numba is on) or
    ``"numpy"`` (vectorized); ``None`` picks ``"loop"`` exactly when numba is on.
    """
    colorings = np.ascontiguousarray(colorings, dtype=np.int64)
    if colorings.ndim != 2 or colorings.shape[1] != g.n:
        raise ValueError(f"expected an (m, {g.n}) array of colorings")
    if g.n == 0:
        return np.ones(colorings.shape[0], dtype=bool)
    nbr, deg = neighbor_table(g)
    req = np.minimum(deg, h)
    if backend is None:
        backend = "loop" if USE_NUMBA else "numpy"
    if backend == "loop":
        return np.asarray(_pcf_mask_loop(nbr, deg, colorings, req), dtype=bool)
    if backend != "numpy":
        raise ValueError(f"unknown backend {backend!r}")
    parts = [_pcf_mask_numpy(nbr, deg, colorings[i : i + chunk], req)
             for i in range(0, colorings.shape[0], chunk)]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=bool)


def all_colorings(n: int, k: int) -> np.ndarray:
    """Every map ``{0..n-1} -> {1..k}`` as a ``(k**n, n)`` array in lexicographic order."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((k,) * n, dtype=np.int64).reshape(n, -1).T
    return grids + 1
