"""Reading and writing graphs, colorings and DOT.

Graph JSON::

    {"n": 4, "edges": [[0, 1], ...], "rotations": [[...], ...], "meta": {...}}

``rotations`` and ``meta`` are optional.  The plain-text format is a header
line ``n m`` followed by ``m`` lines ``u v``; lines starting with ``#`` are
comments.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Sequence

from .errors import InputError
from .graph import Coloring, Embedding, Graph


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, no floats expected, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def graph_from_json(doc: dict) -> tuple[Graph, Embedding | None, dict]:
    try:
        n = int(doc["n"])
        edges = doc.get("edges", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"graph document needs an integer 'n' and an 'edges' list: {exc}") from None
    if n < 0:
        raise InputError("'n' must be non-negative")
    g = Graph.from_edges(n, edges)
    emb = None
    if doc.get("rotations") is not None:
        emb = Embedding.from_lists(doc["rotations"])
        emb.check(g)
    return g, emb, dict(doc.get("meta") or {})


def graph_from_text(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise InputError("empty graph file")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (IndexError, ValueError):
        raise InputError("text graph must start with 'n m' followed by 'u v' lines") from None
    if len(edges) != m:
        raise InputError(f"header promises {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def load_graph(path: str | Path) -> tuple[Graph, Embedding | None, dict]:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON ({exc})") from None
        return graph_from_json(doc)
    return graph_from_text(text), None, {}


def graph_to_json(g: Graph, emb: Embedding | None = None, meta: dict | None = None) -> dict:
    doc: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if emb is not None:
        doc["rotations"] = [list(r) for r in emb.rotations]
    if meta:
        doc["meta"] = meta
    return doc


def coloring_to_json(phi: Coloring) -> dict:
    return {"k": phi.k, "coloring": [c if c is not None else 0 for c in phi.assignment]}


def coloring_from_json(doc: Any, n: int | None = None) -> Coloring:
    """Accepts ``{"coloring": [...], "k": K}`` or a bare list; 0/null mean uncolored."""
    if isinstance(doc, list):
        colors, k = doc, None
    elif isinstance(doc, dict) and isinstance(doc.get("coloring"), list):
        colors, k = doc["coloring"], doc.get("k")
    else:
        raise InputError("coloring must be a list or an object with a 'coloring' list")
    if n is not None and len(colors) != n:
        raise InputError(f"coloring has {len(colors)} entries, graph has {n} vertices")
    try:
        return Coloring.from_list(colors, None if k is None else int(k))
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad coloring: {exc}") from None


def load_coloring(path: str | Path, n: int | None = None) -> Coloring:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None
    return coloring_from_json(doc, n)


_PALETTE = ("#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231",
            "#911eb4", "#46f0f0", "#f032e6", "#bcf60c")


def graph_to_dot(g: Graph, phi: Coloring | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{", "  node [shape=circle, style=filled, fillcolor=white];"]
    for v in range(g.n):
        c = phi[v] if phi is not None else None
        if c is None:
            lines.append(f"  {v};")
        else:
            fill = _PALETTE[(c - 1) % len(_PALETTE)]
            lines.append(f'  {v} [label="{v}:{c}", fillcolor="{fill}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def trace_to_dot(trace: Sequence[dict], name: str = "trace") -> str:
    """Reduction steps as a chain of DOT nodes, outermost reduction first."""
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    for i, step in enumerate(trace):
        s = " ".join(map(str, step["S"]))
        label = f"{i}: {step['kind']}" + (f" ({step['subcase']})" if "subcase" in step else "")
        label += f"\\nS = {{{s}}}"
        if step.get("extension", "script") != "script":
            label += f"\\nextended by {step['extension']}"
        lines.append(f'  s{i} [label="{label}"];')
        if i:
            lines.append(f"  s{i - 1} -> s{i};")
    lines.append("}")
    return "\n".join(lines) + "\n"
