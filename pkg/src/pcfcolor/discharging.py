"""Charge bookkeeping for plane graphs of maximum degree 4.

Every vertex and face starts with charge ``d - 4``; by Euler's formula the
total over a connected plane graph is -8.  Three rules then move charge from
5+-faces to incident 3-vertices:

* R1: a 5-face sends 1/3 to each incident good 3-vertex,
* R2: a 5-face sends 1/2 to each incident bad 3-vertex,
* R3: a 6+-face sends 1/2 to each incident 3-vertex.

A 3-vertex is bad when it lies on a 4-cycle of the graph (any 4-cycle, not
only a facial one) and good otherwise.  Incidences are counted per
occurrence on the boundary walk, so a vertex met twice on a walk is paid
twice.  All arithmetic uses :class:`fractions.Fraction`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .errors import Disconnected, NotA3Vertex
from .graph import Embedding, Face, Graph, faces_of

THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)

Element = tuple[Literal["vertex", "face"], int]


def rational_json(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator}


def element_json(e: Element) -> dict:
    return {"type": e[0], "id": e[1]}


def on_4cycle(g: Graph, v: int) -> bool:
    nb = g.adj[v]
    for i, a in enumerate(nb):
        for b in nb[i + 1:]:
            if any(c != v for c in g.nbrs(a) & g.nbrs(b)):
                return True
    return False


def classify_3vertex(g: Graph, v: int) -> Literal["good", "bad"]:
    if g.degree(v) != 3:
        raise NotA3Vertex(f"vertex {v} has degree {g.degree(v)}")
    return "bad" if on_4cycle(g, v) else "good"


@dataclass(frozen=True)
class ChargeLedger:
    vertices: tuple[Fraction, ...]
    faces: tuple[Fraction, ...]
    phase: Literal["initial", "final"]

    @property
    def total(self) -> Fraction:
        return sum(self.vertices, Fraction(0)) + sum(self.faces, Fraction(0))

    def items(self):
        for i, c in enumerate(self.vertices):
            yield ("vertex", i), c
        for j, c in enumerate(self.faces):
            yield ("face", j), c

    def to_json(self) -> dict:
        return {
            "phase": self.phase,
            "vertices": [rational_json(c) for c in self.vertices],
            "faces": [rational_json(c) for c in self.faces],
            "total": rational_json(self.total),
        }


@dataclass(frozen=True)
class Flow:
    face: int
    vertex: int
    amount: Fraction
    rule: Literal["R1", "R2", "R3"]

    def to_json(self) -> dict:
        return {"face": self.face, "vertex": self.vertex, "amount": rational_json(self.amount), "rule": self.rule}


def _plane_faces(g: Graph, emb: Embedding) -> list[Face]:
    if g.n == 0 or not g.is_connected:
        raise Disconnected("discharging needs a connected plane graph")
    return faces_of(g, emb)


def initial_charges(g: Graph, emb: Embedding) -> ChargeLedger:
    faces = _plane_faces(g, emb)
    return ChargeLedger(
        tuple(Fraction(g.degree(v) - 4) for v in range(g.n)),
        tuple(Fraction(f.length - 4) for f in faces),
        "initial",
    )


def _three_vertex_kinds(g: Graph) -> dict[int, str]:
    return {v: classify_3vertex(g, v) for v in range(g.n) if g.degree(v) == 3}


def apply_rules(g: Graph, emb: Embedding, ledger: ChargeLedger) -> tuple[ChargeLedger, list[Flow]]:
    if ledger.phase != "initial":
        raise ValueError("rules apply to an initial ledger")
    faces = _plane_faces(g, emb)
    kind = _three_vertex_kinds(g)
    vs = list(ledger.vertices)
    fs = list(ledger.faces)
    flows: list[Flow] = []
    for j, f in enumerate(faces):
        if f.length < 5:
            continue
        for v in f.walk:
            if v not in kind:
                continue
            if f.length >= 6:
                amount, rule = HALF, "R3"
            elif kind[v] == "good":
                amount, rule = THIRD, "R1"
            else:
                amount, rule = HALF, "R2"
            fs[j] -= amount
            vs[v] += amount
            flows.append(Flow(j, v, amount, rule))
    return ChargeLedger(tuple(vs), tuple(fs), "final"), flows


# audit


BOUNDS = ("a", "b", "c", "d", "e", "f")


@dataclass
class AuditReport:
    total: Fraction
    initial: ChargeLedger
    final: ChargeLedger
    lemma_violations: list[tuple[int, object]]
    negative_elements: list[tuple[Element, Fraction]]
    rule_flows: list[Flow]
    bound_checks: dict[str, int] = field(default_factory=dict)
    bound_violations: list[tuple[str, Element, Fraction]] = field(default_factory=list)
    repeated_incidences: list[tuple[int, int]] = field(default_factory=list)

    @property
    def items_violated(self) -> set[int]:
        return {item for item, _ in self.lemma_violations}

    def to_json(self) -> dict:
        return {
            "total": rational_json(self.total),
            "initial_total": rational_json(self.initial.total),
            "final_total": rational_json(self.final.total),
            "charges": {"initial": self.initial.to_json(), "final": self.final.to_json()},
            "lemma_violations": [{"item": i, "witness": w} for i, w in self.lemma_violations],
            "negative_elements": [{"element": element_json(e), "charge": rational_json(c)}
                                  for e, c in self.negative_elements],
            "rule_flows": [fl.to_json() for fl in self.rule_flows],
            "bound_checks": {
                b: {"checked": self.bound_checks.get(b, 0),
                    "violations": [{"element": element_json(e), "charge": rational_json(c)}
                                   for bb, e, c in self.bound_violations if bb == b]}
                for b in BOUNDS
            },
            "repeated_incidences": [{"face": j, "vertex": v} for j, v in self.repeated_incidences],
        }

    def table(self) -> str:
        rows = [f"{'element':<12}{'initial':>10}{'final':>10}"]
        for (e, c0), (_, c1) in zip(self.initial.items(), self.final.items()):
            rows.append(f"{e[0][0]}{e[1]:<11}{str(c0):>10}{str(c1):>10}")
        rows.append(f"{'total':<12}{str(self.initial.total):>10}{str(self.final.total):>10}")
        rows.append("lemma items violated: " + (", ".join(map(str, sorted(self.items_violated))) or "none"))
        rows.append(f"conditional bound violations: {len(self.bound_violations)}")
        return "\n".join(rows) + "\n"


def _triangles(g: Graph) -> list[list[int]]:
    out = []
    for u, v in g.edges():
        for w in sorted(g.nbrs(u) & g.nbrs(v)):
            if w > v:
                out.append([u, v, w])
    return out


def _lemma_violations(g: Graph, faces: list[Face], kind: dict[int, str]) -> list[tuple[int, object]]:
    found: list[tuple[int, object]] = []
    found += [(1, v) for v in range(g.n) if g.degree(v) <= 2]
    found += [(2, t) for t in _triangles(g)]
    corners4: Counter[int] = Counter()
    for f in faces:
        if f.length == 4:
            corners4.update(f.walk)
    found += [(3, v) for v in sorted(kind) if corners4[v] >= 2]
    for j, f in enumerate(faces):
        threes = [v for v in f.walk if v in kind]
        if f.length == 5 and len(threes) == 3 and any(kind[v] == "bad" for v in threes):
            found.append((4, j))
        if f.length >= 5 and len(threes) > 3 * f.length // 4:
            found.append((5, j))
    return found


def audit(g: Graph, emb: Embedding) -> AuditReport:
    """Charges before and after the rules, structural violations and the per-element bounds."""
    faces = _plane_faces(g, emb)
    kind = _three_vertex_kinds(g)
    initial = initial_charges(g, emb)
    final, flows = apply_rules(g, emb, initial)
    rep = AuditReport(
        total=initial.total,
        initial=initial,
        final=final,
        lemma_violations=_lemma_violations(g, faces, kind),
        negative_elements=[(e, c) for e, c in final.items() if c < 0],
        rule_flows=flows,
    )
    checks: Counter[str] = Counter()

    def check(bound: str, e: Element, ok: bool) -> None:
        checks[bound] += 1
        if not ok:
            c = final.vertices[e[1]] if e[0] == "vertex" else final.faces[e[1]]
            rep.bound_violations.append((bound, e, c))

    corner_faces: list[list[Face]] = [[] for _ in range(g.n)]
    for f in faces:
        for v in f.walk:
            corner_faces[v].append(f)
    for v in range(g.n):
        big = sum(1 for f in corner_faces[v] if f.length >= 5)
        if kind.get(v) == "good" and corner_faces[v] and big == len(corner_faces[v]):
            check("a", ("vertex", v), final.vertices[v] >= 0)
        if kind.get(v) == "bad" and big >= 2:
            check("b", ("vertex", v), final.vertices[v] >= 0)
        if g.degree(v) == 4:
            check("c", ("vertex", v), final.vertices[v] == 0)
    for j, f in enumerate(faces):
        threes = [v for v in f.walk if v in kind]
        bad = sum(1 for v in threes if kind[v] == "bad")
        if f.length == 4:
            check("c", ("face", j), final.faces[j] == 0)
        elif f.length == 5:
            if bad >= 1 and len(threes) <= 2:
                check("d", ("face", j), final.faces[j] >= 0)
            if bad == 0 and len(threes) <= 3:
                check("e", ("face", j), final.faces[j] >= 0)
        elif f.length >= 6 and len(threes) <= 3 * f.length // 4:
            check("f", ("face", j), final.faces[j] >= 0)
        for v, k in Counter(f.walk).items():
            if k > 1:
                rep.repeated_incidences.append((j, v))
    rep.bound_checks = dict(checks)
    return rep
