"""Coloring-extension scripts, one per configuration kind.

Each script takes a 2-PCF 9-coloring of the reduced graph and colors the
removed vertices one at a time, always with the smallest color outside the
set that step forbids.  Steps are logged with the size of that set and the
most it may ever hold, so callers can check one against the other.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Sequence

from ..errors import ExtensionUnsound, InputError, ScriptExhausted
from ..graph import Coloring, Graph
from ..pcf import is_h_pcf
from .configs import ConfigKind
from .reduce import ReductionPlan, forbidden_base

PALETTE = 9
FULL = frozenset(range(1, PALETTE + 1))


@dataclass(frozen=True)
class Step:
    vertex: int
    role: str
    color: int
    forbidden: int  # size of the forbidden set (for "a color in A" steps: 9 - |A|)
    bound: int      # the most that set may hold (at most 8, so a color is always free)
    recolor: bool = False


class _Run:
    def __init__(self, g: Graph, plan: ReductionPlan, phi: list[int | None]):
        self.g = g
        self.plan = plan
        self.S = frozenset(plan.S)
        self.base = tuple(phi)
        self.phi = phi
        self.r = plan.match.role_map
        self.steps: list[Step] = []
        self._C: dict[int, frozenset[int]] = {}

    def v(self, role: str) -> int | None:
        return self.r.get(role)

    def role_of(self, v: int) -> str:
        for role, w in self.r.items():
            if w == v:
                return role
        return "?"

    # color sets, all read on the current partial coloring

    def f(self, *roles: str) -> set[int]:
        out = set()
        for role in roles:
            w = self.r.get(role)
            if w is not None and self.phi[w] is not None:
                out.add(self.phi[w])
        return out

    def out(self, role: str) -> list[int]:
        return [w for w in self.g.adj[self.r[role]] if w not in self.S]

    def fo(self, *roles: str) -> set[int]:
        """Colors on the neighbors outside S of the given vertices."""
        return {self.phi[w] for role in roles for w in self.out(role) if self.phi[w] is not None}

    def C(self, role: str) -> frozenset[int]:
        v = self.r[role]
        if v not in self._C:
            self._C[v] = forbidden_base(self.g, self.S, self.base, v)
        return self._C[v]

    def nbr_colors(self, v: int, exclude: Sequence[int] = ()) -> list[int]:
        return [self.phi[w] for w in self.g.adj[v] if w not in exclude and self.phi[w] is not None]

    # assignment

    def pick(self, role: str, forbidden: set[int] | frozenset[int], bound: int = 8, recolor: bool = False) -> int:
        v = self.r[role]
        free = FULL - set(forbidden)
        if not free:
            raise ScriptExhausted(f"{self.plan.kind}: every color is forbidden for {role}={v}")
        c = min(free)
        self.phi[v] = c
        self.steps.append(Step(v, role, c, len(set(forbidden) & FULL), bound, recolor))
        return c

    def pick_in(self, role: str, allowed: set[int], bound: int = 8) -> int:
        v = self.r[role]
        allowed = set(allowed) & FULL
        if not allowed:
            raise ScriptExhausted(f"{self.plan.kind}: no admissible color for {role}={v}")
        c = min(allowed)
        self.phi[v] = c
        self.steps.append(Step(v, role, c, PALETTE - len(allowed), bound))
        return c

    def force(self, role: str, c: int, forbidden: set[int] | frozenset[int], bound: int = 8) -> None:
        """Assign a color the script prescribes, checking it is admissible."""
        v = self.r[role]
        if c is None or c in forbidden:
            raise ScriptExhausted(f"{self.plan.kind}: prescribed color {c} for {role}={v} is forbidden")
        self.phi[v] = c
        self.steps.append(Step(v, role, c, len(set(forbidden) & FULL), bound))

    def uniques(self, role: str) -> list[int]:
        counts = Counter(self.nbr_colors(self.r[role]))
        return sorted(c for c, k in counts.items() if k == 1)


# scripts


def _k1(s: _Run) -> None:
    s.pick("v", s.C("v"), bound=3 * len(s.out("v")))


def _k2(s: _Run) -> None:
    if s.plan.match.subcase == "x1=3":
        s.pick("x1", s.C("x1") | s.f("y", "z"))
        s.pick("x", s.f("x1") | set(s.uniques("x1")[:2]) | s.f("y", "z", "y1", "z1"))
        return
    g = s.g
    if g.degree(s.r["y"]) == 3:
        s.pick("z", s.C("z") | s.f("x1", "y1"))
        s.pick("y", s.C("y") | s.fo("z") | s.f("x1", "z"))
        s.pick("x", s.f("x1", "y", "z", "y1") | s.fo("z"))
    else:
        s.pick("y", s.C("y") | s.f("x1"))
        s.pick("z", s.C("z") | s.f("y", "x1"))
        s.pick("x", s.f("x1", "y", "y1", "y2", "z", "z1", "z2"))


def _k3(s: _Run) -> None:
    c_prime = s.C("x") | s.f("y1", "y2", "z1", "z2")
    if len(c_prime) <= 8:
        s.pick("x", c_prime)
        fy = s.C("y") | s.f("x", "x1", "x2")
        if len(fy) <= 8:
            s.pick("y", fy)
            s.pick("z", s.C("z") | s.f("x", "y"))
            return
        fz = s.C("z") | s.f("x", "x1", "x2")
        if len(fz) <= 8:
            # the same step with y and z exchanged
            s.pick("z", fz)
            s.pick("y", s.C("y") | s.f("x", "z"))
            return
        # both sets are full: C(y) = C(z) misses exactly phi(x), phi(x1), phi(x2)
        x, old = s.r["x"], s.phi[s.r["x"]]
        s.phi[x] = None
        s.steps = [st for st in s.steps if st.vertex != x]
        s.force("y", old, s.C("y"))
        s.force("z", s.phi[s.r["x1"]], s.C("z") | s.f("y"))
        s.pick("x", s.C("x") | s.f("y", "z"))
        return
    # |C'| = 9: one of phi(y1), phi(y2) is seen once around {x1, x2, x, y, z}
    S = s.S
    around = set()
    for role in ("x1", "x2", "x", "y", "z"):
        around.update(w for w in s.g.adj[s.r[role]] if w not in S)
    seen = Counter(s.phi[w] for w in around)
    if seen[s.phi[s.r["y1"]]] != 1:
        if seen[s.phi[s.r["y2"]]] != 1:
            raise ScriptExhausted("K3: neither phi(y1) nor phi(y2) occurs once around the triangle")
        s.r["y1"], s.r["y2"] = s.r["y2"], s.r["y1"]
    s.force("x", s.phi[s.r["y1"]], s.C("x"))
    s.pick("z", s.C("z") | s.f("y1", "y2"))
    if not s.f("z") & s.f("x1", "x2"):
        s.pick("y", s.C("y") | s.f("z"))
    else:
        s.pick("y", s.C("y") | s.f("x1", "x2"))


def _k4(s: _Run) -> None:
    s.pick("x", s.C("x") | s.f("y1"))
    s.pick("z", s.C("z") | s.f("x", "y1"))
    s.pick("y", s.fo("x", "z") | s.f("x", "y1", "z"))


def _k5(s: _Run) -> None:
    a = s.C("x") | s.f("y1")
    avoid = s.C("y") | s.fo("x") | s.f("z1")
    if len(a) == 7:
        s.pick_in("y", a - avoid)
    else:
        s.pick("y", avoid)
    s.pick("w", s.C("w") | s.f("y", "z1"))
    s.pick("z", s.C("z") | s.fo("w") | s.f("y", "y1", "w"))
    s.pick("x", s.C("x") | s.f("y", "y1", "z"))


def _k6(s: _Run) -> None:
    s.pick("z", s.C("z") | s.f("y1", "w1"))
    s.pick("w", s.C("w") | s.f("z", "x1"))
    s.pick("y", s.C("y") | s.f("x1", "w", "z", "z1", "z2"))
    s.pick("x", s.C("x") | s.f("y", "y1", "z", "w", "w1"))


def _two_distinct(colors) -> set[int]:
    return set(sorted(set(colors))[:2])


def _k7(s: _Run) -> None:
    r, phi = s.r, s.phi
    v = r["v"]

    def ab(role):
        return _two_distinct(s.nbr_colors(r[role], exclude=(v,)))

    if len(s.f("x", "z", "u")) == 3:
        s.pick("v", s.f("x", "z", "u") | ab("x") | ab("u"))
        return
    if phi[r["u"]] == phi[r["z"]]:
        r["x"], r["u"] = r["u"], r["x"]
        r["y"], r["w"] = r["w"], r["y"]
    # now phi(x) = phi(z)
    alpha_beta, gamma_delta = ab("x"), ab("u")
    a = sorted(set(s.nbr_colors(r["w"], exclude=(v,))) - s.f("u", "z"))[:1]
    bc = _two_distinct(s.nbr_colors(r["z1"], exclude=(r["z"],)))
    s.pick("z", s.f("x", "u", "y", "z1", "w") | bc | set(a), recolor=True)
    s.pick("v", s.f("x", "z", "u") | alpha_beta | gamma_delta)


def _k8(s: _Run) -> None:
    s.pick("v", s.C("v") | s.f("u1"))
    s.pick("x", s.C("x") | s.f("v", "y1"))
    s.pick("z", s.C("z") | s.f("u1", "v", "y1", "x"))
    s.pick("y", s.C("y") | s.fo("x", "z") | s.f("z", "x"))
    s.pick("u", s.fo("v", "z") | s.f("y", "z", "v", "u1"))


def _k9(s: _Run) -> None:
    s.pick("y", s.C("y") | s.f("x1"))
    s.pick("u", s.C("u") | s.f("y", "v1"))
    s.pick("z1", s.C("z1") | s.f("y", "u"))
    s.pick("z", s.fo("z1") | s.f("y", "u", "z1"))
    s.pick("x", s.fo("y") | s.f("y", "u", "v1", "x1"))
    s.pick("v", s.fo("u") | s.f("u", "v1", "x", "x1", "y"))


def _k10(s: _Run) -> None:
    if s.plan.match.subcase == "z":
        s.pick("z1", s.C("z1") | s.fo("u1"))
        s.pick("y", s.C("y") | s.f("x1", "z1"))
        s.pick("u", s.C("u") | s.fo("u1") | s.f("v1", "y", "z1"))
        s.pick("u1", s.C("u1") | s.f("z1", "u"))
        s.pick("z", s.fo("z1") | s.f("z1", "u", "y", "u1"))
        s.pick("x", s.fo("y") | s.f("y", "x1", "u1", "z", "v1", "u"))
        s.pick("v", s.f("x", "x1", "y", "u", "u1", "z", "v1"))
    else:
        s.pick("y", s.C("y") | s.f("z1", "x1"))
        s.pick("v1", s.C("v1") | s.fo("u1"))
        s.pick("u", s.C("u") | s.fo("u1") | s.f("y", "z1", "v1"))
        s.pick("u1", s.C("u1") | s.f("u", "v1"))
        s.pick("v", s.fo("v1") | s.f("v1", "u1", "u", "x1", "y"))
        s.pick("x", s.C("x") | s.f("v", "v1", "u", "y"))
        s.pick("z", s.fo("y") | s.f("y", "z1", "u", "u1", "v"))


SCRIPTS: dict[ConfigKind, Callable[[_Run], None]] = {
    ConfigKind.K1: _k1, ConfigKind.K2: _k2, ConfigKind.K3: _k3, ConfigKind.K4: _k4, ConfigKind.K5: _k5,
    ConfigKind.K6: _k6, ConfigKind.K7: _k7, ConfigKind.K8: _k8, ConfigKind.K9: _k9, ConfigKind.K10: _k10,
}


def lift(plan: ReductionPlan, n: int, phi_h: Coloring) -> list[int | None]:
    """Carry a coloring of ``plan.reduced`` back to the parent's vertex ids."""
    if len(phi_h) != plan.reduced.n:
        raise InputError(f"coloring has {len(phi_h)} entries, reduced graph has {plan.reduced.n} vertices")
    phi: list[int | None] = [None] * n
    for i, v in enumerate(plan.kept):
        phi[v] = phi_h[i]
    return phi


def touched(plan: ReductionPlan) -> set[int]:
    """Vertices an extension may (re)color: S, plus z for K7."""
    out = set(plan.S)
    if plan.kind is ConfigKind.K7:
        out.add(plan.match["z"])
    return out


def extend(g: Graph, plan: ReductionPlan, phi_h: Coloring, log: list[Step] | None = None) -> Coloring:
    """Extend a 2-PCF 9-coloring of ``plan.reduced`` to ``g`` by the kind's script.

    The result is re-verified; :class:`ExtensionUnsound` is raised if it is
    not 2-PCF, :class:`ScriptExhausted` if a step had no admissible color.
    """
    run = _Run(g, plan, lift(plan, g.n, phi_h))
    try:
        SCRIPTS[plan.kind](run)
    finally:
        if log is not None:
            log.extend(run.steps)
    if any(c is None for c in run.phi):
        raise ExtensionUnsound(f"{plan.kind}: script left vertices uncolored")
    out = Coloring(tuple(run.phi), PALETTE)
    report = is_h_pcf(g, out, 2)
    if not report.valid:
        bad = [x.to_json() for x in report.violations[:4]]
        raise ExtensionUnsound(f"{plan.kind} ({plan.match.subcase}) extension fails verification: {bad}")
    return out
