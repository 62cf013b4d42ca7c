"""Recursive 2-PCF 9-coloring by reduction and extension."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from ..errors import InvariantError, NoConfigurationFound
from ..graph import Coloring, Graph, validate
from ..oracle import complete_coloring
from ..pcf import is_h_pcf
from .configs import find_configuration
from .reduce import ReductionPlan, reduce
from .scripts import PALETTE, extend, lift, touched

log = logging.getLogger(__name__)

BASE_SIZE = 9
ORACLE_FALLBACK_SIZE = 16


@dataclass
class TraceStep:
    plan: ReductionPlan
    ids: tuple[int, ...]          # parent-graph id -> input-graph id
    extension: str = "script"     # "script", or "search" if the script failed and we searched

    def to_json(self) -> dict:
        doc = self.plan.to_json(self.ids)
        doc["extension"] = self.extension
        return doc


@dataclass
class SolveResult:
    coloring: Coloring
    trace: list[TraceStep] = field(default_factory=list)
    oracle_components: list[list[int]] = field(default_factory=list)

    def trace_json(self) -> list[dict]:
        return [s.to_json() for s in self.trace]

    def __iter__(self):
        # allows ``coloring, trace = solve(g)``
        return iter((self.coloring, self.trace))


def _base_coloring(g: Graph, oracle_comps: list[list[int]]) -> Coloring:
    colors: list[int | None] = [None] * g.n
    for comp in g.components():
        if len(comp) <= BASE_SIZE:
            for i, v in enumerate(comp):
                colors[v] = i + 1
    if oracle_comps:
        phi = complete_coloring(g, Coloring(tuple(colors), PALETTE), 2, PALETTE)
        if phi is None:
            raise NoConfigurationFound("oracle found no 2-PCF 9-coloring for a configuration-free component")
        return phi
    return Coloring(tuple(colors), PALETTE)


def _search_extension(g: Graph, plan: ReductionPlan, phi_h: Coloring) -> Coloring | None:
    """Exact fallback: keep the reduced coloring, search the vertices the script may touch."""
    phi = lift(plan, g.n, phi_h)
    for v in touched(plan):
        phi[v] = None
    return complete_coloring(g, Coloring(tuple(phi), PALETTE), 2, PALETTE)


def solve(g: Graph, *, fallback: bool = True, oracle_bound: int = ORACLE_FALLBACK_SIZE) -> SolveResult:
    """2-PCF coloring of a planar graph with maximum degree 4 using at most 9 colors.

    Components with at most nine vertices get distinct colors.  Larger ones
    are reduced one configuration at a time until every component is small;
    the colorings are then extended back up the chain of reductions.

    ``fallback`` lets an exact search stand in for an extension script that
    raises; the step is then marked ``"search"`` in the trace.  A large
    component without any configuration is colored by the oracle when it has
    at most ``oracle_bound`` vertices and raises
    :class:`NoConfigurationFound` otherwise.
    """
    validate(g, require_max4=True)
    chain: list[tuple[Graph, ReductionPlan, tuple[int, ...]]] = []
    cur, ids = g, tuple(range(g.n))
    oracle_comps: list[list[int]] = []
    while True:
        big = [c for c in cur.components() if len(c) > BASE_SIZE]
        if not big:
            break
        allowed = [v for c in big for v in c]
        m = find_configuration(cur, allowed)
        if m is None:
            stuck = [c for c in big if len(c) > oracle_bound]
            if stuck:
                raise NoConfigurationFound(
                    f"no reducible configuration in a component of {len(stuck[0])} vertices")
            oracle_comps = big
            log.warning("no configuration found; oracle colors %d component(s)", len(big))
            break
        plan = reduce(cur, m)
        chain.append((cur, plan, ids))
        cur, ids = plan.reduced, tuple(ids[v] for v in plan.kept)

    phi = _base_coloring(cur, oracle_comps)
    trace = [TraceStep(plan, pids) for _, plan, pids in chain]
    for step, (parent, plan, _) in zip(reversed(trace), reversed(chain)):
        try:
            phi = extend(parent, plan, phi)
        except InvariantError:
            if not fallback:
                raise
            found = _search_extension(parent, plan, phi)
            if found is None:
                raise
            log.info("%s script failed; exact search extended instead", plan.kind)
            phi, step.extension = found, "search"
    report = is_h_pcf(g, phi, 2)
    if not report.valid:
        raise InvariantError(f"final coloring is not 2-PCF: {report.violations[:3]}")
    return SolveResult(phi, trace, [[ids[v] for v in c] for c in oracle_comps])
