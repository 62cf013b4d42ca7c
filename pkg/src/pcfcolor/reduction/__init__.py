"""Reducible configurations, S-reduced graphs, extension scripts and the solver."""

from .configs import (
    KINDS,
    ROLE_ORDER,
    ConfigKind,
    ConfigMatch,
    find_configuration,
    find_kind,
    kinds_present,
    matches,
)
from .reduce import (
    ReductionPlan,
    boundary_palette,
    forbidden_base,
    reduce,
    reduced_neighbors,
    removed_roles,
    s_reduced,
)
from .scripts import SCRIPTS, Step, extend, lift
from .solve import SolveResult, TraceStep, solve

__all__ = [
    "KINDS", "ROLE_ORDER", "ConfigKind", "ConfigMatch", "find_configuration", "find_kind",
    "kinds_present", "matches", "ReductionPlan", "boundary_palette", "forbidden_base", "reduce",
    "reduced_neighbors", "removed_roles", "s_reduced", "SCRIPTS", "Step", "extend", "lift",
    "SolveResult", "TraceStep", "solve",
]
