"""Exception hierarchy.

Input problems derive from :class:`InputError`; broken internal contracts
(extension scripts, detection) derive from :class:`InvariantError`.  The CLI
maps the two families to exit codes 2 and 3.
"""

from __future__ import annotations


class PcfError(Exception):
    """Base class for every error raised by the package."""


class InputError(PcfError, ValueError):
    """The caller handed us something malformed."""


class InvariantError(PcfError, RuntimeError):
    """An internal guarantee was violated."""


# graph-core

class GraphError(InputError):
    pass


class SelfLoop(GraphError):
    def __init__(self, v: int):
        super().__init__(f"self-loop at vertex {v}")
        self.vertex = v


class ParallelEdge(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"parallel edge {u}-{v}")
        self.edge = (u, v)


class AsymmetricAdjacency(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"{v} is listed as a neighbor of {u} but not vice versa")
        self.edge = (u, v)


class DegreeExceeded(GraphError):
    def __init__(self, v: int, degree: int, bound: int = 4):
        super().__init__(f"vertex {v} has degree {degree} > {bound}")
        self.vertex = v
        self.degree = degree


class VertexOutOfRange(GraphError):
    def __init__(self, v: int, n: int):
        super().__init__(f"vertex id {v} outside 0..{n - 1}")
        self.vertex = v


class RotationMismatch(GraphError):
    def __init__(self, v: int):
        super().__init__(f"rotation at vertex {v} is not a permutation of its neighbors")
        self.vertex = v


class NonPlanarEmbedding(GraphError):
    def __init__(self, n: int, m: int, f: int):
        super().__init__(f"Euler check failed: V - E + F = {n} - {m} + {f} = {n - m + f} != 2")
        self.counts = (n, m, f)


class Disconnected(GraphError):
    pass


class MissingEmbedding(GraphError):
    pass


# pcf

class PartialColoring(InputError):
    pass


class UnassignedNeighbor(InputError):
    pass


# reduction

class NotOnBoundary(InputError):
    pass


class SReductionPrecondition(InvariantError):
    pass


class ScriptExhausted(InvariantError):
    """Every palette color was forbidden at some step of an extension script."""


class ExtensionUnsound(InvariantError):
    """An extension script produced a coloring that fails verification."""


class NoConfigurationFound(InvariantError):
    pass


# oracle

class InstanceTooLarge(PcfError):
    def __init__(self, budget: int):
        super().__init__(f"search exceeded the node budget of {budget}")
        self.budget = budget


# discharging

class NotA3Vertex(InputError):
    pass


# generator

class UnknownName(InputError):
    pass
