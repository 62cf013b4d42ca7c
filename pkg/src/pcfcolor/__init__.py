"""Proper-conflict-free coloring of planar graphs with maximum degree 4."""

from .graph import Coloring, Embedding, Face, Graph, faces_of, square, validate
from .oracle import chromatic_number, exists_h_pcf_k, min_k, minimize
from .pcf import PcfReport, Violation, is_h_pcf, unique_colors
from .reduction import find_configuration, solve

__version__ = "0.1.0"

__all__ = [
    "Coloring", "Embedding", "Face", "Graph", "faces_of", "square", "validate",
    "chromatic_number", "exists_h_pcf_k", "min_k", "minimize",
    "PcfReport", "Violation", "is_h_pcf", "unique_colors",
    "find_configuration", "solve",
]
