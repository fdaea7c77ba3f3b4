"""Pattern indices, approximation and FPT algorithms, and hardness
reductions for Independent Set, Clique and Dominating Set."""

from __future__ import annotations

from .errors import BudgetExceeded, GraphFormatError, InvariantViolation, PreconditionError
from .graph import Graph, complement, generate, parse_graph, serialize_graph, verify_witness
from .kernels import BACKEND
from .patterns import PatternKind, index_report, pattern_index

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "Graph",
    "GraphFormatError",
    "InvariantViolation",
    "PatternKind",
    "PreconditionError",
    "complement",
    "generate",
    "index_report",
    "parse_graph",
    "pattern_index",
    "serialize_graph",
    "verify_witness",
]
