"""Exact cardinality-redundance computations, extremal formulas, and witnesses."""

from .formulas import ExtremalValue, Status
from .graph import Graph, Graph6Error, from_graph6, to_graph6
from .solver import CRProfile, SetAssessment, SolverCapacityError, assess_set, solve

__all__ = [
    "CRProfile",
    "ExtremalValue",
    "Graph",
    "Graph6Error",
    "SetAssessment",
    "SolverCapacityError",
    "Status",
    "assess_set",
    "from_graph6",
    "solve",
    "to_graph6",
]

__version__ = "0.1.0"
