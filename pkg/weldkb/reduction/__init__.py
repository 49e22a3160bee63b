"""Reduction of words against a rule automaton"""

from .engine import (
    FINAL,
    HistoryStack,
    PState,
    QSubset,
    QTriple,
    ReductionEngine,
    ReductionError,
    ReductionOutput,
    StoreLookup,
)

__all__ = [
    "FINAL",
    "HistoryStack",
    "PState",
    "QSubset",
    "QTriple",
    "ReductionEngine",
    "ReductionError",
    "ReductionOutput",
    "StoreLookup",
]
