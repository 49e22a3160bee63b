"""The Knuth-Bendix procedure over welded rule automata"""

from .completion import CompletionLimitError, KnuthBendix, MonotonicityError, initial_rules, overlap_words, run
from .minimize import MinimizationOutput, WordReducer, minimize_rule
from .outputs import PassReport, RunResult
from .sewing import SewResult, sew
from .store import CONSIDERED, DELETE, LISTS, NEW, THIS, ResurrectionError, Store, tombstone

__all__ = [
    "CompletionLimitError",
    "KnuthBendix",
    "MonotonicityError",
    "initial_rules",
    "overlap_words",
    "run",
    "MinimizationOutput",
    "WordReducer",
    "minimize_rule",
    "PassReport",
    "RunResult",
    "SewResult",
    "sew",
    "CONSIDERED",
    "DELETE",
    "LISTS",
    "NEW",
    "THIS",
    "ResurrectionError",
    "Store",
    "tombstone",
]
