"""Finite state automata"""

from .automata import EPSILON, Dfa, Nfa, epsilon_closure
from .determinize import InclusionPair, determinize, determinize_modified, minimize
from .operations import (
    canonical_form,
    canonical_numbering,
    enumerate_language,
    live_states,
    product_intersect,
    restrict,
    reverse,
    trim,
)
from .text_format import FsaFormatError, from_text, to_text

__all__ = [
    "EPSILON",
    "Dfa",
    "Nfa",
    "epsilon_closure",
    "InclusionPair",
    "determinize",
    "determinize_modified",
    "minimize",
    "canonical_form",
    "canonical_numbering",
    "enumerate_language",
    "live_states",
    "product_intersect",
    "restrict",
    "reverse",
    "trim",
    "FsaFormatError",
    "from_text",
    "to_text",
]
