"""weldkb package for Knuth-Bendix completion of group presentations over welded rule automata"""

from weldkb.completion_args import CompletionArguments
from weldkb.kb import CompletionLimitError, KnuthBendix, PassReport, RunResult, run
from weldkb.reduction import ReductionEngine
from weldkb.rules import (
    AutoPresentation,
    FrozenRuleAutomaton,
    Presentation,
    RuleAutomaton,
    deserialize_automaton,
    enumerate_rules,
    parse_presentation,
    serialize_automaton,
)
from weldkb.welding import weld
from weldkb.words import Alphabet, Rule

__all__ = [
    "Alphabet",
    "Rule",
    "AutoPresentation",
    "Presentation",
    "parse_presentation",
    "RuleAutomaton",
    "FrozenRuleAutomaton",
    "serialize_automaton",
    "deserialize_automaton",
    "enumerate_rules",
    "weld",
    "ReductionEngine",
    "CompletionArguments",
    "KnuthBendix",
    "CompletionLimitError",
    "PassReport",
    "RunResult",
    "run",
]

__version__ = "0.0.0"
