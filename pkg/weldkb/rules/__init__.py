"""Rule automata, the shortlex comparator and group presentations"""

from .auto_presentation import PRESENTATION_MAPPING_NAMES, AutoPresentation
from .automaton import FrozenRuleAutomaton, RuleAutomaton, normalize, rule_machine, word_difference
from .labels import decode_label, encode_label, format_label, label_count
from .presentation import Presentation, PresentationError, format_presentation, parse_presentation
from .products import enumerate_minimal_rules, enumerate_rules, rules_prime
from .serialization import deserialize_automaton, serialize_automaton
from .sl2 import DOUBLE_PADDED, GREATER, LESS, PADDED, SL2_FINALS, START, sl2, sl2_accepts_pair, sl2_step

__all__ = [
    "PRESENTATION_MAPPING_NAMES",
    "AutoPresentation",
    "FrozenRuleAutomaton",
    "RuleAutomaton",
    "normalize",
    "rule_machine",
    "word_difference",
    "decode_label",
    "encode_label",
    "format_label",
    "label_count",
    "Presentation",
    "PresentationError",
    "format_presentation",
    "parse_presentation",
    "enumerate_minimal_rules",
    "enumerate_rules",
    "rules_prime",
    "deserialize_automaton",
    "serialize_automaton",
    "DOUBLE_PADDED",
    "GREATER",
    "LESS",
    "PADDED",
    "SL2_FINALS",
    "START",
    "sl2",
    "sl2_accepts_pair",
    "sl2_step",
]
