"""Words, alphabets, shortlex ordering and rules"""

from .alphabet import (
    EMPTY_WORD,
    Alphabet,
    Ordering,
    Word,
    cyclic_reduce,
    formal_inverse,
    free_reduce,
    shortlex_cmp,
    shortlex_key,
)
from .rule import PaddedPairString, Rule, pad, relator_to_rule, rule_cmp, unpad

__all__ = [
    "EMPTY_WORD",
    "Alphabet",
    "Ordering",
    "Word",
    "cyclic_reduce",
    "formal_inverse",
    "free_reduce",
    "shortlex_cmp",
    "shortlex_key",
    "PaddedPairString",
    "Rule",
    "pad",
    "relator_to_rule",
    "rule_cmp",
    "unpad",
]
