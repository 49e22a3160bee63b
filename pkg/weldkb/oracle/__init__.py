"""Brute-force oracles: explicit completion, rewriting and normal forms of the fixture groups"""

from .groups import Z2_ALPHABET, PermutationOracle, exponent_sums, z2_normal_form
from .naive import FiniteRuleSet, NaiveCompletion, naive_kb, naive_reduce

__all__ = [
    "Z2_ALPHABET",
    "PermutationOracle",
    "exponent_sums",
    "z2_normal_form",
    "FiniteRuleSet",
    "NaiveCompletion",
    "naive_kb",
    "naive_reduce",
]
