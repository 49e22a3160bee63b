"""Rules, rule ordering, padded pairs and the conversion of relators into rules"""

from dataclasses import dataclass, field
import math
from typing import Optional, Sequence, Tuple

from .alphabet import Alphabet, Ordering, Word, cyclic_reduce, formal_inverse, shortlex_cmp, shortlex_key

PaddedPair = Tuple[int, int]
PaddedPairString = Tuple[PaddedPair, ...]


@dataclass(unsafe_hash=True)
class Rule:
    """A rewrite rule ``lhs -> rhs`` with its lifecycle flags.

    Equality and hashing only look at the two sides; the flags are bookkeeping of the
    completion procedure.
    """

    lhs: Word
    rhs: Word
    minimal: bool = field(default=False, compare=False)
    minimized: bool = field(default=False, compare=False)
    priority: bool = field(default=False, compare=False)

    def __post_init__(self):
        self.lhs = tuple(self.lhs)
        self.rhs = tuple(self.rhs)

    @classmethod
    def oriented(cls, u: Sequence[int], v: Sequence[int], priority: bool = False) -> "Rule":
        """The rule with the shortlex-greater word on the left."""
        if shortlex_key(u) < shortlex_key(v):
            u, v = v, u
        return cls(tuple(u), tuple(v), priority=priority)

    @property
    def key(self) -> Tuple[Word, Word]:
        return self.lhs, self.rhs

    @property
    def is_trivial(self) -> bool:
        return not self.lhs and not self.rhs

    def format(self, alphabet: Alphabet) -> str:
        return f"{alphabet.format_word(self.lhs)} -> {alphabet.format_word(self.rhs)}"


def rule_cmp(r1: Rule, r2: Rule) -> Ordering:
    """Order rules by left-hand side, then right-hand side, both in shortlex."""
    first = shortlex_cmp(r1.lhs, r2.lhs)
    if first != Ordering.EQUAL:
        return first
    return shortlex_cmp(r1.rhs, r2.rhs)


def pad(u: Sequence[int], v: Sequence[int], pad_symbol: int) -> PaddedPairString:
    """Zip two words into one string of pairs, padding the shorter one at the tail."""
    length = max(len(u), len(v))
    return tuple(
        (u[i] if i < len(u) else pad_symbol, v[i] if i < len(v) else pad_symbol) for i in range(length)
    )


def unpad(symbols: Sequence[PaddedPair], pad_symbol: int) -> Tuple[Word, Word]:
    """Split a padded pair string back into its two words.

    Raises:
        ValueError: if a pair is ``(PAD, PAD)`` or padding is followed by a letter.
    """
    sides: Tuple[list, list] = ([], [])
    ended = [False, False]
    for pair in symbols:
        if pair[0] == pad_symbol and pair[1] == pad_symbol:
            raise ValueError("A padded string cannot contain (PAD, PAD)")
        for i, letter in enumerate(pair):
            if letter == pad_symbol:
                ended[i] = True
            elif ended[i]:
                raise ValueError("Padding symbols must form a tail")
            else:
                sides[i].append(letter)
    return tuple(sides[0]), tuple(sides[1])


def relator_to_rule(relator: Sequence[int], alphabet: Alphabet) -> Optional[Rule]:
    """Turn a relator into a rule that the shortlex comparator accepts.

    The relator is freely and cyclically reduced and cut at ``ceil(n/2)`` into ``l`` and ``s``;
    the rule equates ``l`` with the inverse of ``s``. Common prefixes and suffixes of the two
    sides are stripped. Returns None when the relator reduces to the empty word.
    """
    word = cyclic_reduce(relator, alphabet)
    if not word:
        return None
    cut = math.ceil(len(word) / 2)
    left, right = word[:cut], formal_inverse(word[cut:], alphabet)
    if shortlex_key(left) < shortlex_key(right):
        left, right = right, left
    while left and right and left[0] == right[0]:
        left, right = left[1:], right[1:]
    while left and right and left[-1] == right[-1]:
        left, right = left[:-1], right[:-1]
    return Rule(left, right)
