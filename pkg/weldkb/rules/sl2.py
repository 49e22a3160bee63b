"""
The shortlex comparator on padded pairs.

Five states: START (initial), GREATER and LESS record the first differing position, PADDED and
DOUBLE_PADDED count padding symbols on the right. GREATER, PADDED and DOUBLE_PADDED accept. The
accepted pairs ``(u, v)`` are exactly those with no common first letter, ``u`` shortlex-greater
than ``v`` and ``|v| <= |u| <= |v| + 2``.
"""

from typing import Optional, Sequence

from ..fsa import Nfa
from ..words import Alphabet, shortlex_key
from .labels import encode_label, label_count

START = 0
GREATER = 1
LESS = 2
PADDED = 3
DOUBLE_PADDED = 4

SL2_STATES = 5
SL2_FINALS = frozenset({GREATER, PADDED, DOUBLE_PADDED})


def sl2_step(state: int, x: int, y: int, pad: int) -> Optional[int]:
    """The comparator transition on ``(x, y)``, or None if there is no arrow."""
    if x == pad:
        return None
    if state == START:
        if y == pad:
            return PADDED
        if x == y:
            return None
        return GREATER if x > y else LESS
    if state in (GREATER, LESS):
        return PADDED if y == pad else state
    if state == PADDED and y == pad:
        return DOUBLE_PADDED
    return None


def sl2(alphabet: Alphabet) -> Nfa:
    arrows = []
    for state in range(SL2_STATES):
        for x in alphabet.letters:
            for y in list(alphabet.letters) + [alphabet.pad]:
                target = sl2_step(state, x, y, alphabet.pad)
                if target is not None:
                    arrows.append((state, encode_label(x, y, alphabet), target))
    return Nfa(SL2_STATES, label_count(alphabet), arrows, {START}, SL2_FINALS)


def sl2_accepts_pair(u: Sequence[int], v: Sequence[int]) -> bool:
    """Direct test of the comparator's language on an unpadded pair."""
    if u and v and u[0] == v[0]:
        return False
    return shortlex_key(u) > shortlex_key(v) and len(v) <= len(u) <= len(v) + 2
