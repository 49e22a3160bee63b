"""Sewing a rule into the word-difference automaton"""

import logging
from typing import NamedTuple

from ..rules import RuleAutomaton
from ..words import Rule, formal_inverse, free_reduce, pad
from .minimize import WordReducer

logger = logging.getLogger(__name__)


class SewResult(NamedTuple):
    states_added: int
    arrows_added: int
    merges: int

    @property
    def grew(self) -> bool:
        return self.states_added > 0 or self.arrows_added > 0

    @property
    def welded(self) -> bool:
        return self.merges > 0


def sew(wdiff: RuleAutomaton, rule: Rule, reduce_word: WordReducer) -> SewResult:
    """Make ``wdiff`` accept ``rule``, marking every state and arrow on its path as needed.

    The padded rule is read forwards from ``s0`` and backwards into ``s0`` as far as existing
    arrows allow. The gap is filled with states labelled by reduced word differences, reusing any
    state that already carries the label. When the two frontiers meet they are identified.
    """
    alphabet = wdiff.alphabet
    padded = pad(rule.lhs, rule.rhs, alphabet.pad)
    states_before, arrows_before, merges_before = wdiff.states_added, wdiff.arrows_added, wdiff.merges

    def result() -> SewResult:
        return SewResult(
            wdiff.states_added - states_before, wdiff.arrows_added - arrows_before, wdiff.merges - merges_before
        )

    source = wdiff.initial
    wdiff.mark_needed(source)
    k = 0
    while k < len(padded):
        target = wdiff.target(source, *padded[k])
        if target is None:
            break
        wdiff.mark_arrow_needed(source, *padded[k])
        source = target
        wdiff.mark_needed(source)
        k += 1
    if k == len(padded):
        if source != wdiff.initial:
            wdiff.identify(source, wdiff.initial)
        return result()

    back = wdiff.initial
    r = len(padded)
    while r > k:
        previous = wdiff.source(back, *padded[r - 1])
        if previous is None:
            break
        wdiff.mark_arrow_needed(previous, *padded[r - 1])
        back = previous
        wdiff.mark_needed(back)
        r -= 1

    while True:
        source, back = wdiff.find(source), wdiff.find(back)
        if k == r:
            if source != back:
                wdiff.identify(source, back)
            break
        x, y = padded[k]
        target = wdiff.target(source, x, y)
        if target is None:
            right = () if y == alphabet.pad else (y,)
            label = reduce_word(free_reduce(formal_inverse((x,), alphabet) + wdiff.label(source) + right, alphabet))
            target = wdiff.state_with_label(label)
            if target is None:
                target = wdiff.add_state(label)
            wdiff.add_arrow(source, x, y, target, needed=True)
        else:
            wdiff.mark_arrow_needed(source, x, y)
        wdiff.mark_needed(target)
        source = wdiff.find(target)
        k += 1

    sewn = result()
    if sewn.grew:
        logger.debug(f"Sewed {rule.key}: {sewn.states_added} states, {sewn.arrows_added} arrows, {sewn.merges} merges")
    return sewn
