"""Products of a rule automaton with the shortlex comparator and enumeration of the rules it holds"""

from collections import deque
from typing import Dict, Set, Tuple, Union

from ..fsa import Nfa, enumerate_language, product_intersect, trim
from ..words import Rule, unpad
from .automaton import FrozenRuleAutomaton, RuleAutomaton
from .labels import decode_label, encode_label, label_count
from .sl2 import LESS, SL2_FINALS, START, sl2, sl2_step


def _frozen(automaton: Union[RuleAutomaton, FrozenRuleAutomaton]) -> FrozenRuleAutomaton:
    return automaton.freeze() if isinstance(automaton, RuleAutomaton) else automaton


def rules_prime(automaton: Union[RuleAutomaton, FrozenRuleAutomaton]) -> Nfa:
    """Product with the comparator accepting the rules with no proper prefix or suffix that is a rule.

    Final pairs ``(s0, accepting)`` have no outgoing arrows and the pair ``(s0, LESS)`` is left out.
    """
    frozen = _frozen(automaton)
    alphabet = frozen.alphabet
    ids: Dict[Tuple[int, int], int] = {(0, START): 0}
    queue = deque([(0, START)])
    arrows = []
    while queue:
        state, comparator = pair = queue.popleft()
        if state == 0 and comparator in SL2_FINALS:
            continue
        for x, row in sorted(frozen.forward[state].items()):
            for y, target in row:
                step = sl2_step(comparator, x, y, alphabet.pad)
                if step is None or (target == 0 and step == LESS):
                    continue
                target_pair = (target, step)
                if target_pair not in ids:
                    ids[target_pair] = len(ids)
                    queue.append(target_pair)
                arrows.append((ids[pair], encode_label(x, y, alphabet), ids[target_pair]))
    finals = [i for (state, comparator), i in ids.items() if state == 0 and comparator in SL2_FINALS]
    return trim(Nfa(len(ids), label_count(alphabet), arrows, {0}, finals))


def _to_rules(words: Set[Tuple[int, ...]], automaton: FrozenRuleAutomaton, max_len: int) -> Set[Rule]:
    alphabet = automaton.alphabet
    rules = set()
    for word in words:
        u, v = unpad([decode_label(label, alphabet) for label in word], alphabet.pad)
        if len(u) + len(v) <= max_len:
            rules.add(Rule(u, v))
    return rules


def enumerate_rules(automaton: Union[RuleAutomaton, FrozenRuleAutomaton], max_len: int) -> Set[Rule]:
    """Rules ``(u, v)`` accepted by both the automaton and the comparator with ``|u| + |v| <= max_len``."""
    frozen = _frozen(automaton)
    product = product_intersect(frozen.to_nfa(), sl2(frozen.alphabet))
    return _to_rules(enumerate_language(product, max_len), frozen, max_len)


def enumerate_minimal_rules(automaton: Union[RuleAutomaton, FrozenRuleAutomaton], max_len: int) -> Set[Rule]:
    """As ``enumerate_rules`` restricted to rules without a proper prefix or suffix rule."""
    frozen = _frozen(automaton)
    return _to_rules(enumerate_language(rules_prime(frozen), max_len), frozen, max_len)
