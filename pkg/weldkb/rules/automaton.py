"""
Rule automata: welded two-variable automata with one state ``s0`` that is both initial and final.

Each state carries a word label, the shortlex representative of the word difference it stands
for; ``s0`` is labelled by the empty word. ``RuleAutomaton`` is the mutable form used while a
completion pass sews rules in. ``FrozenRuleAutomaton`` is the read-only form reduction engines
walk, with arrows indexed by left letter first.
"""

from collections import defaultdict
import logging
import random
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from ..fsa import Nfa, canonical_form
from ..fsa.operations import CanonicalForm
from ..welding import WeldWorklist
from ..words import EMPTY_WORD, Alphabet, Rule, Word, formal_inverse, free_reduce, pad, shortlex_key
from .labels import decode_label, encode_label, label_count

logger = logging.getLogger(__name__)


def rule_machine(rule: Rule, alphabet: Alphabet) -> Nfa:
    """The path automaton on the padded pair of a rule: ``n+1`` states, first initial, last final."""
    if rule.lhs == rule.rhs:
        raise ValueError("A rule machine needs two different words")
    padded = pad(rule.lhs, rule.rhs, alphabet.pad)
    arrows = [(i, encode_label(x, y, alphabet), i + 1) for i, (x, y) in enumerate(padded)]
    return Nfa(len(padded) + 1, label_count(alphabet), arrows, {0}, {len(padded)})


def word_difference(u: Sequence[int], v: Sequence[int], alphabet: Alphabet) -> Word:
    """Freely reduced ``ι(u)·v``."""
    return free_reduce(formal_inverse(u, alphabet) + tuple(v), alphabet)


class RuleAutomaton:
    """Mutable rule automaton with needed-flags and growth counters.

    Args:
        alphabet (Alphabet): the group generators.
        rng (random.Random, optional): shuffles the coincidence queue of the underlying worklist.
    """

    def __init__(self, alphabet: Alphabet, rng: Optional[random.Random] = None):
        self.alphabet = alphabet
        self.labels: Dict[int, Word] = {}
        self._by_label: Dict[Word, int] = {}
        self.needed_states: Set[int] = set()
        self.needed_arrows: Set[Tuple[int, int]] = set()
        self.states_added = 0
        self.arrows_added = 0
        self.worklist = WeldWorklist(on_merge=self._on_merge, rng=rng)
        self._initial = self.add_state(EMPTY_WORD)

    @classmethod
    def from_rules(
        cls, rules: Iterable[Rule], alphabet: Alphabet, rng: Optional[random.Random] = None
    ) -> "RuleAutomaton":
        """Weld the rule machines of ``rules`` with their initial and final states identified."""
        automaton = cls(alphabet, rng=rng)
        for rule in rules:
            automaton.add_rule_path(rule)
        return automaton

    @property
    def initial(self) -> int:
        return self.worklist.find(self._initial)

    @property
    def merges(self) -> int:
        return self.worklist.merges

    @property
    def state_count(self) -> int:
        return len(self.worklist)

    @property
    def arrow_count(self) -> int:
        return self.worklist.arrow_count

    def find(self, state: int) -> int:
        return self.worklist.find(state)

    def states(self) -> List[int]:
        return self.worklist.states()

    def arrows(self) -> Iterator[Tuple[int, int, int]]:
        return self.worklist.arrows()

    def label(self, state: int) -> Word:
        return self.labels[self.find(state)]

    def state_with_label(self, word: Sequence[int]) -> Optional[int]:
        state = self._by_label.get(tuple(word))
        if state is None or state not in self.worklist:
            return None
        return self.find(state)

    def add_state(self, label: Sequence[int]) -> int:
        state = self.worklist.add_state()
        self.labels[state] = tuple(label)
        self._by_label.setdefault(tuple(label), state)
        self.states_added += 1
        return state

    def target(self, state: int, x: int, y: int) -> Optional[int]:
        return self.worklist.target(state, encode_label(x, y, self.alphabet))

    def source(self, state: int, x: int, y: int) -> Optional[int]:
        return self.worklist.source(state, encode_label(x, y, self.alphabet))

    def add_arrow(self, source: int, x: int, y: int, target: int, needed: bool = False) -> None:
        label = encode_label(x, y, self.alphabet)
        if self.worklist.target(source, label) is None:
            self.arrows_added += 1
        self.worklist.add_arrow(source, label, target)
        if needed:
            self.needed_arrows.add((self.find(source), label))

    def identify(self, a: int, b: int) -> None:
        self.worklist.identify(a, b)

    def _on_merge(self, kept: int, gone: int) -> None:
        gone_label = self.labels.pop(gone)
        if shortlex_key(gone_label) < shortlex_key(self.labels[kept]):
            self.labels[kept] = gone_label
        self._by_label[gone_label] = kept
        if gone in self.needed_states:
            self.needed_states.discard(gone)
            self.needed_states.add(kept)
        for label in self.worklist.forward[gone]:
            if (gone, label) in self.needed_arrows:
                self.needed_arrows.discard((gone, label))
                self.needed_arrows.add((kept, label))

    def add_rule_path(self, rule: Rule) -> None:
        """Add the path of ``rule`` from ``s0`` back to ``s0`` through fresh states."""
        u, v = rule.lhs, rule.rhs
        padded = pad(u, v, self.alphabet.pad)
        state = self.initial
        for i, (x, y) in enumerate(padded):
            if i == len(padded) - 1:
                target = self.initial
            else:
                target = self.add_state(word_difference(u[: i + 1], v[: i + 1], self.alphabet))
            self.add_arrow(state, x, y, target)
            state = self.find(target)

    def _remove_state(self, state: int) -> None:
        for label in self.worklist.forward[state]:
            self.needed_arrows.discard((state, label))
        for label, source in list(self.worklist.backward[state].items()):
            self.needed_arrows.discard((self.find(source), label))
        self.worklist.remove_state(state)
        self.labels.pop(state, None)
        self.needed_states.discard(state)

    def remove_arrow(self, state: int, label: int) -> None:
        state = self.find(state)
        self.worklist.remove_arrow(state, label)
        self.needed_arrows.discard((state, label))

    def normalize(self) -> "RuleAutomaton":
        """Remove every ``(x, x)`` arrow at ``s0`` after identifying its other end with ``s0``, then trim."""
        diagonal = [encode_label(x, x, self.alphabet) for x in self.alphabet.letters]
        changed = True
        while changed:
            changed = False
            s0 = self.initial
            for label in diagonal:
                for other in (self.worklist.target(s0, label), self.worklist.source(s0, label)):
                    if other is not None and other != s0:
                        logger.debug(f"Identifying state {other} with s0 along label {label}")
                        self.identify(other, s0)
                        changed = True
                        break
                if changed:
                    break
        s0 = self.initial
        for label in diagonal:
            if self.worklist.target(s0, label) == s0:
                self.remove_arrow(s0, label)
        return self.trim()

    def trim(self) -> "RuleAutomaton":
        """Keep the states lying on a path from ``s0`` back to ``s0``."""
        s0 = self.initial
        forward = self._reach(s0, self.worklist.forward)
        backward = self._reach(s0, self.worklist.backward)
        for state in self.states():
            if state not in forward or state not in backward:
                self._remove_state(state)
        return self

    def _reach(self, start: int, arrows: Dict[int, Dict[int, int]]) -> Set[int]:
        seen = {start}
        stack = [start]
        while stack:
            state = stack.pop()
            for other in arrows[state].values():
                other = self.find(other)
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
        return seen

    def mark_needed(self, state: int) -> None:
        self.needed_states.add(self.find(state))

    def mark_arrow_needed(self, source: int, x: int, y: int) -> None:
        self.needed_arrows.add((self.find(source), encode_label(x, y, self.alphabet)))

    def mark_all_needed(self) -> None:
        self.needed_states = set(self.states())
        self.needed_arrows = {(source, label) for source, label, _ in self.arrows()}

    def clear_needed(self) -> None:
        self.needed_states = set()
        self.needed_arrows = set()

    def prune_unneeded(self) -> "RuleAutomaton":
        """Drop states and arrows not marked as needed, then trim."""
        s0 = self.initial
        for state in self.states():
            if state != s0 and state not in self.needed_states:
                self._remove_state(state)
        for source, label, _ in list(self.arrows()):
            if (source, label) not in self.needed_arrows:
                self.remove_arrow(source, label)
        return self.trim()

    def relabel(self, state: int, label: Sequence[int]) -> None:
        state = self.find(state)
        old = self.labels[state]
        if self._by_label.get(old) == state:
            del self._by_label[old]
        self.labels[state] = tuple(label)
        self._by_label[tuple(label)] = state

    def accepts(self, u: Sequence[int], v: Sequence[int]) -> bool:
        state = self.initial
        for x, y in pad(u, v, self.alphabet.pad):
            state = self.target(state, x, y)
            if state is None:
                return False
        return state == self.initial

    def word_differences(self) -> Set[Word]:
        return set(self.labels.values())

    def to_nfa(self) -> Nfa:
        """The automaton as an ``Nfa`` over encoded labels with ``s0`` as its only initial and final state."""
        nfa, _ = self.worklist.to_nfa(self.initial, None, label_count(self.alphabet))
        return nfa

    def canonical_form(self) -> CanonicalForm:
        return canonical_form(self.to_nfa())

    def freeze(self) -> "FrozenRuleAutomaton":
        """Read-only copy with ``s0`` numbered 0 and the other states in increasing id order."""
        s0 = self.initial
        order = [s0] + [state for state in self.states() if state != s0]
        ids = {state: i for i, state in enumerate(order)}
        transitions = {(ids[s], label): ids[t] for s, label, t in self.arrows()}
        return FrozenRuleAutomaton(self.alphabet, [self.labels[state] for state in order], transitions)


def normalize(automaton: RuleAutomaton) -> RuleAutomaton:
    return automaton.normalize()


class FrozenRuleAutomaton:
    """Immutable rule automaton; state 0 is ``s0``.

    ``forward[s][x]`` lists ``(y, t)`` for every arrow ``s -(x,y)-> t``, sorted by ``y``, and
    ``backward[t][x]`` lists ``(y, s)`` for the same arrow, sorted by ``s`` and then ``y``.
    """

    def __init__(self, alphabet: Alphabet, labels: Sequence[Word], transitions: Dict[Tuple[int, int], int]):
        self.alphabet = alphabet
        self.labels: Tuple[Word, ...] = tuple(tuple(label) for label in labels)
        self.transitions: Dict[Tuple[int, int], int] = dict(transitions)
        forward: List[Dict[int, List[Tuple[int, int]]]] = [defaultdict(list) for _ in self.labels]
        backward: List[Dict[int, List[Tuple[int, int]]]] = [defaultdict(list) for _ in self.labels]
        for (source, label), target in sorted(self.transitions.items()):
            x, y = decode_label(label, alphabet)
            forward[source][x].append((y, target))
            backward[target][x].append((y, source))
        self.forward = [dict(row) for row in forward]
        self.backward = [dict(row) for row in backward]

    @property
    def state_count(self) -> int:
        return len(self.labels)

    @property
    def arrow_count(self) -> int:
        return len(self.transitions)

    @property
    def size(self) -> int:
        return self.state_count + self.arrow_count

    def target(self, state: int, x: int, y: int) -> Optional[int]:
        return self.transitions.get((state, encode_label(x, y, self.alphabet)))

    def accepts(self, u: Sequence[int], v: Sequence[int]) -> bool:
        state: Optional[int] = 0
        for x, y in pad(u, v, self.alphabet.pad):
            state = self.target(state, x, y)
            if state is None:
                return False
        return state == 0

    def arrows(self) -> Iterator[Tuple[int, int, int]]:
        for (source, label), target in sorted(self.transitions.items()):
            yield source, label, target

    def to_nfa(self) -> Nfa:
        return Nfa(self.state_count, label_count(self.alphabet), self.arrows(), {0}, {0})

    def canonical_form(self) -> CanonicalForm:
        return canonical_form(self.to_nfa())

    def thaw(self) -> RuleAutomaton:
        """A mutable copy with the same states, labels and arrows."""
        automaton = RuleAutomaton(self.alphabet)
        ids = [automaton.initial] + [automaton.add_state(label) for label in self.labels[1:]]
        automaton.states_added = 0
        for source, label, target in self.arrows():
            x, y = decode_label(label, self.alphabet)
            automaton.add_arrow(ids[source], x, y, ids[target])
        automaton.arrows_added = 0
        return automaton
