"""
Finite state automata over a finite label set ``0 .. label_count-1``.

An ``Nfa`` may carry epsilon arrows (label ``EPSILON``) and several initial states. A ``Dfa``
stores a total transition table as a numpy array; missing arrows of the source automaton
lead to an explicit dead state.
"""

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

import numpy as np

EPSILON = -1

Arrow = Tuple[int, int, int]


@dataclass(frozen=True)
class Nfa:
    """A nondeterministic automaton.

    Attributes:
        state_count (int): states are ``0 .. state_count-1``.
        label_count (int): labels are ``0 .. label_count-1``; ``EPSILON`` marks epsilon arrows.
        arrows (FrozenSet[Arrow]): ``(source, label, target)`` triples.
        initials (FrozenSet[int]): initial states.
        finals (FrozenSet[int]): accepting states.
    """

    state_count: int
    label_count: int
    arrows: FrozenSet[Arrow]
    initials: FrozenSet[int]
    finals: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "arrows", frozenset((int(s), int(a), int(t)) for s, a, t in self.arrows))
        object.__setattr__(self, "initials", frozenset(int(s) for s in self.initials))
        object.__setattr__(self, "finals", frozenset(int(s) for s in self.finals))
        if self.state_count < 0 or self.label_count < 0:
            raise ValueError("State and label counts must be non-negative")
        for source, label, target in self.arrows:
            if not (0 <= source < self.state_count and 0 <= target < self.state_count):
                raise ValueError(f"Arrow {(source, label, target)} refers to a missing state")
            if label != EPSILON and not 0 <= label < self.label_count:
                raise ValueError(f"Arrow {(source, label, target)} has an invalid label")
        for state in self.initials | self.finals:
            if not 0 <= state < self.state_count:
                raise ValueError(f"State {state} is out of range")

    @cached_property
    def successors(self) -> Dict[int, Dict[int, Tuple[int, ...]]]:
        table: Dict[int, Dict[int, list]] = defaultdict(lambda: defaultdict(list))
        for source, label, target in sorted(self.arrows):
            table[source][label].append(target)
        return {s: {a: tuple(ts) for a, ts in row.items()} for s, row in table.items()}

    def targets(self, state: int, label: int) -> Tuple[int, ...]:
        return self.successors.get(state, {}).get(label, ())

    @property
    def has_epsilon(self) -> bool:
        return any(label == EPSILON for _, label, _ in self.arrows)

    def accepts(self, word: Sequence[int]) -> bool:
        current = epsilon_closure(self, self.initials)
        for label in word:
            moved = {t for s in current for t in self.targets(s, label)}
            current = epsilon_closure(self, moved)
            if not current:
                return False
        return bool(current & self.finals)


def epsilon_closure(nfa: Nfa, states: Iterable[int]) -> FrozenSet[int]:
    """The least superset of ``states`` closed under epsilon arrows."""
    closure = set(states)
    stack = list(closure)
    while stack:
        state = stack.pop()
        for target in nfa.targets(state, EPSILON):
            if target not in closure:
                closure.add(target)
                stack.append(target)
    return frozenset(closure)


@dataclass(frozen=True, eq=False)
class Dfa:
    """A complete deterministic automaton.

    Attributes:
        transitions (np.ndarray): integer array of shape ``(state_count, label_count)``.
        initial (int): the initial state.
        finals (FrozenSet[int]): accepting states.
        dead (Optional[int]): the non-accepting sink, if the automaton has one.
    """

    transitions: np.ndarray
    initial: int
    finals: FrozenSet[int]
    dead: Optional[int] = None

    def __post_init__(self):
        transitions = np.asarray(self.transitions, dtype=np.int64)
        if transitions.ndim != 2:
            raise ValueError("Transition table must be two-dimensional")
        if transitions.size and (transitions.min() < 0 or transitions.max() >= transitions.shape[0]):
            raise ValueError("Transition table refers to a missing state")
        object.__setattr__(self, "transitions", transitions)
        object.__setattr__(self, "finals", frozenset(int(s) for s in self.finals))

    @property
    def state_count(self) -> int:
        return int(self.transitions.shape[0])

    @property
    def label_count(self) -> int:
        return int(self.transitions.shape[1])

    @property
    def live_state_count(self) -> int:
        return self.state_count - (1 if self.dead is not None else 0)

    def step(self, state: int, label: int) -> int:
        return int(self.transitions[state, label])

    def accepts(self, word: Sequence[int]) -> bool:
        state = self.initial
        for label in word:
            state = self.step(state, label)
        return state in self.finals

    def to_nfa(self) -> Nfa:
        """The same language as an Nfa; arrows into or out of the dead state are dropped."""
        arrows = [
            (s, a, int(t))
            for s in range(self.state_count)
            for a, t in enumerate(self.transitions[s])
            if s != self.dead and t != self.dead
        ]
        return Nfa(self.state_count, self.label_count, arrows, {self.initial}, self.finals)
