"""
Welding: the largest quotient of a trim automaton that is deterministic in both directions.

``WeldWorklist`` keeps forward and backward arrow maps per representative state. Whenever two
arrows with the same label leave (or enter) one state, their other endpoints are queued for
identification; processing the queue to exhaustion is the coincidence procedure used in coset
enumeration, run over both arrow directions.
"""

import logging
import random
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from ..fsa import EPSILON, Nfa, live_states
from .union_find import UnionFind

logger = logging.getLogger(__name__)

MergeCallback = Callable[[int, int], None]


class WeldWorklist:
    """Incremental welded automaton.

    Args:
        on_merge (Callable[[int, int], None], optional): called with ``(kept, absorbed)`` each time two
            states are identified, before the arrows of ``absorbed`` move to ``kept``.
        rng (random.Random, optional): if given, pending identifications are processed in random order.
    """

    def __init__(self, on_merge: Optional[MergeCallback] = None, rng: Optional[random.Random] = None):
        self.union_find = UnionFind()
        self.forward: Dict[int, Dict[int, int]] = {}
        self.backward: Dict[int, Dict[int, int]] = {}
        self.pending: List[Tuple[int, int]] = []
        self.on_merge = on_merge
        self.rng = rng
        self.merges = 0

    def __len__(self) -> int:
        return len(self.forward)

    def __contains__(self, state: int) -> bool:
        return 0 <= state < len(self.union_find) and self.find(state) in self.forward

    def add_state(self) -> int:
        state = self.union_find.add()
        self.forward[state] = {}
        self.backward[state] = {}
        return state

    def find(self, state: int) -> int:
        return self.union_find.find(state)

    def states(self) -> List[int]:
        return sorted(self.forward)

    def target(self, source: int, label: int) -> Optional[int]:
        target = self.forward[self.find(source)].get(label)
        return None if target is None else self.find(target)

    def source(self, target: int, label: int) -> Optional[int]:
        source = self.backward[self.find(target)].get(label)
        return None if source is None else self.find(source)

    def arrows(self) -> Iterator[Tuple[int, int, int]]:
        for source in self.states():
            for label, target in sorted(self.forward[source].items()):
                yield source, label, self.find(target)

    @property
    def arrow_count(self) -> int:
        return sum(len(row) for row in self.forward.values())

    def add_arrow(self, source: int, label: int, target: int) -> None:
        source, target = self.find(source), self.find(target)
        old_target = self.target(source, label)
        old_source = self.source(target, label)
        if old_target is None:
            self.forward[source][label] = target
        elif old_target != target:
            self.pending.append((old_target, target))
        if old_source is None:
            self.backward[target][label] = source
        elif old_source != source:
            self.pending.append((old_source, source))
        self.settle()

    def remove_arrow(self, source: int, label: int) -> Optional[int]:
        """Delete the arrow labelled ``label`` out of ``source``; returns its target if there was one."""
        source = self.find(source)
        target = self.forward[source].pop(label, None)
        if target is None:
            return None
        target = self.find(target)
        if self.source(target, label) == source:
            del self.backward[target][label]
        return target

    def remove_state(self, state: int) -> None:
        state = self.find(state)
        for label in list(self.forward[state]):
            self.remove_arrow(state, label)
        for label in list(self.backward[state]):
            self.remove_arrow(self.source(state, label), label)
        del self.forward[state]
        del self.backward[state]

    def identify(self, a: int, b: int) -> None:
        self.pending.append((a, b))
        self.settle()

    def settle(self) -> None:
        """Process pending identifications until the automaton is deterministic both ways."""
        while self.pending:
            index = self.rng.randrange(len(self.pending)) if self.rng is not None else len(self.pending) - 1
            a, b = self.pending.pop(index)
            self._merge(a, b)

    def _merge(self, a: int, b: int) -> None:
        joined = self.union_find.union(a, b)
        if joined is None:
            return
        kept, gone = joined
        self.merges += 1
        if self.on_merge is not None:
            self.on_merge(kept, gone)
        for arrows, own in ((self.forward, self.forward.pop(gone)), (self.backward, self.backward.pop(gone))):
            row = arrows[kept]
            for label, other in own.items():
                other = self.find(other)
                current = row.get(label)
                if current is None:
                    row[label] = other
                elif self.find(current) != other:
                    self.pending.append((current, other))

    def to_nfa(
        self, initial: int, final: Optional[int] = None, label_count: Optional[int] = None
    ) -> Tuple[Nfa, Dict[int, int]]:
        """Export as an Nfa; returns it with the map from representative ids to Nfa ids.

        ``final`` defaults to ``initial``; ``label_count`` defaults to one past the largest label in use.
        """
        mapping = {state: i for i, state in enumerate(self.states())}
        arrows = [(mapping[s], label, mapping[t]) for s, label, t in self.arrows()]
        final = initial if final is None else final
        if label_count is None:
            label_count = max((label for _, label, _ in arrows), default=-1) + 1
        nfa = Nfa(len(mapping), label_count, arrows, {mapping[self.find(initial)]}, {mapping[self.find(final)]})
        return nfa, mapping


def weld(nfa: Nfa, rng: Optional[random.Random] = None) -> Nfa:
    """The welded quotient of a trim automaton.

    All initial states are identified, all final states are identified, epsilon arrows are
    collapsed and coincidences are processed in both directions. Initial and final states
    stay apart unless coincidence joins them.

    Raises:
        ValueError: if the automaton accepts nothing or is not trim.
    """
    if not nfa.initials or not nfa.finals or nfa.state_count == 0:
        raise ValueError("Cannot weld an automaton with an empty language")
    if len(live_states(nfa)) != nfa.state_count:
        raise ValueError("Welding needs a trim automaton")

    worklist = WeldWorklist(rng=rng)
    for _ in range(nfa.state_count):
        worklist.add_state()
    for source, label, target in sorted(nfa.arrows):
        if label == EPSILON:
            worklist.identify(source, target)
        else:
            worklist.add_arrow(source, label, target)
    initial, *other_initials = sorted(nfa.initials)
    final, *other_finals = sorted(nfa.finals)
    for state in other_initials:
        worklist.identify(initial, state)
    for state in other_finals:
        worklist.identify(final, state)
    logger.debug(f"Welded {nfa.state_count} states into {len(worklist)} with {worklist.merges} merges")

    welded, _ = worklist.to_nfa(initial, final, nfa.label_count)
    return welded


def is_welded(nfa: Nfa) -> bool:
    """True for a trim automaton with one initial and one final state, no epsilon arrows and at most
    one arrow per label out of and into each state."""
    if len(nfa.initials) != 1 or len(nfa.finals) != 1 or nfa.has_epsilon:
        return False
    outgoing = set()
    incoming = set()
    for source, label, target in nfa.arrows:
        if (source, label) in outgoing or (target, label) in incoming:
            return False
        outgoing.add((source, label))
        incoming.add((target, label))
    return len(live_states(nfa)) == nfa.state_count
