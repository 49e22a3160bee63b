"""Reversal, trimming, products, bounded enumeration and canonical forms of automata"""

from collections import deque
from typing import Dict, FrozenSet, List, Set, Tuple, Union

from .automata import EPSILON, Dfa, Nfa, epsilon_closure

CanonicalForm = Tuple[int, int, Tuple[int, ...], Tuple[Tuple[int, int, int], ...]]


def reverse(nfa: Nfa) -> Nfa:
    """Reverse every arrow and swap initial and final states."""
    arrows = [(t, a, s) for s, a, t in nfa.arrows]
    return Nfa(nfa.state_count, nfa.label_count, arrows, nfa.finals, nfa.initials)


def _reachable(nfa: Nfa, sources) -> Set[int]:
    seen = set(sources)
    stack = list(seen)
    while stack:
        state = stack.pop()
        for targets in nfa.successors.get(state, {}).values():
            for target in targets:
                if target not in seen:
                    seen.add(target)
                    stack.append(target)
    return seen


def live_states(nfa: Nfa) -> Set[int]:
    """States reachable from an initial state and co-reachable to a final state."""
    return _reachable(nfa, nfa.initials) & _reachable(reverse(nfa), nfa.finals)


def restrict(nfa: Nfa, keep) -> Nfa:
    """The sub-automaton on ``keep``, renumbered in increasing order of the old ids."""
    order = sorted(keep)
    new_id = {state: i for i, state in enumerate(order)}
    arrows = [(new_id[s], a, new_id[t]) for s, a, t in nfa.arrows if s in new_id and t in new_id]
    initials = [new_id[s] for s in nfa.initials if s in new_id]
    finals = [new_id[s] for s in nfa.finals if s in new_id]
    return Nfa(len(order), nfa.label_count, arrows, initials, finals)


def trim(nfa: Nfa) -> Nfa:
    return restrict(nfa, live_states(nfa))


def product_intersect(a: Nfa, b: Nfa) -> Nfa:
    """Automaton for the intersection of two epsilon-free languages over the same labels.

    Pairs are numbered in breadth-first discovery order and the result is trimmed.
    """
    if a.label_count != b.label_count:
        raise ValueError(f"Label counts differ: {a.label_count} and {b.label_count}")
    if a.has_epsilon or b.has_epsilon:
        raise ValueError("product_intersect expects automata without epsilon arrows")

    ids: Dict[Tuple[int, int], int] = {}
    queue = deque()
    for pair in sorted((p, q) for p in a.initials for q in b.initials):
        ids[pair] = len(ids)
        queue.append(pair)
    arrows = []
    while queue:
        p, q = queue.popleft()
        for label, p_targets in sorted(a.successors.get(p, {}).items()):
            for p_next in p_targets:
                for q_next in b.targets(q, label):
                    target = (p_next, q_next)
                    if target not in ids:
                        ids[target] = len(ids)
                        queue.append(target)
                    arrows.append((ids[(p, q)], label, ids[target]))
    finals = [i for (p, q), i in ids.items() if p in a.finals and q in b.finals]
    initials = [ids[(p, q)] for p in a.initials for q in b.initials]
    return trim(Nfa(len(ids), a.label_count, arrows, initials, finals))


def enumerate_language(nfa: Nfa, max_len: int) -> Set[Tuple[int, ...]]:
    """All accepted words of length at most ``max_len``, by breadth-first search."""
    live = live_states(nfa)
    start = epsilon_closure(nfa, nfa.initials) & live
    words: Set[Tuple[int, ...]] = set()
    frontier: List[Tuple[Tuple[int, ...], FrozenSet[int]]] = [((), start)] if start else []
    for length in range(max_len + 1):
        next_frontier = []
        for word, states in frontier:
            if states & nfa.finals:
                words.add(word)
            if length == max_len:
                continue
            for label in range(nfa.label_count):
                moved = {t for s in states for t in nfa.targets(s, label)}
                if not moved:
                    continue
                closed = epsilon_closure(nfa, moved) & live
                if closed:
                    next_frontier.append((word + (label,), closed))
        frontier = next_frontier
    return words


def canonical_numbering(nfa: Nfa) -> Dict[int, int]:
    """Breadth-first numbering from the unique initial state, visiting arrows in label order.

    Raises:
        ValueError: if the automaton has no unique initial state, epsilon arrows or two
            arrows with the same source and label.
    """
    if len(nfa.initials) != 1:
        raise ValueError(f"Expected exactly one initial state, got {len(nfa.initials)}")
    for state, row in nfa.successors.items():
        for label, targets in row.items():
            if label == EPSILON:
                raise ValueError("Canonical forms are only defined without epsilon arrows")
            if len(targets) > 1:
                raise ValueError(f"State {state} has {len(targets)} arrows labelled {label}")

    (initial,) = nfa.initials
    numbering = {initial: 0}
    queue = deque([initial])
    while queue:
        state = queue.popleft()
        for label, (target,) in sorted(nfa.successors.get(state, {}).items()):
            if target not in numbering:
                numbering[target] = len(numbering)
                queue.append(target)
    return numbering


def canonical_form(machine: Union[Nfa, Dfa]) -> CanonicalForm:
    """A description of the reachable part that is equal for two machines iff they are isomorphic."""
    nfa = machine.to_nfa() if isinstance(machine, Dfa) else machine
    numbering = canonical_numbering(nfa)
    arrows = tuple(
        sorted((numbering[s], a, numbering[t]) for s, a, t in nfa.arrows if s in numbering and t in numbering)
    )
    finals = tuple(sorted(numbering[s] for s in nfa.finals if s in numbering))
    return len(numbering), nfa.label_count, finals, arrows
