"""Subset construction, the pruned subset construction and minimization"""

import logging
from typing import Callable, Dict, FrozenSet, List, NamedTuple, Sequence, Tuple

import numpy as np

from .automata import Dfa, Nfa, epsilon_closure

logger = logging.getLogger(__name__)


class InclusionPair(NamedTuple):
    """States ``p`` and ``q`` such that the language read from ``p`` lies inside that of ``q``."""

    p: int
    q: int


def _subset_construction(nfa: Nfa, prune: Callable[[FrozenSet[int]], FrozenSet[int]]) -> Dfa:
    # subsets are keyed by sorted id tuples; the empty subset is the dead state
    start = prune(epsilon_closure(nfa, nfa.initials))
    ids: Dict[Tuple[int, ...], int] = {tuple(sorted(start)): 0}
    subsets: List[FrozenSet[int]] = [start]
    rows: List[List[int]] = []

    position = 0
    while position < len(subsets):
        current = subsets[position]
        row = []
        for label in range(nfa.label_count):
            moved = {t for s in current for t in nfa.targets(s, label)}
            target = prune(epsilon_closure(nfa, moved)) if moved else frozenset()
            key = tuple(sorted(target))
            if key not in ids:
                ids[key] = len(subsets)
                subsets.append(target)
            row.append(ids[key])
        rows.append(row)
        position += 1

    finals = {i for i, subset in enumerate(subsets) if subset & nfa.finals}
    transitions = np.array(rows, dtype=np.int64).reshape(len(subsets), nfa.label_count)
    return Dfa(transitions, 0, finals, dead=ids.get(()))


def determinize(nfa: Nfa) -> Dfa:
    """The subset construction restricted to subsets reachable from the initial closure."""
    return _subset_construction(nfa, lambda subset: subset)


def determinize_modified(nfa: Nfa, pairs: Sequence[InclusionPair]) -> Dfa:
    """Subset construction that drops ``p`` from every subset that also holds ``q``.

    The pairs are trusted: each must satisfy L(p) ⊆ L(q), all states across the pairs must be
    distinct and the epsilon closure of ``q`` must not contain any ``p``. The language is then
    unchanged while fewer subsets are built.
    """
    pairs = list(pairs)

    def prune(subset: FrozenSet[int]) -> FrozenSet[int]:
        dropped = {p for p, q in pairs if p in subset and q in subset}
        return subset - dropped if dropped else subset

    return _subset_construction(nfa, prune)


def minimize(dfa: Dfa) -> Dfa:
    """Minimal language-equal automaton by Moore partition refinement.

    Unreachable states are discarded first; the classes are refined until the pair
    (own class, classes of all successors) no longer splits any class.
    """
    reachable = [dfa.initial]
    seen = {dfa.initial}
    for state in reachable:
        for target in dfa.transitions[state]:
            target = int(target)
            if target not in seen:
                seen.add(target)
                reachable.append(target)
    order = sorted(seen)
    position = np.full(dfa.state_count, -1, dtype=np.int64)
    position[order] = np.arange(len(order))
    table = position[dfa.transitions[order]]

    classes = np.array([1 if s in dfa.finals else 0 for s in order], dtype=np.int64)
    _, classes = np.unique(classes, return_inverse=True)
    classes = classes.reshape(-1)
    count = int(classes.max()) + 1
    while True:
        signature = np.column_stack([classes, classes[table]]) if table.size else classes.reshape(-1, 1)
        _, refined = np.unique(signature, axis=0, return_inverse=True)
        refined = refined.reshape(-1)
        refined_count = int(refined.max()) + 1
        classes = refined
        if refined_count == count:
            break
        count = refined_count

    transitions = np.zeros((count, dfa.label_count), dtype=np.int64)
    for i in range(len(order)):
        transitions[classes[i]] = classes[table[i]]
    finals = {int(classes[i]) for i, s in enumerate(order) if s in dfa.finals}
    dead = None
    for c in range(count):
        if c not in finals and bool(np.all(transitions[c] == c)):
            dead = c
            break
    initial = int(classes[position[dfa.initial]])
    logger.debug(f"Minimized {dfa.state_count} states to {count}")
    return Dfa(transitions, initial, finals, dead=dead)
