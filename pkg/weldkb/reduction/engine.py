"""
Reduction of words against the rule set held in a rule automaton.

Three lazily built machines cooperate:

- the prefix detector ``P`` reads a word left to right over subsets of pairs
  (automaton state, comparator state) and reaches ``FINAL`` as soon as the prefix read so far
  ends with a left-hand side;
- the left-hand side locator ``Q`` reads that prefix right to left over subsets of triples
  ``(s, i, j)``, where ``i`` counts padding symbols and ``j`` tells whether another padding
  symbol may follow, and stops on the shortest suffix that is a left-hand side;
- the right-hand side walk replays the recorded ``Q`` subsets forwards, picking the least
  letter that keeps a path alive, which gives the shortlex-least right-hand side.

Subsets are interned and arrows memoised per engine; ``reset_caches`` drops both.
"""

import logging
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from ..rules import GREATER, LESS, SL2_FINALS, START, FrozenRuleAutomaton, sl2_step
from ..words import Rule, Word

logger = logging.getLogger(__name__)

FINAL = -1
PLUS = "+"
MINUS = "-"

Pair = Tuple[int, int]
StoreLookup = Callable[[Word], Optional[Word]]


class ReductionError(RuntimeError):
    """The engine found its own machines in an inconsistent state."""


class PState(NamedTuple):
    """A prefix-detector state: a subset of (automaton state, comparator state) pairs.

    The final state is represented by the empty subset.
    """

    subset: Tuple[Pair, ...]

    @property
    def final(self) -> bool:
        return not self.subset


class QTriple(NamedTuple):
    s: int
    i: int
    j: str

    @property
    def final(self) -> bool:
        return self.s == 0 and self.j == MINUS


QSubset = Tuple[QTriple, ...]

Q_INITIAL = QTriple(0, 0, PLUS)


class ReductionOutput(NamedTuple):
    normal: Word
    discovered: List[Rule]


class HistoryStack:
    """Prefix-detector state ids; frame ``k`` is the state after reading ``k`` letters."""

    def __init__(self, initial: int):
        self.frames: List[int] = [initial]

    def __len__(self) -> int:
        return len(self.frames)

    @property
    def top(self) -> int:
        return self.frames[-1]

    def push(self, state: int) -> None:
        self.frames.append(state)

    def truncate(self, length: int) -> None:
        del self.frames[length:]


class ReductionEngine:
    """Lazy reducer over a frozen rule automaton.

    Args:
        rules (FrozenRuleAutomaton): a normalized rule automaton; state 0 is ``s0``.
    """

    def __init__(self, rules: FrozenRuleAutomaton):
        self.rules = rules
        self.alphabet = rules.alphabet
        self.reset_caches()

    def reset_caches(self) -> None:
        self._p_subsets: List[Tuple[Pair, ...]] = [((0, START),)]
        self._p_ids: Dict[Tuple[Pair, ...], int] = {self._p_subsets[0]: 0}
        self._p_arrows: Dict[Tuple[int, int], int] = {}
        self._q_subsets: List[QSubset] = [(Q_INITIAL,)]
        self._q_ids: Dict[QSubset, int] = {self._q_subsets[0]: 0}
        self._q_arrows: Dict[Tuple[int, int], int] = {}

    @property
    def cache_size(self) -> int:
        return len(self._p_subsets) + len(self._q_subsets) + len(self._p_arrows) + len(self._q_arrows)

    def p_state(self, state: int) -> PState:
        return PState(() if state == FINAL else self._p_subsets[state])

    def p_step(self, state: int, x: int) -> int:
        """Prefix-detector transition on letter ``x``; returns ``FINAL`` once a left-hand side ends here."""
        key = (state, x)
        if key in self._p_arrows:
            return self._p_arrows[key]
        pad = self.alphabet.pad
        targets = set()
        final = False
        for s, q in self._p_subsets[state]:
            if (s, q) == (0, START):
                targets.add((0, START))
            for y, t in self.rules.forward[s].get(x, ()):
                step = sl2_step(q, x, y, pad)
                if step is None or (t == 0 and step == LESS):
                    continue
                if t == 0 and step in SL2_FINALS:
                    final = True
                    break
                targets.add((t, step))
            if final:
                break
        if final:
            target = FINAL
        else:
            pruned = tuple(sorted(p for p in targets if not (p[1] == LESS and (p[0], GREATER) in targets)))
            target = self._intern(pruned, self._p_subsets, self._p_ids)
        self._p_arrows[key] = target
        return target

    def find_reducible_prefix(self, word: Sequence[int]) -> Optional[int]:
        """Length of the shortest prefix of ``word`` that ends with a left-hand side, or None."""
        state = 0
        for position, letter in enumerate(word, start=1):
            state = self.p_step(state, letter)
            if state == FINAL:
                return position
        return None

    def q_step(self, state: int, x: int) -> int:
        """Left-hand side locator transition, reading ``x`` leftwards."""
        key = (state, x)
        if key in self._q_arrows:
            return self._q_arrows[key]
        pad = self.alphabet.pad
        best: Dict[int, QTriple] = {}
        finals: List[QTriple] = []
        for triple in self._q_subsets[state]:
            if triple.final:
                continue
            s, i, j = triple
            for y, t in self.rules.backward[s].get(x, ()):
                if y == pad:
                    if triple == Q_INITIAL:
                        target = QTriple(0, 1, MINUS) if t == 0 else QTriple(t, 1, PLUS)
                    elif i == 1 and j == PLUS:
                        target = QTriple(t, 2, MINUS)
                    else:
                        continue
                else:
                    if t == 0 and not ((i == 0 and x > y) or (i > 0 and x != y)):
                        continue
                    target = QTriple(t, i, MINUS)
                if target.final:
                    finals.append(target)
                else:
                    kept = best.get(target.s)
                    if kept is None or (target.i, target.j == PLUS) > (kept.i, kept.j == PLUS):
                        best[target.s] = target
        if finals:
            subset: QSubset = (max(finals, key=lambda f: f.i),)
        else:
            subset = tuple(sorted(best.values()))
        target_id = self._intern(subset, self._q_subsets, self._q_ids)
        self._q_arrows[key] = target_id
        return target_id

    def find_lhs(self, word: Sequence[int]) -> Tuple[int, List[QSubset]]:
        """Locate the shortest suffix of ``word`` that is a left-hand side.

        Returns the start index of the suffix and the locator subsets, where entry ``j`` is the
        subset reached after reading the suffix from position ``j`` onwards (relative to the start).

        Raises:
            ReductionError: if ``word`` has no left-hand side suffix.
        """
        history: List[QSubset] = [self._q_subsets[0]]
        state = 0
        for start in range(len(word) - 1, -1, -1):
            state = self.q_step(state, word[start])
            subset = self._q_subsets[state]
            if not subset:
                raise ReductionError(f"No left-hand side ends the word {tuple(word)}")
            history.append(subset)
            if subset[0].final:
                history.reverse()
                return start, history
        raise ReductionError(f"The word {tuple(word)} was exhausted before a left-hand side was found")

    def find_rhs(self, lhs: Sequence[int], q_history: Sequence[QSubset]) -> Word:
        """The shortlex-least right-hand side for ``lhs`` along the recorded locator subsets."""
        (final,) = q_history[0]
        shift = final.i
        pad = self.alphabet.pad
        state = 0
        rhs: List[int] = []
        for k in range(len(lhs) - shift):
            y = lhs[k]
            for z, target in self.rules.forward[state].get(y, ()):
                if z == pad:
                    continue
                if k == 0 and ((shift == 0 and not y > z) or (shift > 0 and y == z)):
                    continue
                if any(triple.s == target and triple.i == shift for triple in q_history[k + 1]):
                    rhs.append(z)
                    state = target
                    break
            else:
                raise ReductionError(f"No right-hand side letter at position {k} of {tuple(lhs)}")
        return tuple(rhs)

    def reduce(self, word: Sequence[int], store_lookup: Optional[StoreLookup] = None) -> ReductionOutput:
        """Reduce ``word`` to its irreducible form.

        ``store_lookup`` maps a left-hand side to a right-hand side held elsewhere; it is
        preferred over the automaton. Rules read off the automaton are returned as discovered.
        """
        letters = list(word)
        history = HistoryStack(0)
        discovered: Dict[Tuple[Word, Word], Rule] = {}
        position = 0
        while position < len(letters):
            state = self.p_step(history.top, letters[position])
            position += 1
            if state != FINAL:
                history.push(state)
                continue
            start, q_history = self.find_lhs(letters[:position])
            lhs = tuple(letters[start:position])
            rhs = store_lookup(lhs) if store_lookup is not None else None
            if rhs is None:
                rhs = self.find_rhs(lhs, q_history)
                rule = Rule(lhs, rhs)
                discovered.setdefault(rule.key, rule)
            letters[start:position] = rhs
            history.truncate(start + 1)
            position = start
        return ReductionOutput(tuple(letters), list(discovered.values()))

    def equal(self, u: Sequence[int], v: Sequence[int]) -> bool:
        return self.reduce(u).normal == self.reduce(v).normal

    @staticmethod
    def _intern(subset, subsets: list, ids: dict) -> int:
        if subset not in ids:
            ids[subset] = len(subsets)
            subsets.append(subset)
        return ids[subset]
