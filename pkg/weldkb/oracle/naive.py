"""
Textbook Knuth-Bendix completion over an explicit, finite list of rules.

Nothing here touches automata; the module only relies on words and rules so it can
cross-check the automatic procedure.
"""

from dataclasses import dataclass, field
import logging
import random
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Set, Tuple

from ..words import Rule, Word, free_reduce, shortlex_key

logger = logging.getLogger(__name__)

RuleIndex = Dict[Word, Word]


def _rule_key(rule: Rule):
    return shortlex_key(rule.lhs), shortlex_key(rule.rhs)


@dataclass(frozen=True)
class FiniteRuleSet:
    """An explicit rewriting system where every left-hand side is shortlex-greater than its right-hand side."""

    rules: Tuple[Rule, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(sorted(set(self.rules), key=_rule_key)))
        for rule in self.rules:
            if shortlex_key(rule.lhs) <= shortlex_key(rule.rhs):
                raise ValueError(f"Rule {rule.key} does not decrease in shortlex order")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Sequence[int], Sequence[int]]]) -> "FiniteRuleSet":
        """Orient each pair of distinct words into a rule."""
        return cls(tuple(Rule.oriented(u, v) for u, v in pairs if tuple(u) != tuple(v)))

    @classmethod
    def from_presentation(cls, presentation) -> "FiniteRuleSet":
        """The special rules ``(x ι(x), ε)`` plus ``(r, ε)`` for every freely reduced relator ``r``."""
        alphabet = presentation.alphabet
        pairs: List[Tuple[Word, Word]] = [((x, alphabet.inverse(x)), ()) for x in alphabet.letters]
        for relator in presentation.relators:
            pairs.append((free_reduce(relator, alphabet), ()))
        return cls.from_pairs(pairs)

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def index(self) -> RuleIndex:
        """Left-hand side to its shortlex-least right-hand side."""
        index: RuleIndex = {}
        for rule in self.rules:
            index.setdefault(rule.lhs, rule.rhs)
        return index


def _redexes(word: Word, index: RuleIndex, lengths: Sequence[int], proper: bool = False) -> Iterator[Tuple[int, int]]:
    for start in range(len(word)):
        for length in lengths:
            if proper and length >= len(word):
                break
            if start + length <= len(word) and word[start : start + length] in index:
                yield start, length


def _rewrite(word: Word, index: RuleIndex, rng: Optional[random.Random] = None) -> Word:
    lengths = sorted({len(lhs) for lhs in index})
    while True:
        if rng is None:
            redex = next(_redexes(word, index, lengths), None)
        else:
            choices = list(_redexes(word, index, lengths))
            redex = rng.choice(choices) if choices else None
        if redex is None:
            return word
        start, length = redex
        word = word[:start] + index[word[start : start + length]] + word[start + length :]


def naive_reduce(rules: FiniteRuleSet, word: Sequence[int], rng: Optional[random.Random] = None) -> Word:
    """Rewrite ``word`` until no left-hand side occurs in it.

    Without ``rng`` the leftmost occurrence is rewritten, preferring the shortest left-hand side
    there. With ``rng`` any occurrence may be picked.
    """
    return _rewrite(tuple(word), rules.index(), rng)


class NaiveCompletion(NamedTuple):
    rules: FiniteRuleSet
    confluent: bool
    reason: Optional[str] = None


def _interreduce(rules: Set[Rule]) -> Set[Rule]:
    """Replace rules whose left-hand side is reducible by the others and normalize right-hand sides."""
    changed = True
    while changed:
        changed = False
        index = FiniteRuleSet(tuple(rules)).index()
        lengths = sorted({len(lhs) for lhs in index})
        for rule in sorted(rules, key=_rule_key):
            if index[rule.lhs] != rule.rhs or next(_redexes(rule.lhs, index, lengths, proper=True), None):
                rules.discard(rule)
                others = FiniteRuleSet(tuple(rules)).index()
                lhs, rhs = _rewrite(rule.lhs, others), _rewrite(rule.rhs, others)
                if lhs != rhs:
                    rules.add(Rule.oriented(lhs, rhs))
                changed = True
                break
            rhs = _rewrite(rule.rhs, index)
            if rhs != rule.rhs:
                rules.discard(rule)
                rules.add(Rule(rule.lhs, rhs))
                changed = True
                break
    return rules


def _critical_pairs(r1: Rule, r2: Rule) -> List[Tuple[Word, Word]]:
    pairs = []
    for a, b in ((r1, r2), (r2, r1)):
        for k in range(1, min(len(a.lhs), len(b.lhs))):
            if a.lhs[len(a.lhs) - k :] == b.lhs[:k]:
                pairs.append((a.rhs + b.lhs[k:], a.lhs[: len(a.lhs) - k] + b.rhs))
    return pairs


def naive_kb(rules: FiniteRuleSet, max_lhs_len: int = 12, max_rules: int = 500) -> NaiveCompletion:
    """Complete ``rules`` by critical pair analysis with explicit rules.

    Critical pairs whose left-hand side would be longer than ``max_lhs_len`` are discarded and
    the result is flagged non-confluent; it still rewrites short words correctly. Reaching
    ``max_rules`` stops the completion.
    """
    current = _interreduce(set(rules))
    overflow = False
    while True:
        ordered = sorted(current, key=_rule_key)
        index = FiniteRuleSet(tuple(ordered)).index()
        found: Set[Rule] = set()
        for i, r1 in enumerate(ordered):
            for r2 in ordered[i:]:
                for left, right in _critical_pairs(r1, r2):
                    u, v = _rewrite(left, index), _rewrite(right, index)
                    if u == v:
                        continue
                    rule = Rule.oriented(u, v)
                    if len(rule.lhs) > max_lhs_len:
                        overflow = True
                        continue
                    found.add(rule)
        if not found:
            break
        current = _interreduce(current | found)
        if len(current) > max_rules:
            logger.debug(f"Naive completion stopped at {len(current)} rules")
            return NaiveCompletion(FiniteRuleSet(tuple(current)), False, f"more than {max_rules} rules")
    if overflow:
        return NaiveCompletion(
            FiniteRuleSet(tuple(current)), False, f"discarded rules with left-hand sides longer than {max_lhs_len}"
        )
    return NaiveCompletion(FiniteRuleSet(tuple(current)), True)
