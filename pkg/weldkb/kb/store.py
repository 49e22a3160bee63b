"""
The explicit rule store of a completion run.

Rules live in exactly one of four ordered lists. A rule removed from the store leaves a
tombstone; inserting a tombstoned rule again raises ``ResurrectionError`` while invariant
checking is on.
"""

from collections import OrderedDict
import logging
from typing import Dict, Iterator, List, Optional, Set, Tuple

import pandas as pd

from ..words import Alphabet, Rule, Word, shortlex_key

logger = logging.getLogger(__name__)

CONSIDERED = "considered"
THIS = "this"
NEW = "new"
DELETE = "delete"
LISTS = (CONSIDERED, THIS, NEW, DELETE)

RuleKey = Tuple[Word, Word]


class ResurrectionError(AssertionError):
    """A rule deleted earlier in the run was inserted again."""


def tombstone(key: RuleKey) -> bytes:
    lhs, rhs = key
    return (",".join(map(str, lhs)) + "|" + ",".join(map(str, rhs))).encode()


class Store:
    """Four disjoint ordered rule lists with an index on left-hand sides.

    Args:
        check_invariants (bool): raise ``ResurrectionError`` when a deleted rule comes back.
    """

    def __init__(self, check_invariants: bool = True):
        self.lists: Dict[str, "OrderedDict[RuleKey, Rule]"] = {name: OrderedDict() for name in LISTS}
        self.location: Dict[RuleKey, str] = {}
        self.by_lhs: Dict[Word, Set[Word]] = {}
        self.tombstones: Set[bytes] = set()
        self.check_invariants = check_invariants

    def __len__(self) -> int:
        return len(self.location)

    def __contains__(self, rule: Rule) -> bool:
        return rule.key in self.location

    def __iter__(self) -> Iterator[Rule]:
        for name in LISTS:
            yield from self.lists[name].values()

    def size(self, name: str) -> int:
        return len(self.lists[name])

    def get(self, rule: Rule) -> Optional[Rule]:
        name = self.location.get(rule.key)
        return None if name is None else self.lists[name][rule.key]

    def where(self, rule: Rule) -> Optional[str]:
        return self.location.get(rule.key)

    def is_tombstoned(self, rule: Rule) -> bool:
        return tombstone(rule.key) in self.tombstones

    def insert(self, rule: Rule, name: str, front: bool = False) -> bool:
        """Add ``rule`` to list ``name``; returns False if an equal rule is already stored."""
        if rule.key in self.location:
            return False
        if self.check_invariants and self.is_tombstoned(rule):
            raise ResurrectionError(f"Deleted rule {rule.key} was inserted again")
        self.lists[name][rule.key] = rule
        if front:
            self.lists[name].move_to_end(rule.key, last=False)
        self.location[rule.key] = name
        self.by_lhs.setdefault(rule.lhs, set()).add(rule.rhs)
        return True

    def move(self, rule: Rule, name: str, front: bool = False) -> None:
        stored = self.lists[self.location[rule.key]].pop(rule.key)
        self.lists[name][rule.key] = stored
        if front:
            self.lists[name].move_to_end(rule.key, last=False)
        self.location[rule.key] = name

    def delete(self, rule: Rule) -> None:
        name = self.location.pop(rule.key)
        del self.lists[name][rule.key]
        rhs_set = self.by_lhs[rule.lhs]
        rhs_set.discard(rule.rhs)
        if not rhs_set:
            del self.by_lhs[rule.lhs]
        self.tombstones.add(tombstone(rule.key))
        logger.debug(f"Deleted rule {rule.key} from {name}")

    def first(self, name: str) -> Optional[Rule]:
        rules = self.lists[name]
        return next(iter(rules.values())) if rules else None

    def snapshot(self, name: str) -> List[Rule]:
        """The rules of one list at this moment; callers re-check ``where`` while iterating."""
        return list(self.lists[name].values())

    def rhs_for(self, lhs: Word) -> Optional[Word]:
        """The shortlex-least right-hand side stored for ``lhs``."""
        rhs_set = self.by_lhs.get(tuple(lhs))
        if not rhs_set:
            return None
        return min(rhs_set, key=shortlex_key)

    def rules(self) -> List[Rule]:
        return list(self)

    def to_frame(self, alphabet: Alphabet) -> pd.DataFrame:
        records = [
            {
                "lhs": alphabet.format_word(rule.lhs),
                "rhs": alphabet.format_word(rule.rhs),
                "list": self.location[rule.key],
                "minimal": rule.minimal,
                "minimized": rule.minimized,
                "priority": rule.priority,
            }
            for rule in self
        ]
        return pd.DataFrame(records, columns=["lhs", "rhs", "list", "minimal", "minimized", "priority"])
