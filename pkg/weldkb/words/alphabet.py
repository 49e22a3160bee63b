"""
Alphabets with an inverse involution, words over them and the shortlex ordering.

Letters are small integers; the letter order is the index order, so plain tuple comparison of
two words of equal length is the lexicographic comparison under the alphabet's order.
"""

from dataclasses import dataclass, field
from enum import IntEnum
import logging
import re
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from ..constants import EMPTY_WORD_TOKEN, PAD_TOKEN

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
EMPTY_WORD: Word = ()

_SEPARATORS = re.compile(r"[\s*]+")


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Alphabet:
    """An ordered, inverse-closed set of generator names.

    Attributes:
        names (Tuple[str, ...]): generator names; position is the letter index and the letter order.
        inverses (Tuple[int, ...]): ``inverses[a]`` is the index of the formal inverse of letter ``a``.
    """

    names: Tuple[str, ...]
    inverses: Tuple[int, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "inverses", tuple(int(i) for i in self.inverses))
        if not self.names:
            raise ValueError("An alphabet needs at least one generator")
        if len(self.names) != len(self.inverses):
            raise ValueError(f"Got {len(self.names)} generator names but {len(self.inverses)} inverses")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"Duplicate generator names in {self.names}")
        for name in self.names:
            if not name or _SEPARATORS.search(name) or "," in name or name == PAD_TOKEN:
                raise ValueError(f"Invalid generator name: '{name}'")
        for letter, inverse in enumerate(self.inverses):
            if not 0 <= inverse < len(self.names):
                raise ValueError(f"Inverse index {inverse} of '{self.names[letter]}' is out of range")
            if self.inverses[inverse] != letter:
                raise ValueError(f"Inverse map is not an involution at '{self.names[letter]}'")
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.names)})

    @classmethod
    def from_names(cls, names: Sequence[str], inverses: Mapping[str, str]) -> "Alphabet":
        """Build an alphabet from names in letter order and a name-to-inverse-name mapping.

        The mapping may list each pair once; the symmetric entry is implied.
        """
        index = {name: i for i, name in enumerate(names)}
        partner: Dict[int, int] = {}
        for a, b in inverses.items():
            if a not in index or b not in index:
                raise ValueError(f"Unknown generator in inverse pair {a}={b}")
            for x, y in ((index[a], index[b]), (index[b], index[a])):
                if partner.get(x, y) != y:
                    raise ValueError(f"Conflicting inverses for '{names[x]}'")
                partner[x] = y
        missing = [name for name in names if index[name] not in partner]
        if missing:
            raise ValueError(f"Generators without inverse: {', '.join(missing)}")
        return cls(tuple(names), tuple(partner[i] for i in range(len(names))))

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def pad(self) -> int:
        """The padding symbol, one past the last letter."""
        return len(self.names)

    @property
    def letters(self) -> range:
        return range(len(self.names))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"Unknown generator: '{name}'") from None

    def inverse(self, letter: int) -> int:
        return self.inverses[letter]

    @property
    def single_character(self) -> bool:
        return all(len(name) == 1 for name in self.names)

    def parse_word(self, text: str) -> Word:
        """Parse the word text format into letter indices."""
        text = text.strip()
        if text in ("", EMPTY_WORD_TOKEN) and EMPTY_WORD_TOKEN not in self._index:
            return EMPTY_WORD
        if self.single_character and not _SEPARATORS.search(text):
            tokens: Iterable[str] = text
        else:
            tokens = [token for token in _SEPARATORS.split(text) if token]
        return tuple(self.index(token) for token in tokens)

    def format_word(self, word: Sequence[int]) -> str:
        """Write a word; the empty word is ``e``, or the empty string when ``e`` names a generator."""
        if not word:
            return "" if EMPTY_WORD_TOKEN in self._index else EMPTY_WORD_TOKEN
        separator = "" if self.single_character else "*"
        return separator.join(self.names[letter] for letter in word)


def shortlex_key(word: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    return len(word), tuple(word)


def shortlex_cmp(u: Sequence[int], v: Sequence[int]) -> Ordering:
    """Compare two words: shorter first, equal lengths lexicographically."""
    ku, kv = shortlex_key(u), shortlex_key(v)
    if ku < kv:
        return Ordering.LESS
    if ku > kv:
        return Ordering.GREATER
    return Ordering.EQUAL


def formal_inverse(word: Sequence[int], alphabet: Alphabet) -> Word:
    return tuple(alphabet.inverses[letter] for letter in reversed(word))


def free_reduce(word: Sequence[int], alphabet: Alphabet) -> Word:
    stack = []
    for letter in word:
        if stack and stack[-1] == alphabet.inverses[letter]:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def cyclic_reduce(word: Sequence[int], alphabet: Alphabet) -> Word:
    word = free_reduce(word, alphabet)
    start, end = 0, len(word)
    while end - start > 1 and word[start] == alphabet.inverses[word[end - 1]]:
        start += 1
        end -= 1
    return word[start:end]
