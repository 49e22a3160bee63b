"""Closed-form and permutation oracles for the fixture groups"""

from collections import deque
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..words import Alphabet, Word

Z2_ALPHABET = Alphabet.from_names(("x", "y", "X", "Y"), {"x": "X", "y": "Y"})


def z2_normal_form(a: int, b: int, alphabet: Alphabet = Z2_ALPHABET) -> Word:
    """Shortlex-least word for ``x^a y^b`` in the free abelian group of rank two under ``x<y<X<Y``."""
    x, y, big_x, big_y = (alphabet.index(name) for name in ("x", "y", "X", "Y"))
    first = (x,) * a if a >= 0 else ()
    middle = (y,) * b if b >= 0 else ()
    last_x = (big_x,) * -a if a < 0 else ()
    last_y = (big_y,) * -b if b < 0 else ()
    if a >= 0:
        return first + middle + last_y
    return middle + last_x + last_y


def exponent_sums(word: Sequence[int], alphabet: Alphabet) -> Tuple[int, ...]:
    """Exponent sum of every generator that precedes its inverse in the alphabet order.

    A self-inverse generator contributes its plain occurrence count.
    """
    counts = np.bincount(np.asarray(word, dtype=np.int64), minlength=alphabet.size)
    sums = []
    for letter in alphabet.letters:
        inverse = alphabet.inverse(letter)
        if letter < inverse:
            sums.append(int(counts[letter] - counts[inverse]))
        elif letter == inverse:
            sums.append(int(counts[letter]))
    return tuple(sums)


class PermutationOracle:
    """Evaluates words in a finite group given by permutation images of its generators.

    Words act on the right: the image of ``uv`` is ``u`` followed by ``v``.

    Args:
        alphabet (Alphabet): the generators.
        images (Mapping[str, Sequence[int]]): the permutation of every generator name, as the
            list of images of ``0 .. degree-1``.
    """

    def __init__(self, alphabet: Alphabet, images: Mapping[str, Sequence[int]]):
        self.alphabet = alphabet
        missing = [name for name in alphabet.names if name not in images]
        if missing:
            raise ValueError(f"No permutation given for {', '.join(missing)}")
        self.perms = [np.asarray(images[name], dtype=np.int64) for name in alphabet.names]
        self.degree = len(self.perms[0])
        self.identity = np.arange(self.degree, dtype=np.int64)
        for letter, perm in enumerate(self.perms):
            if perm.shape != (self.degree,) or not np.array_equal(np.sort(perm), self.identity):
                raise ValueError(f"Image of '{alphabet.names[letter]}' is not a permutation of {self.degree} points")
            if not np.array_equal(self.perms[alphabet.inverse(letter)][perm], self.identity):
                raise ValueError(f"Images of '{alphabet.names[letter]}' and its inverse are not inverse")
        self._normal_forms: Optional[Dict[Tuple[int, ...], Word]] = None

    def evaluate(self, word: Sequence[int]) -> np.ndarray:
        result = self.identity
        for letter in word:
            result = self.perms[letter][result]
        return result

    def element(self, word: Sequence[int]) -> Tuple[int, ...]:
        return tuple(int(i) for i in self.evaluate(word))

    def equal(self, u: Sequence[int], v: Sequence[int]) -> bool:
        return np.array_equal(self.evaluate(u), self.evaluate(v))

    def is_identity(self, word: Sequence[int]) -> bool:
        return np.array_equal(self.evaluate(word), self.identity)

    def normal_forms(self, max_len: Optional[int] = None) -> Dict[Tuple[int, ...], Word]:
        """Shortlex-least word of every element reached by words of length at most ``max_len``."""
        if max_len is None and self._normal_forms is not None:
            return self._normal_forms
        forms: Dict[Tuple[int, ...], Word] = {tuple(int(i) for i in self.identity): ()}
        frontier: deque = deque([((), self.identity)])
        while frontier:
            word, perm = frontier.popleft()
            if max_len is not None and len(word) >= max_len:
                continue
            for letter in self.alphabet.letters:
                image = self.perms[letter][perm]
                key = tuple(int(i) for i in image)
                if key not in forms:
                    forms[key] = word + (letter,)
                    frontier.append((word + (letter,), image))
        if max_len is None:
            self._normal_forms = forms
        return forms

    def normal_form(self, word: Sequence[int]) -> Word:
        return self.normal_forms()[self.element(word)]

    def elements(self) -> List[Tuple[int, ...]]:
        return list(self.normal_forms())
