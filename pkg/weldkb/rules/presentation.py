"""
Group presentations and their text format.

    # the free abelian group of rank two
    name: z2
    generators: x X y Y
    inverses: x=X y=Y
    order: x y X Y
    relators: xyXY

A section may continue on the following lines. Relators are separated by commas or line
breaks. ``order`` defaults to the generator order; ``name`` is optional.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..words import Alphabet, Word

SECTIONS = ("name", "generators", "inverses", "order", "relators")


class PresentationError(ValueError):
    """A malformed presentation file; ``line_number`` is 1-based, 0 when the whole file is at fault."""

    def __init__(self, message: str, line_number: int = 0):
        self.line_number = line_number
        if line_number:
            message = f"line {line_number}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Presentation:
    """A finite presentation with an ordered, inverse-closed generating set.

    Attributes:
        alphabet (Alphabet): generators in shortlex order with their inverses.
        relators (Tuple[Word, ...]): words equal to the identity.
        name (str): label used for run directories and reports.
    """

    alphabet: Alphabet
    relators: Tuple[Word, ...] = field(default_factory=tuple)
    name: str = "presentation"

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(tuple(r) for r in self.relators))
        for relator in self.relators:
            for letter in relator:
                if not 0 <= letter < self.alphabet.size:
                    raise ValueError(f"Relator {relator} uses letter {letter} outside the alphabet")

    @classmethod
    def from_strings(
        cls, order: Sequence[str], inverses: Dict[str, str], relators: Sequence[str], name: str = "presentation"
    ) -> "Presentation":
        alphabet = Alphabet.from_names(order, inverses)
        return cls(alphabet, tuple(alphabet.parse_word(r) for r in relators), name)


def _collect_sections(text: str) -> Dict[str, Tuple[int, List[str]]]:
    sections: Dict[str, Tuple[int, List[str]]] = {}
    current: Optional[str] = None
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, colon, rest = line.partition(":")
        if colon and head.strip().lower() in SECTIONS:
            current = head.strip().lower()
            if current in sections:
                raise PresentationError(f"section '{current}' appears twice", line_number)
            sections[current] = (line_number, [rest.strip()] if rest.strip() else [])
        elif current is None:
            raise PresentationError(f"expected a section header, got '{line}'", line_number)
        else:
            sections[current][1].append(line)
    return sections


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation text format.

    Raises:
        PresentationError: on unknown symbols, missing inverses or duplicate order entries.
    """
    sections = _collect_sections(text)
    if "generators" not in sections:
        raise PresentationError("missing 'generators' section")
    line_number, chunks = sections["generators"]
    generators = " ".join(chunks).split()
    if not generators:
        raise PresentationError("no generators given", line_number)
    if len(set(generators)) != len(generators):
        raise PresentationError("duplicate generator", line_number)

    inverses: Dict[str, str] = {}
    line_number, chunks = sections.get("inverses", (0, []))
    for pair in " ".join(chunks).replace(",", " ").split():
        a, equals, b = pair.partition("=")
        if not equals or a not in generators or b not in generators:
            raise PresentationError(f"bad inverse pair '{pair}'", line_number)
        if inverses.get(a, b) != b or inverses.get(b, a) != a:
            raise PresentationError(f"conflicting inverse for '{a}'", line_number)
        inverses[a], inverses[b] = b, a
    for name in generators:
        if name not in inverses:
            raise PresentationError(f"generator '{name}' has no inverse", line_number)

    order = generators
    if "order" in sections:
        line_number, chunks = sections["order"]
        order = " ".join(chunks).split()
        seen = set()
        for name in order:
            if name not in generators:
                raise PresentationError(f"unknown generator '{name}' in order", line_number)
            if name in seen:
                raise PresentationError(f"generator '{name}' listed twice in order", line_number)
            seen.add(name)
        if len(order) != len(generators):
            missing = [name for name in generators if name not in seen]
            raise PresentationError(f"order does not list {', '.join(missing)}", line_number)

    alphabet = Alphabet.from_names(order, inverses)
    relators = []
    line_number, chunks = sections.get("relators", (0, []))
    for chunk in chunks:
        for text_word in chunk.split(","):
            if not text_word.strip():
                continue
            try:
                relators.append(alphabet.parse_word(text_word))
            except ValueError as e:
                raise PresentationError(str(e), line_number) from e

    name = " ".join(sections["name"][1]).strip() if "name" in sections else "presentation"
    return Presentation(alphabet, tuple(relators), name or "presentation")


def format_presentation(presentation: Presentation) -> str:
    alphabet = presentation.alphabet
    pairs = []
    for letter in alphabet.letters:
        inverse = alphabet.inverse(letter)
        if letter <= inverse:
            pairs.append(f"{alphabet.names[letter]}={alphabet.names[inverse]}")
    lines = [
        f"name: {presentation.name}",
        f"generators: {' '.join(alphabet.names)}",
        f"inverses: {' '.join(pairs)}",
        f"order: {' '.join(alphabet.names)}",
        f"relators: {', '.join(alphabet.format_word(r) for r in presentation.relators)}",
    ]
    return "\n".join(lines) + "\n"
