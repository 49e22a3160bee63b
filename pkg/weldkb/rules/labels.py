"""Two-variable labels ``(x, y)`` packed into one integer; ``y`` may be the padding symbol."""

from typing import Tuple

from ..words import Alphabet


def label_count(alphabet: Alphabet) -> int:
    return (alphabet.size + 1) ** 2


def encode_label(x: int, y: int, alphabet: Alphabet) -> int:
    return x * (alphabet.size + 1) + y


def decode_label(label: int, alphabet: Alphabet) -> Tuple[int, int]:
    return divmod(label, alphabet.size + 1)


def format_label(label: int, alphabet: Alphabet) -> str:
    x, y = decode_label(label, alphabet)
    names = alphabet.names + ("$",)
    return f"({names[x]},{names[y]})"
