"""
Line-oriented automaton text format.

    fsa <state_count> <label_count>
    initial <id> ...
    final <id> ...
    arrow <source> <label> <target>

Label ``-1`` is an epsilon arrow. Blank lines and lines starting with ``#`` are ignored.
"""

from typing import List, Optional, Sequence

from .automata import Nfa


class FsaFormatError(ValueError):
    """A malformed automaton file; ``line_number`` is 1-based, 0 when the whole file is at fault."""

    def __init__(self, message: str, line_number: int = 0):
        self.line_number = line_number
        if line_number:
            message = f"line {line_number}: {message}"
        super().__init__(message)


def to_text(nfa: Nfa) -> str:
    lines = [f"fsa {nfa.state_count} {nfa.label_count}"]
    lines.append(" ".join(["initial"] + [str(s) for s in sorted(nfa.initials)]))
    lines.append(" ".join(["final"] + [str(s) for s in sorted(nfa.finals)]))
    for source, label, target in sorted(nfa.arrows):
        lines.append(f"arrow {source} {label} {target}")
    return "\n".join(lines) + "\n"


def parse_ints(tokens: Sequence[str], line_number: int) -> List[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise FsaFormatError(f"expected integers, got '{' '.join(tokens)}'", line_number) from None


def from_text(text: str) -> Nfa:
    header: Optional[List[int]] = None
    initials: List[int] = []
    finals: List[int] = []
    arrows = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, *tokens = line.split()
        if header is None:
            if keyword != "fsa" or len(tokens) != 2:
                raise FsaFormatError("the first line must be 'fsa <states> <labels>'", line_number)
            header = parse_ints(tokens, line_number)
            continue
        if keyword == "initial":
            initials.extend(parse_ints(tokens, line_number))
        elif keyword == "final":
            finals.extend(parse_ints(tokens, line_number))
        elif keyword == "arrow":
            if len(tokens) != 3:
                raise FsaFormatError("an arrow needs a source, a label and a target", line_number)
            source, label, target = parse_ints(tokens, line_number)
            if not (0 <= source < header[0] and 0 <= target < header[0]):
                raise FsaFormatError(f"arrow refers to a state outside 0..{header[0] - 1}", line_number)
            if not (label == -1 or 0 <= label < header[1]):
                raise FsaFormatError(f"invalid label {label}", line_number)
            arrows.append((source, label, target))
        else:
            raise FsaFormatError(f"unknown keyword '{keyword}'", line_number)
    if header is None:
        raise FsaFormatError("empty automaton file")
    try:
        return Nfa(header[0], header[1], arrows, initials, finals)
    except ValueError as e:
        raise FsaFormatError(str(e)) from e
