"""
Text format of rule automata.

    fsa <state_count> <label_count>
    generators <name> ...
    inverses <name> ...
    initial 0
    final 0
    statelabel <id> [<word>]
    label2 <source> <x> <y> <target>

States are numbered breadth first from ``s0`` and arrows are sorted, so isomorphic automata
serialize to identical text. The padding symbol is written as ``-``. A state labelled by the empty
word may leave the word out.
"""

import logging
from typing import Dict, List, Optional, Union

from ..constants import PAD_TOKEN
from ..fsa import FsaFormatError, canonical_numbering
from ..fsa.text_format import parse_ints
from ..words import EMPTY_WORD, Alphabet, Word
from .automaton import FrozenRuleAutomaton, RuleAutomaton
from .labels import decode_label, encode_label, label_count

logger = logging.getLogger(__name__)


def serialize_automaton(automaton: Union[RuleAutomaton, FrozenRuleAutomaton]) -> str:
    frozen = automaton.freeze() if isinstance(automaton, RuleAutomaton) else automaton
    alphabet = frozen.alphabet
    numbering = canonical_numbering(frozen.to_nfa())
    names = alphabet.names + (PAD_TOKEN,)

    lines = [f"fsa {len(numbering)} {label_count(alphabet)}"]
    lines.append(" ".join(("generators",) + alphabet.names))
    lines.append(" ".join(["inverses"] + [alphabet.names[alphabet.inverse(a)] for a in alphabet.letters]))
    lines.append("initial 0")
    lines.append("final 0")
    for state, new_id in sorted(numbering.items(), key=lambda item: item[1]):
        lines.append(f"statelabel {new_id} {alphabet.format_word(frozen.labels[state])}".rstrip())
    arrows = sorted(
        (numbering[s], label, numbering[t]) for s, label, t in frozen.arrows() if s in numbering and t in numbering
    )
    for source, label, target in arrows:
        x, y = decode_label(label, alphabet)
        lines.append(f"label2 {source} {names[x]} {names[y]} {target}")
    return "\n".join(lines) + "\n"


def deserialize_automaton(text: str) -> FrozenRuleAutomaton:
    """Parse the rule automaton text format.

    Raises:
        FsaFormatError: with the offending line number, or 0 if the file as a whole is incomplete.
    """
    header: Optional[List[int]] = None
    generators: Optional[List[str]] = None
    alphabet: Optional[Alphabet] = None
    labels: Dict[int, Word] = {}
    transitions = {}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, *tokens = line.split()
        if header is None:
            if keyword != "fsa" or len(tokens) != 2:
                raise FsaFormatError("the first line must be 'fsa <states> <labels>'", line_number)
            header = parse_ints(tokens, line_number)
        elif keyword == "generators":
            generators = tokens
        elif keyword == "inverses":
            if generators is None or len(tokens) != len(generators):
                raise FsaFormatError("'inverses' must follow 'generators' and name one inverse each", line_number)
            try:
                alphabet = Alphabet.from_names(generators, dict(zip(generators, tokens)))
            except ValueError as e:
                raise FsaFormatError(str(e), line_number) from e
            if label_count(alphabet) != header[1]:
                raise FsaFormatError(f"label count {header[1]} does not match the generators", line_number)
        elif keyword in ("initial", "final"):
            if parse_ints(tokens, line_number) != [0]:
                raise FsaFormatError(f"a rule automaton has {keyword} state 0 only", line_number)
        elif keyword == "statelabel":
            if alphabet is None or len(tokens) not in (1, 2):
                raise FsaFormatError("malformed state label", line_number)
            (state,) = parse_ints(tokens[:1], line_number)
            if not 0 <= state < header[0]:
                raise FsaFormatError(f"state {state} out of range", line_number)
            try:
                labels[state] = alphabet.parse_word(tokens[1]) if len(tokens) == 2 else EMPTY_WORD
            except ValueError as e:
                raise FsaFormatError(str(e), line_number) from e
        elif keyword == "label2":
            if alphabet is None or len(tokens) != 4:
                raise FsaFormatError("malformed two-variable arrow", line_number)
            source, target = parse_ints([tokens[0], tokens[3]], line_number)
            if not (0 <= source < header[0] and 0 <= target < header[0]):
                raise FsaFormatError("arrow refers to a missing state", line_number)
            try:
                x = alphabet.index(tokens[1])
                y = alphabet.pad if tokens[2] == PAD_TOKEN else alphabet.index(tokens[2])
            except ValueError as e:
                raise FsaFormatError(str(e), line_number) from e
            label = encode_label(x, y, alphabet)
            if (source, label) in transitions:
                raise FsaFormatError(f"duplicate arrow out of state {source}", line_number)
            transitions[(source, label)] = target
        else:
            raise FsaFormatError(f"unknown keyword '{keyword}'", line_number)

    if header is None or alphabet is None:
        raise FsaFormatError("missing header or generators; the file is truncated")
    missing = [state for state in range(header[0]) if state not in labels]
    if missing:
        raise FsaFormatError(f"no label for states {missing}; the file is truncated")
    if labels[0]:
        raise FsaFormatError("state 0 must be labelled by the empty word")
    logger.debug(f"Read rule automaton with {header[0]} states and {len(transitions)} arrows")
    return FrozenRuleAutomaton(alphabet, [labels[state] for state in range(header[0])], transitions)
