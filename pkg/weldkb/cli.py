"""Command line entry point: ``weldkb run | reduce | weld | enumerate | verify``"""

import argparse
from concurrent.futures import ThreadPoolExecutor
from dataclasses import fields
from functools import cmp_to_key
import itertools
import logging
import os
from pathlib import Path
import random
import sys
from typing import List, Optional, Sequence

from .completion_args import CompletionArguments
from .constants import WELDKB_RULES_CACHE
from .fsa import from_text, to_text
from .kb import KnuthBendix
from .oracle import FiniteRuleSet, naive_kb, naive_reduce
from .reduction import ReductionEngine
from .rules import (
    AutoPresentation,
    FrozenRuleAutomaton,
    Presentation,
    deserialize_automaton,
    enumerate_rules,
    parse_presentation,
    serialize_automaton,
)
from .welding import weld
from .words import rule_cmp

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_LIMIT = 2


def load_presentation(source: str) -> Presentation:
    """Read a presentation file, or look ``source`` up among the bundled presentations."""
    if os.path.isfile(source):
        text = Path(source).read_text(encoding="utf-8")
        presentation = parse_presentation(text)
        if presentation.name == "presentation":
            presentation = Presentation(presentation.alphabet, presentation.relators, Path(source).stem)
        return presentation
    return AutoPresentation.for_name(source)


def load_rules(path: str) -> FrozenRuleAutomaton:
    return deserialize_automaton(Path(path).read_text(encoding="utf-8"))


def _add_completion_args(parser: argparse.ArgumentParser) -> None:
    for f in fields(CompletionArguments):
        flag = "--" + f.name.replace("_", "-")
        if f.type is bool:
            parser.add_argument(
                "--no-" + f.name.replace("_", "-"),
                dest=f.name,
                action="store_false",
                default=f.default,
                help=f"Turn off: {f.metadata['help']}",
            )
        else:
            parser.add_argument(flag, type=f.type, default=f.default, help=f.metadata["help"])


def _run_command(args: argparse.Namespace) -> int:
    presentation = load_presentation(args.presentation)
    completion_args = CompletionArguments(**{f.name: getattr(args, f.name) for f in fields(CompletionArguments)})
    rng = random.Random(args.seed) if args.seed is not None else None
    result = KnuthBendix(presentation, completion_args, rng=rng).run()
    if args.out:
        Path(args.out).write_text(serialize_automaton(result.automaton), encoding="utf-8")
    else:
        result.save(Path(args.save_dir or WELDKB_RULES_CACHE) / presentation.name)
    if result.limit_hit is not None:
        print(f"{presentation.name}: stopped by {result.limit_hit} after {result.pass_count} passes")
        return EXIT_LIMIT
    print(
        f"{presentation.name}: stabilized after {result.pass_count} passes, "
        f"{result.automaton.state_count} states, {result.automaton.arrow_count} arrows"
    )
    return EXIT_OK


def _reduce_command(args: argparse.Namespace) -> int:
    rules = load_rules(args.rules)
    engine = ReductionEngine(rules)
    for text in args.words:
        word = rules.alphabet.parse_word(text)
        print(rules.alphabet.format_word(engine.reduce(word).normal))
    return EXIT_OK


def _weld_command(args: argparse.Namespace) -> int:
    nfa = from_text(Path(args.fsa).read_text(encoding="utf-8"))
    sys.stdout.write(to_text(weld(nfa)))
    return EXIT_OK


def _enumerate_command(args: argparse.Namespace) -> int:
    rules = load_rules(args.rules)
    alphabet = rules.alphabet
    for rule in sorted(enumerate_rules(rules, args.max_len), key=cmp_to_key(rule_cmp)):
        print(rule.format(alphabet))
    return EXIT_OK


def all_words(letters: Sequence[int], radius: int) -> List[tuple]:
    return [word for length in range(radius + 1) for word in itertools.product(letters, repeat=length)]


def _verify_command(args: argparse.Namespace) -> int:
    rules = load_rules(args.rules)
    presentation = load_presentation(args.presentation)
    if presentation.alphabet.names != rules.alphabet.names:
        raise ValueError(
            f"Generators {' '.join(presentation.alphabet.names)} do not match the rule automaton's "
            f"{' '.join(rules.alphabet.names)}"
        )
    completion = naive_kb(
        FiniteRuleSet.from_presentation(presentation), max_lhs_len=args.max_lhs_len, max_rules=args.max_rules
    )
    if not completion.confluent:
        logger.warning(f"Naive completion is truncated: {completion.reason}")
    words = all_words(list(rules.alphabet.letters), args.radius)
    engine = ReductionEngine(rules)
    with ThreadPoolExecutor(max_workers=args.workers) as executor:
        expected = list(executor.map(lambda w: naive_reduce(completion.rules, w), words))
    alphabet = rules.alphabet
    mismatches = 0
    for word, oracle in zip(words, expected):
        normal = engine.reduce(word).normal
        if normal != oracle:
            mismatches += 1
            print(
                f"mismatch {alphabet.format_word(word)}: "
                f"automaton {alphabet.format_word(normal)}, oracle {alphabet.format_word(oracle)}"
            )
    print(f"checked {len(words)} words, {mismatches} mismatches")
    return EXIT_ERROR if mismatches else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weldkb", description="Knuth-Bendix completion over welded rule automata.")
    parser.add_argument("--log", action="store_true", help="Stream pass reports to stderr.")
    parser.add_argument("--verbose", action="store_true", help="Debug logging.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    run_parser = subparsers.add_parser("run", help="Run completion on a presentation.")
    run_parser.add_argument("presentation", help="Presentation file or bundled presentation name.")
    run_parser.add_argument("--out", default=None, help="Write the rule automaton to this file only.")
    run_parser.add_argument(
        "--save-dir", default=None, help="Directory for the run results (default: WELDKB_RULES_CACHE)."
    )
    run_parser.add_argument("--seed", type=int, default=None, help="Shuffle coincidence processing with this seed.")
    _add_completion_args(run_parser)
    run_parser.set_defaults(func=_run_command)

    reduce_parser = subparsers.add_parser("reduce", help="Reduce words with a rule automaton.")
    reduce_parser.add_argument("--rules", required=True, help="Rule automaton file.")
    reduce_parser.add_argument("words", nargs="+", help="Words to reduce; 'e' is the empty word.")
    reduce_parser.set_defaults(func=_reduce_command)

    weld_parser = subparsers.add_parser("weld", help="Weld an automaton and print the result.")
    weld_parser.add_argument("fsa", help="Automaton file.")
    weld_parser.set_defaults(func=_weld_command)

    enumerate_parser = subparsers.add_parser("enumerate", help="List the rules a rule automaton accepts.")
    enumerate_parser.add_argument("--rules", required=True, help="Rule automaton file.")
    enumerate_parser.add_argument("--max-len", type=int, default=8, help="Bound on |lhs| + |rhs|.")
    enumerate_parser.set_defaults(func=_enumerate_command)

    verify_parser = subparsers.add_parser("verify", help="Compare reductions with a naive completion.")
    verify_parser.add_argument("--rules", required=True, help="Rule automaton file.")
    verify_parser.add_argument("--presentation", required=True, help="Presentation file or bundled name.")
    verify_parser.add_argument("--radius", type=int, default=6, help="Check every word up to this length.")
    verify_parser.add_argument("--max-lhs-len", type=int, default=12, help="Longest rule kept by the naive completion.")
    verify_parser.add_argument("--max-rules", type=int, default=2000, help="Rule bound of the naive completion.")
    verify_parser.add_argument("--workers", type=int, default=4, help="Threads for the oracle reductions.")
    verify_parser.set_defaults(func=_verify_command)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG)
    elif args.log:
        logging.basicConfig(level=logging.INFO)
    try:
        return int(args.func(args))
    except (ValueError, OSError, RuntimeError) as e:
        logger.error(f"{args.command} failed: {str(e)}")
        print(f"error: {str(e)}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
