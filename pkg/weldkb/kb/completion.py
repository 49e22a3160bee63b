"""
The Knuth-Bendix driver.

Explicit rules live in a ``Store``; the infinite rule set is held implicitly in the rule
automaton ``rules_n`` built at the end of the previous pass. During a pass every rule met is
minimized and sewn into the mutable word-difference automaton ``wdiff``, which becomes
``rules_n`` for the next pass once its labels settle.
"""

import logging
import random
from typing import Callable, Dict, List, Optional, Tuple

from ..completion_args import CompletionArguments
from ..reduction import ReductionEngine
from ..rules import FrozenRuleAutomaton, Presentation, RuleAutomaton
from ..words import Rule, Word, relator_to_rule
from .minimize import MinimizationOutput, minimize_rule
from .outputs import PassReport, RunResult
from .sewing import sew
from .store import CONSIDERED, DELETE, NEW, THIS, Store

logger = logging.getLogger(__name__)

PassCallback = Callable[["KnuthBendix", PassReport], None]


class CompletionLimitError(RuntimeError):
    """A hard limit of the run was exceeded; ``limit`` names it."""

    def __init__(self, limit: str, message: str):
        self.limit = limit
        super().__init__(message)


class MonotonicityError(AssertionError):
    """A word found reducible at an earlier pass is irreducible now."""


class _Abort(Exception):
    pass


def initial_rules(presentation: Presentation) -> List[Rule]:
    """The special rules ``(x ι(x), ε)`` followed by one rule per non-trivial relator."""
    alphabet = presentation.alphabet
    rules: Dict[Tuple[Word, Word], Rule] = {}
    for x in alphabet.letters:
        rule = Rule((x, alphabet.inverse(x)), ())
        rules.setdefault(rule.key, rule)
    for relator in presentation.relators:
        rule = relator_to_rule(relator, alphabet)
        if rule is None or rule.lhs == rule.rhs:
            logger.debug(f"Relator {alphabet.format_word(relator)} is trivial in the free group")
            continue
        rules.setdefault(rule.key, rule)
    return list(rules.values())


def overlap_words(r1: Rule, r2: Rule) -> List[Tuple[Word, Word]]:
    """The two one-step reductions of every word where a suffix of one left-hand side is a prefix of the other."""
    pairs = []
    orders = [(r1, r2)] if r1 is r2 else [(r1, r2), (r2, r1)]
    for index, (a, b) in enumerate(orders):
        la, lb = a.lhs, b.lhs
        for k in range(1, min(len(la), len(lb)) + 1):
            if la[len(la) - k :] != lb[:k]:
                continue
            # equal left-hand sides overlap completely once
            if k == len(la) == len(lb) and (index == 1 or a.key == b.key):
                continue
            pairs.append((a.rhs + lb[k:], la[: len(la) - k] + b.rhs))
    return pairs


class KnuthBendix:
    """State of one completion run.

    Args:
        presentation (Presentation): the group to complete.
        args (CompletionArguments, optional): limits and heuristics.
        rng (random.Random, optional): shuffles coincidence processing inside ``wdiff``.
        on_pass (callable, optional): called with the driver and the report after every pass.
    """

    def __init__(
        self,
        presentation: Presentation,
        args: Optional[CompletionArguments] = None,
        rng: Optional[random.Random] = None,
        on_pass: Optional[PassCallback] = None,
    ):
        self.presentation = presentation
        self.alphabet = presentation.alphabet
        self.args = args or CompletionArguments()
        self.on_pass = on_pass
        self.store = Store(check_invariants=self.args.check_invariants)
        seeds = initial_rules(presentation)
        for rule in seeds:
            self.store.insert(rule, THIS)
        self.wdiff = RuleAutomaton.from_rules(seeds, self.alphabet, rng=rng).normalize()
        self.wdiff.mark_all_needed()
        self.rules_n: FrozenRuleAutomaton = self.wdiff.freeze()
        self.engine = ReductionEngine(self.rules_n)
        self.pass_no = 0
        self.reports: List[PassReport] = []
        self._growth_base = (0, 0, 0)
        self._compared = 0
        self._sample_rng = random.Random(0)
        self.witnesses: List[Word] = []

    @property
    def growth(self) -> int:
        """States and arrows added to ``wdiff`` plus merges, since the pass started."""
        states, arrows, merges = self._growth_base
        return (
            self.wdiff.states_added - states + self.wdiff.arrows_added - arrows + self.wdiff.merges - merges
        )

    def reduce(self, word: Word) -> Word:
        """R-reduce ``word``: reduction by ``rules_n`` preferring right-hand sides already stored.

        Rules read off the automaton that are not stored yet go to the end of New.
        """
        output = self.engine.reduce(word, self.store.rhs_for)
        for rule in output.discovered:
            if rule not in self.store:
                self.store.insert(rule, NEW)
        return output.normal

    def minimize(self, rule: Rule) -> MinimizationOutput:
        return minimize_rule(rule, self.reduce, self.alphabet)

    def handle_output(self, original: Rule, output: MinimizationOutput) -> None:
        """File the minimized form of ``original`` and retire ``original`` when it changed."""
        source = self.store.where(original)
        result = output.rule
        original.minimized = True
        if not result.is_trivial:
            result.minimal = True
            if sew(self.wdiff, result, self.reduce).grew:
                result.priority = True

        if result is original:
            if source == NEW:
                self.store.move(original, THIS, front=original.priority)
            return

        if not result.is_trivial:
            stored = self.store.get(result)
            if stored is not None:
                stored.minimal = True
                stored.priority = stored.priority or result.priority
            else:
                self.store.insert(result, THIS, front=result.priority)

        if output.lhs_affected:
            self.store.delete(original)
        else:
            self.store.move(original, DELETE)

    def overlap_consequences(self, r1: Rule, r2: Rule) -> List[Rule]:
        """R-reduced critical pairs of ``r1`` and ``r2`` that are not stored yet."""
        found: Dict[Tuple[Word, Word], Rule] = {}
        for left, right in overlap_words(r1, r2):
            u, v = self.reduce(left), self.reduce(right)
            if u == v:
                continue
            rule = Rule.oriented(u, v)
            if rule.key not in found and rule not in self.store:
                found[rule.key] = rule
        return list(found.values())

    def _check_limits(self) -> None:
        if self.wdiff.state_count > self.args.max_states:
            raise CompletionLimitError(
                "max_states", f"wdiff has {self.wdiff.state_count} states, more than {self.args.max_states}"
            )
        if len(self.store) > self.args.max_rules:
            raise CompletionLimitError(
                "max_rules", f"the store holds {len(self.store)} rules, more than {self.args.max_rules}"
            )

    def _should_abort(self) -> bool:
        if not self.args.aborts_enabled:
            return False
        threshold = max(self.args.abort_min_growth, self.args.abort_growth_ratio * self.rules_n.size)
        return self.growth > threshold

    def _minimize_listed(self, listed: str) -> None:
        for rule in self.store.snapshot(listed):
            if self.store.where(rule) != listed or rule.minimal or rule.minimized:
                continue
            self.handle_output(rule, self.minimize(rule))
            self._check_limits()

    def _drain_new(self) -> None:
        examined = 0
        while self.store.size(NEW):
            if examined and self._should_abort():
                raise _Abort()
            rule = self.store.first(NEW)
            examined += 1
            if rule.minimal:
                self.store.move(rule, THIS, front=rule.priority)
                continue
            self.handle_output(rule, self.minimize(rule))
            self._check_limits()

    def _compare(self, rule: Rule, others: List[Rule], listed: str) -> None:
        for other in others:
            if self.store.where(rule) is None:
                return
            if self.store.where(other) != listed:
                continue
            for consequence in self.overlap_consequences(rule, other):
                if consequence in self.store:
                    continue
                if rule.priority or other.priority:
                    self.store.insert(consequence, NEW, front=True)
                    if self._compared and self._should_abort():
                        raise _Abort()
                    output = self.minimize(consequence)
                    self.handle_output(consequence, output)
                    if output.rule.priority and not rule.priority:
                        logger.debug(f"{rule.format(self.alphabet)} gave a priority rule")
                        rule.priority = True
                else:
                    self.store.insert(consequence, NEW)
            self._check_limits()

    def _drain_this(self) -> None:
        while self.store.size(THIS):
            if self._compared and self._should_abort():
                raise _Abort()
            rule = self.store.first(THIS)
            self.store.move(rule, CONSIDERED)
            try:
                self._compare(rule, self.store.snapshot(CONSIDERED), CONSIDERED)
                if rule.priority:
                    self._compare(rule, self.store.snapshot(THIS), THIS)
            except _Abort:
                # its comparisons are incomplete
                if self.store.where(rule) == CONSIDERED:
                    self.store.move(rule, THIS, front=True)
                raise
            self._compared += 1

    def settle_labels(self) -> int:
        """Reduce state labels against the rules ``wdiff`` itself accepts and merge equal labels until stable.

        Returns the number of rounds that changed something.
        """
        rounds = 0
        while True:
            self.wdiff.normalize()
            engine = ReductionEngine(self.wdiff.freeze())
            changed = False
            for state in self.wdiff.states():
                label = self.wdiff.label(state)
                reduced = engine.reduce(label).normal
                if reduced != label:
                    self.wdiff.relabel(state, reduced)
                    changed = True
            seen: Dict[Word, int] = {}
            for state in self.wdiff.states():
                state = self.wdiff.find(state)
                if state not in self.wdiff.worklist:
                    continue
                label = self.wdiff.label(state)
                other = seen.get(label)
                if other is not None and self.wdiff.find(other) != state:
                    self.wdiff.identify(other, state)
                    changed = True
                else:
                    seen[label] = state
            if not changed:
                return rounds
            rounds += 1
            logger.debug(f"Label settling round {rounds}: {self.wdiff.state_count} states")

    def finalize_pass(self) -> bool:
        """Build the next ``rules_n`` from ``wdiff``; returns whether it equals the previous one up to numbering."""
        self.wdiff.prune_unneeded()
        self.settle_labels()
        rules_next = self.wdiff.freeze()
        canonical_equal = rules_next.canonical_form() == self.rules_n.canonical_form()
        self.rules_n = rules_next
        self.wdiff.clear_needed()
        self.engine = ReductionEngine(self.rules_n)
        return canonical_equal

    def is_reducible(self, word: Word) -> bool:
        """Whether ``word`` has a subword that is a left-hand side of ``rules_n`` or of a stored rule."""
        if self.engine.find_reducible_prefix(word) is not None:
            return True
        return any(
            self.store.rhs_for(word[i:j]) is not None for i in range(len(word)) for j in range(i + 1, len(word) + 1)
        )

    def check_monotone(self) -> None:
        """Check that every sampled reducible word is still reducible, then sample fresh ones.

        Witnesses are stored left-hand sides wrapped in random letters.
        """
        for word in self.witnesses:
            if not self.is_reducible(word):
                message = f"{self.alphabet.format_word(word)} is no longer reducible after pass {self.pass_no}"
                logger.error(message)
                raise MonotonicityError(message)
        rules = self.store.rules()
        if not rules:
            return
        samples = self.args.monotone_samples
        letters = self.alphabet.letters
        for _ in range(samples):
            rule = self._sample_rng.choice(rules)
            before = tuple(self._sample_rng.choice(letters) for _ in range(self._sample_rng.randrange(4)))
            after = tuple(self._sample_rng.choice(letters) for _ in range(self._sample_rng.randrange(4)))
            self.witnesses.append(before + rule.lhs + after)
        del self.witnesses[: -4 * samples]

    def kb_pass(self) -> PassReport:
        """Run one pass: delete, minimize Considered and This, drain New, drain This, then rebuild ``rules_n``."""
        self.pass_no += 1
        this_was_empty = self.store.size(THIS) == 0
        self._growth_base = (self.wdiff.states_added, self.wdiff.arrows_added, self.wdiff.merges)
        merges_before = self.wdiff.merges
        for rule in self.store.snapshot(DELETE):
            self.store.delete(rule)
        for rule in self.store:
            rule.minimal = rule.minimized = False

        aborted = False
        self._compared = 0
        # rules left in This by an aborted pass are sewn again before pruning
        self._minimize_listed(CONSIDERED)
        self._minimize_listed(THIS)
        try:
            self._drain_new()
            self._drain_this()
        except _Abort:
            aborted = True
            logger.debug(f"Aborting pass {self.pass_no} after wdiff grew by {self.growth}")
            self.wdiff.mark_all_needed()

        canonical_equal = self.finalize_pass()
        if self.args.check_invariants and self.args.monotone_samples:
            self.check_monotone()
        report = PassReport(
            pass_no=self.pass_no,
            rules=len(self.store),
            wdiff_states=self.rules_n.state_count,
            wdiff_arrows=self.rules_n.arrow_count,
            new=self.store.size(NEW),
            aborted=aborted,
            stable=canonical_equal and not aborted and this_was_empty,
            canonical_equal=canonical_equal,
            merges=self.wdiff.merges - merges_before,
        )
        self.reports.append(report)
        logger.info(report.line())
        if self.on_pass is not None:
            self.on_pass(self, report)
        return report

    def result(self, stabilized: bool = False, limit_hit: Optional[str] = None) -> RunResult:
        return RunResult(
            presentation=self.presentation,
            automaton=self.rules_n,
            rules=self.store.rules(),
            reports=list(self.reports),
            stabilized=stabilized,
            limit_hit=limit_hit,
            args=self.args,
        )

    def run(self) -> RunResult:
        """Run passes until ``stable_passes`` consecutive stable passes or a limit."""
        consecutive = 0
        try:
            while consecutive < self.args.stable_passes:
                if self.pass_no >= self.args.max_passes:
                    raise CompletionLimitError("max_passes", f"no stabilization after {self.pass_no} passes")
                report = self.kb_pass()
                consecutive = consecutive + 1 if report.stable else 0
                self._check_limits()
        except CompletionLimitError as e:
            logger.debug(f"Stopping {self.presentation.name}: {str(e)}")
            return self.result(limit_hit=e.limit)
        return self.result(stabilized=True)


def run(
    presentation: Presentation, args: Optional[CompletionArguments] = None, rng: Optional[random.Random] = None
) -> RunResult:
    """Complete ``presentation`` and return the last rule automaton with the run's history."""
    return KnuthBendix(presentation, args, rng=rng).run()
