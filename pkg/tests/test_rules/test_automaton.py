import unittest

from weldkb.fsa import Nfa, enumerate_language
from weldkb.rules import FrozenRuleAutomaton, RuleAutomaton, rule_machine, word_difference
from weldkb.words import Alphabet, Rule


def two_rule_automaton(alphabet: Alphabet) -> RuleAutomaton:
    """s0 -(x,y)-> A, A -(y,y)-> A, A -(y,$)-> B, B -(X,$)-> s0."""
    w = alphabet.parse_word
    return RuleAutomaton.from_rules([Rule(w("xyX"), w("y")), Rule(w("xyyX"), w("yy"))], alphabet)


class RuleAutomatonTest(unittest.TestCase):
    def setUp(self):
        self.alphabet = Alphabet.from_names(["x", "y", "X", "Y"], {"x": "X", "y": "Y"})
        self.w = self.alphabet.parse_word
        self.automaton = two_rule_automaton(self.alphabet)

    def test_from_rules_welds_paths(self):
        self.assertEqual(self.automaton.state_count, 3)
        self.assertEqual(self.automaton.arrow_count, 4)
        self.assertEqual(
            self.automaton.canonical_form(),
            (3, 25, (0,), ((0, 1, 1), (1, 6, 1), (1, 9, 2), (2, 14, 0))),
        )

    def test_accepts_infinitely_many_rules(self):
        for k in range(1, 6):
            self.assertTrue(self.automaton.accepts(self.w("x" + "y" * k + "X"), self.w("y" * k)))
        self.assertFalse(self.automaton.accepts(self.w("xX"), ()))

    def test_state_labels_are_shortest_differences(self):
        self.assertEqual(self.automaton.label(self.automaton.initial), ())
        self.assertEqual(self.automaton.word_differences(), {(), self.w("Xy"), self.w("YXy")})
        a = self.automaton.target(self.automaton.initial, *self.w("xy"))
        self.assertEqual(self.automaton.label(a), self.w("Xy"))
        self.assertEqual(self.automaton.state_with_label(self.w("Xy")), a)
        self.assertEqual(self.automaton.state_with_label(self.w("YXyy")), a)
        self.assertIsNone(self.automaton.state_with_label(self.w("xxxx")))

    def test_relabel(self):
        a = self.automaton.target(self.automaton.initial, *self.w("xy"))
        self.automaton.relabel(a, self.w("yX"))
        self.assertEqual(self.automaton.label(a), self.w("yX"))
        self.assertEqual(self.automaton.state_with_label(self.w("yX")), a)
        self.assertIsNone(self.automaton.state_with_label(self.w("Xy")))

    def test_word_difference(self):
        self.assertEqual(word_difference(self.w("xy"), self.w("yy"), self.alphabet), self.w("YXyy"))
        self.assertEqual(word_difference(self.w("x"), self.w("x"), self.alphabet), ())

    def test_rule_machine(self):
        machine = rule_machine(Rule(self.w("xyX"), self.w("y")), self.alphabet)
        self.assertEqual(machine.state_count, 4)
        self.assertTrue(machine.accepts((1, 9, 14)))
        with self.assertRaises(ValueError):
            rule_machine(Rule(self.w("x"), self.w("x")), self.alphabet)

    def test_normalize_removes_diagonal_arrows(self):
        automaton = RuleAutomaton.from_rules([Rule(self.w("xyx"), self.w("xxy"))], self.alphabet)
        self.assertTrue(automaton.accepts(self.w("xyx"), self.w("xxy")))
        automaton.normalize()
        self.assertEqual(automaton.canonical_form(), (2, 25, (0,), ((0, 5, 1), (1, 1, 0))))
        self.assertTrue(automaton.accepts(self.w("yx"), self.w("xy")))
        self.assertFalse(automaton.accepts(self.w("xyx"), self.w("xxy")))

    def test_prune_unneeded(self):
        self.automaton.clear_needed()
        self.automaton.prune_unneeded()
        self.assertEqual(self.automaton.state_count, 1)
        self.assertEqual(self.automaton.arrow_count, 0)

    def test_prune_keeps_needed(self):
        self.automaton.mark_all_needed()
        before = self.automaton.canonical_form()
        self.automaton.prune_unneeded()
        self.assertEqual(self.automaton.canonical_form(), before)

    def test_prune_drops_unneeded_arrow(self):
        s0 = self.automaton.initial
        self.automaton.mark_all_needed()
        a = self.automaton.target(s0, *self.w("xy"))
        self.automaton.needed_arrows.discard((a, 6))
        self.automaton.prune_unneeded()
        self.assertEqual(self.automaton.state_count, 3)
        self.assertTrue(self.automaton.accepts(self.w("xyX"), self.w("y")))
        self.assertFalse(self.automaton.accepts(self.w("xyyX"), self.w("yy")))

    def test_freeze_and_thaw(self):
        frozen = self.automaton.freeze()
        self.assertIsInstance(frozen, FrozenRuleAutomaton)
        self.assertEqual(frozen.labels[0], ())
        self.assertEqual(frozen.size, 7)
        self.assertEqual(frozen.canonical_form(), self.automaton.canonical_form())
        self.assertEqual(frozen.forward[0], {0: [(1, 1)]})
        self.assertEqual(frozen.backward[0], {2: [(4, 2)]})
        self.assertTrue(frozen.accepts(self.w("xyyyX"), self.w("yyy")))
        thawed = frozen.thaw()
        self.assertEqual(thawed.canonical_form(), frozen.canonical_form())
        self.assertEqual(thawed.states_added, 0)
        self.assertEqual(thawed.arrows_added, 0)
        self.assertEqual(thawed.word_differences(), self.automaton.word_differences())

    def test_to_nfa(self):
        frozen = self.automaton.freeze()
        for nfa in (self.automaton.to_nfa(), frozen.to_nfa()):
            self.assertIsInstance(nfa, Nfa)
            self.assertEqual(nfa.state_count, 3)
            self.assertEqual(nfa.label_count, 25)
            self.assertEqual(nfa.initials, nfa.finals)
        self.assertEqual(enumerate_language(self.automaton.to_nfa(), 6), enumerate_language(frozen.to_nfa(), 6))

    def test_frozen_row_order(self):
        # x=0, y=1: label 0 is (x,x), label 1 is (x,y)
        frozen = FrozenRuleAutomaton(self.alphabet, [(), (2, 1), (3,)], {(0, 1): 1, (0, 0): 2, (1, 1): 0, (2, 0): 0})
        self.assertEqual(frozen.forward[0][0], [(0, 2), (1, 1)])
        self.assertEqual(frozen.backward[0][0], [(1, 1), (0, 2)])


if __name__ == "__main__":
    unittest.main()
