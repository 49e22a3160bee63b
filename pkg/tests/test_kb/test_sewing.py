import unittest

from weldkb.kb import sew
from weldkb.rules import RuleAutomaton
from weldkb.words import Alphabet, Rule


def identity(word):
    return tuple(word)


class SewTest(unittest.TestCase):
    def setUp(self):
        self.alphabet = Alphabet.from_names(["x", "y", "X", "Y"], {"x": "X", "y": "Y"})
        self.w = self.alphabet.parse_word

    def test_sew_into_trivial_automaton(self):
        wdiff = RuleAutomaton(self.alphabet)
        rule = Rule(self.w("yx"), self.w("xy"))
        result = sew(wdiff, rule, identity)
        self.assertEqual(result.states_added, 2)
        self.assertEqual(result.arrows_added, 2)
        self.assertEqual(result.merges, 1)
        self.assertTrue(result.grew)
        self.assertTrue(result.welded)
        self.assertEqual(wdiff.state_count, 2)
        self.assertTrue(wdiff.accepts(rule.lhs, rule.rhs))
        self.assertEqual(wdiff.word_differences(), {(), self.w("Yx")})

    def test_sewing_twice_adds_nothing(self):
        wdiff = RuleAutomaton(self.alphabet)
        rule = Rule(self.w("yx"), self.w("xy"))
        sew(wdiff, rule, identity)
        again = sew(wdiff, rule, identity)
        self.assertFalse(again.grew)
        self.assertFalse(again.welded)

    def test_path_is_marked_needed(self):
        wdiff = RuleAutomaton.from_rules([Rule(self.w("xX"), ()), Rule(self.w("yx"), self.w("xy"))], self.alphabet)
        wdiff.clear_needed()
        sew(wdiff, Rule(self.w("yx"), self.w("xy")), identity)
        wdiff.prune_unneeded()
        self.assertEqual(wdiff.state_count, 2)
        self.assertTrue(wdiff.accepts(self.w("yx"), self.w("xy")))
        self.assertFalse(wdiff.accepts(self.w("xX"), ()))

    def test_gap_closes_by_identification(self):
        wdiff = RuleAutomaton.from_rules([Rule(self.w("xyX"), self.w("y"))], self.alphabet)
        states = wdiff.state_count
        result = sew(wdiff, Rule(self.w("xyyX"), self.w("yy")), identity)
        self.assertEqual((result.states_added, result.arrows_added, result.merges), (1, 1, 1))
        self.assertEqual(wdiff.state_count, states)
        self.assertTrue(wdiff.accepts(self.w("xyyyX"), self.w("yyy")))

    def test_reuses_labelled_state(self):
        wdiff = RuleAutomaton.from_rules([Rule(self.w("Xy"), self.w("yX"))], self.alphabet)

        def commute(word):
            return self.w("xy") if tuple(word) == self.w("yx") else tuple(word)

        result = sew(wdiff, Rule(self.w("Yx"), self.w("xY")), commute)
        self.assertEqual((result.states_added, result.arrows_added, result.merges), (0, 2, 0))
        self.assertEqual(wdiff.state_count, 2)
        self.assertTrue(wdiff.accepts(self.w("Yx"), self.w("xY")))
        self.assertTrue(wdiff.accepts(self.w("Xy"), self.w("yX")))

    def test_reducer_shortens_labels(self):
        wdiff = RuleAutomaton(self.alphabet)

        def cancel(word):
            return () if tuple(word) == self.w("XYxy") else tuple(word)

        result = sew(wdiff, Rule(self.w("yx"), self.w("xy")), cancel)
        self.assertEqual(result.states_added, 1)
        self.assertEqual(result.merges, 0)
        self.assertEqual(wdiff.state_count, 2)


if __name__ == "__main__":
    unittest.main()
