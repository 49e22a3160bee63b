import itertools
import random
import unittest

from weldkb.fsa import Nfa, canonical_form, determinize, enumerate_language, minimize, trim
from weldkb.rules import label_count, rule_machine
from weldkb.welding import WeldWorklist, is_welded, weld
from weldkb.words import Alphabet, Rule


def disjoint_union(*machines: Nfa) -> Nfa:
    arrows, initials, finals = [], [], []
    offset = 0
    for machine in machines:
        arrows.extend((s + offset, a, t + offset) for s, a, t in machine.arrows)
        initials.extend(s + offset for s in machine.initials)
        finals.extend(s + offset for s in machine.finals)
        offset += machine.state_count
    return Nfa(offset, machines[0].label_count, arrows, initials, finals)


def renumber(nfa: Nfa, rng: random.Random) -> Nfa:
    order = list(range(nfa.state_count))
    rng.shuffle(order)
    arrows = [(order[s], a, order[t]) for s, a, t in nfa.arrows]
    initials = {order[s] for s in nfa.initials}
    finals = {order[s] for s in nfa.finals}
    return Nfa(nfa.state_count, nfa.label_count, arrows, initials, finals)


def random_trim_automata(rng: random.Random, count: int):
    found = []
    while len(found) < count:
        states = rng.randrange(2, 8)
        arrows = {(rng.randrange(states), rng.randrange(3), rng.randrange(states)) for _ in range(states * 2)}
        nfa = trim(Nfa(states, 3, arrows, {0}, {rng.randrange(states)}))
        if nfa.state_count:
            found.append(nfa)
    return found


class WeldTest(unittest.TestCase):
    def setUp(self):
        self.alphabet = Alphabet.from_names(["x", "y", "X", "Y"], {"x": "X", "y": "Y"})
        w = self.alphabet.parse_word
        self.union = disjoint_union(
            rule_machine(Rule(w("xyX"), w("y")), self.alphabet),
            rule_machine(Rule(w("xyyX"), w("yy")), self.alphabet),
        )

    def test_two_rule_paths(self):
        welded = weld(self.union)
        self.assertEqual(
            canonical_form(welded),
            (4, 25, (3,), ((0, 1, 1), (1, 6, 1), (1, 9, 2), (2, 14, 3))),
        )
        self.assertEqual(label_count(self.alphabet), 25)
        self.assertTrue(is_welded(welded))
        self.assertFalse(is_welded(self.union))

    def test_result_does_not_depend_on_order(self):
        expected = canonical_form(weld(self.union))
        rng = random.Random(2024)
        for _ in range(10):
            shuffled = renumber(self.union, rng)
            self.assertEqual(canonical_form(weld(shuffled, rng=random.Random(rng.random()))), expected)

    def test_weld_is_idempotent(self):
        welded = weld(self.union)
        self.assertEqual(canonical_form(weld(welded)), canonical_form(welded))

    def test_epsilon_arrows_collapse(self):
        nfa = Nfa(3, 2, {(0, 0, 1), (1, -1, 2), (2, 1, 0)}, {0}, {0})
        welded = weld(nfa)
        self.assertEqual(welded.state_count, 2)
        self.assertTrue(welded.accepts((0, 1, 0, 1)))

    def test_rejects_empty_or_untrimmed(self):
        with self.assertRaises(ValueError):
            weld(Nfa(1, 1, set(), {0}, set()))
        with self.assertRaises(ValueError):
            weld(Nfa(3, 1, {(0, 0, 1)}, {0}, {1}))

    def test_language_grows(self):
        welded = weld(self.union)
        # (x y^k X, y^k) for every k >= 1
        for word in [(1, 9, 14), (1, 6, 9, 14), (1, 6, 6, 6, 9, 14)]:
            self.assertTrue(welded.accepts(word))
        self.assertFalse(self.union.accepts((1, 6, 6, 6, 9, 14)))

    def test_random_automata(self):
        rng = random.Random(77)
        checked = 0
        while checked < 100:
            states = rng.randrange(2, 8)
            arrows = {(rng.randrange(states), rng.randrange(3), rng.randrange(states)) for _ in range(states * 2)}
            nfa = trim(Nfa(states, 3, arrows, {0}, {rng.randrange(states)}))
            if nfa.state_count == 0:
                continue
            checked += 1
            welded = weld(nfa)
            self.assertTrue(is_welded(welded))
            expected = canonical_form(welded)
            for _ in range(3):
                shuffled = renumber(nfa, rng)
                self.assertEqual(canonical_form(weld(shuffled, rng=random.Random(rng.random()))), expected)
            for n in range(5):
                for word in itertools.product(range(3), repeat=n):
                    if nfa.accepts(word):
                        self.assertTrue(welded.accepts(word))

    def test_equal_languages_weld_alike(self):
        for nfa in random_trim_automata(random.Random(78), 100):
            dfa_nfa = trim(minimize(determinize(nfa)).to_nfa())
            self.assertEqual(enumerate_language(dfa_nfa, 6), enumerate_language(nfa, 6))
            self.assertEqual(canonical_form(weld(dfa_nfa)), canonical_form(weld(nfa)))

    def test_welded_automata_are_minimal(self):
        for nfa in random_trim_automata(random.Random(79), 100):
            welded = weld(nfa)
            self.assertEqual(minimize(determinize(welded)).live_state_count, welded.state_count)


class WeldWorklistTest(unittest.TestCase):
    def test_coincidences_cascade(self):
        merged = []
        worklist = WeldWorklist(on_merge=lambda kept, gone: merged.append(gone))
        s = [worklist.add_state() for _ in range(5)]
        worklist.add_arrow(s[0], 0, s[1])
        worklist.add_arrow(s[1], 1, s[2])
        worklist.add_arrow(s[0], 0, s[3])
        worklist.add_arrow(s[3], 1, s[4])
        self.assertEqual(len(worklist), 3)
        self.assertEqual(worklist.merges, 2)
        self.assertEqual(len(merged), 2)
        self.assertEqual(worklist.target(s[3], 1), worklist.find(s[2]))

    def test_backward_coincidence(self):
        worklist = WeldWorklist()
        a, b, c = (worklist.add_state() for _ in range(3))
        worklist.add_arrow(a, 0, c)
        worklist.add_arrow(b, 0, c)
        self.assertEqual(worklist.find(a), worklist.find(b))

    def test_remove_state(self):
        worklist = WeldWorklist()
        a, b, c = (worklist.add_state() for _ in range(3))
        worklist.add_arrow(a, 0, b)
        worklist.add_arrow(b, 1, c)
        worklist.remove_state(b)
        self.assertNotIn(b, worklist)
        self.assertEqual(worklist.arrow_count, 0)
        self.assertIsNone(worklist.source(c, 1))
        self.assertIsNone(worklist.remove_arrow(a, 0))

    def test_to_nfa(self):
        worklist = WeldWorklist()
        a, b = worklist.add_state(), worklist.add_state()
        worklist.add_arrow(a, 3, b)
        worklist.add_arrow(b, 2, a)
        nfa, mapping = worklist.to_nfa(a)
        self.assertEqual(nfa.label_count, 4)
        self.assertEqual(nfa.initials, nfa.finals)
        self.assertTrue(nfa.accepts((3, 2)))
        self.assertEqual(set(mapping), {a, b})


if __name__ == "__main__":
    unittest.main()
