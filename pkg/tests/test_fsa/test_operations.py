import unittest

from weldkb.fsa import (
    Nfa,
    canonical_form,
    canonical_numbering,
    enumerate_language,
    live_states,
    product_intersect,
    reverse,
    trim,
)


def ends_with_one() -> Nfa:
    return Nfa(2, 2, {(0, 0, 0), (0, 1, 0), (0, 1, 1)}, {0}, {1})


def starts_with_zero() -> Nfa:
    return Nfa(2, 2, {(0, 0, 1), (1, 0, 1), (1, 1, 1)}, {0}, {1})


class OperationsTest(unittest.TestCase):
    def test_reverse(self):
        nfa = Nfa(3, 2, {(0, 0, 1), (1, 1, 2)}, {0}, {2})
        reversed_nfa = reverse(nfa)
        self.assertTrue(reversed_nfa.accepts((1, 0)))
        self.assertFalse(reversed_nfa.accepts((0, 1)))
        self.assertEqual(reversed_nfa.initials, frozenset({2}))

    def test_trim(self):
        # state 2 is unreachable and state 3 cannot reach a final state
        nfa = Nfa(4, 1, {(0, 0, 1), (2, 0, 1), (0, 0, 3)}, {0}, {1})
        self.assertEqual(live_states(nfa), {0, 1})
        trimmed = trim(nfa)
        self.assertEqual(trimmed.state_count, 2)
        self.assertEqual(trimmed.arrows, frozenset({(0, 0, 1)}))

    def test_product_intersect(self):
        product = product_intersect(ends_with_one(), starts_with_zero())
        self.assertEqual(enumerate_language(product, 3), {(0, 1), (0, 0, 1), (0, 1, 1)})

    def test_product_label_mismatch(self):
        with self.assertRaises(ValueError):
            product_intersect(ends_with_one(), Nfa(1, 3, set(), {0}, {0}))

    def test_enumerate_language(self):
        self.assertEqual(enumerate_language(ends_with_one(), 2), {(1,), (0, 1), (1, 1)})
        self.assertEqual(enumerate_language(Nfa(1, 1, set(), {0}, set()), 4), set())

    def test_canonical_form_is_invariant_under_renumbering(self):
        a = Nfa(3, 2, {(0, 0, 1), (1, 1, 2), (2, 0, 0)}, {0}, {2})
        b = Nfa(3, 2, {(2, 0, 0), (0, 1, 1), (1, 0, 2)}, {2}, {1})
        self.assertEqual(canonical_form(a), canonical_form(b))
        self.assertEqual(canonical_form(a), (3, 2, (2,), ((0, 0, 1), (1, 1, 2), (2, 0, 0))))

    def test_canonical_form_ignores_unreachable_states(self):
        a = Nfa(2, 1, {(0, 0, 0)}, {0}, {0})
        b = Nfa(3, 1, {(1, 0, 1), (2, 0, 1)}, {1}, {1, 2})
        self.assertEqual(canonical_form(a), canonical_form(b))

    def test_canonical_numbering_requires_determinism(self):
        with self.assertRaises(ValueError):
            canonical_numbering(Nfa(2, 1, {(0, 0, 0), (0, 0, 1)}, {0}, {1}))
        with self.assertRaises(ValueError):
            canonical_numbering(Nfa(2, 1, set(), {0, 1}, {1}))


if __name__ == "__main__":
    unittest.main()
