import itertools
import unittest

from weldkb.rules import (
    DOUBLE_PADDED,
    GREATER,
    LESS,
    PADDED,
    START,
    decode_label,
    encode_label,
    format_label,
    label_count,
    sl2,
    sl2_accepts_pair,
    sl2_step,
)
from weldkb.words import Alphabet, pad


class LabelTest(unittest.TestCase):
    def setUp(self):
        self.alphabet = Alphabet.from_names(["x", "y", "X", "Y"], {"x": "X", "y": "Y"})

    def test_encode(self):
        pad_symbol = self.alphabet.pad
        self.assertEqual(encode_label(0, 1, self.alphabet), 1)
        self.assertEqual(encode_label(1, 1, self.alphabet), 6)
        self.assertEqual(encode_label(1, pad_symbol, self.alphabet), 9)
        self.assertEqual(encode_label(2, pad_symbol, self.alphabet), 14)
        self.assertEqual(label_count(self.alphabet), 25)

    def test_decode(self):
        for label in range(label_count(self.alphabet)):
            x, y = decode_label(label, self.alphabet)
            self.assertEqual(encode_label(x, y, self.alphabet), label)

    def test_format(self):
        self.assertEqual(format_label(9, self.alphabet), "(y,$)")
        self.assertEqual(format_label(1, self.alphabet), "(x,y)")


class Sl2Test(unittest.TestCase):
    def setUp(self):
        self.alphabet = Alphabet.from_names(["x", "y", "X", "Y"], {"x": "X", "y": "Y"})
        self.pad = self.alphabet.pad

    def test_steps(self):
        self.assertEqual(sl2_step(START, 1, 0, self.pad), GREATER)
        self.assertEqual(sl2_step(START, 0, 1, self.pad), LESS)
        self.assertIsNone(sl2_step(START, 2, 2, self.pad))
        self.assertEqual(sl2_step(START, 2, self.pad, self.pad), PADDED)
        self.assertEqual(sl2_step(LESS, 3, self.pad, self.pad), PADDED)
        self.assertEqual(sl2_step(PADDED, 0, self.pad, self.pad), DOUBLE_PADDED)
        self.assertIsNone(sl2_step(PADDED, 0, 1, self.pad))
        self.assertIsNone(sl2_step(DOUBLE_PADDED, 0, self.pad, self.pad))
        self.assertIsNone(sl2_step(GREATER, self.pad, 0, self.pad))

    def test_automaton_matches_direct_test(self):
        machine = sl2(self.alphabet)
        words = [w for n in range(4) for w in itertools.product(self.alphabet.letters, repeat=n)]
        for u in words:
            for v in words:
                labels = [encode_label(x, y, self.alphabet) for x, y in pad(u, v, self.pad)]
                self.assertEqual(machine.accepts(labels), sl2_accepts_pair(u, v), msg=f"{u} {v}")

    def test_direct_examples(self):
        w = self.alphabet.parse_word
        self.assertTrue(sl2_accepts_pair(w("yx"), w("xy")))
        self.assertTrue(sl2_accepts_pair(w("xyX"), w("y")))
        self.assertFalse(sl2_accepts_pair(w("xyX"), ()))
        self.assertFalse(sl2_accepts_pair(w("yx"), w("yX")))
        self.assertFalse(sl2_accepts_pair(w("xy"), w("yx")))


if __name__ == "__main__":
    unittest.main()
