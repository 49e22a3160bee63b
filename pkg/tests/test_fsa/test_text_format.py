import unittest

from weldkb.fsa import FsaFormatError, Nfa, from_text, to_text


class TextFormatTest(unittest.TestCase):
    def test_to_text(self):
        nfa = Nfa(2, 3, {(1, 2, 0), (0, -1, 1)}, {0}, {1})
        self.assertEqual(to_text(nfa), "fsa 2 3\ninitial 0\nfinal 1\narrow 0 -1 1\narrow 1 2 0\n")

    def test_round_trip(self):
        nfa = Nfa(3, 2, {(0, 0, 1), (1, 1, 2), (2, 0, 0), (0, -1, 2)}, {0, 1}, {2})
        self.assertEqual(from_text(to_text(nfa)), nfa)

    def test_comments_and_blank_lines(self):
        text = "# two states\n\nfsa 2 1\ninitial 0\n# finals\nfinal 1\narrow 0 0 1\n"
        self.assertTrue(from_text(text).accepts((0,)))

    def test_errors(self):
        cases = {
            "": 0,
            "states 2 1\n": 1,
            "fsa 2 1\narrow 0 0\n": 2,
            "fsa 2 1\narrow 0 0 5\n": 2,
            "fsa 2 1\narrow 0 7 1\n": 2,
            "fsa 2 1\ninitial zero\n": 2,
            "fsa 2 1\nstart 0\n": 2,
            "fsa 2 1\ninitial 4\n": 0,
        }
        for text, line_number in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(FsaFormatError) as context:
                    from_text(text)
                self.assertEqual(context.exception.line_number, line_number)
                self.assertIsInstance(context.exception, ValueError)


if __name__ == "__main__":
    unittest.main()
