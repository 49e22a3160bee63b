from contextlib import redirect_stderr, redirect_stdout
import io
import json
import os
import shutil
import tempfile
import unittest

from weldkb.cli import EXIT_ERROR, EXIT_LIMIT, EXIT_OK, build_parser, load_presentation, main
from weldkb.constants import SUMMARY_NAME
from weldkb.fsa import Nfa, canonical_form, from_text, to_text
from weldkb.rules import AutoPresentation, RuleAutomaton, deserialize_automaton, rule_machine, serialize_automaton
from weldkb.words import Rule


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


class CliTest(unittest.TestCase):
    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        self.z2 = AutoPresentation.for_name("z2").alphabet
        w = self.z2.parse_word
        self.two_rules = [Rule(w("xyX"), w("y")), Rule(w("xyyX"), w("yy"))]
        self.two_rule_file = self.path("two.fsa")
        automaton = RuleAutomaton.from_rules(self.two_rules, self.z2).freeze()
        with open(self.two_rule_file, "w", encoding="utf-8") as file:
            file.write(serialize_automaton(automaton))

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def path(self, name):
        return os.path.join(self.temp_dir, name)

    def test_parser(self):
        args = build_parser().parse_args(["run", "s3", "--max-passes", "3", "--no-check-invariants", "--seed", "4"])
        self.assertEqual(args.max_passes, 3)
        self.assertFalse(args.check_invariants)
        self.assertEqual(args.seed, 4)
        self.assertEqual(args.abort_growth_ratio, 0.25)

    def test_run_reduce_verify(self):
        rules_file = self.path("s3.fsa")
        code, out, _ = call(["run", "s3", "--out", rules_file, "--seed", "1"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("s3: stabilized after", out)
        with open(rules_file, encoding="utf-8") as reader:
            self.assertEqual(deserialize_automaton(reader.read()).alphabet.names, ("a", "A", "b", "B"))

        code, out, _ = call(["reduce", "--rules", rules_file, "bb", "abab", "ba"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.split(), ["B", "e", "aB"])

        code, out, _ = call(["verify", "--rules", rules_file, "--presentation", "s3", "--radius", "4"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("0 mismatches", out)

    def test_run_limit_saves_results(self):
        code, out, _ = call(["run", "z2", "--max-passes", "1", "--save-dir", self.temp_dir])
        self.assertEqual(code, EXIT_LIMIT)
        self.assertIn("max_passes", out)
        with open(os.path.join(self.temp_dir, "z2", SUMMARY_NAME), encoding="utf-8") as reader:
            summary = json.load(reader)
        self.assertEqual(summary["limit_hit"], "max_passes")
        self.assertEqual(summary["passes"], 1)

    def test_enumerate(self):
        code, out, _ = call(["enumerate", "--rules", self.two_rule_file, "--max-len", "6"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines(), ["xyX -> y", "xyyX -> yy"])

    def test_reduce_with_welded_rules(self):
        code, out, _ = call(["reduce", "--rules", self.two_rule_file, "xyyyX", "xxyXy"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.split(), ["yyy", "xyy"])

    def test_weld(self):
        machines = [rule_machine(rule, self.z2) for rule in self.two_rules]
        first, second = machines
        offset = first.state_count
        arrows = list(first.arrows) + [(s + offset, a, t + offset) for s, a, t in second.arrows]
        initials = list(first.initials) + [s + offset for s in second.initials]
        finals = list(first.finals) + [s + offset for s in second.finals]
        union = Nfa(offset + second.state_count, first.label_count, arrows, initials, finals)
        fsa_file = self.path("union.fsa")
        with open(fsa_file, "w", encoding="utf-8") as file:
            file.write(to_text(union))

        code, out, _ = call(["weld", fsa_file])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(
            canonical_form(from_text(out)),
            (4, 25, (3,), ((0, 1, 1), (1, 6, 1), (1, 9, 2), (2, 14, 3))),
        )

    def test_errors(self):
        code, _, err = call(["reduce", "--rules", self.path("missing.fsa"), "x"])
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("error:", err)

        code, _, err = call(["run", "z3", "--out", self.path("z3.fsa")])
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("Unrecognized presentation", err)

        code, _, _ = call(["verify", "--rules", self.two_rule_file, "--presentation", "s3"])
        self.assertEqual(code, EXIT_ERROR)

    def test_load_presentation_from_file(self):
        presentation_file = self.path("c3.txt")
        with open(presentation_file, "w", encoding="utf-8") as file:
            file.write("generators: t T\ninverses: t=T\nrelators: ttt\n")
        presentation = load_presentation(presentation_file)
        self.assertEqual(presentation.name, "c3")
        self.assertEqual(presentation.relators, ((0, 0, 0),))
        self.assertEqual(load_presentation("s3"), AutoPresentation.for_name("s3"))


if __name__ == "__main__":
    unittest.main()
