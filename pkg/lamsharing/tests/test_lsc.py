#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from .context import lamsharing

import unittest

from lamsharing.utils.terms import Var, Abs, VarName, PLAIN, LSC
from lamsharing.utils.operations import alpha_eq
from lamsharing.utils.io import parse_term, print_term, parse_type
from lamsharing.utils.types import TypingError
from lamsharing.utils import lsc

import logging
logger = logging.getLogger(__name__)


def parse(text):
    return parse_term(text, LSC)


def listing(steps):
    return [(str(step.rule), print_term(step.reduct)) for step in steps]


class RedexesTestSuite(unittest.TestCase):
    """Full reduction of the four strategies."""

    def test_db_at_a_distance(self):
        logger.debug("Testing db through a substitution context.")
        steps = lsc.lsc_redexes(parse("(\\x. x)[y := z] w"), "cbn")
        self.assertEqual(listing(steps), [("db", "x[x := w][y := z]"),
                                          ("gc", "(\\x. x) w")])
        self.assertEqual(steps[0].position, ())
        self.assertEqual(steps[1].position, (0,))

    def test_cbv_needs_strict_values(self):
        self.assertEqual(lsc.lsc_redexes(parse("x[x := y]"), "cbv"), [])
        self.assertEqual(listing(lsc.lsc_redexes(parse("x[x := \\y. y]"), "cbv")),
                         [("lsv", "(\\y. y)[x := \\y. y]")])

    def test_cbs_one_entry_per_occurrence(self):
        logger.debug("Testing lsw on two occurrences.")
        steps = lsc.lsc_redexes(parse("(x x)[x := \\y. y]"), "cbs")
        self.assertEqual(listing(steps), [("lsw", "((\\y. y) x)[x := \\y. y]"),
                                          ("lsw", "(x (\\y. y))[x := \\y. y]")])

    def test_cbnd_rules(self):
        steps = lsc.lsc_redexes(parse("x[y := \\z. z]"), "cbnd")
        self.assertEqual(listing(steps), [("gc", "x")])
        self.assertEqual(lsc.CALCULI["cbnd"], ("db", "lsv", "gc"))

    def test_normal_forms(self):
        self.assertTrue(all(lsc.lsc_is_nf(parse("x"), calc) for calc in lsc.CALCULI))
        self.assertFalse(lsc.lsc_is_nf(parse("x[y := \\z. z]"), "cbv"))
        self.assertTrue(lsc.lsc_is_nf(parse("x[y := z z]"), "cbv"))
        self.assertFalse(lsc.lsc_is_nf(parse("x[y := z z]"), "cbs"))
        with self.assertRaises(ValueError):
            lsc.lsc_redexes(parse("x"), "cbw")

    def test_value_class(self):
        self.assertEqual(lsc.value_class(parse("\\x. x")), lsc.STRICT)
        self.assertEqual(lsc.value_class(parse("x")), lsc.LAX)
        self.assertIsNone(lsc.value_class(parse("x y")))


class WeakEvaluationTestSuite(unittest.TestCase):
    """Weak evaluation and its auxiliary judgments."""

    def test_cbn_head_occurrence(self):
        logger.debug("Testing cbn substitution of the head occurrence only.")
        steps = lsc.weak_eval_steps(parse("(x x y)[x := z]"), "cbn")
        self.assertEqual(listing(steps), [("ls", "(z x y)[x := z]")])

    def test_cbn_db_and_gc(self):
        steps = lsc.weak_eval_steps(parse("((\\x. x) y)[z := w]"), "cbn")
        self.assertEqual({str(step.rule) for step in steps}, {"db", "gc"})
        self.assertEqual(len(lsc.weak_eval_steps(parse("((\\x. x) y)[z := w]"), "cbn",
                                                 deterministic=True)), 1)

    def test_cbs_substitutes_in_needed_argument(self):
        logger.debug("Testing lsw inside a needed substitution.")
        steps = lsc.weak_eval_steps(parse("(x y)[x := z z][z := \\w. w]"), "cbs")
        self.assertEqual(listing(steps), [("lsw", "(x y)[x := (\\w. w) z][z := \\w. w]")])

    def test_no_evaluation_under_abstraction(self):
        self.assertEqual(lsc.weak_eval_steps(parse("\\y. (\\x. x) y"), "cbv"), [])

    def test_cbv_inverse_gc(self):
        logger.debug("Testing the target-directed inverse gc step.")
        steps = lsc.weak_eval_steps(parse("x"), "cbv",
                                    gc_inverse_target=parse("x[y := z]"))
        self.assertEqual(listing(steps), [("gcvlax-1", "x[y := z]")])
        with self.assertRaises(ValueError):
            lsc.weak_eval_steps(parse("x"), "cbn", gc_inverse_target=parse("x[y := z]"))

    def test_extended_cbv_reaches(self):
        t = parse("(\\x. x) y")
        self.assertTrue(lsc.extended_cbv_reaches(t, parse("x[x := y][z := w]"), 3))
        self.assertFalse(lsc.extended_cbv_reaches(t, parse("y"), 3))

    def test_auxiliary_judgments(self):
        logger.debug("Testing the substitution and need judgments.")
        x = VarName(PLAIN, "x")
        value = parse("\\w. w")
        reducts = lsc.substitution_steps(parse("(x y)[y := x]"), "cbv", x, value)
        self.assertEqual(sorted(map(print_term, reducts)),
                         ["((\\w. w) y)[y := x]", "(x y)[y := \\w. w]"])
        reducts = lsc.substitution_steps(parse("(x y)[y := x]"), "cbn", x, value)
        self.assertEqual(list(map(print_term, reducts)), ["((\\w. w) y)[y := x]"])
        self.assertTrue(lsc.needs(parse("(y z)[y := x]"), "cbs", x))
        self.assertFalse(lsc.needs(parse("(z y)[y := x]"), "cbs", x))
        self.assertFalse(lsc.needs(parse("\\w. x"), "cbs", x))

    def test_rulename_text(self):
        x = VarName(PLAIN, "x")
        self.assertEqual(str(lsc.Rulename("db")), "db")
        self.assertEqual(str(lsc.Rulename("sigma", x, parse("\\w. w"))), "sigma[x/\\w. w]")
        self.assertEqual(str(lsc.Rulename("iota", x)), "iota(x)")


class TypingTestSuite(unittest.TestCase):
    """Simple types for LSC terms."""

    def test_checking_and_synthesis(self):
        logger.debug("Testing simple typing.")
        identity = parse("\\x. x")
        with self.assertRaises(TypingError):
            lsc.lsc_typecheck({}, identity)
        A = parse_type("A -> A", LSC)
        self.assertEqual(lsc.lsc_typecheck({}, identity, expected=A), A)
        y = VarName(PLAIN, "y")
        atom = parse_type("A", LSC)
        self.assertEqual(lsc.lsc_typecheck({y: atom}, parse("x[x := y]"), expected=atom),
                         atom)
        with self.assertRaises(TypingError):
            lsc.lsc_typecheck({}, parse("\\x. x x"), expected=A)
        with self.assertRaises(TypingError):
            lsc.lsc_typecheck({}, parse("x"))

    def test_principal_type(self):
        env, A = lsc.lsc_principal_type(parse("x y"))
        x, y = VarName(PLAIN, "x"), VarName(PLAIN, "y")
        self.assertEqual(env[x].dom, env[y])
        self.assertEqual(env[x].cod, A)


class FusionTestSuite(unittest.TestCase):
    """Structural fusion of substitutions."""

    def test_weakening(self):
        self.assertIn(parse("x"), lsc.fusion_steps(parse("x[y := z]")))

    def test_contraction(self):
        reducts = lsc.fusion_steps(parse("x[x := z][y := z]"))
        self.assertTrue(any(alpha_eq(r, parse("y[y := z]")) for r in reducts))

    def test_abstraction(self):
        reducts = lsc.fusion_steps(parse("\\x. y[y := z]"))
        self.assertTrue(any(alpha_eq(r, parse("(\\x. y)[y := z]")) for r in reducts))
        self.assertEqual(lsc.fusion_steps(parse("\\x. y[y := x]")), [])

    def test_hygiene(self):
        t = Abs(VarName(PLAIN, "x"), Var(VarName(PLAIN, "x")))
        self.assertIs(lsc.hygienic(t), t)
        renamed = lsc.hygienic(parse("x[x := x]"))
        self.assertTrue(alpha_eq(renamed, parse("x[x := x]")))
        self.assertNotEqual(renamed.var, VarName(PLAIN, "x"))


if __name__ == '__main__':
    unittest.main()
