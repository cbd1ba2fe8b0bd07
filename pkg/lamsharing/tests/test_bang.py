#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from .context import lamsharing

import unittest

from lamsharing.utils.terms import VarName, PLAIN, BANG
from lamsharing.utils.io import parse_term, print_term, parse_type
from lamsharing.utils.types import TypingError, Arrow, TBang
from lamsharing.utils import bang

import logging
logger = logging.getLogger(__name__)


def parse(text):
    return parse_term(text, BANG)


def listing(steps):
    return [(str(step.rule), print_term(step.reduct)) for step in steps]


class BangReductionTestSuite(unittest.TestCase):
    """Full and simplified reduction of the Bang calculus."""

    def test_dereliction(self):
        logger.debug("Testing derB through a substitution.")
        steps = bang.bang_redexes(parse("der((!x)[y := !z])"), simplified=False)
        self.assertEqual(listing(steps), [("derB", "x[y := !z]"),
                                          ("gcB", "der(!x)")])
        with self.assertRaises(bang.ReductionError):
            bang.bang_redexes(parse("der(!x)"))

    def test_substitution_of_a_box(self):
        logger.debug("Testing lsB with a substitution around the box.")
        steps = bang.bang_redexes(parse("w[w := (!x)[y := !z]]"))
        self.assertEqual(listing(steps), [("lsB", "x[w := !x][y := !z]"),
                                          ("gcB", "w[w := !x]")])

    def test_beta_and_garbage(self):
        self.assertEqual(listing(bang.bang_redexes(parse("(\\x. x) (!y)"))),
                         [("dbB", "x[x := !y]")])
        self.assertEqual(listing(bang.bang_redexes(parse("x[y := !z]"))), [("gcB", "x")])
        self.assertEqual(bang.bang_redexes(parse("x[y := z]")), [])
        self.assertTrue(bang.bang_is_nf(parse("\\x. x")))
        self.assertFalse(bang.bang_is_nf(parse("der(!x)"), simplified=False))


class UnfoldingTestSuite(unittest.TestCase):
    """Dereliction unfolding of full terms by simplified ones."""

    def test_der_unfold(self):
        logger.debug("Testing the unfolding relation.")
        self.assertTrue(bang.der_unfold(parse("der(!x)"), parse("z[z := !x]")))
        self.assertTrue(bang.der_unfold(parse("x"), parse("x[y := !z]")))
        self.assertFalse(bang.der_unfold(parse("x"), parse("y")))
        self.assertFalse(bang.der_unfold(parse("der(!x)"), parse("der(!x)")))
        self.assertTrue(bang.der_unfold(parse("\\y. der(y)"), parse("\\w. z[z := w]")))

    def test_canonical_unfold(self):
        t = parse("der(!x)")
        s = bang.canonical_unfold(t)
        self.assertEqual(print_term(s), "x_1[x_1 := !x]")
        self.assertTrue(bang.der_unfold(t, s))


class BangTypingTestSuite(unittest.TestCase):
    """Simple types with a bang modality."""

    def test_variables_are_boxed(self):
        logger.debug("Testing Bang variable typing.")
        x = VarName(PLAIN, "x")
        A = parse_type("A", BANG)
        self.assertEqual(bang.bang_typecheck({x: TBang(A)}, parse("x")), A)
        with self.assertRaises(TypingError):
            bang.bang_typecheck({x: TBang(A)}, parse("der(x)"))
        with self.assertRaises(TypingError):
            bang.bang_typecheck({}, parse("x"))

    def test_abstraction(self):
        A = bang.bang_typecheck({}, parse("\\x. x"))
        self.assertIsInstance(A, Arrow)
        self.assertEqual(A.dom, TBang(A.cod))
        expected = parse_type("!B -> B", BANG)
        self.assertEqual(bang.bang_typecheck({}, parse("\\x. x"), expected=expected),
                         expected)

    def test_principal_type(self):
        env, A = bang.bang_principal_type(parse("x y"))
        x, y = VarName(PLAIN, "x"), VarName(PLAIN, "y")
        self.assertEqual(env[x], TBang(Arrow(env[y].body, A)))
        self.assertIsInstance(env[y].body, TBang)


if __name__ == '__main__':
    unittest.main()
