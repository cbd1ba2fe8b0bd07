#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from .context import lamsharing

import unittest

from lamsharing.utils.terms import VarName, LINEAR, UNRESTRICTED, SHARING
from lamsharing.utils.io import parse_term, print_term, print_type, parse_type
from lamsharing.utils.types import TypingError, TAtom, TGrant
from lamsharing.utils import sharing

import logging
logger = logging.getLogger(__name__)


def parse(text):
    return parse_term(text, SHARING)


def listing(steps):
    return [(str(step.rule), print_term(step.reduct)) for step in steps]


class ReductionTestSuite(unittest.TestCase):
    """The four rules of the sharing calculus."""

    def test_request_at_a_distance(self):
        logger.debug("Testing !req through a substitution.")
        steps = sharing.sharing_redexes(parse("open((~'a)[u := !v])"))
        self.assertEqual(listing(steps), [("!req", "'a[u := !v]"),
                                          ("!gc", "open(~'a)")])

    def test_substitution_needs_a_grant(self):
        logger.debug("Testing that !ls only copies answers.")
        self.assertEqual(sharing.sharing_redexes(parse("(open(u) open(u))[u := !v]")), [])
        steps = sharing.sharing_redexes(parse("(open(u) open(u))[u := !~v]"))
        self.assertEqual(listing(steps), [("!ls", "(open(~v) open(u))[u := !~v]"),
                                          ("!ls", "(open(u) open(~v))[u := !~v]")])

    def test_garbage_collection_keeps_context(self):
        steps = sharing.sharing_redexes(parse("u_0[u := (!~v)[w := !v_2]]"))
        self.assertEqual(listing(steps), [("!gc", "u_0[w := !v_2]"),
                                          ("!gc", "u_0[u := !~v]")])

    def test_linear_beta(self):
        steps = sharing.sharing_redexes(parse("(\\'a. 'a) (~w)"))
        self.assertEqual(listing(steps), [("!db", "~w")])

    def test_classify_nf(self):
        logger.debug("Testing the normal form grammar.")
        self.assertEqual(sharing.classify_nf(parse("'a")), "var")
        self.assertEqual(sharing.classify_nf(parse("(open(u) open(u))[u := !v]")), "app")
        self.assertEqual(sharing.classify_nf(parse("!~u")), "banggrant")
        self.assertEqual(sharing.classify_nf(parse("!u")), "bang")
        self.assertEqual(sharing.classify_nf(parse("\\'a. open('a)")), "lam")
        self.assertEqual(sharing.classify_nf(parse("~u")), "grant")
        self.assertIsNone(sharing.classify_nf(parse("open(~'a)")))
        self.assertIsNone(sharing.classify_nf(parse("u_0[u := !v]")))
        self.assertTrue(sharing.sharing_is_nf(parse("open(u)")))


class FlatteningTestSuite(unittest.TestCase):
    """Reassociation of nested substitutions."""

    def test_flatten_class(self):
        logger.debug("Testing flattening classes.")
        self.assertEqual(sharing.flatten_class(parse("'a")), [parse("'a")])
        t = parse("u_0[v := (!~u_1)[w := !u_2]]")
        flat = parse("u_0[v := !~u_1][w := !u_2]")
        self.assertEqual(sharing.flatten_class(t), [t, flat])
        self.assertEqual(sharing.flatten_class(flat), [flat, t])
        t = parse("u_0[v := (!u_1)[u_0 := !u_2]]")
        self.assertEqual(sharing.flatten_class(t), [t])

    def test_equiv_flatten(self):
        t = parse("u_0[v := (!~u_1)[w := !u_2]]")
        self.assertTrue(sharing.equiv_flatten(t, parse("u_0[x := !~u_1][y := !u_2]")))
        self.assertTrue(sharing.equiv_flatten(t, t))
        self.assertFalse(sharing.equiv_flatten(t, parse("u_0[x := !~u_2][y := !u_1]")))


class TypingTestSuite(unittest.TestCase):
    """Linear typing of sharing terms."""

    def test_typing_example(self):
        logger.debug("Testing the typing of a duplicated grant.")
        typing = sharing.typecheck_sharing(None, parse("\\'a. (!~(!u))[u := 'a]"))
        self.assertEqual(print_type(typing.type), "!~A -o !~(!~A)")
        self.assertEqual(typing.consumed, frozenset())
        root = typing.derivation
        self.assertEqual(root.rule, "abs")
        self.assertEqual(root.premises[0].rule, "sub")
        body, argument = root.premises[0].premises
        self.assertEqual((body.rule, argument.rule), ("prom", "lvar"))

    def test_variable_rules(self):
        a = VarName(LINEAR, "a")
        u = VarName(UNRESTRICTED, "u")
        A = TAtom("A")
        typing = sharing.typecheck_sharing(sharing.TypingEnv({}, {a: A}), parse("'a"))
        self.assertEqual((typing.type, typing.consumed), (A, frozenset([a])))
        typing = sharing.typecheck_sharing(sharing.TypingEnv({u: A}, {}), parse("u"))
        self.assertEqual((typing.type, typing.consumed), (TGrant(A), frozenset()))
        self.assertEqual(typing.derivation.rule, "uvar")

    def test_checking_mode(self):
        expected = parse_type("A -o A", SHARING)
        typing = sharing.typecheck_sharing(None, parse("\\'a. 'a"), expected=expected)
        self.assertEqual(typing.type, expected)
        with self.assertRaises(TypingError):
            sharing.typecheck_sharing(None, parse("\\'a. 'a"),
                                      expected=parse_type("A -o B", SHARING))

    def test_linearity_errors(self):
        logger.debug("Testing rejected terms.")
        for text in ["\\'a. 'a 'a",
                     "\\'a. u",
                     "!'a",
                     "u[u := ~v]",
                     "open(\\'a. 'a)"]:
            with self.assertRaises(TypingError):
                sharing.typecheck_sharing(None, parse(text))
        with self.assertRaises(TypingError):
            sharing.typecheck_sharing(sharing.TypingEnv(), parse("'a"))


class WeakEvaluationTestSuite(unittest.TestCase):
    """Weak evaluation of sharing terms."""

    def test_substitution_below_promotion(self):
        steps = sharing.weak_eval_sharing(parse("(!u)[u := !~v]"))
        self.assertEqual(listing(steps), [("!ls", "(!~v)[u := !~v]")])

    def test_evaluation_in_needed_argument(self):
        logger.debug("Testing evaluation inside a needed promotion.")
        steps = sharing.weak_eval_sharing(parse("(u v)[u := !((\\'a. 'a) (~w))]"))
        self.assertEqual(listing(steps), [("!db", "(u v)[u := !~w]")])

    def test_no_evaluation_under_abstraction(self):
        self.assertEqual(sharing.weak_eval_sharing(parse("\\'a. (\\'b. 'b) 'a")), [])

    def test_auxiliary_judgments(self):
        u = VarName(UNRESTRICTED, "u")
        self.assertTrue(sharing.needs(parse("open(u)"), u))
        self.assertFalse(sharing.needs(parse("!u"), u))
        reducts = sharing.substitution_steps(parse("open(u) v"), u, parse("~v"))
        self.assertEqual(list(map(print_term, reducts)), ["open(~v) v"])
        name = sharing.SharingRulename("!sigma", u, parse("~v"))
        self.assertEqual(str(name), "!sigma[u/~v]")


class ProjectionTestSuite(unittest.TestCase):
    """Projection of sharing terms and types to the LSC."""

    def test_to_lsc(self):
        logger.debug("Testing the projection to the LSC.")
        self.assertEqual(print_term(sharing.to_lsc(parse("~u"))), "\\z. u")
        self.assertEqual(print_term(sharing.to_lsc(parse("open('a)"))), "a (\\w. w)")
        self.assertEqual(print_term(sharing.to_lsc(parse("(!u)[u := !~v]"))),
                         "u[u := \\z. v]")

    def test_to_lsc_type(self):
        A = parse_type("!~A", SHARING)
        self.assertEqual(print_type(sharing.to_lsc_type(A)), "(iota -> iota) -> A")
        A = parse_type("A -o ~B", SHARING)
        self.assertEqual(print_type(sharing.to_lsc_type(A)), "A -> (iota -> iota) -> B")


if __name__ == '__main__':
    unittest.main()
