#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from .context import lamsharing

import dataclasses
import unittest

from lamsharing.utils.terms import VarName, UNRESTRICTED, SHARING
from lamsharing.utils.io import parse_term
from lamsharing.utils.types import TAtom, TMeta
from lamsharing.utils.sharing import typecheck_sharing, TypingEnv
from lamsharing.utils import mscll
from lamsharing.utils.mscll import FAtom, Tensor, Par, OfCourse, WhyNot, GrantF, DemandF
from lamsharing.utils.mscll import Sequent, Derivation, neg, format_formula

import logging
logger = logging.getLogger(__name__)

A = FAtom("A")
B = FAtom("B")


class FormulaTestSuite(unittest.TestCase):
    """Formulas, negation and sequents."""

    def test_negation(self):
        logger.debug("Testing De Morgan duality.")
        self.assertEqual(neg(Tensor(A, B)), Par(neg(A), neg(B)))
        self.assertEqual(neg(GrantF(A)), DemandF(neg(A)))
        self.assertEqual(neg(OfCourse(GrantF(A))), WhyNot(DemandF(neg(A))))
        for formula in [A, Tensor(A, WhyNot(B)), DemandF(Par(A, B))]:
            self.assertEqual(neg(neg(formula)), formula)

    def test_format(self):
        self.assertEqual(format_formula(Par(neg(A), A)), "A^ | A")
        self.assertEqual(format_formula(Tensor(A, Par(B, A))), "A * (B | A)")
        self.assertEqual(format_formula(WhyNot(DemandF(neg(A)))), "?~^A^")

    def test_embed_mell(self):
        self.assertEqual(mscll.embed_mell(OfCourse(A)), OfCourse(GrantF(A)))
        self.assertEqual(mscll.embed_mell(Par(WhyNot(A), B)), Par(WhyNot(DemandF(A)), B))
        with self.assertRaises(ValueError):
            mscll.embed_mell(GrantF(A))

    def test_sequent_multiset(self):
        logger.debug("Testing sequent arithmetic.")
        sequent = Sequent([A, A, B])
        self.assertEqual(len(sequent), 3)
        self.assertEqual(sequent.sub(A), Sequent([A, B]))
        self.assertEqual(sequent, Sequent([B, A, A]))
        self.assertNotEqual(sequent, Sequent([A, B]))
        self.assertEqual(str(sequent.add(neg(A))), "A, A, A^, B")
        with self.assertRaises(ValueError):
            sequent.sub(neg(B))

    def test_type_to_formula(self):
        self.assertEqual(mscll.type_to_formula(TAtom("A")), A)
        with self.assertRaises(mscll.DerivationError):
            mscll.type_to_formula(TMeta(0))


class DerivationCheckTestSuite(unittest.TestCase):
    """Rule checking of sequent derivations."""

    def axiom(self, formula):
        return Derivation("ax", Sequent([formula, neg(formula)]), (), formula)

    def test_valid_derivation(self):
        logger.debug("Testing a valid par over an axiom.")
        d = Derivation("par", Sequent([Par(neg(A), A)]), (self.axiom(A),), Par(neg(A), A))
        self.assertEqual(mscll.check_derivation(d), [])

    def test_invalid_nodes(self):
        bad = Derivation("ax", Sequent([A, B]), (), A)
        self.assertEqual(len(mscll.check_derivation(bad)), 1)
        wrong = Derivation("par", Sequent([Par(A, A)]), (self.axiom(A),), Par(A, A))
        self.assertTrue(mscll.check_derivation(wrong)[0].startswith("root: par"))
        unknown = Derivation("mix", Sequent([A]), (), A)
        self.assertEqual(mscll.check_derivation(unknown), ["root: mix: unknown rule"])

    def test_plain_dereliction_is_rejected(self):
        logger.debug("Testing that dereliction needs a demand.")
        premise = self.axiom(A)
        d = Derivation("derD", Sequent([WhyNot(A), neg(A)]), (premise,), WhyNot(A))
        errors = mscll.check_derivation(d)
        self.assertEqual(errors, ["root: derD: dereliction concludes a ?~^-formula"])

    def test_promotion_context(self):
        premise = self.axiom(A)
        d = Derivation("promP", Sequent([OfCourse(A), neg(A)]), (premise,), OfCourse(A))
        self.assertEqual(mscll.check_derivation(d),
                         ["root: promP: promotion needs a context of ?-formulas"])


class CompilationTestSuite(unittest.TestCase):
    """Compilation of sharing typings into sequent derivations."""

    def test_identity(self):
        logger.debug("Testing the compilation of the linear identity.")
        typing = typecheck_sharing(None, parse_term("\\'a. 'a", SHARING))
        d = mscll.compile_typing(typing)
        self.assertEqual(mscll.format_derivation(d), "par |- A^ | A\n  ax |- A, A^")

    def test_unrestricted_variable(self):
        u = VarName(UNRESTRICTED, "u")
        typing = typecheck_sharing(TypingEnv({u: TAtom("A")}, {}),
                                   parse_term("u", SHARING))
        d = mscll.compile_typing(typing)
        self.assertEqual(d.rule, "grantI")
        self.assertEqual(str(d.conclusion), "?~^A^, ~A")
        self.assertEqual([d.premises[0].rule, d.premises[0].premises[0].rule],
                         ["derD", "demandI"])

    def test_soundness_sequent(self):
        logger.debug("Testing that compiled derivations conclude the translated judgment.")
        for text in ["\\'a. (!~(!u))[u := 'a]",
                     "\\'a. open('a)",
                     "(\\'a. 'a) (~w)",
                     "(open(u) (!v))[u := !~(\\'b. 'b)]"]:
            typing = typecheck_sharing(None, parse_term(text, SHARING))
            d = mscll.compile_typing(typing)
            self.assertEqual(mscll.check_derivation(d), [])
            self.assertEqual(d.conclusion, mscll.soundness_sequent(typing))

    def test_malformed_typing(self):
        typing = typecheck_sharing(None, parse_term("\\'a. 'a", SHARING))
        broken = dataclasses.replace(typing.derivation, rule="bogus")
        with self.assertRaises(mscll.DerivationError):
            mscll.compile_typing(broken)


if __name__ == '__main__':
    unittest.main()
