#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from .context import lamsharing

import os
import unittest

from lamsharing.workbench import language_of, source_language
from lamsharing.utils.terms import LSC, SHARING, BANG
from lamsharing.utils.io import print_term, print_type

import logging
logger = logging.getLogger(__name__)


class WorkbenchTestSuite(unittest.TestCase):
    """The workbench front object."""

    def setUp(self):
        self.bench = lamsharing.Workbench(max_nodes=500)

    def test_instanciation(self):
        logger.debug("Testing workbench instanciation")
        self.assertEqual(self.bench.caps.max_nodes, 500)
        self.assertEqual(self.bench.jobs, 1)
        self.assertEqual(lamsharing.Workbench(jobs=0).jobs, 1)

    def test_version(self):
        logger.debug("Testing the version read by setup.py")
        about = {}
        path = os.path.join(os.path.dirname(lamsharing.__file__), "__version__.py")
        with open(path) as f:
            exec(f.read(), about)
        self.assertEqual(about["__version__"], ".".join(map(str, about["VERSION"])))
        self.assertEqual(about["__version__"], lamsharing.__version__)

    def test_languages(self):
        self.assertEqual(language_of("cbnd"), LSC)
        self.assertEqual(language_of("lsc-fusion"), LSC)
        self.assertEqual(language_of("bang-full"), BANG)
        self.assertEqual(source_language("cbv", inverse=True), SHARING)
        self.assertEqual(source_language("sn"), SHARING)
        with self.assertRaises(ValueError):
            language_of("cbx")

    def test_steps_and_trace(self):
        logger.debug("Testing step listings and traces.")
        t = self.bench.parse("(\\x. x) y", LSC)
        self.assertEqual([str(s.rule) for s in self.bench.steps(t, "cbn")], ["db"])
        taken = self.bench.trace(t, "cbn", strategy="weak")
        self.assertEqual(print_term(taken[-1].reduct), "y")
        self.assertEqual(len(self.bench.trace(t, "cbn", max_steps=1)), 1)
        with self.assertRaises(ValueError):
            self.bench.steps(t, "cbnd", strategy="weak")
        fused = self.bench.steps(self.bench.parse("x[y := z]", LSC), "lsc-fusion")
        self.assertIn("x", [print_term(s.reduct) for s in fused])

    def test_graph(self):
        t = self.bench.parse("(\\x. x) y", LSC)
        graph = self.bench.graph(t, "cbn")
        self.assertEqual(graph.longest_path(), 3)
        self.assertTrue(self.bench.is_normal(self.bench.parse("y", LSC), "cbn"))

    def test_translate_and_type(self):
        logger.debug("Testing translations and typing through the workbench.")
        t = self.bench.parse("~u", SHARING)
        self.assertEqual(print_term(self.bench.translate(t, "sn")), "\\z. u")
        with self.assertRaises(ValueError):
            self.bench.translate(t, "sn", inverse=True)
        A = self.bench.parse_type("!~A", SHARING)
        self.assertEqual(print_type(self.bench.translate_type(A, "sn")),
                         "(iota -> iota) -> A")
        env, A = self.bench.typecheck(self.bench.parse("open(u)", SHARING), SHARING)
        names = self.bench.scheme_names(env, A)
        self.assertEqual([print_type(B, names) for B in env.values()], ["A"])
        self.assertEqual(print_type(A, names), "A")

    def test_compile(self):
        d = self.bench.compile(self.bench.parse("\\'a. 'a", SHARING))
        self.assertEqual(d.rule, "par")


if __name__ == '__main__':
    unittest.main()
