#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from .context import lamsharing

import io
import json
import unittest
import unittest.mock

from lamsharing.cli import run_cli

import logging
logger = logging.getLogger(__name__)


def run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


class CommandsTestSuite(unittest.TestCase):
    """Output of the subcommands."""

    def test_parse(self):
        logger.debug("Testing the parse command.")
        self.assertEqual(run("parse", "--lang", "lsc", "(\\x.x)  y"),
                         (0, "(\\x. x) y\n", ""))

    def test_reduce_listing(self):
        code, out, _ = run("reduce", "--calculus", "cbn", "(\\x. x)[y := z] w")
        self.assertEqual(code, 0)
        self.assertEqual(out, "db: x[x := w][y := z]\ngc: (\\x. x) w\n")
        code, out, _ = run("reduce", "--calculus", "cbn", "--deterministic",
                           "(\\x. x)[y := z] w")
        self.assertEqual(out, "db: x[x := w][y := z]\n")

    def test_reduce_trace(self):
        logger.debug("Testing a one-step sharing trace.")
        code, out, _ = run("reduce", "--calculus", "sharing", "--trace",
                           "open((~'a)[u := !v])")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines(), ["open((~'a)[u := !v])", "!req -> 'a[u := !v]"])

    def test_eval(self):
        code, out, _ = run("eval", "--calculus", "cbn", "(\\x. x) y")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines(), ["(\\x. x) y",
                                            "db -> x[x := y]",
                                            "ls -> y[x := y]",
                                            "gc -> y"])

    def test_translate(self):
        logger.debug("Testing translations of terms and types.")
        self.assertEqual(run("translate", "--kind", "cbn", "\\x. x"),
                         (0, "\\'a. open(x)[x := 'a]\n", ""))
        self.assertEqual(run("translate", "--kind", "cbv", "--inverse", "open(u)[u := !x] (!y)"),
                         (0, "x y\n", ""))
        self.assertEqual(run("translate", "--kind", "cbn", "--type", "A -> A"),
                         (0, "!~A -o A\n", ""))
        self.assertEqual(run("translate", "--kind", "bang", "!x"), (0, "!~open(x)\n", ""))

    def test_typecheck(self):
        logger.debug("Testing printed typing judgments.")
        self.assertEqual(run("typecheck", "--lang", "sharing", "\\'a. (!~(!u))[u := 'a]"),
                         (0, "!~A -o !~(!~A)\n", ""))
        self.assertEqual(run("typecheck", "--lang", "lsc", "x y"),
                         (0, "x : B -> A, y : B |- A\n", ""))
        self.assertEqual(run("typecheck", "--lang", "lsc", "--type", "A -> A", "\\x. x"),
                         (0, "A -> A\n", ""))

    def test_nf(self):
        self.assertEqual(run("nf", "--calculus", "sharing", "!~u"), (0, "banggrant\n", ""))
        self.assertEqual(run("nf", "--calculus", "sharing", "open(~'a)"),
                         (0, "not normal\n", ""))
        self.assertEqual(run("nf", "--calculus", "cbv", "x[y := z z]"), (0, "normal\n", ""))

    def test_compile(self):
        code, out, _ = run("compile", "\\'a. 'a")
        self.assertEqual(code, 0)
        self.assertEqual(out, "par |- A^ | A\n  ax |- A, A^\n")

    def test_standard_input(self):
        with unittest.mock.patch("sys.stdin", io.StringIO("x[x := y]\n")):
            self.assertEqual(run("parse", "--lang", "lsc", "-"), (0, "x[x := y]\n", ""))

    def test_check(self):
        logger.debug("Testing the check command and its summary.")
        code, out, _ = run("check", "left-inverse", "--size", "2")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("left-inverse "))
        code, out, _ = run("check", "left-inverse", "--size", "1", "--json-summary")
        self.assertEqual(code, 0)
        summary = json.loads(out)
        self.assertTrue(summary["ok"])
        self.assertEqual([suite["id"] for suite in summary["suites"]], ["left-inverse"])
        self.assertEqual(summary["suites"][0]["failures"], 0)


class ExitCodesTestSuite(unittest.TestCase):
    """Domain errors exit with 1, usage errors with 2."""

    def test_domain_errors(self):
        logger.debug("Testing domain errors.")
        for argv in [("parse", "--lang", "lsc", "\\x."),
                     ("parse", "--lang", "lsc", "'a"),
                     ("typecheck", "--lang", "sharing", "\\'a. 'a 'a"),
                     ("translate", "--kind", "cbs", "--inverse", "~u"),
                     ("translate", "--kind", "bang", "der(x)"),
                     ("reduce", "--calculus", "bang", "der(!x)")]:
            code, out, err = run(*argv)
            self.assertEqual(code, 1, argv)
            self.assertEqual(out, "")
            self.assertTrue(err.startswith("error: "))

    def test_usage_errors(self):
        logger.debug("Testing usage errors.")
        for argv in [(),
                     ("frobnicate", "x"),
                     ("reduce", "x"),
                     ("reduce", "--calculus", "cbnd", "--strategy", "weak", "x"),
                     ("reduce", "--calculus", "cbn", "--max-steps", "-1", "--trace", "x"),
                     ("translate", "--kind", "sn", "--inverse", "x"),
                     ("translate", "--kind", "cbn", "--inverse", "--type", "A"),
                     ("check", "no-such-suite"),
                     ("check", "--size", "-1")]:
            code, out, err = run(*argv)
            self.assertEqual(code, 2, argv)
            self.assertEqual(out, "")
            self.assertIn("error:", err)


if __name__ == '__main__':
    unittest.main()
