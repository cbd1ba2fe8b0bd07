#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright : see accompanying license files for details

"""Command-line front end of the workbench.

Program output goes to stdout, diagnostics and logs to stderr. The exit
code is 0 on success, 1 on a domain error (parse, sort, typing, image or
reduction error, or a failing property) and 2 on a usage error.
"""

__author__ = "The LamSharing developers"
__credits__ = []
__license__ = "LGPL"
__maintainer__ = "The LamSharing developers"
__version__ = '0.1.0'
__status__ = "production"

import argparse
import json
import sys

from lamsharing.workbench import Workbench, CALCULI, WEAK_CALCULI, KINDS
from lamsharing.workbench import language_of, source_language
from lamsharing.utils import LamSharingError
from lamsharing.utils.terms import LANGUAGES, SHARING
from lamsharing.utils.io import print_term, dump_ast, print_type
from lamsharing.utils.mscll import format_derivation
from lamsharing.utils.oracle import SUITES, Caps

import logging
logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Raised by the parser instead of exiting."""
    pass


class ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError("{0}\n{1}: error: {2}".format(self.format_usage().rstrip(),
                                                         self.prog, message))


def _parser():
    parser = ArgumentParser(prog="lamsharing",
                            description="Workbench for the sharing linear lambda-calculus.")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log at INFO, twice for DEBUG")
    commands = parser.add_subparsers(dest="command", metavar="command",
                                     parser_class=ArgumentParser)
    commands.required = True

    parse = commands.add_parser("parse", help="parse and print a term")
    parse.add_argument("--lang", choices=LANGUAGES, default=SHARING)
    parse.add_argument("--ast", action="store_true")

    reduce = commands.add_parser("reduce", help="list or follow reduction steps")
    reduce.add_argument("--calculus", choices=CALCULI, required=True)
    reduce.add_argument("--strategy", choices=("full", "weak"), default="full")
    reduce.add_argument("--trace", action="store_true",
                        help="follow the first step instead of listing all of them")
    reduce.add_argument("--max-steps", type=int, default=1,
                        help="length bound of a trace")
    reduce.add_argument("--deterministic", action="store_true")
    reduce.add_argument("--ast", action="store_true")

    evaluate = commands.add_parser("eval", help="weak evaluation to a weak normal form")
    evaluate.add_argument("--calculus", choices=WEAK_CALCULI, required=True)
    evaluate.add_argument("--max-steps", type=int, default=None)
    evaluate.add_argument("--ast", action="store_true")

    translate = commands.add_parser("translate", help="translate a term or a type")
    translate.add_argument("--kind", choices=KINDS, required=True)
    translate.add_argument("--inverse", action="store_true")
    translate.add_argument("--type", action="store_true",
                           help="the input is a type")
    translate.add_argument("--ast", action="store_true")

    typecheck = commands.add_parser("typecheck", help="print the principal typing")
    typecheck.add_argument("--lang", choices=LANGUAGES, default=SHARING)
    typecheck.add_argument("--type", dest="expected", default=None,
                           help="check against this type")

    nf = commands.add_parser("nf", help="normal form test and classification")
    nf.add_argument("--calculus", choices=CALCULI, required=True)

    commands.add_parser("compile", help="checked MSCLL derivation of a sharing typing")

    check = commands.add_parser("check", help="run property suites")
    check.add_argument("suites", nargs="*", metavar="suite")
    check.add_argument("--size", type=int, default=None)
    check.add_argument("--max-nodes", type=int, default=None)
    check.add_argument("--max-steps", type=int, default=None)
    check.add_argument("--jobs", type=int, default=1)
    check.add_argument("--json-summary", action="store_true")

    for name, command in commands.choices.items():
        if name != "check":
            command.add_argument("term", metavar="TERM",
                                 help="input text, or - for standard input")
    return parser


def _read(text):
    if text == "-":
        text = sys.stdin.read()
    return text.strip()


def _render(t, ast):
    return dump_ast(t) if ast else print_term(t)


def _listing(steps, ast):
    lines = []
    for step in steps:
        if ast:
            lines.append("{0}:".format(step.rule))
            lines.append(dump_ast(step.reduct, 1))
        else:
            lines.append("{0}: {1}".format(step.rule, print_term(step.reduct)))
    return lines


def _trace(t, steps, ast):
    lines = [_render(t, ast)]
    for step in steps:
        if ast:
            lines.append("{0} ->".format(step.rule))
            lines.append(dump_ast(step.reduct, 1))
        else:
            lines.append("{0} -> {1}".format(step.rule, print_term(step.reduct)))
    return lines


def _judgment(workbench, env, A):
    names = workbench.scheme_names(env, A)
    text = print_type(A, names)
    if not env:
        return text
    context = ", ".join("{0} : {1}".format(x, print_type(env[x], names))
                        for x in sorted(env))
    return "{0} |- {1}".format(context, text)


def _run_parse(workbench, args):
    t = workbench.parse(_read(args.term), args.lang)
    return [_render(t, args.ast)], 0


def _run_reduce(workbench, args, parser):
    if args.strategy == "weak" and args.calculus not in WEAK_CALCULI:
        parser.error("no weak evaluation for {0}".format(args.calculus))
    if args.max_steps < 0:
        parser.error("--max-steps must be non-negative")
    t = workbench.parse(_read(args.term), language_of(args.calculus))
    if args.trace:
        steps = workbench.trace(t, args.calculus, strategy=args.strategy,
                                max_steps=args.max_steps)
        return _trace(t, steps, args.ast), 0
    steps = workbench.steps(t, args.calculus, strategy=args.strategy,
                            deterministic=args.deterministic)
    return _listing(steps, args.ast), 0


def _run_eval(workbench, args):
    t = workbench.parse(_read(args.term), language_of(args.calculus))
    steps = workbench.trace(t, args.calculus, strategy="weak", max_steps=args.max_steps)
    return _trace(t, steps, args.ast), 0


def _run_translate(workbench, args, parser):
    language = source_language(args.kind, inverse=args.inverse)
    if args.kind == "sn" and args.inverse:
        parser.error("the sn translation has no inverse")
    text = _read(args.term)
    if args.type:
        if args.inverse:
            parser.error("--type has no inverse")
        A = workbench.parse_type(text, language)
        return [print_type(workbench.translate_type(A, args.kind))], 0
    t = workbench.parse(text, language)
    result = workbench.translate(t, args.kind, inverse=args.inverse)
    return [_render(result, args.ast)], 0


def _run_typecheck(workbench, args):
    t = workbench.parse(_read(args.term), args.lang)
    expected = None
    if args.expected is not None:
        expected = workbench.parse_type(args.expected, args.lang)
    env, A = workbench.typecheck(t, args.lang, expected=expected)
    return [_judgment(workbench, env, A)], 0


def _run_nf(workbench, args):
    t = workbench.parse(_read(args.term), language_of(args.calculus))
    if args.calculus == "sharing":
        tag = workbench.classify(t)
        return [tag if tag is not None else "not normal"], 0
    return ["normal" if workbench.is_normal(t, args.calculus) else "not normal"], 0


def _run_compile(workbench, args):
    t = workbench.parse(_read(args.term), SHARING)
    return [format_derivation(workbench.compile(t))], 0


def _run_check(args, parser):
    unknown = [name for name in args.suites if name not in SUITES]
    if unknown:
        parser.error("unknown suite {0}; choose from {1}".format(
            unknown[0], ", ".join(SUITES)))
    if args.size is not None and args.size < 0:
        parser.error("--size must be non-negative")
    overrides = {}
    if args.max_nodes is not None:
        overrides["max_nodes"] = args.max_nodes
    if args.max_steps is not None:
        overrides["max_depth"] = args.max_steps
    if args.size is not None:
        overrides["max_size"] = args.size
    workbench = Workbench(caps=Caps(), jobs=args.jobs, **overrides)
    reports = workbench.check(args.suites, size=args.size)
    if args.json_summary:
        lines = [json.dumps({"suites": [report.to_dict() for report in reports],
                             "ok": all(report.ok for report in reports)},
                            sort_keys=True, indent=2)]
    else:
        lines = [report.format() for report in reports]
    return lines, 0 if all(report.ok for report in reports) else 1


def run_cli(argv,
            stdout=None,
            stderr=None):
    """Run one command.

    Parameters
    ----------
    argv: [str, ...]
        the arguments, without the program name
    stdout, stderr: file-like, optional
        default to sys.stdout and sys.stderr

    Returns
    -------
    int
        the exit code
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as error:
        stderr.write("{0}\n".format(error))
        return 2
    except SystemExit as stop:
        # --help
        return stop.code or 0
    if args.verbose:
        level = logging.INFO if args.verbose == 1 else logging.DEBUG
        logging.getLogger("lamsharing").setLevel(level)
    try:
        if args.command == "check":
            lines, code = _run_check(args, parser)
        else:
            workbench = Workbench()
            if args.command == "parse":
                lines, code = _run_parse(workbench, args)
            elif args.command == "reduce":
                lines, code = _run_reduce(workbench, args, parser)
            elif args.command == "eval":
                lines, code = _run_eval(workbench, args)
            elif args.command == "translate":
                lines, code = _run_translate(workbench, args, parser)
            elif args.command == "typecheck":
                lines, code = _run_typecheck(workbench, args)
            elif args.command == "nf":
                lines, code = _run_nf(workbench, args)
            else:
                lines, code = _run_compile(workbench, args)
    except UsageError as error:
        stderr.write("{0}\n".format(error))
        return 2
    except LamSharingError as error:
        stderr.write("error: {0}\n".format(error))
        return 1
    for line in lines:
        stdout.write("{0}\n".format(line))
    return code


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
