#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright : see accompanying license files for details

__author__ = "The LamSharing developers"
__credits__ = []
__license__ = "LGPL"
__maintainer__ = "The LamSharing developers"
__version__ = '0.1.0'
__status__ = "production"


import lark
from lark import Lark
from lark import Transformer

from lamsharing.utils import LamSharingError
from lamsharing.utils.terms import Var, Abs, App, ES, Grant, Request, Prom, Der
from lamsharing.utils.terms import Hole, VarName, children
from lamsharing.utils.terms import LINEAR, UNRESTRICTED, PLAIN
from lamsharing.utils.terms import LSC, SHARING, BANG, LANGUAGES
from lamsharing.utils.types import TAtom, TMeta, Arrow, Lolli, TGrant, TBang
from lamsharing.utils.types import meta_names

import logging
logger = logging.getLogger(__name__)


class ParseError(LamSharingError):
    """Syntax error, located by 1-based line and column."""

    def __init__(self,
                 message,
                 line=None,
                 column=None):
        super(ParseError, self).__init__(message)
        self.line = line
        self.column = column
        return None


class SortError(LamSharingError):
    """A well-formed text that is not a term (or type) of the language."""
    pass


TERM_GRAMMAR = r"""
    ?start: term

    ?term: "\\" binder "." term                  -> lam
         | application

    ?application: application prefixed          -> app
                | prefixed

    ?prefixed: "!" prefixed                      -> prom
             | "~" prefixed                      -> grant
             | postfix

    ?postfix: postfix "[" binder ":=" term "]"   -> es
            | atom

    ?atom: variable
         | "open" "(" term ")"                   -> request
         | "der" "(" term ")"                    -> der
         | "(" term ")"

    variable: LNAME | NAME
    binder: LNAME | NAME

    LNAME: "'" NAME
    NAME: /[A-Za-z][A-Za-z0-9]*(_[0-9]+)?/

    %import common.WS
    %ignore WS
"""

TYPE_GRAMMAR = r"""
    ?start: type

    ?type: prefix "-o" type      -> lolli
         | prefix "->" type      -> arrow
         | prefix

    ?prefix: "!" prefix          -> bang
           | "~" prefix          -> grant
           | "(" type ")"
           | NAME                -> atom

    NAME: /[A-Za-z][A-Za-z0-9]*(_[0-9]+)?/

    %import common.WS
    %ignore WS
"""

_term_parser = Lark(TERM_GRAMMAR, parser="lalr", start="start")
_type_parser = Lark(TYPE_GRAMMAR, parser="lalr", start="start")


def _split_name(text):
    """Split ``x_12`` into ("x", 12); names without index give None."""
    if "_" in text:
        name, index = text.rsplit("_", 1)
        return name, int(index)
    return text, None


class ToTerm(Transformer):
    """Build term nodes from the parse tree of one language."""

    def __init__(self,
                 language):
        super(ToTerm, self).__init__()
        self.language = language
        return None

    def _varname(self, token):
        text = str(token)
        if text.startswith("'"):
            name, index = _split_name(text[1:])
            return VarName(LINEAR, name, index)
        name, index = _split_name(text)
        sort = UNRESTRICTED if self.language == SHARING else PLAIN
        return VarName(sort, name, index)

    def variable(self, items):
        return Var(self._varname(items[0]))

    def binder(self, items):
        return self._varname(items[0])

    def lam(self, items):
        return Abs(items[0], items[1])

    def app(self, items):
        return App(items[0], items[1])

    def es(self, items):
        return ES(items[0], items[1], items[2])

    def prom(self, items):
        return Prom(items[0])

    def grant(self, items):
        return Grant(items[0])

    def request(self, items):
        return Request(items[0])

    def der(self, items):
        return Der(items[0])


class ToType(Transformer):

    def atom(self, items):
        return TAtom(str(items[0]))

    def lolli(self, items):
        return Lolli(items[0], items[1])

    def arrow(self, items):
        return Arrow(items[0], items[1])

    def bang(self, items):
        return TBang(items[0])

    def grant(self, items):
        return TGrant(items[0])


def _parse(parser,
           text):
    try:
        return parser.parse(text)
    except lark.exceptions.UnexpectedEOF:
        lines = text.split("\n")
        line, column = len(lines), len(lines[-1]) + 1
        raise ParseError("unexpected end of input at line {0}, column {1}".format(
            line, column), line, column)
    except lark.exceptions.UnexpectedCharacters as exc:
        raise ParseError("unexpected character {0!r} at line {1}, column {2}".format(
            getattr(exc, "char", ""),
            exc.line, exc.column), exc.line, exc.column)
    except lark.exceptions.UnexpectedToken as exc:
        if exc.token.type == "$END":
            lines = text.split("\n")
            line, column = len(lines), len(lines[-1]) + 1
            raise ParseError("unexpected end of input at line {0}, column {1}".format(
                line, column), line, column)
        raise ParseError("unexpected {0!r} at line {1}, column {2}".format(
            str(exc.token), exc.line, exc.column), exc.line, exc.column)
    except lark.exceptions.UnexpectedInput as exc:
        raise ParseError("syntax error at line {0}, column {1}".format(
            exc.line, exc.column), exc.line, exc.column)


def parse_term(text,
               language):
    """Parse the text of a term of the given language.

    Parameters
    ----------
    text: str
        the concrete syntax
    language: str
        one of 'lsc', 'sharing' or 'bang'

    Returns
    -------
    Term
        the abstract syntax tree

    Raises
    ------
    ParseError
        when the text does not follow the grammar
    SortError
        when the text uses variables or constructors foreign to the language
    """
    if language not in LANGUAGES:
        raise ValueError("unknown language {0}".format(language))
    tree = _parse(_term_parser, text)
    term = ToTerm(language).transform(tree)
    check_language(term, language)
    return term


def check_language(t,
                   language):
    """Raise SortError when t is not a term of the given language."""
    allowed = {LSC: (Var, Abs, App, ES),
               SHARING: (Var, Abs, App, ES, Grant, Request, Prom),
               BANG: (Var, Abs, App, ES, Prom, Der)}[language]
    stack = [t]
    while stack:
        node = stack.pop()
        stack.extend(children(node))
        if isinstance(node, Hole):
            continue
        if not isinstance(node, allowed):
            raise SortError("{0} is not a {1} constructor".format(
                _keyword(node), language))
        if isinstance(node, (Var, Abs, ES)):
            sort = node.var.sort
            if language == SHARING:
                expected = {Var: (LINEAR, UNRESTRICTED),
                            Abs: (LINEAR,),
                            ES: (UNRESTRICTED,)}[type(node)]
            else:
                expected = (PLAIN,)
            if sort not in expected:
                where = {Var: "variable", Abs: "abstraction binder",
                         ES: "substitution binder"}[type(node)]
                raise SortError("{0} {1} {2} is not allowed in a {3} term".format(
                    sort, where, node.var, language))
    return None


def _keyword(node):
    return {Grant: "~", Request: "open", Prom: "!", Der: "der"}.get(
        type(node), type(node).__name__)


def _level(t):
    if isinstance(t, Abs):
        return 0
    if isinstance(t, App):
        return 1
    if isinstance(t, (Prom, Grant)):
        return 2
    if isinstance(t, ES):
        return 3
    return 4


def _render(t, need):
    text = _render_node(t)
    if _level(t) < need:
        return "(" + text + ")"
    return text


def _render_node(t):
    if isinstance(t, Var):
        return str(t.var)
    if isinstance(t, Hole):
        return "[]"
    if isinstance(t, Abs):
        return "\\{0}. {1}".format(t.var, _render(t.body, 0))
    if isinstance(t, App):
        if isinstance(t.fn, (Prom, Grant)):
            fn = "(" + _render_node(t.fn) + ")"
        else:
            fn = _render(t.fn, 1)
        return "{0} {1}".format(fn, _render(t.arg, 3))
    if isinstance(t, Prom):
        return "!" + _render(t.body, 2)
    if isinstance(t, Grant):
        return "~" + _render(t.body, 2)
    if isinstance(t, ES):
        return "{0}[{1} := {2}]".format(_render(t.body, 3), t.var,
                                       _render(t.arg, 0))
    if isinstance(t, Request):
        return "open({0})".format(_render(t.body, 0))
    if isinstance(t, Der):
        return "der({0})".format(_render(t.body, 0))
    raise TypeError("not a term: {0!r}".format(t))


def print_term(t):
    """Return the canonical text of a term; it parses back to the same tree."""
    return _render(t, 0)


def dump_ast(t,
              depth=0):
    """Return the line-per-constructor structured text of a term."""
    pad = "  " * depth
    if isinstance(t, Var):
        line = "{0}Var {1} {2}".format(pad, t.var.sort, _plain_name(t.var))
    elif isinstance(t, (Abs, ES)):
        line = "{0}{1} {2} {3}".format(pad, type(t).__name__, t.var.sort,
                                       _plain_name(t.var))
    else:
        line = "{0}{1}".format(pad, type(t).__name__)
    lines = [line]
    for child in children(t):
        lines.append(dump_ast(child, depth + 1))
    return "\n".join(lines)


def _plain_name(var):
    if var.index is None:
        return var.name
    return "{0}_{1}".format(var.name, var.index)


def parse_type(text,
               language):
    """Parse a type of the given language ('lsc', 'sharing' or 'bang')."""
    if language not in LANGUAGES:
        raise ValueError("unknown language {0}".format(language))
    tree = _parse(_type_parser, text)
    if isinstance(tree, lark.Token):
        result = TAtom(str(tree))
    else:
        result = ToType().transform(tree)
    check_type_language(result, language)
    return result


def check_type_language(A,
                        language):
    """Raise SortError when A is not a type of the given language."""
    if isinstance(A, (TAtom, TMeta)):
        return None
    if language == LSC and isinstance(A, Arrow):
        parts = (A.dom, A.cod)
    elif language == SHARING and isinstance(A, Lolli):
        parts = (A.dom, A.cod)
    elif language == SHARING and isinstance(A, (TGrant, TBang)):
        parts = (A.body,)
    elif language == BANG and isinstance(A, TBang):
        parts = (A.body,)
    elif language == BANG and isinstance(A, Arrow):
        if not isinstance(A.dom, (TBang, TMeta)):
            raise SortError("the domain of a bang arrow must be a !-type")
        parts = (A.dom, A.cod)
    else:
        raise SortError("{0} is not a {1} type".format(print_type(A), language))
    for part in parts:
        check_type_language(part, language)
    return None


def print_type(A,
               names=None):
    """Return the text of a type.

    Metavariables are printed with the letters given by names, or with
    letters assigned by order of appearance when names is None.
    """
    if names is None:
        names = meta_names([A])
    return _render_type(A, names, top=True)


def _render_type(A, names, top=False):
    if isinstance(A, TAtom):
        return A.name
    if isinstance(A, TMeta):
        return names.get(A.ident, "?{0}".format(A.ident))
    if isinstance(A, (Arrow, Lolli)):
        dom = _render_type(A.dom, names)
        if isinstance(A.dom, (Arrow, Lolli)):
            dom = "(" + dom + ")"
        arrow = " -> " if isinstance(A, Arrow) else " -o "
        return dom + arrow + _render_type(A.cod, names, top=True)
    body = _render_type(A.body, names)
    if isinstance(A.body, (Arrow, Lolli)):
        body = "(" + body + ")"
    elif isinstance(A, TGrant) and isinstance(A.body, TBang):
        body = "(" + body + ")"
    return ("!" if isinstance(A, TBang) else "~") + body
