#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright : see accompanying license files for details

"""Term constructors shared by the three term languages.

LSC terms, sharing terms and Bang terms are built from the same node
classes. The language of a term is given by the sorts of its variables
and by the constructors it uses (see ``lamsharing.utils.io.check_language``).
"""

__author__ = "The LamSharing developers"
__credits__ = []
__license__ = "LGPL"
__maintainer__ = "The LamSharing developers"
__version__ = '0.1.0'
__status__ = "production"

import dataclasses
import typing

import logging
logger = logging.getLogger(__name__)

LINEAR = "linear"
UNRESTRICTED = "unrestricted"
PLAIN = "plain"
SORTS = (LINEAR, UNRESTRICTED, PLAIN)

LSC = "lsc"
SHARING = "sharing"
BANG = "bang"
LANGUAGES = (LSC, SHARING, BANG)


@dataclasses.dataclass(frozen=True, order=True)
class VarName(object):
    """A variable: sort, base name and optional freshness index."""
    sort: str
    name: str
    index: typing.Optional[int] = None

    def __str__(self):
        text = self.name
        if self.index is not None:
            text = "{0}_{1}".format(text, self.index)
        if self.sort == LINEAR:
            text = "'" + text
        return text

    def with_index(self, index):
        return VarName(self.sort, self.name, index)

    def with_sort(self, sort):
        return VarName(sort, self.name, self.index)


class Term(object):
    """Base class of every term node. Nodes are immutable."""
    __slots__ = ()


@dataclasses.dataclass(frozen=True)
class Var(Term):
    var: VarName


@dataclasses.dataclass(frozen=True)
class Abs(Term):
    var: VarName
    body: Term


@dataclasses.dataclass(frozen=True)
class App(Term):
    fn: Term
    arg: Term


@dataclasses.dataclass(frozen=True)
class ES(Term):
    """Explicit substitution ``body[var := arg]``."""
    body: Term
    var: VarName
    arg: Term


@dataclasses.dataclass(frozen=True)
class Grant(Term):
    body: Term


@dataclasses.dataclass(frozen=True)
class Request(Term):
    body: Term


@dataclasses.dataclass(frozen=True)
class Prom(Term):
    body: Term


@dataclasses.dataclass(frozen=True)
class Der(Term):
    body: Term


@dataclasses.dataclass(frozen=True)
class Hole(Term):
    """The hole of a one-hole context."""
    pass


UNARY = (Grant, Request, Prom, Der)
HOLE = Hole()


def lvar(name, index=None):
    return Var(VarName(LINEAR, name, index))


def uvar(name, index=None):
    return Var(VarName(UNRESTRICTED, name, index))


def pvar(name, index=None):
    return Var(VarName(PLAIN, name, index))


def children(t):
    """Return the immediate subterms of t, left to right."""
    if isinstance(t, (Var, Hole)):
        return ()
    if isinstance(t, Abs):
        return (t.body,)
    if isinstance(t, App):
        return (t.fn, t.arg)
    if isinstance(t, ES):
        return (t.body, t.arg)
    return (t.body,)


def rebuild(t, kids):
    """Return a node of the same shape as t with the given subterms."""
    if isinstance(t, (Var, Hole)):
        return t
    if isinstance(t, Abs):
        return Abs(t.var, kids[0])
    if isinstance(t, App):
        return App(kids[0], kids[1])
    if isinstance(t, ES):
        return ES(kids[0], t.var, kids[1])
    return type(t)(kids[0])


def size(t):
    """Number of AST nodes; binders and ESs count one."""
    return 1 + sum(size(c) for c in children(t))


def subterm_at(t, position):
    """Return the subterm found by following a tuple of child indices."""
    for i in position:
        t = children(t)[i]
    return t


def has_der(t):
    if isinstance(t, Der):
        return True
    return any(has_der(c) for c in children(t))


def has_hole(t):
    if isinstance(t, Hole):
        return True
    return any(has_hole(c) for c in children(t))

