#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright : see accompanying license files for details

"""Types of the three disciplines and the unification engine they share.

Simple LSC types use atoms and ``Arrow``; sharing types use atoms,
``Lolli``, ``TGrant`` and ``TBang``; Bang types use atoms, ``TBang`` and
``Arrow`` with a banged domain. Metavariables (``TMeta``) stand for
unknown types during inference and are solved by a ``Unifier``.
"""

__author__ = "The LamSharing developers"
__credits__ = []
__license__ = "LGPL"
__maintainer__ = "The LamSharing developers"
__version__ = '0.1.0'
__status__ = "production"

import dataclasses
import itertools

from lamsharing.utils import LamSharingError

import logging
logger = logging.getLogger(__name__)


class TypingError(LamSharingError):
    """A term that cannot be given the requested type."""
    pass


class Type(object):
    __slots__ = ()


@dataclasses.dataclass(frozen=True)
class TAtom(Type):
    name: str


@dataclasses.dataclass(frozen=True)
class TMeta(Type):
    """A unification variable."""
    ident: int


@dataclasses.dataclass(frozen=True)
class Arrow(Type):
    dom: Type
    cod: Type


@dataclasses.dataclass(frozen=True)
class Lolli(Type):
    dom: Type
    cod: Type


@dataclasses.dataclass(frozen=True)
class TGrant(Type):
    body: Type


@dataclasses.dataclass(frozen=True)
class TBang(Type):
    body: Type


def type_parts(A):
    """Immediate component types of A."""
    if isinstance(A, (Arrow, Lolli)):
        return (A.dom, A.cod)
    if isinstance(A, (TGrant, TBang)):
        return (A.body,)
    return ()


def rebuild_type(A, parts):
    if isinstance(A, (Arrow, Lolli)):
        return type(A)(parts[0], parts[1])
    if isinstance(A, (TGrant, TBang)):
        return type(A)(parts[0])
    return A


def metas(A):
    """Metavariables of A in order of first appearance."""
    found = []
    stack = [A]
    while stack:
        B = stack.pop()
        if isinstance(B, TMeta):
            if B not in found:
                found.append(B)
        else:
            stack.extend(reversed(type_parts(B)))
    return found


def atoms(A):
    if isinstance(A, TAtom):
        return {A.name}
    result = set()
    for part in type_parts(A):
        result |= atoms(part)
    return result


def letter(n):
    """The n-th display name: A, B, ..., Z, A1, B1, ..."""
    letters = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    if n < len(letters):
        return letters[n]
    return "{0}{1}".format(letters[n % len(letters)], n // len(letters))


def meta_names(types):
    """Display names for the metavariables of some types, by first appearance."""
    names = {}
    for A in types:
        for meta in metas(A):
            if meta.ident not in names:
                names[meta.ident] = letter(len(names))
    return names


def substitute_metas(A, mapping):
    """Replace metavariables by the types given in mapping (keyed by ident)."""
    if isinstance(A, TMeta):
        return mapping.get(A.ident, A)
    parts = type_parts(A)
    if not parts:
        return A
    return rebuild_type(A, [substitute_metas(p, mapping) for p in parts])


def skolemize(A,
              mapping=None):
    """Replace the metavariables of A by fresh atoms.

    Atoms are named A, B, C, ... skipping the names A already uses. The
    mapping (ident -> TAtom) is extended in place when given, so several
    types can be skolemized consistently.
    """
    if mapping is None:
        mapping = {}
    taken = atoms(A) | {B.name for B in mapping.values()}
    counter = itertools.count()
    for meta in metas(A):
        if meta.ident in mapping:
            continue
        name = letter(next(counter))
        while name in taken:
            name = letter(next(counter))
        taken.add(name)
        mapping[meta.ident] = TAtom(name)
    return substitute_metas(A, mapping)


class Unifier(object):
    """First-order unification over types with an occurs check.

    The unifier owns a counter of metavariables and a substitution, and
    is used by exactly one inference run.
    """

    def __init__(self):
        self.solution = {}
        self.counter = itertools.count()
        return None

    def fresh(self):
        return TMeta(next(self.counter))

    def walk(self,
             A):
        while isinstance(A, TMeta) and A.ident in self.solution:
            A = self.solution[A.ident]
        return A

    def resolve(self,
                A):
        """Apply the current substitution everywhere in A."""
        A = self.walk(A)
        parts = type_parts(A)
        if not parts:
            return A
        return rebuild_type(A, [self.resolve(p) for p in parts])

    def _occurs(self, meta, A):
        A = self.walk(A)
        if A == meta:
            return True
        return any(self._occurs(meta, p) for p in type_parts(A))

    def unify(self,
              A,
              B):
        """Make A and B equal or raise TypingError."""
        A = self.walk(A)
        B = self.walk(B)
        if A == B:
            return None
        if isinstance(A, TMeta):
            if self._occurs(A, B):
                raise TypingError("cannot construct the infinite type {0} = {1}".format(
                    self.show(A), self.show(B)))
            self.solution[A.ident] = B
            return None
        if isinstance(B, TMeta):
            return self.unify(B, A)
        if type(A) is not type(B) or isinstance(A, TAtom):
            raise TypingError("type mismatch: {0} against {1}".format(
                self.show(A), self.show(B)))
        for left, right in zip(type_parts(A), type_parts(B)):
            self.unify(left, right)
        return None

    def show(self,
             A):
        # local import, io depends on this module
        from lamsharing.utils.io import print_type
        return print_type(self.resolve(A))
