#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright : see accompanying license files for details

"""Multiplicative-exponential linear logic with sharing modalities.

Formulas are printed in ASCII: ``A^`` is a negated atom, ``*`` is the
tensor, ``|`` the par, ``!`` and ``?`` the exponentials, ``~`` the grant
modality and ``~^`` its dual.
"""

__author__ = "The LamSharing developers"
__credits__ = []
__license__ = "LGPL"
__maintainer__ = "The LamSharing developers"
__version__ = '0.1.0'
__status__ = "production"

import collections
import dataclasses
import typing

from lamsharing.utils import LamSharingError
from lamsharing.utils.types import TAtom, TMeta, Lolli, TGrant, TBang, skolemize

import logging
logger = logging.getLogger(__name__)

RULES = ("ax", "cut", "tensor", "par", "promP", "weakW", "contrC",
         "derD", "grantI", "demandI")


class DerivationError(LamSharingError):
    """An invalid typing derivation given for compilation."""
    pass


class Formula(object):
    __slots__ = ()


@dataclasses.dataclass(frozen=True)
class FAtom(Formula):
    name: str
    positive: bool = True


@dataclasses.dataclass(frozen=True)
class Tensor(Formula):
    left: Formula
    right: Formula


@dataclasses.dataclass(frozen=True)
class Par(Formula):
    left: Formula
    right: Formula


@dataclasses.dataclass(frozen=True)
class OfCourse(Formula):
    body: Formula


@dataclasses.dataclass(frozen=True)
class WhyNot(Formula):
    body: Formula


@dataclasses.dataclass(frozen=True)
class GrantF(Formula):
    body: Formula


@dataclasses.dataclass(frozen=True)
class DemandF(Formula):
    body: Formula


_DUALS = {Tensor: Par, Par: Tensor,
          OfCourse: WhyNot, WhyNot: OfCourse,
          GrantF: DemandF, DemandF: GrantF}

_SYMBOLS = {OfCourse: "!", WhyNot: "?", GrantF: "~", DemandF: "~^"}


def neg(A):
    """Linear negation; an involution."""
    if isinstance(A, FAtom):
        return FAtom(A.name, not A.positive)
    if isinstance(A, (Tensor, Par)):
        return _DUALS[type(A)](neg(A.left), neg(A.right))
    return _DUALS[type(A)](neg(A.body))


def format_formula(A):
    if isinstance(A, FAtom):
        return A.name if A.positive else A.name + "^"
    if isinstance(A, (Tensor, Par)):
        symbol = " * " if isinstance(A, Tensor) else " | "
        return _operand(A.left) + symbol + _operand(A.right)
    return _SYMBOLS[type(A)] + _operand(A.body)


def _operand(A):
    text = format_formula(A)
    if isinstance(A, (Tensor, Par)):
        return "(" + text + ")"
    return text


class Sequent(object):
    """A one-sided sequent: a multiset of formulas."""

    def __init__(self,
                 formulas=()):
        self.counts = collections.Counter(formulas)
        return None

    def __add__(self, other):
        result = Sequent()
        result.counts = self.counts + other.counts
        return result

    def add(self,
            *formulas):
        return self + Sequent(formulas)

    def sub(self,
            *formulas):
        """Remove one copy of each formula; raise ValueError if one is missing."""
        result = Sequent()
        result.counts = collections.Counter(self.counts)
        for A in formulas:
            if result.counts[A] <= 0:
                raise ValueError("{0} is not in the sequent".format(format_formula(A)))
            result.counts[A] -= 1
            if not result.counts[A]:
                del result.counts[A]
        return result

    def contains(self, A):
        return self.counts[A] > 0

    def count(self, A):
        return self.counts[A]

    def __iter__(self):
        return iter(sorted(self.counts.elements(), key=format_formula))

    def __len__(self):
        return sum(self.counts.values())

    def __eq__(self, other):
        if not isinstance(other, Sequent):
            return NotImplemented
        return +self.counts == +other.counts

    def __hash__(self):
        return hash(frozenset((+self.counts).items()))

    def __str__(self):
        return ", ".join(format_formula(A) for A in self)

    def __repr__(self):
        return "Sequent(|- {0})".format(self)


@dataclasses.dataclass(frozen=True)
class Derivation(object):
    """A node of a sequent derivation.

    The principal formula is the formula introduced in the conclusion,
    or for a cut the formula of the first premise that is eliminated.
    """
    rule: str
    conclusion: Sequent
    premises: tuple = ()
    principal: typing.Optional[Formula] = None


def format_derivation(d,
                      depth=0):
    lines = ["{0}{1} |- {2}".format("  " * depth, d.rule, d.conclusion)]
    for premise in d.premises:
        lines.append(format_derivation(premise, depth + 1))
    return "\n".join(lines)


def check_derivation(d):
    """Check every node of a derivation.

    Returns
    -------
    list of str
        one message per invalid node, prefixed by the node's path of
        premise indices; empty when the derivation is valid
    """
    errors = []
    _check(d, (), errors)
    return errors


def _check(d, path, errors):
    try:
        message = _check_node(d)
    except ValueError as exc:
        message = str(exc)
    if message is not None:
        errors.append("{0}: {1}: {2}".format(
            "/".join(str(i) for i in path) or "root", d.rule, message))
    for i, premise in enumerate(d.premises):
        _check(premise, path + (i,), errors)
    return None


_ARITY = {"ax": 0, "cut": 2, "tensor": 2, "par": 1, "promP": 1, "weakW": 1,
          "contrC": 1, "derD": 1, "grantI": 1, "demandI": 1}


def _check_node(d):
    if d.rule not in _ARITY:
        return "unknown rule"
    if len(d.premises) != _ARITY[d.rule]:
        return "expected {0} premises".format(_ARITY[d.rule])
    A = d.principal
    if A is None:
        return "missing principal formula"
    conclusion = d.conclusion
    premises = [p.conclusion for p in d.premises]
    if d.rule == "ax":
        if conclusion != Sequent([A, neg(A)]):
            return "an axiom concludes a formula and its negation"
        return None
    if d.rule == "cut":
        expected = premises[0].sub(A) + premises[1].sub(neg(A))
        return None if conclusion == expected else "contexts do not merge"
    if d.rule == "tensor":
        if not isinstance(A, Tensor):
            return "principal formula is not a tensor"
        expected = premises[0].sub(A.left) + premises[1].sub(A.right)
        return None if conclusion == expected.add(A) else "contexts do not merge"
    if d.rule == "par":
        if not isinstance(A, Par):
            return "principal formula is not a par"
        expected = premises[0].sub(A.left, A.right).add(A)
        return None if conclusion == expected else "conclusion does not match"
    if d.rule == "promP":
        if not isinstance(A, OfCourse):
            return "principal formula is not a !-formula"
        if any(not isinstance(B, WhyNot) for B in conclusion.sub(A)):
            return "promotion needs a context of ?-formulas"
        expected = premises[0].sub(A.body).add(A)
        return None if conclusion == expected else "conclusion does not match"
    if d.rule == "weakW":
        if not isinstance(A, WhyNot):
            return "principal formula is not a ?-formula"
        return None if conclusion == premises[0].add(A) else "conclusion does not match"
    if d.rule == "contrC":
        if not isinstance(A, WhyNot):
            return "principal formula is not a ?-formula"
        expected = premises[0].sub(A)
        return None if conclusion == expected else "conclusion does not match"
    if d.rule == "derD":
        if not isinstance(A, WhyNot) or not isinstance(A.body, DemandF):
            return "dereliction concludes a ?~^-formula"
        expected = premises[0].sub(A.body).add(A)
        return None if conclusion == expected else "conclusion does not match"
    modality = GrantF if d.rule == "grantI" else DemandF
    if not isinstance(A, modality):
        return "principal formula has the wrong modality"
    expected = premises[0].sub(A.body).add(A)
    return None if conclusion == expected else "conclusion does not match"


def embed_mell(A):
    """Embed a MELL formula: ! becomes !~ and ? becomes ?~^."""
    if isinstance(A, FAtom):
        return A
    if isinstance(A, (Tensor, Par)):
        return type(A)(embed_mell(A.left), embed_mell(A.right))
    if isinstance(A, OfCourse):
        return OfCourse(GrantF(embed_mell(A.body)))
    if isinstance(A, WhyNot):
        return WhyNot(DemandF(embed_mell(A.body)))
    raise ValueError("not a MELL formula")


def type_to_formula(A):
    if isinstance(A, TAtom):
        return FAtom(A.name)
    if isinstance(A, Lolli):
        return Par(neg(type_to_formula(A.dom)), type_to_formula(A.cod))
    if isinstance(A, TGrant):
        return GrantF(type_to_formula(A.body))
    if isinstance(A, TBang):
        return OfCourse(type_to_formula(A.body))
    if isinstance(A, TMeta):
        raise DerivationError("skolemize types before translating them")
    raise DerivationError("not a sharing type")


def _ax(A):
    return Derivation("ax", Sequent([neg(A), A]), (), A)


def _unary(rule, premise, principal, conclusion):
    return Derivation(rule, conclusion, (premise,), principal)


def _adjust(d, target):
    """Weaken and contract ?-formulas until d concludes target."""
    current = d.conclusion
    for A in set(current.counts) | set(target.counts):
        have, want = current.count(A), target.count(A)
        if have == want:
            continue
        if not isinstance(A, WhyNot) or want == 0:
            raise DerivationError("cannot reach {0} from {1}".format(target, current))
        while have > want:
            current = current.sub(A)
            d = _unary("contrC", d, A, current)
            have -= 1
        while have < want:
            current = current.add(A)
            d = _unary("weakW", d, A, current)
            have += 1
    return d


def compile_typing(typing):
    """Compile a sharing typing into a linear logic derivation.

    Parameters
    ----------
    typing: SharingTyping or TypingNode
        the result of typecheck_sharing, or its derivation

    Returns
    -------
    Derivation
        a derivation of |- ?~^([delta]^), [gamma]^, [type]

    Raises
    ------
    DerivationError
        when the typing derivation is malformed
    """
    node = getattr(typing, "derivation", typing)
    formula = _formulas(node)
    d = _compile(node, formula)
    errors = check_derivation(d)
    if errors:
        raise DerivationError("compiled derivation is invalid: {0}".format(errors[0]))
    return d


def soundness_sequent(typing):
    """The sequent |- ?~^([delta]^), [gamma]^, [type] of a typing's root judgment."""
    node = getattr(typing, "derivation", typing)
    return _target(node, _formulas(node))


def _formulas(root):
    # metavariables of the root judgment are named first, in a fixed order
    mapping = {}
    for _, A in sorted(root.delta.items()):
        skolemize(A, mapping)
    for _, A in sorted(root.gamma.items()):
        skolemize(A, mapping)
    skolemize(root.type, mapping)

    def formula(A):
        return type_to_formula(skolemize(A, mapping))

    return formula


def _target(node, formula):
    formulas = [WhyNot(DemandF(neg(formula(A)))) for A in node.delta.values()]
    formulas.extend(neg(formula(A)) for A in node.gamma.values())
    formulas.append(formula(node.type))
    return Sequent(formulas)


def _compile(node, formula):
    rule = node.rule
    arity = {"lvar": 0, "uvar": 0, "abs": 1, "app": 2, "grant": 1,
             "request": 1, "prom": 1, "sub": 2}
    if rule not in arity or len(node.premises) != arity[rule]:
        raise DerivationError("malformed typing node {0}".format(rule))
    premises = [_compile(p, formula) for p in node.premises]
    A = formula(node.type)
    if rule == "lvar":
        d = _ax(A)
    elif rule == "uvar":
        if not isinstance(A, GrantF):
            raise DerivationError("an unrestricted variable has a ~-type")
        B = A.body
        d = _ax(B)
        demanded = DemandF(neg(B))
        d = _unary("demandI", d, demanded, Sequent([demanded, B]))
        d = _unary("derD", d, WhyNot(demanded), Sequent([WhyNot(demanded), B]))
        d = _unary("grantI", d, A, Sequent([WhyNot(demanded), A]))
    elif rule == "abs":
        d = _unary("par", premises[0], A,
                   premises[0].conclusion.sub(A.left, A.right).add(A))
    elif rule == "app":
        function, argument = premises
        F = formula(node.premises[0].type)
        if not isinstance(F, Par):
            raise DerivationError("applied term does not have a -o type")
        dual = neg(F)
        right = _ax(F.right)
        tensor = Derivation("tensor",
                            argument.conclusion.sub(neg(F.left)) +
                            right.conclusion.sub(neg(F.right)) + Sequent([dual]),
                            (argument, right), dual)
        d = Derivation("cut", function.conclusion.sub(F) + tensor.conclusion.sub(dual),
                       (function, tensor), F)
    elif rule == "grant":
        d = _unary("grantI", premises[0], A, premises[0].conclusion.sub(A.body).add(A))
    elif rule == "request":
        G = formula(node.premises[0].type)
        opener = _ax(A)
        demanded = neg(G)
        opener = _unary("demandI", opener, demanded, Sequent([demanded, A]))
        d = Derivation("cut", premises[0].conclusion.sub(G) + Sequent([A]),
                       (premises[0], opener), G)
    elif rule == "prom":
        d = _unary("promP", premises[0], A, premises[0].conclusion.sub(A.body).add(A))
    else:
        body, argument = premises
        S = formula(node.premises[1].type)
        cut = neg(S)
        d = Derivation("cut", body.conclusion.sub(cut) + argument.conclusion.sub(S),
                       (body, argument), cut)
    return _adjust(d, _target(node, formula))
