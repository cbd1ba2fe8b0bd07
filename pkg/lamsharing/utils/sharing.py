#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright : see accompanying license files for details

"""The sharing calculus: rules, flattening, typing, normal forms, weak evaluation.

Sharing terms use linear variables (bound by abstractions and consumed
exactly once) and unrestricted variables (bound by explicit
substitutions). The four rules are::

    !db   (\\'a. t)L s          -> t{'a := s}L
    !req  open((~t)L)           -> tL
    !ls   C<u>[u := (!(~t)L1)L2] -> C<(~t)L1>[u := !(~t)L1]L2
    !gc   t[u := (!s)L]          -> tL          if u is not free in t
"""

__author__ = "The LamSharing developers"
__credits__ = []
__license__ = "LGPL"
__maintainer__ = "The LamSharing developers"
__version__ = '0.1.0'
__status__ = "production"

import dataclasses
import typing

from lamsharing.utils.terms import Var, Abs, App, ES, Grant, Request, Prom
from lamsharing.utils.terms import Term, VarName, LINEAR, PLAIN
from lamsharing.utils.terms import children
from lamsharing.utils.operations import NameSupply, free_vars, all_vars, canonical
from lamsharing.utils.operations import subst_linear, rename, occurrences
from lamsharing.utils.operations import substitute_occurrence, replace_at
from lamsharing.utils.operations import peel, wrap, freshen_context
from lamsharing.utils.lsc import Step, hygienic
from lamsharing.utils.types import TypingError, Unifier
from lamsharing.utils.types import TAtom, TMeta, Arrow, Lolli, TGrant, TBang

import logging
logger = logging.getLogger(__name__)

SHARING_RULES = ("!db", "!req", "!ls", "!gc")
NF_TAGS = ("var", "lam", "app", "req", "grant", "bang", "banggrant")

ONE = Arrow(TAtom("iota"), TAtom("iota"))


@dataclasses.dataclass(frozen=True)
class SharingRulename(object):
    """Label of a weak sharing evaluation step (see lsc.Rulename)."""
    tag: str
    var: typing.Optional[VarName] = None
    payload: typing.Optional[Term] = None

    def __str__(self):
        if self.tag == "!sigma":
            from lamsharing.utils.io import print_term
            return "!sigma[{0}/{1}]".format(self.var, print_term(self.payload))
        if self.tag == "!iota":
            return "!iota({0})".format(self.var)
        return self.tag


@dataclasses.dataclass(frozen=True)
class TypingEnv(object):
    """Unrestricted context delta and linear context gamma."""
    delta: dict = dataclasses.field(default_factory=dict)
    gamma: dict = dataclasses.field(default_factory=dict)


@dataclasses.dataclass(frozen=True)
class TypingNode(object):
    """One node of a typing derivation: delta; gamma |- term : type."""
    rule: str
    delta: dict
    gamma: dict
    term: Term
    type: object
    premises: tuple = ()


@dataclasses.dataclass(frozen=True)
class SharingTyping(object):
    type: object
    consumed: frozenset
    env: TypingEnv
    derivation: TypingNode


def _answer(t):
    """Split (~s)L into (s, L) or return None."""
    core, context = peel(t)
    if isinstance(core, Grant):
        return core, context
    return None


def _root(t, rule):
    if rule == "!db":
        if not isinstance(t, App):
            return []
        core, context = peel(freshen_context(t.fn, free_vars(t.arg)))
        if not isinstance(core, Abs):
            return []
        return [wrap(subst_linear(core.body, core.var, t.arg), context)]
    if rule == "!req":
        if not isinstance(t, Request):
            return []
        core, context = peel(t.body)
        if not isinstance(core, Grant):
            return []
        return [wrap(core.body, context)]
    if not isinstance(t, ES):
        return []
    t = hygienic(t)
    body, u, arg = t.body, t.var, t.arg
    boxed, context = peel(freshen_context(arg, free_vars(body) | {u}))
    if not isinstance(boxed, Prom):
        return []
    if rule == "!gc":
        return [] if u in free_vars(body) else [wrap(body, context)]
    if rule == "!ls":
        if _answer(boxed.body) is None:
            return []
        return [wrap(ES(substitute_occurrence(body, pos, boxed.body), u, boxed), context)
                for pos in occurrences(body, u)]
    raise ValueError("unknown rule {0}".format(rule))


def sharing_redexes(t):
    """Every one-step reduct of a sharing term.

    Parameters
    ----------
    t: Term
        a sharing term

    Returns
    -------
    list of Step
        (rule, reduct, position), redexes in preorder, rules in the order
        !db, !req, !ls, !gc and one !ls entry per substituted occurrence
    """
    steps = []
    _redexes(t, t, (), steps)
    return steps


def _redexes(whole, t, position, steps):
    for rule in SHARING_RULES:
        for reduct in _root(t, rule):
            steps.append(Step(rule, replace_at(whole, position, reduct), position))
    for i, child in enumerate(children(t)):
        _redexes(whole, child, position + (i,), steps)
    return None


def sharing_is_nf(t):
    return not sharing_redexes(t)


def classify_nf(t):
    """Tag of a normal form (var, lam, app, req, grant, bang, banggrant) or None."""
    if isinstance(t, Var):
        return "var"
    if isinstance(t, Abs):
        return "lam" if classify_nf(t.body) is not None else None
    if isinstance(t, App):
        fn = classify_nf(t.fn)
        if fn is None or fn == "lam" or classify_nf(t.arg) is None:
            return None
        return "app"
    if isinstance(t, Request):
        inner = classify_nf(t.body)
        if inner is None or inner == "grant":
            return None
        return "req"
    if isinstance(t, Grant):
        return "grant" if classify_nf(t.body) is not None else None
    if isinstance(t, Prom):
        inner = classify_nf(t.body)
        if inner is None:
            return None
        return "banggrant" if inner == "grant" else "bang"
    if isinstance(t, ES):
        body = classify_nf(t.body)
        arg = classify_nf(t.arg)
        if body is None or arg is None:
            return None
        if t.var in free_vars(t.body):
            return body if arg != "banggrant" else None
        return body if arg not in ("bang", "banggrant") else None
    return None


def _flatten_root(t):
    found = []
    if not isinstance(t, ES):
        return found
    # t[u := s[v := r]]  ->  t[u := s][v := r]
    if isinstance(t.arg, ES) and t.arg.var not in free_vars(t.body):
        inner = t.arg
        found.append(ES(ES(t.body, t.var, inner.body), inner.var, inner.arg))
    # and back
    if isinstance(t.body, ES) and t.var not in free_vars(t.body.body):
        inner = t.body
        found.append(ES(inner.body, inner.var, ES(inner.arg, t.var, t.arg)))
    return found


def _flatten_neighbours(t):
    result = []
    _flatten_at(t, t, (), result)
    return result


def _flatten_at(whole, t, position, result):
    for reduct in _flatten_root(t):
        result.append(replace_at(whole, position, reduct))
    for i, child in enumerate(children(t)):
        _flatten_at(whole, child, position + (i,), result)
    return None


def flatten_class(t):
    """The flattening class of t, by breadth-first closure of the generator.

    The generator re-associates nested substitutions both ways and never
    changes the number of nodes, so the class is finite. Names are taken
    literally: the side condition is checked on the binder as written.
    """
    seen = {t}
    order = [t]
    frontier = [t]
    while frontier:
        following = []
        for r in frontier:
            for s in _flatten_neighbours(r):
                if s not in seen:
                    seen.add(s)
                    order.append(s)
                    following.append(s)
        frontier = following
    return order


def equiv_flatten(t,
                  s):
    """Decide t and s are equal up to flattening and renaming of bound variables."""
    target = canonical(s)
    return any(canonical(r) == target for r in flatten_class(canonical(t)))


def typecheck_sharing(env,
                      t,
                      expected=None):
    """Type a sharing term.

    Parameters
    ----------
    env: TypingEnv
        types of the free variables; None infers them
    t: Term
        a sharing term
    expected: Type
        checking mode when given

    Returns
    -------
    SharingTyping
        the type, the consumed linear variables, the environment used and
        the typing derivation, all with metavariables resolved

    Raises
    ------
    TypingError
        unbound variables, linear variables used twice or never, linear
        variables under a promotion, and type mismatches
    """
    unifier = Unifier()
    if env is None:
        delta = {}
        gamma = {}
        for x in sorted(free_vars(t)):
            if x.sort == LINEAR:
                gamma[x] = unifier.fresh()
            else:
                delta[x] = unifier.fresh()
    else:
        delta = dict(env.delta)
        gamma = dict(env.gamma)
    result, consumed, node = _infer(t, delta, gamma, unifier)
    unused = set(gamma) - consumed
    if unused:
        raise TypingError("linear variable {0} is unused".format(min(unused)))
    if expected is not None:
        unifier.unify(result, expected)
    return SharingTyping(
        type=unifier.resolve(result),
        consumed=frozenset(consumed),
        env=TypingEnv({u: unifier.resolve(A) for u, A in delta.items()},
                      {a: unifier.resolve(A) for a, A in gamma.items()}),
        derivation=_zonk(node, unifier))


def _infer(t, delta, gamma, unifier):
    if isinstance(t, Var) and t.var.sort == LINEAR:
        if t.var not in gamma:
            raise TypingError("unbound linear variable {0}".format(t.var))
        A = gamma[t.var]
        return A, {t.var}, TypingNode("lvar", delta, {t.var: A}, t, A)
    if isinstance(t, Var):
        if t.var not in delta:
            raise TypingError("unbound unrestricted variable {0}".format(t.var))
        A = TGrant(delta[t.var])
        return A, set(), TypingNode("uvar", delta, {}, t, A)
    if isinstance(t, Abs):
        alpha = unifier.fresh()
        inner = dict(gamma)
        inner[t.var] = alpha
        B, consumed, premise = _infer(t.body, delta, inner, unifier)
        if t.var not in consumed:
            raise TypingError("linear variable {0} is unused".format(t.var))
        consumed = consumed - {t.var}
        A = Lolli(alpha, B)
        return A, consumed, TypingNode("abs", delta, _restrict(gamma, consumed), t, A,
                                       (premise,))
    if isinstance(t, App):
        F, left, p1 = _infer(t.fn, delta, gamma, unifier)
        B, right, p2 = _infer(t.arg, delta, gamma, unifier)
        _disjoint(left, right)
        A = unifier.fresh()
        unifier.unify(F, Lolli(B, A))
        consumed = left | right
        return A, consumed, TypingNode("app", delta, _restrict(gamma, consumed), t, A,
                                       (p1, p2))
    if isinstance(t, Grant):
        B, consumed, premise = _infer(t.body, delta, gamma, unifier)
        A = TGrant(B)
        return A, consumed, TypingNode("grant", delta, _restrict(gamma, consumed), t, A,
                                       (premise,))
    if isinstance(t, Request):
        B, consumed, premise = _infer(t.body, delta, gamma, unifier)
        A = unifier.fresh()
        unifier.unify(B, TGrant(A))
        return A, consumed, TypingNode("request", delta, _restrict(gamma, consumed), t, A,
                                       (premise,))
    if isinstance(t, Prom):
        B, consumed, premise = _infer(t.body, delta, gamma, unifier)
        if consumed:
            raise TypingError("linear variable {0} occurs under a promotion".format(
                min(consumed)))
        A = TBang(B)
        return A, consumed, TypingNode("prom", delta, {}, t, A, (premise,))
    if isinstance(t, ES):
        S, right, p2 = _infer(t.arg, delta, gamma, unifier)
        alpha = unifier.fresh()
        unifier.unify(S, TBang(TGrant(alpha)))
        inner = dict(delta)
        inner[t.var] = alpha
        A, left, p1 = _infer(t.body, inner, gamma, unifier)
        _disjoint(left, right)
        consumed = left | right
        return A, consumed, TypingNode("sub", delta, _restrict(gamma, consumed), t, A,
                                       (p1, p2))
    raise TypingError("not a sharing term")


def _disjoint(left, right):
    shared = left & right
    if shared:
        raise TypingError("linear variable {0} is used twice".format(min(shared)))
    return None


def _restrict(gamma, consumed):
    return {a: gamma[a] for a in consumed}


def _zonk(node, unifier):
    return TypingNode(node.rule,
                      {u: unifier.resolve(A) for u, A in node.delta.items()},
                      {a: unifier.resolve(A) for a, A in node.gamma.items()},
                      node.term,
                      unifier.resolve(node.type),
                      tuple(_zonk(p, unifier) for p in node.premises))


def needs(t,
          u):
    """Decide t ->!iota(u) t: u occurs in evaluation position of t."""
    if isinstance(t, Var):
        return t.var == u
    if isinstance(t, App):
        return needs(t.fn, u)
    if isinstance(t, Request):
        return needs(t.body, u)
    if isinstance(t, ES):
        if t.var != u and needs(t.body, u):
            return True
        if needs(t.arg, u):
            return True
        return isinstance(t.arg, Prom) and needs(t.body, t.var) and needs(t.arg.body, u)
    return False


def substitution_steps(t,
                       u,
                       payload):
    """Reducts of t ->!sigma[u/payload] t', payload being an answer (~s)L."""
    result = []
    for reduct in _sigma(t, u, payload, free_vars(payload) | {u}):
        if reduct not in result:
            result.append(reduct)
    return result


def _sigma(t, u, payload, fv_rho):
    if isinstance(t, Var):
        return [payload] if t.var == u else []
    if isinstance(t, Prom):
        return [Prom(payload)] if t.body == Var(u) else []
    if isinstance(t, App):
        return [App(fn, t.arg) for fn in _sigma(t.fn, u, payload, fv_rho)]
    if isinstance(t, Request):
        return [Request(body) for body in _sigma(t.body, u, payload, fv_rho)]
    if not isinstance(t, ES):
        return []
    result = []
    if t.var != u:
        t = _away(t, fv_rho)
        result.extend(ES(body, t.var, t.arg)
                      for body in _sigma(t.body, u, payload, fv_rho))
    result.extend(ES(t.body, t.var, arg)
                  for arg in _sigma(t.arg, u, payload, fv_rho))
    if isinstance(t.arg, Prom) and needs(t.body, t.var):
        result.extend(ES(t.body, t.var, Prom(arg))
                      for arg in _sigma(t.arg.body, u, payload, fv_rho))
    return result


def _away(t, avoid):
    if t.var not in avoid:
        return t
    supply = NameSupply(set(avoid) | all_vars(t))
    new = supply.fresh(t.var)
    return ES(rename(t.body, t.var, new), new, t.arg)


def weak_eval_sharing(t,
                      deterministic=False):
    """One-step weak evaluation of a sharing term.

    Evaluation never enters abstractions or grants, and enters a
    promotion only to substitute a variable directly below it or when
    the promotion is the argument of a needed substitution.

    Returns
    -------
    list of Step
        steps labelled by SharingRulename (!db, !ls, !gc or !req)
    """
    steps = _weak(t, ())
    if deterministic:
        return steps[:1]
    return steps


def _weak(t, position):
    steps = []
    if isinstance(t, App):
        for reduct in _root(t, "!db"):
            steps.append(Step(SharingRulename("!db"), reduct, position))
        for step in _weak(t.fn, position + (0,)):
            steps.append(Step(step.rule, App(step.reduct, t.arg), step.position))
        return steps
    if isinstance(t, Request):
        for reduct in _root(t, "!req"):
            steps.append(Step(SharingRulename("!req"), reduct, position))
        for step in _weak(t.body, position + (0,)):
            steps.append(Step(step.rule, Request(step.reduct), step.position))
        return steps
    if not isinstance(t, ES):
        return steps
    t = hygienic(t)
    body, u, arg = t.body, t.var, t.arg
    boxed, context = peel(freshen_context(arg, free_vars(body) | {u}))
    if isinstance(boxed, Prom) and _answer(boxed.body) is not None:
        for reduct in substitution_steps(body, u, boxed.body):
            steps.append(Step(SharingRulename("!ls"),
                              wrap(ES(reduct, u, boxed), context), position))
    for reduct in _root(t, "!gc"):
        steps.append(Step(SharingRulename("!gc"), reduct, position))
    for step in _weak(body, position + (0,)):
        steps.append(Step(step.rule, ES(step.reduct, u, arg), step.position))
    for step in _weak(arg, position + (1,)):
        steps.append(Step(step.rule, ES(body, u, step.reduct), step.position))
    if isinstance(arg, Prom) and needs(body, u):
        for step in _weak(arg.body, position + (1, 0)):
            steps.append(Step(step.rule, ES(body, u, Prom(step.reduct)), step.position))
    return steps


def _projection(t):
    """Injective map from the variables of t to plain variables."""
    variables = sorted(all_vars(t))
    mapping = {}
    taken = set()
    for x in variables:
        if x.sort != LINEAR:
            mapping[x] = x.with_sort(PLAIN)
            taken.add(mapping[x])
    supply = NameSupply(taken | {x.with_sort(PLAIN) for x in variables})
    for x in variables:
        if x.sort == LINEAR:
            plain = x.with_sort(PLAIN)
            mapping[x] = plain if plain not in taken else supply.fresh(plain)
            taken.add(mapping[x])
    return mapping


def to_lsc(t):
    """Translate a sharing term to an LSC term.

    Grants become abstractions on a fresh variable, requests apply to the
    identity, promotions are erased and linear and unrestricted variables
    are projected to plain ones (linear names are renamed on a clash).
    """
    mapping = _projection(t)
    supply = NameSupply(mapping.values())
    z = supply.fresh(VarName(PLAIN, "z"))
    star = Abs(VarName(PLAIN, "w"), Var(VarName(PLAIN, "w")))
    return _to_lsc(t, mapping, z, star)


def _to_lsc(t, mapping, z, star):
    if isinstance(t, Var):
        return Var(mapping[t.var])
    if isinstance(t, Abs):
        return Abs(mapping[t.var], _to_lsc(t.body, mapping, z, star))
    if isinstance(t, ES):
        return ES(_to_lsc(t.body, mapping, z, star), mapping[t.var],
                  _to_lsc(t.arg, mapping, z, star))
    if isinstance(t, App):
        return App(_to_lsc(t.fn, mapping, z, star), _to_lsc(t.arg, mapping, z, star))
    if isinstance(t, Grant):
        return Abs(z, _to_lsc(t.body, mapping, z, star))
    if isinstance(t, Request):
        return App(_to_lsc(t.body, mapping, z, star), star)
    if isinstance(t, Prom):
        return _to_lsc(t.body, mapping, z, star)
    raise ValueError("not a sharing term")


def to_lsc_type(A):
    if isinstance(A, (TAtom, TMeta)):
        return A
    if isinstance(A, Lolli):
        return Arrow(to_lsc_type(A.dom), to_lsc_type(A.cod))
    if isinstance(A, TGrant):
        return Arrow(ONE, to_lsc_type(A.body))
    if isinstance(A, TBang):
        return to_lsc_type(A.body)
    raise ValueError("not a sharing type")


def to_lsc_env(env,
               t):
    """Translate a typing environment of t; unrestricted u:A becomes u:1->[A]."""
    mapping = _projection(t)
    result = {}
    for u, A in env.delta.items():
        if u in mapping:
            result[mapping[u]] = Arrow(ONE, to_lsc_type(A))
    for a, A in env.gamma.items():
        if a in mapping:
            result[mapping[a]] = to_lsc_type(A)
    return result
