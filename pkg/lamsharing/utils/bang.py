#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright : see accompanying license files for details

__author__ = "The LamSharing developers"
__credits__ = []
__license__ = "LGPL"
__maintainer__ = "The LamSharing developers"
__version__ = '0.1.0'
__status__ = "production"

import functools

from lamsharing.utils import LamSharingError
from lamsharing.utils.terms import Var, Abs, App, ES, Prom, Der, VarName, PLAIN
from lamsharing.utils.terms import children, has_der, rebuild
from lamsharing.utils.operations import NameSupply, free_vars, all_vars
from lamsharing.utils.operations import occurrences, substitute_occurrence, replace_at
from lamsharing.utils.operations import peel, wrap, freshen_context
from lamsharing.utils.lsc import Step, hygienic
from lamsharing.utils.types import TypingError, Unifier, Arrow, TBang

import logging
logger = logging.getLogger(__name__)

BANG_RULES = ("dbB", "lsB", "gcB", "derB")


class ReductionError(LamSharingError):
    """A term outside the domain of the requested reduction."""
    pass


def _root(t, rule):
    if rule == "dbB":
        if not isinstance(t, App):
            return []
        core, context = peel(freshen_context(t.fn, free_vars(t.arg)))
        if not isinstance(core, Abs):
            return []
        return [wrap(ES(core.body, core.var, t.arg), context)]
    if rule == "derB":
        if not isinstance(t, Der):
            return []
        core, context = peel(t.body)
        if not isinstance(core, Prom):
            return []
        return [wrap(core.body, context)]
    if not isinstance(t, ES):
        return []
    t = hygienic(t)
    body, x, arg = t.body, t.var, t.arg
    boxed, context = peel(freshen_context(arg, free_vars(body) | {x}))
    if not isinstance(boxed, Prom):
        return []
    if rule == "gcB":
        return [] if x in free_vars(body) else [wrap(body, context)]
    return [wrap(ES(substitute_occurrence(body, pos, boxed.body), x, boxed), context)
            for pos in occurrences(body, x)]


def bang_redexes(t,
                 simplified=True):
    """Every one-step reduct of a Bang term.

    Parameters
    ----------
    t: Term
        a Bang term
    simplified: bool
        simplified reduction (no dereliction rule); t must then be free
        of der nodes

    Returns
    -------
    list of Step
        (rule, reduct, position) in preorder, rules in the order dbB, lsB,
        gcB, derB

    Raises
    ------
    ReductionError
        when simplified reduction is asked for a term with a der node
    """
    if simplified and has_der(t):
        raise ReductionError("simplified Bang reduction does not handle der, "
                             "apply dereliction unfolding first")
    rules = BANG_RULES[:3] if simplified else BANG_RULES
    steps = []
    _redexes(t, t, (), rules, steps)
    return steps


def _redexes(whole, t, position, rules, steps):
    for rule in rules:
        for reduct in _root(t, rule):
            steps.append(Step(rule, replace_at(whole, position, reduct), position))
    for i, child in enumerate(children(t)):
        _redexes(whole, child, position + (i,), rules, steps)
    return None


def bang_is_nf(t,
               simplified=True):
    return not bang_redexes(t, simplified=simplified)


def der_unfold(t,
               s):
    """Decide the dereliction unfolding t >< s of a full term by a simplified one."""
    if has_der(s):
        return False
    return _unfold(t, s, ())


@functools.lru_cache(maxsize=1 << 16)
def _unfold(t, s, env):
    # garbage substitution on the right
    if isinstance(s, ES) and isinstance(s.arg, Prom) and s.var not in free_vars(s.body):
        if _unfold(t, s.body, env):
            return True
    if isinstance(t, Der):
        if isinstance(s, ES) and s.body == Var(s.var) and _unfold(t.body, s.arg, env):
            return True
        return False
    if type(t) is not type(s):
        return False
    if isinstance(t, Var):
        return _same_variable(t.var, s.var, env)
    if isinstance(t, Abs):
        return _unfold(t.body, s.body, env + ((t.var, s.var),))
    if isinstance(t, ES):
        return (_unfold(t.arg, s.arg, env) and
                _unfold(t.body, s.body, env + ((t.var, s.var),)))
    return all(_unfold(a, b, env) for a, b in zip(children(t), children(s)))


def _same_variable(x, y, env):
    for left, right in reversed(env):
        if left == x or right == y:
            return left == x and right == y
    return x == y


def canonical_unfold(t):
    """The least unfolding of t: every der(s) becomes x[x := s] for a fresh x."""
    supply = NameSupply(all_vars(t))
    return _canonical_unfold(t, supply)


def _canonical_unfold(t, supply):
    if isinstance(t, Der):
        x = supply.fresh(VarName(PLAIN, "x"))
        return ES(Var(x), x, _canonical_unfold(t.body, supply))
    kids = [_canonical_unfold(c, supply) for c in children(t)]
    return rebuild(t, kids)


def bang_typecheck(env,
                   t,
                   expected=None):
    """Type a Bang term.

    Parameters
    ----------
    env: dict
        VarName -> type; variables must have a !-type
    t: Term
        a Bang term; der(t) of type A needs t of type !A
    expected: Type
        checking mode when given

    Returns
    -------
    Type
        the type of t, possibly with metavariables
    """
    unifier = Unifier()
    result = _infer(t, dict(env), unifier)
    if expected is not None:
        unifier.unify(result, expected)
    return unifier.resolve(result)


def bang_principal_type(t):
    unifier = Unifier()
    env = {x: TBang(unifier.fresh()) for x in sorted(free_vars(t))}
    result = _infer(t, dict(env), unifier)
    return ({x: unifier.resolve(A) for x, A in env.items()},
            unifier.resolve(result))


def _infer(t, env, unifier):
    if isinstance(t, Var):
        if t.var not in env:
            raise TypingError("unbound variable {0}".format(t.var))
        A = unifier.fresh()
        unifier.unify(env[t.var], TBang(A))
        return A
    if isinstance(t, Abs):
        domain = TBang(unifier.fresh())
        inner = dict(env)
        inner[t.var] = domain
        return Arrow(domain, _infer(t.body, inner, unifier))
    if isinstance(t, App):
        F = _infer(t.fn, env, unifier)
        S = _infer(t.arg, env, unifier)
        unifier.unify(S, TBang(unifier.fresh()))
        B = unifier.fresh()
        unifier.unify(F, Arrow(S, B))
        return B
    if isinstance(t, ES):
        S = _infer(t.arg, env, unifier)
        unifier.unify(S, TBang(unifier.fresh()))
        inner = dict(env)
        inner[t.var] = S
        return _infer(t.body, inner, unifier)
    if isinstance(t, Prom):
        return TBang(_infer(t.body, env, unifier))
    if isinstance(t, Der):
        A = unifier.fresh()
        unifier.unify(_infer(t.body, env, unifier), TBang(A))
        return A
    raise TypingError("not a Bang term")
