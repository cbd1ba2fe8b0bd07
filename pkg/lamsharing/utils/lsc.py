#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright : see accompanying license files for details

"""Reduction, weak evaluation, typing and fusion for LSC terms.

The four calculi are given by the rules they use::

    cbn  = db, ls,  gc
    cbv  = db, lsv, gcvlax
    cbs  = db, lsw, gc
    cbnd = db, lsv, gc

Rules act at a distance: a redex may be separated from its abstraction
or its value by a substitution context L.
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

from lamsharing.utils.terms import Var, Abs, App, ES, Term, VarName
from lamsharing.utils.terms import children, subterm_at
from lamsharing.utils.operations import NameSupply, free_vars, all_vars, alpha_eq
from lamsharing.utils.operations import subst, rename, occurrences, substitute_occurrence
from lamsharing.utils.operations import replace_at, peel, wrap, freshen_context
from lamsharing.utils.operations import canonical
from lamsharing.utils.types import TypingError, Unifier, Arrow, metas

import logging
logger = logging.getLogger(__name__)

CALCULI = {"cbn": ("db", "ls", "gc"),
           "cbv": ("db", "lsv", "gcvlax"),
           "cbs": ("db", "lsw", "gc"),
           "cbnd": ("db", "lsv", "gc")}

STRICT = "strict"
LAX = "lax"

TOP_LEVEL = {"cbn": ("db", "ls", "gc"),
             "cbv": ("db", "lsv", "gcvlax"),
             "cbs": ("db", "lsw", "gc")}


Step = collections.namedtuple("Step", ["rule", "reduct", "position"])


@dataclasses.dataclass(frozen=True)
class Rulename(object):
    """Label of a weak evaluation step.

    Root rules carry only a tag. The auxiliary labels are ``sigma``
    (substitute one needed occurrence of var by payload) and ``iota``
    (var occurs in evaluation position).
    """
    tag: str
    var: typing.Optional[VarName] = None
    payload: typing.Optional[Term] = None

    def __str__(self):
        if self.tag == "sigma":
            from lamsharing.utils.io import print_term
            return "sigma[{0}/{1}]".format(self.var, print_term(self.payload))
        if self.tag == "iota":
            return "iota({0})".format(self.var)
        return self.tag

    def free_vars(self):
        if self.tag == "sigma":
            return frozenset((self.var,)) | free_vars(self.payload)
        if self.tag == "iota":
            return frozenset((self.var,))
        return frozenset()


def _check_calculus(calc, table=CALCULI):
    if calc not in table:
        raise ValueError("unknown calculus {0}".format(calc))
    return None


def value_class(t):
    """Return 'strict' for an abstraction, 'lax' for a variable, else None."""
    if isinstance(t, Abs):
        return STRICT
    if isinstance(t, Var):
        return LAX
    return None


def hygienic(t):
    """Rename the binder of an explicit substitution that is free in its argument."""
    if isinstance(t, ES) and t.var in free_vars(t.arg):
        supply = NameSupply(all_vars(t))
        new = supply.fresh(t.var)
        return ES(rename(t.body, t.var, new), new, t.arg)
    return t


def _db(t):
    if not isinstance(t, App):
        return None
    fn = freshen_context(t.fn, free_vars(t.arg))
    core, context = peel(fn)
    if not isinstance(core, Abs):
        return None
    return wrap(ES(core.body, core.var, t.arg), context)


def _root(t, rule):
    """All reducts of rule applied at the root of t."""
    if rule == "db":
        reduct = _db(t)
        return [] if reduct is None else [reduct]
    if not isinstance(t, ES):
        return []
    t = hygienic(t)
    body, x, arg = t.body, t.var, t.arg
    if rule == "gc":
        return [] if x in free_vars(body) else [body]
    if rule == "gcvlax":
        if x in free_vars(body):
            return []
        core, context = peel(freshen_context(arg, free_vars(body) | {x}))
        if value_class(core) is None:
            return []
        return [wrap(body, context)]
    if rule == "ls":
        return [ES(substitute_occurrence(body, pos, arg), x, arg)
                for pos in occurrences(body, x)]
    if rule == "lsw":
        core, _ = peel(arg)
        if value_class(core) != STRICT:
            return []
        return [ES(substitute_occurrence(body, pos, arg), x, arg)
                for pos in occurrences(body, x)]
    if rule == "lsv":
        core, context = peel(freshen_context(arg, free_vars(body) | {x}))
        if value_class(core) != STRICT:
            return []
        return [wrap(ES(substitute_occurrence(body, pos, core), x, core), context)
                for pos in occurrences(body, x)]
    raise ValueError("unknown rule {0}".format(rule))


def lsc_redexes(t,
                calc):
    """List every one-step reduct of t in a calculus.

    Parameters
    ----------
    t: Term
        an LSC term
    calc: str
        one of 'cbn', 'cbv', 'cbs' or 'cbnd'

    Returns
    -------
    list of Step
        (rule, reduct, position) entries, redex positions in preorder and,
        for the substitution rules, one entry per substituted occurrence
    """
    _check_calculus(calc)
    steps = []
    _redexes(t, t, (), CALCULI[calc], steps)
    return steps


def _redexes(whole, t, position, rules, steps):
    for rule in rules:
        for reduct in _root(t, rule):
            steps.append(Step(rule, replace_at(whole, position, reduct), position))
    for i, child in enumerate(children(t)):
        _redexes(whole, child, position + (i,), rules, steps)
    return None


def lsc_is_nf(t,
              calc):
    return not lsc_redexes(t, calc)


def needs(t,
          calc,
          x):
    """Decide t ->iota(x) t: x occurs free in evaluation position of t."""
    _check_calculus(calc, {"cbs": None})
    if isinstance(t, Var):
        return t.var == x
    if isinstance(t, App):
        return needs(t.fn, calc, x)
    if isinstance(t, ES):
        if t.var != x and needs(t.body, calc, x):
            return True
        return needs(t.body, calc, t.var) and needs(t.arg, calc, x)
    return False


def substitution_steps(t,
                       calc,
                       x,
                       payload):
    """Reducts of the auxiliary judgment t ->sigma[x/payload] t'.

    Exactly one free occurrence of x in evaluation position is replaced
    by payload. Binders met on the way that capture a free variable of
    the payload are renamed.
    """
    _check_calculus(calc, TOP_LEVEL)
    result = []
    for reduct in _sigma(t, calc, x, payload, free_vars(payload) | {x}):
        if reduct not in result:
            result.append(reduct)
    return result


def _sigma(t, calc, x, payload, fv_rho):
    if isinstance(t, Var):
        return [payload] if t.var == x else []
    if isinstance(t, App):
        return [App(fn, t.arg) for fn in _sigma(t.fn, calc, x, payload, fv_rho)]
    if not isinstance(t, ES):
        return []
    result = []
    if calc == "cbs" and t.arg == Var(x):
        result.append(ES(t.body, t.var, payload))
    if t.var != x:
        t = _away(t, fv_rho)
        result.extend(ES(body, t.var, t.arg)
                      for body in _sigma(t.body, calc, x, payload, fv_rho))
    if calc == "cbv" or (calc == "cbs" and needs(t.body, calc, t.var)):
        result.extend(ES(t.body, t.var, arg)
                      for arg in _sigma(t.arg, calc, x, payload, fv_rho))
    return result


def _away(t, avoid):
    """Rename the binder of an ES so that it is not in avoid."""
    if t.var not in avoid:
        return t
    supply = NameSupply(set(avoid) | all_vars(t))
    new = supply.fresh(t.var)
    return ES(rename(t.body, t.var, new), new, t.arg)


def weak_eval_steps(t,
                    calc,
                    gc_inverse_target=None,
                    deterministic=False):
    """One-step weak evaluation of an LSC term.

    Parameters
    ----------
    t: Term
        an LSC term
    calc: str
        'cbn', 'cbv' or 'cbs'
    gc_inverse_target: Term
        cbv only; also admit an inverse gcvlax step from t to this term
    deterministic: bool
        keep only the first step in rule order

    Returns
    -------
    list of Step
        steps labelled by Rulename, never below an abstraction
    """
    _check_calculus(calc, TOP_LEVEL)
    steps = _weak(t, calc, ())
    if gc_inverse_target is not None:
        if calc != "cbv":
            raise ValueError("inverse gc steps only exist in cbv")
        steps.extend(_gc_inverse(t, gc_inverse_target))
    if deterministic:
        return steps[:1]
    return steps


def _weak(t, calc, position):
    steps = []
    if isinstance(t, App):
        reduct = _db(t)
        if reduct is not None:
            steps.append(Step(Rulename("db"), reduct, position))
        for step in _weak(t.fn, calc, position + (0,)):
            steps.append(Step(step.rule, App(step.reduct, t.arg), step.position))
        return steps
    if not isinstance(t, ES):
        return steps
    t = hygienic(t)
    body, x, arg = t.body, t.var, t.arg
    if calc == "cbn":
        for reduct in substitution_steps(body, calc, x, arg):
            steps.append(Step(Rulename("ls"), ES(reduct, x, arg), position))
    elif calc == "cbv":
        fresh = freshen_context(arg, free_vars(body) | {x})
        core, context = peel(fresh)
        if value_class(core) == STRICT:
            for reduct in substitution_steps(body, calc, x, core):
                steps.append(Step(Rulename("lsv"),
                                  wrap(ES(reduct, x, core), context), position))
    else:
        core, _ = peel(arg)
        if value_class(core) == STRICT:
            for reduct in substitution_steps(body, calc, x, arg):
                steps.append(Step(Rulename("lsw"), ES(reduct, x, arg), position))
    gc = "gcvlax" if calc == "cbv" else "gc"
    for reduct in _root(t, gc):
        steps.append(Step(Rulename(gc), reduct, position))
    for step in _weak(body, calc, position + (0,)):
        steps.append(Step(step.rule, ES(step.reduct, x, arg), step.position))
    if calc == "cbv" or (calc == "cbs" and needs(body, calc, x)):
        for step in _weak(arg, calc, position + (1,)):
            steps.append(Step(step.rule, ES(body, x, step.reduct), step.position))
    return steps


def _gc_inverse(t, target):
    steps = []
    for step in _weak(target, "cbv", ()):
        if step.rule.tag != "gcvlax":
            continue
        redex = subterm_at(target, step.position)
        if value_class(redex.arg) is None:
            continue
        if alpha_eq(step.reduct, t):
            steps.append(Step(Rulename("gcvlax-1"), target, step.position))
    return steps


def extended_cbv_reaches(t,
                         s,
                         depth):
    """Decide whether s is reachable from t by cbv steps then inverse gcvlax steps.

    The cbv part is explored to the given depth; the gc part explores the
    gcvlax reducts of s to the same depth, and the two sets must meet.
    """
    forward = _closure(t, lambda r: [step.reduct for step in lsc_redexes(r, "cbv")], depth)
    backward = _closure(s, lambda r: [step.reduct for step in lsc_redexes(r, "cbv")
                                      if step.rule == "gcvlax"], depth)
    return bool(set(forward) & set(backward))


def _closure(t, successors, depth):
    seen = {canonical(t): t}
    frontier = [t]
    for _ in range(depth):
        following = []
        for r in frontier:
            for reduct in successors(r):
                key = canonical(reduct)
                if key not in seen:
                    seen[key] = reduct
                    following.append(reduct)
        if not following:
            break
        frontier = following
    return seen


def lsc_typecheck(env,
                  t,
                  expected=None):
    """Simple typing of an LSC term.

    Parameters
    ----------
    env: dict
        VarName -> SimpleType for the free variables of t
    t: Term
        an LSC term; an explicit substitution is typed as a let
    expected: SimpleType
        checking mode when given

    Returns
    -------
    SimpleType
        the type of t, without metavariables in synthesis mode

    Raises
    ------
    TypingError
        unbound variables, mismatches, and synthesis with an unforced binder
    """
    unifier = Unifier()
    binders = []
    result = _infer(t, dict(env), unifier, binders)
    if expected is not None:
        unifier.unify(result, expected)
        return unifier.resolve(result)
    result = unifier.resolve(result)
    if metas(result) or any(metas(unifier.resolve(b)) for b in binders):
        raise TypingError("cannot infer binder type")
    return result


def lsc_principal_type(t):
    """Infer a most general environment and type for t, with metavariables."""
    unifier = Unifier()
    env = {}
    for x in sorted(free_vars(t)):
        env[x] = unifier.fresh()
    result = _infer(t, dict(env), unifier, [])
    return ({x: unifier.resolve(A) for x, A in env.items()},
            unifier.resolve(result))


def _infer(t, env, unifier, binders):
    if isinstance(t, Var):
        if t.var not in env:
            raise TypingError("unbound variable {0}".format(t.var))
        return env[t.var]
    if isinstance(t, Abs):
        alpha = unifier.fresh()
        binders.append(alpha)
        inner = dict(env)
        inner[t.var] = alpha
        return Arrow(alpha, _infer(t.body, inner, unifier, binders))
    if isinstance(t, App):
        fn = _infer(t.fn, env, unifier, binders)
        arg = _infer(t.arg, env, unifier, binders)
        result = unifier.fresh()
        unifier.unify(fn, Arrow(arg, result))
        return result
    if isinstance(t, ES):
        arg = _infer(t.arg, env, unifier, binders)
        inner = dict(env)
        inner[t.var] = arg
        return _infer(t.body, inner, unifier, binders)
    raise TypingError("not an LSC term")


def fusion_steps(t):
    """Every one-step fusion successor of t, in any context."""
    result = []
    _fusion(t, t, (), result)
    return result


def _fusion(whole, t, position, result):
    for reduct in _fusion_root(t):
        candidate = replace_at(whole, position, reduct)
        if candidate not in result:
            result.append(candidate)
    for i, child in enumerate(children(t)):
        _fusion(whole, child, position + (i,), result)
    return None


def _fusion_root(t):
    found = []
    if isinstance(t, ES):
        t = hygienic(t)
        body, y, s = t.body, t.var, t.arg
        # weakening
        if y not in free_vars(body):
            found.append(body)
        if isinstance(body, ES):
            inner = _away(hygienic(body), {y} | free_vars(s))
            b, x, s1 = inner.body, inner.var, inner.arg
            # contraction of two copies of the same argument
            if y not in free_vars(s1) and alpha_eq(s1, s):
                found.append(ES(subst(b, x, Var(y)), y, s))
            # swap two independent substitutions
            if x not in free_vars(s) and y not in free_vars(s1):
                found.append(ES(ES(b, y, s), x, s1))
        if isinstance(s, ES):
            inner = _away(hygienic(s), free_vars(body) | {y})
            found.append(ES(ES(body, y, inner.body), inner.var, inner.arg))
    elif isinstance(t, Abs) and isinstance(t.body, ES):
        inner = _away(hygienic(t.body), {t.var})
        if t.var not in free_vars(inner.arg):
            found.append(ES(Abs(t.var, inner.body), inner.var, inner.arg))
    if isinstance(t, App):
        if isinstance(t.fn, ES):
            inner = _away(hygienic(t.fn), free_vars(t.arg))
            found.append(ES(App(inner.body, t.arg), inner.var, inner.arg))
        if isinstance(t.arg, ES):
            inner = _away(hygienic(t.arg), free_vars(t.fn))
            found.append(ES(App(t.fn, inner.body), inner.var, inner.arg))
    return found
