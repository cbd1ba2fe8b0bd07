#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright : see accompanying license files for details

__author__ = "The LamSharing developers"
__credits__ = []
__license__ = "LGPL"
__maintainer__ = "The LamSharing developers"
__version__ = '0.1.0'
__status__ = "production"


from lamsharing.utils.terms import Var, Abs, ES, Hole
from lamsharing.utils.terms import VarName
from lamsharing.utils.terms import LINEAR, UNRESTRICTED, PLAIN
from lamsharing.utils.terms import children, rebuild, has_hole

import logging
logger = logging.getLogger(__name__)

CANONICAL_BASE = {LINEAR: "a", UNRESTRICTED: "u", PLAIN: "x"}
READABLE_NAMES = {LINEAR: "abcdefgh", UNRESTRICTED: "uvwstrpq", PLAIN: "xyzwvstrpq"}


class NameSupply(object):
    """Deterministic source of fresh variables.

    The supply never hands out a name it was told to avoid, nor one it
    already handed out. A request first tries the plain base name and
    then the smallest free index, so the output of every operation that
    draws names from a supply only depends on its inputs.
    """

    def __init__(self,
                 avoid=()):
        """Constructor for the supply.

        Parameters
        ----------
        avoid: iterable of VarName
            names that are already taken
        """
        self.taken = set(avoid)
        return None

    def avoid(self,
              names):
        """Mark additional names as taken."""
        self.taken.update(names)
        return None

    def fresh(self,
              var):
        """Return a fresh variable of the same sort and base name as var.

        Parameters
        ----------
        var: VarName
            template whose sort and base name are kept

        Returns
        -------
        VarName
            a variable that was neither avoided nor handed out before
        """
        candidate = VarName(var.sort, var.name, None)
        index = 0
        while candidate in self.taken:
            index += 1
            candidate = VarName(var.sort, var.name, index)
        self.taken.add(candidate)
        return candidate

    def readable(self,
                 var):
        """Return a fresh variable of the same sort, preferring an unindexed letter.

        The letters of the sort are tried in order, starting after the
        name of var; fresh is the fallback once they are all taken.
        """
        letters = READABLE_NAMES[var.sort]
        start = letters.index(var.name) + 1 if var.name in letters else 0
        for name in letters[start:] + letters[:start]:
            candidate = VarName(var.sort, name, None)
            if candidate not in self.taken:
                self.taken.add(candidate)
                return candidate
        return self.fresh(var)


def free_vars(t):
    """Return the free variables of a term as a frozenset of VarName.

    Parameters
    ----------
    t: Term
        any term, holes included

    Returns
    -------
    frozenset
        the variables with a free occurrence in t
    """
    if isinstance(t, Var):
        return frozenset((t.var,))
    if isinstance(t, Hole):
        return frozenset()
    if isinstance(t, Abs):
        return free_vars(t.body) - {t.var}
    if isinstance(t, ES):
        return (free_vars(t.body) - {t.var}) | free_vars(t.arg)
    result = frozenset()
    for child in children(t):
        result = result | free_vars(child)
    return result


def all_vars(t):
    """Every variable occurring in t, free or bound, binders included."""
    if isinstance(t, Var):
        return {t.var}
    result = set()
    if isinstance(t, (Abs, ES)):
        result.add(t.var)
    for child in children(t):
        result |= all_vars(child)
    return result


def alpha_eq(t, s):
    """Decide α-equivalence by a simultaneous traversal.

    Bound variables are compared through the depth of their binders, the
    same way on both sides; free variables are compared by name.
    """
    return _alpha_eq(t, s, {}, {}, 0)


def _alpha_eq(t, s, left, right, depth):
    if type(t) is not type(s):
        return False
    if isinstance(t, Var):
        lt = left.get(t.var)
        rs = right.get(s.var)
        if lt is None and rs is None:
            return t.var == s.var
        return lt == rs
    if isinstance(t, Hole):
        return True
    if isinstance(t, Abs):
        if t.var.sort != s.var.sort:
            return False
        return _alpha_eq(t.body, s.body,
                         _bind(left, t.var, depth),
                         _bind(right, s.var, depth),
                         depth + 1)
    if isinstance(t, ES):
        if t.var.sort != s.var.sort:
            return False
        if not _alpha_eq(t.arg, s.arg, left, right, depth):
            return False
        return _alpha_eq(t.body, s.body,
                         _bind(left, t.var, depth),
                         _bind(right, s.var, depth),
                         depth + 1)
    return all(_alpha_eq(a, b, left, right, depth)
               for a, b in zip(children(t), children(s)))


def _bind(env, var, depth):
    env = dict(env)
    env[var] = depth
    return env


def canonical(t):
    """Return the α-canonical representative of t.

    Binders are renamed in traversal order, body before argument, with
    the base names ``a``, ``u`` and ``x`` for the three sorts and the
    smallest indices that do not clash with the free variables of t.
    Two terms are α-equivalent exactly when their canonical forms are
    equal, so the result serves as a dictionary key.
    """
    supply = NameSupply(free_vars(t))
    return _canonical(t, {}, supply)


def _canonical(t, env, supply):
    if isinstance(t, Var):
        return Var(env.get(t.var, t.var))
    if isinstance(t, Hole):
        return t
    if isinstance(t, Abs):
        new = supply.fresh(VarName(t.var.sort, CANONICAL_BASE[t.var.sort]))
        return Abs(new, _canonical(t.body, _extend(env, t.var, new), supply))
    if isinstance(t, ES):
        new = supply.fresh(VarName(t.var.sort, CANONICAL_BASE[t.var.sort]))
        body = _canonical(t.body, _extend(env, t.var, new), supply)
        arg = _canonical(t.arg, env, supply)
        return ES(body, new, arg)
    return rebuild(t, [_canonical(c, env, supply) for c in children(t)])


def _extend(env, old, new):
    env = dict(env)
    env[old] = new
    return env


def subst(t, var, s, supply=None):
    """Capture-avoiding substitution of s for the free occurrences of var.

    Binders of t that would capture a free variable of s are renamed with
    names drawn from supply (a fresh one avoiding every name of t and s
    when none is given). When var is not free in t, t is returned as is.

    Parameters
    ----------
    t: Term
        the term substituted into
    var: VarName
        the substituted variable
    s: Term
        the substituted term

    Returns
    -------
    Term
        t{var:=s}
    """
    if var not in free_vars(t):
        return t
    if supply is None:
        supply = NameSupply(all_vars(t) | all_vars(s))
    return _subst(t, var, s, free_vars(s), supply)


def _subst(t, var, s, fv_s, supply):
    if isinstance(t, Var):
        return s if t.var == var else t
    if isinstance(t, Hole):
        return t
    if isinstance(t, Abs):
        if t.var == var or var not in free_vars(t.body):
            return t
        binder, body = _freshen_binder(t.var, t.body, fv_s, supply)
        return Abs(binder, _subst(body, var, s, fv_s, supply))
    if isinstance(t, ES):
        arg = _subst(t.arg, var, s, fv_s, supply)
        if t.var == var or var not in free_vars(t.body):
            return ES(t.body, t.var, arg)
        binder, body = _freshen_binder(t.var, t.body, fv_s, supply)
        return ES(_subst(body, var, s, fv_s, supply), binder, arg)
    return rebuild(t, [_subst(c, var, s, fv_s, supply) for c in children(t)])


def _freshen_binder(binder, body, avoid, supply):
    if binder not in avoid:
        return binder, body
    supply.avoid(avoid)
    supply.avoid(all_vars(body))
    new = supply.fresh(binder)
    return new, rename(body, binder, new)


def rename(t, old, new):
    """Replace the free occurrences of variable old by variable new."""
    return subst(t, old, Var(new))


def subst_linear(t, a, s, supply=None):
    """Capture-avoiding substitution of a linear variable.

    Parameters
    ----------
    t: Term
        a sharing term
    a: VarName
        a linear variable
    s: Term
        the sharing term substituted for a

    Returns
    -------
    Term
        t{a:=s}
    """
    if a.sort != LINEAR:
        raise ValueError("{0} is not a linear variable".format(a))
    return subst(t, a, s, supply=supply)


def plug(ctx, t, capture="with"):
    """Replace the hole of a one-hole context by t.

    Parameters
    ----------
    ctx: Term
        a term with exactly one Hole node
    t: Term
        the plugged term
    capture: str
        'with' lets the binders of ctx capture the free variables of t;
        'avoiding' renames those binders first

    Returns
    -------
    Term
        the plugged term
    """
    if capture == "with":
        return _plug_with(ctx, t)
    if capture == "avoiding":
        supply = NameSupply(all_vars(ctx) | all_vars(t))
        return _plug_avoiding(ctx, t, free_vars(t), supply)
    raise ValueError("unknown capture mode {0}".format(capture))


def _plug_with(ctx, t):
    if isinstance(ctx, Hole):
        return t
    return rebuild(ctx, [_plug_with(c, t) if has_hole(c) else c
                         for c in children(ctx)])


def _plug_avoiding(ctx, t, fv_t, supply):
    if isinstance(ctx, Hole):
        return t
    if isinstance(ctx, Abs) and ctx.var in fv_t:
        new = supply.readable(ctx.var)
        ctx = Abs(new, rename(ctx.body, ctx.var, new))
    elif isinstance(ctx, ES) and ctx.var in fv_t and has_hole(ctx.body):
        new = supply.readable(ctx.var)
        ctx = ES(rename(ctx.body, ctx.var, new), new, ctx.arg)
    return rebuild(ctx, [_plug_avoiding(c, t, fv_t, supply)
                         if has_hole(c) else c
                         for c in children(ctx)])


def occurrences(t, var):
    """Positions of the free occurrences of var, preorder, left to right."""
    found = []
    _occurrences(t, var, (), found)
    return found


def _occurrences(t, var, position, found):
    if isinstance(t, Var):
        if t.var == var:
            found.append(position)
        return None
    if isinstance(t, Abs) and t.var == var:
        return None
    for i, child in enumerate(children(t)):
        if isinstance(t, ES) and i == 0 and t.var == var:
            continue
        _occurrences(child, var, position + (i,), found)
    return None


def replace_at(t, position, s):
    """Replace the subterm at position by s, allowing capture."""
    if not position:
        return s
    kids = list(children(t))
    kids[position[0]] = replace_at(kids[position[0]], position[1:], s)
    return rebuild(t, kids)


def substitute_occurrence(t, position, s):
    """Replace one occurrence by s, renaming binders that would capture."""
    return plug(replace_at(t, position, Hole()), s, capture="avoiding")


def peel(t):
    """Split t as a core term followed by its outer substitution context.

    Returns
    -------
    (Term, list)
        the core and the list of (var, arg) pairs, innermost first
    """
    context = []
    while isinstance(t, ES):
        context.append((t.var, t.arg))
        t = t.body
    context.reverse()
    return t, context


def wrap(t, context):
    """Plug t into a substitution context given innermost first."""
    for var, arg in context:
        t = ES(t, var, arg)
    return t


def freshen_context(t, avoid):
    """Rename the outer substitution binders of t that belong to avoid.

    Used before a substitution context is extruded over terms whose free
    variables would otherwise be captured.
    """
    if not isinstance(t, ES):
        return t
    body = t.body
    var = t.var
    if var in avoid:
        supply = NameSupply(set(avoid) | all_vars(t))
        var = supply.fresh(t.var)
        body = rename(body, t.var, var)
    return ES(freshen_context(body, avoid), var, t.arg)


def context_domain(context):
    return [var for var, _ in context]
