#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright : see accompanying license files for details

"""Embeddings of the LSC calculi and of the Bang calculus into the sharing calculus.

Every embedding comes with a translation of types, a recognizer for the
set of sharing terms reachable from translated terms (the image
grammar), an inverse translation defined on that set, and translations
of weak evaluation rulenames in both directions.
"""

__author__ = "The LamSharing developers"
__credits__ = []
__license__ = "LGPL"
__maintainer__ = "The LamSharing developers"
__version__ = '0.1.0'
__status__ = "production"

import dataclasses
import enum

from lamsharing.utils import LamSharingError
from lamsharing.utils.terms import Var, Abs, App, ES, Grant, Request, Prom, Der
from lamsharing.utils.terms import VarName, LINEAR, UNRESTRICTED, PLAIN
from lamsharing.utils.operations import NameSupply, free_vars
from lamsharing.utils.lsc import Rulename
from lamsharing.utils.sharing import SharingRulename, TypingEnv
from lamsharing.utils.types import TAtom, TMeta, Arrow, Lolli, TGrant, TBang

import logging
logger = logging.getLogger(__name__)


class ImageError(LamSharingError):
    """A term or rulename outside the domain of a translation."""
    pass


class TranslationKind(enum.Enum):
    CBN = "cbn"
    CBV = "cbv"
    CBS = "cbs"
    BANG = "bang"


@dataclasses.dataclass(frozen=True)
class ImageMembership(object):
    """Proof that a term belongs to an image grammar.

    The witness lists the production used at each node, in preorder.
    """
    kind: TranslationKind
    witness: tuple


# maximal number of sharing steps simulating one source step
STEP_BOUNDS = {TranslationKind.CBN: {"db": 1, "ls": 2, "gc": 1},
               TranslationKind.CBV: {"db": 4, "lsv": 1, "gcvlax": 1},
               TranslationKind.CBS: {"db": 2, "lsw": 1, "gc": 1},
               TranslationKind.BANG: {"dbB": 1, "lsB": 2, "gcB": 1}}

LINEAR_BASE = VarName(LINEAR, "a")
SHARED_BASE = VarName(UNRESTRICTED, "u")


def _kind(kind):
    try:
        return TranslationKind(kind)
    except ValueError:
        raise ValueError("unknown translation kind {0}".format(kind))


def _shared(x):
    return x.with_sort(UNRESTRICTED)


def _plain(u):
    return u.with_sort(PLAIN)


def _linear_abs(x, body):
    """Build \\'a. body[x := 'a] for a linear 'a not free in body."""
    a = NameSupply(free_vars(body)).fresh(LINEAR_BASE)
    return Abs(a, ES(body, _shared(x), Var(a)))


def tra_cbn(t):
    """Call-by-name embedding."""
    if isinstance(t, Var):
        return Request(Var(_shared(t.var)))
    if isinstance(t, Abs):
        return _linear_abs(t.var, tra_cbn(t.body))
    if isinstance(t, App):
        return App(tra_cbn(t.fn), Prom(Grant(tra_cbn(t.arg))))
    if isinstance(t, ES):
        return ES(tra_cbn(t.body), _shared(t.var), Prom(Grant(tra_cbn(t.arg))))
    raise ImageError("not an LSC term")


def tra_cbv(t):
    """Call-by-value embedding."""
    if isinstance(t, Var):
        return Prom(Var(_shared(t.var)))
    if isinstance(t, Abs):
        return Prom(Grant(_linear_abs(t.var, tra_cbv(t.body))))
    if isinstance(t, App):
        fn = tra_cbv(t.fn)
        arg = tra_cbv(t.arg)
        u = NameSupply(free_vars(fn) | free_vars(arg)).fresh(SHARED_BASE)
        return App(ES(Request(Var(u)), u, fn), arg)
    if isinstance(t, ES):
        return ES(tra_cbv(t.body), _shared(t.var), tra_cbv(t.arg))
    raise ImageError("not an LSC term")


def tra_cbs(t):
    """Call-by-sharing embedding."""
    if isinstance(t, Var):
        return Var(_shared(t.var))
    if isinstance(t, Abs):
        return Grant(_linear_abs(t.var, tra_cbs(t.body)))
    if isinstance(t, App):
        return App(Request(tra_cbs(t.fn)), Prom(tra_cbs(t.arg)))
    if isinstance(t, ES):
        return ES(tra_cbs(t.body), _shared(t.var), Prom(tra_cbs(t.arg)))
    raise ImageError("not an LSC term")


def tra_bang(t):
    """Embedding of simplified Bang terms."""
    if isinstance(t, Der):
        raise ImageError("der has no translation, apply dereliction unfolding first")
    if isinstance(t, Var):
        return Request(Var(_shared(t.var)))
    if isinstance(t, Abs):
        return _linear_abs(t.var, tra_bang(t.body))
    if isinstance(t, App):
        return App(tra_bang(t.fn), tra_bang(t.arg))
    if isinstance(t, ES):
        return ES(tra_bang(t.body), _shared(t.var), tra_bang(t.arg))
    if isinstance(t, Prom):
        return Prom(Grant(tra_bang(t.body)))
    raise ImageError("not a Bang term")


def _shareable(A):
    return TBang(TGrant(A))


def tra_cbn_type(A):
    if isinstance(A, (TAtom, TMeta)):
        return A
    if isinstance(A, Arrow):
        return Lolli(_shareable(tra_cbn_type(A.dom)), tra_cbn_type(A.cod))
    raise ImageError("not a simple type")


def tra_cbv_type(A):
    if isinstance(A, (TAtom, TMeta)):
        return A
    if isinstance(A, Arrow):
        return Lolli(_shareable(tra_cbv_type(A.dom)), _shareable(tra_cbv_type(A.cod)))
    raise ImageError("not a simple type")


def tra_cbs_type(A):
    if isinstance(A, (TAtom, TMeta)):
        return A
    if isinstance(A, Arrow):
        return Lolli(_shareable(tra_cbs_type(A.dom)), TGrant(tra_cbs_type(A.cod)))
    raise ImageError("not a simple type")


def tra_bang_type(A):
    if isinstance(A, (TAtom, TMeta)):
        return A
    if isinstance(A, TBang):
        return _shareable(tra_bang_type(A.body))
    if isinstance(A, Arrow):
        return Lolli(tra_bang_type(A.dom), tra_bang_type(A.cod))
    raise ImageError("not a Bang type")


TERM_TRANSLATIONS = {TranslationKind.CBN: tra_cbn,
                     TranslationKind.CBV: tra_cbv,
                     TranslationKind.CBS: tra_cbs,
                     TranslationKind.BANG: tra_bang}

TYPE_TRANSLATIONS = {TranslationKind.CBN: tra_cbn_type,
                     TranslationKind.CBV: tra_cbv_type,
                     TranslationKind.CBS: tra_cbs_type,
                     TranslationKind.BANG: tra_bang_type}


def translate(t,
              kind):
    """Translate a source term with the embedding named by kind."""
    return TERM_TRANSLATIONS[_kind(kind)](t)


def translate_type(A,
                   kind):
    return TYPE_TRANSLATIONS[_kind(kind)](A)


def translate_env(env,
                  kind):
    """Translate a source environment into the unrestricted context of a sharing judgment.

    Parameters
    ----------
    env: dict
        plain VarName -> source type
    kind: TranslationKind or str
        the embedding

    Returns
    -------
    TypingEnv
        every source variable becomes unrestricted; Bang variables must
        have a !-type, whose bang is removed
    """
    kind = _kind(kind)
    delta = {}
    for x, A in env.items():
        if kind == TranslationKind.BANG:
            if not isinstance(A, TBang):
                raise ImageError("bang variable {0} must have a !-type".format(x))
            A = A.body
        delta[_shared(x)] = translate_type(A, kind)
    return TypingEnv(delta, {})


def judgement_type(A,
                   kind):
    """Type of the translation of a term of source type A."""
    kind = _kind(kind)
    B = translate_type(A, kind)
    if kind == TranslationKind.CBV:
        return _shareable(B)
    if kind == TranslationKind.CBS:
        return TGrant(B)
    return B


def _linear_lam(t):
    """Match \\'a. s[x := 'a] with 'a not free in s; return (x, s) or None."""
    if not isinstance(t, Abs) or not isinstance(t.body, ES):
        return None
    es = t.body
    if es.arg != Var(t.var) or t.var.sort != LINEAR or es.var.sort != UNRESTRICTED:
        return None
    if t.var in free_vars(es.body):
        return None
    return es.var, es.body


def _is_shared_var(t):
    return isinstance(t, Var) and t.var.sort == UNRESTRICTED


def _productions(t, kind):
    """Return (production, subterms) for the unique production matching t."""
    lam = _linear_lam(t)
    if kind == TranslationKind.CBN:
        if isinstance(t, Request) and _is_shared_var(t.body):
            return "open(u)", ()
        if isinstance(t, Request) and isinstance(t.body, Grant):
            return "open(~t)", (t.body.body,)
        if lam is not None:
            return "lam", (lam[1],)
        if isinstance(t, App) and isinstance(t.arg, Prom) and isinstance(t.arg.body, Grant):
            return "app", (t.fn, t.arg.body.body)
        if isinstance(t, ES) and isinstance(t.arg, Prom) and isinstance(t.arg.body, Grant):
            return "es", (t.body, t.arg.body.body)
        return None
    if kind == TranslationKind.CBV:
        if isinstance(t, Prom) and _is_shared_var(t.body):
            return "!x", ()
        if isinstance(t, Prom) and isinstance(t.body, Grant) and _linear_lam(t.body.body):
            return "!~lam", (_linear_lam(t.body.body)[1],)
        if isinstance(t, ES) and t.body == Request(Var(t.var)):
            return "open(u)[u:=t]", (t.arg,)
        if isinstance(t, Request) and isinstance(t.body, Grant) and _linear_lam(t.body.body):
            return "open(~lam)", (_linear_lam(t.body.body)[1],)
        if lam is not None:
            return "lam", (lam[1],)
        if isinstance(t, App):
            return "app", (t.fn, t.arg)
        if isinstance(t, ES):
            return "es", (t.body, t.arg)
        return None
    if kind == TranslationKind.CBS:
        if _is_shared_var(t):
            return "x", ()
        if isinstance(t, Grant) and _linear_lam(t.body):
            return "~lam", (_linear_lam(t.body)[1],)
        if isinstance(t, Request):
            return "open", (t.body,)
        if isinstance(t, ES) and isinstance(t.arg, Prom):
            return "es", (t.body, t.arg.body)
        if lam is not None:
            return "lam", (lam[1],)
        if isinstance(t, App) and isinstance(t.arg, Prom):
            return "app", (t.fn, t.arg.body)
        return None
    if isinstance(t, Request) and _is_shared_var(t.body):
        return "open(u)", ()
    if isinstance(t, Request) and isinstance(t.body, Grant):
        return "open(~t)", (t.body.body,)
    if lam is not None:
        return "lam", (lam[1],)
    if isinstance(t, App):
        return "app", (t.fn, t.arg)
    if isinstance(t, Prom) and isinstance(t.body, Grant):
        return "!~t", (t.body.body,)
    if isinstance(t, ES):
        return "es", (t.body, t.arg)
    return None


def _witness(t, kind):
    matched = _productions(t, kind)
    if matched is None:
        return None
    production, parts = matched
    witness = [production]
    for part in parts:
        sub = _witness(part, kind)
        if sub is None:
            return None
        witness.extend(sub)
    return witness


def in_image(t,
             kind):
    """Recognize the image grammar of an embedding.

    Returns
    -------
    ImageMembership or None
        the productions used, or None when t is outside the grammar
    """
    kind = _kind(kind)
    witness = _witness(t, kind)
    if witness is None:
        return None
    return ImageMembership(kind, tuple(witness))


def inverse(t,
            kind):
    """Map a term of an image grammar back to the source calculus.

    Raises
    ------
    ImageError
        when t is not in the image grammar of kind
    """
    kind = _kind(kind)
    if in_image(t, kind) is None:
        raise ImageError("term is not in the {0} image".format(kind.value))
    return _inverse(t, kind)


def _inverse(t, kind):
    production, parts = _productions(t, kind)
    back = [_inverse(part, kind) for part in parts]
    if production in ("open(u)",):
        return Var(_plain(t.body.var))
    if production == "!x":
        return Var(_plain(t.body.var))
    if production == "x":
        return Var(_plain(t.var))
    if production in ("open(~t)", "open(u)[u:=t]", "open"):
        return back[0]
    if production == "lam":
        return Abs(_plain(t.body.var), back[0])
    if production == "!~lam":
        return Abs(_plain(t.body.body.body.var), back[0])
    if production == "open(~lam)":
        return Abs(_plain(t.body.body.body.var), back[0])
    if production == "~lam":
        return Abs(_plain(t.body.body.var), back[0])
    if production == "!~t":
        return Prom(back[0])
    if production == "app":
        return App(back[0], back[1])
    if production == "es":
        return ES(back[0], _plain(t.var), back[1])
    raise ImageError("no inverse for production {0}".format(production))


def _value_payload(v, kind):
    """Translate a substitution payload: ~ of the inner abstraction for cbv, answer for cbs."""
    if kind == TranslationKind.CBN:
        return Grant(tra_cbn(v))
    if kind == TranslationKind.CBV:
        return tra_cbv(v).body
    return tra_cbs(v)


def translate_rulename(rho,
                       kind):
    """Translate a source rulename into a sequence of sharing rulenames.

    Raises
    ------
    ImageError
        for a rulename that is not a rulename of the source calculus
    """
    kind = _kind(kind)
    tables = {TranslationKind.CBN: {"db": ("!db",),
                                    "ls": ("!ls", "!req"),
                                    "gc": ("!gc",)},
              TranslationKind.CBV: {"db": ("!ls", "!req", "!db", "!gc"),
                                    "lsv": ("!ls",),
                                    "gcvlax": ("!gc",)},
              TranslationKind.CBS: {"db": ("!req", "!db"),
                                    "lsw": ("!ls",),
                                    "gc": ("!gc",)}}
    if kind == TranslationKind.BANG:
        raise ImageError("bang steps carry no rulenames")
    table = tables[kind]
    if rho.tag in table:
        return tuple(SharingRulename(tag) for tag in table[rho.tag])
    if rho.tag == "sigma":
        name = SharingRulename("!sigma", _shared(rho.var), _value_payload(rho.payload, kind))
        if kind == TranslationKind.CBN:
            return (name, SharingRulename("!req"))
        return (name,)
    if rho.tag == "iota" and kind == TranslationKind.CBS:
        return (SharingRulename("!iota", _shared(rho.var)),)
    raise ImageError("foreign rulename {0} for {1}".format(rho, kind.value))


def inverse_rulename(rho,
                     kind):
    """Translate a sharing rulename back into the candidate source sequences.

    Returns
    -------
    frozenset of tuple
        every sequence of source rulenames the step may stand for; the
        empty sequence for administrative steps
    """
    kind = _kind(kind)
    if kind == TranslationKind.BANG:
        raise ImageError("bang steps carry no rulenames")
    if rho.tag == "!req":
        return frozenset([()])
    tables = {TranslationKind.CBN: {"!db": ["db"], "!ls": ["ls"], "!gc": ["gc"]},
              TranslationKind.CBV: {"!db": ["db"], "!ls": ["lsv", "gcvlax-1"],
                                    "!gc": ["gcvlax"]},
              TranslationKind.CBS: {"!db": ["db"], "!ls": ["lsw"], "!gc": ["gc"]}}
    table = tables[kind]
    if rho.tag in table:
        return frozenset((Rulename(tag),) for tag in table[rho.tag])
    if rho.tag == "!sigma":
        payload = rho.payload
        if kind != TranslationKind.CBS:
            if not isinstance(payload, Grant):
                raise ImageError("substitution payload must be a grant")
            payload = payload.body
        if in_image(payload, kind) is None:
            raise ImageError("substitution payload is not in the {0} image".format(
                kind.value))
        return frozenset([(Rulename("sigma", _plain(rho.var), _inverse(payload, kind)),)])
    if rho.tag == "!iota" and kind == TranslationKind.CBS:
        return frozenset([(Rulename("iota", _plain(rho.var)),)])
    raise ImageError("foreign rulename {0} for {1}".format(rho, kind.value))
