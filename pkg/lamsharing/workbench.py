#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright : see accompanying license files for details

__author__ = "The LamSharing developers"
__credits__ = []
__license__ = "LGPL"
__maintainer__ = "The LamSharing developers"
__version__ = '0.1.0'
__status__ = "production"

import dataclasses

from lamsharing.utils.terms import LSC, SHARING, BANG
from lamsharing.utils.io import parse_term, parse_type
from lamsharing.utils.types import Unifier, meta_names
from lamsharing.utils import lsc
from lamsharing.utils import sharing
from lamsharing.utils import bang
from lamsharing.utils import mscll
from lamsharing.utils import oracle
from lamsharing.utils import translations

import logging
logger = logging.getLogger(__name__)

CALCULI = ("cbn", "cbv", "cbs", "cbnd", "sharing", "bang", "bang-full", "lsc-fusion")
WEAK_CALCULI = ("cbn", "cbv", "cbs", "sharing")
KINDS = ("cbn", "cbv", "cbs", "bang", "sn")


def language_of(calculus):
    """Term language reduced by a calculus."""
    if calculus in lsc.CALCULI or calculus == "lsc-fusion":
        return LSC
    if calculus == "sharing":
        return SHARING
    if calculus in ("bang", "bang-full"):
        return BANG
    raise ValueError("unknown calculus {0}".format(calculus))


def source_language(kind,
                    inverse=False):
    """Language of the terms a translation reads."""
    if kind == "sn" or inverse:
        return SHARING
    return BANG if kind == "bang" else LSC


class Workbench(object):
    """Front object for the calculi, their translations and the property suites.

    Every method is a thin, logged wrapper around the functions of
    lamsharing.utils; the caps and the number of worker threads are the
    only state.

    Attributes
    ----------
    caps: lamsharing.utils.oracle.Caps
        bounds of explorations and exhaustive checks
    jobs: int
        number of worker threads of the property suites
    """

    def __init__(self,
                 caps=None,
                 jobs=1,
                 **overrides):
        """Constructor for the Workbench.

        Parameters
        ----------
        caps: lamsharing.utils.oracle.Caps, optional
            defaults to Caps()
        jobs: int, optional
            worker threads for check
        overrides:
            Caps fields to replace, e.g. max_nodes=500

        Returns
        -------
        None
        """
        # some pretty logging
        logger.info("{0:*^80}".format("*"))
        logger.info("* {0:^76} *".format("LamSharing"))
        logger.info("* {0:^76} *".format("Sharing linear lambda-calculus workbench"))
        logger.info("* {0:^76} *".format("LSC, Bang and sharing calculi, translations"))
        logger.info("{0:*^80}".format("*"))
        logger.info("")
        caps = caps or oracle.Caps()
        self.caps = dataclasses.replace(caps, **overrides)
        self.jobs = max(1, int(jobs))
        logger.debug("Caps: {0}".format(self.caps))
        return None

    def parse(self,
              text,
              language):
        return parse_term(text, language)

    def parse_type(self,
                   text,
                   language):
        return parse_type(text, language)

    def steps(self,
              t,
              calculus,
              strategy="full",
              deterministic=False):
        """One-step reducts of t.

        Parameters
        ----------
        t: Term
            a term of the calculus' language
        calculus: str
            one of CALCULI; lsc-fusion lists the fusion successors
        strategy: str
            'full' for the calculus relation, 'weak' for weak evaluation
        deterministic: bool
            keep only the first step

        Returns
        -------
        [Step, ...]
            in the fixed listing order
        """
        if strategy == "weak":
            if calculus not in WEAK_CALCULI:
                raise ValueError("no weak evaluation for {0}".format(calculus))
            if calculus == "sharing":
                found = sharing.weak_eval_sharing(t, deterministic=deterministic)
            else:
                found = lsc.weak_eval_steps(t, calculus, deterministic=deterministic)
            return found
        if calculus == "lsc-fusion":
            found = [lsc.Step("fusion", reduct, None) for reduct in lsc.fusion_steps(t)]
        else:
            found = oracle.STEPPERS[calculus](t)
        return found[:1] if deterministic else found

    def trace(self,
              t,
              calculus,
              strategy="full",
              max_steps=None):
        """Follow the first step until a normal form or max_steps.

        Returns
        -------
        [Step, ...]
            the steps taken; their reducts form the trace
        """
        if max_steps is None:
            max_steps = self.caps.max_depth
        taken = []
        for _ in range(max_steps):
            found = self.steps(t, calculus, strategy=strategy, deterministic=True)
            if not found:
                break
            taken.append(found[0])
            t = found[0].reduct
        logger.info("Trace of {0} steps in {1}.".format(len(taken), calculus))
        return taken

    def graph(self,
              t,
              calculus):
        """Reachability graph of t under the full relation of a calculus."""
        graph = oracle.reachable_set(t, calculus, self.caps)
        if graph.truncated:
            logger.warning("Exploration stopped at {0} nodes.".format(len(graph)))
        return graph

    def is_normal(self,
                  t,
                  calculus):
        return not self.steps(t, calculus)

    def classify(self,
                 t):
        """Normal-form tag of a sharing term, None when it reduces."""
        return sharing.classify_nf(t)

    def translate(self,
                  t,
                  kind,
                  inverse=False):
        """Translate t; kind 'sn' is the projection of sharing terms to the LSC."""
        if kind == "sn":
            if inverse:
                raise ValueError("the sn translation has no inverse")
            return sharing.to_lsc(t)
        if inverse:
            return translations.inverse(t, kind)
        return translations.translate(t, kind)

    def translate_type(self,
                       A,
                       kind):
        if kind == "sn":
            return sharing.to_lsc_type(A)
        return translations.translate_type(A, kind)

    def typecheck(self,
                  t,
                  language,
                  expected=None):
        """Type t in its language.

        Parameters
        ----------
        t: Term
            a term
        language: str
            'lsc', 'sharing' or 'bang'
        expected: Type, optional
            checking mode when given

        Returns
        -------
        (dict, Type)
            the environment of the free variables and the type, possibly
            with metavariables (a principal scheme)
        """
        if language == SHARING:
            typing = sharing.typecheck_sharing(None, t, expected=expected)
            env = dict(typing.env.delta)
            env.update(typing.env.gamma)
            return env, typing.type
        principal = lsc.lsc_principal_type if language == LSC else bang.bang_principal_type
        env, A = principal(t)
        if expected is not None:
            # expected must be an instance of the principal type
            unifier = Unifier()
            unifier.unify(A, expected)
            env = {x: unifier.resolve(B) for x, B in env.items()}
            A = unifier.resolve(A)
        return env, A

    def scheme_names(self,
                     env,
                     A):
        """Letters for the metavariables of a judgment, type first."""
        return meta_names([A] + [env[x] for x in sorted(env)])

    def compile(self,
                t):
        """Compile the typing of a sharing term into a checked MSCLL derivation."""
        typing = sharing.typecheck_sharing(None, t)
        derivation = mscll.compile_typing(typing)
        logger.info("Compiled a derivation of |- {0}.".format(derivation.conclusion))
        return derivation

    def check(self,
              suites=None,
              size=None):
        """Run property suites.

        Parameters
        ----------
        suites: [str, ...], optional
            keys of oracle.SUITES, all by default
        size: int, optional
            largest instance size

        Returns
        -------
        [lamsharing.utils.oracle.PropertyReport, ...]
        """
        return oracle.run(suites, size=size, caps=self.caps, jobs=self.jobs)
