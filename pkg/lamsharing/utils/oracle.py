#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Copyright : see accompanying license files for details

"""Exhaustive enumeration of small terms and the property checkers run on them.

Every checker takes one instance and returns a PropertyReport for it;
the suites of SUITES enumerate their instances by increasing size and
merge the reports in enumeration order, so the first failure of a
report is always a smallest counterexample.
"""

__author__ = "The LamSharing developers"
__credits__ = []
__license__ = "LGPL"
__maintainer__ = "The LamSharing developers"
__version__ = '0.1.0'
__status__ = "production"

import collections
import dataclasses
import functools
import itertools
import time
import typing

import numpy

from concurrent.futures import ThreadPoolExecutor

from lamsharing.graph import ReductionGraph
from lamsharing.utils import LamSharingError
from lamsharing.utils.terms import Var, Abs, App, ES, Grant, Request, Prom, Der
from lamsharing.utils.terms import VarName, LINEAR, UNRESTRICTED, PLAIN
from lamsharing.utils.terms import LSC, SHARING, BANG, has_der
from lamsharing.utils.operations import NameSupply, free_vars, canonical
from lamsharing.utils.io import parse_term, print_term
from lamsharing.utils.types import TypingError, skolemize
from lamsharing.utils import lsc
from lamsharing.utils import sharing
from lamsharing.utils import bang
from lamsharing.utils import mscll
from lamsharing.utils.translations import TranslationKind, STEP_BOUNDS
from lamsharing.utils.translations import translate, translate_rulename
from lamsharing.utils.translations import translate_env, judgement_type
from lamsharing.utils.translations import in_image, inverse, inverse_rulename

import logging
logger = logging.getLogger(__name__)

DEFAULT_POOLS = {LSC: (VarName(PLAIN, "x"), VarName(PLAIN, "y"), VarName(PLAIN, "z")),
                 BANG: (VarName(PLAIN, "x"), VarName(PLAIN, "y"), VarName(PLAIN, "z")),
                 SHARING: (VarName(LINEAR, "a"), VarName(LINEAR, "b"),
                           VarName(UNRESTRICTED, "u"), VarName(UNRESTRICTED, "v"))}

BINDER_BASES = {LINEAR: "c", UNRESTRICTED: "w", PLAIN: "v"}

# sorts bound by abstractions and by explicit substitutions
_BINDER_SORTS = {LSC: (PLAIN, PLAIN),
                 BANG: (PLAIN, PLAIN),
                 SHARING: (LINEAR, UNRESTRICTED)}

_UNARY = {LSC: (),
          BANG: (Prom, Der),
          SHARING: (Grant, Request, Prom)}

# rule sequences simulating one simplified Bang step
BANG_SEQUENCES = {"dbB": ("!db",), "lsB": ("!ls", "!req"), "gcB": ("!gc",)}

# allowed number of trailing gc steps when a gc step is postponed
SHARING_POSTPONEMENT = {"!db": "*", "!ls": "+", "!req": "1"}
LSC_POSTPONEMENT = {"db": "*", "ls": "+"}

FIXTURES = {"omega": (SHARING, "(\\'a. 'a 'a) (\\'a. 'a 'a)"),
            "omega-growing": (SHARING, "(\\'a. 'a 'a 'a) (\\'a. 'a 'a 'a)"),
            "flattening-peak": (SHARING, "u_0[u := (!v)[v := (!~u_1)[w := !u_2]]]"),
            "cbn-redex": (LSC, "(\\x. x) y"),
            "cbn-ls": (LSC, "x[x := y]"),
            "typing-example": (SHARING, "\\'a. (!~(!u))[u := 'a]")}


@dataclasses.dataclass
class Caps(object):
    """Bounds of the exhaustive checks.

    max_size is the default enumeration size, max_nodes bounds every
    reachability graph, max_depth bounds reduction lengths,
    simulation_depth bounds the searches for simulating sequences and
    fusion_nodes bounds fusion closures.
    """
    max_size: int = 8
    max_nodes: int = 10_000
    max_depth: int = 5_000
    simulation_depth: int = 4
    fusion_nodes: int = 20_000


@dataclasses.dataclass(frozen=True)
class Failure(object):
    input: str
    expected: str
    actual: str


@dataclasses.dataclass
class PropertyReport(object):
    """Outcome of a property over some instances.

    An instance is inconclusive when a cap stopped its check before a
    verdict; inconclusive instances are neither failures nor successes.
    """
    property: str
    checked: int = 0
    failures: list = dataclasses.field(default_factory=list)
    inconclusive: int = 0
    seconds: float = 0.0

    @property
    def ok(self):
        return not self.failures

    def fail(self,
             t,
             expected,
             actual):
        text = t if isinstance(t, str) else print_term(t)
        self.failures.append(Failure(text, str(expected), str(actual)))
        logger.debug("{0}: {1} expected {2}, got {3}".format(
            self.property, text, expected, actual))
        return None

    def merge(self,
              other):
        self.checked += other.checked
        self.failures.extend(other.failures)
        self.inconclusive += other.inconclusive
        return None

    def to_dict(self):
        return {"id": self.property,
                "checked": self.checked,
                "failures": len(self.failures),
                "inconclusive": self.inconclusive,
                "seconds": round(self.seconds, 3),
                "counterexamples": [dataclasses.asdict(f) for f in self.failures[:10]]}

    def format(self,
               limit=5):
        """Structured text: a summary line then the first failures."""
        lines = ["{0:<20} checked={1} failures={2} inconclusive={3} seconds={4:.2f}".format(
            self.property, self.checked, len(self.failures), self.inconclusive, self.seconds)]
        for failure in self.failures[:limit]:
            lines.append("  input:    {0}".format(failure.input))
            lines.append("  expected: {0}".format(failure.expected))
            lines.append("  actual:   {0}".format(failure.actual))
        return "\n".join(lines)


@dataclasses.dataclass(frozen=True)
class SnResult(object):
    """Termination verdict of a term.

    steps is the length of the longest reduction sequence when every
    sequence terminates within the caps, None otherwise.
    """
    terminating: bool
    steps: typing.Optional[int]
    nodes: int
    cyclic: bool
    truncated: bool


def fixture(name):
    language, text = FIXTURES[name]
    return parse_term(text, language)


# enumeration


def _pool(language, pool):
    if language not in DEFAULT_POOLS:
        raise ValueError("unknown language {0}".format(language))
    return tuple(DEFAULT_POOLS[language] if pool is None else pool)


def enumerate_terms(language,
                    size,
                    pool=None):
    """Every term of a language with exactly size nodes.

    Parameters
    ----------
    language: str
        'lsc', 'sharing' or 'bang'
    size: int
        node count, at least 1
    pool: [VarName, ...], optional
        the free variables to draw from; see DEFAULT_POOLS

    Yields
    ------
    Term
        one representative per alpha-class, in a fixed order: variables,
        abstractions, applications, explicit substitutions, then the
        unary constructors. Bound variables are named by binder depth.
    """
    if size < 1:
        raise ValueError("terms have at least one node")
    pool = _pool(language, pool)
    for t in _generate(language, size, pool):
        yield t


def _binder(sort, scope):
    return VarName(sort, BINDER_BASES[sort], len(scope))


def _generate(language, n, scope):
    if n == 1:
        for x in scope:
            yield Var(x)
        return
    abs_sort, es_sort = _BINDER_SORTS[language]
    a = _binder(abs_sort, scope)
    for body in _terms(language, n - 1, scope + (a,)):
        yield Abs(a, body)
    for i in range(1, n - 1):
        for fn in _terms(language, i, scope):
            for arg in _terms(language, n - 1 - i, scope):
                yield App(fn, arg)
    x = _binder(es_sort, scope)
    for i in range(1, n - 1):
        for body in _terms(language, i, scope + (x,)):
            for arg in _terms(language, n - 1 - i, scope):
                yield ES(body, x, arg)
    for constructor in _UNARY[language]:
        for body in _terms(language, n - 1, scope):
            yield constructor(body)


@functools.lru_cache(maxsize=None)
def _terms(language, n, scope):
    return tuple(_generate(language, n, scope))


def terms_up_to(language,
                size,
                pool=None):
    """Every term of size 1 to size, by increasing size."""
    for n in range(1, size + 1):
        for t in enumerate_terms(language, n, pool):
            yield t


def count_terms(language,
                size,
                pool=None):
    """Number of terms enumerate_terms yields, by a recurrence on sizes and scopes.

    The table holds the count per size and per number of linear and of
    other variables in scope.
    """
    pool = _pool(language, pool)
    linear = sum(1 for x in pool if x.sort == LINEAR)
    other = len(pool) - linear
    abs_sort, es_sort = _BINDER_SORTS[language]
    unary = len(_UNARY[language])
    L = linear + size + 1
    W = other + size + 1
    table = numpy.zeros((size + 1, L, W), dtype=numpy.int64)
    for l, w in itertools.product(range(L), range(W)):
        table[1, l, w] = l + w
    for n in range(2, size + 1):
        for l, w in itertools.product(range(L - 1), range(W - 1)):
            total = table[n - 1, l + 1, w] if abs_sort == LINEAR else table[n - 1, l, w + 1]
            el, ew = (l, w + 1) if es_sort != LINEAR else (l + 1, w)
            for i in range(1, n - 1):
                total += table[i, l, w] * table[n - 1 - i, l, w]
                total += table[i, el, ew] * table[n - 1 - i, l, w]
            total += unary * table[n - 1, l, w]
            table[n, l, w] = total
    return int(table[size, linear, other])


def enumerate_formulas(size,
                       atoms=("A",)):
    """Every MSCLL formula with exactly size nodes over some atom names."""
    if size == 1:
        for name in atoms:
            yield mscll.FAtom(name, True)
            yield mscll.FAtom(name, False)
        return
    for constructor in (mscll.OfCourse, mscll.WhyNot, mscll.GrantF, mscll.DemandF):
        for body in enumerate_formulas(size - 1, atoms):
            yield constructor(body)
    for i in range(1, size - 1):
        for left in enumerate_formulas(i, atoms):
            for right in enumerate_formulas(size - 1 - i, atoms):
                yield mscll.Tensor(left, right)
                yield mscll.Par(left, right)


# reachability


STEPPERS = {"cbn": functools.partial(lsc.lsc_redexes, calc="cbn"),
            "cbv": functools.partial(lsc.lsc_redexes, calc="cbv"),
            "cbs": functools.partial(lsc.lsc_redexes, calc="cbs"),
            "cbnd": functools.partial(lsc.lsc_redexes, calc="cbnd"),
            "sharing": sharing.sharing_redexes,
            "bang": functools.partial(bang.bang_redexes, simplified=True),
            "bang-full": functools.partial(bang.bang_redexes, simplified=False)}


def reachable_set(t,
                  stepper,
                  caps=None):
    """Breadth-first closure of t under a one-step reduction function.

    Parameters
    ----------
    t: Term
        the root
    stepper: callable or str
        Term -> [Step, ...], or a key of STEPPERS
    caps: Caps, optional
        max_nodes bounds the node count and max_depth the distance from
        the root

    Returns
    -------
    lamsharing.graph.ReductionGraph
        truncated when a cap was hit; never raises on caps
    """
    caps = caps or Caps()
    if isinstance(stepper, str):
        stepper = STEPPERS[stepper]
    graph = ReductionGraph(root=t)
    queue = collections.deque([(0, 0)])
    while queue:
        node, depth = queue.popleft()
        if depth >= caps.max_depth:
            graph.truncated = True
            graph.frontier.add(node)
            continue
        for step in stepper(graph[node]):
            if step.reduct not in graph and len(graph) >= caps.max_nodes:
                graph.truncated = True
                graph.frontier.add(node)
                continue
            target, created = graph.add_node(step.reduct)
            graph.add_edge(_tag(step.rule), node, target)
            if created:
                queue.append((target, depth + 1))
    if graph.truncated:
        logger.debug("exploration of {0} stopped at {1} nodes".format(
            print_term(t), len(graph)))
    return graph


def _tag(rule):
    return rule if isinstance(rule, str) else rule.tag


def _follow(t, tags, stepper):
    """Canonical forms of the terms reached from t by steps labelled tags, in order."""
    frontier = [t]
    for tag in tags:
        frontier = [step.reduct for r in frontier for step in stepper(r)
                    if _tag(step.rule) == tag]
    return {canonical(r) for r in frontier}


def _gc_closure(t, tag, stepper, limit):
    """Map canonical terms reached from t by gc steps to their distances."""
    distances = {canonical(t): 0}
    frontier = [t]
    for distance in range(1, limit + 1):
        following = []
        for r in frontier:
            for step in stepper(r):
                key = canonical(step.reduct)
                if _tag(step.rule) == tag and key not in distances:
                    distances[key] = distance
                    following.append(step.reduct)
        if not following:
            break
        frontier = following
    return distances


def _typing(t):
    try:
        return sharing.typecheck_sharing(None, t)
    except TypingError:
        return None


def _flat_key(t):
    """A representative of the flattening class of t, up to renaming."""
    return min(print_term(canonical(r)) for r in sharing.flatten_class(canonical(t)))


def _reach(t, successors, depth):
    """Canonical forms of the terms reached from t in at most depth steps."""
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
        frontier = following
    return seen


# checkers


def check_left_inverse(t,
                       kind,
                       caps=None):
    kind = TranslationKind(kind)
    report = PropertyReport("left-inverse", checked=1)
    image = translate(t, kind)
    try:
        back = inverse(image, kind)
    except LamSharingError as exc:
        report.fail(t, "an image term", exc)
        return report
    if canonical(back) != canonical(t):
        report.fail(t, print_term(t), print_term(back))
    return report


def _source_steps(t, kind):
    if kind == TranslationKind.BANG:
        return bang.bang_redexes(t, simplified=True)
    return lsc.lsc_redexes(t, kind.value)


def _sequence(rule, kind):
    if kind == TranslationKind.BANG:
        return BANG_SEQUENCES[rule]
    return tuple(name.tag for name in translate_rulename(lsc.Rulename(rule), kind))


def check_simulation(t,
                     kind,
                     caps=None):
    """Check that the translation of t simulates every step of t.

    Every calculus step of t must be matched by the sharing steps its
    rulename translates to, within the step bound of its rule, ending on
    the translation of the reduct. For the LSC strategies every weak
    evaluation step must also be matched by weak sharing evaluation.
    """
    kind = TranslationKind(kind)
    report = PropertyReport("simulation", checked=1)
    image = translate(t, kind)
    for step in _source_steps(t, kind):
        tags = _sequence(step.rule, kind)
        expected = canonical(translate(step.reduct, kind))
        if not 1 <= len(tags) <= STEP_BOUNDS[kind][step.rule]:
            report.fail(t, "at most {0} steps for {1}".format(
                STEP_BOUNDS[kind][step.rule], step.rule), len(tags))
        elif expected not in _follow(image, tags, sharing.sharing_redexes):
            report.fail(t, "{0} simulated by {1} to {2}".format(
                step.rule, ",".join(tags), print_term(expected)), "no such sequence")
    if kind == TranslationKind.BANG:
        return report
    for step in lsc.weak_eval_steps(t, kind.value):
        tags = tuple(name.tag for name in translate_rulename(step.rule, kind))
        expected = canonical(translate(step.reduct, kind))
        if expected not in _follow(image, tags, sharing.weak_eval_sharing):
            report.fail(t, "weak {0} simulated by {1} to {2}".format(
                step.rule, ",".join(tags), print_term(expected)), "no such sequence")
    return report


def _inverse_step(source,
                  target,
                  rule,
                  kind,
                  weak=False):
    """Decide whether source reaches target in at most one source step allowed by rule.

    With weak, the source step must be a weak evaluation step. The
    call-by-value inverse gc step goes through the extended relation of
    the cbv engine.
    """
    goal = canonical(target)
    if kind == TranslationKind.BANG:
        if canonical(source) == goal:
            return True
        return any(canonical(step.reduct) == goal
                   for step in bang.bang_redexes(source, simplified=True))
    for sequence in inverse_rulename(sharing.SharingRulename(rule), kind):
        if not sequence:
            if canonical(source) == goal:
                return True
            continue
        tag = sequence[0].tag
        if tag == "gcvlax-1":
            if weak:
                steps = lsc.weak_eval_steps(source, "cbv", gc_inverse_target=target)
                if any(step.rule.tag == tag for step in steps):
                    return True
            elif lsc.extended_cbv_reaches(source, target, 1):
                return True
            continue
        if weak:
            steps = lsc.weak_eval_steps(source, kind.value)
        else:
            steps = lsc.lsc_redexes(source, kind.value)
        if any(_tag(step.rule) == tag and canonical(step.reduct) == goal for step in steps):
            return True
    return False


def _inverse_closure(t, kind, stepper, weak, caps, report):
    graph = reachable_set(translate(t, kind), stepper, caps)
    if graph.truncated:
        report.inconclusive = 1
    for _, term in graph:
        if in_image(term, kind) is None:
            report.fail(t, "{0} image".format(kind.value), print_term(term))
            return None
    mode = "weak " if weak else ""
    for rule, i, j in graph.edges:
        source, target = inverse(graph[i], kind), inverse(graph[j], kind)
        if not _inverse_step(source, target, rule, kind, weak=weak):
            report.fail(t, "{0}{1} inverts from {2} to {3}".format(
                mode, rule, print_term(source), print_term(target)), "no source step")
    return None


def check_image_closure(t,
                        kind,
                        caps=None):
    """Check that reduction from the translation of t stays in the image and inverts.

    Every step between reachable terms must land in the image grammar,
    and the inverse translations of its ends must be related by at most
    one source step (for call-by-value, a step or an inverse gc step).
    For the LSC strategies the same holds for weak evaluation: every weak
    sharing step inverts to at most one weak source step.
    """
    caps = caps or Caps()
    kind = TranslationKind(kind)
    report = PropertyReport("image-closure", checked=1)
    _inverse_closure(t, kind, sharing.sharing_redexes, False, caps, report)
    if kind != TranslationKind.BANG and report.ok:
        _inverse_closure(t, kind, sharing.weak_eval_sharing, True, caps, report)
    return report


def check_nf_preservation(t,
                          kind,
                          caps=None):
    kind = TranslationKind(kind)
    report = PropertyReport("nf-preservation", checked=1)
    source = not _source_steps(t, kind)
    target = sharing.sharing_is_nf(translate(t, kind))
    if source != target:
        report.fail(t, "normal" if source else "not normal",
                    "translation normal" if target else "translation not normal")
    return report


def check_nf_grammar(t,
                     caps=None):
    report = PropertyReport("nf-grammar", checked=1)
    tag = sharing.classify_nf(t)
    normal = sharing.sharing_is_nf(t)
    if (tag is not None) != normal:
        report.fail(t, "normal" if normal else "not normal", tag)
    return report


def check_subject_reduction(t,
                            language,
                            caps=None):
    """Check that every step from a typable term preserves its type.

    Metavariables of the principal typing are turned into atoms first,
    so the reduct must have the very same type in the same environment.
    """
    report = PropertyReport("subject-reduction", checked=1)
    mapping = {}
    if language == SHARING:
        typing = _typing(t)
        if typing is None:
            report.checked = 0
            return report
        env = sharing.TypingEnv({u: skolemize(A, mapping) for u, A in typing.env.delta.items()},
                                {a: skolemize(A, mapping) for a, A in typing.env.gamma.items()})
        expected = skolemize(typing.type, mapping)
        for step in sharing.sharing_redexes(t):
            try:
                sharing.typecheck_sharing(env, step.reduct, expected=expected)
            except TypingError as exc:
                report.fail(t, "{0} reduct typed".format(step.rule), exc)
        return report
    principal = lsc.lsc_principal_type if language == LSC else bang.bang_principal_type
    check = lsc.lsc_typecheck if language == LSC else bang.bang_typecheck
    try:
        env, A = principal(t)
    except TypingError:
        report.checked = 0
        return report
    env = {x: skolemize(B, mapping) for x, B in env.items()}
    expected = skolemize(A, mapping)
    if language == LSC:
        steps = [step for calc in lsc.CALCULI for step in lsc.lsc_redexes(t, calc)]
    else:
        steps = bang.bang_redexes(t, simplified=False)
    for step in steps:
        try:
            check(env, step.reduct, expected=expected)
        except TypingError as exc:
            report.fail(t, "{0} reduct typed".format(step.rule), exc)
    return report


def check_typing_preservation(t,
                              kind,
                              caps=None):
    """Check that a translation keeps the principal typing of its source.

    For a source term and an embedding, the translation must type in the
    translated environment with the judgment type of the source type. For
    a sharing term (kind is 'sharing'), its projection must have the
    projected type in the projected environment. Untypable terms are not
    counted.
    """
    report = PropertyReport("typing-preservation", checked=1)
    mapping = {}
    if kind == SHARING:
        typing = _typing(t)
        if typing is None:
            report.checked = 0
            return report
        env = sharing.TypingEnv({u: skolemize(A, mapping) for u, A in typing.env.delta.items()},
                                {a: skolemize(A, mapping) for a, A in typing.env.gamma.items()})
        expected = sharing.to_lsc_type(skolemize(typing.type, mapping))
        try:
            lsc.lsc_typecheck(sharing.to_lsc_env(env, t), sharing.to_lsc(t), expected=expected)
        except TypingError as exc:
            report.fail(t, "projection typed", exc)
        return report
    kind = TranslationKind(kind)
    principal = bang.bang_principal_type if kind == TranslationKind.BANG else lsc.lsc_principal_type
    try:
        env, A = principal(t)
    except TypingError:
        report.checked = 0
        return report
    env = {x: skolemize(B, mapping) for x, B in env.items()}
    A = skolemize(A, mapping)
    try:
        sharing.typecheck_sharing(translate_env(env, kind), translate(t, kind),
                                  expected=judgement_type(A, kind))
    except TypingError as exc:
        report.fail(t, "{0} translation typed".format(kind.value), exc)
    return report


def check_confluence_mod_flatten(t,
                                 caps=None):
    """Check that all normal forms reachable from t are equal up to flattening.

    A truncated exploration is inconclusive.
    """
    caps = caps or Caps()
    report = PropertyReport("confluence", checked=1)
    graph = reachable_set(t, sharing.sharing_redexes, caps)
    if graph.truncated:
        report.inconclusive = 1
        return report
    keys = {}
    for node in graph.maximal():
        keys.setdefault(_flat_key(graph[node]), graph[node])
    if len(keys) > 1:
        first, second = list(keys.values())[:2]
        report.fail(t, print_term(first), print_term(second))
    return report


def check_bisimulation(t,
                       caps=None):
    """Check that flattening is a strong bisimulation for the four rules."""
    report = PropertyReport("bisimulation", checked=1)
    t = canonical(t)
    steps = sharing.sharing_redexes(t)
    for s in sharing.flatten_class(t)[1:]:
        answers = collections.defaultdict(set)
        for step in sharing.sharing_redexes(s):
            answers[step.rule].add(_flat_key(step.reduct))
        for step in steps:
            if _flat_key(step.reduct) not in answers[step.rule]:
                report.fail(t, "{0} step matched from {1}".format(step.rule, print_term(s)),
                            print_term(step.reduct))
    return report


def _postponement(t, stepper, gc, shapes, limit, report):
    for first in stepper(t):
        if _tag(first.rule) != gc:
            continue
        for second in stepper(first.reduct):
            rule = _tag(second.rule)
            if rule not in shapes:
                continue
            goal = canonical(second.reduct)
            found = False
            for swapped in stepper(t):
                if _tag(swapped.rule) != rule:
                    continue
                distance = _gc_closure(swapped.reduct, gc, stepper, limit).get(goal)
                if distance is not None and _allowed(distance, shapes[rule]):
                    found = True
                    break
            if not found:
                report.fail(t, "{0};{1} closes as {1};{0}{2}".format(gc, rule, shapes[rule]),
                            print_term(second.reduct))
    return None


def _allowed(distance, shape):
    if shape == "*":
        return True
    if shape == "+":
        return distance >= 1
    return distance == int(shape)


def check_gc_postponement(t,
                          caps=None):
    caps = caps or Caps()
    report = PropertyReport("gc-postponement", checked=1)
    _postponement(t, sharing.sharing_redexes, "!gc", SHARING_POSTPONEMENT,
                  caps.simulation_depth, report)
    return report


def check_lsc_gc_postponement(t,
                              caps=None):
    caps = caps or Caps()
    report = PropertyReport("lsc-gc-postponement", checked=1)
    _postponement(t, STEPPERS["cbn"], "gc", LSC_POSTPONEMENT,
                  caps.simulation_depth, report)
    return report


def check_sn(t,
             caps=None):
    """Decide whether every reduction sequence from t terminates within the caps.

    Parameters
    ----------
    t: Term
        a sharing term
    caps: Caps or int, optional
        an int is taken as the step cap

    Returns
    -------
    SnResult
        not terminating when the graph has a cycle, was truncated, or has
        a sequence longer than the step cap
    """
    if isinstance(caps, int):
        caps = Caps(max_depth=caps)
    caps = caps or Caps()
    graph = reachable_set(t, sharing.sharing_redexes, caps)
    cyclic = graph.has_cycle()
    if cyclic or graph.truncated:
        return SnResult(False, None, len(graph), cyclic, graph.truncated)
    steps = graph.longest_path()
    return SnResult(steps <= caps.max_depth, steps, len(graph), False, False)


def _check_sn_instance(t,
                       caps=None):
    report = PropertyReport("sn", checked=1)
    if _typing(t) is None:
        report.checked = 0
        return report
    result = check_sn(t, caps)
    if not result.terminating:
        report.fail(t, "termination", "cycle" if result.cyclic else "cap exceeded")
    return report


def _fusion_closure(t, limit):
    seen = {canonical(t)}
    frontier = [t]
    while frontier:
        following = []
        for r in frontier:
            for s in lsc.fusion_steps(r):
                key = canonical(s)
                if key not in seen:
                    if len(seen) >= limit:
                        return seen, True
                    seen.add(key)
                    following.append(s)
        frontier = following
    return seen, False


def check_sn_fusion(t,
                    caps=None):
    """Check that LSC steps on the projection of t simulate its steps up to fusion.

    Only !db, !req and !ls steps are simulated; gc steps are postponed
    (see check_gc_postponement) and LSC answers with db and ls steps.
    """
    caps = caps or Caps()
    report = PropertyReport("sn-fusion", checked=1)
    if _typing(t) is None:
        report.checked = 0
        return report
    image = sharing.to_lsc(t)
    reached = _reach(image, lambda r: [s.reduct for s in lsc.lsc_redexes(r, "cbn")
                                       if s.rule != "gc"],
                     caps.simulation_depth)
    candidates = [r for key, r in reached.items() if key != canonical(image)]
    closures = {}
    for step in sharing.sharing_redexes(t):
        if step.rule == "!gc":
            continue
        goal = canonical(sharing.to_lsc(step.reduct))
        truncated = False
        found = False
        for i, r in enumerate(candidates):
            if i not in closures:
                closures[i] = _fusion_closure(r, caps.fusion_nodes)
            closure, cut = closures[i]
            truncated = truncated or cut
            if goal in closure:
                found = True
                break
        if found:
            continue
        if truncated:
            report.inconclusive = 1
        else:
            report.fail(t, "{0} simulated up to fusion".format(step.rule), print_term(goal))
    return report


def check_weak_eval(t,
                    kind,
                    caps=None):
    """Check weak evaluation against full reduction and against its translation.

    Weak steps must be calculus steps with the same rule. For the LSC
    strategies the substitution and need judgments of t and of its
    translation must agree on every free variable.
    """
    report = PropertyReport("weak-eval", checked=1)
    if kind == SHARING:
        full = {(step.rule, canonical(step.reduct)) for step in sharing.sharing_redexes(t)}
        for step in sharing.weak_eval_sharing(t):
            if (step.rule.tag, canonical(step.reduct)) not in full:
                report.fail(t, "{0} step of the calculus".format(step.rule),
                            print_term(step.reduct))
        return report
    kind = TranslationKind(kind)
    full = {(step.rule, canonical(step.reduct)) for step in lsc.lsc_redexes(t, kind.value)}
    for step in lsc.weak_eval_steps(t, kind.value):
        if (step.rule.tag, canonical(step.reduct)) not in full:
            report.fail(t, "{0} step of the calculus".format(step.rule),
                        print_term(step.reduct))
    if kind == TranslationKind.CBN:
        return report
    image = translate(t, kind)
    w = NameSupply(free_vars(t)).fresh(VarName(PLAIN, "w"))
    value = Abs(w, Var(w))
    for x in sorted(free_vars(t)):
        shared = x.with_sort(UNRESTRICTED)
        name = lsc.Rulename("sigma", x, value)
        payload = translate_rulename(name, kind)[0].payload
        source = {canonical(translate(r, kind))
                  for r in lsc.substitution_steps(t, kind.value, x, value)}
        target = {canonical(r) for r in sharing.substitution_steps(image, shared, payload)}
        if source != target:
            report.fail(t, "{0} reducts {1}".format(name, sorted(map(print_term, source))),
                        sorted(map(print_term, target)))
        if kind == TranslationKind.CBS:
            if lsc.needs(t, "cbs", x) != sharing.needs(image, shared):
                report.fail(t, "iota({0}) {1}".format(x, lsc.needs(t, "cbs", x)),
                            sharing.needs(image, shared))
    return report


def check_bang_unfold(t,
                      caps=None):
    """Check that full and simplified Bang reduction simulate each other through unfolding."""
    caps = caps or Caps()
    report = PropertyReport("bang-unfold", checked=1)
    s = bang.canonical_unfold(t)
    if not bang.der_unfold(t, s):
        report.fail(t, "unfolds to {0}".format(print_term(s)), "no unfolding")
        return report
    simplified = functools.partial(bang.bang_redexes, simplified=True)
    for step in bang.bang_redexes(t, simplified=False):
        if step.rule == "gcB":
            reached = _reach(s, lambda r: [x.reduct for x in simplified(r)],
                             caps.simulation_depth).values()
        else:
            reached = [x.reduct for x in simplified(s)]
        if not any(bang.der_unfold(step.reduct, r) for r in reached):
            report.fail(t, "{0} simulated".format(step.rule), print_term(step.reduct))
    for step in simplified(s):
        if bang.der_unfold(t, step.reduct):
            continue
        if not any(bang.der_unfold(back.reduct, step.reduct)
                   for back in bang.bang_redexes(t, simplified=False)):
            report.fail(t, "{0} of the unfolding simulated".format(step.rule),
                        print_term(step.reduct))
    return report


def _mell_dereliction():
    A = mscll.FAtom("A")
    premise = mscll.Derivation("ax", mscll.Sequent([mscll.neg(A), A]), (), A)
    why = mscll.WhyNot(mscll.neg(A))
    return mscll.Derivation("derD", mscll.Sequent([why, A]), (premise,), why)


def check_mscll(instance,
                caps=None):
    """Check one formula, one typable term, or the rejected MELL dereliction."""
    report = PropertyReport("mscll", checked=1)
    if isinstance(instance, mscll.Derivation):
        if not mscll.check_derivation(instance):
            report.fail("MELL dereliction", "rejected", "accepted")
        return report
    if isinstance(instance, mscll.Formula):
        if mscll.neg(mscll.neg(instance)) != instance:
            report.fail(mscll.format_formula(instance), "involution",
                        mscll.format_formula(mscll.neg(mscll.neg(instance))))
        return report
    typing = _typing(instance)
    if typing is None:
        report.checked = 0
        return report
    try:
        d = mscll.compile_typing(typing)
    except mscll.DerivationError as exc:
        report.fail(instance, "a valid derivation", exc)
        return report
    expected = mscll.soundness_sequent(typing)
    if d.conclusion != expected:
        report.fail(instance, expected, d.conclusion)
    return report


# suites


@dataclasses.dataclass(frozen=True)
class Suite(object):
    """A property with its instances: instances(size) yields the arguments of check."""
    id: str
    instances: typing.Callable
    check: typing.Callable
    default_size: int


_LSC_KINDS = (TranslationKind.CBN, TranslationKind.CBV, TranslationKind.CBS)


def _translation_instances(size):
    for n in range(1, size + 1):
        for kind in _LSC_KINDS:
            for t in enumerate_terms(LSC, n):
                yield (t, kind)
        for t in enumerate_terms(BANG, n):
            if not has_der(t):
                yield (t, TranslationKind.BANG)


def _sharing_instances(size, pool=None):
    for t in terms_up_to(SHARING, size, pool):
        yield (t,)


def _nf_grammar_instances(size):
    return _sharing_instances(size)


def _subject_instances(size):
    for n in range(1, size + 1):
        for language in (SHARING, LSC, BANG):
            for t in enumerate_terms(language, n):
                yield (t, language)


def _typing_instances(size):
    for n in range(1, size + 1):
        for kind in _LSC_KINDS:
            for t in enumerate_terms(LSC, n):
                yield (t, kind)
        for t in enumerate_terms(BANG, n):
            if not has_der(t):
                yield (t, TranslationKind.BANG)
        for t in enumerate_terms(SHARING, n):
            yield (t, SHARING)


def _weak_instances(size):
    for n in range(1, size + 1):
        for kind in _LSC_KINDS:
            for t in enumerate_terms(LSC, n):
                yield (t, kind)
        for t in enumerate_terms(SHARING, n):
            yield (t, SHARING)


def _bang_instances(size):
    for t in terms_up_to(BANG, size):
        yield (t,)


def _lsc_instances(size):
    for t in terms_up_to(LSC, size):
        yield (t,)


def _mscll_instances(size):
    yield (_mell_dereliction(),)
    for n in range(1, min(size, 6) + 1):
        for A in enumerate_formulas(n):
            yield (A,)
    yield from _sharing_instances(size)


SUITES = collections.OrderedDict(
    (suite.id, suite) for suite in [
        Suite("left-inverse", _translation_instances, check_left_inverse, 8),
        Suite("simulation", _translation_instances, check_simulation, 7),
        Suite("image-closure", _translation_instances, check_image_closure, 6),
        Suite("nf-preservation", _translation_instances, check_nf_preservation, 8),
        Suite("nf-grammar", _nf_grammar_instances, check_nf_grammar, 9),
        Suite("subject-reduction", _subject_instances, check_subject_reduction, 8),
        Suite("typing-preservation", _typing_instances, check_typing_preservation, 7),
        Suite("confluence", _sharing_instances, check_confluence_mod_flatten, 8),
        Suite("bisimulation", _sharing_instances, check_bisimulation, 8),
        Suite("gc-postponement", _sharing_instances, check_gc_postponement, 8),
        Suite("sn", _sharing_instances, _check_sn_instance, 8),
        Suite("sn-fusion", _sharing_instances, check_sn_fusion, 7),
        Suite("weak-eval", _weak_instances, check_weak_eval, 7),
        Suite("bang-unfold", _bang_instances, check_bang_unfold, 7),
        Suite("mscll", _mscll_instances, check_mscll, 7),
        Suite("lsc-gc-postponement", _lsc_instances, check_lsc_gc_postponement, 8),
    ])


def run_suite(name,
              size=None,
              caps=None,
              jobs=1):
    """Run one suite over all its instances up to a size.

    Parameters
    ----------
    name: str
        a key of SUITES
    size: int, optional
        largest instance size; defaults to the suite's size bounded by
        caps.max_size
    caps: Caps, optional
        exploration bounds
    jobs: int
        number of worker threads; reports are merged in instance order

    Returns
    -------
    PropertyReport
    """
    if name not in SUITES:
        raise ValueError("unknown suite {0}".format(name))
    suite = SUITES[name]
    caps = caps or Caps()
    if size is None:
        size = min(suite.default_size, caps.max_size)
    logger.info("Running suite {0} up to size {1}.".format(name, size))
    report = PropertyReport(name)
    start = time.perf_counter()
    instances = suite.instances(size)

    def check(arguments):
        return suite.check(*arguments, caps=caps)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            _collect(report, executor.map(check, instances))
    else:
        _collect(report, map(check, instances))
    report.seconds = time.perf_counter() - start
    logger.info("{0}: {1} checked, {2} failures, {3} inconclusive.".format(
        name, report.checked, len(report.failures), report.inconclusive))
    return report


def _collect(report, outcomes):
    for count, outcome in enumerate(outcomes, start=1):
        outcome.property = report.property
        report.merge(outcome)
        if count % 10_000 == 0:
            logger.info("{0}: {1} instances".format(report.property, count))
    return None


def run(names=None,
        size=None,
        caps=None,
        jobs=1):
    """Run several suites, all of SUITES by default, in registry order."""
    names = list(SUITES) if not names else list(names)
    return [run_suite(name, size=size, caps=caps, jobs=jobs) for name in names]
