# -*- coding: utf-8 eval: (yapf-mode 1) -*-
#
# October 18 2026
#
# Copyright (c) 2026, skewpbw authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""Extended ideals IA and the primality classifier.

Primality of IA in the infinite ring A is never decided by enumeration.
:func:`classify_extended_ideal` checks the hypotheses of one of three
equivalences (derivation type, automorphism type, mixed type) that reduce
primality of IA to a primality property of I in R, and records every check in
the verdict. :func:`primality_probe` is a bounded falsification attempt.
"""
from __future__ import absolute_import, division, unicode_literals, print_function, nested_scopes
import collections
import enum
import itertools
import logging
import random

from .error import (HypothesisFailed, ImproperIdeal, MismatchedRing, NotDerivationType, NotEnumerable,
                    NotInvariant, NotStable, ZeroInput)
from .extension import ExtensionSpec, classify_extension
from .ideal import (FiniteIdeal, Mode, PrincipalIdeal, annihilator, ideal_closure, invariance,
                    prime_radical, primality, principal_invariance, quotient_system)
from .maps import validate_endomorphism
from .poly import deglex_key

__date__ = 'October 18 2026'
__docformat__ = "restructuredtext en"

logger = logging.getLogger(__name__)

MAX_CANDIDATES = 10**6
DEFAULT_DEGREE_BOUND = 3
DEFAULT_SEED = 0

SCHEMA_VERSION = 1

Hypothesis = collections.namedtuple("Hypothesis", ["theorem", "name", "passed", "evidence"])
CoefficientIdealReport = collections.namedtuple("CoefficientIdealReport",
                                                ["ideal", "stable", "delta_invariant"])
AnnihilatorReport = collections.namedtuple("AnnihilatorReport",
                                           ["holds", "exhaustive", "checked", "mismatches"])
ProbeReport = collections.namedtuple("ProbeReport", ["checked", "unseparated", "flagged"])


class Theorem(enum.Enum):
    DERIVATION_TYPE = "DerivationType"
    AUTOMORPHISM_TYPE = "AutomorphismType"
    MIXED_TYPE = "MixedType"


class Conclusion(enum.Enum):
    PRIME_IN_A = "PrimeInA"
    NOT_PRIME_IN_A = "NotPrimeInA"
    INCONCLUSIVE = "Inconclusive"


def exponents_up_to(nvars, bound):
    """All exponent vectors of total degree <= `bound`, ascending in deglex."""
    exps = [
        e for d in range(bound + 1) for e in itertools.product(range(d + 1), repeat=nvars) if sum(e) == d
    ]
    return sorted(exps, key=deglex_key)


class ExtendedIdeal(object):
    """The ideal IA of an extension generated by an ideal I of its coefficient ring."""

    def __init__(self, extension, base):
        self.extension = extension
        self.base = base

    def __contains__(self, f):
        return extended_membership(self.extension, self.base, f)

    def describe(self):
        return "{}A".format(self.base.describe())

    __str__ = describe


def extended_membership(E, I, f):
    """True iff every coefficient of `f` lies in `I`.

    :raises: MismatchedRing if `I` or `f` is over another ring.
    """
    if I.ring != E.ring:
        raise MismatchedRing(E.ring, I.ring)
    if f.ring != E.ring:
        raise MismatchedRing(E.ring, f.ring)
    return all(c in I for c in f.coefficients())


def contract_check(E, I):
    """Verify that the elements of R lying in IA are exactly those of I.

    :raises: NotInvariant unless `I` is (Sigma,Delta)-invariant.
    """
    R = E.ring
    if not R.finite:
        raise NotEnumerable(R)
    flags = invariance(I, E.system())
    if not (flags.sigma_invariant and flags.delta_invariant):
        raise NotInvariant(I)
    return all((r in I) == extended_membership(E, I, E.constant(r)) for r in R.elements())


def quotient_extension(E, I):
    """The extension A/IA over R/I with constants and tails reduced modulo I.

    :raises: ImproperIdeal, NotInvariant or NotStable when `I` does not qualify.
    """
    R = E.ring
    if not R.finite:
        raise NotEnumerable(R)
    if I.is_whole():
        raise ImproperIdeal(I)
    flags = invariance(I, E.system())
    if not (flags.sigma_invariant and flags.delta_invariant):
        raise NotInvariant(I)
    if not flags.sigma_stable:
        raise NotStable(I)
    if I.is_zero():
        return E
    Q, S = quotient_system(R, I, E.system())
    c = {key: Q.project(v) for key, v in E.relation_constants().items()}
    tails = {
        key: (Q.project(d0), [Q.project(d) for d in ds])
        for key, (d0, ds) in E.relation_tails().items()
    }
    return ExtensionSpec(Q, S.sigmas, S.deltas, c=c, tails=tails, names=E.names, cache=E.cache)


def _coefficient_values(E, gens, bound):
    R = E.ring
    values = []
    monomials = [E.monomial(e) for e in exponents_up_to(E.n, bound)]
    for p in gens:
        products = [p]
        for m in monomials:
            products.append(E.multiply(p, m))
            products.append(E.multiply(m, p))
        for r in R.elements():
            products.append(E.multiply(p, E.constant(r)))
        for q in products:
            values.extend(q.coefficients())
    return ideal_closure(R, values)


def coefficient_ideal(E, K_gens, degree_bound=DEFAULT_DEGREE_BOUND, debug=False):
    """The ideal of R generated by the coefficients of p*m and m*p for generators p
    and standard monomials m of degree <= `degree_bound`.

    The result is flagged stable when one more degree adds nothing.

    :raises: NotDerivationType unless every sigma_i is the identity.
    """
    R = E.ring
    if not R.finite:
        raise NotEnumerable(R)
    if not classify_extension(E).derivation_type:
        raise NotDerivationType("{} is not of derivation type".format(E))
    ideal = _coefficient_values(E, K_gens, degree_bound)
    stable = ideal == _coefficient_values(E, K_gens, degree_bound + 1)
    if debug:
        logger.debug("coefficient ideal %s (stable=%s)", ideal, stable)
    delta_invariant = invariance(ideal, E.system()).delta_invariant
    return CoefficientIdealReport(ideal, stable, delta_invariant)


def annihilator_formula_check(E, f, degree_bound=DEFAULT_DEGREE_BOUND, samples=2000, seed=DEFAULT_SEED,
                              debug=False):
    """Compare the bounded right annihilator of `f` with ann_R(lc f)A.

    Hypotheses, checked first: every sigma_i bijective, sigma^lm(r) = r on
    ann_R(lc f), and no product (r x^a) f or f (r x^a) with |a| <= bound has a
    nonzero leading monomial below lm(f). Polynomials g of degree <= bound are
    enumerated when there are at most ``MAX_CANDIDATES`` of them and sampled
    otherwise; single terms are always checked exhaustively.

    :raises: HypothesisFailed naming the failed hypothesis.
    """
    R = E.ring
    if not R.finite:
        raise NotEnumerable(R)
    if not all(validate_endomorphism(R, s).bijective for s in E.sigma):
        raise HypothesisFailed("bijective", "some sigma_i is not bijective")
    lm, lc, unused = f.leading_data()
    ann = annihilator(R, ideal_closure(R, [lc]))
    for r in ann.elements:
        if E.sigma_alpha(lm, r) != r:
            raise HypothesisFailed("sigma_fixes_annihilator", "sigma^{}({}) != {}".format(lm, r, r))

    exps = exponents_up_to(E.n, degree_bound)
    lm_key = deglex_key(lm)
    for exp in exps:
        for r in R.elements():
            if r.is_zero():
                continue
            h = E.monomial(exp, r)
            for product in (E.multiply(h, f), E.multiply(f, h)):
                if not product.is_zero() and deglex_key(product.leading_data().lm) < lm_key:
                    raise HypothesisFailed("minimality",
                                           "{} has leading monomial below {}".format(product, lm))

    mismatches = []
    checked = 0

    def check(g):
        in_left = E.multiply(f, g).is_zero()
        in_right = all(c in ann for c in g.coefficients())
        if in_left != in_right:
            mismatches.append(g)

    for exp in exps:
        for r in R.elements():
            check(E.monomial(exp, r))
            checked += 1

    exhaustive = R.cardinality**len(exps) <= MAX_CANDIDATES
    if exhaustive:
        for coeffs in itertools.product(R.elements(), repeat=len(exps)):
            check(E.polynomial(dict(zip(exps, coeffs))))
            checked += 1
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            check(E.polynomial({exp: rng.choice(R.elements()) for exp in exps}))
            checked += 1
    if debug:
        logger.debug("annihilator check for %s: %d candidates, %d mismatches", f, checked,
                     len(mismatches))
    return AnnihilatorReport(not mismatches, exhaustive, checked, mismatches)


def prime_criterion_search(E, a, b, bound=DEFAULT_DEGREE_BOUND):
    """The deglex-least theta with |theta| <= bound such that a*r*sigma^theta(b) or
    a*r*delta^theta(b) is nonzero for some r, or None.

    :raises: ZeroInput if `a` or `b` is zero.
    """
    R = E.ring
    if not R.finite:
        raise NotEnumerable(R)
    a, b = R(a), R(b)
    if a.is_zero():
        raise ZeroInput("a")
    if b.is_zero():
        raise ZeroInput("b")
    for theta in exponents_up_to(E.n, bound):
        sb = E.sigma_alpha(theta, b)
        db = E.delta_alpha(theta, b)
        for r in R.elements():
            if not (a * r * sb).is_zero() or not (a * r * db).is_zero():
                return theta
    return None


class Verdict(object):
    """Outcome of :func:`classify_extended_ideal`."""

    def __init__(self, ideal, theorem, hypothesis_trail, conclusion, witness=None, extension=None):
        self.ideal = ideal
        self.theorem = theorem
        self.hypothesis_trail = hypothesis_trail
        self.conclusion = conclusion
        self.witness = witness
        self.extension = extension

    def lifted_witness(self):
        """The witness pair lifted to A as (KA, LA)."""
        if self.witness is None:
            return None
        return tuple(ExtendedIdeal(self.extension, K) for K in self.witness)

    def as_dict(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "ideal": self.ideal.describe(),
            "theorem": self.theorem.value if self.theorem else None,
            "hypotheses": [{
                "theorem": h.theorem.value if h.theorem else None,
                "name": h.name,
                "passed": h.passed,
                "evidence": h.evidence,
            } for h in self.hypothesis_trail],
            "conclusion": self.conclusion.value,
            "witness": [K.describe() for K in self.witness] if self.witness else None,
        }

    def __str__(self):
        lines = ["ideal: {}".format(self.ideal.describe())]
        lines.append("theorem: {}".format(self.theorem.value if self.theorem else "none"))
        for h in self.hypothesis_trail:
            lines.append("  [{}] {}{}: {}".format("pass" if h.passed else "FAIL",
                                                  h.theorem.value + "." if h.theorem else "", h.name,
                                                  h.evidence))
        lines.append("conclusion: {}".format(self.conclusion.value))
        if self.witness:
            lines.append("witness: {}, {}".format(*[K.describe() for K in self.witness]))
        return "\n".join(lines)


def _derivation_route(E, I, flags, inv, trail):
    theorem = Theorem.DERIVATION_TYPE
    checks = [
        Hypothesis(theorem, "derivation_type", flags.derivation_type, "every sigma_i is the identity"),
        Hypothesis(theorem, "delta_invariant", inv.delta_invariant, "delta_i(I) inside I"),
    ]
    trail.extend(checks)
    return all(h.passed for h in checks), Mode.DELTA_PRIME


def _automorphism_route(E, I, flags, inv, trail):
    theorem = Theorem.AUTOMORPHISM_TYPE
    checks = [
        Hypothesis(theorem, "automorphism_type", flags.automorphism_type,
                   "every delta_i is zero and every sigma_i bijective"),
        Hypothesis(theorem, "bijective", flags.bijective, "sigma_i bijective and c_ij invertible"),
        Hypothesis(theorem, "commutative_noetherian", True, "finite commutative ring"),
        Hypothesis(theorem, "sigma_invariant", inv.sigma_invariant, "sigma_i(I) inside I"),
    ]
    trail.extend(checks)
    return all(h.passed for h in checks), Mode.SIGMA_PRIME


def _mixed_route(E, I, flags, inv, trail):
    theorem = Theorem.MIXED_TYPE
    R = E.ring
    radical = prime_radical(R)
    invariant = inv.sigma_invariant and inv.delta_invariant
    checks = [
        Hypothesis(theorem, "bijective", flags.bijective, "sigma_i bijective and c_ij invertible"),
        Hypothesis(theorem, "commutative_noetherian", True, "finite commutative ring"),
        Hypothesis(theorem, "semiprime_ring", radical.is_zero(), "rad(R) = {}".format(radical)),
        Hypothesis(theorem, "sigma_delta_invariant", invariant, "sigma_i(I), delta_i(I) inside I"),
    ]
    semiprime = primality(R, I, E.system(), Mode.SEMIPRIME)
    evidence = "no K with K*K inside I" if semiprime.is_prime else "K*K inside I for K = {}".format(
        semiprime.witness[0])
    checks.append(Hypothesis(theorem, "semiprime_ideal", semiprime.is_prime, evidence))
    trail.extend(checks)
    return all(h.passed for h in checks), Mode.SIGMA_DELTA_PRIME


_ROUTES = [
    (Theorem.DERIVATION_TYPE, _derivation_route),
    (Theorem.AUTOMORPHISM_TYPE, _automorphism_route),
    (Theorem.MIXED_TYPE, _mixed_route),
]


def classify_extended_ideal(E, I, route=None, debug=False):
    """Classify the extended ideal IA as prime or not prime in A.

    Routes are tried in the order derivation type, automorphism type, mixed
    type; the first whose hypotheses all pass decides the conclusion from the
    matching primality test of `I` in R. `route` forces a single route.
    Polynomial coefficient rings yield an Inconclusive verdict carrying the
    invariance facts of the principal ideal.

    :param E: An ``ExtensionSpec``.
    :param I: A proper ``FiniteIdeal`` (or ``PrincipalIdeal`` over K[t]).
    :param route: A :class:`Theorem` to force, or None.
    :return: A :class:`Verdict`.
    :raises: ImproperIdeal if `I` is the whole ring.
    """
    if I.ring != E.ring:
        raise MismatchedRing(E.ring, I.ring)
    if I.is_whole():
        raise ImproperIdeal(I)
    trail = []
    if isinstance(I, PrincipalIdeal):
        inv = principal_invariance(I, E.system())
        trail.append(Hypothesis(None, "finite_ring", False, "{} is infinite".format(E.ring)))
        trail.append(Hypothesis(None, "sigma_invariant", inv.sigma_invariant, "f divides sigma_i(f)"))
        trail.append(Hypothesis(None, "delta_invariant", inv.delta_invariant, "f divides delta_i(f)"))
        return Verdict(I, None, trail, Conclusion.INCONCLUSIVE, extension=E)

    flags = classify_extension(E)
    S = E.system()
    inv = invariance(I, S)
    routes = _ROUTES
    if route is not None:
        route = Theorem(route)
        routes = [(t, fn) for t, fn in _ROUTES if t == route]
    for theorem, evaluate in routes:
        qualified, mode = evaluate(E, I, flags, inv, trail)
        if debug:
            logger.debug("route %s qualified: %s", theorem.value, qualified)
        if not qualified:
            continue
        result = primality(E.ring, I, S, mode, debug=debug)
        if result.is_prime:
            evidence = "no pair of {} ideals outside I has product inside I".format(mode.value)
        else:
            evidence = "{} * {} inside I".format(*result.witness)
        trail.append(Hypothesis(theorem, mode.value, result.is_prime, evidence))
        conclusion = Conclusion.PRIME_IN_A if result.is_prime else Conclusion.NOT_PRIME_IN_A
        return Verdict(I, theorem, trail, conclusion, result.witness, E)
    logger.info("No theorem route applies to %s", I)
    return Verdict(I, None, trail, Conclusion.INCONCLUSIVE, extension=E)


def find_separator(E, f, g, bound=DEFAULT_DEGREE_BOUND, ideal=None):
    """Search single terms h = r x^a with |a| <= bound such that f*h*g is nonzero
    (outside IA when `ideal` is given).

    :return: The first such h, or None.
    """
    R = E.ring
    candidates = R.elements() if R.finite else R.sample_elements()
    for exp in exponents_up_to(E.n, bound):
        for r in candidates:
            if r.is_zero():
                continue
            h = E.monomial(exp, r)
            product = E.multiply(E.multiply(f, h), g)
            if ideal is None:
                if not product.is_zero():
                    return h
            elif not extended_membership(E, ideal, product):
                return h
    return None


def primality_probe(E, degree_bound=DEFAULT_DEGREE_BOUND, samples=200, ideal=None, verdict=None,
                    seed=DEFAULT_SEED, debug=False):
    """Look for random pairs f, g outside IA with no separator h.

    Pairs without a separator are reported; when `verdict` says PrimeInA the
    report is flagged for review. The verdict itself is never changed.
    """
    R = E.ring
    if not R.finite:
        raise NotEnumerable(R)
    if ideal is None:
        ideal = FiniteIdeal.zero(R)
    if ideal.is_whole():
        raise ImproperIdeal(ideal)
    rng = random.Random(seed)

    def draw():
        while True:
            f = E.random_polynomial(rng, max_degree=degree_bound)
            if not extended_membership(E, ideal, f):
                return f

    unseparated = []
    for _ in range(samples):
        f, g = draw(), draw()
        if find_separator(E, f, g, degree_bound, ideal) is None:
            logger.warning("No separator found for f=%s, g=%s", f, g)
            unseparated.append((f, g))
        elif debug:
            logger.debug("Separated f=%s, g=%s", f, g)
    flagged = bool(unseparated) and verdict is not None and verdict.conclusion == Conclusion.PRIME_IN_A
    return ProbeReport(samples, unseparated, flagged)
