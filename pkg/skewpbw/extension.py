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
"""Skew PBW extensions A = sigma(R)<x1, ..., xn> and their normal-form arithmetic.

An extension is given by endomorphisms sigma_i, sigma_i-derivations delta_i,
nonzero constants c_ij and degree <= 1 tails so that

    x_i r = sigma_i(r) x_i + delta_i(r)
    x_j x_i = c_ij x_i x_j + d0 + d1 x1 + ... + dn xn      (i < j)

Elements are kept in the left R-basis of standard monomials. Variable
indices are 1-based in the public API.

>>> from skewpbw.ring import Rationals
>>> from skewpbw.maps import IdentityMap
>>> K = Rationals()
>>> weyl = ExtensionSpec(K, [IdentityMap(K)] * 2, tails={(1, 2): (K.one, [K.zero, K.zero])})
>>> x1, x2 = weyl.variable(1), weyl.variable(2)
>>> print(weyl.multiply(x2, weyl.multiply(x1, x1)))
x1^2*x2 + 2*x1
"""
from __future__ import absolute_import, division, unicode_literals, print_function, nested_scopes
import collections
import itertools
import logging
import random

from .error import (BadIndex, InconsistentSpec, InvalidSpec, MismatchedArity, MismatchedRing,
                    NotEnumerable, NotInner, NotQuasiCommutative, ZeroCoefficient)
from .ideal import SigmaDeltaSystem
from .maps import ZeroDerivation, validate_endomorphism, validate_sigma_derivation
from .poly import SkewPolynomial, add_exponents, unit_vector

__date__ = 'October 18 2026'
__docformat__ = "restructuredtext en"

logger = logging.getLogger(__name__)

_tokens = itertools.count()

ExtensionFlags = collections.namedtuple("ExtensionFlags", [
    "quasi_commutative", "derivation_type", "endomorphism_type", "automorphism_type", "bijective",
    "sigma_commutative"
])
OverlapFailure = collections.namedtuple("OverlapFailure", ["kind", "indices", "element", "left", "right"])
ConsistencyReport = collections.namedtuple("ConsistencyReport",
                                           ["sigma_ok", "delta_ok", "overlap_failures", "ok"])
OreStep = collections.namedtuple("OreStep", ["index", "sigma", "scalars"])


def _first_index(exp):
    for k, e in enumerate(exp):
        if e:
            return k
    return None


def _last_index(exp):
    for k in range(len(exp) - 1, -1, -1):
        if exp[k]:
            return k
    return None


def _accumulate(acc, exp, coeff):
    if coeff.is_zero():
        return
    if exp in acc:
        total = acc[exp] + coeff
        if total.is_zero():
            del acc[exp]
        else:
            acc[exp] = total
    else:
        acc[exp] = coeff


class ExtensionSpec(object):
    """The presentation of a skew PBW extension of a commutative ring.

    :param ring: The coefficient ring R.
    :param sigma: The n injective endomorphisms sigma_i.
    :param delta: The n sigma_i-derivations; zero derivations when omitted.
    :param c: Mapping ``(i, j) -> c_ij`` for 1 <= i < j <= n; missing pairs are 1.
    :param tails: Mapping ``(i, j) -> tail`` where a tail is a ``SkewPolynomial`` of
                  degree <= 1 or a pair ``(d0, [d1, ..., dn])``; missing pairs are 0.
    :param names: Variable names, x1..xn by default.
    :param cache: A normal form cache; the package global cache when omitted.
    :param validate: Check the maps and constants.
    :raises: InvalidSpec if a sigma_i is not injective, a delta_i is not a
             sigma_i-derivation, or some c_ij is zero.
    """

    def __init__(self, ring, sigma, delta=None, c=None, tails=None, names=None, cache=None,
                 validate=True):
        self.ring = ring
        self.sigma = list(sigma)
        self.n = n = len(self.sigma)
        if delta is None:
            delta = [ZeroDerivation(ring, s) for s in self.sigma]
        self.delta = list(delta)
        if len(self.delta) != n:
            raise InvalidSpec("Expected {} derivations, got {}".format(n, len(self.delta)))
        self.names = tuple(names) if names else tuple("x{}".format(i + 1) for i in range(n))
        if len(self.names) != n:
            raise InvalidSpec("Expected {} variable names, got {}".format(n, len(self.names)))
        self.cache = cache
        self.token = next(_tokens)

        self.c = {}
        self.tails = {}
        c = dict(c or {})
        tails = dict(tails or {})
        for key in list(c) + list(tails):
            i, j = key
            if not 1 <= i < j <= n:
                raise InvalidSpec("Relation index ({}, {}) must satisfy 1 <= i < j <= {}".format(i, j, n))
        for i, j in itertools.combinations(range(n), 2):
            self.c[(i, j)] = ring(c.get((i + 1, j + 1), ring.one))
            self.tails[(i, j)] = self._tail_data(tails.get((i + 1, j + 1)))

        for m in self.sigma + self.delta:
            if m.ring != ring:
                raise InvalidSpec("Map {} acts on {}, not on {}".format(m, m.ring, ring))
        if validate:
            self.validate()
        self._flags = None

    def _tail_data(self, tail):
        ring, n = self.ring, self.n
        if tail is None:
            return (ring.zero, (ring.zero, ) * n)
        if isinstance(tail, SkewPolynomial):
            if tail.degree is not None and tail.degree > 1:
                raise InvalidSpec("Tails have degree at most 1, got {}".format(tail))
            return (tail.coefficient((0, ) * n),
                    tuple(tail.coefficient(unit_vector(n, k)) for k in range(n)))
        d0, ds = tail
        ds = tuple(ring(d) for d in ds)
        if len(ds) != n:
            raise InvalidSpec("Tail needs {} linear coefficients, got {}".format(n, len(ds)))
        return (ring(d0), ds)

    def validate(self):
        """Check the defining data.

        :raises: InvalidSpec on the first violated condition.
        """
        for i, (s, d) in enumerate(zip(self.sigma, self.delta)):
            if not validate_endomorphism(self.ring, s).injective:
                raise InvalidSpec("sigma_{} is not an injective ring endomorphism".format(i + 1))
            if not validate_sigma_derivation(self.ring, s, d).is_sigma_derivation:
                raise InvalidSpec("delta_{} is not a sigma_{}-derivation".format(i + 1, i + 1))
        for (i, j), cij in self.c.items():
            if cij.is_zero():
                raise InvalidSpec("c_{},{} must be nonzero".format(i + 1, j + 1))

    def replace(self, **changes):
        """Return a copy with some constructor arguments changed (1-based relation keys)."""
        args = dict(ring=self.ring, sigma=self.sigma, delta=self.delta, c=self.relation_constants(),
                    tails=self.relation_tails(), names=self.names, cache=self.cache)
        args.update(changes)
        return ExtensionSpec(**args)

    def relation_constants(self):
        return {(i + 1, j + 1): v for (i, j), v in self.c.items()}

    def relation_tails(self):
        return {(i + 1, j + 1): v for (i, j), v in self.tails.items()}

    def tail_polynomial(self, i, j):
        """The tail of x_j x_i - c_ij x_i x_j as a polynomial (1-based indices)."""
        d0, ds = self.tails[(i - 1, j - 1)]
        terms = {(0, ) * self.n: d0}
        for k, d in enumerate(ds):
            terms[unit_vector(self.n, k)] = d
        return self.polynomial(terms)

    def system(self):
        return SigmaDeltaSystem(self.ring, self.sigma, self.delta, validate=False)

    def __eq__(self, other):
        if not isinstance(other, ExtensionSpec):
            return False
        return (self.ring == other.ring and self.n == other.n and self.sigma == other.sigma
                and self.delta == other.delta and self.c == other.c and self.tails == other.tails)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ring, self.n))

    def __str__(self):
        return "ExtensionSpec({}, n={})".format(self.ring, self.n)

    # Element construction

    def polynomial(self, terms):
        return SkewPolynomial(self.ring, self.n, terms, self.names)

    def _poly(self, terms):
        return SkewPolynomial._from_clean(self.ring, self.n, terms, self.names)

    def zero(self):
        return self._poly({})

    def one(self):
        return self.constant(self.ring.one)

    def constant(self, r):
        return self.polynomial({(0, ) * self.n: self.ring(r)})

    def _check_index(self, i):
        if not 1 <= i <= self.n:
            raise BadIndex(i, self.n)

    def variable(self, i):
        """The generator x_i (1-based)."""
        self._check_index(i)
        return self._poly({unit_vector(self.n, i - 1): self.ring.one})

    def monomial(self, alpha, coeff=None):
        return self.polynomial({tuple(alpha): self.ring.one if coeff is None else coeff})

    def random_polynomial(self, rng, max_degree=3, max_terms=4):
        """A random polynomial with up to `max_terms` terms of degree <= `max_degree`."""
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            degree = rng.randint(0, max_degree)
            exp = [0] * self.n
            for _ in range(degree):
                exp[rng.randrange(self.n)] += 1
            coeff = self.ring.random_element(rng)
            while coeff.is_zero():
                coeff = self.ring.random_element(rng)
            terms[tuple(exp)] = coeff
        return self.polynomial(terms)

    # Normal forms

    def _lookup(self, key, compute):
        cache = self.cache
        if cache is None:
            import skewpbw
            cache = skewpbw.g_cache
        return cache.lookup((self.token, ) + key, compute)

    def _times_coeff(self, alpha, r):
        """Terms of x^alpha * r, passing r leftward through the monomial."""
        if r.is_zero():
            return ()
        k = _last_index(alpha)
        if k is None:
            return ((alpha, r), )

        def compute():
            beta = alpha[:k] + (alpha[k] - 1, ) + alpha[k + 1:]
            acc = {}
            s = self.sigma[k](r)
            for exp, coeff in self._times_coeff(beta, s):
                _accumulate(acc, exp[:k] + (exp[k] + 1, ) + exp[k + 1:], coeff)
            for exp, coeff in self._times_coeff(beta, self.delta[k](r)):
                _accumulate(acc, exp, coeff)
            return tuple(acc.items())

        return self._lookup(("coeff", alpha, r.value), compute)

    def _reorder(self, i, gamma):
        """Terms of x_i * x^gamma (0-based i)."""
        j = _first_index(gamma)
        if j is None or j >= i:
            return ((gamma[:i] + (gamma[i] + 1, ) + gamma[i + 1:], self.ring.one), )

        def compute():
            # x_i x_j = c_ji x_j x_i + d0 + sum d_k x_k with j < i
            rest = gamma[:j] + (gamma[j] - 1, ) + gamma[j + 1:]
            cji = self.c[(j, i)]
            d0, ds = self.tails[(j, i)]
            acc = {}
            for exp, p in self._reorder(i, rest):
                head = cji * self.sigma[j](p)
                if not head.is_zero():
                    for exp2, q in self._reorder(j, exp):
                        _accumulate(acc, exp2, head * q)
                _accumulate(acc, exp, cji * self.delta[j](p))
            _accumulate(acc, rest, d0)
            for k, d in enumerate(ds):
                if not d.is_zero():
                    for exp, q in self._reorder(k, rest):
                        _accumulate(acc, exp, d * q)
            return tuple(acc.items())

        return self._lookup(("reorder", i, gamma), compute)

    def _mul_monomials(self, gamma, beta):
        """Terms of x^gamma * x^beta."""
        k = _last_index(gamma)
        first = _first_index(beta)
        if k is None or first is None or first >= k:
            return ((add_exponents(gamma, beta), self.ring.one), )

        def compute():
            head = gamma[:k] + (gamma[k] - 1, ) + gamma[k + 1:]
            acc = {}
            for eps, q in self._reorder(k, beta):
                for zeta, s in self._times_coeff(head, q):
                    for exp, u in self._mul_monomials(zeta, eps):
                        _accumulate(acc, exp, s * u)
            return tuple(acc.items())

        return self._lookup(("monomials", gamma, beta), compute)

    def _check_poly(self, f):
        if f.ring != self.ring:
            raise MismatchedRing(self.ring, f.ring)
        if f.nvars != self.n:
            raise MismatchedArity((0, ) * self.n, (0, ) * f.nvars)

    def multiply(self, f, g):
        """The normal form of the product f*g.

        :raises: MismatchedRing if an operand is over another ring.
        """
        self._check_poly(f)
        self._check_poly(g)
        acc = {}
        for alpha, a in f.terms.items():
            for beta, b in g.terms.items():
                for gamma, p in self._times_coeff(alpha, b):
                    ap = a * p
                    if ap.is_zero():
                        continue
                    for exp, s in self._mul_monomials(gamma, beta):
                        _accumulate(acc, exp, ap * s)
        return self._poly(acc)

    def power(self, f, k):
        result = self.one()
        for _ in range(k):
            result = self.multiply(result, f)
        return result

    def times_coefficient_on_right(self, alpha, r):
        """The normal form of x^alpha * r.

        :raises: ZeroCoefficient if `r` is zero.
        """
        r = self.ring(r)
        if r.is_zero():
            raise ZeroCoefficient()
        alpha = tuple(alpha)
        if len(alpha) != self.n:
            raise MismatchedArity(alpha, (0, ) * self.n)
        return self._poly(dict(self._times_coeff(alpha, r)))

    def reorder_generator(self, i, gamma):
        """The normal form of x_i * x^gamma (1-based i).

        :raises: BadIndex if `i` is out of range.
        """
        self._check_index(i)
        gamma = tuple(gamma)
        if len(gamma) != self.n:
            raise MismatchedArity(gamma, (0, ) * self.n)
        return self._poly(dict(self._reorder(i - 1, gamma)))

    def sigma_alpha(self, alpha, r):
        """sigma_1^a1 o ... o sigma_n^an applied to r."""
        r = self.ring(r)
        for k in range(self.n - 1, -1, -1):
            for _ in range(alpha[k]):
                r = self.sigma[k](r)
        return r

    def delta_alpha(self, theta, r):
        """delta_1^t1 o ... o delta_n^tn applied to r."""
        r = self.ring(r)
        for k in range(self.n - 1, -1, -1):
            for _ in range(theta[k]):
                r = self.delta[k](r)
        return r

    def c_alpha_beta(self, alpha, beta):
        """The coefficient of x^(alpha+beta) in x^alpha * x^beta."""
        alpha, beta = tuple(alpha), tuple(beta)
        for exp, coeff in self._mul_monomials(alpha, beta):
            if exp == add_exponents(alpha, beta):
                return coeff
        return self.ring.zero


def classify_extension(E):
    """The structural flags of an extension.

    ``sigma_commutative`` is checked directly on all elements of a finite ring
    or on ``t`` for polynomial rings.
    """
    if E._flags is not None:
        return E._flags
    R = E.ring
    sigma_reports = [validate_endomorphism(R, s) for s in E.sigma]
    derivation_type = all(s.is_identity() for s in E.sigma)
    endomorphism_type = all(d.is_zero() for d in E.delta)
    tails_zero = all(d0.is_zero() and all(d.is_zero() for d in ds) for d0, ds in E.tails.values())
    all_bijective = all(rep.bijective for rep in sigma_reports)
    bijective = all_bijective and all(R.is_unit(cij) for cij in E.c.values())
    if R.finite:
        probes = R.elements()
    elif R.has_generator:
        probes = [R.generator()]
    else:
        probes = [R.one]
    sigma_commutative = all(
        s(t(a)) == t(s(a)) for s, t in itertools.combinations(E.sigma, 2) for a in probes)
    E._flags = ExtensionFlags(quasi_commutative=endomorphism_type and tails_zero,
                              derivation_type=derivation_type,
                              endomorphism_type=endomorphism_type,
                              automorphism_type=endomorphism_type and all_bijective,
                              bijective=bijective,
                              sigma_commutative=sigma_commutative)
    return E._flags


def _overlap_elements(R):
    if R.finite:
        return [a for a in R.elements() if not a.is_zero()]
    return R.sample_elements()


def check_pbw_consistency(E, debug=False):
    """Certify the presentation on the finite overlap set.

    Checks the sigma/delta laws, the coefficient overlaps
    ``(x_j x_i) r = x_j (x_i r)`` for i < j and every (or every sampled) r, and
    the generator overlaps ``x_k (x_j x_i) = (x_k x_j) x_i`` for i < j < k.
    Failures are returned in the report, never raised.
    """
    R = E.ring
    sigma_ok = all(validate_endomorphism(R, s).injective for s in E.sigma)
    delta_ok = all(
        validate_sigma_derivation(R, s, d).is_sigma_derivation for s, d in zip(E.sigma, E.delta))
    failures = []
    x = [E.variable(i + 1) for i in range(E.n)]
    for i, j in itertools.combinations(range(E.n), 2):
        ji = E.multiply(x[j], x[i])
        for r in _overlap_elements(R):
            rr = E.constant(r)
            left = E.multiply(ji, rr)
            right = E.multiply(x[j], E.multiply(x[i], rr))
            if left != right:
                failures.append(OverlapFailure("coefficient", (i + 1, j + 1), r, left, right))
                if debug:
                    logger.debug("Overlap (x%d x%d) r failed for r=%s: %s != %s", j + 1, i + 1, r, left,
                                 right)
    for i, j, k in itertools.combinations(range(E.n), 3):
        left = E.multiply(x[k], E.multiply(x[j], x[i]))
        right = E.multiply(E.multiply(x[k], x[j]), x[i])
        if left != right:
            failures.append(OverlapFailure("generator", (i + 1, j + 1, k + 1), None, left, right))
            if debug:
                logger.debug("Overlap x%d x%d x%d failed: %s != %s", k + 1, j + 1, i + 1, left, right)
    ok = sigma_ok and delta_ok and not failures
    if not ok:
        logger.info("%s failed consistency with %d overlap failures", E, len(failures))
    return ConsistencyReport(sigma_ok, delta_ok, failures, ok)


def associated_graded(E):
    """Gr(A): the same sigmas and constants with zero derivations and zero tails."""
    return E.replace(delta=[ZeroDerivation(E.ring, s) for s in E.sigma], tails={})


class OrePresentation(object):
    """A quasi-commutative extension as an iterated Ore extension
    R[z1; theta_1][z2; theta_2]...[zn; theta_n].

    theta_i acts on R as sigma_i and sends z_j to c_ji z_j for j < i.
    """

    def __init__(self, E, steps):
        self.extension = E
        self.steps = steps

    def _theta(self, m, h):
        """Apply theta_m (0-based) to `h`, a term dict in the first m variables."""
        E = self.extension
        acc = {}
        zero = (0, ) * E.n
        for exp, r in h.items():
            image = {zero: E.sigma[m](r)}
            for j in range(m):
                factor = {unit_vector(E.n, j): E.c[(j, m)]}
                for _ in range(exp[j]):
                    image = self._mul(image, factor, m)
            for e, v in image.items():
                _accumulate(acc, e, v)
        return acc

    def _mul(self, f, g, level):
        """Multiply term dicts supported in the first `level` variables."""
        E = self.extension
        if level == 0:
            zero = (0, ) * E.n
            a, b = f.get(zero), g.get(zero)
            if a is None or b is None:
                return {}
            prod = a * b
            return {} if prod.is_zero() else {zero: prod}
        m = level - 1

        def split(h):
            parts = collections.defaultdict(dict)
            for exp, v in h.items():
                parts[exp[m]][exp[:m] + (0, ) + exp[m + 1:]] = v
            return parts

        acc = {}
        for a, fa in split(f).items():
            for b, gb in split(g).items():
                twisted = gb
                for _ in range(a):
                    twisted = self._theta(m, twisted)
                for exp, v in self._mul(fa, twisted, m).items():
                    _accumulate(acc, exp[:m] + (a + b, ) + exp[m + 1:], v)
        return acc

    def multiply(self, f, g):
        """Multiply in the iterated presentation, independently of the PBW rewriting."""
        return self.extension._poly(self._mul(dict(f.terms), dict(g.terms), self.extension.n))


def iterated_ore_presentation(E):
    """Present a quasi-commutative extension as an iterated Ore extension.

    :raises: NotQuasiCommutative if some delta_i or tail is nonzero.
    """
    if not classify_extension(E).quasi_commutative:
        raise NotQuasiCommutative("{} has nonzero derivations or tails".format(E))
    steps = []
    for i in range(E.n):
        scalars = {j + 1: E.c[(j, i)] for j in range(i)}
        steps.append(OreStep(i + 1, E.sigma[i], scalars))
    return OrePresentation(E, steps)


def check_ore_round_trip(E, samples=100, seed=0):
    """Compare the iterated presentation product with `multiply` on random pairs.

    :return: The list of mismatching ``(f, g)`` pairs.
    """
    presentation = iterated_ore_presentation(E)
    rng = random.Random(seed)
    mismatches = []
    for _ in range(samples):
        f, g = E.random_polynomial(rng), E.random_polynomial(rng)
        if presentation.multiply(f, g) != E.multiply(f, g):
            mismatches.append((f, g))
    return mismatches


def find_inner_element(R, sigma, delta):
    """Find a with delta(r) = a*r - sigma(r)*a for every r, or None.

    :raises: NotEnumerable for infinite rings.
    """
    if not R.finite:
        raise NotEnumerable(R)
    elements = R.elements()
    for a in elements:
        if all(delta(r) == a * r - sigma(r) * a for r in elements):
            return a
    return None


def substitute_variables(E, a, f):
    """Rewrite `f`, read in variables z_i = x_i - a_i, as an element of `E`."""
    shifted = [E.variable(i + 1) - E.constant(a[i]) for i in range(E.n)]
    result = E.zero()
    for exp, coeff in f.terms.items():
        term = E.constant(coeff)
        for i, e in enumerate(exp):
            for _ in range(e):
                term = E.multiply(term, shifted[i])
        result = result + term
    return result


def check_substitution(E, Z, a, samples=50, seed=0):
    """Check that z_i -> x_i - a_i is multiplicative from `Z` to `E` on random pairs.

    :return: The list of mismatching ``(f, g)`` pairs.
    """
    rng = random.Random(seed)
    mismatches = []
    for _ in range(samples):
        f, g = Z.random_polynomial(rng), Z.random_polynomial(rng)
        left = substitute_variables(E, a, Z.multiply(f, g))
        right = E.multiply(substitute_variables(E, a, f), substitute_variables(E, a, g))
        if left != right:
            mismatches.append((f, g))
    return mismatches


def eliminate_inner_derivations(E, a, samples=50, seed=0):
    """Remove inner derivations delta_i = a_i r - sigma_i(r) a_i by z_i = x_i - a_i.

    The new tails come from expanding z_j z_i - c_ij z_i z_j in `E` and
    rewriting x_k = z_k + a_k.

    :raises: NotInner if some delta_i differs from the inner derivation of a_i;
             InconsistentSpec if the result fails certification.
    """
    R = E.ring
    a = [R(v) for v in a]
    if len(a) != E.n:
        raise InvalidSpec("Expected {} inner elements, got {}".format(E.n, len(a)))
    for i, (s, d) in enumerate(zip(E.sigma, E.delta)):
        for r in R.sample_elements():
            if d(r) != a[i] * r - s(r) * a[i]:
                raise NotInner(i, a[i])

    z = [E.variable(i + 1) - E.constant(a[i]) for i in range(E.n)]
    tails = {}
    for i, j in itertools.combinations(range(E.n), 2):
        p = E.multiply(z[j], z[i]) - E.multiply(z[i], z[j]).scale_left(E.c[(i, j)])
        if p.degree is not None and p.degree > 1:
            raise InconsistentSpec("z_{} z_{} leaves a tail of degree {}".format(j + 1, i + 1, p.degree))
        e0 = p.coefficient((0, ) * E.n)
        es = [p.coefficient(unit_vector(E.n, k)) for k in range(E.n)]
        for k in range(E.n):
            e0 = e0 + es[k] * a[k]
        tails[(i + 1, j + 1)] = (e0, es)

    Z = E.replace(delta=[ZeroDerivation(R, s) for s in E.sigma], tails=tails)
    report = check_pbw_consistency(Z)
    if not report.ok:
        raise InconsistentSpec("Eliminated extension is not consistent", report)
    if check_substitution(E, Z, a, samples, seed):
        raise InconsistentSpec("Substitution z_i = x_i - a_i is not multiplicative")
    return Z


def is_domain_sample(E, samples=1000, seed=0):
    """Search random nonzero pairs for a zero product.

    :return: The list of ``(f, g)`` pairs with f*g = 0.
    """
    rng = random.Random(seed)
    found = []
    for _ in range(samples):
        f, g = E.random_polynomial(rng), E.random_polynomial(rng)
        if E.multiply(f, g).is_zero():
            found.append((f, g))
    return found

