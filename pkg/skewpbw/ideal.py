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
"""Ideals of finite coefficient rings and their behavior under a system of
endomorphisms and sigma-derivations.

Everything here is exhaustive: ideals are explicit element sets and every
property is decided by scanning the ring.

>>> from skewpbw.ring import ZMod
>>> R = ZMod(12)
>>> [str(I) for I in enumerate_ideals(R)]
['{0}', '(6)', '(4)', '(3)', '(2)', 'R']
>>> str(prime_radical(R))
'(6)'
>>> result = primality(ZMod(6), ideal_closure(ZMod(6), []))
>>> result.is_prime, [str(K) for K in result.witness]
(False, ['(2)', '(3)'])
"""
from __future__ import absolute_import, division, unicode_literals, print_function, nested_scopes
import collections
import enum
import logging

from .error import (ImproperIdeal, InvalidSpec, MismatchedRing, NotEnumerable, NotInvariant,
                    NotSigmaInvariant, UnsupportedOperation)
from .maps import (IdentityMap, TableDerivation, TableEndoMap, ZeroDerivation, validate_endomorphism,
                   validate_sigma_derivation)
from .ring import QuotientRing, UniPoly, ideal_values

__date__ = 'October 18 2026'
__docformat__ = "restructuredtext en"

logger = logging.getLogger(__name__)

InvarianceFlags = collections.namedtuple("InvarianceFlags",
                                         ["sigma_invariant", "delta_invariant", "sigma_stable"])
PrimalityResult = collections.namedtuple("PrimalityResult", ["is_prime", "witness"])


class Mode(enum.Enum):
    PRIME = "prime"
    SEMIPRIME = "semiprime"
    SIGMA_PRIME = "sigma_prime"
    DELTA_PRIME = "delta_prime"
    SIGMA_DELTA_PRIME = "sigma_delta_prime"


def _require_finite(ring):
    if not ring.finite:
        raise NotEnumerable(ring)


class FiniteIdeal(object):
    """An ideal of a finite ring held as its explicit set of element values."""

    def __init__(self, ring, values, generators=None):
        self.ring = ring
        self.values = frozenset(values)
        self.generators = list(generators) if generators is not None else None
        self._indices = None
        self._description = None

    @classmethod
    def zero(cls, ring):
        return cls(ring, [ring.zero.value], [])

    @classmethod
    def whole(cls, ring):
        return cls(ring, [a.value for a in ring.elements()], [ring.one])

    @property
    def indices(self):
        """Sorted enumeration indices of the elements."""
        if self._indices is None:
            self._indices = tuple(sorted(self.ring.value_index(v) for v in self.values))
        return self._indices

    @property
    def elements(self):
        elements = self.ring.elements()
        return [elements[i] for i in self.indices]

    @property
    def cardinality(self):
        return len(self.values)

    def sort_key(self):
        return (len(self.values), self.indices)

    def __contains__(self, a):
        return a.value in self.values

    def issubset(self, other):
        return self.values <= other.values

    def is_zero(self):
        return len(self.values) == 1

    def is_whole(self):
        return self.ring._one in self.values

    def __eq__(self, other):
        return isinstance(other, FiniteIdeal) and self.ring == other.ring and self.values == other.values

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ring.key, self.values))

    def least_generators(self):
        """Generators picked greedily in enumeration order."""
        gens = []
        current = {self.ring._zero}
        for a in self.elements:
            if len(current) == len(self.values):
                break
            if a.value not in current:
                gens.append(a)
                current = set(ideal_values(self.ring, gens))
        return gens

    def describe(self):
        """Return "{0}", "R" or the least generators as "(g1, g2)"."""
        if self._description is None:
            if self.is_zero():
                self._description = "{0}"
            elif self.is_whole():
                self._description = "R"
            else:
                self._description = "({})".format(", ".join(str(g) for g in self.least_generators()))
        return self._description

    def __str__(self):
        return self.describe()

    def __repr__(self):
        return "FiniteIdeal({}, {})".format(self.ring, self.describe())


def describe(I):
    return I.describe()


class SigmaDeltaSystem(object):
    """A system of endomorphisms sigma_i with sigma_i-derivations delta_i of a ring.

    :param ring: The ring the maps act on.
    :param sigmas: The endomorphisms.
    :param deltas: The derivations, zero when omitted.
    :param validate: Check the endomorphism and Leibniz laws.
    :raises: InvalidSpec if a map fails validation.
    """

    def __init__(self, ring, sigmas, deltas=None, validate=True):
        self.ring = ring
        self.sigmas = list(sigmas)
        if deltas is None:
            deltas = [ZeroDerivation(ring, s) for s in self.sigmas]
        self.deltas = list(deltas)
        if len(self.sigmas) != len(self.deltas):
            raise InvalidSpec("A system needs as many derivations as endomorphisms")
        if validate:
            for i, (s, d) in enumerate(zip(self.sigmas, self.deltas)):
                if not validate_endomorphism(ring, s).is_endo:
                    raise InvalidSpec("sigma_{} is not a ring endomorphism".format(i + 1))
                if not validate_sigma_derivation(ring, s, d).is_sigma_derivation:
                    raise InvalidSpec("delta_{} is not a sigma_{}-derivation".format(i + 1, i + 1))

    @classmethod
    def trivial(cls, ring, n=1):
        return cls(ring, [IdentityMap(ring) for _ in range(n)], validate=False)

    @property
    def n(self):
        return len(self.sigmas)

    def __str__(self):
        return "SigmaDeltaSystem(sigma=[{}], delta=[{}])".format(
            ", ".join(str(s) for s in self.sigmas), ", ".join(str(d) for d in self.deltas))


def ideal_closure(R, gens):
    """The smallest ideal of `R` containing `gens`.

    :raises: NotEnumerable for infinite rings.
    """
    _require_finite(R)
    gens = [R(g) for g in gens]
    return FiniteIdeal(R, ideal_values(R, gens), gens)


def _sum_values(R, I, J):
    return frozenset(R._add(x, y) for x in I.values for y in J.values)


def enumerate_ideals(R, debug=False):
    """All ideals of a finite ring, each once, ordered by (cardinality, element indices).

    Every ideal of a finite ring is a finite sum of principal ideals, so the
    principal ideals are closed under pairwise sums until nothing new appears.

    :raises: NotEnumerable for infinite rings.
    """
    _require_finite(R)
    lattice = getattr(R, "_ideal_lattice", None)
    if lattice is not None:
        return list(lattice)

    found = {}
    for a in R.elements():
        values = ideal_values(R, [a])
        if values not in found:
            found[values] = FiniteIdeal(R, values, [a])
    if debug:
        logger.debug("%s has %d principal ideals", R, len(found))

    frontier = list(found.values())
    while frontier:
        added = []
        current = list(found.values())
        for I in frontier:
            for J in current:
                values = _sum_values(R, I, J)
                if values not in found:
                    found[values] = FiniteIdeal(R, values)
                    added.append(found[values])
        if debug and added:
            logger.debug("Sum closure added %d ideals", len(added))
        frontier = added

    lattice = sorted(found.values(), key=FiniteIdeal.sort_key)
    R._ideal_lattice = lattice
    return list(lattice)


def ideal_combine(I, J, op):
    """Combine ideals by ``sum``, ``product`` or ``intersection``.

    :raises: MismatchedRing if `I` and `J` belong to different rings.
    """
    if I.ring != J.ring:
        raise MismatchedRing(I.ring, J.ring)
    R = I.ring
    if op == "sum":
        return FiniteIdeal(R, _sum_values(R, I, J))
    if op == "product":
        products = {R._mul(x, y) for x in I.values for y in J.values}
        return FiniteIdeal(R, ideal_values(R, [R(v) for v in products]))
    if op == "intersection":
        return FiniteIdeal(R, I.values & J.values)
    raise ValueError("Unknown ideal operation: {}".format(op))


def _product_inside(R, K, L, I):
    for x in K.values:
        for y in L.values:
            if R._mul(x, y) not in I.values:
                return False
    return True


def annihilator(R, I):
    """The ideal of elements killing every element of `I`."""
    _require_finite(R)
    values = [a.value for a in R.elements() if all(R._mul(a.value, x) == R._zero for x in I.values)]
    return FiniteIdeal(R, values)


def _maps_preserve(maps, I):
    for m in maps:
        for a in I.elements:
            if m(a).value not in I.values:
                return False
    return True


def invariance(I, S):
    """Invariance of `I` under the system `S`.

    :return: ``InvarianceFlags``; ``sigma_stable`` means sigma_i(I) = I for every i.
    """
    _require_finite(I.ring)
    sigma_invariant = _maps_preserve(S.sigmas, I)
    delta_invariant = _maps_preserve(S.deltas, I)
    sigma_stable = sigma_invariant and all(
        len({s(a).value for a in I.elements}) == len(I.values) for s in S.sigmas)
    return InvarianceFlags(sigma_invariant, delta_invariant, sigma_stable)


def _mode_filter(mode, S):
    if mode in (Mode.PRIME, Mode.SEMIPRIME):
        return lambda K: True
    if mode == Mode.SIGMA_PRIME:
        return lambda K: _maps_preserve(S.sigmas, K)
    if mode == Mode.DELTA_PRIME:
        return lambda K: _maps_preserve(S.deltas, K)
    return lambda K: _maps_preserve(S.sigmas, K) and _maps_preserve(S.deltas, K)


_MODE_KIND = {
    Mode.SIGMA_PRIME: "Sigma",
    Mode.DELTA_PRIME: "Delta",
    Mode.SIGMA_DELTA_PRIME: "(Sigma,Delta)",
}


def primality(R, I, S=None, mode=Mode.PRIME, debug=False):
    """Decide whether `I` is prime in the sense of `mode` by brute force.

    Candidate ideals are the enumerated ideals of `R` in the mode's invariance
    class that are not contained in `I`; a pair ``(K, L)`` with ``KL`` inside
    `I` refutes primality and is returned as the witness. Semiprime mode
    tests ``K = L`` only.

    :param R: A finite ring.
    :param I: A proper ideal of `R`.
    :param S: A ``SigmaDeltaSystem``; the trivial system when omitted.
    :param mode: A :class:`Mode`.
    :return: ``PrimalityResult(is_prime, witness)``.
    :raises: ImproperIdeal if `I` is the whole ring; NotInvariant if `I` is not in the
             mode's invariance class; NotEnumerable for infinite rings.
    """
    _require_finite(R)
    mode = Mode(mode)
    if S is None:
        S = SigmaDeltaSystem.trivial(R)
    if I.is_whole():
        raise ImproperIdeal(I)
    in_class = _mode_filter(mode, S)
    if not in_class(I):
        raise NotInvariant(I, _MODE_KIND[mode])

    candidates = [K for K in enumerate_ideals(R) if in_class(K) and not K.issubset(I)]
    candidates.reverse()
    if debug:
        logger.debug("primality(%s, %s): %d candidate ideals outside I", mode.value, I,
                     len(candidates))
    for k, K in enumerate(candidates):
        pool = [K] if mode == Mode.SEMIPRIME else candidates[k:]
        for L in pool:
            if _product_inside(R, K, L, I):
                if debug:
                    logger.debug("Witness %s * %s inside %s", K, L, I)
                return PrimalityResult(False, (K, L))
    return PrimalityResult(True, None)


def prime_ideals(R):
    """The proper prime ideals of a finite ring."""
    return [P for P in enumerate_ideals(R) if not P.is_whole() and primality(R, P).is_prime]


def prime_radical(R):
    """Intersection of all prime ideals; `R` is semiprime iff this is {0}."""
    _require_finite(R)
    radical = FiniteIdeal.whole(R)
    for P in prime_ideals(R):
        radical = ideal_combine(radical, P, "intersection")
    return radical


def regular_set(R, I):
    """Elements whose residue modulo `I` is not a zero divisor of R/I.

    :raises: ImproperIdeal if `I` is the whole ring.
    """
    _require_finite(R)
    if I.is_whole():
        raise ImproperIdeal(I)
    result = []
    for a in R.elements():
        for b in R.elements():
            if b.value not in I.values and R._mul(a.value, b.value) in I.values:
                break
        else:
            result.append(a)
    return result


def sigma_monoid_closure(R, sigmas):
    """The monoid generated by `sigmas` under composition, identity included.

    :return: A list of endomorphisms in breadth-first discovery order.
    """
    _require_finite(R)
    identity = IdentityMap(R)
    seen = {identity.key: identity}
    frontier = [identity]
    while frontier:
        added = []
        for m in frontier:
            for s in sigmas:
                composite = s.compose(m)
                if composite.key not in seen:
                    seen[composite.key] = composite
                    added.append(composite)
        frontier = added
    return list(seen.values())


class IdealChain(object):
    """The descending chain R = I_0, I = I_1, I_2, ... of an ideal under a system."""

    def __init__(self, levels):
        self.levels = list(levels)

    def __len__(self):
        return len(self.levels)

    def __getitem__(self, j):
        return self.levels[j]

    def __str__(self):
        return " ⊇ ".join(str(I) for I in self.levels)

    def violations(self, S):
        """Check the chain properties; return a list of violation descriptions.

        The properties are: descending, delta_i(I_j) inside I_(j-1), every I_j
        Sigma-invariant and I*I_j inside I_(j+1).
        """
        problems = []
        levels = self.levels
        R = levels[0].ring
        I = levels[1] if len(levels) > 1 else levels[0]
        for j in range(1, len(levels)):
            if not levels[j].issubset(levels[j - 1]):
                problems.append("I_{} is not inside I_{}".format(j, j - 1))
            for i, d in enumerate(S.deltas):
                if any(d(a).value not in levels[j - 1].values for a in levels[j].elements):
                    problems.append("delta_{}(I_{}) is not inside I_{}".format(i + 1, j, j - 1))
        for j, level in enumerate(levels):
            if not _maps_preserve(S.sigmas, level):
                problems.append("I_{} is not Sigma-invariant".format(j))
            if j + 1 < len(levels) and not _product_inside(R, I, level, levels[j + 1]):
                problems.append("I * I_{} is not inside I_{}".format(j, j + 1))
        return problems


def ideal_chain(R, I, S, jmax, debug=False):
    """Compute I_0 = R, I_1 = I and, for j >= 2,
    I_j = {r in I : delta_i(M(r)) in I_(j-1) for every i and every M in the sigma monoid}.

    The monoid generated by the sigmas is finite on a finite ring, which makes
    each level exactly computable.

    :raises: NotSigmaInvariant if `I` is not Sigma-invariant.
    """
    _require_finite(R)
    if not _maps_preserve(S.sigmas, I):
        raise NotSigmaInvariant(I)
    monoid = sigma_monoid_closure(R, S.sigmas)
    words = [(d, m) for d in S.deltas for m in monoid]
    if debug:
        logger.debug("ideal_chain: %d sigma words, %d derivation words", len(monoid), len(words))
    levels = [FiniteIdeal.whole(R)]
    if jmax >= 1:
        levels.append(I)
    for j in range(2, jmax + 1):
        previous = levels[-1]
        values = [a.value for a in I.elements if all(d(m(a)).value in previous.values for d, m in words)]
        levels.append(FiniteIdeal(R, values))
        if debug:
            logger.debug("I_%d = %s", j, levels[-1])
    return IdealChain(levels)


def quotient_system(R, I, S):
    """The quotient ring R/I with the induced system.

    :return: ``(ring, system)``; the zero ideal returns `R` and `S` unchanged.
    :raises: ImproperIdeal if `I` is the whole ring; NotInvariant if `I` is not
             (Sigma,Delta)-invariant.
    """
    _require_finite(R)
    if I.is_whole():
        raise ImproperIdeal(I)
    flags = invariance(I, S)
    if not (flags.sigma_invariant and flags.delta_invariant):
        raise NotInvariant(I)
    if I.is_zero():
        return R, S
    Q = QuotientRing(R, I.least_generators())
    sigmas = [TableEndoMap.from_function(Q, lambda a, s=s: Q.project(s(Q.lift(a)))) for s in S.sigmas]
    deltas = [
        TableDerivation.from_function(Q, sigma, lambda a, d=d: Q.project(d(Q.lift(a))))
        for sigma, d in zip(sigmas, S.deltas)
    ]
    return Q, SigmaDeltaSystem(Q, sigmas, deltas)


class PrincipalIdeal(object):
    """A principal ideal (f) of K[t], normalized to a monic generator."""

    def __init__(self, ring, f):
        if not isinstance(ring, UniPoly):
            raise UnsupportedOperation("Principal ideals are supported over UniPoly only")
        self.ring = ring
        f = ring(f)
        if not f.is_zero():
            f = f * ring.constant(ring.base.inverse(ring.leading_coefficient(f)))
        self.generator = f

    def __contains__(self, a):
        if self.generator.is_zero():
            return a.is_zero()
        unused, rem = self.ring.poly_divmod(a, self.generator)
        return rem.is_zero()

    def is_zero(self):
        return self.generator.is_zero()

    def is_whole(self):
        return self.ring.degree(self.generator) == 0

    def describe(self):
        if self.is_zero():
            return "{0}"
        if self.is_whole():
            return "R"
        return "({})".format(self.generator)

    __str__ = describe


def principal_invariance(I, S):
    """Invariance of a principal ideal (f) of K[t]: f divides sigma(f) and delta(f)."""
    f = I.generator
    sigma_invariant = all(s(f) in I for s in S.sigmas)
    delta_invariant = all(d(f) in I for d in S.deltas)
    sigma_stable = sigma_invariant and all(I.ring.degree(s(f)) == I.ring.degree(f) for s in S.sigmas)
    return InvarianceFlags(sigma_invariant, delta_invariant, sigma_stable)
