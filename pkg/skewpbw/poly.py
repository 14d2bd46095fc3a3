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
"""Exponent vectors and skew polynomials in normal form.

A :class:`SkewPolynomial` stores the coefficients of the standard monomials
``x^a = x1^a1 ... xn^an``; multiplication needs the defining relations and so
lives on :class:`skewpbw.extension.ExtensionSpec`.

>>> deglex_compare((2, 0), (1, 1))
<Ordering.Greater: 1>
>>> deglex_compare((0, 3), (2, 0))
<Ordering.Greater: 1>
"""
from __future__ import absolute_import, division, unicode_literals, print_function, nested_scopes
import collections
import enum
import logging

from sympy.polys.orderings import grlex

from .error import MismatchedArity, MismatchedRing, ZeroPolynomial

__date__ = 'October 18 2026'
__docformat__ = "restructuredtext en"

logger = logging.getLogger(__name__)

LeadingData = collections.namedtuple("LeadingData", ["lm", "lc", "deg"])


class Ordering(enum.Enum):
    Less = -1
    Equal = 0
    Greater = 1


def deglex_key(exponents):
    """Sort key of an exponent vector: total degree first, then the earliest larger exponent."""
    return grlex(exponents)


def deglex_compare(a, b):
    """Compare exponent vectors in the degree-lexicographic order.

    :raises: MismatchedArity if the vectors have different lengths.
    """
    if len(a) != len(b):
        raise MismatchedArity(a, b)
    ka, kb = deglex_key(a), deglex_key(b)
    if ka > kb:
        return Ordering.Greater
    if ka < kb:
        return Ordering.Less
    return Ordering.Equal


def unit_vector(nvars, i):
    return tuple(1 if k == i else 0 for k in range(nvars))


def add_exponents(a, b):
    return tuple(x + y for x, y in zip(a, b))


class SkewPolynomial(object):
    """An immutable element of a skew PBW extension in normal form.

    :param ring: The coefficient ring.
    :param nvars: The number of variables.
    :param terms: Mapping of exponent tuples to ring elements; zero coefficients are dropped.
    :param names: Variable names used when printing (defaults to x1..xn).
    """

    __slots__ = ("ring", "nvars", "terms", "names", "_sorted", "_hash")

    def __init__(self, ring, nvars, terms=None, names=None):
        self.ring = ring
        self.nvars = nvars
        self.names = names
        cleaned = {}
        if terms:
            for exp, coeff in terms.items():
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise MismatchedArity(exp, (0, ) * nvars)
                coeff = ring(coeff)
                if not coeff.is_zero():
                    cleaned[exp] = coeff
        self.terms = cleaned
        self._sorted = None
        self._hash = None

    @classmethod
    def _from_clean(cls, ring, nvars, terms, names=None):
        poly = cls.__new__(cls)
        poly.ring = ring
        poly.nvars = nvars
        poly.names = names
        poly.terms = terms
        poly._sorted = None
        poly._hash = None
        return poly

    def _check(self, other):
        if other.ring != self.ring:
            raise MismatchedRing(self.ring, other.ring)
        if other.nvars != self.nvars:
            raise MismatchedArity((0, ) * self.nvars, (0, ) * other.nvars)

    def sorted_terms(self):
        """The (exponent, coefficient) pairs in strictly descending deglex order."""
        if self._sorted is None:
            self._sorted = sorted(self.terms.items(), key=lambda item: deglex_key(item[0]),
                                  reverse=True)
        return self._sorted

    def is_zero(self):
        return not self.terms

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), self.ring.zero)

    def coefficients(self):
        return list(self.terms.values())

    @property
    def degree(self):
        """Largest total degree of a stored monomial, None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(exp) for exp in self.terms)

    def leading_data(self):
        """Return ``(lm, lc, deg)``.

        :raises: ZeroPolynomial for the zero polynomial.
        """
        if not self.terms:
            raise ZeroPolynomial()
        lm, lc = self.sorted_terms()[0]
        return LeadingData(lm, lc, sum(lm))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            total = terms[exp] + coeff if exp in terms else coeff
            if total.is_zero():
                terms.pop(exp, None)
            else:
                terms[exp] = total
        return self._from_clean(self.ring, self.nvars, terms, self.names or other.names)

    def __neg__(self):
        return self._from_clean(self.ring, self.nvars, {e: -c for e, c in self.terms.items()},
                                self.names)

    def __sub__(self, other):
        return self + (-other)

    def scale_left(self, r):
        """Return r*f, multiplying each coefficient on the left."""
        r = self.ring(r)
        terms = {}
        for exp, coeff in self.terms.items():
            prod = r * coeff
            if not prod.is_zero():
                terms[exp] = prod
        return self._from_clean(self.ring, self.nvars, terms, self.names)

    def map_coefficients(self, func, ring=None):
        """Apply `func` to every coefficient, optionally landing in another ring."""
        ring = ring or self.ring
        return SkewPolynomial(ring, self.nvars, {e: func(c) for e, c in self.terms.items()},
                              self.names)

    def __eq__(self, other):
        if not isinstance(other, SkewPolynomial):
            return False
        return self.ring == other.ring and self.nvars == other.nvars and self.terms == other.terms

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.key, self.nvars,
                               frozenset((e, c.value) for e, c in self.terms.items())))
        return self._hash

    def __repr__(self):
        return "SkewPolynomial({}, {}, {{{}}})".format(
            self.ring, self.nvars, ", ".join("{}: {}".format(e, c) for e, c in self.sorted_terms()))

    def __str__(self):
        from .parser import format_polynomial
        return format_polynomial(self)
