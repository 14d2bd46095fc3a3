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
"""Ring endomorphisms and sigma-derivations of the coefficient rings.

On a finite ring a map is a total table indexed by the enumeration order. On
``UniPoly`` a map is fixed by the image of ``t``; on ``Rationals`` only the
identity and the zero derivation exist.

>>> from skewpbw.ring import ProductRing
>>> R = ProductRing([3, 3])
>>> swap = TableEndoMap.from_function(R, lambda a: R((a.value[1], a.value[0])))
>>> validate_endomorphism(R, swap)
EndoReport(is_endo=True, injective=True, bijective=True)
>>> print(swap(R((1, 2))))
[2,1]
"""
from __future__ import absolute_import, division, unicode_literals, print_function, nested_scopes
import collections
import logging

from .error import IncompleteMap, InvalidSpec
from .ring import Rationals, UniPoly, RingElement

__date__ = 'October 18 2026'
__docformat__ = "restructuredtext en"

logger = logging.getLogger(__name__)

EndoReport = collections.namedtuple("EndoReport", ["is_endo", "injective", "bijective"])
DerivationReport = collections.namedtuple("DerivationReport", ["is_sigma_derivation"])


class _RingMap(object):
    """Behavior shared by endomorphisms and derivations."""

    def __init__(self, ring):
        self.ring = ring
        self._key = None

    def __call__(self, a):
        raise NotImplementedError("__call__")

    @property
    def key(self):
        """A hashable value determining the map on its ring."""
        if self._key is None:
            ring = self.ring
            if ring.finite:
                self._key = tuple(self(a).value for a in ring.elements())
            elif isinstance(ring, UniPoly):
                self._key = ("t", self(ring.generator()).value)
            else:
                self._key = ("one", self(ring.one).value)
        return self._key

    def __eq__(self, other):
        return isinstance(other, _RingMap) and self.ring == other.ring and self.key == other.key

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ring.key, self.key))

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, self)

    def table(self):
        """Images of all elements in enumeration order (finite rings only)."""
        return [self(a) for a in self.ring.elements()]


class EndoMap(_RingMap):
    """A ring endomorphism sigma of a coefficient ring."""

    def __init__(self, ring):
        super(EndoMap, self).__init__(ring)
        self._report = None

    def is_identity(self):
        return self.key == IdentityMap(self.ring).key

    def compose(self, other):
        """Return the endomorphism a -> self(other(a))."""
        ring = self.ring
        if self.is_identity():
            return other
        if other.is_identity():
            return self
        if ring.finite:
            return TableEndoMap.from_function(ring, lambda a: self(other(a)))
        return PolyEndoMap(ring, self(other(ring.generator())))


class IdentityMap(EndoMap):
    def __call__(self, a):
        return a

    @property
    def key(self):
        if self._key is None:
            ring = self.ring
            if ring.finite:
                self._key = tuple(a.value for a in ring.elements())
            elif isinstance(ring, UniPoly):
                self._key = ("t", ring.generator().value)
            else:
                self._key = ("one", ring.one.value)
        return self._key

    def is_identity(self):
        return True

    def __str__(self):
        return "identity"


class TableEndoMap(EndoMap):
    """An endomorphism of a finite ring given by its table of images.

    :param ring: A finite ring.
    :param images: Images of the elements in enumeration order.
    :raises: IncompleteMap if the table is not total.
    """

    def __init__(self, ring, images):
        super(TableEndoMap, self).__init__(ring)
        if not ring.finite:
            raise InvalidSpec("Table maps need a finite ring, got {}".format(ring))
        images = [ring(v) for v in images]
        if len(images) != ring.cardinality:
            raise IncompleteMap(ring, len(images))
        self.images = images

    @classmethod
    def from_function(cls, ring, func):
        return cls(ring, [func(a) for a in ring.elements()])

    def __call__(self, a):
        return self.images[self.ring.value_index(a.value)]

    def __str__(self):
        return "[{}]".format(", ".join(str(b) for b in self.images))


class PolyEndoMap(EndoMap):
    """The endomorphism of K[t] fixing constants and sending t to `u`."""

    def __init__(self, ring, u):
        super(PolyEndoMap, self).__init__(ring)
        if not isinstance(ring, UniPoly):
            raise InvalidSpec("t-image maps need a UniPoly ring, got {}".format(ring))
        self.u = ring(u)

    def __call__(self, a):
        return self.ring.compose(a, self.u)

    def __str__(self):
        return "t -> {}".format(self.u)


class DerMap(_RingMap):
    """A sigma-derivation, paired with its companion endomorphism `sigma`."""

    def __init__(self, ring, sigma=None):
        super(DerMap, self).__init__(ring)
        self.sigma = sigma if sigma is not None else IdentityMap(ring)
        self._report = None

    def is_zero(self):
        return all(v == self.ring._zero for v in self._zero_probe())

    def _zero_probe(self):
        ring = self.ring
        if ring.finite:
            return self.key
        return (self(a).value for a in ring.sample_elements())


class ZeroDerivation(DerMap):
    def __call__(self, a):
        return self.ring.zero

    def is_zero(self):
        return True

    def __str__(self):
        return "zero"


class TableDerivation(DerMap):
    """A derivation of a finite ring given by its table of images."""

    def __init__(self, ring, sigma, images):
        super(TableDerivation, self).__init__(ring, sigma)
        if not ring.finite:
            raise InvalidSpec("Table maps need a finite ring, got {}".format(ring))
        images = [ring(v) for v in images]
        if len(images) != ring.cardinality:
            raise IncompleteMap(ring, len(images))
        self.images = images

    @classmethod
    def from_function(cls, ring, sigma, func):
        return cls(ring, sigma, [func(a) for a in ring.elements()])

    def __call__(self, a):
        return self.images[self.ring.value_index(a.value)]

    def __str__(self):
        return "[{}]".format(", ".join(str(b) for b in self.images))


class PolyDerivation(DerMap):
    """The sigma-derivation of K[t] vanishing on constants with t -> `v`.

    With sigma(t) = u, the Leibniz rule forces
    delta(t^k) = u * delta(t^(k-1)) + v * t^(k-1).
    """

    def __init__(self, ring, sigma, v):
        super(PolyDerivation, self).__init__(ring, sigma)
        if not isinstance(ring, UniPoly):
            raise InvalidSpec("t-image maps need a UniPoly ring, got {}".format(ring))
        self.v = ring(v)

    def __call__(self, a):
        ring = self.ring
        u = self.sigma(ring.generator())
        t = ring.generator()
        power = ring.one
        dpower = ring.zero
        result = ring.zero
        for k, c in enumerate(a.value):
            if k:
                dpower = u * dpower + self.v * power
                power = power * t
            if c != ring.base._zero:
                result = result + ring.constant(RingElement(ring.base, c)) * dpower
        return result

    def is_zero(self):
        return self.v.is_zero()

    def __str__(self):
        return "t -> {}".format(self.v)


def inner_derivation(ring, sigma, a):
    """The inner sigma-derivation r -> a*r - sigma(r)*a."""
    a = ring(a)
    if ring.finite:
        return TableDerivation.from_function(ring, sigma, lambda r: a * r - sigma(r) * a)
    if isinstance(ring, UniPoly):
        t = ring.generator()
        return PolyDerivation(ring, sigma, a * t - sigma(t) * a)
    return ZeroDerivation(ring, sigma)


def _check_pairs(ring):
    samples = ring.sample_elements()
    for a in samples:
        for b in samples:
            yield a, b


def validate_endomorphism(R, m):
    """Check the ring endomorphism laws for `m` on `R`.

    Finite rings are checked on every pair of elements; ``UniPoly`` on ``t``
    and sampled products. Injectivity of a t-image map is certified by
    ``deg u >= 1`` and bijectivity by ``deg u == 1`` with a unit leading
    coefficient.

    :return: An ``EndoReport`` namedtuple.
    :raises: IncompleteMap if a table does not cover `R`.
    """
    if m._report is not None:
        return m._report
    if isinstance(m, TableEndoMap) and len(m.images) != R.cardinality:
        raise IncompleteMap(R, len(m.images))

    is_endo = m(R.zero).is_zero() and m(R.one).is_one()
    if is_endo:
        for a, b in _check_pairs(R):
            if m(a + b) != m(a) + m(b) or m(a * b) != m(a) * m(b):
                logger.debug("%s fails the endomorphism laws at %s, %s", m, a, b)
                is_endo = False
                break

    if not is_endo:
        injective = bijective = False
    elif R.finite:
        injective = len(set(m.key)) == R.cardinality
        bijective = injective
    elif isinstance(R, UniPoly):
        u = m(R.generator())
        degree = R.degree(u)
        injective = degree is not None and degree >= 1
        bijective = degree == 1 and R.base.is_unit(R.leading_coefficient(u))
    else:
        injective = bijective = True

    m._report = EndoReport(is_endo, injective, bijective)
    return m._report


def validate_sigma_derivation(R, s, d):
    """Check the sigma-derivation laws for `d` with companion `s` on `R`.

    :return: A ``DerivationReport`` namedtuple.
    :raises: IncompleteMap if a table does not cover `R`.
    """
    if d._report is not None and d.sigma == s:
        return d._report
    if isinstance(d, TableDerivation) and len(d.images) != R.cardinality:
        raise IncompleteMap(R, len(d.images))

    ok = d(R.one).is_zero()
    if isinstance(R, Rationals):
        ok = ok and d(R.from_int(2)).is_zero()
    if ok:
        for a, b in _check_pairs(R):
            if d(a + b) != d(a) + d(b) or d(a * b) != s(a) * d(b) + d(a) * b:
                logger.debug("%s fails the sigma-Leibniz rule at %s, %s", d, a, b)
                ok = False
                break

    report = DerivationReport(ok)
    if d.sigma == s:
        d._report = report
    return report
