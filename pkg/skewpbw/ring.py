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
"""Exact commutative coefficient rings.

Supported kinds are ``ZMod(n)``, ``Product(m1,...,mk)``, ``QuotientPoly(n, f)``
(:math:`\\mathbb{Z}/n[t]/(f)` with ``f`` monic), ``Rationals`` and
``UniPoly(K)`` (:math:`K[t]` over the rationals or a prime field). Quotients
``R/I`` of finite rings are produced by the ideal machinery.

Elements are :class:`RingElement` instances holding a canonical value, so
equality is representational equality.

>>> R = ZMod(6)
>>> print(R(4) + R(5))
3
>>> S = ProductRing([3, 3])
>>> print(S((1, 2)) * S((2, 2)))
[2,1]
>>> Q = QuotientPoly(2, [0, 0, 1])
>>> [str(a) for a in Q.elements()]
['0', '1', 't', 't + 1']
>>> t = Q.generator()
>>> (t * t).is_zero()
True
"""
from __future__ import absolute_import, division, unicode_literals, print_function, nested_scopes
import itertools
import logging
import numbers
import random
from fractions import Fraction

import sympy

from .error import InvalidRing, MismatchedRing, NotEnumerable, NotInRing

__docformat__ = "restructuredtext en"

logger = logging.getLogger(__name__)

MAX_FINITE_ORDER = 4096
SAMPLE_COUNT = 20
DEFAULT_SEED = 0


class RingElement(object):
    """An element of a supported ring, in canonical form."""

    __slots__ = ("ring", "value")

    def __init__(self, ring, value):
        self.ring = ring
        self.value = value

    def _other(self, other):
        if isinstance(other, int):
            return self.ring.from_int(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.ring is not self.ring and other.ring != self.ring:
            raise MismatchedRing(self.ring, other.ring)
        return other

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring._add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring._sub(self.value, other.value))

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring._mul(self.value, other.value))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring._neg(self.value))

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** -k
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return False
        return self.value == other.value and (self.ring is other.ring or self.ring == other.ring)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ring.key, self.value))

    def __repr__(self):
        return "RingElement({}, {!r})".format(self.ring, self.value)

    def __str__(self):
        return self.ring.format_value(self.value)

    def is_zero(self):
        return self.value == self.ring._zero

    def is_one(self):
        return self.value == self.ring._one

    def is_unit(self):
        return self.ring.is_unit(self)

    def inverse(self):
        return self.ring.inverse(self)


def format_terms(terms):
    """Join ``(monomial, coefficient text)`` pairs, highest first.

    A coefficient text may carry a leading '-'; a coefficient of 1 is
    suppressed unless the monomial is empty.
    """
    parts = []
    for mono, text in terms:
        neg = text.startswith("-")
        if neg:
            text = text[1:]
        if not mono:
            body = text
        elif text == "1":
            body = mono
        else:
            body = "{}*{}".format(text, mono)
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


def _integer(ring, value):
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Rational) and value.denominator == 1:
        return int(value.numerator)
    raise NotInRing(ring, value)


def _t_monomial(k):
    if k == 0:
        return ""
    if k == 1:
        return "t"
    return "t^{}".format(k)


class Ring(object):
    """Base class of coefficient ring descriptors."""

    kind = None
    finite = False
    has_generator = False

    def __init__(self):
        self.key = self._make_key()
        self._zero = self._canon(0)
        self._one = self._canon(1)
        self.zero = RingElement(self, self._zero)
        self.one = RingElement(self, self._one)

    def _make_key(self):
        raise NotImplementedError("_make_key")

    def __eq__(self, other):
        return isinstance(other, Ring) and self.key == other.key

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return str(self)

    def __call__(self, value):
        """Return the element with the (not necessarily canonical) value `value`."""
        if isinstance(value, RingElement):
            if value.ring != self:
                raise MismatchedRing(value.ring, self)
            return value
        return RingElement(self, self._canon(value))

    # Raw value operations, implemented by each kind.

    def _canon(self, value):
        raise NotImplementedError("_canon")

    def _add(self, x, y):
        raise NotImplementedError("_add")

    def _neg(self, x):
        raise NotImplementedError("_neg")

    def _mul(self, x, y):
        raise NotImplementedError("_mul")

    def _sub(self, x, y):
        return self._add(x, self._neg(y))

    def format_value(self, value):
        return str(value)

    def from_int(self, k):
        return RingElement(self, self._canon(k))

    def generator(self):
        raise InvalidRing("{} has no generator t".format(self))

    @property
    def cardinality(self):
        return None

    @property
    def is_domain(self):
        raise NotImplementedError("is_domain")

    def elements(self):
        raise NotEnumerable(self)

    def index(self, a):
        raise NotEnumerable(self)

    def is_unit(self, a):
        raise NotImplementedError("is_unit")

    def inverse(self, a):
        raise NotImplementedError("inverse")

    def is_regular(self, a):
        # Infinite supported rings are domains.
        return not a.is_zero()

    def random_element(self, rng):
        raise NotImplementedError("random_element")

    def sample_elements(self, count=SAMPLE_COUNT, seed=DEFAULT_SEED):
        """Deterministic elements to check laws on: all of them for a finite ring, else
        1, t (when present) and `count` random elements."""
        if self.finite:
            return self.elements()
        rng = random.Random(seed)
        samples = [self.one]
        if self.has_generator:
            samples.append(self.generator())
        samples.extend(self.random_element(rng) for _ in range(count))
        return samples


class FiniteRing(Ring):
    """Common behavior of the finite kinds: enumeration, indexing and exhaustive scans."""

    finite = True

    def __init__(self):
        super(FiniteRing, self).__init__()
        if self.cardinality > MAX_FINITE_ORDER:
            raise InvalidRing("{} has {} elements, more than the supported {}".format(
                self, self.cardinality, MAX_FINITE_ORDER))
        self._elements = None
        self._index = None
        self._inverses = None
        self._domain = None

    def _values(self):
        raise NotImplementedError("_values")

    def elements(self):
        """All elements exactly once, in canonical enumeration order."""
        if self._elements is None:
            self._elements = [RingElement(self, v) for v in self._values()]
            self._index = {a.value: i for i, a in enumerate(self._elements)}
        return self._elements

    def index(self, a):
        if self._index is None:
            self.elements()
        return self._index[a.value]

    def value_index(self, value):
        if self._index is None:
            self.elements()
        return self._index[value]

    def _unit_table(self):
        if self._inverses is None:
            inverses = {}
            elements = self.elements()
            for a in elements:
                if a.value in inverses:
                    continue
                for b in elements:
                    if self._mul(a.value, b.value) == self._one:
                        inverses[a.value] = b.value
                        inverses[b.value] = a.value
                        break
            self._inverses = inverses
        return self._inverses

    def is_unit(self, a):
        return a.value in self._unit_table()

    def inverse(self, a):
        try:
            return RingElement(self, self._unit_table()[a.value])
        except KeyError:
            raise ZeroDivisionError("{} is not a unit of {}".format(a, self))

    def is_regular(self, a):
        for b in self.elements():
            if self._mul(a.value, b.value) == self._zero and b.value != self._zero:
                return False
        return True

    @property
    def is_domain(self):
        if self._domain is None:
            self._domain = all(self.is_regular(a) for a in self.elements() if not a.is_zero())
        return self._domain

    def random_element(self, rng):
        return rng.choice(self.elements())


class ZMod(FiniteRing):
    """The integers modulo n."""

    kind = "ZMod"

    def __init__(self, n):
        if int(n) != n or n < 2:
            raise InvalidRing("ZMod modulus must be an integer >= 2, got {}".format(n))
        self.n = int(n)
        super(ZMod, self).__init__()

    def _make_key(self):
        return ("ZMod", self.n)

    def __str__(self):
        return "ZMod({})".format(self.n)

    @property
    def cardinality(self):
        return self.n

    def _values(self):
        return range(self.n)

    def _canon(self, value):
        return _integer(self, value) % self.n

    def _add(self, x, y):
        return (x + y) % self.n

    def _sub(self, x, y):
        return (x - y) % self.n

    def _neg(self, x):
        return -x % self.n

    def _mul(self, x, y):
        return x * y % self.n

    def is_unit(self, a):
        return sympy.igcd(a.value, self.n) == 1

    def inverse(self, a):
        if not self.is_unit(a):
            raise ZeroDivisionError("{} is not a unit of {}".format(a, self))
        return RingElement(self, int(sympy.mod_inverse(a.value, self.n)))

    @property
    def is_domain(self):
        return bool(sympy.isprime(self.n))


class ProductRing(FiniteRing):
    """The product ring ZMod(m1) x ... x ZMod(mk) with componentwise operations."""

    kind = "Product"

    def __init__(self, factors):
        factors = tuple(int(m) for m in factors)
        if not factors or any(m < 2 for m in factors):
            raise InvalidRing("Product factors must be a nonempty list of moduli >= 2")
        self.factors = factors
        super(ProductRing, self).__init__()

    def _make_key(self):
        return ("Product", self.factors)

    def __str__(self):
        return "Product({})".format(",".join(str(m) for m in self.factors))

    @property
    def cardinality(self):
        size = 1
        for m in self.factors:
            size *= m
        return size

    def _values(self):
        return itertools.product(*[range(m) for m in self.factors])

    def _canon(self, value):
        if isinstance(value, numbers.Rational):
            value = (value, ) * len(self.factors)
        if len(value) != len(self.factors):
            raise InvalidRing("{} elements have {} components".format(self, len(self.factors)))
        return tuple(_integer(self, x) % m for x, m in zip(value, self.factors))

    def _add(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.factors))

    def _neg(self, x):
        return tuple(-a % m for a, m in zip(x, self.factors))

    def _mul(self, x, y):
        return tuple(a * b % m for a, b, m in zip(x, y, self.factors))

    def is_unit(self, a):
        return all(sympy.igcd(x, m) == 1 for x, m in zip(a.value, self.factors))

    def inverse(self, a):
        if not self.is_unit(a):
            raise ZeroDivisionError("{} is not a unit of {}".format(a, self))
        return RingElement(self,
                           tuple(int(sympy.mod_inverse(x, m)) for x, m in zip(a.value, self.factors)))

    def format_value(self, value):
        return "[{}]".format(",".join(str(x) for x in value))


class QuotientPoly(FiniteRing):
    """The ring Z/n[t]/(f) for a monic polynomial f of degree >= 1.

    :param n: The modulus of the coefficients.
    :param poly: Coefficients of f from the constant term up.
    """

    kind = "QuotientPoly"
    has_generator = True

    def __init__(self, n, poly):
        if int(n) != n or n < 2:
            raise InvalidRing("QuotientPoly modulus must be an integer >= 2, got {}".format(n))
        self.n = int(n)
        poly = [int(c) % self.n for c in poly]
        while poly and poly[-1] == 0:
            poly.pop()
        if len(poly) < 2:
            raise InvalidRing("QuotientPoly polynomial must have degree >= 1")
        if poly[-1] != 1:
            raise InvalidRing("QuotientPoly polynomial must be monic")
        self.poly = tuple(poly)
        self.degree = len(poly) - 1
        super(QuotientPoly, self).__init__()

    def _make_key(self):
        return ("QuotientPoly", self.n, self.poly)

    def __str__(self):
        terms = [(_t_monomial(k), str(c)) for k, c in reversed(list(enumerate(self.poly))) if c]
        return "QuotientPoly({},{})".format(self.n, format_terms(terms).replace(" ", ""))

    @property
    def cardinality(self):
        return self.n**self.degree

    def _values(self):
        for combo in itertools.product(range(self.n), repeat=self.degree):
            yield tuple(reversed(combo))

    def _reduce(self, coeffs):
        n, d, f = self.n, self.degree, self.poly
        coeffs = [c % n for c in coeffs]
        for k in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[k]
            if c:
                for i in range(d + 1):
                    coeffs[k - d + i] = (coeffs[k - d + i] - c * f[i]) % n
        coeffs = coeffs[:d]
        coeffs.extend([0] * (d - len(coeffs)))
        return tuple(coeffs)

    def _canon(self, value):
        if isinstance(value, numbers.Rational):
            value = (value, )
        return self._reduce([_integer(self, c) for c in value])

    def _add(self, x, y):
        return tuple((a + b) % self.n for a, b in zip(x, y))

    def _neg(self, x):
        return tuple(-a % self.n for a in x)

    def _mul(self, x, y):
        prod = [0] * (len(x) + len(y) - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    prod[i + j] += a * b
        return self._reduce(prod)

    def generator(self):
        return RingElement(self, self._canon((0, 1)))

    def format_value(self, value):
        return format_terms([(_t_monomial(k), str(c)) for k, c in reversed(list(enumerate(value)))
                              if c])


class Rationals(Ring):
    """The field of rational numbers with exact fractions."""

    kind = "Rationals"

    def _make_key(self):
        return ("Rationals", )

    def __str__(self):
        return "Rationals"

    def _canon(self, value):
        if not isinstance(value, numbers.Rational):
            raise NotInRing(self, value)
        return Fraction(value)

    def _add(self, x, y):
        return x + y

    def _sub(self, x, y):
        return x - y

    def _neg(self, x):
        return -x

    def _mul(self, x, y):
        return x * y

    @property
    def is_domain(self):
        return True

    def is_unit(self, a):
        return a.value != 0

    def inverse(self, a):
        return RingElement(self, 1 / a.value)

    def random_element(self, rng):
        return RingElement(self, Fraction(rng.randint(-9, 9), rng.randint(1, 5)))

    def format_value(self, value):
        return str(value)


class UniPoly(Ring):
    """The polynomial ring K[t] over the rationals or a prime field.

    Values are coefficient tuples from the constant term up, without
    trailing zeros; the zero polynomial is the empty tuple.
    """

    kind = "UniPoly"
    has_generator = True

    def __init__(self, base):
        if isinstance(base, ZMod):
            if not sympy.isprime(base.n):
                raise InvalidRing("UniPoly base ZMod({}) is not a field".format(base.n))
        elif not isinstance(base, Rationals):
            raise InvalidRing("UniPoly base must be Rationals or ZMod(p), got {}".format(base))
        self.base = base
        super(UniPoly, self).__init__()

    def _make_key(self):
        return ("UniPoly", self.base.key)

    def __str__(self):
        return "UniPoly({})".format(self.base)

    def _strip(self, coeffs):
        zero = self.base._zero
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        return tuple(coeffs)

    def _canon(self, value):
        if isinstance(value, numbers.Number):
            value = (value, )
        return self._strip(self.base._canon(c) for c in value)

    def _add(self, x, y):
        b = self.base
        if len(x) < len(y):
            x, y = y, x
        out = list(x)
        for i, c in enumerate(y):
            out[i] = b._add(out[i], c)
        return self._strip(out)

    def _neg(self, x):
        return tuple(self.base._neg(c) for c in x)

    def _mul(self, x, y):
        if not x or not y:
            return ()
        b = self.base
        out = [b._zero] * (len(x) + len(y) - 1)
        for i, c in enumerate(x):
            if c == b._zero:
                continue
            for j, d in enumerate(y):
                out[i + j] = b._add(out[i + j], b._mul(c, d))
        return self._strip(out)

    def compose(self, p, u):
        """Return p(u(t)) for elements p and u."""
        b = self.base
        result = ()
        for c in reversed(p.value):
            result = self._add(self._mul(result, u.value), (c, ) if c != b._zero else ())
        return RingElement(self, result)

    def degree(self, a):
        return len(a.value) - 1 if a.value else None

    def leading_coefficient(self, a):
        return RingElement(self.base, a.value[-1])

    def coefficients(self, a):
        return [RingElement(self.base, c) for c in a.value]

    def constant(self, c):
        return RingElement(self, self._canon((self.base(c).value, )))

    def poly_divmod(self, a, b):
        """Polynomial division a = q*b + r with deg r < deg b."""
        if not b.value:
            raise ZeroDivisionError("division by the zero polynomial")
        base = self.base
        inv = base._canon(base.inverse(RingElement(base, b.value[-1])).value)
        rem = list(a.value)
        quot = [base._zero] * max(len(rem) - len(b.value) + 1, 0)
        db = len(b.value) - 1
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == base._zero:
                continue
            q = base._mul(c, inv)
            quot[k - db] = q
            for i, d in enumerate(b.value):
                rem[k - db + i] = base._sub(rem[k - db + i], base._mul(q, d))
        return RingElement(self, self._strip(quot)), RingElement(self, self._strip(rem))

    @property
    def is_domain(self):
        return True

    def is_unit(self, a):
        return len(a.value) == 1

    def inverse(self, a):
        if not self.is_unit(a):
            raise ZeroDivisionError("{} is not a unit of {}".format(a, self))
        inv = self.base.inverse(RingElement(self.base, a.value[0]))
        return RingElement(self, (inv.value, ))

    def generator(self):
        return RingElement(self, self._canon((0, 1)))

    def random_element(self, rng, max_degree=2):
        coeffs = [self.base.random_element(rng).value for _ in range(rng.randint(0, max_degree) + 1)]
        return RingElement(self, self._strip(coeffs))

    def format_value(self, value):
        return format_terms([(_t_monomial(k), self.base.format_value(c))
                              for k, c in reversed(list(enumerate(value)))
                              if c != self.base._zero])


def ideal_values(ring, generators):
    """Values of the ideal of finite `ring` generated by `generators`."""
    values = {ring._zero}
    for g in generators:
        principal = {ring._mul(r.value, g.value) for r in ring.elements()}
        values = {ring._add(x, y) for x in values for y in principal}
    return frozenset(values)


class QuotientRing(FiniteRing):
    """The quotient R/I of a finite ring by an ideal, on least coset representatives."""

    kind = "Quotient"

    def __init__(self, base, generators):
        if not base.finite:
            raise NotEnumerable(base)
        self.base = base
        self.generators = tuple(base(g) for g in generators)
        self.ideal = ideal_values(base, self.generators)
        if base._one in self.ideal:
            raise InvalidRing("Cannot form the quotient by the whole ring")
        rep = {}
        for a in base.elements():
            if a.value not in rep:
                for i in self.ideal:
                    rep[base._add(a.value, i)] = a.value
        self._rep = rep
        super(QuotientRing, self).__init__()

    def _make_key(self):
        return ("Quotient", self.base.key, tuple(sorted(self.base.value_index(v)
                                                        for v in self.ideal)))

    def __str__(self):
        gens = ",".join(str(g) for g in self.generators) or "0"
        return "Quotient({},({}))".format(self.base, gens)

    @property
    def cardinality(self):
        return self.base.cardinality // len(self.ideal)

    @property
    def has_generator(self):
        return self.base.has_generator

    def _values(self):
        seen = set()
        for a in self.base.elements():
            v = self._rep[a.value]
            if v not in seen:
                seen.add(v)
                yield v

    def _canon(self, value):
        return self._rep[self.base._canon(value)]

    def _add(self, x, y):
        return self._rep[self.base._add(x, y)]

    def _neg(self, x):
        return self._rep[self.base._neg(x)]

    def _mul(self, x, y):
        return self._rep[self.base._mul(x, y)]

    def generator(self):
        return self(self.base.generator().value)

    def lift(self, a):
        return RingElement(self.base, a.value)

    def project(self, a):
        return RingElement(self, self._rep[a.value])

    def format_value(self, value):
        return self.base.format_value(value)


def ring_arithmetic(a, b, op):
    """Apply `op` (one of ``add``, ``sub``, ``mul``, ``neg``) exactly.

    :raises: MismatchedRing when `a` and `b` belong to different rings.

    >>> R = ZMod(6)
    >>> print(ring_arithmetic(R(4), R(5), "add"))
    3
    """
    if op == "neg":
        return -a
    if a.ring != b.ring:
        raise MismatchedRing(a.ring, b.ring)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("Unknown ring operation: {}".format(op))


def enumerate_elements(ring):
    """All elements of a finite ring in canonical order.

    :raises: NotEnumerable for infinite rings.
    """
    return list(ring.elements())


def is_regular(ring, a):
    """True iff `a` is not a zero divisor of `ring`."""
    return ring.is_regular(ring(a))


__date__ = 'October 18 2026'
