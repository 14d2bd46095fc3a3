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
"""Named example extensions.

Every entry is built from a small parameter set, certified with
:func:`skewpbw.extension.check_pbw_consistency` and checked against the
flags it is known to have.

>>> E = build_catalog("weyl", {"n": 1})
>>> print(E.multiply(E.variable(2), E.variable(1)))
x1*x2 + 1
>>> classify_extension(E).derivation_type
True
"""
from __future__ import absolute_import, division, unicode_literals, print_function, nested_scopes
import collections
import json
import logging

import sympy

from .error import BadParams, ParseError, SkewPBWError, UnknownEntry
from .extension import ExtensionSpec, check_pbw_consistency, classify_extension
from .maps import EndoMap, IdentityMap, PolyDerivation, PolyEndoMap, TableEndoMap
from .parser import parse_element, parse_ring
from .ring import ProductRing, Rationals, Ring, RingElement, UniPoly, ZMod
from .specfile import sigma_from_document

__date__ = 'October 18 2026'
__docformat__ = "restructuredtext en"

logger = logging.getLogger(__name__)

Param = collections.namedtuple("Param", ["name", "kind", "default", "help"])
CatalogEntry = collections.namedtuple("CatalogEntry", ["name", "params", "builder", "expected", "description"])

_catalog = collections.OrderedDict()


def _entry(name, params, expected, description):
    def register(builder):
        _catalog[name] = CatalogEntry(name, tuple(Param(*p) for p in params), builder, expected,
                                      description)
        return builder

    return register


def _ring(value, name):
    if isinstance(value, Ring):
        return value
    try:
        return parse_ring(str(value))
    except SkewPBWError as error:
        raise BadParams("{}: {}".format(name, error))


def _int(value, name):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise BadParams("{} must be an integer, got {!r}".format(name, value))


def _element(R, value, name):
    if isinstance(value, RingElement):
        return R(value)
    try:
        return parse_element(R, str(value))
    except ParseError as error:
        raise BadParams("{}: {}".format(name, error))


def _json(value, name):
    if not isinstance(value, str):
        return value
    try:
        return json.loads(value)
    except ValueError:
        raise BadParams("{} must be JSON, got {!r}".format(name, value))


def _matrix(R, value, name):
    rows = _json(value, name)
    if not isinstance(rows, list) or not rows or any(not isinstance(r, list) or len(r) != len(rows)
                                                     for r in rows):
        raise BadParams("{} must be a square matrix".format(name))
    return [[_element(R, v, name) for v in row] for row in rows]


def _nonzero(a, name):
    if a.is_zero():
        raise BadParams("{} must be nonzero".format(name))
    return a


def _field_ring(K, name):
    if isinstance(K, Rationals) or (isinstance(K, ZMod) and sympy.isprime(K.n)):
        return K
    raise BadParams("{} must be Rationals or ZMod(p) with p prime, got {}".format(name, K))


def _swap(R):
    if not isinstance(R, ProductRing) or len(R.factors) != 2 or R.factors[0] != R.factors[1]:
        raise BadParams("swap needs a Product of two equal factors, got {}".format(R))
    return TableEndoMap.from_function(R, lambda a: R((a.value[1], a.value[0])))


def _sigma(R, value, name):
    if isinstance(value, EndoMap):
        return value
    if value == "identity":
        return IdentityMap(R)
    if value == "swap":
        return _swap(R)
    try:
        return sigma_from_document(R, value, name)
    except SkewPBWError as error:
        raise BadParams("{}: {}".format(name, error))


@_entry("habitual", [("R", "ring", "ZMod(6)", "coefficient ring"),
                     ("n", "int", 2, "number of variables")],
        {"derivation_type": True, "endomorphism_type": True, "quasi_commutative": True},
        "the polynomial ring R[x1..xn]")
def habitual(R, n):
    R, n = _ring(R, "R"), _int(n, "n")
    if n < 1:
        raise BadParams("n must be positive")
    return ExtensionSpec(R, [IdentityMap(R)] * n)


@_entry("weyl", [("K", "ring", "Rationals", "Rationals or ZMod(p)"),
                 ("n", "int", 1, "half the number of variables")],
        {"derivation_type": True, "quasi_commutative": False},
        "the Weyl algebra, x(n+i)*xi = xi*x(n+i) + 1")
def weyl(K, n):
    K, n = _field_ring(_ring(K, "K"), "K"), _int(n, "n")
    if n < 1:
        raise BadParams("n must be positive")
    tails = {(i, n + i): (K.one, [K.zero] * (2 * n)) for i in range(1, n + 1)}
    return ExtensionSpec(K, [IdentityMap(K)] * (2 * n), tails=tails)


@_entry("quantum_plane", [("K", "ring", "ZMod(5)", "coefficient ring"),
                          ("q", "element", "2", "nonzero scalar")],
        {"quasi_commutative": True}, "the quantum plane, x2*x1 = q*x1*x2")
def quantum_plane(K, q):
    K = _ring(K, "K")
    q = _nonzero(_element(K, q, "q"), "q")
    return ExtensionSpec(K, [IdentityMap(K)] * 2, c={(1, 2): q})


@_entry("quantum_space", [("R", "ring", "Rationals", "coefficient ring"),
                          ("q", "matrix", "[[1]]", "q-matrix with q_ii = 1 = q_ij*q_ji"),
                          ("sigma", "maps", None, "one endomorphism per variable (identity by default)")],
        {"quasi_commutative": True}, "skew quantum polynomials, xj*xi = q_ij*xi*xj and xi*r = sigma_i(r)*xi")
def quantum_space(R, q, sigma=None):
    R = _ring(R, "R")
    q = _matrix(R, q, "q")
    n = len(q)
    for i in range(n):
        if not q[i][i].is_one():
            raise BadParams("q_{0}{0} must be 1".format(i + 1))
        for j in range(i + 1, n):
            if not (q[i][j] * q[j][i]).is_one():
                raise BadParams("q_{0}{1}*q_{1}{0} must be 1".format(i + 1, j + 1))
    if sigma is None:
        sigma = ["identity"] * n
    sigma = _json(sigma, "sigma")
    if not isinstance(sigma, list) or len(sigma) != n:
        raise BadParams("sigma must list {} endomorphisms".format(n))
    maps = [_sigma(R, s, "sigma[{}]".format(k)) for k, s in enumerate(sigma)]
    c = {(i + 1, j + 1): q[i][j] for i in range(n) for j in range(i + 1, n)}
    return ExtensionSpec(R, maps, c=c)


@_entry("shift", [("K", "ring", "Rationals", "base field of K[t]"),
                  ("h", "element", "1", "shift step")],
        {"endomorphism_type": True, "automorphism_type": True}, "shift operators, x*t = (t - h)*x")
def shift(K, h):
    R = UniPoly(_field_ring(_ring(K, "K"), "K"))
    h = _element(R.base, h, "h")
    return ExtensionSpec(R, [PolyEndoMap(R, R.generator() - R.constant(h))], names=["x"])


@_entry("differential", [("K", "ring", "Rationals", "base field of K[t]")],
        {"derivation_type": True}, "differential operators, x*t = t*x + 1")
def differential(K):
    R = UniPoly(_field_ring(_ring(K, "K"), "K"))
    sigma = IdentityMap(R)
    return ExtensionSpec(R, [sigma], [PolyDerivation(R, sigma, R.one)], names=["x"])


@_entry("difference", [("K", "ring", "Rationals", "base field of K[t]")],
        {"derivation_type": False, "endomorphism_type": False},
        "difference operators, x*t = (t + 1)*x + 1")
def difference(K):
    R = UniPoly(_field_ring(_ring(K, "K"), "K"))
    sigma = PolyEndoMap(R, R.generator() + R.one)
    return ExtensionSpec(R, [sigma], [PolyDerivation(R, sigma, R.one)], names=["x"])


@_entry("multiplicative_weyl", [("K", "ring", "Rationals", "coefficient ring"),
                                ("lam", "matrix", "[[1,1],[2,1]]", "lambda matrix; xj*xi = lam_ji*xi*xj")],
        {"quasi_commutative": True}, "the multiplicative analogue of the Weyl algebra")
def multiplicative_weyl(K, lam):
    K = _ring(K, "K")
    lam = _matrix(K, lam, "lam")
    n = len(lam)
    c = {}
    for i in range(n):
        for j in range(i + 1, n):
            c[(i + 1, j + 1)] = _nonzero(lam[j][i], "lam_{}{}".format(j + 1, i + 1))
    return ExtensionSpec(K, [IdentityMap(K)] * n, c=c)


@_entry("additive_weyl", [("K", "ring", "Rationals", "coefficient ring"),
                          ("q", "list", "[2]", "nonzero scalars q_i")],
        {"derivation_type": True, "quasi_commutative": False},
        "the additive analogue of the Weyl algebra, x(n+i)*xi = q_i*xi*x(n+i) + 1")
def additive_weyl(K, q):
    K = _ring(K, "K")
    q = _json(q, "q")
    if not isinstance(q, list) or not q:
        raise BadParams("q must be a nonempty list")
    q = [_nonzero(_element(K, v, "q"), "q_{}".format(k + 1)) for k, v in enumerate(q)]
    n = len(q)
    c = {(i + 1, n + i + 1): q[i] for i in range(n)}
    tails = {(i + 1, n + i + 1): (K.one, [K.zero] * (2 * n)) for i in range(n)}
    return ExtensionSpec(K, [IdentityMap(K)] * (2 * n), c=c, tails=tails)


def list_catalog():
    """The catalog entries in registration order."""
    return list(_catalog.values())


def build_catalog(name, params=None, debug=False):
    """Build the catalog extension `name`.

    :param params: Mapping of parameter names to values; strings are parsed the way
                   the command line passes them (ring descriptors, element literals, JSON).
    :raises: UnknownEntry for an unknown name; BadParams for invalid parameters or a
             construction that fails its consistency check or declared flags.
    """
    try:
        entry = _catalog[name]
    except KeyError:
        raise UnknownEntry(name)
    params = dict(params or {})
    known = {p.name for p in entry.params}
    unknown = sorted(set(params) - known)
    if unknown:
        raise BadParams("{} takes no parameter {}".format(name, ", ".join(unknown)))
    args = {p.name: params.get(p.name, p.default) for p in entry.params}
    try:
        E = entry.builder(**args)
    except BadParams:
        raise
    except SkewPBWError as error:
        raise BadParams("{}: {}".format(name, error))

    report = check_pbw_consistency(E, debug=debug)
    if not report.ok:
        raise BadParams("{} with {} is not consistent: {} overlap failures".format(
            name, args, len(report.overlap_failures)))
    flags = classify_extension(E)._asdict()
    for flag, value in entry.expected.items():
        if flags[flag] != value:
            raise BadParams("{} with {} has {}={}".format(name, args, flag, flags[flag]))
    if debug:
        logger.debug("Built %s: %s", name, E)
    return E
