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
from __future__ import absolute_import, division, unicode_literals, print_function, nested_scopes
import random

import pytest
import sympy

from skewpbw.catalog import build_catalog, list_catalog
from skewpbw.classify import exponents_up_to
from skewpbw.error import BadIndex, InvalidSpec, NotInner, NotQuasiCommutative, ZeroCoefficient
from skewpbw.extension import (ExtensionSpec, associated_graded, check_ore_round_trip,
                               check_pbw_consistency, check_substitution, classify_extension,
                               eliminate_inner_derivations, find_inner_element, is_domain_sample,
                               iterated_ore_presentation)
from skewpbw.maps import IdentityMap, TableEndoMap, inner_derivation
from skewpbw.poly import add_exponents
from skewpbw.ring import ProductRing, QuotientPoly, ZMod
from testfunc import (CATALOG_NAMES, DOMAIN_NAMES, dual_numbers, dual_numbers_extension,
                      setup_logging, swap_map, swap_space)


def setup_module(_):
    setup_logging()


def _sympy_coefficient(c):
    return sympy.Rational(c.value.numerator, c.value.denominator)


@pytest.mark.parametrize("k", range(1, 11))
def test_weyl_commutator(k):
    E = build_catalog("weyl", {"n": 1})
    K = E.ring
    x1, x2 = E.variable(1), E.variable(2)
    product = E.multiply(x2, E.power(x1, k))
    expected = E.polynomial({(k, 1): K.one, (k - 1, 0): K(k)})
    assert product == expected

    # x1 acts on K[t] as multiplication by t and x2 as d/dt
    t = sympy.Symbol("t")
    h = sum((j + 1) * t**j for j in range(13))
    left = sympy.diff(t**k * h, t)
    right = sum(_sympy_coefficient(c) * t**a * (sympy.diff(h, t, b) if b else h)
                for (a, b), c in product.terms.items())
    assert sympy.expand(left - right) == 0


def test_quantum_plane_powers():
    E = build_catalog("quantum_plane", {"K": "ZMod(5)", "q": "2"})
    K = E.ring
    for a in range(6):
        for b in range(6):
            product = E.multiply(E.monomial((0, a)), E.monomial((b, 0)))
            assert product == E.monomial((b, a), K(pow(2, a * b, 5)))
            assert E.c_alpha_beta((0, a), (b, 0)) == K(pow(2, a * b, 5))


def test_reorder_generator():
    Q = build_catalog("quantum_plane")
    assert Q.reorder_generator(2, (2, 0)) == Q.monomial((2, 1), Q.ring(4))
    assert Q.reorder_generator(1, (0, 3)) == Q.monomial((1, 3))

    W = build_catalog("weyl")
    assert W.reorder_generator(2, (1, 0)) == W.monomial((1, 1)) + W.one()
    try:
        W.reorder_generator(3, (1, 0))
    except BadIndex as error:
        assert error.index == 3
        assert error.nvars == 2
    else:
        assert False


def test_times_coefficient_on_right():
    S = build_catalog("shift")
    R = S.ring
    t = R.generator()
    assert S.times_coefficient_on_right((1, ), t) == S.monomial((1, ), t - 1)
    assert S.sigma_alpha((3, ), t) == t - 3

    D = build_catalog("differential")
    assert D.times_coefficient_on_right((2, ), t) == D.monomial((2, ), t) + D.monomial((1, ), R(2))
    try:
        D.times_coefficient_on_right((1, ), R.zero)
    except ZeroCoefficient:
        pass
    else:
        assert False

    P = swap_space()
    r = P.ring((1, 2))
    assert P.sigma_alpha((1, ), r) == P.ring((2, 1))
    assert P.sigma_alpha((2, ), r) == r
    assert P.times_coefficient_on_right((3, ), r) == P.monomial((3, ), P.ring((2, 1)))


@pytest.mark.parametrize("name", [entry.name for entry in list_catalog()])
def test_associativity(name):
    E = build_catalog(name)
    rng = random.Random(7)
    for _ in range(1000):
        f, g, h = (E.random_polynomial(rng) for _ in range(3))
        assert E.multiply(E.multiply(f, g), h) == E.multiply(f, E.multiply(g, h))
        assert E.multiply(f, g + h) == E.multiply(f, g) + E.multiply(f, h)
        assert E.multiply(E.one(), f) == f
        assert E.multiply(f, E.one()) == f


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_leading_coefficient_law(name):
    E = build_catalog(name)
    R = E.ring
    for alpha in exponents_up_to(E.n, 4):
        for r in R.sample_elements(count=10):
            if r.is_zero():
                continue
            p = E.times_coefficient_on_right(alpha, r)
            assert p.coefficient(alpha) == E.sigma_alpha(alpha, r)
            for exp in p.terms:
                assert exp == alpha or sum(exp) < sum(alpha)


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_filtration(name):
    E = build_catalog(name)
    rng = random.Random(11)
    for _ in range(100):
        f, g = E.random_polynomial(rng), E.random_polynomial(rng)
        fg = E.multiply(f, g)
        if name in DOMAIN_NAMES:
            assert fg.degree == f.degree + g.degree
        elif not fg.is_zero():
            assert fg.degree <= f.degree + g.degree


def test_quasi_commutative_single_terms():
    E = build_catalog("multiplicative_weyl", {"K": "ZMod(7)", "lam": "[[1,1,1],[3,1,1],[2,4,1]]"})
    for alpha in exponents_up_to(3, 2):
        for beta in exponents_up_to(3, 2):
            assert len(E.multiply(E.monomial(alpha), E.monomial(beta)).terms) == 1
        for r in E.ring.elements()[1:]:
            assert len(E.times_coefficient_on_right(alpha, r).terms) == 1


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_bijective_constants_are_units(name):
    E = build_catalog(name)
    assert classify_extension(E).bijective
    exps = exponents_up_to(E.n, 4)
    for alpha in exps:
        for beta in exps:
            assert E.c_alpha_beta(alpha, beta).is_unit()


@pytest.mark.parametrize("name", [
    "habitual", "weyl", "quantum_plane", "quantum_space", "differential", "multiplicative_weyl",
    "additive_weyl"
])
def test_derivation_type_constants(name):
    E = build_catalog(name)
    assert classify_extension(E).derivation_type
    exps = exponents_up_to(E.n, 2)
    samples = E.ring.sample_elements(count=5)
    for theta in exps:
        for gamma in exps:
            c = E.c_alpha_beta(theta, gamma)
            for r in samples:
                assert r * c == c * r
            for beta in exps:
                left = E.c_alpha_beta(gamma, beta) * E.c_alpha_beta(theta, add_exponents(gamma, beta))
                right = c * E.c_alpha_beta(add_exponents(theta, gamma), beta)
                assert left == right


@pytest.mark.parametrize("name", CATALOG_NAMES)
@pytest.mark.parametrize("debug", [False, True])
def test_consistency(name, debug):
    report = check_pbw_consistency(build_catalog(name), debug=debug)
    assert report.ok
    assert report.overlap_failures == []


@pytest.mark.parametrize("debug", [False, True])
def test_noncommuting_sigmas_fail(debug):
    R = ProductRing([3, 3, 3])
    s01 = TableEndoMap.from_function(R, lambda a: R((a.value[1], a.value[0], a.value[2])))
    s12 = TableEndoMap.from_function(R, lambda a: R((a.value[0], a.value[2], a.value[1])))
    E = ExtensionSpec(R, [s01, s12])
    assert not classify_extension(E).sigma_commutative
    report = check_pbw_consistency(E, debug=debug)
    assert report.sigma_ok and report.delta_ok
    assert not report.ok
    failure = report.overlap_failures[0]
    assert failure.kind == "coefficient"
    assert failure.indices == (1, 2)
    assert failure.left != failure.right


def test_invalid_specs():
    R = ZMod(5)
    try:
        ExtensionSpec(R, [IdentityMap(R)] * 2, c={(1, 2): R.zero})
    except InvalidSpec:
        pass
    else:
        assert False

    Q = QuotientPoly(2, [0, 0, 1])
    not_injective = TableEndoMap.from_function(Q, lambda a: Q(a.value[0]))
    try:
        ExtensionSpec(Q, [not_injective])
    except InvalidSpec:
        pass
    else:
        assert False

    try:
        ExtensionSpec(R, [IdentityMap(R)] * 2, c={(2, 1): R(2)})
    except InvalidSpec:
        pass
    else:
        assert False


def test_flags():
    flags = classify_extension(build_catalog("weyl"))
    assert flags.derivation_type
    assert not flags.quasi_commutative
    assert flags.bijective

    flags = classify_extension(swap_space())
    assert flags.quasi_commutative
    assert flags.automorphism_type
    assert flags.bijective
    assert not flags.derivation_type

    flags = classify_extension(build_catalog("habitual"))
    assert all(flags)

    flags = classify_extension(build_catalog("difference"))
    assert not flags.derivation_type
    assert not flags.endomorphism_type
    assert flags.bijective


def test_associated_graded():
    W = build_catalog("weyl")
    G = associated_graded(W)
    assert classify_extension(G).quasi_commutative
    assert G == build_catalog("habitual", {"R": "Rationals", "n": 2})
    x1, x2 = G.variable(1), G.variable(2)
    assert G.multiply(x2, x1) == G.multiply(x1, x2)

    D = associated_graded(build_catalog("differential"))
    assert D.delta[0].is_zero()
    assert D.sigma == build_catalog("differential").sigma

    AW = associated_graded(build_catalog("additive_weyl"))
    assert AW.relation_constants()[(1, 2)] == AW.ring(2)
    assert AW.tail_polynomial(1, 2).is_zero()


def test_ore_presentation():
    E = build_catalog("quantum_plane", {"K": "Rationals", "q": "3"})
    presentation = iterated_ore_presentation(E)
    assert presentation.steps[0].scalars == {}
    assert presentation.steps[1].scalars == {1: E.ring(3)}
    assert presentation.steps[1].sigma.is_identity()
    assert check_ore_round_trip(E, samples=100) == []
    assert check_ore_round_trip(swap_space(), samples=100) == []
    lam = build_catalog("multiplicative_weyl", {"K": "ZMod(7)", "lam": "[[1,1,1],[3,1,1],[2,4,1]]"})
    assert check_ore_round_trip(lam, samples=100) == []

    try:
        iterated_ore_presentation(build_catalog("weyl"))
    except NotQuasiCommutative:
        pass
    else:
        assert False


def test_find_inner_element():
    R = ProductRing([3, 3])
    swap = swap_map(R)
    d = inner_derivation(R, swap, R((1, 0)))
    assert find_inner_element(R, swap, d) == R((1, 0))
    assert find_inner_element(R, IdentityMap(R), inner_derivation(R, IdentityMap(R), R((1, 1)))).is_zero()

    Q, identity, dt = dual_numbers()
    assert find_inner_element(Q, identity, dt) is None


def test_eliminate_inner_derivations():
    R = ProductRing([3, 3])
    swap = swap_map(R)
    a = R((1, 0))
    E = ExtensionSpec(R, [swap], [inner_derivation(R, swap, a)])
    assert not classify_extension(E).endomorphism_type
    Z = eliminate_inner_derivations(E, [a])
    assert classify_extension(Z).endomorphism_type
    assert check_pbw_consistency(Z).ok
    assert check_substitution(E, Z, [a], samples=50) == []

    try:
        eliminate_inner_derivations(E, [R((0, 1))])
    except NotInner as error:
        assert error.index == 0
    else:
        assert False


def test_domain_sample():
    assert is_domain_sample(build_catalog("weyl"), samples=1000) == []
    E = build_catalog("habitual", {"R": "ZMod(6)", "n": 1})
    R = E.ring
    assert E.multiply(E.monomial((1, ), R(2)), E.constant(R(3))).is_zero()
    for f, g in is_domain_sample(E, samples=1000):
        assert E.multiply(f, g).is_zero()

    D = dual_numbers_extension()
    t = D.constant(D.ring.generator())
    x = D.variable(1)
    assert D.multiply(t, t).is_zero()
    assert D.multiply(x, t) == D.multiply(t, x) + D.one()


__author__ = 'skewpbw authors'
__date__ = 'October 18 2026'
__version__ = '1.0'
__docformat__ = "restructuredtext en"
