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

from skewpbw.catalog import build_catalog
from skewpbw.classify import (Conclusion, ExtendedIdeal, Theorem, annihilator_formula_check,
                              classify_extended_ideal, coefficient_ideal, contract_check,
                              exponents_up_to, extended_membership, find_separator,
                              prime_criterion_search, primality_probe, quotient_extension)
from skewpbw.error import (HypothesisFailed, ImproperIdeal, NotDerivationType, NotInvariant,
                           ZeroInput)
from skewpbw.extension import ExtensionSpec, check_pbw_consistency
from skewpbw.ideal import FiniteIdeal, PrincipalIdeal, enumerate_ideals, ideal_closure
from skewpbw.maps import validate_endomorphism
from skewpbw.ring import ProductRing, QuotientPoly, ZMod
from testfunc import SMALL_RINGS, dual_numbers_extension, map_pool, setup_logging, swap_space


def setup_module(_):
    setup_logging()


def _habitual(ring, n=2):
    return build_catalog("habitual", {"R": ring, "n": n})


def test_exponents_up_to():
    assert exponents_up_to(2, 1) == [(0, 0), (0, 1), (1, 0)]
    assert len(exponents_up_to(3, 3)) == 20


@pytest.mark.parametrize("debug", [False, True])
def test_not_prime_habitual(debug):
    E = _habitual("ZMod(6)")
    verdict = classify_extended_ideal(E, FiniteIdeal.zero(E.ring), debug=debug)
    assert verdict.theorem == Theorem.DERIVATION_TYPE
    assert verdict.conclusion == Conclusion.NOT_PRIME_IN_A
    assert [str(K) for K in verdict.witness] == ["(2)", "(3)"]
    assert [str(K) for K in verdict.lifted_witness()] == ["(2)A", "(3)A"]
    assert [h.name for h in verdict.hypothesis_trail] == ["derivation_type", "delta_invariant", "delta_prime"]
    assert [h.passed for h in verdict.hypothesis_trail] == [True, True, False]
    assert all(h.evidence for h in verdict.hypothesis_trail)
    text = str(verdict)
    assert "conclusion: NotPrimeInA" in text
    assert "witness: (2), (3)" in text


def test_prime_derivation_type():
    E = dual_numbers_extension()
    verdict = classify_extended_ideal(E, FiniteIdeal.zero(E.ring))
    assert verdict.theorem == Theorem.DERIVATION_TYPE
    assert verdict.conclusion == Conclusion.PRIME_IN_A
    assert verdict.witness is None


def test_prime_automorphism_type():
    E = swap_space()
    verdict = classify_extended_ideal(E, FiniteIdeal.zero(E.ring))
    assert verdict.theorem == Theorem.AUTOMORPHISM_TYPE
    assert verdict.conclusion == Conclusion.PRIME_IN_A
    names = [(h.theorem, h.name, h.passed) for h in verdict.hypothesis_trail]
    assert names[0] == (Theorem.DERIVATION_TYPE, "derivation_type", False)
    assert names[-1] == (Theorem.AUTOMORPHISM_TYPE, "sigma_prime", True)
    assert len(names) == 7


def test_inconclusive():
    E = dual_numbers_extension()
    tee = ideal_closure(E.ring, [E.ring.generator()])
    verdict = classify_extended_ideal(E, tee)
    assert verdict.theorem is None
    assert verdict.conclusion == Conclusion.INCONCLUSIVE
    failed = [h.name for h in verdict.hypothesis_trail if not h.passed]
    assert "delta_invariant" in failed
    assert "semiprime_ring" in failed

    D = build_catalog("differential")
    R = D.ring
    verdict = classify_extended_ideal(D, PrincipalIdeal(R, R.generator()))
    assert verdict.conclusion == Conclusion.INCONCLUSIVE
    assert not verdict.hypothesis_trail[0].passed


def test_forced_route():
    E = _habitual("ZMod(6)")
    verdict = classify_extended_ideal(E, FiniteIdeal.zero(E.ring), route="MixedType")
    assert verdict.theorem == Theorem.MIXED_TYPE
    assert verdict.conclusion == Conclusion.NOT_PRIME_IN_A
    assert {h.theorem for h in verdict.hypothesis_trail} == {Theorem.MIXED_TYPE}

    verdict = classify_extended_ideal(swap_space(), FiniteIdeal.zero(swap_space().ring),
                                      route=Theorem.DERIVATION_TYPE)
    assert verdict.conclusion == Conclusion.INCONCLUSIVE


def test_verdict_document():
    E = _habitual("ZMod(12)", 1)
    verdict = classify_extended_ideal(E, ideal_closure(E.ring, [2]))
    doc = verdict.as_dict()
    assert doc["schema_version"] == 1
    assert doc["ideal"] == "(2)"
    assert doc["conclusion"] == "PrimeInA"
    assert doc["theorem"] == "DerivationType"
    assert doc["witness"] is None


def test_improper_ideal():
    E = _habitual("ZMod(6)")
    try:
        classify_extended_ideal(E, FiniteIdeal.whole(E.ring))
    except ImproperIdeal:
        pass
    else:
        assert False


@pytest.mark.parametrize("ring", ["ZMod(12)", "Product(3,3)", "QuotientPoly(2,t^2)"])
def test_contraction(ring):
    E = _habitual(ring, 1)
    for I in enumerate_ideals(E.ring):
        assert contract_check(E, I)
        IA = ExtendedIdeal(E, I)
        f = E.monomial((1, ), I.least_generators()[0]) if not I.is_zero() else E.zero()
        assert f in IA


def test_extended_membership():
    E = _habitual("ZMod(6)")
    I = ideal_closure(E.ring, [2])
    assert extended_membership(E, I, E.monomial((1, 2), E.ring(4)))
    assert not extended_membership(E, I, E.monomial((1, 2), E.ring(4)) + E.one())


def test_quotient_extension():
    E = _habitual("ZMod(6)")
    Q = quotient_extension(E, ideal_closure(E.ring, [3]))
    assert str(Q.ring) == "Quotient(ZMod(6),(3))"
    assert Q.n == 2
    assert check_pbw_consistency(Q).ok
    assert quotient_extension(E, FiniteIdeal.zero(E.ring)) is E

    P = swap_space()
    try:
        quotient_extension(P, ideal_closure(P.ring, [P.ring((1, 0))]))
    except NotInvariant:
        pass
    else:
        assert False


def test_coefficient_ideal():
    E = _habitual("ZMod(6)", 1)
    R = E.ring
    report = coefficient_ideal(E, [E.monomial((1, ), R(2))], degree_bound=2)
    assert str(report.ideal) == "(2)"
    assert report.stable
    assert report.delta_invariant

    try:
        coefficient_ideal(swap_space(), [swap_space().one()])
    except NotDerivationType:
        pass
    else:
        assert False


@pytest.mark.parametrize("debug", [False, True])
def test_annihilator_formula(debug):
    E = _habitual("ZMod(4)", 1)
    f = E.monomial((1, ), E.ring(2))
    report = annihilator_formula_check(E, f, degree_bound=3, debug=debug)
    assert report.holds
    assert report.exhaustive
    assert report.checked == 16 + 4**4
    assert report.mismatches == []


def test_annihilator_hypothesis():
    E = swap_space()
    f = E.monomial((1, ), E.ring((1, 0)))
    try:
        annihilator_formula_check(E, f)
    except HypothesisFailed as error:
        assert error.hypothesis == "sigma_fixes_annihilator"
    else:
        assert False


def test_annihilator_minimality():
    E = dual_numbers_extension()
    f = E.monomial((1, ), E.ring.generator()) + E.one()
    try:
        annihilator_formula_check(E, f)
    except HypothesisFailed as error:
        assert error.hypothesis == "minimality"
    else:
        assert False


def _derivation_type_instance(seed):
    """A one-variable derivation-type extension with an f passing the annihilator hypotheses."""
    rng = random.Random(seed)
    rings = [ZMod(4), ZMod(6), ProductRing([3, 3]), QuotientPoly(2, [0, 0, 1])]
    while True:
        R = rng.choice(rings)
        sigma, delta = rng.choice([(s, d) for s, d in map_pool(R) if s.is_identity()])
        E = ExtensionSpec(R, [sigma], [delta], names=["x"])
        f = E.random_polynomial(rng, max_degree=2, max_terms=3)
        if f.is_zero():
            continue
        try:
            return E, f, annihilator_formula_check(E, f, degree_bound=3)
        except HypothesisFailed:
            continue


@pytest.mark.parametrize("seed", range(10))
def test_annihilator_formula_random(seed):
    E, f, report = _derivation_type_instance(seed)
    assert report.exhaustive
    assert report.checked == 4 * E.ring.cardinality + E.ring.cardinality**4
    assert report.holds
    assert report.mismatches == []


def test_prime_criterion_search():
    E = _habitual("ZMod(6)")
    R = E.ring
    assert prime_criterion_search(E, R(2), R(3)) is None
    assert prime_criterion_search(E, R(2), R(2)) == (0, 0)
    try:
        prime_criterion_search(E, R(0), R(2))
    except ZeroInput as error:
        assert error.which == "a"
    else:
        assert False


def test_find_separator():
    E = _habitual("ZMod(6)", 1)
    R = E.ring
    assert find_separator(E, E.monomial((1, ), R(2)), E.constant(R(3))) is None
    assert find_separator(E, E.variable(1), E.one()) == E.one()
    I = ideal_closure(R, [2])
    h = find_separator(E, E.variable(1), E.one(), ideal=I)
    assert h == E.one()


_PRIME_SPECS = {
    "dual_numbers": dual_numbers_extension,
    "swap_space": swap_space,
    "quantum_plane": lambda: build_catalog("quantum_plane", {"K": "ZMod(5)", "q": "2"}),
}


@pytest.mark.parametrize("name", sorted(_PRIME_SPECS))
def test_separators_on_prime_verdicts(name):
    E = _PRIME_SPECS[name]()
    verdict = classify_extended_ideal(E, FiniteIdeal.zero(E.ring))
    assert verdict.conclusion == Conclusion.PRIME_IN_A
    report = primality_probe(E, degree_bound=3, samples=200, verdict=verdict)
    assert report.checked == 200
    assert report.unseparated == []
    assert not report.flagged


def test_separators_on_zero_divisors():
    H = _habitual("ZMod(6)", 1)
    verdict = classify_extended_ideal(H, FiniteIdeal.zero(H.ring))
    assert verdict.conclusion == Conclusion.NOT_PRIME_IN_A
    report = primality_probe(H, degree_bound=2, samples=30, verdict=verdict)
    assert report.checked == 30
    assert not report.flagged


_SOUNDNESS_CASES = {
    "habitual_z6": (lambda: _habitual("ZMod(6)"), []),
    "habitual_z12_2": (lambda: _habitual("ZMod(12)", 1), [2]),
    "habitual_z12_6": (lambda: _habitual("ZMod(12)", 1), [6]),
    "habitual_product": (lambda: _habitual("Product(3,3)", 1), []),
    "dual_numbers": (dual_numbers_extension, []),
    "swap_space": (swap_space, []),
}


@pytest.mark.parametrize("name", sorted(_SOUNDNESS_CASES))
def test_verdict_soundness(name):
    build, generators = _SOUNDNESS_CASES[name]
    E = build()
    I = ideal_closure(E.ring, [E.ring(g) for g in generators])
    verdict = classify_extended_ideal(E, I)
    if verdict.conclusion == Conclusion.PRIME_IN_A:
        report = primality_probe(E, degree_bound=3, samples=50, ideal=I, verdict=verdict)
        assert report.unseparated == []
    else:
        assert verdict.conclusion == Conclusion.NOT_PRIME_IN_A
        K, L = verdict.witness
        assert not K.issubset(I)
        assert not L.issubset(I)
        exps = exponents_up_to(E.n, 2)
        left = [E.monomial(a, k) for a in exps for k in K.elements if not k.is_zero()]
        right = [E.monomial(b, l) for b in exps for l in L.elements if not l.is_zero()]
        for f in left:
            for g in right:
                assert extended_membership(E, I, E.multiply(f, g))


@pytest.mark.parametrize("ring", SMALL_RINGS, ids=str)
def test_forced_routes_agree(ring):
    for sigma, delta in map_pool(ring):
        if not validate_endomorphism(ring, sigma).injective:
            continue
        E = ExtensionSpec(ring, [sigma], [delta], names=["x"])
        for I in enumerate_ideals(ring):
            if I.is_whole():
                continue
            automatic = classify_extended_ideal(E, I).conclusion
            for theorem in Theorem:
                forced = classify_extended_ideal(E, I, route=theorem).conclusion
                if Conclusion.INCONCLUSIVE not in (automatic, forced):
                    assert forced == automatic


__author__ = 'skewpbw authors'
__date__ = 'October 18 2026'
__version__ = '1.0'
__docformat__ = "restructuredtext en"
