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

from skewpbw.catalog import build_catalog, list_catalog
from skewpbw.error import (BadCoefficientForRing, ExpressionSyntaxError, InvalidRing, ParseError,
                           UnknownVariable)
from skewpbw.parser import format_polynomial, parse_element, parse_expression, parse_ring, split_top_level
from skewpbw.ring import ProductRing, QuotientPoly, QuotientRing, Rationals, UniPoly, ZMod
from testfunc import setup_logging


def setup_module(_):
    setup_logging()


def test_normal_form():
    W = build_catalog("weyl")
    assert str(parse_expression("x2*x1^2", W)) == "x1^2*x2 + 2*x1"
    assert parse_expression("x2*x1 - x1*x2", W) == W.one()

    Q = build_catalog("quantum_plane")
    assert str(parse_expression("(x1+x2)^2", Q)) == "x1^2 + 3*x1*x2 + x2^2"
    assert str(parse_expression("-x1 + 7", Q)) == "4*x1 + 2"


def test_coefficients():
    D = build_catalog("differential")
    assert str(parse_expression("x*t", D)) == "t*x + 1"
    assert str(parse_expression("(t^2 + 1)*x", D)) == "(t^2 + 1)*x"
    W = build_catalog("weyl")
    assert str(parse_expression("-1/2*x1 + 1", W)) == "-1/2*x1 + 1"


@pytest.mark.parametrize("src, error, line, column", [
    ("x1 +", ExpressionSyntaxError, 1, 5),
    ("x1 +\n  $", ExpressionSyntaxError, 2, 3),
    ("(x1", ExpressionSyntaxError, 1, 4),
    ("x1^x2", ExpressionSyntaxError, 1, 4),
    ("x1 x2", ExpressionSyntaxError, 1, 4),
    ("y", UnknownVariable, 1, 1),
    ("x1*\n y", UnknownVariable, 2, 2),
    ("t", BadCoefficientForRing, 1, 1),
    ("[1,2]*x1", BadCoefficientForRing, 1, 1),
])
def test_weyl_errors(src, error, line, column):
    try:
        parse_expression(src, build_catalog("weyl"))
    except error as e:
        assert isinstance(e, ParseError)
        assert (e.line, e.column) == (line, column)
        assert str(e).startswith("{}:{}: ".format(line, column))
    else:
        assert False


def test_fraction_needs_rationals():
    try:
        parse_expression("1/2*x1", build_catalog("quantum_plane"))
    except BadCoefficientForRing as error:
        assert error.column == 1
    else:
        assert False


def test_parse_element():
    Q = QuotientPoly(2, [0, 0, 1])
    assert str(parse_element(Q, "t^2 + t")) == "t"
    assert parse_element(ZMod(6), "4 + 5") == ZMod(6)(3)
    P = ProductRing([3, 3])
    assert parse_element(P, "[1,2]*[2,2]") == P((2, 1))
    assert parse_element(P, "[-1,0]") == P((2, 0))
    K = Rationals()
    assert parse_element(K, "-1/2 + 1") == K(1) - parse_element(K, "1/2")
    U = UniPoly(K)
    t = U.generator()
    assert parse_element(U, "(t + 1)^2") == t * t + 2 * t + 1


@pytest.mark.parametrize("ring", [
    ZMod(6),
    ProductRing([3, 3]),
    QuotientPoly(2, [0, 0, 1]),
    QuotientPoly(3, [1, 0, 1]),
    Rationals(),
    UniPoly(ZMod(7)),
    UniPoly(Rationals()),
    QuotientRing(ZMod(6), [ZMod(6)(3)]),
])
def test_ring_descriptors(ring):
    assert parse_ring(str(ring)) == ring


def test_ring_spellings():
    assert parse_ring("QuotientPoly(3,[1,0,1])") == QuotientPoly(3, [1, 0, 1])
    assert parse_ring(" ZMod( 6 ) ") == ZMod(6)
    assert str(parse_ring("Quotient(ZMod(6),(3))")) == "Quotient(ZMod(6),(3))"


@pytest.mark.parametrize("text", ["Foo(3)", "ZMod(x)", "ZMod", "ZMod(6", "UniPoly(Bar)", ""])
def test_invalid_rings(text):
    try:
        parse_ring(text)
    except InvalidRing:
        pass
    else:
        assert False


def test_split_top_level():
    assert split_top_level("ZMod(6),(3)") == ["ZMod(6)", "(3)"]
    assert split_top_level("[1,2], t^2 ,3") == ["[1,2]", "t^2", "3"]
    assert split_top_level("") == []


@pytest.mark.parametrize("name", [entry.name for entry in list_catalog()])
def test_print_parse(name):
    E = build_catalog(name)
    rng = random.Random(3)
    for _ in range(500):
        f = E.random_polynomial(rng)
        assert parse_expression(str(f), E) == f
        assert format_polynomial(f) == str(f)


__author__ = 'skewpbw authors'
__date__ = 'October 18 2026'
__version__ = '1.0'
__docformat__ = "restructuredtext en"
