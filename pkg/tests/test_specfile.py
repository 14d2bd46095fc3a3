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
import json

import pytest

from skewpbw.catalog import build_catalog
from skewpbw.classify import quotient_extension
from skewpbw.error import ExpressionSyntaxError, InvalidSpec, SpecFileError
from skewpbw.ideal import ideal_closure
from skewpbw.specfile import (dump_spec, emit_spec, load_spec, loads_spec, ring_document,
                              ring_from_document, write_spec)
from testfunc import CATALOG_NAMES, dual_numbers_extension, setup_logging, swap_space

DUAL_NUMBERS = """{
  "schema_version": 1,
  "ring": {"kind": "QuotientPoly", "n": 2, "poly": [0, 0, 1]},
  "variables": ["x"],
  "sigma": ["identity"],
  "delta": [["0", "0", "1", "1"]],
  "relations": {}
}
"""


def setup_module(_):
    setup_logging()


def _document(**fields):
    doc = {"schema_version": 1, "ring": "ZMod(5)", "variables": ["x1", "x2"]}
    doc.update(fields)
    return doc


def _load(doc):
    return loads_spec(json.dumps(doc))


def _fails(doc, error=SpecFileError):
    try:
        _load(doc)
    except error as e:
        return e
    assert False, "{} was accepted".format(doc)


def test_dual_numbers():
    E = loads_spec(DUAL_NUMBERS)
    assert E == dual_numbers_extension()
    assert E.names == ("x", )


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_catalog_round_trip(name):
    E = build_catalog(name)
    assert loads_spec(emit_spec(E)) == E


def test_other_round_trips():
    for E in (swap_space(), dual_numbers_extension()):
        assert loads_spec(emit_spec(E)) == E
    H = build_catalog("habitual", {"R": "ZMod(6)"})
    Q = quotient_extension(H, ideal_closure(H.ring, [3]))
    doc = dump_spec(Q)
    assert doc["ring"] == {"kind": "Quotient", "base": {"kind": "ZMod", "n": 6}, "ideal": ["3"]}
    assert loads_spec(emit_spec(Q)) == Q


def test_dump():
    doc = dump_spec(build_catalog("weyl"))
    assert doc["relations"] == {"2,1": {"tail": "1"}}
    assert doc["sigma"] == ["identity", "identity"]
    assert doc["delta"] == ["zero", "zero"]
    doc = dump_spec(build_catalog("shift"))
    assert doc["sigma"] == ["t - 1"]
    assert doc["ring"] == {"kind": "UniPoly", "base": {"kind": "Rationals"}}


def test_relations():
    E = _load(_document(relations={"2,1": {"c": "2", "tail": "x1 + 3"}}))
    x1, x2 = E.variable(1), E.variable(2)
    assert E.multiply(x2, x1) == E.multiply(x1, x2).scale_left(E.ring(2)) + x1 + E.constant(E.ring(3))


@pytest.mark.parametrize("ring, expected", [
    ({"kind": "ZMod", "n": 6}, "ZMod(6)"),
    ({"kind": "Product", "moduli": [3, 3]}, "Product(3,3)"),
    ({"kind": "QuotientPoly", "n": 2, "poly": "t^2"}, "QuotientPoly(2,t^2)"),
    ({"kind": "UniPoly", "base": "ZMod(7)"}, "UniPoly(ZMod(7))"),
    ("Quotient(ZMod(6),(3))", "Quotient(ZMod(6),(3))"),
])
def test_ring_documents(ring, expected):
    R = ring_from_document(ring)
    assert str(R) == expected
    assert ring_from_document(ring_document(R)) == R


def test_json_error():
    try:
        loads_spec('{\n  "ring": ,\n}', source="bad.spbw")
    except SpecFileError as error:
        assert error.line == 2
        assert error.path == "bad.spbw"
    else:
        assert False


@pytest.mark.parametrize("doc, path", [
    ({"schema_version": 1, "ring": "ZMod(5)"}, "$"),
    (_document(schema_version=2), "$.schema_version"),
    (_document(ring={"kind": "Foo"}), "$.ring.kind"),
    (_document(ring="Foo(3)"), "$.ring"),
    (_document(variables=[]), "$.variables"),
    (_document(variables=["x1", "x1"]), "$.variables"),
    (_document(variables=["x 1", "x2"]), "$.variables[0]"),
    (_document(ring="QuotientPoly(2,t^2)", variables=["t"]), "$.variables[0]"),
    (_document(sigma=["identity"]), "$.sigma"),
    (_document(sigma=["identity", "t + 1"]), "$.sigma[1]"),
    (_document(relations={"1,2": {"c": "2"}}), "$.relations['1,2']"),
    (_document(relations={"2,1": "x1"}), "$.relations['2,1']"),
    (_document(relations={"2,1": {"tail": "x1^2"}}), "$.relations['2,1'].tail"),
    (_document(variables="x1"), "$.variables"),
])
def test_schema_errors(doc, path):
    error = _fails(doc)
    assert error.path == path


def test_tail_syntax_error():
    error = _fails(_document(relations={"2,1": {"tail": "x1 +"}}), ExpressionSyntaxError)
    assert error.path == "$.relations['2,1'].tail"
    assert (error.line, error.column) == (1, 5)
    assert str(error).startswith("$.relations['2,1'].tail 1:5: ")


def test_invalid_data():
    _fails(_document(relations={"2,1": {"c": "0"}}), InvalidSpec)
    _fails(_document(ring="Product(3,3)", variables=["x"], sigma=[["[0,0]"] * 9]), InvalidSpec)


def test_files(tmp_path):
    path = str(tmp_path / "weyl.spbw")
    E = build_catalog("weyl", {"n": 2})
    write_spec(E, path)
    assert load_spec(path) == E

    try:
        load_spec(str(tmp_path / "missing.spbw"))
    except SpecFileError as error:
        assert error.path.endswith("missing.spbw")
    else:
        assert False

    bad = tmp_path / "bad.spbw"
    bad.write_text('{"ring": "ZMod(5)"}')
    try:
        load_spec(str(bad))
    except SpecFileError as error:
        assert error.path == "{} $".format(bad)
    else:
        assert False


__author__ = 'skewpbw authors'
__date__ = 'October 18 2026'
__version__ = '1.0'
__docformat__ = "restructuredtext en"
