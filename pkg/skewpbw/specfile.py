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
"""Reading and writing extension spec files (``.spbw``).

A spec file is a UTF-8 JSON document::

    {
      "schema_version": 1,
      "ring": {"kind": "QuotientPoly", "n": 2, "poly": [0, 0, 1]},
      "variables": ["x"],
      "sigma": ["identity"],
      "delta": [["0", "0", "1", "1"]],
      "relations": {}
    }

``ring`` is either a descriptor object or a descriptor string such as
``"ZMod(6)"``. Each ``sigma`` entry is ``"identity"``, a table of element
literals in enumeration order, or the image of ``t`` for ``UniPoly`` rings;
``delta`` entries are ``"zero"``, a table, or the image of ``t``. Relations
are keyed ``"j,i"`` with ``j > i`` and hold ``{"c": literal, "tail": expression}``.
"""
from __future__ import absolute_import, division, unicode_literals, print_function, nested_scopes
import io
import json
import logging
import re

from .error import ParseError, SkewPBWError, SpecFileError, UnsupportedOperation
from .extension import ExtensionSpec
from .maps import (IdentityMap, PolyDerivation, PolyEndoMap, TableDerivation, TableEndoMap,
                   ZeroDerivation)
from .parser import format_polynomial, parse_element, parse_expression, parse_ring
from .ring import ProductRing, QuotientPoly, QuotientRing, Rationals, UniPoly, ZMod

__date__ = 'October 18 2026'
__docformat__ = "restructuredtext en"

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")
_RELATION_KEY_RE = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*$")


def _field(doc, key, path, kind=None, default=None, required=True):
    if not isinstance(doc, dict):
        raise SpecFileError("expected an object", path=path)
    if key not in doc:
        if required:
            raise SpecFileError("missing field {!r}".format(key), path=path)
        return default
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise SpecFileError("field {!r} has the wrong type".format(key), path="{}.{}".format(path, key))
    return value


def _at(error, path):
    """The parse error `error` from a field's text, positioned at the field's JSON path."""
    return type(error)(error.message, error.line, error.column, path)


def _literal(value):
    return value if isinstance(value, str) else json.dumps(value)


def ring_from_document(doc, path="$.ring"):
    """Build a ring from its descriptor object or string.

    >>> print(ring_from_document({"kind": "Product", "moduli": [3, 3]}))
    Product(3,3)
    """
    if isinstance(doc, str):
        try:
            return parse_ring(doc)
        except SkewPBWError as error:
            raise SpecFileError(str(error), path=path)
    kind = _field(doc, "kind", path, str)
    try:
        if kind == "ZMod":
            return ZMod(_field(doc, "n", path, int))
        if kind == "Product":
            return ProductRing(_field(doc, "moduli", path, list))
        if kind == "QuotientPoly":
            poly = _field(doc, "poly", path, (list, str))
            if isinstance(poly, str):
                return parse_ring("QuotientPoly({},{})".format(_field(doc, "n", path, int), poly))
            return QuotientPoly(_field(doc, "n", path, int), poly)
        if kind == "Rationals":
            return Rationals()
        if kind == "UniPoly":
            return UniPoly(ring_from_document(_field(doc, "base", path), path + ".base"))
        if kind == "Quotient":
            base = ring_from_document(_field(doc, "base", path), path + ".base")
            gens = _field(doc, "ideal", path, list)
            return QuotientRing(base, [_element(base, g, "{}.ideal[{}]".format(path, k))
                                       for k, g in enumerate(gens)])
    except SpecFileError:
        raise
    except (SkewPBWError, TypeError, ValueError) as error:
        raise SpecFileError(str(error), path=path)
    raise SpecFileError("unknown ring kind {!r}".format(kind), path=path + ".kind")


def ring_document(R):
    """The descriptor object of `R`, as written to spec files."""
    if isinstance(R, ZMod):
        return {"kind": "ZMod", "n": R.n}
    if isinstance(R, ProductRing):
        return {"kind": "Product", "moduli": list(R.factors)}
    if isinstance(R, QuotientPoly):
        return {"kind": "QuotientPoly", "n": R.n, "poly": list(R.poly)}
    if isinstance(R, Rationals):
        return {"kind": "Rationals"}
    if isinstance(R, UniPoly):
        return {"kind": "UniPoly", "base": ring_document(R.base)}
    if isinstance(R, QuotientRing):
        return {"kind": "Quotient", "base": ring_document(R.base),
                "ideal": [str(g) for g in R.generators]}
    raise UnsupportedOperation("{} has no spec file form".format(R))


def _element(R, value, path):
    try:
        return parse_element(R, _literal(value))
    except ParseError as error:
        raise _at(error, path)


def sigma_from_document(R, entry, path):
    """Decode a sigma entry: ``"identity"``, a table, or the image of t."""
    if entry == "identity":
        return IdentityMap(R)
    if isinstance(entry, list):
        return TableEndoMap(R, [_element(R, v, "{}[{}]".format(path, k)) for k, v in enumerate(entry)])
    if isinstance(entry, str) and isinstance(R, UniPoly):
        return PolyEndoMap(R, _element(R, entry, path))
    raise SpecFileError("expected \"identity\", a table or a t-image for {}".format(R), path=path)


def delta_from_document(R, sigma, entry, path):
    """Decode a delta entry: ``"zero"``, a table, or the image of t."""
    if entry == "zero":
        return ZeroDerivation(R, sigma)
    if isinstance(entry, list):
        return TableDerivation(R, sigma,
                               [_element(R, v, "{}[{}]".format(path, k)) for k, v in enumerate(entry)])
    if isinstance(entry, str) and isinstance(R, UniPoly):
        return PolyDerivation(R, sigma, _element(R, entry, path))
    raise SpecFileError("expected \"zero\", a table or a t-image for {}".format(R), path=path)


def sigma_document(m):
    R = m.ring
    if m.is_identity():
        return "identity"
    if isinstance(R, UniPoly):
        return str(m(R.generator()))
    if R.finite:
        return [str(b) for b in m.table()]
    raise UnsupportedOperation("{} has no spec file form on {}".format(m, R))


def delta_document(d):
    R = d.ring
    if d.is_zero():
        return "zero"
    if isinstance(R, UniPoly):
        return str(d(R.generator()))
    if R.finite:
        return [str(b) for b in d.table()]
    raise UnsupportedOperation("{} has no spec file form on {}".format(d, R))


def spec_from_document(doc, source=None):
    """Build an ``ExtensionSpec`` from a decoded spec document.

    :param source: The file name used in diagnostics.
    :raises: SpecFileError on schema violations, with the JSON path of the offending
             field; InvalidSpec if the data violate the extension invariants.
    """
    def where(path):
        return "{} {}".format(source, path) if source else path

    try:
        return _spec_from_document(doc)
    except ParseError as error:
        if source and error.path and not error.path.startswith(source):
            raise type(error)(error.message, error.line, error.column, where(error.path))
        raise


def _spec_from_document(doc):
    if not isinstance(doc, dict):
        raise SpecFileError("a spec document is a JSON object", path="$")
    version = _field(doc, "schema_version", "$", int, SCHEMA_VERSION, required=False)
    if version != SCHEMA_VERSION:
        raise SpecFileError("unsupported schema_version {}".format(version), path="$.schema_version")
    R = ring_from_document(_field(doc, "ring", "$"))

    names = _field(doc, "variables", "$", list)
    if not names:
        raise SpecFileError("at least one variable is required", path="$.variables")
    for k, name in enumerate(names):
        if not isinstance(name, str) or not _NAME_RE.match(name):
            raise SpecFileError("invalid variable name {!r}".format(name), path="$.variables[{}]".format(k))
        if name == "t" and R.has_generator:
            raise SpecFileError("'t' is reserved for the generator of {}".format(R),
                                path="$.variables[{}]".format(k))
    if len(set(names)) != len(names):
        raise SpecFileError("variable names must be distinct", path="$.variables")
    n = len(names)

    sigma_doc = _field(doc, "sigma", "$", list, ["identity"] * n, required=False)
    delta_doc = _field(doc, "delta", "$", list, ["zero"] * n, required=False)
    for key, entries in (("sigma", sigma_doc), ("delta", delta_doc)):
        if len(entries) != n:
            raise SpecFileError("expected {} entries, got {}".format(n, len(entries)), path="$." + key)
    sigma = [sigma_from_document(R, e, "$.sigma[{}]".format(k)) for k, e in enumerate(sigma_doc)]
    delta = [delta_from_document(R, s, e, "$.delta[{}]".format(k))
             for k, (s, e) in enumerate(zip(sigma, delta_doc))]

    # Tails are linear, so they parse the same in the relation-free extension.
    linear = ExtensionSpec(R, sigma, delta, names=names, validate=False)
    c, tails = {}, {}
    relations = _field(doc, "relations", "$", dict, {}, required=False)
    for key in sorted(relations):
        path = "$.relations[{!r}]".format(key)
        m = _RELATION_KEY_RE.match(key)
        if not m:
            raise SpecFileError("relation keys are \"j,i\" with j > i", path=path)
        j, i = int(m.group(1)), int(m.group(2))
        if not 1 <= i < j <= n:
            raise SpecFileError("relation indices must satisfy 1 <= i < j <= {}".format(n), path=path)
        entry = relations[key]
        if not isinstance(entry, dict):
            raise SpecFileError("a relation is an object with \"c\" and \"tail\"", path=path)
        if "c" in entry:
            c[(i, j)] = _element(R, _field(entry, "c", path), path + ".c")
        if "tail" in entry:
            text = _literal(_field(entry, "tail", path))
            try:
                tail = parse_expression(text, linear)
            except ParseError as error:
                raise _at(error, path + ".tail")
            if tail.degree is not None and tail.degree > 1:
                raise SpecFileError("tails have degree at most 1", path=path + ".tail")
            tails[(i, j)] = tail

    return ExtensionSpec(R, sigma, delta, c=c, tails=tails, names=names)


def loads_spec(text, source=None):
    """Parse spec file text; JSON syntax errors are reported at line:column."""
    try:
        doc = json.loads(text)
    except ValueError as error:
        raise SpecFileError(getattr(error, "msg", str(error)), getattr(error, "lineno", None),
                            getattr(error, "colno", None), source)
    return spec_from_document(doc, source)


def load_spec(path):
    """Read the spec file at `path`.

    :raises: SpecFileError if the file is unreadable, not JSON, or violates the schema.
    """
    try:
        with io.open(path, encoding="utf-8") as f:
            text = f.read()
    except (IOError, OSError) as error:
        raise SpecFileError("cannot read spec file: {}".format(error), path=path)
    logger.debug("Loaded %d bytes of spec from %s", len(text), path)
    return loads_spec(text, path)


def dump_spec(E):
    """The spec document of `E` as a JSON-ready dict.

    Relations equal to plain commutation (c = 1, no tail) are omitted.
    """
    relations = {}
    for (i, j), cij in sorted(E.relation_constants().items()):
        tail = E.tail_polynomial(i, j)
        entry = {}
        if not cij.is_one():
            entry["c"] = str(cij)
        if not tail.is_zero():
            entry["tail"] = format_polynomial(tail, E.names)
        if entry:
            relations["{},{}".format(j, i)] = entry
    return {
        "schema_version": SCHEMA_VERSION,
        "ring": ring_document(E.ring),
        "variables": list(E.names),
        "sigma": [sigma_document(s) for s in E.sigma],
        "delta": [delta_document(d) for d in E.delta],
        "relations": relations,
    }


def emit_spec(E):
    """The spec file text of `E`."""
    return json.dumps(dump_spec(E), indent=2, ensure_ascii=False) + "\n"


def write_spec(E, path):
    with io.open(path, "w", encoding="utf-8") as f:
        f.write(emit_spec(E))
    logger.info("Wrote %s to %s", E, path)
