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
"""Exceptions raised by the skewpbw package.

Every exception derives from :class:`SkewPBWError`. Conditions that are
*data* (overlap failures, primality witnesses) are returned in reports and
never raised.
"""
from __future__ import absolute_import, division, unicode_literals, print_function, nested_scopes

__docformat__ = "restructuredtext en"


class SkewPBWError(Exception):
    """Base class of all skewpbw errors."""


class MismatchedRing(SkewPBWError):
    def __init__(self, left, right):
        super(MismatchedRing, self).__init__("Operands belong to different rings: {} and {}".format(
            left, right))
        self.left = left
        self.right = right


class MismatchedArity(SkewPBWError):
    def __init__(self, left, right):
        super(MismatchedArity, self).__init__("Exponent vectors of different lengths: {} and {}".format(
            left, right))
        self.left = left
        self.right = right


class InvalidRing(SkewPBWError):
    """A ring descriptor is malformed or too large."""


class IncompleteMap(SkewPBWError):
    def __init__(self, ring, size):
        super(IncompleteMap, self).__init__("Map table has {} entries but {} has {} elements".format(
            size, ring, ring.cardinality))
        self.ring = ring
        self.size = size


class InvalidSpec(SkewPBWError):
    """The data of an extension violates one of its defining invariants."""


class NotInRing(InvalidSpec):
    """A value has no exact representative in the ring."""

    def __init__(self, ring, value):
        super(NotInRing, self).__init__("{!r} is not an element of {}".format(value, ring))
        self.ring = ring
        self.value = value


class InconsistentSpec(SkewPBWError):
    """A derived extension failed its consistency certification."""

    def __init__(self, message, report=None):
        super(InconsistentSpec, self).__init__(message)
        self.report = report


class ZeroPolynomial(SkewPBWError):
    def __init__(self):
        super(ZeroPolynomial, self).__init__("The zero polynomial has no leading data")


class ZeroCoefficient(SkewPBWError):
    def __init__(self):
        super(ZeroCoefficient, self).__init__("Coefficient must be nonzero")


class ZeroInput(SkewPBWError):
    def __init__(self, which):
        super(ZeroInput, self).__init__("Input {} must be nonzero".format(which))
        self.which = which


class BadIndex(SkewPBWError):
    def __init__(self, index, nvars):
        super(BadIndex, self).__init__("Variable index {} out of range 1..{}".format(index, nvars))
        self.index = index
        self.nvars = nvars


class UnsupportedOperation(SkewPBWError):
    """The operation is not available for the given ring or extension."""


class NotEnumerable(UnsupportedOperation):
    def __init__(self, ring):
        super(NotEnumerable, self).__init__("{} is infinite and cannot be enumerated".format(ring))
        self.ring = ring


class NotQuasiCommutative(SkewPBWError):
    """The extension has nonzero derivations or nonzero tails."""


class NotDerivationType(SkewPBWError):
    """Some sigma_i of the extension is not the identity."""


class NotInner(SkewPBWError):
    def __init__(self, index, witness=None):
        super(NotInner, self).__init__("delta_{} is not the inner derivation of {}".format(
            index + 1, witness))
        self.index = index
        self.witness = witness


class IdealError(SkewPBWError):
    """Base class for preconditions on ideals."""


class ImproperIdeal(IdealError):
    def __init__(self, ideal):
        super(ImproperIdeal, self).__init__("Ideal {} is not proper".format(ideal))
        self.ideal = ideal


class NotInvariant(IdealError):
    def __init__(self, ideal, kind="(Sigma,Delta)"):
        super(NotInvariant, self).__init__("Ideal {} is not {}-invariant".format(ideal, kind))
        self.ideal = ideal
        self.kind = kind


class NotSigmaInvariant(NotInvariant):
    def __init__(self, ideal):
        super(NotSigmaInvariant, self).__init__(ideal, "Sigma")


class NotStable(IdealError):
    def __init__(self, ideal):
        super(NotStable, self).__init__("sigma_i(I) != I for ideal {}".format(ideal))
        self.ideal = ideal


class HypothesisFailed(SkewPBWError):
    def __init__(self, hypothesis, detail=""):
        msg = "Hypothesis failed: {}".format(hypothesis)
        if detail:
            msg += ": " + detail
        super(HypothesisFailed, self).__init__(msg)
        self.hypothesis = hypothesis
        self.detail = detail


class CatalogError(SkewPBWError):
    """Base class for catalog construction errors."""


class UnknownEntry(CatalogError):
    def __init__(self, name):
        super(UnknownEntry, self).__init__("Unknown catalog entry: {}".format(name))
        self.name = name


class BadParams(CatalogError):
    """Catalog parameters are missing or violate the entry's constraints."""


class ParseError(SkewPBWError):
    """An input text could not be parsed; carries a source position."""

    def __init__(self, message, line=None, column=None, path=None):
        self.message = message
        self.line = line
        self.column = column
        self.path = path
        super(ParseError, self).__init__(self._render())

    @property
    def position(self):
        if self.line is not None:
            pos = "{}:{}".format(self.line, self.column)
            if self.path:
                pos = "{} {}".format(self.path, pos)
            return pos
        return self.path or "?"

    def _render(self):
        return "{}: {}".format(self.position, self.message)


class ExpressionSyntaxError(ParseError):
    pass


class UnknownVariable(ParseError):
    pass


class BadCoefficientForRing(ParseError):
    pass


class SpecFileError(ParseError):
    pass


__date__ = 'October 18 2026'
