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
"""The expression language for elements of extensions and coefficient rings.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := '-'? factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := int | int '/' uint | 't' | '[' int (',' int)* ']' | varname | '(' expr ')'

Products keep their written order and are evaluated with the extension's
multiplication, so ``x2*x1`` is rewritten into normal form.

>>> from skewpbw.ring import ZMod
>>> print(parse_element(ZMod(6), "4 + 5"))
3
>>> parse_ring("QuotientPoly(2,t^2)")
QuotientPoly(2,t^2)
"""
from __future__ import absolute_import, division, unicode_literals, print_function, nested_scopes
import collections
import logging
import re
from fractions import Fraction

from .error import (BadCoefficientForRing, ExpressionSyntaxError, InvalidRing, SkewPBWError,
                    UnknownVariable)
from .ring import (ProductRing, QuotientPoly, QuotientRing, Rationals, UniPoly, ZMod, format_terms)

__date__ = 'October 18 2026'
__docformat__ = "restructuredtext en"

logger = logging.getLogger(__name__)

Token = collections.namedtuple("Token", ["kind", "text", "line", "column"])

Number = collections.namedtuple("Number", ["value", "token"])
Generator = collections.namedtuple("Generator", ["token"])
Tuple = collections.namedtuple("Tuple", ["values", "token"])
Variable = collections.namedtuple("Variable", ["name", "token"])
Negate = collections.namedtuple("Negate", ["operand"])
Sum = collections.namedtuple("Sum", ["terms"])
Product = collections.namedtuple("Product", ["factors"])
Power = collections.namedtuple("Power", ["base", "exponent"])

_TOKEN_RE = re.compile(r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                       r"|(?P<op>[-+*^/()\[\],])")


def tokenize(src):
    """Split `src` into tokens carrying 1-based line and column numbers.

    :raises: ExpressionSyntaxError on an unexpected character.
    """
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if not m:
            raise ExpressionSyntaxError("unexpected character {!r}".format(src[pos]), line,
                                        pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


class Parser(object):
    """Recursive descent parser producing the expression AST."""

    def __init__(self, src):
        self.tokens = tokenize(src)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def error(self, message, token=None):
        token = token or self.peek()
        return ExpressionSyntaxError(message, token.line, token.column)

    def expect(self, text):
        token = self.peek()
        if token.text != text or token.kind == "end":
            raise self.error("expected {!r}, found {}".format(text, _describe(token)))
        return self.advance()

    def parse(self):
        node = self.expr()
        if self.peek().kind != "end":
            raise self.error("unexpected {}".format(_describe(self.peek())))
        return node

    def expr(self):
        terms = [self.term()]
        while self.peek().text in ("+", "-") and self.peek().kind == "op":
            op = self.advance()
            term = self.term()
            terms.append(Negate(term) if op.text == "-" else term)
        return terms[0] if len(terms) == 1 else Sum(terms)

    def term(self):
        if self.peek().text == "-" and self.peek().kind == "op":
            self.advance()
            return Negate(self.term())
        factors = [self.factor()]
        while self.peek().text == "*" and self.peek().kind == "op":
            self.advance()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(factors)

    def factor(self):
        base = self.atom()
        if self.peek().text == "^":
            self.advance()
            token = self.peek()
            if token.kind != "int":
                raise self.error("exponent must be a nonnegative integer literal")
            self.advance()
            return Power(base, int(token.text))
        return base

    def atom(self):
        token = self.peek()
        if token.kind == "int":
            self.advance()
            if self.peek().text == "/":
                self.advance()
                den = self.peek()
                if den.kind != "int":
                    raise self.error("expected a denominator")
                self.advance()
                if int(den.text) == 0:
                    raise self.error("zero denominator", den)
                return Number(Fraction(int(token.text), int(den.text)), token)
            return Number(Fraction(int(token.text)), token)
        if token.kind == "name":
            self.advance()
            if token.text == "t":
                return Generator(token)
            return Variable(token.text, token)
        if token.text == "[":
            self.advance()
            values = [self._signed_int()]
            while self.peek().text == ",":
                self.advance()
                values.append(self._signed_int())
            self.expect("]")
            return Tuple(tuple(values), token)
        if token.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise self.error("unexpected {}".format(_describe(token)))

    def _signed_int(self):
        sign = 1
        if self.peek().text == "-":
            self.advance()
            sign = -1
        token = self.peek()
        if token.kind != "int":
            raise self.error("expected an integer")
        self.advance()
        return sign * int(token.text)


def _describe(token):
    return "end of input" if token.kind == "end" else repr(token.text)


class _RingBackend(object):
    """Evaluate expressions to elements of a coefficient ring."""

    def __init__(self, ring):
        self.ring = ring

    def number(self, value, token):
        return _ring_number(self.ring, value, token)

    def generator(self, token):
        if not self.ring.has_generator:
            raise BadCoefficientForRing("{} has no generator t".format(self.ring), token.line,
                                        token.column)
        return self.ring.generator()

    def tuple(self, values, token):
        return _ring_tuple(self.ring, values, token)

    def variable(self, name, token):
        raise UnknownVariable("unknown variable {!r}".format(name), token.line, token.column)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def one(self):
        return self.ring.one


class _ExtensionBackend(object):
    """Evaluate expressions to normal forms in an extension."""

    def __init__(self, E):
        self.E = E
        self.ring_backend = _RingBackend(E.ring)
        self.index = {name: i for i, name in enumerate(E.names)}

    def number(self, value, token):
        return self.E.constant(self.ring_backend.number(value, token))

    def generator(self, token):
        if "t" in self.index and not self.E.ring.has_generator:
            return self.variable("t", token)
        return self.E.constant(self.ring_backend.generator(token))

    def tuple(self, values, token):
        return self.E.constant(self.ring_backend.tuple(values, token))

    def variable(self, name, token):
        try:
            return self.E.variable(self.index[name] + 1)
        except KeyError:
            raise UnknownVariable("unknown variable {!r}".format(name), token.line, token.column)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return self.E.multiply(a, b)

    def one(self):
        return self.E.one()


def _ring_number(ring, value, token):
    if value.denominator == 1:
        return ring.from_int(value.numerator)
    base = ring.base if isinstance(ring, UniPoly) else ring
    if isinstance(base, Rationals):
        return ring(value)
    raise BadCoefficientForRing("fraction {} is not an element of {}".format(value, ring), token.line,
                                token.column)


def _ring_tuple(ring, values, token):
    base = ring.base if isinstance(ring, QuotientRing) else ring
    if not isinstance(base, ProductRing):
        raise BadCoefficientForRing("tuples are elements of Product rings, not {}".format(ring),
                                    token.line, token.column)
    if len(values) != len(base.factors):
        raise BadCoefficientForRing("{} elements have {} components".format(ring, len(base.factors)),
                                    token.line, token.column)
    return ring(values)


def _evaluate(node, backend):
    if isinstance(node, Number):
        return backend.number(node.value, node.token)
    if isinstance(node, Generator):
        return backend.generator(node.token)
    if isinstance(node, Tuple):
        return backend.tuple(node.values, node.token)
    if isinstance(node, Variable):
        return backend.variable(node.name, node.token)
    if isinstance(node, Negate):
        return backend.neg(_evaluate(node.operand, backend))
    if isinstance(node, Sum):
        result = _evaluate(node.terms[0], backend)
        for term in node.terms[1:]:
            result = backend.add(result, _evaluate(term, backend))
        return result
    if isinstance(node, Product):
        result = _evaluate(node.factors[0], backend)
        for factor in node.factors[1:]:
            result = backend.mul(result, _evaluate(factor, backend))
        return result
    if isinstance(node, Power):
        base = _evaluate(node.base, backend)
        result = backend.one()
        for _ in range(node.exponent):
            result = backend.mul(result, base)
        return result
    raise TypeError("unknown expression node {!r}".format(node))


def parse_expression(src, E):
    """Parse `src` and return its normal form in the extension `E`.

    :raises: ExpressionSyntaxError, UnknownVariable or BadCoefficientForRing with
             the line:column of the offending token.
    """
    return _evaluate(Parser(src).parse(), _ExtensionBackend(E))


def parse_element(R, src):
    """Parse a coefficient ring literal such as ``3``, ``-1/2``, ``[1,2]`` or ``t^2 + 1``."""
    return _evaluate(Parser(src).parse(), _RingBackend(R))


def _coefficient_text(c):
    text = str(c)
    if " " in text:
        return "(" + text + ")"
    return text


def _monomial_text(exp, names):
    parts = []
    for name, e in zip(names, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("{}^{}".format(name, e))
    return "*".join(parts)


def format_polynomial(f, names=None):
    """Print `f` with terms in strictly descending deglex order.

    >>> from skewpbw.poly import SkewPolynomial
    >>> from skewpbw.ring import ZMod
    >>> R = ZMod(5)
    >>> print(format_polynomial(SkewPolynomial(R, 2, {(2, 0): R(1), (0, 0): R(3)})))
    x1^2 + 3
    """
    names = names or f.names or tuple("x{}".format(i + 1) for i in range(f.nvars))
    terms = []
    for exp, c in f.sorted_terms():
        mono = _monomial_text(exp, names)
        terms.append((mono, _coefficient_text(c) if mono else str(c)))
    return format_terms(terms)


def split_top_level(text, sep=","):
    """Split on `sep` outside brackets and parentheses."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    last = "".join(current).strip()
    if last or parts:
        parts.append(last)
    return parts


class _IntPolyBackend(_RingBackend):
    """Evaluate t-polynomials with integer coefficients, as coefficient lists."""

    def __init__(self):
        super(_IntPolyBackend, self).__init__(None)

    def number(self, value, token):
        if value.denominator != 1:
            raise BadCoefficientForRing("integer coefficients expected", token.line, token.column)
        return [value.numerator]

    def generator(self, token):
        return [0, 1]

    def tuple(self, values, token):
        return list(values)

    def add(self, a, b):
        size = max(len(a), len(b))
        return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)]

    def neg(self, a):
        return [-x for x in a]

    def mul(self, a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def one(self):
        return [1]


_RING_RE = re.compile(r"^\s*(?P<kind>[A-Za-z]+)\s*(?:\((?P<args>.*)\))?\s*$", re.S)


def parse_ring(text):
    """Parse a ring descriptor such as ``ZMod(6)``, ``Product(3,3)``,
    ``QuotientPoly(2,t^2)``, ``QuotientPoly(3,[1,0,1])``, ``Rationals``,
    ``UniPoly(ZMod(7))`` or ``Quotient(ZMod(6),(3))``.

    :raises: InvalidRing if the descriptor is malformed.
    """
    m = _RING_RE.match(text)
    if not m:
        raise InvalidRing("Malformed ring descriptor: {!r}".format(text))
    kind, args = m.group("kind"), m.group("args")
    try:
        if kind == "Rationals" and args is None:
            return Rationals()
        if args is None:
            raise InvalidRing("{} needs arguments".format(kind))
        parts = split_top_level(args)
        if kind == "ZMod" and len(parts) == 1:
            return ZMod(int(parts[0]))
        if kind == "Product":
            return ProductRing([int(p) for p in parts])
        if kind == "QuotientPoly" and len(parts) == 2:
            coeffs = _evaluate(Parser(parts[1]).parse(), _IntPolyBackend())
            return QuotientPoly(int(parts[0]), coeffs)
        if kind == "UniPoly" and len(parts) == 1:
            return UniPoly(parse_ring(parts[0]))
        if kind == "Quotient" and len(parts) == 2:
            base = parse_ring(parts[0])
            gens = parts[1].strip()
            if gens.startswith("(") and gens.endswith(")"):
                gens = gens[1:-1]
            return QuotientRing(base, [parse_element(base, g) for g in split_top_level(gens)])
    except (ValueError, SkewPBWError) as error:
        if isinstance(error, InvalidRing):
            raise
        raise InvalidRing("Malformed ring descriptor {!r}: {}".format(text, error))
    raise InvalidRing("Unknown ring descriptor: {!r}".format(text))
