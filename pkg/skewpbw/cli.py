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
"""The ``skewpbw`` command.

Exit status is 0 on success, 1 for validation and consistency failures, 2
for parse errors and 3 for operations the coefficient ring does not support.
"""
from __future__ import absolute_import, division, unicode_literals, print_function, nested_scopes
import argparse
import json
import logging
import sys

from .catalog import build_catalog, list_catalog
from .classify import (DEFAULT_DEGREE_BOUND, DEFAULT_SEED, SCHEMA_VERSION, Theorem, classify_extended_ideal,
                       primality_probe)
from .error import ParseError, SkewPBWError, UnsupportedOperation
from .extension import associated_graded, check_pbw_consistency, classify_extension
from .ideal import (PrincipalIdeal, enumerate_ideals, ideal_chain, ideal_closure, invariance, prime_radical,
                    primality)
from .parser import parse_element, parse_expression, split_top_level
from .ring import UniPoly
from .specfile import emit_spec, load_spec

__date__ = 'October 18 2026'
__docformat__ = "restructuredtext en"

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3


class Output(object):
    """Collects a command's report as text lines or as a JSON document."""

    def __init__(self, fmt, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def emit(self, lines, doc):
        if self.fmt == "json":
            doc = dict(doc, schema_version=SCHEMA_VERSION)
            self.stream.write(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
        else:
            for line in lines:
                self.stream.write(line + "\n")


def _yes(flag):
    return "yes" if flag else "no"


def _write(text, path, out):
    if path is None or path == "-":
        out.stream.write(text)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info("Wrote %s", path)


def parse_ideal(R, text):
    """The ideal of `R` generated by the comma separated element literals in `text`.

    Over ``UniPoly`` rings the principal ideal generated by the gcd is returned.
    """
    gens = [parse_element(R, g) for g in split_top_level(text) if g]
    if isinstance(R, UniPoly):
        g = R.zero
        for h in gens:
            while not h.is_zero():
                g, h = h, R.poly_divmod(g, h)[1]
        return PrincipalIdeal(R, g)
    return ideal_closure(R, gens)


def cmd_check(args, out):
    E = load_spec(args.file)
    report = check_pbw_consistency(E, debug=args.debug)
    flags = classify_extension(E)
    if report.ok:
        lines = ["consistency: OK (σ/δ laws, 0 overlap failures)"]
    else:
        lines = ["consistency: FAILED (σ laws {}, δ laws {}, {} overlap failures)".format(
            "ok" if report.sigma_ok else "FAIL", "ok" if report.delta_ok else "FAIL",
            len(report.overlap_failures))]
        for failure in report.overlap_failures:
            lines.append("  {} overlap {}{}: {} != {}".format(
                failure.kind, failure.indices, "" if failure.element is None else " at " + str(failure.element),
                failure.left, failure.right))
    lines.append("flags: " + ", ".join("{}={}".format(k, _yes(v)) for k, v in flags._asdict().items()))
    doc = {
        "command": "check",
        "ok": report.ok,
        "sigma_ok": report.sigma_ok,
        "delta_ok": report.delta_ok,
        "overlap_failures": [{
            "kind": f.kind,
            "indices": list(f.indices),
            "element": None if f.element is None else str(f.element),
            "left": str(f.left),
            "right": str(f.right),
        } for f in report.overlap_failures],
        "flags": flags._asdict(),
    }
    out.emit(lines, doc)
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_eval(args, out):
    E = load_spec(args.file)
    results = []
    for src in args.expression:
        results.append((src, str(parse_expression(src, E))))
    out.emit([nf for unused, nf in results],
             {"command": "eval", "results": [{"expression": s, "normal_form": nf} for s, nf in results]})
    return EXIT_OK


def cmd_ideals(args, out):
    E = load_spec(args.file)
    R = E.ring
    S = E.system()
    lines, rows = [], []
    for I in enumerate_ideals(R, debug=args.debug):
        inv = invariance(I, S)
        prime = None if I.is_whole() else primality(R, I).is_prime
        rows.append({
            "ideal": I.describe(),
            "cardinality": I.cardinality,
            "sigma_invariant": inv.sigma_invariant,
            "delta_invariant": inv.delta_invariant,
            "prime": prime,
        })
        lines.append("{:<16} size={:<5} sigma_invariant={:<3} delta_invariant={:<3} prime={}".format(
            I.describe(), I.cardinality, _yes(inv.sigma_invariant), _yes(inv.delta_invariant),
            "-" if prime is None else _yes(prime)))
    radical = prime_radical(R)
    lines.append("prime radical: {}".format(radical))
    out.emit(lines, {"command": "ideals", "ring": str(R), "ideals": rows, "prime_radical": radical.describe()})
    return EXIT_OK


def cmd_classify(args, out):
    E = load_spec(args.file)
    I = parse_ideal(E.ring, args.ideal)
    verdict = classify_extended_ideal(E, I, route=args.route, debug=args.debug)
    lines = str(verdict).split("\n")
    doc = dict(verdict.as_dict(), command="classify")
    if args.probe:
        report = primality_probe(E, args.degree_bound, args.probe, I, verdict, args.seed, args.debug)
        lines.append("probe: {} pairs, {} unseparated{}".format(report.checked, len(report.unseparated),
                                                               ", FLAGGED" if report.flagged else ""))
        doc["probe"] = {"checked": report.checked, "unseparated": len(report.unseparated),
                        "flagged": report.flagged}
    out.emit(lines, doc)
    return EXIT_OK


def cmd_gr(args, out):
    E = load_spec(args.file)
    _write(emit_spec(associated_graded(E)), args.output, out)
    return EXIT_OK


def cmd_chain(args, out):
    E = load_spec(args.file)
    I = parse_ideal(E.ring, args.ideal)
    S = E.system()
    chain = ideal_chain(E.ring, I, S, args.jmax, debug=args.debug)
    problems = chain.violations(S)
    lines = [str(chain)] + ["violation: " + p for p in problems]
    out.emit(lines, {"command": "chain", "levels": [L.describe() for L in chain.levels], "violations": problems})
    return EXIT_OK if not problems else EXIT_INVALID


def _params(pairs):
    params = {}
    for pair in pairs or []:
        key, sep, value = pair.partition("=")
        if not sep:
            raise ParseError("expected key=value, got {!r}".format(pair), path="--param")
        params[key.strip()] = value.strip()
    return params


def cmd_catalog(args, out):
    if args.list or not args.name:
        lines, rows = [], []
        for entry in list_catalog():
            params = ", ".join("{}={}".format(p.name, p.default) for p in entry.params)
            lines.append("{:<20} {}  [{}]".format(entry.name, entry.description, params))
            rows.append({"name": entry.name, "description": entry.description,
                         "params": {p.name: p.default for p in entry.params}})
        out.emit(lines, {"command": "catalog", "entries": rows})
        return EXIT_OK
    E = build_catalog(args.name, _params(args.param), debug=args.debug)
    _write(emit_spec(E), args.output, out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="skewpbw", description="Skew PBW extensions of finite and polynomial rings.")
    parser.add_argument("--degree-bound", type=int, default=DEFAULT_DEGREE_BOUND,
                        help="degree bound for searches (default: %(default)s)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed (default: %(default)s)")
    parser.add_argument("--format", choices=["text", "json"], default="text", help="report format")
    parser.add_argument("--debug", action="store_true", help="log debug output to stderr")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("check", help="certify the consistency of a spec file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", help="print normal forms of expressions")
    p.add_argument("file")
    p.add_argument("-e", "--expression", action="append", required=True, help="expression (repeatable)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("ideals", help="list the ideals of a finite coefficient ring")
    p.add_argument("file")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("classify", help="decide whether an extended ideal is prime")
    p.add_argument("file")
    p.add_argument("--ideal", required=True, help="comma separated generators, e.g. \"2,3\"")
    p.add_argument("--route", choices=[t.value for t in Theorem],
                   help="force a single theorem route")
    p.add_argument("--probe", type=int, default=0, metavar="N", help="also probe N random pairs")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gr", help="write the associated graded extension")
    p.add_argument("file")
    p.add_argument("-o", "--output", help="output spec file (default: stdout)")
    p.set_defaults(func=cmd_gr)

    p = sub.add_parser("chain", help="compute the descending chain of an ideal")
    p.add_argument("file")
    p.add_argument("--ideal", required=True)
    p.add_argument("--jmax", type=int, default=3)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("catalog", help="write a catalog extension as a spec file")
    p.add_argument("name", nargs="?")
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--list", action="store_true", help="list the catalog entries")
    p.add_argument("-o", "--output", help="output spec file (default: stdout)")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None, stdout=None, stderr=None):
    """Run the command line; return the exit status."""
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.debug else logging.WARNING, stream=stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    out = Output(args.format, stdout)
    try:
        return args.func(args, out)
    except ParseError as error:
        stderr.write("skewpbw: {}\n".format(error))
        return EXIT_PARSE
    except UnsupportedOperation as error:
        stderr.write("skewpbw: {}\n".format(error))
        return EXIT_UNSUPPORTED
    except SkewPBWError as error:
        logger.debug("%s failed", args.command, exc_info=True)
        stderr.write("skewpbw: {}\n".format(error))
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
