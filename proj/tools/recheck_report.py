#!/usr/bin/env python3
"""Offline verifier for certification reports.

Re-evaluates every check from its serialized values alone and compares with
the recorded pass flags and summary. No dependency on the library that wrote
the report: scalars are exact "p/q" strings, "+inf" compares above every
scalar, and non-scalar serializations compare bytewise under "=".

Usage: recheck_report.py report.json [report2.json ...]
Exit 0 iff every file is internally consistent AND all checks passed.
"""

import json
import sys
from fractions import Fraction

RELS = {
    "=": lambda a, b: a == b,
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
    ">": lambda a, b: a > b,
}

INF = object()


def parse(s):
    if s == "+inf":
        return INF
    return Fraction(s)


def holds(lhs, rel, rhs):
    try:
        a, b = parse(lhs), parse(rhs)
    except ValueError:
        if rel == "=":
            return lhs == rhs  # canonical non-scalar serializations
        raise
    if a is INF or b is INF:
        key = (a is INF, b is INF)
        return {
            "=": key[0] == key[1],
            "<": not key[0] and key[1],
            "<=": key[1] or not key[0],
            ">=": key[0] or not key[1],
            ">": key[0] and not key[1],
        }[rel]
    return RELS[rel](a, b)


def recheck(path):
    with open(path) as f:
        rep = json.load(f)
    bad = 0
    passed = 0
    for c in rep["checks"]:
        if c["lhs"].startswith("error:"):
            derived = False
        else:
            derived = holds(c["lhs"], c["rel"], c["rhs"])
        if derived != c["pass"]:
            print(f"{path}: INCONSISTENT {c['name']!r}: "
                  f"{c['lhs']} {c['rel']} {c['rhs']} -> {derived}, recorded {c['pass']}")
            bad += 1
        passed += 1 if c["pass"] else 0
    summary = rep["summary"]
    if summary["passed"] != passed or summary["failed"] != len(rep["checks"]) - passed:
        print(f"{path}: summary does not match the checks")
        bad += 1
    failed = len(rep["checks"]) - passed
    status = "consistent" if bad == 0 else "INCONSISTENT"
    print(f"{path}: {status}, {passed} passed, {failed} failed "
          f"({rep['scenario']})")
    return bad == 0 and failed == 0


if __name__ == "__main__":
    if len(sys.argv) < 2:
        sys.exit(__doc__)
    ok = all([recheck(p) for p in sys.argv[1:]])
    sys.exit(0 if ok else 1)
