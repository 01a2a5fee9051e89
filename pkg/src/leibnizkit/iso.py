"""Certificate-based isomorphism verification and fingerprint screening.

verify_certificate is sound and complete for a given linear map; it never
searches.  compare_fingerprints is sound for non-isomorphism only: a
distinguished field proves the algebras are not isomorphic, while
"inconclusive" proves nothing.
"""

from __future__ import annotations

import json

from .core import FormatError, bracket, from_json_dict
from .invariants import Fingerprint, fingerprint
from .linalg import Matrix, SparseEchelon
from .scalars import ScalarParseError, parse_scalar


class IsoCertificate:
    """A claimed isomorphism: source, target, and the matrix of the map."""

    __slots__ = ("source", "target", "map")

    def __init__(self, source, target, matrix):
        if source.dim != target.dim:
            raise ValueError("certificate dimensions differ: %d vs %d" % (source.dim, target.dim))
        if matrix.rows != source.dim or matrix.cols != source.dim:
            raise ValueError("certificate map must be %d x %d" % (source.dim, source.dim))
        self.source = source
        self.target = target
        self.map = matrix


class CertificateReport:
    """accept, or reject with the first reason in deterministic order."""

    __slots__ = ("accepted", "reason", "pair")

    def __init__(self, accepted, reason=None, pair=None):
        self.accepted = accepted
        self.reason = reason
        self.pair = pair

    def __bool__(self):
        return self.accepted

    def __repr__(self):
        if self.accepted:
            return "CertificateReport(accept)"
        return "CertificateReport(reject: %s)" % self.reason


def verify_certificate(cert):
    """Accept iff the map is invertible and transports every basis product."""
    a, b, p = cert.source, cert.target, cert.map
    n = a.dim
    ech = SparseEchelon(n)
    for row in p.data:
        ech.add({c: v for c, v in enumerate(row) if v})
    if ech.rank != n:
        return CertificateReport(False, "singular map")
    cols = [p.column(j) for j in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = p.mul_vec(list(a.gamma_vec(i, j)))
            rhs = bracket(b, cols[i], cols[j])
            if any(x - y for x, y in zip(lhs, rhs)):
                reason = "bracket mismatch at (%s, %s)" % (a.labels[i], a.labels[j])
                return CertificateReport(False, reason, pair=(i, j))
    return CertificateReport(True)


def compare_fingerprints(a, b, trials=20, seed=1):
    """Name of the first differing fingerprint field, or None (inconclusive)."""
    fa = fingerprint(a, trials=trials, seed=seed)
    fb = fingerprint(b, trials=trials, seed=seed)
    for field in Fingerprint._fields:
        if getattr(fa, field) != getattr(fb, field):
            return field
    return None


# -- certificate files -------------------------------------------------------

def certificate_from_json_dict(doc, where="<certificate>"):
    if not isinstance(doc, dict):
        raise FormatError("%s: expected a JSON object" % where)
    for field in ("source", "target", "map"):
        if field not in doc:
            raise FormatError("%s: missing field '%s'" % (where, field))
    source = from_json_dict(doc["source"], where="%s: source" % where)
    target = from_json_dict(doc["target"], where="%s: target" % where)
    matrix = matrix_from_json(doc["map"], where="%s: map" % where)
    try:
        return IsoCertificate(source, target, matrix)
    except ValueError as exc:
        raise FormatError("%s: %s" % (where, exc)) from None


def matrix_from_json(rows, where="<map>"):
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise FormatError("%s: expected a non-empty list of rows" % where)
    width = len(rows[0])
    parsed = []
    for rno, row in enumerate(rows):
        if len(row) != width:
            raise FormatError("%s: row %d has %d entries, expected %d" % (where, rno, len(row), width))
        out = []
        for entry in row:
            try:
                out.append(parse_scalar(entry) if isinstance(entry, str) else parse_scalar(str(entry)))
            except ScalarParseError as exc:
                raise FormatError("%s: row %d: %s" % (where, rno, exc)) from None
        parsed.append(out)
    return Matrix(len(parsed), width, parsed)


def certificate_loads(text, where="<certificate>"):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("%s: line %d: %s" % (where, exc.lineno, exc.msg)) from None
    return certificate_from_json_dict(doc, where)


def certificate_load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return certificate_loads(fh.read(), where=str(path))
