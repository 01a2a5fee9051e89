"""Algebras presented by structure constants, and the bracket machinery.

An Algebra is an immutable value: an ordered basis of labels plus a sparse
map gamma[(i, j)] -> coordinates of [e_i, e_j].  The bracket convention is
right-Leibniz throughout: gamma rows index the left argument, columns the
right argument, and the identity checked by leibniz_residual is

    [x, [y, z]] = [[x, y], z] - [[x, z], y].
"""

from __future__ import annotations

import json

from .linalg import Matrix, as_vector, inverse, vec_is_zero, zero_vec
from .scalars import ZERO, ScalarParseError, as_scalar, parse_scalar


class FormatError(ValueError):
    """An algebra / weights / certificate file failed to parse."""


class Algebra:
    """Finite-dimensional algebra over Q(i) given by structure constants."""

    __slots__ = ("dim", "labels", "gamma")

    def __init__(self, labels, gamma):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError("basis labels must be unique")
        dim = len(labels)
        clean = {}
        for (i, j), vec in gamma.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError("product index (%d,%d) out of range for dim %d" % (i, j, dim))
            v = tuple(as_scalar(x) for x in vec)
            if len(v) != dim:
                raise ValueError("product (%d,%d) has %d coordinates, need %d" % (i, j, len(v), dim))
            if any(v):
                clean[(i, j)] = v
        self.dim = dim
        self.labels = labels
        self.gamma = clean

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError("unknown basis label %r" % (label,)) from None

    def gamma_vec(self, i, j):
        """Coordinates of [e_i, e_j]; a zero tuple when the product is absent."""
        v = self.gamma.get((i, j))
        if v is None:
            return (ZERO,) * self.dim
        return v

    def products(self):
        """Nonzero basis products in lexicographic (i, j) order."""
        return sorted(self.gamma.items())

    def key(self):
        """Hashable canonical form, for caching in tests and tools."""
        return (self.labels, tuple(sorted(self.gamma.items())))

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.labels == other.labels and self.gamma == other.gamma

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Algebra(dim=%d, products=%d)" % (self.dim, len(self.gamma))


# -- bracket -------------------------------------------------------------

def bracket(algebra, x, y):
    """Bilinear extension of gamma: the product [x, y]."""
    x = as_vector(x, algebra.dim)
    y = as_vector(y, algebra.dim)
    out = zero_vec(algebra.dim)
    for (i, j), vec in algebra.gamma.items():
        c = x[i] * y[j]
        if c:
            for k, g in enumerate(vec):
                if g:
                    out[k] = out[k] + c * g
    return out


def _bracket_basis_vec(algebra, i, v):
    # [e_i, v] for a coordinate vector v
    out = zero_vec(algebra.dim)
    for t, c in enumerate(v):
        if not c:
            continue
        g = algebra.gamma.get((i, t))
        if g is None:
            continue
        for k, w in enumerate(g):
            if w:
                out[k] = out[k] + c * w
    return out


def _bracket_vec_basis(algebra, v, j):
    # [v, e_j] for a coordinate vector v
    out = zero_vec(algebra.dim)
    for t, c in enumerate(v):
        if not c:
            continue
        g = algebra.gamma.get((t, j))
        if g is None:
            continue
        for k, w in enumerate(g):
            if w:
                out[k] = out[k] + c * w
    return out


def leibniz_residual(algebra):
    """All basis triples violating the right-Leibniz identity.

    Returns (i, j, k, residual) with residual =
    [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j]; an empty list
    means the algebra is a Leibniz algebra.
    """
    n = algebra.dim
    out = []
    for i in range(n):
        for j in range(n):
            g_ij = algebra.gamma.get((i, j))
            for k in range(n):
                g_jk = algebra.gamma.get((j, k))
                g_ik = algebra.gamma.get((i, k))
                res = zero_vec(n)
                nonzero = False
                if g_jk is not None:
                    t = _bracket_basis_vec(algebra, i, g_jk)
                    res = t
                    nonzero = True
                if g_ij is not None:
                    t = _bracket_vec_basis(algebra, g_ij, k)
                    res = [a - b for a, b in zip(res, t)]
                    nonzero = True
                if g_ik is not None:
                    t = _bracket_vec_basis(algebra, g_ik, j)
                    res = [a + b for a, b in zip(res, t)]
                    nonzero = True
                if nonzero and not vec_is_zero(res):
                    out.append((i, j, k, res))
    return out


def right_operator(algebra, x):
    """Matrix of R_x : y -> [y, x] in the algebra's basis."""
    x = as_vector(x, algebra.dim)
    n = algebra.dim
    m = Matrix.zero(n, n)
    for (i, j), vec in algebra.gamma.items():
        c = x[j]
        if not c:
            continue
        for k, g in enumerate(vec):
            if g:
                m.data[k][i] = m.data[k][i] + c * g
    return m


def left_operator(algebra, x):
    """Matrix of L_x : y -> [x, y] in the algebra's basis."""
    x = as_vector(x, algebra.dim)
    n = algebra.dim
    m = Matrix.zero(n, n)
    for (i, j), vec in algebra.gamma.items():
        c = x[i]
        if not c:
            continue
        for k, g in enumerate(vec):
            if g:
                m.data[k][j] = m.data[k][j] + c * g
    return m


def change_of_basis(algebra, p):
    """Transport the algebra along an invertible matrix P.

    Column j of P holds the old coordinates of the new basis vector u_j;
    the new constants satisfy [u, v]_new = P^-1 [P u, P v].
    """
    if p.rows != algebra.dim or p.cols != algebra.dim:
        raise ValueError("change of basis matrix must be %d x %d" % (algebra.dim, algebra.dim))
    p_inv = inverse(p)  # raises SingularMatrixError when P is singular
    n = algebra.dim
    cols = [p.column(j) for j in range(n)]
    gamma = {}
    for i in range(n):
        for j in range(n):
            w = bracket(algebra, cols[i], cols[j])
            if vec_is_zero(w):
                continue
            coords = p_inv.mul_vec(w)
            if any(coords):
                gamma[(i, j)] = tuple(coords)
    return Algebra(algebra.labels, gamma)


def direct_sum(a, b):
    """Block-diagonal sum; colliding labels from b get primes appended."""
    labels = list(a.labels)
    used = set(labels)
    for lb in b.labels:
        new = lb
        while new in used:
            new += "'"
        labels.append(new)
        used.add(new)
    n = a.dim + b.dim
    gamma = {}
    for (i, j), vec in a.gamma.items():
        gamma[(i, j)] = tuple(vec) + (ZERO,) * b.dim
    for (i, j), vec in b.gamma.items():
        gamma[(i + a.dim, j + a.dim)] = (ZERO,) * a.dim + tuple(vec)
    return Algebra(labels, gamma)


# -- interchange format ----------------------------------------------------

def to_json_dict(algebra):
    products = []
    for (i, j), vec in algebra.products():
        terms = [[algebra.labels[k], c.render()] for k, c in enumerate(vec) if c]
        products.append({
            "left": algebra.labels[i],
            "right": algebra.labels[j],
            "result": terms,
        })
    return {"dim": algebra.dim, "basis": list(algebra.labels), "products": products}


def from_json_dict(doc, where="<algebra>"):
    if not isinstance(doc, dict):
        raise FormatError("%s: expected a JSON object" % where)
    for field in ("dim", "basis"):
        if field not in doc:
            raise FormatError("%s: missing field '%s'" % (where, field))
    labels = doc["basis"]
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise FormatError("%s: 'basis' must be a list of labels" % where)
    if len(set(labels)) != len(labels):
        raise FormatError("%s: duplicate basis label" % where)
    if doc["dim"] != len(labels):
        raise FormatError("%s: dim %r does not match %d basis labels" % (where, doc["dim"], len(labels)))
    index = {lb: k for k, lb in enumerate(labels)}
    dim = len(labels)
    gamma = {}
    for pos, prod in enumerate(doc.get("products", [])):
        ctx = "%s: products[%d]" % (where, pos)
        if not isinstance(prod, dict):
            raise FormatError("%s: expected an object" % ctx)
        for field in ("left", "right", "result"):
            if field not in prod:
                raise FormatError("%s: missing field '%s'" % (ctx, field))
        try:
            i = index[prod["left"]]
        except KeyError:
            raise FormatError("%s: unknown label '%s'" % (ctx, prod["left"])) from None
        try:
            j = index[prod["right"]]
        except KeyError:
            raise FormatError("%s: unknown label '%s'" % (ctx, prod["right"])) from None
        if (i, j) in gamma:
            raise FormatError("%s: duplicate product (%s, %s)" % (ctx, prod["left"], prod["right"]))
        vec = zero_vec(dim)
        for term in prod["result"]:
            if not (isinstance(term, (list, tuple)) and len(term) == 2):
                raise FormatError("%s: result terms must be [label, coefficient] pairs" % ctx)
            label, coeff = term
            if label not in index:
                raise FormatError("%s: unknown label '%s'" % (ctx, label))
            try:
                c = parse_scalar(coeff)
            except ScalarParseError as exc:
                raise FormatError("%s: %s" % (ctx, exc)) from None
            k = index[label]
            vec[k] = vec[k] + c
        gamma[(i, j)] = tuple(vec)
    return Algebra(labels, gamma)


def dumps(algebra):
    """Canonical byte-stable JSON text for the interchange format."""
    return json.dumps(to_json_dict(algebra), indent=2) + "\n"


def loads(text, where="<algebra>"):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("%s: line %d: %s" % (where, exc.lineno, exc.msg)) from None
    return from_json_dict(doc, where)


def load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read(), where=str(path))


def save(algebra, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(algebra))
