"""Derivation spaces and the first cohomology dimension H^1 = dim Der - dim Inn.

The derivation identity d([x,y]) = [d(x),y] + [x,d(y)] over all basis pairs
is a homogeneous linear system in the dim^2 matrix entries; it is assembled
sparsely and eliminated incrementally, which keeps the dim^3 equations cheap
at the dimensions the catalog uses.
"""

from __future__ import annotations

from .core import _bracket_basis_vec, _bracket_vec_basis, leibniz_residual, right_operator
from .invariants import NotLeibnizError
from .linalg import Matrix, SparseEchelon, basis_vec
from .scalars import ZERO


class InternalInconsistencyError(RuntimeError):
    """A structural guarantee failed; results cannot be trusted."""


class DerivationSpace:
    """An echelonized basis of derivation matrices."""

    __slots__ = ("basis", "dim")

    def __init__(self, basis):
        self.basis = list(basis)
        self.dim = len(self.basis)

    def __repr__(self):
        return "DerivationSpace(dim=%d)" % self.dim


def is_derivation(algebra, m):
    """Exact check of d([e_i,e_j]) = [d e_i, e_j] + [e_i, d e_j] on all pairs."""
    n = algebra.dim
    cols = [m.column(c) for c in range(n)]
    for i in range(n):
        for j in range(n):
            g = algebra.gamma.get((i, j))
            rhs = _bracket_vec_basis(algebra, cols[i], j)
            rhs2 = _bracket_basis_vec(algebra, i, cols[j])
            if g is None:
                if any(b + c for b, c in zip(rhs, rhs2)):
                    return False
            else:
                lhs = m.mul_vec(list(g))
                if any(a - b - c for a, b, c in zip(lhs, rhs, rhs2)):
                    return False
    return True


def derivation_space(algebra):
    """Solve the derivation identity for Der(L); dim = dim^2 - rank."""
    if leibniz_residual(algebra):
        raise NotLeibnizError("derivation space needs an algebra with empty residual")
    n = algebra.dim
    by_left = {}
    by_right = {}
    for (r, c), vec in algebra.gamma.items():
        by_left.setdefault(r, []).append((c, vec))
        by_right.setdefault(c, []).append((r, vec))
    ech = SparseEchelon(n * n)
    for i in range(n):
        for j in range(n):
            rows = {}
            g_ij = algebra.gamma.get((i, j))
            if g_ij is not None:
                for r, coeff in enumerate(g_ij):
                    if not coeff:
                        continue
                    for k in range(n):
                        key = k * n + r  # unknown d[k][r]
                        row = rows.setdefault(k, {})
                        row[key] = row.get(key, ZERO) + coeff
            for r, vec in by_right.get(j, ()):
                # -[d e_i, e_j]: d[r][i] multiplies [e_r, e_j]
                for k, coeff in enumerate(vec):
                    if not coeff:
                        continue
                    key = r * n + i
                    row = rows.setdefault(k, {})
                    row[key] = row.get(key, ZERO) - coeff
            for r, vec in by_left.get(i, ()):
                # -[e_i, d e_j]: d[r][j] multiplies [e_i, e_r]
                for k, coeff in enumerate(vec):
                    if not coeff:
                        continue
                    key = r * n + j
                    row = rows.setdefault(k, {})
                    row[key] = row.get(key, ZERO) - coeff
            for k in sorted(rows):
                row = {c: v for c, v in rows[k].items() if v}
                if row:
                    ech.add(row)
    basis = [Matrix(n, n, vec) for vec in ech.kernel_basis()]
    return DerivationSpace(basis)


def inner_derivation_space(algebra):
    """Echelonized span of the right operators R_{e_i}."""
    n = algebra.dim
    ech = SparseEchelon(n * n)
    for i in range(n):
        op = right_operator(algebra, basis_vec(n, i))
        if not is_derivation(algebra, op):
            raise InternalInconsistencyError(
                "R_%s is not a derivation; the algebra is not Leibniz" % algebra.labels[i]
            )
        flat = op.flat()
        ech.add({c: v for c, v in enumerate(flat) if v})
    basis = [Matrix(n, n, row) for row in ech.basis_rows()]
    return DerivationSpace(basis)


def h1_dimension(algebra, der=None, inn=None):
    """dim Der - dim Inn, after verifying Inn is contained in Der."""
    if der is None:
        der = derivation_space(algebra)
    if inn is None:
        inn = inner_derivation_space(algebra)
    n = algebra.dim
    span = SparseEchelon(n * n)
    for m in der.basis:
        span.add({c: v for c, v in enumerate(m.flat()) if v})
    for m in inn.basis:
        if not span.contains({c: v for c, v in enumerate(m.flat()) if v}):
            raise InternalInconsistencyError("an inner derivation fell outside Der(L)")
    return der.dim - inn.dim
