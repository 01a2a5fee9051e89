"""Exact dense matrices and the elimination engine behind every dimension count.

Pivots are always chosen first-nonzero-in-column, so ranks, kernels and
echelon bases are deterministic for a fixed input.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, as_scalar


class SingularMatrixError(ValueError):
    """Inversion was requested for a singular matrix."""


class NotNilpotentError(ValueError):
    """A nilpotent operator (or algebra) was required."""


class Matrix:
    """A rows x cols matrix of Scalars, stored as a list of row lists."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, entries):
        """entries: row-major flat sequence or nested rows; ints allowed."""
        if entries and not isinstance(entries[0], (list, tuple)):
            if len(entries) != rows * cols:
                raise ValueError("entry count %d != %d x %d" % (len(entries), rows, cols))
            nested = [entries[r * cols:(r + 1) * cols] for r in range(rows)]
        else:
            nested = list(entries)
        if len(nested) != rows or any(len(row) != cols for row in nested):
            raise ValueError("matrix shape mismatch")
        self.rows = rows
        self.cols = cols
        self.data = [[as_scalar(v) for v in row] for row in nested]

    @classmethod
    def from_rows(cls, nested):
        rows = len(nested)
        cols = len(nested[0]) if rows else 0
        return cls(rows, cols, nested)

    @classmethod
    def zero(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        m = cls.zero(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    def entry(self, r, c):
        return self.data[r][c]

    def column(self, c):
        return [self.data[r][c] for r in range(self.rows)]

    def is_zero(self):
        return all(not v for row in self.data for v in row)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for ra, rb in zip(self.data, other.data) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(row) for row in self.data)))

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shape mismatch in addition")
        return Matrix(self.rows, self.cols,
                      [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shape mismatch in subtraction")
        return Matrix(self.rows, self.cols,
                      [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)])

    def scale(self, factor):
        factor = as_scalar(factor)
        return Matrix(self.rows, self.cols, [[factor * v for v in row] for row in self.data])

    def __mul__(self, other):
        if self.cols != other.rows:
            raise ValueError("matrix shape mismatch in product")
        out = Matrix.zero(self.rows, other.cols)
        for r in range(self.rows):
            row = self.data[r]
            orow = out.data[r]
            for k in range(self.cols):
                v = row[k]
                if not v:
                    continue
                brow = other.data[k]
                for c in range(other.cols):
                    w = brow[c]
                    if w:
                        orow[c] = orow[c] + v * w
        return out

    def mul_vec(self, vec):
        if len(vec) != self.cols:
            raise ValueError("vector length %d != cols %d" % (len(vec), self.cols))
        out = [ZERO] * self.rows
        for c, v in enumerate(vec):
            if not v:
                continue
            for r in range(self.rows):
                w = self.data[r][c]
                if w:
                    out[r] = out[r] + w * v
        return out

    def power(self, k):
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = Matrix.identity(self.rows)
        for _ in range(k):
            out = out * self
        return out

    def flat(self):
        return [v for row in self.data for v in row]

    def __repr__(self):
        body = "; ".join(" ".join(v.render() for v in row) for row in self.data)
        return "Matrix(%dx%d: %s)" % (self.rows, self.cols, body)


# -- vectors (plain lists of Scalars) -----------------------------------

def zero_vec(n):
    return [ZERO] * n


def basis_vec(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return v


def as_vector(seq, n=None):
    v = [as_scalar(x) for x in seq]
    if n is not None and len(v) != n:
        raise ValueError("vector length %d != %d" % (len(v), n))
    return v


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(c, v):
    return [c * a for a in v]


def vec_is_zero(v):
    return not any(v)


# -- elimination ---------------------------------------------------------

class SparseEchelon:
    """Incrementally maintained reduced row echelon form over Q(i).

    Rows are sparse {column: Scalar} dicts.  Pivot rows keep a leading 1
    and zeros in every other pivot column, so reduce() is a membership
    test and kernel_basis() reads straight off the free columns.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivot_rows = {}  # pivot column -> reduced row dict

    @property
    def rank(self):
        return len(self.pivot_rows)

    def reduce(self, row):
        """Return the residual of row after eliminating all pivot columns."""
        out = {c: v for c, v in row.items() if v}
        while True:
            hit = [c for c in out if c in self.pivot_rows]
            if not hit:
                return out
            c = min(hit)
            f = out.pop(c)
            for pc, pv in self.pivot_rows[c].items():
                if pc == c:
                    continue
                nv = out.get(pc, ZERO) - f * pv
                if nv:
                    out[pc] = nv
                else:
                    out.pop(pc, None)

    def add(self, row):
        """Insert a row; returns True when it enlarged the span."""
        res = self.reduce(row)
        if not res:
            return False
        lead = min(res)
        inv = ONE / res[lead]
        new_row = {c: inv * v for c, v in res.items()}
        new_row[lead] = ONE
        for prow in self.pivot_rows.values():
            f = prow.get(lead)
            if f is None:
                continue
            del prow[lead]
            for c, v in new_row.items():
                if c == lead:
                    continue
                nv = prow.get(c, ZERO) - f * v
                if nv:
                    prow[c] = nv
                else:
                    prow.pop(c, None)
        self.pivot_rows[lead] = new_row
        return True

    def contains(self, row):
        return not self.reduce(row)

    def basis_rows(self):
        """Dense RREF rows, sorted by pivot column."""
        out = []
        for pc in sorted(self.pivot_rows):
            dense = [ZERO] * self.ncols
            for c, v in self.pivot_rows[pc].items():
                dense[c] = v
            out.append(dense)
        return out

    def kernel_basis(self):
        """One kernel vector per free column, in column order."""
        vecs = []
        for f in range(self.ncols):
            if f in self.pivot_rows:
                continue
            v = [ZERO] * self.ncols
            v[f] = ONE
            for pc, prow in self.pivot_rows.items():
                w = prow.get(f)
                if w is not None:
                    v[pc] = -w
            vecs.append(v)
        return vecs


def _row_to_dict(row):
    return {c: v for c, v in enumerate(row) if v}


def echelon_basis(vectors, ncols):
    """Reduced echelon basis of the span of the given dense vectors."""
    ech = SparseEchelon(ncols)
    for v in vectors:
        ech.add(_row_to_dict(v))
    return ech.basis_rows()


def span_echelon(vectors, ncols):
    ech = SparseEchelon(ncols)
    for v in vectors:
        ech.add(_row_to_dict(v))
    return ech


def rank(m):
    """Exact rank by incremental elimination."""
    ech = SparseEchelon(m.cols)
    for row in m.data:
        ech.add(_row_to_dict(row))
    return ech.rank


def kernel_basis(m):
    """Echelonized basis of {v : m.v = 0}; size is cols - rank."""
    ech = SparseEchelon(m.cols)
    for row in m.data:
        ech.add(_row_to_dict(row))
    return ech.kernel_basis()


def inverse(m):
    """Inverse via elimination on [m | I]; raises SingularMatrixError."""
    if m.rows != m.cols:
        raise SingularMatrixError("only square matrices can be inverted")
    n = m.rows
    aug = [list(m.data[r]) + basis_vec(n, r) for r in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_lead = ONE / aug[col][col]
        aug[col] = [inv_lead * v for v in aug[col]]
        for r in range(n):
            if r == col or not aug[r][col]:
                continue
            f = aug[r][col]
            aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return Matrix(n, n, [row[n:] for row in aug])


def nilpotent_partition(m):
    """Jordan block sizes of a nilpotent matrix, in weakly decreasing order.

    Uses the rank chain r_k = rank(m^k): the number of blocks of size
    exactly k is r_{k-1} - 2 r_k + r_{k+1}.  Nilpotency is verified by
    checking m^dim = 0 before the chain is trusted.
    """
    if m.rows != m.cols:
        raise NotNilpotentError("nilpotent_partition needs a square matrix")
    n = m.rows
    ranks = [n]
    power = Matrix.identity(n)
    for _ in range(n):
        power = power * m
        r = rank(power)
        ranks.append(r)
        if r == 0:
            break
    if ranks[-1] != 0:
        raise NotNilpotentError("matrix is not nilpotent: rank(m^%d) = %d" % (n, ranks[-1]))
    ranks.extend([0, 0])
    parts = []
    for k in range(1, n + 1):
        if k >= len(ranks) - 1:
            break
        count = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1]
        parts.extend([k] * count)
    parts.sort(reverse=True)
    return tuple(parts)
