"""Dense exact linear algebra over the fields in deq.fields.

Everything is deterministic: elimination scans columns in a fixed order
(leftmost first unless a custom order is given) and picks the topmost
nonzero row as pivot, so bases and echelon forms are reproducible.
"""

from __future__ import annotations

from .fields import Field, UsageError


class Matrix:
    """Dense matrix; entries are raw field values, validated at construction."""

    def __init__(self, field: Field, rows, coerce: bool = True):
        if not rows or not rows[0]:
            raise UsageError("matrix dimensions must be positive")
        ncols = len(rows[0])
        fixed = []
        for row in rows:
            if len(row) != ncols:
                raise UsageError("ragged matrix rows")
            if coerce:
                fixed.append([field.coerce(v) for v in row])
            else:
                fixed.append([field.validate(v) for v in row])
        self.field = field
        self.rows = fixed
        self.nrows = len(fixed)
        self.ncols = ncols

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], coerce=False)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], coerce=False)

    def entry(self, i, j):
        return self.rows[i][j]

    def col(self, j):
        return [row[j] for row in self.rows]

    def add(self, other):
        self._match(other, same_shape=True)
        k = self.field
        return Matrix(k, [[k.add(a, b) for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.rows, other.rows)], coerce=False)

    def sub(self, other):
        self._match(other, same_shape=True)
        k = self.field
        return Matrix(k, [[k.sub(a, b) for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.rows, other.rows)], coerce=False)

    def scale(self, s):
        k = self.field
        s = k.coerce(s)
        return Matrix(k, [[k.mul(s, a) for a in row] for row in self.rows], coerce=False)

    def mul(self, other):
        self._match(other)
        if self.ncols != other.nrows:
            raise UsageError("inner dimensions differ: %d vs %d" % (self.ncols, other.nrows))
        k = self.field
        bt = [other.col(j) for j in range(other.ncols)]
        return Matrix(k, [[k.dot(row, bcol) for bcol in bt] for row in self.rows], coerce=False)

    def __matmul__(self, other):
        return self.mul(other)

    def apply(self, vec):
        if len(vec) != self.ncols:
            raise UsageError("vector length %d does not match %d columns" % (len(vec), self.ncols))
        k = self.field
        return [k.dot(row, vec) for row in self.rows]

    def transpose(self):
        return Matrix(self.field, [self.col(j) for j in range(self.ncols)], coerce=False)

    def kron(self, other):
        self._match(other)
        k = self.field
        out = []
        for ra in self.rows:
            for rb in other.rows:
                out.append([k.mul(a, b) for a in ra for b in rb])
        return Matrix(k, out, coerce=False)

    def is_zero(self):
        k = self.field
        return all(k.is_zero(v) for row in self.rows for v in row)

    def _match(self, other, same_shape=False):
        if self.field != other.field:
            raise UsageError("mixed fields: %r vs %r" % (self.field, other.field))
        if same_shape and (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise UsageError("shape mismatch")

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.rows == other.rows)

    def __repr__(self):
        return "Matrix(%r, %dx%d)" % (self.field, self.nrows, self.ncols)


def rref(rows, field, col_order=None):
    """Reduced row echelon form. Returns (rows, pivot_cols), rows in pivot order.

    col_order customizes which columns are eliminated first; pivot_cols is
    reported in elimination order.
    """
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    for r in work:
        if len(r) != ncols:
            raise UsageError("ragged rows")
    order = list(range(ncols)) if col_order is None else list(col_order)
    rank = 0
    pivots = []
    for c in order:
        pivot_row = None
        for i in range(rank, len(work)):
            if not field.is_zero(work[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        inv = field.inv(work[rank][c])
        work[rank] = [field.mul(inv, v) for v in work[rank]]
        for i in range(len(work)):
            if i != rank and not field.is_zero(work[i][c]):
                f = work[i][c]
                work[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(work[i], work[rank])]
        pivots.append(c)
        rank += 1
    return work[:rank], pivots


def solve_linear(A: Matrix, b):
    """Some exact solution of A x = b (free variables set to 0), or None."""
    if len(b) != A.nrows:
        raise UsageError("rhs length %d does not match %d rows" % (len(b), A.nrows))
    k = A.field
    b = [k.coerce(v) for v in b]
    aug = [row + [rv] for row, rv in zip(A.rows, b)]
    rows, pivots = rref(aug, k)
    if A.ncols in pivots:
        return None  # pivot in the augmented column: inconsistent
    x = [k.zero] * A.ncols
    for row, p in zip(rows, pivots):
        x[p] = row[A.ncols]
    return x


def kernel_basis(A: Matrix):
    """Deterministic basis of the null space, one vector per free column."""
    k = A.field
    rows, pivots = rref(A.rows, k)
    free = [c for c in range(A.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [k.zero] * A.ncols
        v[f] = k.one
        for row, p in zip(rows, pivots):
            v[p] = k.neg(row[f])
        basis.append(v)
    return basis


def reduce_against(v, basis_rows, pivots, field):
    """Subtract the span of reduced-echelon rows from v; zero iff v is in the span."""
    v = list(v)
    for row, p in zip(basis_rows, pivots):
        if not field.is_zero(v[p]):
            f = v[p]
            v = [field.sub(a, field.mul(f, b)) for a, b in zip(v, row)]
    return v


def span_and_membership(vectors, field, dim=None, col_order=None):
    """Reduced-echelon basis of a span plus an exact membership test."""
    if vectors:
        dim = len(vectors[0])
        for v in vectors:
            if len(v) != dim:
                raise UsageError("vectors of mixed dimension")
    elif dim is None:
        raise UsageError("dim is required for an empty vector list")
    coerced = [[field.coerce(x) for x in v] for v in vectors]
    basis, pivots = rref(coerced, field, col_order=col_order)

    def contains(v):
        if len(v) != dim:
            raise UsageError("vector of wrong dimension")
        v = [field.coerce(x) for x in v]
        return all(field.is_zero(x) for x in reduce_against(v, basis, pivots, field))

    return basis, contains


def matrix_inverse(A: Matrix):
    """A^{-1}, or None when A is singular."""
    if A.nrows != A.ncols:
        raise UsageError("inverse of a non-square matrix")
    k = A.field
    n = A.nrows
    ident = Matrix.identity(k, n)
    aug = [row + irow for row, irow in zip(A.rows, ident.rows)]
    rows, pivots = rref(aug, k)
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        return None
    return Matrix(k, [row[n:] for row in rows], coerce=False)
