"""Operators R on M tensor M and the D-equation family of checks.

Conventions (fixed by the source convention for the coefficient family):
R(m_v (x) m_u) = sum_{i,j} x_{uv}^{ji} m_i (x) m_j, and the matrix of R has
x_{uv}^{ji} at row (i-1)n+j, column (v-1)n+u in the ordered basis
m_1(x)m_1, m_1(x)m_2, ..., so f(x)g serializes to kron(f, g).
"""

from __future__ import annotations

import os
from collections import namedtuple

from .fields import Field, UsageError
from .linalg import Matrix, matrix_inverse

DEFAULT_MAX_N = 4


def max_n() -> int:
    """Configured bound for equation checks; the cost is Theta(n^7)."""
    value = os.environ.get("DEQ_MAX_N")
    return int(value) if value else DEFAULT_MAX_N


def _guard_n(n):
    if n > max_n():
        raise UsageError("n=%d exceeds the configured bound %d (set DEQ_MAX_N)" % (n, max_n()))


class EndoPair:
    """R in End(M (x) M), stored as the 4-index family x[u][v][j][i], 0-based."""

    def __init__(self, field: Field, n: int, x, coerce: bool = True):
        if n < 1:
            raise UsageError("n must be positive")
        fix = field.coerce if coerce else field.validate
        self.field = field
        self.n = n
        self.x = [[[[fix(x[u][v][j][i]) for i in range(n)] for j in range(n)]
                   for v in range(n)] for u in range(n)]
        self._mat = None

    @classmethod
    def from_matrix(cls, mat: Matrix):
        n = round(mat.nrows ** 0.5)
        if n * n != mat.nrows or mat.nrows != mat.ncols:
            raise UsageError("matrix of shape %dx%d is not n^2 x n^2" % (mat.nrows, mat.ncols))
        x = [[[[mat.rows[i * n + j][v * n + u] for i in range(n)] for j in range(n)]
              for v in range(n)] for u in range(n)]
        return cls(mat.field, n, x, coerce=False)

    @classmethod
    def from_rows(cls, field, rows):
        return cls.from_matrix(Matrix(field, rows))

    def matrix(self) -> Matrix:
        if self._mat is None:
            n = self.n
            rows = [[self.x[u][v][j][i] for v in range(n) for u in range(n)]
                    for i in range(n) for j in range(n)]
            self._mat = Matrix(self.field, rows, coerce=False)
        return self._mat

    def coeff(self, u, v, j, i):
        """x_{uv}^{ji} with 1-based indices, as written in the formulas."""
        return self.x[u - 1][v - 1][j - 1][i - 1]

    def __eq__(self, other):
        return (isinstance(other, EndoPair) and self.field == other.field
                and self.n == other.n and self.x == other.x)

    def __repr__(self):
        return "EndoPair(n=%d, %r)" % (self.n, self.field)


def identity_pair(field, n) -> EndoPair:
    return EndoPair.from_matrix(Matrix.identity(field, n * n))


def flip_pair(field, n) -> EndoPair:
    return EndoPair.from_matrix(tau_matrix(field, n))


def _perm_matrix(field, size, image):
    """Permutation matrix sending basis e_k to e_image(k)."""
    z, o = field.zero, field.one
    rows = [[z] * size for _ in range(size)]
    for k in range(size):
        rows[image(k)][k] = o
    return Matrix(field, rows, coerce=False)


def tau_matrix(field, n) -> Matrix:
    """Flip on M (x) M: m_a (x) m_b -> m_b (x) m_a."""
    return _perm_matrix(field, n * n, lambda k: (k % n) * n + k // n)


def tau123_matrix(field, n) -> Matrix:
    """tau^(123): l (x) m (x) p -> p (x) l (x) m."""
    def image(k):
        a, b, c = k // (n * n), (k // n) % n, k % n
        return (c * n + a) * n + b
    return _perm_matrix(field, n ** 3, image)


def tau23_matrix(field, n) -> Matrix:
    def image(k):
        a, b, c = k // (n * n), (k // n) % n, k % n
        return (a * n + c) * n + b
    return _perm_matrix(field, n ** 3, image)


def lift(R: EndoPair, slot: int) -> Matrix:
    """R^{12}, R^{13}, or R^{23} as an n^3 x n^3 matrix."""
    _guard_n(R.n)
    k, n = R.field, R.n
    eye = Matrix.identity(k, n)
    if slot == 12:
        return R.matrix().kron(eye)
    if slot == 23:
        return eye.kron(R.matrix())
    if slot == 13:
        p23 = tau23_matrix(k, n)
        return p23.mul(R.matrix().kron(eye)).mul(p23)
    raise UsageError("slot must be one of 12, 13, 23")


def _pair_violation(field, n, x, y):
    """First 1-based (i,j,k,l,p,q) where sum_v x_kv^ji y_lq^vp != sum_a x_kl^ja y_aq^ip."""
    rng = range(n)
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    for p in rng:
                        for q in rng:
                            lhs = field.sum(field.mul(x[k][v][j][i], y[l][q][v][p]) for v in rng)
                            rhs = field.sum(field.mul(x[k][l][j][a], y[a][q][i][p]) for a in rng)
                            if lhs != rhs:
                                return (i + 1, j + 1, k + 1, l + 1, p + 1, q + 1)
    return None


def first_violation(R: EndoPair):
    """First coordinate equation the D-criterion fails on, or None."""
    return _pair_violation(R.field, R.n, R.x, R.x)


def check_d(R: EndoPair) -> bool:
    """D-equation membership; coordinate and operator paths must agree."""
    _guard_n(R.n)
    coord = first_violation(R) is None
    r12, r23 = lift(R, 12), lift(R, 23)
    oper = r12.mul(r23) == r23.mul(r12)
    if coord != oper:
        raise RuntimeError("verdict paths disagree: coordinate=%r operator=%r" % (coord, oper))
    return coord


def check_commuting_pair(R: EndoPair, S: EndoPair) -> bool:
    """R^{23} S^{12} = S^{12} R^{23}, by coordinates and by operators."""
    if R.n != S.n or R.field != S.field:
        raise UsageError("operators live on different spaces")
    _guard_n(R.n)
    coord = _pair_violation(R.field, R.n, R.x, S.x) is None
    r23, s12 = lift(R, 23), lift(S, 12)
    oper = r23.mul(s12) == s12.mul(r23)
    if coord != oper:
        raise RuntimeError("verdict paths disagree on the commuting pair")
    return coord


def check_qybe(R: EndoPair) -> bool:
    """Quantum Yang-Baxter: R12 R13 R23 = R23 R13 R12."""
    _guard_n(R.n)
    r12, r13, r23 = lift(R, 12), lift(R, 13), lift(R, 23)
    return r12.mul(r13).mul(r23) == r23.mul(r13).mul(r12)


def check_hopf(R: EndoPair) -> bool:
    """Hopf equation: R12 R23 = R23 R13 R12."""
    _guard_n(R.n)
    r12, r13, r23 = lift(R, 12), lift(R, 13), lift(R, 23)
    return r12.mul(r23) == r23.mul(r13).mul(r12)


def check_pentagon(W: EndoPair) -> bool:
    """Pentagon equation: W12 W13 W23 = W23 W12."""
    _guard_n(W.n)
    w12, w13, w23 = lift(W, 12), lift(W, 13), lift(W, 23)
    return w12.mul(w13).mul(w23) == w23.mul(w12)


FormVerdicts = namedtuple("FormVerdicts", ["d", "form_t", "form_u", "form_w"])


def check_equivalent_forms(R: EndoPair) -> FormVerdicts:
    """The four equivalent statements; the booleans coincide by the theorem.

    T = R tau satisfies T12 T13 = T23 T13 tau123; U = tau R satisfies
    U13 U23 = tau123 U13 U12; W = tau R tau satisfies W12 W23 = W23 W12,
    the equation itself: conjugating the equation for R by the outer-leg
    swap exchanges R12/R23 with W23/W12, so the flip conjugate of a
    solution is again a solution. Equality of the verdicts is left to the
    caller: it is the statement under test, not an input contract.
    """
    _guard_n(R.n)
    k, n = R.field, R.n
    tau = tau_matrix(k, n)
    t123 = tau123_matrix(k, n)
    T = EndoPair.from_matrix(R.matrix().mul(tau))
    U = EndoPair.from_matrix(tau.mul(R.matrix()))
    W = EndoPair.from_matrix(tau.mul(R.matrix()).mul(tau))
    t12, t13, t23 = lift(T, 12), lift(T, 13), lift(T, 23)
    u12, u13, u23 = lift(U, 12), lift(U, 13), lift(U, 23)
    w12, w23 = lift(W, 12), lift(W, 23)
    return FormVerdicts(
        d=check_d(R),
        form_t=t12.mul(t13) == t23.mul(t13).mul(t123),
        form_u=u13.mul(u23) == t123.mul(u13).mul(u12),
        form_w=w12.mul(w23) == w23.mul(w12),
    )


def conjugate(R: EndoPair, u: Matrix) -> EndoPair:
    """(u (x) u) R (u (x) u)^{-1}; preserves every check_d verdict."""
    if u.nrows != R.n or u.ncols != R.n:
        raise UsageError("conjugating matrix must be %d x %d" % (R.n, R.n))
    uu = u.kron(u)
    uu_inv = matrix_inverse(uu)
    if uu_inv is None:
        raise UsageError("conjugating matrix is singular")
    return EndoPair.from_matrix(uu.mul(R.matrix()).mul(uu_inv))


def product_solution(f: Matrix, g: Matrix) -> EndoPair:
    """R = f (x) g; a D-solution exactly when fg = gf."""
    if f.field != g.field or f.nrows != f.ncols or g.nrows != g.ncols or f.nrows != g.nrows:
        raise UsageError("f and g must be square of equal size over one field")
    return EndoPair.from_matrix(f.kron(g))


def diagonal_solution(field, a) -> EndoPair:
    """R(m_i (x) m_j) = a[i][j] m_i (x) m_j; always a D-solution."""
    n = len(a)
    z = field.zero
    rows = [[z] * (n * n) for _ in range(n * n)]
    for i in range(n):
        if len(a[i]) != n:
            raise UsageError("diagonal table must be square")
        for j in range(n):
            rows[i * n + j][i * n + j] = field.coerce(a[i][j])
    return EndoPair.from_matrix(Matrix(field, rows, coerce=False))


def invert(R: EndoPair):
    """R^{-1} as an EndoPair, or None when R is singular."""
    inv = matrix_inverse(R.matrix())
    return None if inv is None else EndoPair.from_matrix(inv)
