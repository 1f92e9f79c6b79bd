"""D-maps on coalgebras: the balance condition on bilinear forms, the map
sigma attached to a solution R, regeneration of R from a comodule and a
D-map, strong D-maps from symmetric solutions, and convolution inverses.

A D-map is sigma: C (x) C/I -> k with
sum sigma(c_1 (x) d~) c_2~ = sum sigma(c_2 (x) d~) c_1~ in C/I; it is
strong when I = 0.
"""

from __future__ import annotations

from .coalg import (BilinearForm, Coalgebra, Coideal, Comodule, QuotientCoalgebra,
                    coideal, comatrix, convolve, counit_form, quotient)
from .fields import MathError, UsageError
from .frt import obstruction_coideal, require_solution, standard_comodule
from .tensor_ops import EndoPair, first_violation, invert


class DMap:
    """sigma: C (x) C/I -> k satisfying the balance condition."""

    def __init__(self, C: Coalgebra, I, Q, sigma: BilinearForm):
        self.coalgebra = C
        self.ideal = I
        self.quotient = Q
        self.sigma = sigma

    @property
    def is_strong(self) -> bool:
        return self.ideal is None or self.ideal.dim == 0

    def right_coalgebra(self) -> Coalgebra:
        return self.sigma.right

    def __repr__(self):
        kind = "strong " if self.is_strong else ""
        return "DMap(%sdim C=%d)" % (kind, self.coalgebra.dim)


def _project(C, Q, vec):
    return vec if Q is None else Q.project(vec)


def is_dmap(C: Coalgebra, I, sigma) -> bool:
    """Balance condition, exactly, on all basis pairs.

    `I` may be None or a zero/nonzero Coideal; `sigma` a BilinearForm (or
    raw table) on C (x) C/I, where C/I means C itself when I is trivial."""
    k = C.field
    table = sigma.table if isinstance(sigma, BilinearForm) else sigma
    Q = None
    if isinstance(I, Coideal) and I.dim > 0:
        Q = quotient(C, I)
    qdim = C.dim if Q is None else Q.dim
    if len(table) != C.dim or any(len(row) != qdim for row in table):
        raise UsageError("sigma table has wrong shape")
    pi = []
    for a in range(C.dim):
        e = [k.one if t == a else k.zero for t in range(C.dim)]
        pi.append(_project(C, Q, e))
    for a in range(C.dim):
        row = C.mu[a]
        for b in range(qdim):
            lhs = [k.zero] * qdim
            rhs = [k.zero] * qdim
            for a1 in range(C.dim):
                for a2 in range(C.dim):
                    m = row[a1][a2]
                    if k.is_zero(m):
                        continue
                    c1 = k.mul(m, table[a1][b])
                    if not k.is_zero(c1):
                        lhs = [k.add(lhs[t], k.mul(c1, pi[a2][t])) for t in range(qdim)]
                    c2 = k.mul(m, table[a2][b])
                    if not k.is_zero(c2):
                        rhs = [k.add(rhs[t], k.mul(c2, pi[a1][t])) for t in range(qdim)]
            if lhs != rhs:
                return False
    return True


def sigma_form(C: Coalgebra, f_values, right: Coalgebra = None) -> BilinearForm:
    """sigma_f(c (x) d~) = eps(c) f(d~): a D-map for every linear f on C/I;
    `right` is the quotient (default C itself, i.e. I = 0)."""
    k = C.field
    if right is None:
        right = C
    if len(f_values) != right.dim:
        raise UsageError("f must be a functional on the right coalgebra")
    table = [[k.mul(C.counit[a], k.coerce(f_values[b])) for b in range(right.dim)]
             for a in range(C.dim)]
    return BilinearForm(C, right, table)


def delta_form(C: Coalgebra, n: int, a_value) -> BilinearForm:
    """sigma(c_ij (x) c_pq) = delta_ij a on comatrix(n); a strong D-map."""
    k = C.field
    if C.dim != n * n:
        raise UsageError("coalgebra is not comatrix(n)")
    a_value = k.coerce(a_value)
    table = [[a_value if (i // n) == (i % n) else k.zero for _ in range(C.dim)]
             for i in range(C.dim)]
    return BilinearForm(C, C, table)


def _sigma0_table(R: EndoPair):
    """sigma0(c_iv (x) c_ju) = x_uv^ji on full C (x) C."""
    n, k = R.n, R.field
    d = n * n
    table = [[k.zero] * d for _ in range(d)]
    for i in range(n):
        for v in range(n):
            for j in range(n):
                for u in range(n):
                    table[i * n + v][j * n + u] = R.x[u][v][j][i]
    return table


def _check_kills_right(table, I: Coideal, what: str):
    """sigma0(C (x) I) = 0, reporting the offending pair."""
    k = I.parent.field
    for r, w in enumerate(I.basis):
        for a in range(I.parent.dim):
            s = k.sum(k.mul(w[m], table[a][m]) for m in range(len(w)))
            if not k.is_zero(s):
                raise RuntimeError(
                    "%s does not vanish on %s (x) relation %d"
                    % (what, I.parent.labels[a], r + 1))


def sigma_from_r(R: EndoPair) -> DMap:
    """The unique D-map with sigma(c_iv (x) c_ju~) = x_uv^ji for a solution R."""
    require_solution(R)
    n, k = R.n, R.field
    C = comatrix(k, n)
    I = obstruction_coideal(R, C)
    Q = quotient(C, I)
    table0 = _sigma0_table(R)
    _check_kills_right(table0, I, "sigma")
    table = [[table0[a][c] for c in Q.section_cols] for a in range(C.dim)]
    sigma = BilinearForm(C, Q, table)
    dm = DMap(C, I, Q, sigma)
    if not is_dmap(C, I, sigma):
        raise RuntimeError("balance condition failed for a solution")
    return dm


def r_sigma(comodule: Comodule, dm: DMap) -> EndoPair:
    """R_sigma(m (x) n) = sum sigma(m_1 (x) n_1~) m_0 (x) n_0."""
    if comodule.coalgebra is not dm.coalgebra:
        raise UsageError("comodule is not over the D-map's coalgebra")
    k = dm.coalgebra.field
    n = comodule.dim
    d = dm.coalgebra.dim
    Q = dm.quotient
    qdim = dm.sigma.right.dim
    # sigma with the right leg pulled back to C
    pulled = [[k.zero] * d for _ in range(d)]
    for a in range(d):
        for b in range(d):
            if Q is None:
                pulled[a][b] = dm.sigma.table[a][b]
            else:
                e = [k.one if t == b else k.zero for t in range(d)]
                coords = Q.project(e)
                pulled[a][b] = k.sum(k.mul(coords[c], dm.sigma.table[a][c])
                                     for c in range(qdim))
    rho = comodule.rho
    x = [[[[k.zero for _ in range(n)] for _ in range(n)] for _ in range(n)]
         for _ in range(n)]
    for u in range(n):
        for v in range(n):
            for j in range(n):
                for i in range(n):
                    acc = k.zero
                    for a in range(d):
                        ra = rho[v][i][a]
                        if k.is_zero(ra):
                            continue
                        for b in range(d):
                            rb = rho[u][j][b]
                            if not k.is_zero(rb):
                                acc = k.add(acc, k.mul(k.mul(ra, rb), pulled[a][b]))
                    x[u][v][j][i] = acc
    out = EndoPair(k, n, x, coerce=False)
    if first_violation(out) is not None:
        raise RuntimeError("operator from a D-map fails the equation")
    return out


def first_symmetry_violation(R: EndoPair):
    """First (u,v,j,i), 1-based, with x_uv^ji != x_vu^ij, or None."""
    n = R.n
    for u in range(n):
        for v in range(n):
            for j in range(n):
                for i in range(n):
                    if R.x[u][v][j][i] != R.x[v][u][i][j]:
                        return (u + 1, v + 1, j + 1, i + 1)
    return None


def strong_dmap_from_symmetric(R: EndoPair):
    """(C(R), strong D-map) for a solution with R tau = tau R; sigma then
    factors through I(R) on both legs."""
    require_solution(R)
    bad = first_symmetry_violation(R)
    if bad is not None:
        u, v, j, i = bad
        raise MathError(
            "R tau != tau R: x_%d%d^%d%d != x_%d%d^%d%d" % (u, v, j, i, v, u, i, j))
    n, k = R.n, R.field
    C = comatrix(k, n)
    I = obstruction_coideal(R, C)
    Q = quotient(C, I)
    table0 = _sigma0_table(R)
    _check_kills_right(table0, I, "sigma")
    # symmetry makes the left leg factor as well
    left = [[table0[a][b] for a in range(C.dim)] for b in range(C.dim)]
    _check_kills_right(left, I, "sigma (left leg)")
    table = [[table0[a][b] for b in Q.section_cols] for a in Q.section_cols]
    sigma = BilinearForm(Q, Q, table)
    dm = DMap(Q, None, None, sigma)
    if not is_dmap(Q, None, sigma):
        raise RuntimeError("balance condition failed for a symmetric solution")
    std = standard_comodule(C).pushforward(Q)
    back = r_sigma(std, dm)
    if back != R:
        raise RuntimeError("strong D-map does not regenerate R")
    return Q, dm


def convolution_inverse_of_sigma(R: EndoPair) -> BilinearForm:
    """sigma' with sigma * sigma' = sigma' * sigma = eps (x) eps~, built from
    the coefficients of R^{-1}."""
    require_solution(R)
    dm = sigma_from_r(R)
    Rinv = invert(R)
    if Rinv is None:
        raise MathError("operator is not bijective; sigma has no convolution inverse")
    k = R.field
    C, Q = dm.coalgebra, dm.quotient
    table0 = _sigma0_table(Rinv)
    _check_kills_right(table0, dm.ideal, "sigma'")
    table = [[table0[a][c] for c in Q.section_cols] for a in range(C.dim)]
    prime = BilinearForm(C, Q, table)
    unit = counit_form(C, Q)
    if convolve(dm.sigma, prime) != unit or convolve(prime, dm.sigma) != unit:
        raise RuntimeError("convolution identities failed for sigma'")
    return prime
