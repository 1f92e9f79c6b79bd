"""Finite-dimensional coalgebras by structure constants, coideals, quotients,
comodules, and the convolution algebra of scalar bilinear forms.

Delta(e_a) = sum_{b,c} mu[a][b][c] e_b (x) e_c, counit eps[a]. Tensor-square
coordinates are flattened as (b, c) -> b*d + c.
"""

from __future__ import annotations

from .fields import Field, UsageError
from .linalg import Matrix, matrix_inverse, reduce_against, rref, span_and_membership


class Coalgebra:
    """Structure-constant coalgebra; axioms are verified at construction."""

    def __init__(self, field: Field, labels, delta, counit, check: bool = True):
        d = len(labels)
        if d < 1:
            raise UsageError("coalgebra dimension must be positive")
        self.field = field
        self.labels = list(labels)
        self.dim = d
        self.mu = [[[field.coerce(delta[a][b][c]) for c in range(d)] for b in range(d)]
                   for a in range(d)]
        self.counit = [field.coerce(counit[a]) for a in range(d)]
        if check:
            self._check_axioms()

    def _check_axioms(self):
        k, d, mu, eps = self.field, self.dim, self.mu, self.counit
        rng = range(d)
        for a in rng:
            for r in rng:
                for s in rng:
                    for t in rng:
                        lhs = k.sum(k.mul(mu[a][b][t], mu[b][r][s]) for b in rng)
                        rhs = k.sum(k.mul(mu[a][r][c], mu[c][s][t]) for c in rng)
                        if lhs != rhs:
                            raise UsageError(
                                "not coassociative at (%s; %s,%s,%s)"
                                % (self.labels[a], self.labels[r], self.labels[s], self.labels[t]))
        for a in rng:
            for c in rng:
                want = k.one if a == c else k.zero
                left = k.sum(k.mul(mu[a][b][c], eps[b]) for b in rng)
                right = k.sum(k.mul(mu[a][c][b], eps[b]) for b in rng)
                if left != want or right != want:
                    raise UsageError("counit law fails at %s" % self.labels[a])

    def delta_vector(self, vec):
        """Delta applied to a coefficient vector, flattened to length dim^2."""
        k, d, mu = self.field, self.dim, self.mu
        out = [k.zero] * (d * d)
        for a, va in enumerate(vec):
            if k.is_zero(va):
                continue
            row = mu[a]
            for b in range(d):
                for c in range(d):
                    if not k.is_zero(row[b][c]):
                        out[b * d + c] = k.add(out[b * d + c], k.mul(va, row[b][c]))
        return out

    def counit_of(self, vec):
        return self.field.dot(self.counit, vec)

    def is_cocommutative(self) -> bool:
        d = self.dim
        return all(self.mu[a][b][c] == self.mu[a][c][b]
                   for a in range(d) for b in range(d) for c in range(d))

    def __repr__(self):
        return "Coalgebra(dim=%d, %r)" % (self.dim, self.field)


def comatrix(field, n: int) -> Coalgebra:
    """The comatrix coalgebra of order n: Delta(c_jk) = sum_u c_ju (x) c_uk."""
    if not 1 <= n <= 9:
        raise UsageError("comatrix order must be in 1..9 (labels are two digits)")
    d = n * n
    labels = ["c%d%d" % (j + 1, k + 1) for j in range(n) for k in range(n)]
    idx = lambda j, k: j * n + k
    z, o = field.zero, field.one
    mu = [[[z] * d for _ in range(d)] for _ in range(d)]
    eps = [z] * d
    for j in range(n):
        for k in range(n):
            for u in range(n):
                mu[idx(j, k)][idx(j, u)][idx(u, k)] = o
            if j == k:
                eps[idx(j, k)] = o
    return Coalgebra(field, labels, mu, eps)


def comatrix_index(n, j, k) -> int:
    """Basis position of c_jk (1-based j, k) in comatrix(n)."""
    return (j - 1) * n + (k - 1)


def grouplike_coalgebra(field, labels) -> Coalgebra:
    """k[X]: every basis label is grouplike."""
    labels = list(labels)
    if not labels:
        raise UsageError("label set must be nonempty")
    d = len(labels)
    z, o = field.zero, field.one
    mu = [[[z] * d for _ in range(d)] for _ in range(d)]
    for a in range(d):
        mu[a][a][a] = o
    return Coalgebra(field, labels, mu, [o] * d)


class Coideal:
    """A verified coideal: reduced basis, its pivots, and the column order used."""

    def __init__(self, parent: Coalgebra, basis, pivots, col_order):
        self.parent = parent
        self.basis = basis
        self.pivots = pivots
        self.col_order = col_order

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, vec):
        k = self.parent.field
        vec = [k.coerce(v) for v in vec]
        return all(k.is_zero(v) for v in reduce_against(vec, self.basis, self.pivots, k))


def _coideal_failure(C: Coalgebra, basis):
    """None when span(basis) is a coideal, else a reason string."""
    k, d = C.field, C.dim
    for v in basis:
        if not k.is_zero(C.counit_of(v)):
            return "counit does not vanish on %s" % _show_combo(C, v)
    # span of I (x) C + C (x) I inside C (x) C
    gens = []
    for v in basis:
        for a in range(d):
            left = [k.zero] * (d * d)
            right = [k.zero] * (d * d)
            for b in range(d):
                left[b * d + a] = v[b]
                right[a * d + b] = v[b]
            gens.append(left)
            gens.append(right)
    _, inside = span_and_membership(gens, k, dim=d * d)
    for v in basis:
        if not inside(C.delta_vector(v)):
            return "Delta(%s) leaves I(x)C + C(x)I" % _show_combo(C, v)
    return None


def is_coideal(C: Coalgebra, vectors) -> bool:
    k = C.field
    vecs = [[k.coerce(x) for x in v] for v in vectors]
    basis, _ = rref(vecs, k)
    return _coideal_failure(C, basis) is None


def coideal(C: Coalgebra, vectors, col_order=None) -> Coideal:
    """Span the vectors, verify the coideal conditions, return the Coideal."""
    k = C.field
    vecs = [[k.coerce(x) for x in v] for v in vectors]
    basis, pivots = rref(vecs, k, col_order=col_order)
    reason = _coideal_failure(C, basis)
    if reason is not None:
        raise UsageError("not a coideal: %s" % reason)
    order = list(range(C.dim)) if col_order is None else list(col_order)
    return Coideal(C, basis, pivots, order)


def _show_combo(C: Coalgebra, vec) -> str:
    """Render a coefficient vector over C's labels, pivot-style formatting."""
    k = C.field
    terms = []
    for a, v in enumerate(vec):
        if k.is_zero(v):
            continue
        mag = k.show(v)
        sign = "+"
        if mag.startswith("-"):
            sign, mag = "-", mag[1:]
        head = C.labels[a] if mag == "1" else "%s*%s" % (mag, C.labels[a])
        terms.append((sign, head))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, head in terms[1:]:
        out += " %s %s" % (sign, head)
    return out


class QuotientCoalgebra(Coalgebra):
    """C/I with a chosen section; a genuine Coalgebra on the complement labels."""

    def __init__(self, parent: Coalgebra, ideal: Coideal, complement=None):
        k, d = parent.field, parent.dim
        rank = ideal.dim
        if complement is None:
            complement = [c for c in range(d) if c not in ideal.pivots]
        complement = list(complement)
        if len(complement) != d - rank:
            raise UsageError("complement has wrong size")
        cols = [list(v) for v in ideal.basis] + \
               [[k.one if a == c else k.zero for a in range(d)] for c in complement]
        B = Matrix(k, cols, coerce=False).transpose()
        Binv = matrix_inverse(B)
        if Binv is None:
            raise UsageError("complement does not complement the coideal")
        q = d - rank
        if q == 0:
            raise UsageError("coideal exhausts the coalgebra")
        proj_rows = Binv.rows[rank:]
        self.parent = parent
        self.ideal = ideal
        self.complement = complement
        self.proj = Matrix(k, proj_rows, coerce=False)
        self.section_cols = complement
        labels = [parent.labels[c] + "~" for c in complement]
        mu = []
        eps = []
        for c in complement:
            lifted = [k.one if a == c else k.zero for a in range(d)]
            dv = parent.delta_vector(lifted)
            # (proj (x) proj) Delta
            table = [[k.zero] * q for _ in range(q)]
            for b in range(d):
                for c2 in range(d):
                    v = dv[b * d + c2]
                    if k.is_zero(v):
                        continue
                    for bb in range(q):
                        pb = proj_rows[bb][b]
                        if k.is_zero(pb):
                            continue
                        for cc in range(q):
                            pc = proj_rows[cc][c2]
                            if not k.is_zero(pc):
                                table[bb][cc] = k.add(table[bb][cc], k.mul(v, k.mul(pb, pc)))
            mu.append(table)
            eps.append(parent.counit_of(lifted))
        super().__init__(k, labels, mu, eps, check=True)
        self._check_projection_compat()

    def project(self, vec):
        """pi applied to a parent coefficient vector."""
        return self.proj.apply([self.field.coerce(v) for v in vec])

    def lift(self, qvec):
        """Section: quotient coefficients back to parent coordinates."""
        k, d = self.field, self.parent.dim
        out = [k.zero] * d
        for b, c in enumerate(self.section_cols):
            out[c] = k.add(out[c], k.coerce(qvec[b]))
        return out

    def _check_projection_compat(self):
        """(pi (x) pi) Delta == Delta-bar pi on every parent basis element."""
        k, d, q = self.field, self.parent.dim, self.dim
        for a in range(d):
            e = [k.one if i == a else k.zero for i in range(d)]
            dv = self.parent.delta_vector(e)
            lhs = [[k.zero] * q for _ in range(q)]
            for b in range(d):
                for c in range(d):
                    v = dv[b * d + c]
                    if k.is_zero(v):
                        continue
                    for bb in range(q):
                        for cc in range(q):
                            w = k.mul(self.proj.rows[bb][b], self.proj.rows[cc][c])
                            if not k.is_zero(w):
                                lhs[bb][cc] = k.add(lhs[bb][cc], k.mul(v, w))
            pv = self.project(e)
            rhs = [[k.zero] * q for _ in range(q)]
            for b, vb in enumerate(pv):
                if k.is_zero(vb):
                    continue
                for bb in range(q):
                    for cc in range(q):
                        rhs[bb][cc] = k.add(rhs[bb][cc], k.mul(vb, self.mu[b][bb][cc]))
            if lhs != rhs:
                raise UsageError("quotient structure is not section-independent")


def quotient(C: Coalgebra, I: Coideal, complement=None) -> QuotientCoalgebra:
    if I.parent is not C:
        raise UsageError("coideal belongs to a different coalgebra")
    return QuotientCoalgebra(C, I, complement=complement)


class Comodule:
    """Right C-comodule on k^dim: rho(m_l) = sum_{w,a} rho[l][w][a] m_w (x) e_a."""

    def __init__(self, C: Coalgebra, dim: int, rho, check: bool = True):
        k = C.field
        self.coalgebra = C
        self.dim = dim
        self.rho = [[[k.coerce(rho[l][w][a]) for a in range(C.dim)] for w in range(dim)]
                    for l in range(dim)]
        if check:
            self._check_axioms()

    def _check_axioms(self):
        k, C, m, rho = self.coalgebra.field, self.coalgebra, self.dim, self.rho
        d = C.dim
        for l in range(m):
            for w in range(m):
                want = k.one if w == l else k.zero
                if k.sum(k.mul(rho[l][w][a], C.counit[a]) for a in range(d)) != want:
                    raise UsageError("comodule counit law fails at m_%d" % (l + 1))
        for l in range(m):
            for w2 in range(m):
                for b in range(d):
                    for a in range(d):
                        lhs = k.sum(k.mul(rho[l][w][a], rho[w][w2][b]) for w in range(m))
                        rhs = k.sum(k.mul(rho[l][w2][c], C.mu[c][b][a]) for c in range(d))
                        if lhs != rhs:
                            raise UsageError("comodule coassociativity fails at m_%d" % (l + 1))

    def coact(self, vec):
        """rho of a module coefficient vector: m x C table of coefficients."""
        k, d = self.coalgebra.field, self.coalgebra.dim
        out = [[k.zero] * d for _ in range(self.dim)]
        for l, vl in enumerate(vec):
            if k.is_zero(vl):
                continue
            for w in range(self.dim):
                for a in range(d):
                    r = self.rho[l][w][a]
                    if not k.is_zero(r):
                        out[w][a] = k.add(out[w][a], k.mul(vl, r))
        return out

    def pushforward(self, Q: QuotientCoalgebra) -> "Comodule":
        """(I (x) pi) rho: the induced comodule over C/I."""
        if Q.parent is not self.coalgebra:
            raise UsageError("quotient of a different coalgebra")
        k = Q.field
        rho = [[Q.project(self.rho[l][w]) for w in range(self.dim)] for l in range(self.dim)]
        return Comodule(Q, self.dim, rho)


class BilinearForm:
    """Scalar table phi[a][b] on C (x) D basis pairs; D may be a quotient."""

    def __init__(self, left: Coalgebra, right: Coalgebra, table):
        k = left.field
        if right.field != k:
            raise UsageError("mixed fields in a bilinear form")
        self.left = left
        self.right = right
        self.table = [[k.coerce(table[a][b]) for b in range(right.dim)]
                      for a in range(left.dim)]

    def __call__(self, a, b):
        return self.table[a][b]

    def __eq__(self, other):
        return (isinstance(other, BilinearForm) and self.left is other.left
                and self.right is other.right and self.table == other.table)


def counit_form(left: Coalgebra, right: Coalgebra) -> BilinearForm:
    """The convolution unit eps (x) eps."""
    k = left.field
    return BilinearForm(left, right, [[k.mul(ea, eb) for eb in right.counit]
                                      for ea in left.counit])


def convolve(phi: BilinearForm, psi: BilinearForm) -> BilinearForm:
    """(phi * psi)(c (x) d) = sum phi(c1 (x) d1) psi(c2 (x) d2)."""
    if phi.left is not psi.left or phi.right is not psi.right:
        raise UsageError("convolution needs forms on the same coalgebra pair")
    C, D, k = phi.left, phi.right, phi.left.field
    out = [[k.zero] * D.dim for _ in range(C.dim)]
    for a in range(C.dim):
        for b in range(D.dim):
            acc = k.zero
            for a1 in range(C.dim):
                for a2 in range(C.dim):
                    ma = C.mu[a][a1][a2]
                    if k.is_zero(ma):
                        continue
                    for b1 in range(D.dim):
                        for b2 in range(D.dim):
                            mb = D.mu[b][b1][b2]
                            if k.is_zero(mb):
                                continue
                            term = k.mul(k.mul(ma, mb),
                                         k.mul(phi.table[a1][b1], psi.table[a2][b2]))
                            acc = k.add(acc, term)
            out[a][b] = acc
    return BilinearForm(C, D, out)


def convolution_inverse(phi: BilinearForm):
    """Two-sided convolution inverse, or None; found by one exact linear solve."""
    C, D, k = phi.left, phi.right, phi.left.field
    nC, nD = C.dim, D.dim
    unknowns = nC * nD
    rows = []
    rhs = []
    for a in range(nC):
        for b in range(nD):
            row = [k.zero] * unknowns
            for a1 in range(nC):
                for c in range(nC):
                    ma = C.mu[a][a1][c]
                    if k.is_zero(ma):
                        continue
                    for b1 in range(nD):
                        for e in range(nD):
                            mb = D.mu[b][b1][e]
                            if k.is_zero(mb):
                                continue
                            coeff = k.mul(k.mul(ma, mb), phi.table[a1][b1])
                            if not k.is_zero(coeff):
                                row[c * nD + e] = k.add(row[c * nD + e], coeff)
            rows.append(row)
            rhs.append(k.mul(C.counit[a], D.counit[b]))
    from .linalg import solve_linear
    sol = solve_linear(Matrix(k, rows, coerce=False), rhs)
    if sol is None:
        return None
    psi = BilinearForm(C, D, [[sol[c * nD + e] for e in range(nD)] for c in range(nC)])
    unit = counit_form(C, D)
    if convolve(phi, psi) != unit or convolve(psi, phi) != unit:
        raise RuntimeError("one-sided convolution inverse failed to be two-sided")
    return psi
