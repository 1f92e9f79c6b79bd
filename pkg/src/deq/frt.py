"""Obstruction elements of an operator R, the coideal I(R), the presented
universal bialgebra D(R), the standard comodule, generator actions, and the
generator-level universal map.

o(i,j,k,l) = sum_v x_kv^ji c_vl - sum_a x_kl^ja c_ia lives in the comatrix
coalgebra; the span of all o's is a coideal I(R), and D(R) is the free
algebra on a basis of comatrix(n)/I(R) with the quotient comultiplication.
"""

from __future__ import annotations

import math

from .coalg import Coalgebra, Coideal, Comodule, coideal, comatrix, quotient
from .fields import MathError, UsageError
from .linalg import Matrix
from .tensor_ops import EndoPair, first_violation, lift


class NotASolutionError(MathError):
    """The operation needs a D-equation solution and R is not one."""

    def __init__(self, where):
        self.where = where
        i, j, k, l, p, q = where
        msg = ("not a D-equation solution: coordinate equation at "
               "(i,j,k,l,p,q)=(%d,%d,%d,%d,%d,%d) fails: "
               "sum_v x_%dv^%d%d x_%d%d^v%d != sum_a x_%d%d^%da x_a%d^%d%d"
               % (i, j, k, l, p, q, k, j, i, l, q, p, k, l, j, q, i, p))
        super().__init__(msg)


def require_solution(R: EndoPair):
    where = first_violation(R)
    if where is not None:
        raise NotASolutionError(where)


class ObstructionSet:
    """All o(i,j,k,l) of R as coefficient vectors in comatrix(n)."""

    def __init__(self, R: EndoPair, C: Coalgebra = None):
        n, k = R.n, R.field
        if C is None:
            C = comatrix(k, n)
        if C.dim != n * n:
            raise UsageError("coalgebra dimension does not match the operator")
        self.endo = R
        self.coalgebra = C
        self.n = n
        x = R.x
        self.vectors = {}
        for i in range(n):
            for j in range(n):
                for kk in range(n):
                    for l in range(n):
                        vec = [k.zero] * (n * n)
                        for v in range(n):
                            vec[v * n + l] = k.add(vec[v * n + l], x[kk][v][j][i])
                        for a in range(n):
                            vec[i * n + a] = k.sub(vec[i * n + a], x[kk][l][j][a])
                        self.vectors[(i + 1, j + 1, kk + 1, l + 1)] = vec

    def vector(self, i, j, k, l):
        """o(i,j,k,l) with 1-based indices."""
        return self.vectors[(i, j, k, l)]

    def items(self):
        return sorted(self.vectors.items())

    def delta_identity_holds(self) -> bool:
        """Delta(o(i,j,k,l)) == sum_u ( o(i,j,k,u)(x)c_ul + c_iu(x)o(u,j,k,l) ),
        an identity valid for every R."""
        C, n, k = self.coalgebra, self.n, self.coalgebra.field
        d = n * n
        for (i, j, kk, l), vec in self.items():
            lhs = C.delta_vector(vec)
            rhs = [k.zero] * (d * d)
            for u in range(1, n + 1):
                left = self.vector(i, j, kk, u)
                cul = (u - 1) * n + (l - 1)
                for b in range(d):
                    if not k.is_zero(left[b]):
                        rhs[b * d + cul] = k.add(rhs[b * d + cul], left[b])
                right = self.vector(u, j, kk, l)
                ciu = (i - 1) * n + (u - 1)
                for c in range(d):
                    if not k.is_zero(right[c]):
                        rhs[ciu * d + c] = k.add(rhs[ciu * d + c], right[c])
            if lhs != rhs:
                return False
        return True


def obstructions(R: EndoPair, C: Coalgebra = None) -> ObstructionSet:
    return ObstructionSet(R, C)


def frt_col_order(n: int):
    """Pivot preference for I(R): off-diagonal labels row-major, then
    diagonal labels in reverse, so relations eliminate c_jk (j != k) and
    high-index diagonals first."""
    off = [j * n + k for j in range(n) for k in range(n) if j != k]
    diag = [j * n + j for j in reversed(range(n))]
    return off + diag


def obstruction_coideal(R: EndoPair, C: Coalgebra = None) -> Coideal:
    """span{o(i,j,k,l)} as a verified coideal of comatrix(n)."""
    obs = ObstructionSet(R, C)
    if not obs.delta_identity_holds():
        raise RuntimeError("obstruction comultiplication identity violated")
    vectors = [vec for _, vec in obs.items()]
    return coideal(obs.coalgebra, vectors, col_order=frt_col_order(R.n))


def standard_comodule(C: Coalgebra) -> Comodule:
    """rho(m_l) = sum_v m_v (x) c_vl on a comatrix coalgebra C."""
    n = math.isqrt(C.dim)
    if n * n != C.dim:
        raise UsageError("standard comodule needs a comatrix coalgebra")
    k = C.field
    rho = [[[k.one if a == w * n + l else k.zero for a in range(C.dim)]
            for w in range(n)] for l in range(n)]
    return Comodule(C, n, rho)


class GeneratorAction:
    """A(c_ju) m_v = sum_i x_uv^ji m_i, extended linearly and to words by
    matrix products in word order."""

    def __init__(self, R: EndoPair):
        n, k = R.n, R.field
        self.n = n
        self.field = k
        self.matrices = []
        for j in range(n):
            for u in range(n):
                rows = [[R.x[u][v][j][i] for v in range(n)] for i in range(n)]
                self.matrices.append(Matrix(k, rows, coerce=False))

    def of_basis(self, j, u) -> Matrix:
        """A(c_ju), 1-based indices."""
        return self.matrices[(j - 1) * self.n + (u - 1)]

    def of_vector(self, vec) -> Matrix:
        out = Matrix.zeros(self.field, self.n, self.n)
        for m, coeff in enumerate(vec):
            if not self.field.is_zero(coeff):
                out = out.add(self.matrices[m].scale(coeff))
        return out

    def of_word(self, indices) -> Matrix:
        out = Matrix.identity(self.field, self.n)
        for m in indices:
            out = out @ self.matrices[m]
        return out


def generator_action(R: EndoPair) -> GeneratorAction:
    return GeneratorAction(R)


def annihilation_check(R: EndoPair) -> bool:
    """True iff every obstruction acts as zero on M."""
    act = GeneratorAction(R)
    obs = ObstructionSet(R)
    return all(act.of_vector(vec).is_zero() for _, vec in obs.items())


def defect_pairing(R: EndoPair, j, k, l):
    """sum c_jk.(m_l)_0 (x) (m_l)_1 - rho(c_jk.m_l) as an M x C table; equals
    sum_i m_i (x) o(i,j,k,l) for every R (asserted)."""
    n, f = R.n, R.field
    if not (1 <= j <= n and 1 <= k <= n and 1 <= l <= n):
        raise UsageError("index out of range")
    x = R.x
    j0, k0, l0 = j - 1, k - 1, l - 1
    d = n * n
    table = [[f.zero] * d for _ in range(n)]
    for v in range(n):
        for i in range(n):
            c = x[k0][v][j0][i]
            if not f.is_zero(c):
                table[i][v * n + l0] = f.add(table[i][v * n + l0], c)
    for i in range(n):
        c = x[k0][l0][j0][i]
        if f.is_zero(c):
            continue
        for w in range(n):
            table[w][w * n + i] = f.sub(table[w][w * n + i], c)
    obs = ObstructionSet(R)
    expect = [obs.vector(i + 1, j, k, l) for i in range(n)]
    if table != expect:
        raise RuntimeError("defect pairing identity violated")
    return table


def d_identity(R: EndoPair, w, k, j):
    """(R23 R12 - R12 R23)(w (x) m_k (x) m_j) as a length-n^3 vector; equals
    sum_{r,s} A(o(r,s,j,k)) w (x) m_r (x) m_s for every R (asserted)."""
    n, f = R.n, R.field
    if not (1 <= k <= n and 1 <= j <= n):
        raise UsageError("index out of range")
    w = [f.coerce(c) for c in w]
    if len(w) != n:
        raise UsageError("vector length does not match the operator")
    r12 = lift(R, 12)
    r23 = lift(R, 23)
    diff = r23 @ r12
    diff = diff.sub(r12 @ r23)
    vin = [f.zero] * (n ** 3)
    for a in range(n):
        vin[a * n * n + (k - 1) * n + (j - 1)] = w[a]
    lhs = diff.apply(vin)
    obs = ObstructionSet(R)
    act = GeneratorAction(R)
    rhs = [f.zero] * (n ** 3)
    for r in range(n):
        for s in range(n):
            img = act.of_vector(obs.vector(r + 1, s + 1, j, k)).apply(w)
            for a in range(n):
                rhs[a * n * n + r * n + s] = img[a]
    if lhs != rhs:
        raise RuntimeError("second defect identity violated")
    return lhs


def _coeff_term(field, coeff, label):
    """Render coeff*label with sign split off: returns (sign, text)."""
    mag = field.show(coeff)
    sign = "+"
    if mag.startswith("-"):
        sign, mag = "-", mag[1:]
    if mag == "1":
        return sign, label
    if any(ch in mag for ch in " +-"):
        mag = "(%s)" % mag
    return sign, "%s*%s" % (mag, label)


def _combo_text(field, pairs):
    """Signed sum of (coeff, label) terms."""
    out = ""
    for idx, (coeff, label) in enumerate(pairs):
        sign, text = _coeff_term(field, coeff, label)
        if idx == 0:
            out = ("-" if sign == "-" else "") + text
        else:
            out += " %s %s" % (sign, text)
    return out if out else "0"


def relation_strings(I: Coideal):
    """One line per reduced relation: pivot term first, the rest in
    row-major label order, '= 0' suffix."""
    C, k = I.parent, I.parent.field
    lines = []
    for row, piv in zip(I.basis, I.pivots):
        order = [piv] + [a for a in range(C.dim)
                         if a != piv and not k.is_zero(row[a])]
        pairs = [(row[a], C.labels[a]) for a in order]
        lines.append(_combo_text(k, pairs) + " = 0")
    return lines


def delta_string(Q: Coalgebra, b: int) -> str:
    """Sweedler-style text for Delta of the b-th basis element of Q."""
    k = Q.field
    pairs = []
    for p in range(Q.dim):
        for q in range(Q.dim):
            c = Q.mu[b][p][q]
            if not k.is_zero(c):
                pairs.append((c, "%s(x)%s" % (Q.labels[p], Q.labels[q])))
    return "Delta(%s) = %s" % (Q.labels[b], _combo_text(k, pairs))


class FrtPresentation:
    """D(R) presented as the free algebra on a basis of comatrix(n)/I(R)."""

    kind = "presentation"

    def __init__(self, R: EndoPair):
        require_solution(R)
        self.endo = R
        self.field = R.field
        self.n = R.n
        self.coalgebra = comatrix(R.field, R.n)
        self.ideal = obstruction_coideal(R, self.coalgebra)
        self.quotient = quotient(self.coalgebra, self.ideal)
        self.relations = relation_strings(self.ideal)
        self.action = GeneratorAction(R)

    @property
    def generators(self):
        return self.quotient.labels

    def generator_matrices(self):
        """Action of each quotient-basis generator on the standard module."""
        return [self.action.of_vector(self.quotient.lift(
                    [self.field.one if b == b2 else self.field.zero
                     for b2 in range(self.quotient.dim)]))
                for b in range(self.quotient.dim)]

    def generator_lines(self):
        """Delta and eps of every generator, as text."""
        Q = self.quotient
        lines = []
        for b in range(Q.dim):
            lines.append(delta_string(Q, b))
            lines.append("eps(%s) = %s" % (Q.labels[b], Q.field.show(Q.counit[b])))
        return lines

    def canonical_dimodule(self):
        """The standard module and comodule on M, as a Long dimodule over
        this presentation."""
        from .dimodule import LongDimodule
        std = standard_comodule(self.coalgebra)
        return LongDimodule(self, self.generator_matrices(),
                            std.pushforward(self.quotient))

    def __repr__(self):
        return ("FrtPresentation(n=%d, dim I=%d, generators=%s)"
                % (self.n, self.ideal.dim, ",".join(self.generators)))


def d_bialgebra(R: EndoPair) -> FrtPresentation:
    """The universal bialgebra presentation for a D-equation solution."""
    return FrtPresentation(R)


def _host_coalgebra(H):
    """Coalgebra-of-generators view of a bialgebra or presentation host."""
    if getattr(H, "kind", None) == "presentation":
        return H.quotient
    return H.gen_coalgebra()


def universal_map(R: EndoPair, H, realization):
    """Generator assignment c~_ij -> c'_ij of the unique bialgebra map
    D(R) -> H induced by a realization of R as a dimodule over H, or None
    when the realization does not reproduce R."""
    from .dimodule import r_from_dimodule
    n, k = R.n, R.field
    if realization.dim != n:
        raise UsageError("realization dimension does not match the operator")
    if r_from_dimodule(realization) != R:
        return None
    HC = _host_coalgebra(H)
    if realization.coalgebra is not HC and realization.coalgebra.dim != HC.dim:
        raise UsageError("realization does not live over the given host")
    dH = HC.dim
    cprime = {(i + 1, j + 1): list(realization.rho[j][i])
              for i in range(n) for j in range(n)}
    # relations map to zero: o'(i,j,k,l) = 0 in H
    x = R.x
    for i in range(n):
        for j in range(n):
            for kk in range(n):
                for l in range(n):
                    vec = [k.zero] * dH
                    for v in range(n):
                        c = x[kk][v][j][i]
                        if not k.is_zero(c):
                            cv = cprime[(v + 1, l + 1)]
                            vec = [k.add(vec[t], k.mul(c, cv[t])) for t in range(dH)]
                    for a in range(n):
                        c = x[kk][l][j][a]
                        if not k.is_zero(c):
                            ca = cprime[(i + 1, a + 1)]
                            vec = [k.sub(vec[t], k.mul(c, ca[t])) for t in range(dH)]
                    if any(not k.is_zero(t) for t in vec):
                        raise RuntimeError("obstruction image nonzero in host")
    # the assignment factors through the quotient and matches the coaction
    pres = d_bialgebra(R)
    Q = pres.quotient
    gen_images = [cprime[(c // n + 1, c % n + 1)] for c in Q.section_cols]
    for i in range(n):
        for j in range(n):
            e = [k.one if a == i * n + j else k.zero for a in range(n * n)]
            coords = Q.project(e)
            img = [k.sum(k.mul(coords[b], gen_images[b][t])
                         for b in range(Q.dim)) for t in range(dH)]
            if img != cprime[(i + 1, j + 1)]:
                raise RuntimeError("assignment does not match the coaction")
    # Delta and eps respected on generators
    for b in range(Q.dim):
        g = gen_images[b]
        lhs = [[k.zero] * dH for _ in range(dH)]
        for a, va in enumerate(g):
            if k.is_zero(va):
                continue
            for p in range(dH):
                for q in range(dH):
                    m = HC.mu[a][p][q]
                    if not k.is_zero(m):
                        lhs[p][q] = k.add(lhs[p][q], k.mul(va, m))
        rhs = [[k.zero] * dH for _ in range(dH)]
        for p in range(Q.dim):
            for q in range(Q.dim):
                c = Q.mu[b][p][q]
                if k.is_zero(c):
                    continue
                for s in range(dH):
                    if k.is_zero(gen_images[p][s]):
                        continue
                    for t in range(dH):
                        w = k.mul(c, k.mul(gen_images[p][s], gen_images[q][t]))
                        rhs[s][t] = k.add(rhs[s][t], w)
        if lhs != rhs:
            raise RuntimeError("comultiplication not respected on generators")
        if k.dot(HC.counit, g) != Q.counit[b]:
            raise RuntimeError("counit not respected on generators")
    return cprime
