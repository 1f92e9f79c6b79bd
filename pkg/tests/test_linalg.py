import random

import pytest

from deq.fields import PrimeField, QQ, UsageError
from deq.linalg import (Matrix, kernel_basis, matrix_inverse, rref,
                        solve_linear, span_and_membership)


def rand_matrix(field, rng, nrows, ncols):
    return Matrix(field, [[field.random(rng) for _ in range(ncols)]
                          for _ in range(nrows)])


def test_matrix_basic_ops():
    k = QQ
    a = Matrix(k, [[1, 2], [3, 4]])
    b = Matrix(k, [[0, 1], [1, 0]])
    assert a.add(b).sub(b) == a
    assert a.mul(Matrix.identity(k, 2)) == a
    assert (a @ b) == Matrix(k, [[2, 1], [4, 3]])
    assert a.transpose().transpose() == a
    assert a.col(1) == [k.coerce(2), k.coerce(4)]


def test_matmul_dimension_mismatch():
    k = QQ
    a = Matrix(k, [[1, 2]])
    with pytest.raises(UsageError):
        a.mul(a)


def test_kron_mixed_product():
    # (A (x) B)(C (x) D) = AC (x) BD
    k = PrimeField(7)
    rng = random.Random(3)
    for _ in range(10):
        a, b, c, d = (rand_matrix(k, rng, 2, 2) for _ in range(4))
        assert a.kron(b).mul(c.kron(d)) == a.mul(c).kron(b.mul(d))


def test_rref_is_reduced_and_idempotent():
    k = QQ
    rng = random.Random(5)
    for _ in range(20):
        rows = [[k.random(rng) for _ in range(4)] for _ in range(3)]
        red, pivots = rref(rows, k)
        for r, p in zip(red, pivots):
            assert r[p] == k.one
            for r2 in red:
                if r2 is not r:
                    assert k.is_zero(r2[p])
        red2, pivots2 = rref([list(r) for r in red], k)
        assert red2 == red and pivots2 == pivots


def test_rref_column_order():
    k = QQ
    rows = [[1, 1, 0], [0, 1, 1]]
    rows = [[k.coerce(v) for v in row] for row in rows]
    _, pivots_default = rref([list(r) for r in rows], k)
    _, pivots_rev = rref([list(r) for r in rows], k, col_order=[2, 1, 0])
    assert pivots_default == [0, 1]
    assert pivots_rev == [2, 1]


def test_solve_linear_consistency():
    k = PrimeField(11)
    rng = random.Random(7)
    for _ in range(25):
        a = rand_matrix(k, rng, 3, 3)
        x = [k.random(rng) for _ in range(3)]
        b = a.apply(x)
        got = solve_linear(a, b)
        assert got is not None
        assert a.apply(got) == b


def test_solve_linear_unsolvable():
    k = QQ
    a = Matrix(k, [[1, 0], [1, 0]])
    assert solve_linear(a, [k.one, k.zero]) is None


def test_kernel_basis_annihilates():
    k = PrimeField(5)
    rng = random.Random(9)
    for _ in range(20):
        a = rand_matrix(k, rng, 2, 4)
        basis = kernel_basis(a)
        # rank-nullity on 4 columns
        _, pivots = rref([list(r) for r in a.rows], k)
        assert len(basis) == 4 - len(pivots)
        zero = [k.zero] * 2
        for v in basis:
            assert a.apply(v) == zero


def test_matrix_inverse_round_trip():
    k = QQ
    rng = random.Random(13)
    found = 0
    while found < 10:
        a = rand_matrix(k, rng, 3, 3)
        inv = matrix_inverse(a)
        if inv is None:
            continue
        found += 1
        assert a.mul(inv) == Matrix.identity(k, 3)
        assert inv.mul(a) == Matrix.identity(k, 3)
    assert matrix_inverse(Matrix(k, [[1, 2], [2, 4]])) is None


def test_span_and_membership():
    k = QQ
    vectors = [[k.coerce(v) for v in row]
               for row in [[1, 0, 1], [0, 1, 1], [1, 1, 2]]]
    basis, contains = span_and_membership(vectors, k)
    assert len(basis) == 2
    assert contains([k.coerce(v) for v in [2, 3, 5]])
    assert not contains([k.coerce(v) for v in [0, 0, 1]])
