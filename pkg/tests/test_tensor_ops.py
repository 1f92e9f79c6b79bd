import os
import random

import pytest

from deq import catalog
from deq.fields import FunctionField, PrimeField, QQ, UsageError
from deq.linalg import Matrix, matrix_inverse
from deq.tensor_ops import (EndoPair, check_commuting_pair, check_d,
                            check_equivalent_forms, check_hopf,
                            check_pentagon, check_qybe, conjugate,
                            diagonal_solution, first_violation, flip_pair,
                            identity_pair, invert, lift, product_solution,
                            tau_matrix)


def rand_matrix(field, rng, n):
    return Matrix(field, [[field.random(rng) for _ in range(n)]
                          for _ in range(n)])


def rand_pair(field, rng, n):
    return EndoPair.from_matrix(rand_matrix(field, rng, n * n))


def test_coeff_matches_matrix_entry():
    # mat[(i-1)n + (j-1)][(v-1)n + (u-1)] = x_uv^ji
    k = PrimeField(7)
    rng = random.Random(1)
    R = rand_pair(k, rng, 2)
    m = R.matrix()
    n = 2
    for u in range(1, 3):
        for v in range(1, 3):
            for j in range(1, 3):
                for i in range(1, 3):
                    row = (i - 1) * n + (j - 1)
                    col = (v - 1) * n + (u - 1)
                    assert R.coeff(u, v, j, i) == m.rows[row][col]


def test_triangular_scalar_table_matches_kronecker():
    k = QQ
    a, b, c = k.coerce(2), k.coerce(3), k.coerce(5)
    R = catalog.triangular_solution(k, 2, 3, 5)
    table = catalog.triangular_scalar_table(k, 2, 3, 5)
    for u in range(1, 3):
        for v in range(1, 3):
            for j in range(1, 3):
                for i in range(1, 3):
                    want = table.get((u, v, j, i), k.zero)
                    assert R.coeff(u, v, j, i) == want, (u, v, j, i)


def test_identity_and_flip():
    k = QQ
    assert check_d(identity_pair(k, 2))
    assert check_qybe(flip_pair(k, 2))
    assert not check_d(flip_pair(k, 2))


def test_triangular_solution_satisfies_d_and_qybe():
    k = FunctionField(["a", "b", "c"])
    a, b, c = k.gens
    R = catalog.triangular_solution(k, a, b, c)
    assert check_d(R)
    assert check_qybe(R)


def test_rq_satisfies_d_and_hopf():
    k = FunctionField(["q"])
    (q,) = k.gens
    R = catalog.rq(k, q)
    assert check_d(R)
    assert check_hopf(R)


def test_yang_baxter_operator_qybe_not_d():
    k = FunctionField(["q"])
    (q,) = k.gens
    R = catalog.yang_baxter_operator(k, q)
    assert check_qybe(R)
    assert not check_d(R)
    R2 = catalog.yang_baxter_operator(QQ, 2)
    assert check_qybe(R2)
    assert not check_d(R2)


def test_yang_baxter_operator_rejects_zero():
    with pytest.raises(UsageError):
        catalog.yang_baxter_operator(QQ, 0)


def test_block_family_verdicts():
    k = QQ
    assert check_d(catalog.block_family(k, 1, 1, 0, 0, 1, 1))
    assert not check_d(catalog.block_family(k, 1, 1, 1, 0, 1, 1))
    assert not check_d(catalog.block_family(k, 1, 1, 0, 1, 1, 1))


def test_product_solution_iff_commuting():
    k = PrimeField(5)
    rng = random.Random(2)
    seen_true = seen_false = 0
    for _ in range(200):
        f = rand_matrix(k, rng, 2)
        g = rand_matrix(k, rng, 2)
        want = f.mul(g) == g.mul(f)
        assert check_d(product_solution(f, g)) == want
        seen_true += want
        seen_false += not want
    assert seen_true and seen_false


def test_diagonal_solution_always_solves():
    k = PrimeField(7)
    rng = random.Random(3)
    for _ in range(20):
        a = [[k.random(rng) for _ in range(2)] for _ in range(2)]
        assert check_d(diagonal_solution(k, a))


def test_first_violation_matches_check():
    k = PrimeField(5)
    rng = random.Random(4)
    for _ in range(50):
        R = rand_pair(k, rng, 2)
        assert (first_violation(R) is None) == check_d(R)


def test_check_commuting_pair_is_the_d_check_for_lifts():
    k = PrimeField(5)
    rng = random.Random(5)
    for _ in range(30):
        R = rand_pair(k, rng, 2)
        assert check_commuting_pair(R, R) == check_d(R)


def test_lift_13_is_conjugated_12():
    k = PrimeField(5)
    rng = random.Random(6)
    R = rand_pair(k, rng, 2)
    r12 = lift(R, 12)
    r13 = lift(R, 13)
    # swap of the last two legs conjugates 12 into 13
    n = 2
    rows = []
    for k3 in range(n ** 3):
        a, b, c = k3 // (n * n), (k3 // n) % n, k3 % n
        img = (a * n + c) * n + b
        rows.append((img, k3))
    P = Matrix.zeros(k, n ** 3, n ** 3)
    prows = [list(row) for row in P.rows]
    for img, src in rows:
        prows[img][src] = k.one
    P = Matrix(k, prows)
    assert P @ r12 @ P == r13


def test_lift_rejects_bad_slot():
    with pytest.raises(UsageError):
        lift(identity_pair(QQ, 2), 21)


def test_equivalent_forms_agree_on_randoms():
    k = PrimeField(5)
    rng = random.Random(7)
    for _ in range(60):
        R = rand_pair(k, rng, 2)
        forms = check_equivalent_forms(R)
        assert forms.d == forms.form_t == forms.form_u == forms.form_w


def test_equivalent_forms_symbolic_triangular_solution():
    k = FunctionField(["a", "b", "c"])
    a, b, c = k.gens
    forms = check_equivalent_forms(catalog.triangular_solution(k, a, b, c))
    assert forms == (True, True, True, True)


def test_conjugation_preserves_verdict():
    k = PrimeField(7)
    rng = random.Random(8)
    done = 0
    while done < 25:
        R = rand_pair(k, rng, 2)
        u = rand_matrix(k, rng, 2)
        if matrix_inverse(u) is None:
            continue
        done += 1
        assert check_d(conjugate(R, u)) == check_d(R)


def test_conjugate_rejects_singular():
    k = QQ
    with pytest.raises(UsageError):
        conjugate(identity_pair(k, 2), Matrix(k, [[1, 1], [1, 1]]))


def test_invert_is_inverse_or_none():
    k = PrimeField(5)
    rng = random.Random(9)
    seen = 0
    for _ in range(40):
        R = rand_pair(k, rng, 2)
        S = invert(R)
        if S is None:
            assert matrix_inverse(R.matrix()) is None
            continue
        seen += 1
        assert R.matrix().mul(S.matrix()) == Matrix.identity(k, 4)
    assert seen


def test_pentagon_flip_of_hopf():
    # W = tau R tau satisfies the pentagon equation iff R satisfies Hopf
    k = PrimeField(5)
    rng = random.Random(10)
    for _ in range(30):
        R = rand_pair(k, rng, 2)
        tau = tau_matrix(k, 2)
        W = EndoPair.from_matrix(tau @ R.matrix() @ tau)
        assert check_pentagon(W) == check_hopf(R)


def test_size_guard_env(monkeypatch):
    monkeypatch.setenv("DEQ_MAX_N", "2")
    with pytest.raises(UsageError):
        check_d(identity_pair(QQ, 3))
    monkeypatch.delenv("DEQ_MAX_N")
    assert check_d(identity_pair(QQ, 3))


def test_from_rows_and_field_mismatch():
    k = QQ
    R = EndoPair.from_rows(k, [[1, 0, 0, 0], [0, 1, 0, 0],
                               [0, 0, 1, 0], [0, 0, 0, 1]])
    assert R == identity_pair(k, 2)
    with pytest.raises(UsageError):
        EndoPair.from_rows(k, [[1, 0], [0, 1], [0, 0]])
