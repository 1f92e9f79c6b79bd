import random

import numpy as np
import pytest

from deq import catalog
from deq.classify import (defect_identity_mask, annihilation_mask, block_matrices,
                          candidate_block, coordinate_mask, digits_from_endo,
                          digits_of, endo_from_digits, enumerate_range,
                          enumerate_solutions, gl_matrices, merge_ranges,
                          operator_count, operator_mask, orbit_reduce,
                          delta_identity_mask, qybe_mask, random_block, symmetric_mask)
from deq.dmap import first_symmetry_violation
from deq.fields import PrimeField, UsageError
from deq.tensor_ops import check_d, check_qybe


def block_from_digit_rows(rows, n, p):
    """Stack serialized operators into a candidate-style x block."""
    xs = np.array([list(r) for r in rows], dtype=np.int64) % p
    return xs.reshape(len(rows), n, n, n, n).transpose(0, 4, 3, 2, 1)


def test_candidate_block_serialization():
    x = candidate_block(2, 2, 5, 6)
    # serial 5 in base 2 over 16 big-endian digits
    want = [0] * 12 + [0, 1, 0, 1]
    assert digits_of(x)[0].tolist() == want
    R = endo_from_digits(2, 2, want)
    assert digits_from_endo(R) == tuple(want)
    # block matrices equal the exact operator matrix entry by entry
    mat = block_matrices(x)[0]
    exact = R.matrix()
    k = R.field
    for r in range(4):
        for c in range(4):
            assert k.coerce(int(mat[r][c])) == exact.rows[r][c]


def test_candidate_blocks_are_lexicographic():
    x = candidate_block(2, 3, 100, 140)
    d = digits_of(x)
    for t in range(d.shape[0] - 1):
        assert tuple(d[t]) < tuple(d[t + 1])


def test_masks_agree_with_scalar_checks():
    k = PrimeField(5)
    rng = random.Random(20260817)
    rows = [[rng.randrange(5) for _ in range(16)] for _ in range(30)]
    rows.append(list(digits_from_endo(catalog.triangular_solution(k, 1, 2, 3))))
    rows.append(list(digits_from_endo(catalog.yang_baxter_operator(k, 2))))
    rows.append(list(digits_from_endo(catalog.triangular_solution(k, 1, 2, 2))))
    x = block_from_digit_rows(rows, 2, 5)
    co = coordinate_mask(x, 5)
    op = operator_mask(x, 5)
    qy = qybe_mask(x, 5)
    sy = symmetric_mask(x)
    for t, row in enumerate(rows):
        R = endo_from_digits(2, 5, row)
        assert bool(co[t]) == check_d(R)
        assert bool(op[t]) == check_d(R)
        assert bool(qy[t]) == check_qybe(R)
        assert bool(sy[t]) == (first_symmetry_violation(R) is None)
    # the embedded cases exercise all verdict shapes
    assert co[-3] and qy[-3], "triangular_solution solves both equations"
    assert not co[-2] and qy[-2], "yb operator is qybe only"
    assert sy[-1] and not sy[-2]


def test_obstruction_identities_hold_for_all_operators():
    """The delta and defect identities hold for the comatrix coefficients of
    every operator; annihilation is the solution criterion."""
    for n, p, count in ((2, 5, 200), (3, 3, 40)):
        x = random_block(n, p, count, seed=7)
        assert delta_identity_mask(x, p).all()
        assert defect_identity_mask(x, p).all()
    x = random_block(2, 5, 300, seed=8)
    ann = annihilation_mask(x, 5)
    co = coordinate_mask(x, 5)
    assert (ann == co).all()


def test_random_block_determinism():
    a = random_block(2, 5, 20, seed=3)
    b = random_block(2, 5, 20, seed=3)
    assert (a == b).all()
    assert a.min() >= 0 and a.max() < 5


def test_census_counts_over_f2():
    report = enumerate_solutions(2, 2)
    assert report.total == 65536
    assert report.count == 100
    assert report.bijective == 30
    assert report.symmetric == 44
    assert report.qybe == 100
    kv = dict(report.to_kv())
    assert kv["field"] == "F 2" and kv["solutions"] == "100"
    text = report.to_text()
    assert text.count("\nsolution ") == 100
    # solutions come out ascending and are genuine
    sols = report.solutions
    assert sols == sorted(sols)
    assert check_d(endo_from_digits(2, 2, sols[37]))


def test_two_path_agreement():
    """Coordinate equations and operator composition count the same set."""
    assert operator_count(2, 2) == 100


def test_worker_split_is_deterministic():
    one = enumerate_solutions(2, 2, workers=1)
    three = enumerate_solutions(2, 2, workers=3, chunk=10000)
    assert one.solutions == three.solutions
    assert one.to_kv() == three.to_kv()


def test_budget_refusal():
    with pytest.raises(UsageError, match="budget"):
        enumerate_solutions(2, 3)
    with pytest.raises(UsageError, match="budget"):
        enumerate_solutions(3, 2)
    with pytest.raises(UsageError, match="budget"):
        enumerate_solutions(2, 2, limit=1000)
    with pytest.raises(UsageError):
        enumerate_solutions(2, 4)
    with pytest.raises(UsageError):
        enumerate_solutions(2, 2, workers=0)


def test_enumerate_range_split_and_merge():
    full = enumerate_range(2, 2, 0, 65536)
    lo = enumerate_range(2, 2, 0, 30000)
    hi = enumerate_range(2, 2, 30000, 65536)
    assert merge_ranges([hi, lo]) == full
    assert len(full) == 100


def test_gl_matrices_order():
    assert len(gl_matrices(2, 2)) == 6
    assert len(gl_matrices(2, 3)) == 48


def test_orbit_partition_of_the_census():
    report = enumerate_solutions(2, 2)
    orbits = orbit_reduce(report.solutions, 2, 2)
    assert len(orbits) == 32
    assert sum(size for _, size in orbits) == 100
    reps = [rep for rep, _ in orbits]
    assert reps == sorted(reps)
    pool = set(report.solutions)
    for rep, size in orbits:
        assert rep in pool
        assert 1 <= size <= 6


def test_orbit_reduce_rejects_non_closed_input():
    k = PrimeField(2)
    sol = digits_from_endo(catalog.triangular_solution(k, 1, 1, 1))
    with pytest.raises(UsageError, match="missing"):
        orbit_reduce([sol], 2, 2)
