import itertools
import random

import pytest

from gaugekit.exact import CyclicElem, gcd_mod
from gaugekit.modmatrix import (
    AttachingMatrix,
    F2Matrix,
    RowOp,
    apply_rowop,
    nonzero_column_count,
    rank_f2,
    reduce_restricted,
    reduce_with_report,
    replay_oplog,
    rowop_orbit,
)

from support import (
    least_positive_generator,
    orbit_of,
    rank_f2_bruteforce,
    subgroup_closure,
)


def rows(B):
    return [list(r) for r in B.entries]


def test_apply_rowop_examples():
    B = AttachingMatrix.from_rows([[1], [0]], 24)
    assert rows(apply_rowop(B, RowOp.add(2, 1))) == [[1], [1]]

    B = AttachingMatrix.from_rows([[5], [3]], 8)
    assert rows(apply_rowop(B, RowOp.negate(1))) == [[3], [3]]

    B = AttachingMatrix(moduli=(4, 8), entries=((2, 1), (0, 3)))
    assert rows(apply_rowop(B, RowOp.swap(1, 2))) == [[0, 3], [2, 1]]


def test_apply_rowop_appends_to_log_and_replays():
    B = AttachingMatrix.from_rows([[1, 2], [3, 4]], 8)
    B1 = apply_rowop(B, RowOp.add(1, 2))
    B2 = apply_rowop(B1, RowOp.negate(2))
    assert B2.oplog == (RowOp.add(1, 2), RowOp.negate(2))
    assert replay_oplog(B2) == B2.entries
    assert B2.initial == B.entries


def test_apply_rowop_rejects_out_of_range():
    B = AttachingMatrix.from_rows([[1], [0]], 24)
    with pytest.raises(ValueError):
        apply_rowop(B, RowOp.add(3, 1))


def test_rowop_validation_and_parse():
    with pytest.raises(ValueError):
        RowOp.add(2, 2)
    with pytest.raises(ValueError):
        RowOp("scale", 1)
    for op in (RowOp.add(2, 1), RowOp.swap(1, 3), RowOp.negate(2)):
        assert RowOp.parse(str(op)) == op


def test_matrix_validation():
    with pytest.raises(ValueError):
        AttachingMatrix(moduli=(8, 4), entries=((1, 1),))  # chain broken
    with pytest.raises(ValueError):
        AttachingMatrix(moduli=(4,), entries=())
    # entries normalize into canonical residues
    B = AttachingMatrix.from_rows([[9], [-1]], 8)
    assert rows(B) == [[1], [7]]


def test_reduce_example_2_3_mod_240():
    B = AttachingMatrix.from_rows([[2], [3]], 240)
    R = reduce_restricted(B)
    assert rows(R) == [[1], [0]]
    assert replay_oplog(R) == R.entries
    # reachability confirmed by breadth-first search over the operation orbit
    orbit = orbit_of((2, 3), 240)
    assert (1, 0) in orbit


def test_reduce_zero_matrix_is_fixed():
    B = AttachingMatrix.from_rows([[0, 0], [0, 0], [0, 0]], 12)
    R, report = reduce_with_report(B)
    assert rows(R) == rows(B)
    assert report.pivots == (0, 0)
    assert report.notes == ()


def test_reduce_example_4_6_mod_8():
    B = AttachingMatrix.from_rows([[4], [6]], 8)
    R, report = reduce_with_report(B)
    assert rows(R) == [[2], [0]]
    assert report.pivots == (2,)
    assert report.pivots[0] == gcd_mod([CyclicElem(4, 8), CyclicElem(6, 8)])
    assert (2, 0) in orbit_of((4, 6), 8)


def test_reduce_attains_subgroup_generator_with_two_rows():
    # integer gcd of the entries exceeds the subgroup generator
    B = AttachingMatrix.from_rows([[4], [4]], 6)
    R, report = reduce_with_report(B)
    assert report.pivots == (2,)
    assert rows(R) == [[2], [0]]
    assert least_positive_generator([4, 4], 6) == 2


def test_reduce_single_row_negates_to_orbit_minimum_and_logs():
    B = AttachingMatrix.from_rows([[10]], 24)
    R, report = reduce_with_report(B)
    assert rows(R) == [[10]]  # orbit is {10, 14}; generator 2 unreachable
    assert any("unreachable" in note for note in report.notes)

    B2 = AttachingMatrix.from_rows([[9]], 12)
    R2, report2 = reduce_with_report(B2)
    assert rows(R2) == [[3]]  # negate reaches the generator here
    assert not any("unreachable" in note for note in report2.notes)


def test_reduce_multicolumn_triangular_shape():
    rng = random.Random(7)
    for _ in range(200):
        m = rng.randrange(1, 5)
        r = rng.randrange(1, 4)
        moduli = []
        d = rng.choice((2, 3, 4))
        for _ in range(r):
            moduli.append(d)
            d *= rng.choice((1, 2, 3))
        B = AttachingMatrix.from_rows(
            [[rng.randrange(moduli[j]) for j in range(r)] for _ in range(m)], moduli
        )
        R, report = reduce_with_report(B)
        assert replay_oplog(R) == R.entries
        for j in range(min(m, r)):
            for i in range(j + 1, m):
                assert R.entries[i][j] == 0, (B.entries, R.entries)
            assert R.entries[j][j] == report.pivots[j]


def test_rowops_preserve_column_subgroups():
    rng = random.Random(13)
    for _ in range(300):
        m = rng.randrange(2, 5)
        r = rng.randrange(1, 4)
        base = rng.choice((2, 3, 4, 6))
        moduli = [base] * r
        for j in range(1, r):
            moduli[j] = moduli[j - 1] * rng.choice((1, 2))
        B = AttachingMatrix.from_rows(
            [[rng.randrange(moduli[j]) for j in range(r)] for _ in range(m)], moduli
        )
        kind = rng.choice(("add", "swap", "negate"))
        a = rng.randrange(1, m + 1)
        b = rng.randrange(1, m + 1)
        while b == a:
            b = rng.randrange(1, m + 1)
        op = RowOp.negate(a) if kind == "negate" else RowOp(kind, a, b)
        B2 = apply_rowop(B, op)
        for j in range(1, r + 1):
            before = subgroup_closure([e.value for e in B.column(j)], moduli[j - 1])
            after = subgroup_closure([e.value for e in B2.column(j)], moduli[j - 1])
            assert before == after


def test_nonzero_column_count_examples():
    assert nonzero_column_count(AttachingMatrix.from_rows([[0, 3], [0, 0]], 8)) == 1
    assert nonzero_column_count(AttachingMatrix.from_rows([[0, 0], [0, 0]], 8)) == 0
    assert nonzero_column_count(AttachingMatrix.from_rows([[1, 1], [1, 1]], 8)) == 2


def test_oplog_lines_round_trip():
    B = AttachingMatrix.from_rows([[2], [3]], 24)
    R = reduce_restricted(B)
    lines = R.oplog_lines()
    assert [RowOp.parse(line) for line in lines] == list(R.oplog)


def test_rowop_orbit_engine_matches_oracle():
    engine = rowop_orbit(((4,), (6,)), (8,))
    oracle = {tuple(r[0] for r in state) for state in engine}
    assert oracle == set(orbit_of((4, 6), 8))


def test_rank_f2_examples():
    assert rank_f2(F2Matrix.identity(3)) == 3
    assert rank_f2(F2Matrix.zero(2)) == 0
    assert rank_f2(F2Matrix.from_rows([[1, 1], [1, 1]])) == 1


def test_rank_f2_all_3x3_against_row_space_count():
    for bits in itertools.product((0, 1), repeat=9):
        rows3 = [bits[0:3], bits[3:6], bits[6:9]]
        assert rank_f2(F2Matrix.from_rows(rows3)) == rank_f2_bruteforce(rows3)


def test_f2matrix_validation():
    with pytest.raises(ValueError):
        F2Matrix.from_rows([[1, 0], [1]])
    with pytest.raises(ValueError):
        F2Matrix.from_rows([[2, 0], [0, 0]])
