"""Building tables from first rows, detecting steps, rotations and duals."""

from __future__ import annotations

import pytest

from translatable.core import (
    CayleyTable,
    InvalidInputError,
    KSequence,
    Ordering,
    mod_rep,
    reorder,
)
from translatable.translation import (
    all_rotated_presentations,
    detect,
    dual,
    dual_step,
    is_translatable,
    rotate_ordering,
    table_from_sequence,
)

# the order-4 walkthrough: a cyclic group, the same group under a new
# ordering, and an idempotent quasigroup
Z4 = CayleyTable(4, ((1, 2, 3, 4), (2, 3, 4, 1), (3, 4, 1, 2), (4, 1, 2, 3)))
Z4_REORDERED = CayleyTable(4, ((1, 3, 4, 2), (3, 1, 2, 4), (4, 2, 3, 1), (2, 4, 1, 3)))
IDEMPOTENT4 = table_from_sequence(KSequence(4, 2, (1, 4, 3, 2)))


def test_golden_tables_from_sequences():
    assert table_from_sequence(KSequence(4, 3, (1, 2, 3, 4))) == Z4
    assert reorder(Z4, Ordering((1, 3, 4, 2))) == Z4_REORDERED
    assert IDEMPOTENT4.rows == ((1, 4, 3, 2), (3, 2, 1, 4), (1, 4, 3, 2), (3, 2, 1, 4))


def test_golden_step_detection():
    assert detect(Z4) == frozenset({3})
    assert detect(Z4_REORDERED) == frozenset()
    assert detect(IDEMPOTENT4) == frozenset({2})


def test_rows_rotate_right_by_k():
    for n, k in [(5, 2), (6, 3), (7, 1)]:
        seq = KSequence(n, k, tuple(range(1, n + 1)))
        table = table_from_sequence(seq)
        for i in range(1, n):
            prev = table.row(i)
            assert table.row(i + 1) == prev[n - k :] + prev[: n - k]


def test_entry_formula_matches_rotation():
    seq = KSequence(6, 4, (3, 1, 4, 1, 5, 2))
    table = table_from_sequence(seq)
    for i in range(1, 7):
        for j in range(1, 7):
            assert table.entry(i, j) == seq.seq[mod_rep(seq.k - seq.k * i + j, 6) - 1]


def test_is_translatable_matches_detect():
    for table in (Z4, Z4_REORDERED, IDEMPOTENT4):
        for k in range(1, table.n):
            assert is_translatable(table, k) == (k in detect(table))


def test_translatable_sum_identity():
    # i * [j - k]_n = [i + 1]_n * j across the whole table
    seq = KSequence(6, 2, (2, 2, 4, 4, 6, 6))
    table = table_from_sequence(seq)
    n, k = seq.n, seq.k
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert table.entry(i, mod_rep(j - k, n)) == table.entry(mod_rep(i + 1, n), j)


def test_rotate_ordering_presents_same_step():
    seq = KSequence(6, 2, (1, 2, 3, 4, 5, 6))
    ordering, rotated = rotate_ordering(seq)
    table = table_from_sequence(seq)
    assert reorder(table, ordering) == table_from_sequence(rotated)


def test_all_rotated_presentations_cover_orbit():
    seq = KSequence(5, 2, (2, 1, 4, 3, 5))
    table = table_from_sequence(seq)
    rotations = all_rotated_presentations(seq)
    assert len(rotations) == 5
    seen = set()
    for ordering, rotated in rotations:
        assert reorder(table, ordering) == table_from_sequence(rotated)
        seen.add(rotated.seq)
    assert seq.seq in seen


def test_rotation_fixes_step_one_sequences():
    seq = KSequence(5, 1, (3, 3, 1, 2, 5))
    for _, rotated in all_rotated_presentations(seq):
        assert rotated.seq == seq.seq


def test_dual_is_transpose_and_involution():
    assert dual(Z4).rows == tuple(zip(*Z4.rows))
    assert dual(dual(IDEMPOTENT4)) == IDEMPOTENT4


def test_dual_step_inverse():
    step = dual_step(7, 3)
    assert step.kstar == 5 and not step.alterable
    assert dual_step(7, 3).kstar * 3 % 7 == 1
    assert dual_step(6, 2).kstar is None
    assert dual_step(5, 2).alterable  # 2*2 = 4 = n-1


def test_dual_step_matches_detection():
    for n in range(2, 8):
        for k in range(1, n):
            seq = KSequence(n, k, tuple(range(1, n + 1)))
            found = detect(dual(table_from_sequence(seq)))
            step = dual_step(n, k)
            if step.kstar is None:
                assert found == frozenset()
            else:
                assert found == frozenset({step.kstar})


def test_detect_rejects_nothing_but_finds_all_steps():
    # a constant table is translatable by every step
    table = CayleyTable(3, ((1, 1, 1), (1, 1, 1), (1, 1, 1)))
    assert detect(table) == frozenset({1, 2})


def test_two_element_edge():
    seq = KSequence(2, 1, (2, 1))
    table = table_from_sequence(seq)
    assert table.rows == ((2, 1), (1, 2))
    assert detect(table) == frozenset({1})
    with pytest.raises(InvalidInputError):
        KSequence(2, 2, (1, 2))
