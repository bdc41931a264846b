"""Idempotents, cyclic decomposition, isomorphisms and ideals."""

from __future__ import annotations

from math import gcd

import pytest

from translatable.core import BoundError, KSequence, PreconditionError, mod_rep
from translatable.structure import (
    cyclic_table,
    decompose,
    ideals,
    idempotent_set,
    idempotent_set_formula,
    iso_idempotent,
    iso_left_unitary,
    iso_to_cyclic,
    left_unitary_idempotents,
    principal_ideal,
)
from translatable.translation import (
    all_rotated_presentations,
    table_from_sequence,
)


def test_idempotent_set_formula_matches_scan():
    for seq in (
        KSequence(6, 2, (1, 2, 3, 4, 5, 6)),
        KSequence(6, 2, (3, 4, 5, 6, 1, 2)),
        KSequence(6, 3, (1, 2, 3, 4, 5, 6)),
        KSequence(12, 8, tuple(range(1, 13))),
    ):
        table = table_from_sequence(seq)
        assert idempotent_set_formula(seq) == idempotent_set(table)


def test_left_unitary_idempotent_positions():
    for n in range(2, 13):
        for k in range(1, n):
            expected = frozenset(
                mod_rep(i + k * (i - 1), n) for i in range(1, n + 1)
            )
            assert left_unitary_idempotents(n, k) == expected


def test_decompose_golden_six_two_identity():
    seq = KSequence(6, 2, (1, 2, 3, 4, 5, 6))
    dec = decompose(table_from_sequence(seq), seq)
    assert dec.m == 3 and dec.t == 2
    assert dec.idempotents == frozenset({1, 4})
    assert dec.components == ((1, 3, 5), (2, 4, 6))
    assert dec.generators == (5, 2)


def test_decompose_golden_six_three_identity():
    seq = KSequence(6, 3, (1, 2, 3, 4, 5, 6))
    dec = decompose(table_from_sequence(seq), seq)
    assert dec.m == 2 and dec.t == 3
    assert dec.idempotents == frozenset({1, 3, 5})
    assert dec.components == ((1, 4), (3, 6), (2, 5))
    assert dec.generators == (4, 6, 2)


def test_decompose_golden_six_two_shifted():
    seq = KSequence(6, 2, (3, 4, 5, 6, 1, 2))
    dec = decompose(table_from_sequence(seq), seq)
    assert dec.idempotents == frozenset({2, 5})
    assert dec.components == ((2, 4, 6), (1, 3, 5))
    assert dec.generators == (6, 3)


def test_decompose_components_partition_and_are_left_ideals():
    seq = KSequence(12, 8, tuple(range(1, 13)))
    table = table_from_sequence(seq)
    dec = decompose(table, seq)
    assert dec.m == 3 and dec.t == 4
    flat = sorted(x for comp in dec.components for x in comp)
    assert flat == list(range(1, 13))
    for comp in dec.components:
        inside = set(comp)
        for x in range(1, 13):
            for y in comp:
                assert table.entry(x, y) in inside


def test_decompose_shape_follows_gcd():
    for n in range(2, 13):
        for k in range(1, n):
            if mod_rep(k * k + k, n) != n:
                continue
            seq = KSequence(n, k, tuple(range(1, n + 1)))
            dec = decompose(table_from_sequence(seq), seq)
            assert dec.t == gcd(n, k)
            assert dec.m == n // gcd(n, k)
            assert len(dec.idempotents) == dec.t


def test_decompose_refuses_non_semigroups():
    seq = KSequence(4, 2, (1, 4, 3, 2))
    with pytest.raises(PreconditionError):
        decompose(table_from_sequence(seq), seq)


def test_iso_left_unitary_golden():
    iso = iso_left_unitary(
        KSequence(6, 2, (1, 2, 3, 4, 5, 6)), KSequence(6, 2, (3, 4, 5, 6, 1, 2))
    )
    assert iso.verified
    assert iso.mapping == (5, 6, 1, 2, 3, 4)


def test_iso_left_unitary_all_admissible_pairs():
    from translatable.constructions import cancellative_semigroups

    for n in range(2, 10):
        for k in range(1, n):
            family = cancellative_semigroups(n, k)
            for first in family:
                for second in family:
                    iso = iso_left_unitary(first, second)
                    assert iso.verified, (n, k, first.seq, second.seq)


def test_iso_idempotent_rotated_presentations():
    from translatable.constructions import idempotent_groupoid

    for n in range(2, 8):
        for k in range(2, n):
            if gcd(k - 1, n) != 1:
                continue
            seq = idempotent_groupoid(n, k)
            for _, rotated in all_rotated_presentations(seq):
                iso = iso_idempotent(seq, rotated)
                assert iso.verified, (n, k, rotated.seq)


def test_cyclic_table_shape():
    table = cyclic_table(5)
    assert table.row(1) == (1, 2, 3, 4, 5)
    assert table.entry(3, 4) == mod_rep(3 + 4 - 1, 5)


def test_iso_to_cyclic_top_step():
    for n in range(2, 10):
        seq = KSequence(n, n - 1, tuple(range(1, n + 1)))
        iso = iso_to_cyclic(table_from_sequence(seq))
        assert iso is not None and iso.verified


def test_iso_to_cyclic_rejects_non_groups():
    seq = KSequence(6, 2, (1, 2, 3, 4, 5, 6))  # four non-invertible elements
    assert iso_to_cyclic(table_from_sequence(seq)) is None
    bad = KSequence(4, 2, (1, 4, 3, 2))  # not even associative
    assert iso_to_cyclic(table_from_sequence(bad)) is None


def test_principal_ideals_and_golden_partition():
    table = table_from_sequence(KSequence(6, 2, (1, 2, 3, 4, 5, 6)))
    assert principal_ideal(table, 1, "left") == (1, 3, 5)
    assert principal_ideal(table, 2, "left") == (2, 4, 6)
    found = ideals(table, "left")
    assert [i.elements for i in found] == [(1, 3, 5), (2, 4, 6), (1, 2, 3, 4, 5, 6)]
    assert all(i.semiprime for i in found)


def test_right_ideals_of_commutative_table_match_left():
    seq = KSequence(5, 4, (1, 2, 3, 4, 5))
    table = table_from_sequence(seq)
    left = {i.elements for i in ideals(table, "left")}
    right = {i.elements for i in ideals(table, "right")}
    assert left == right


def test_ideals_bound_guard():
    seq = KSequence(16, 15, tuple(range(1, 17)))
    with pytest.raises(BoundError):
        ideals(table_from_sequence(seq), "left")
    # explicit bound lifts the guard; a group has only the trivial ideal
    found = ideals(table_from_sequence(seq), "left", bound=16)
    assert [i.elements for i in found] == [tuple(range(1, 17))]
