import math

import pytest

from hallpuzzle.partitions import (
    BosonState, DomainError, IndexSet, MayaState, Partition, complement, from_boson_state,
    from_maya, horizontal_strips_below, is_horizontal_strip, is_vertical_strip, kappa,
    partitions_in_box, partitions_of, reverse_boson_state, reverse_maya, shifted_partial_sums,
    to_boson_state, to_maya,
)


def all_partitions(max_weight):
    return [p for w in range(max_weight + 1) for p in partitions_of(w)]


def test_parse_and_str_round_trip():
    p = Partition.parse("4, 1,1,1")
    assert p == (4, 1, 1, 1)
    assert Partition.parse(str(p)) == p
    assert Partition.parse("") == ()


@pytest.mark.parametrize("bad", [(1, 2), (3, -1)])
def test_rejects_invalid_parts(bad):
    with pytest.raises(DomainError):
        Partition(bad)


def test_parse_rejects_garbage():
    with pytest.raises(DomainError):
        Partition.parse("3,x")


def test_zeros_are_kept_but_ignored_by_normalized_eq():
    p = Partition((3, 1, 0))
    assert len(p) == 3
    assert p.stripped() == (3, 1)
    assert p.normalized_eq((3, 1))
    assert p.weight() == 4
    assert p.multiplicity(0) == 1


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert partitions_of(6, 3, 2) == ((3, 3),)
    assert partitions_of(4, 2) == ((2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_partitions_in_box_count():
    for length in range(4):
        for top in range(4):
            assert len(partitions_in_box(length, top)) == math.comb(length + top, length)


def test_conjugate_is_involution():
    for p in all_partitions(7):
        assert p.conjugate().conjugate() == p
        assert p.conjugate().weight() == p.weight()
    assert Partition((4, 2, 1)).conjugate() == (3, 2, 1, 1)


def test_complement():
    assert complement((4, 1, 1, 1), 4) == (3, 3, 3, 0)
    for p in all_partitions(5):
        L = p.largest() + 1
        assert complement(complement(p, L), L) == p
    with pytest.raises(DomainError):
        complement((5,), 4)


def test_contains():
    assert Partition((3, 2, 1)).contains((2, 1, 0))
    assert not Partition((3, 1)).contains((2, 2))


def test_boson_state_round_trip():
    for p in all_partitions(6):
        assert from_boson_state(to_boson_state(p)) == p
    assert to_boson_state((2, 2, 0)).occupations == (1, 0, 2)
    assert reverse_boson_state((2, 2, 0)).occupations == (2, 0, 1)
    assert BosonState((1, 0, 0))[5] == 0


def test_maya_round_trip():
    for p in all_partitions(6):
        assert from_maya(to_maya(p)) == p
    assert to_maya((2, 0)).bits == (1, 0, 0, 1)
    assert reverse_maya((2, 0)).bits == (1, 0, 0, 1)
    assert reverse_maya((2, 1), 3).bits == (0, 1, 0, 1)
    with pytest.raises(DomainError):
        MayaState((2,))
    with pytest.raises(DomainError):
        from_maya(to_maya((1, 1)), length=3)


def test_strips():
    assert is_horizontal_strip((3, 1), (1,))
    assert not is_horizontal_strip((2, 2), (1,))
    assert is_vertical_strip((2, 2), (1, 1))
    assert not is_vertical_strip((3,), (1,))
    for outer in all_partitions(5):
        for inner in horizontal_strips_below(outer):
            assert is_horizontal_strip(outer, inner)


def test_index_sets():
    assert tuple(shifted_partial_sums((2, 1))) == (2, 5)
    assert tuple(kappa((3, 1), (2, 0))) == (3, 6)
    with pytest.raises(DomainError):
        IndexSet((2, 2))
    with pytest.raises(DomainError):
        kappa((1,), (3,))
