import pytest


def test_count_ordered_partitions_examples():
    from lah_bell.oracle import count_ordered_partitions

    assert count_ordered_partitions(0, 0) == 1
    assert count_ordered_partitions(2, 1) == 2
    assert count_ordered_partitions(3, 2) == 6
    assert count_ordered_partitions(3, 5) == 0


def test_count_all_ordered_partitions_examples():
    from lah_bell.oracle import count_all_ordered_partitions

    assert [count_all_ordered_partitions(n) for n in range(5)] == [1, 1, 3, 13, 73]


def test_distribution_by_block_count():
    from lah_bell.oracle import distribution_by_block_count

    assert distribution_by_block_count(0) == {0: 1}
    assert distribution_by_block_count(1) == {1: 1}
    assert distribution_by_block_count(3) == {1: 6, 2: 6, 3: 1}
    assert distribution_by_block_count(4) == {1: 24, 2: 36, 3: 12, 4: 1}


def test_enumeration_matches_lah_numbers():
    from lah_bell.oracle import count_all_ordered_partitions, distribution_by_block_count
    from lah_bell.tables import lah, lah_bell_number

    for n in range(10):
        row = distribution_by_block_count(n)
        assert [row.get(k, 0) for k in range(n + 1)] == [lah(n, k) for k in range(n + 1)]
        assert count_all_ordered_partitions(n) == lah_bell_number(n)


def test_cap_is_enforced():
    from lah_bell.errors import DomainError
    from lah_bell.oracle import count_ordered_partitions, ordered_partitions

    with pytest.raises(DomainError):
        count_ordered_partitions(10, 2)
    with pytest.raises(DomainError):
        list(ordered_partitions(7))
    with pytest.raises(ValueError):
        count_ordered_partitions(-1, 0)


def test_set_partitions_in_growth_string_order():
    from lah_bell.oracle import set_partitions

    assert list(set_partitions(3)) == [
        [[1, 2, 3]],
        [[1, 2], [3]],
        [[1, 3], [2]],
        [[1], [2, 3]],
        [[1], [2], [3]],
    ]
    assert list(set_partitions(0)) == [[]]


def test_set_partition_count_is_bell():
    from lah_bell.oracle import count_set_partitions
    from lah_bell.tables import bell

    for n in range(9):
        assert count_set_partitions(n) == bell(n)


def test_explicit_ordered_partitions():
    from lah_bell.oracle import OrderedPartition, ordered_partitions

    listed = list(ordered_partitions(3))
    assert len(listed) == 13
    assert len(set(listed)) == 13
    assert all(p.is_partition_of(3) for p in listed)
    assert OrderedPartition(((2, 1),)) in list(ordered_partitions(2))
    assert not OrderedPartition(((1, 1),)).is_partition_of(2)


def test_oracle_checks():
    from lah_bell.oracle import oracle_check, set_partition_check

    for n in range(8):
        report = oracle_check(n)
        assert report.passed, report.first_failure()
        assert set_partition_check(n).passed
    assert oracle_check(4).details["distribution"] == {1: 24, 2: 36, 3: 12, 4: 1}
