import pytest


def test_lah_rows():
    from lah_bell.tables import lah

    assert [lah(3, k) for k in range(4)] == [0, 6, 6, 1]
    assert [lah(4, k) for k in range(5)] == [0, 24, 36, 12, 1]
    assert lah(0, 0) == 1
    assert lah(3, 5) == 0


def test_lah_rejects_negative_indices():
    from lah_bell.tables import lah, r_lah

    with pytest.raises(ValueError):
        lah(-1, 0)
    with pytest.raises(ValueError):
        r_lah(2, 1, -1)


def test_r_lah_values():
    from lah_bell.tables import lah, r_lah

    assert [r_lah(2, k, 1) for k in range(3)] == [2, 4, 1]
    assert r_lah(3, 1, 2) == 36
    assert r_lah(2, 4, 3) == 0
    for n in range(7):
        for k in range(n + 1):
            assert r_lah(n, k, 0) == lah(n, k)


def test_stirling_and_bell():
    from lah_bell.tables import bell, stirling2

    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert [bell(n) for n in range(6)] == [1, 1, 2, 5, 15, 52]
    assert stirling2(2, 3) == 0


def test_lah_bell_numbers():
    from lah_bell.tables import lah_bell_number, r_lah_bell_number

    assert [lah_bell_number(n) for n in range(6)] == [1, 1, 3, 13, 73, 501]
    assert r_lah_bell_number(2, 1) == 7


def test_r_lah_recurrence_check():
    from lah_bell.tables import r_lah_recurrence_check

    for r in range(5):
        report = r_lah_recurrence_check(20, r)
        assert report.passed, report.first_failure()
        assert report.checked > 0
    with pytest.raises(ValueError):
        r_lah_recurrence_check(0, 1)


def test_spivey_bell_check():
    from lah_bell.tables import spivey_bell_check

    for n in range(15):
        for m in range(15 - n):
            assert spivey_bell_check(n, m).passed, (n, m)
    assert spivey_bell_check(2, 3).details["value"] == 52


def test_triangle():
    from lah_bell.tables import triangle

    t = triangle("r_lah", 2, 1)
    assert t.rows == ((1,), (1, 1), (2, 4, 1))
    assert t.n_max == 2
    assert t.entry(2, 5) == 0
    assert triangle("lah", 3).row_sums() == (1, 1, 3, 13)
    assert triangle("stirling2", 3).rows[3] == (0, 1, 3, 1)


def test_triangle_rejects_bad_arguments():
    from lah_bell.tables import triangle

    with pytest.raises(ValueError):
        triangle("bogus", 3)
    with pytest.raises(ValueError):
        triangle("r_lah", 3)
    with pytest.raises(ValueError):
        triangle("lah", -1)


def test_inject_fault_corrupts_one_entry():
    from lah_bell import tables

    tables.inject_fault(True)
    try:
        assert tables.lah(3, 2) == 7
        assert tables.lah(3, 1) == 6
    finally:
        tables.inject_fault(False)
    assert tables.lah(3, 2) == 6
