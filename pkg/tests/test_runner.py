import pytest


def _exploding_check(n):
    raise RuntimeError(f"boom at {n}")


def test_expand_suite_names():
    from lah_bell.checks.suites import SUITE_NAMES, expand_suite_names

    assert expand_suite_names("all") == list(SUITE_NAMES)
    assert expand_suite_names("weyl") == ["weyl"]
    with pytest.raises(ValueError):
        expand_suite_names("nope")


def test_resolve_bounds():
    from lah_bell.checks.suites import resolve_bounds
    from lah_bell.config import QUICK_BOUNDS, SUITE_BOUNDS

    assert resolve_bounds("spivey") == SUITE_BOUNDS["spivey"]
    assert resolve_bounds("spivey", quick=True) == QUICK_BOUNDS["spivey"]
    bounds = resolve_bounds("spivey", overrides={"n_max": 2, "m_max": None, "order": 9})
    assert bounds == {**SUITE_BOUNDS["spivey"], "n_max": 2}
    with pytest.raises(ValueError):
        resolve_bounds("spivey", overrides={"n_max": 99})


def test_index_pairs_is_the_total_triangle():
    from lah_bell.checks.suites import index_pairs, resolve_bounds

    pairs = index_pairs(resolve_bounds("spivey"))
    assert len(pairs) == 91
    assert (12, 0) in pairs and (0, 12) in pairs and (9, 3) in pairs
    assert all(n + m <= 12 for n, m in pairs)
    assert len(index_pairs(resolve_bounds("spivey-r"))) == 66
    assert len(index_pairs(resolve_bounds("spivey-lambda"))) == 45
    assert len(index_pairs(resolve_bounds("baseline"))) == 120
    assert index_pairs({"total_max": 3, "n_max": 1, "m_max": 9}) == [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2)]


def test_default_suites_cover_the_triangles():
    from lah_bell.checks.suites import build_tasks, resolve_bounds

    spivey = build_tasks("spivey", resolve_bounds("spivey"))
    assert len(spivey) == 91
    assert {"n": 0, "m": 12, "r": 0} in [t.kwargs for t in spivey]
    shifted = build_tasks("spivey-r", resolve_bounds("spivey-r"))
    assert len(shifted) == 4 * 66
    baseline = [t.kwargs for t in build_tasks("baseline", resolve_bounds("baseline"))]
    assert {"n": 14, "m": 0} in baseline
    assert {"n_max": 20, "r": 5} in baseline


def test_build_tasks_covers_every_suite():
    from lah_bell.checks.suites import SUITE_NAMES, build_tasks, resolve_bounds

    for suite in SUITE_NAMES:
        tasks = build_tasks(suite, resolve_bounds(suite, quick=True))
        assert tasks, suite
        assert all(t.suite == suite for t in tasks)


def test_task_label():
    from lah_bell.checks.suites import Task
    from lah_bell.oracle import oracle_check

    assert Task("oracle", oracle_check, {"n": 3}).label == "oracle:oracle_check n=3"


def test_run_task_turns_exception_into_failed_report():
    from lah_bell.checks.suites import Task
    from lah_bell.runner import run_task

    report = run_task(Task("oracle", _exploding_check, {"n": 2}))
    assert not report.passed
    assert report.name == "_exploding"
    assert report.params == {"n": 2}
    assert report.error == "RuntimeError: boom at 2"


def test_run_suites_serial():
    from lah_bell.runner import run_suites

    outcomes = run_suites(["oracle", "spivey"], {"oracle": {"n_max": 4}, "spivey": {"total_max": 4, "n_max": 2, "m_max": 2}})
    assert [o.suite for o in outcomes] == ["oracle", "spivey"]
    assert all(o.passed for o in outcomes)
    assert len(outcomes[0].reports) == 5
    assert len(outcomes[1].reports) == 9


def test_run_suites_with_fault_then_recovers():
    from lah_bell import tables
    from lah_bell.runner import run_suites

    bounds = {"oracle": {"n_max": 4}}
    outcomes = run_suites(["oracle"], bounds, inject_fault=True)
    assert not outcomes[0].passed
    assert [r.params["n"] for r in outcomes[0].failed] == [3]
    assert tables.lah(3, 2) == 6
    assert run_suites(["oracle"], bounds)[0].passed


def test_run_suites_pool_matches_serial():
    from lah_bell.runner import run_suites

    bounds = {"weyl": {"n_max": 2, "m_max": 1, "r_max": 1, "k_max": 1}}
    serial = run_suites(["weyl"], bounds, jobs=1)[0]
    pooled = run_suites(["weyl"], bounds, jobs=2)[0]
    assert [(r.name, r.params, r.passed) for r in pooled.reports] == [
        (r.name, r.params, r.passed) for r in serial.reports
    ]


def test_run_suites_pool_with_fault():
    from lah_bell.runner import run_suites

    outcome = run_suites(["oracle"], {"oracle": {"n_max": 4}}, jobs=2, inject_fault=True)[0]
    assert [r.params["n"] for r in outcome.failed] == [3]


def test_run_suites_rejects_zero_jobs():
    from lah_bell.runner import run_suites

    with pytest.raises(ValueError):
        run_suites(["oracle"], {"oracle": {"n_max": 1}}, jobs=0)
