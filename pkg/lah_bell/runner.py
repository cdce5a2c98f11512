import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from . import tables
from .checks.suites import Task, build_tasks
from .poly.families import clear_caches
from .report import CheckReport

logger = logging.getLogger(__name__)


@dataclass
class SuiteOutcome:
    suite: str
    bounds: Dict[str, int]
    reports: List[CheckReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def failed(self) -> List[CheckReport]:
        return [r for r in self.reports if not r.passed]


def _set_fault(enabled: bool) -> None:
    """Toggle the corrupted table entry and drop every memoized value built from it."""
    tables.inject_fault(enabled)
    clear_caches()


def _init_worker(inject_fault: bool) -> None:
    _set_fault(inject_fault)


def _check_name(task: Task) -> str:
    name = task.check.__name__
    return name[: -len("_check")] if name.endswith("_check") else name


def run_task(task: Task) -> CheckReport:
    """One check; an exception becomes a failed report instead of stopping the run."""
    try:
        return task.check(**task.kwargs)
    except Exception as e:
        logger.error(f"Error in {task.label}: {e}")
        return CheckReport(_check_name(task), dict(task.kwargs), error=f"{type(e).__name__}: {e}")


def _run_serial(tasks: Sequence[Task]) -> List[CheckReport]:
    return [run_task(task) for task in tasks]


def _run_pool(tasks: Sequence[Task], jobs: int, inject_fault: bool) -> List[CheckReport]:
    """Fan out over a process pool; results are put back in task order."""
    results: List[Optional[CheckReport]] = [None] * len(tasks)
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker, initargs=(inject_fault,)) as pool:
        futures = {pool.submit(run_task, task): i for i, task in enumerate(tasks)}
        for future in as_completed(futures):
            i = futures[future]
            try:
                results[i] = future.result()
            except Exception as e:
                task = tasks[i]
                logger.error(f"Worker failed on {task.label}: {e}")
                results[i] = CheckReport(_check_name(task), dict(task.kwargs), error=f"{type(e).__name__}: {e}")
    return results


def run_suites(
    suites: Sequence[str],
    bounds: Dict[str, Dict[str, int]],
    jobs: int = 1,
    inject_fault: bool = False,
) -> List[SuiteOutcome]:
    """Run every task of every suite; output order is the registry order, whatever the pool does."""
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    outcomes = []
    for suite in suites:
        tasks = build_tasks(suite, bounds[suite])
        logger.info(f"Suite {suite}: {len(tasks)} checks, bounds {bounds[suite]}, jobs {jobs}")
        if jobs == 1:
            _set_fault(inject_fault)
            try:
                reports = _run_serial(tasks)
            finally:
                if inject_fault:
                    _set_fault(False)
        else:
            reports = _run_pool(tasks, jobs, inject_fault)
        outcome = SuiteOutcome(suite, dict(bounds[suite]), reports)
        if outcome.passed:
            logger.info(f"Suite {suite}: all {len(reports)} checks passed")
        else:
            logger.warning(f"Suite {suite}: {len(outcome.failed)} of {len(reports)} checks failed")
        outcomes.append(outcome)
    return outcomes
