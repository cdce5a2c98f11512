"""
Verification suites. Each suite is a builder bounds -> [Task, ...]; a Task is one
check function with its keyword arguments. Register new suites in SUITES; the
runner executes every task without code changes.

Contract: every check function is module-level (so tasks cross a process pool),
returns a CheckReport and never raises on a failed identity.
"""

from typing import Any, Callable, Dict, List, NamedTuple, Tuple

from ..config import (
    BOUND_CAPS,
    DOBINSKI_LAMBDAS,
    DOBINSKI_XS,
    GF_BELL_XS,
    GF_LAMBDAS,
    GF_ORDER_LAMBDA,
    GF_XS,
    QUICK_BOUNDS,
    SUITE_BOUNDS,
)
from ..dobinski import bell_dobinski_check, dobinski_check
from ..oracle import oracle_check, set_partition_check
from ..poly.spivey import defining_relation_check, spivey_check, spivey_lambda_check, vandermonde_check
from ..series import (
    gf_check_bell,
    gf_check_degenerate_rising,
    gf_check_lah,
    gf_check_lambda,
    gf_check_rising,
    two_variable_spivey_spot_check,
)
from ..tables import r_lah_recurrence_check, spivey_bell_check
from ..weyl import (
    commutation_check,
    exp_action_check,
    expansion_check,
    monomial_action_check,
    operator_spivey_check,
    reordering_check,
    shift_identity_check,
)

# closed-form reordering is compared with rewriting up to this power
REORDERING_MAX_POWER = 5
# two-variable series spot checks stay at small n, m
SPOT_CHECK_MAX = 3
SPOT_CHECK_TS = ("1", "1/2")
# shift identity checks stop at n, m <= 5
SHIFT_CHECK_MAX = 5


def index_pairs(b) -> List[Tuple[int, int]]:
    """(n, m) with n + m <= total_max, n <= n_max and m <= m_max, in row order."""
    return [
        (n, m)
        for n in range(b["n_max"] + 1)
        for m in range(b["m_max"] + 1)
        if n + m <= b["total_max"]
    ]


class Task(NamedTuple):
    suite: str
    check: Callable
    kwargs: Dict[str, Any]

    @property
    def label(self) -> str:
        args = " ".join(f"{k}={v}" for k, v in self.kwargs.items())
        return f"{self.suite}:{self.check.__name__} {args}".strip()


def _defining_tasks(b) -> List[Task]:
    tasks = []
    for n in range(b["n_max"] + 1):
        tasks.append(Task("defining", defining_relation_check, {"n": n, "r": 0, "variant": "classic"}))
        for r in range(b["r_max"] + 1):
            for variant in ("r_shift", "lambda"):
                tasks.append(Task("defining", defining_relation_check, {"n": n, "r": r, "variant": variant}))
        tasks.append(Task("defining", vandermonde_check, {"n": n}))
    return tasks


def _spivey_tasks(b) -> List[Task]:
    return [Task("spivey", spivey_check, {"n": n, "m": m, "r": 0}) for n, m in index_pairs(b)]


def _spivey_r_tasks(b) -> List[Task]:
    return [
        Task("spivey-r", spivey_check, {"n": n, "m": m, "r": r})
        for r in range(1, b["r_max"] + 1)
        for n, m in index_pairs(b)
    ]


def _spivey_lambda_tasks(b) -> List[Task]:
    tasks = [
        Task("spivey-lambda", spivey_lambda_check, {"n": n, "m": m, "r": r})
        for r in range(b["r_max"] + 1)
        for n, m in index_pairs(b)
    ]
    for n, m in index_pairs(b):
        if n <= SPOT_CHECK_MAX and m <= SPOT_CHECK_MAX:
            for r in range(b["r_max"] + 1):
                for lam in GF_LAMBDAS:
                    for t in SPOT_CHECK_TS:
                        kwargs = {"n": n, "m": m, "r": r, "lam": lam, "t_val": t}
                        tasks.append(Task("spivey-lambda", two_variable_spivey_spot_check, kwargs))
    return tasks


def _weyl_tasks(b) -> List[Task]:
    tasks = [Task("weyl", reordering_check, {"max_power": REORDERING_MAX_POWER})]
    tasks += [Task("weyl", commutation_check, {"k": k}) for k in range(1, b["k_max"] + 1)]
    for r in range(b["r_max"] + 1):
        for n in range(b["n_max"] + 1):
            tasks.append(Task("weyl", expansion_check, {"n": n, "r": r}))
            tasks.append(Task("weyl", exp_action_check, {"n": n, "r": r}))
            for m in range(b["m_max"] + 1):
                tasks.append(Task("weyl", monomial_action_check, {"n": n, "m": m, "r": r}))
                tasks.append(Task("weyl", operator_spivey_check, {"n": n, "m": m, "r": r}))
                if n > SHIFT_CHECK_MAX or m > SHIFT_CHECK_MAX:
                    continue
                for k in range(1, b["k_max"] + 1):
                    tasks.append(Task("weyl", shift_identity_check, {"n": n, "m": m, "r": r, "k": k}))
    return tasks


def _gf_tasks(b) -> List[Task]:
    order = b["order"]
    order_lambda = min(order, GF_ORDER_LAMBDA)
    tasks = [Task("gf", gf_check_rising, {"x": x, "order": order}) for x in GF_XS]
    for r in range(b["r_max"] + 1):
        for k in range(min(b["k_max"], order) + 1):
            tasks.append(Task("gf", gf_check_lah, {"k": k, "order": order, "r": r}))
        for x in GF_BELL_XS:
            tasks.append(Task("gf", gf_check_bell, {"r": r, "order": order, "x": x}))
        for lam in GF_LAMBDAS:
            for k in range(min(b["k_max"], order_lambda) + 1):
                tasks.append(Task("gf", gf_check_lambda, {"r": r, "lam": lam, "order": order_lambda, "k": k}))
            for x in GF_XS:
                tasks.append(Task("gf", gf_check_lambda, {"r": r, "lam": lam, "order": order_lambda, "x": x}))
                tasks.append(
                    Task("gf", gf_check_degenerate_rising, {"x": x, "r": r, "lam": lam, "order": order_lambda})
                )
    return tasks


def _oracle_tasks(b) -> List[Task]:
    return [Task("oracle", oracle_check, {"n": n}) for n in range(b["n_max"] + 1)]


def _baseline_tasks(b) -> List[Task]:
    tasks = [Task("baseline", spivey_bell_check, {"n": n, "m": m}) for n, m in index_pairs(b)]
    if b["n_max"] >= 1:
        tasks += [
            Task("baseline", r_lah_recurrence_check, {"n_max": b["n_max"], "r": r})
            for r in range(b["r_max"] + 1)
        ]
    tasks += [Task("baseline", set_partition_check, {"n": n}) for n in range(min(b["n_max"], 8) + 1)]
    return tasks


def _dobinski_tasks(b) -> List[Task]:
    tasks = []
    for n in range(b["n_max"] + 1):
        for x in DOBINSKI_XS:
            tasks.append(Task("dobinski", bell_dobinski_check, {"n": n, "x": x}))
            for r in range(b["r_max"] + 1):
                for lam in DOBINSKI_LAMBDAS:
                    tasks.append(Task("dobinski", dobinski_check, {"n": n, "r": r, "x": x, "lam": lam}))
    return tasks


# (builder, suite_id); "all" runs them in this order
SUITES = [
    (_defining_tasks, "defining"),
    (_spivey_tasks, "spivey"),
    (_spivey_r_tasks, "spivey-r"),
    (_spivey_lambda_tasks, "spivey-lambda"),
    (_weyl_tasks, "weyl"),
    (_gf_tasks, "gf"),
    (_oracle_tasks, "oracle"),
    (_baseline_tasks, "baseline"),
    (_dobinski_tasks, "dobinski"),
]
SUITE_NAMES = tuple(name for _, name in SUITES)


def expand_suite_names(name: str) -> List[str]:
    if name == "all":
        return list(SUITE_NAMES)
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite: {name}")
    return [name]


def resolve_bounds(suite: str, quick: bool = False, overrides: Dict[str, int] = None) -> Dict[str, int]:
    """Suite defaults (or quick defaults), with any given flag values applied and capped."""
    bounds = dict((QUICK_BOUNDS if quick else SUITE_BOUNDS)[suite])
    for key, value in (overrides or {}).items():
        if value is None or key not in bounds:
            continue
        if value < 0 or value > BOUND_CAPS[key]:
            raise ValueError(f"{key} must be in [0, {BOUND_CAPS[key]}], got {value}")
        bounds[key] = value
    return bounds


def build_tasks(suite: str, bounds: Dict[str, int]) -> List[Task]:
    for builder, suite_id in SUITES:
        if suite_id == suite:
            return builder(bounds)
    raise ValueError(f"unknown suite: {suite}")
