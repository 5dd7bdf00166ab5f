"""
Case execution for the acceptance suites.

Cases run in-process by default. With a timeout each case runs in its own
process that is terminated when the timeout expires; with several workers
cases are dispatched concurrently. Outcomes are always returned in case
order, independent of completion order.
"""
from __future__ import annotations

import logging
import multiprocessing as mp
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Sequence, Tuple

from matlc.errors import CapacityError, DomainError, InvariantViolation, MatlcError, ParseError

logger = logging.getLogger(__name__)

_ERRORS: Dict[str, type] = {
    cls.__name__: cls for cls in (MatlcError, ParseError, DomainError, CapacityError, InvariantViolation)
}


@dataclass
class CaseOutcome:
    """Result of one case: theorem violations and conjecture-check violations."""
    key: str
    violations: List[str] = field(default_factory=list)
    conjecture_violations: List[str] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return bool(self.violations)


@dataclass(frozen=True)
class Case:
    key: str
    func: Callable[..., CaseOutcome]
    args: Tuple[Any, ...] = ()

    def __call__(self) -> CaseOutcome:
        return self.func(self.key, *self.args)


def _worker(case: Case, q: mp.Queue) -> None:
    """Run one case and report ("ok", outcome) or ("error", (class name, message))."""
    try:
        q.put(("ok", case()))
    except MatlcError as e:
        q.put(("error", (type(e).__name__, str(e))))
    except Exception as e:  # noqa: BLE001
        q.put(("error", ("InvariantViolation", f"{type(e).__name__}: {e}")))


def run_isolated(case: Case, timeout_s: float) -> Tuple[bool, Any]:
    """Run a case in a separate process with a timeout; returns (ok, outcome_or_error)."""
    q: mp.Queue = mp.Queue()
    p = mp.Process(target=_worker, args=(case, q))
    p.start()
    p.join(timeout_s)
    if p.is_alive():
        p.terminate()
        p.join()
        return False, "timeout"
    if q.empty():
        return False, "no-result"
    status, payload = q.get()
    return (status == "ok"), payload


def _run_one(case: Case, timeout_s: float) -> CaseOutcome:
    if timeout_s <= 0:
        return case()
    ok, payload = run_isolated(case, timeout_s)
    if ok:
        return payload
    if payload == "timeout":
        raise CapacityError(f"{case.key}: no result within {timeout_s:g}s")
    if payload == "no-result":
        raise InvariantViolation(f"{case.key}: worker exited without a result")
    name, message = payload
    raise _ERRORS.get(name, InvariantViolation)(f"{case.key}: {message}")


def run_cases(
    cases: Sequence[Case],
    workers: int = 1,
    timeout_s: float = 0.0,
    fail_fast: bool = False,
) -> List[CaseOutcome]:
    """Run cases and return their outcomes in case order.

    Args:
        cases: cases to run.
        workers: number of concurrent cases.
        timeout_s: per-case timeout; 0 runs in-process without isolation.
        fail_fast: stop at the first case with a violation.

    Returns:
        Outcomes in the order of ``cases``, truncated after the first
        failure when ``fail_fast`` is set.
    """
    outcomes: List[CaseOutcome] = []
    if workers <= 1:
        for case in cases:
            outcome = _run_one(case, timeout_s)
            outcomes.append(outcome)
            logger.debug(f"[CheckRunner] {case.key}: {'FAIL' if outcome.failed else 'ok'}")
            if fail_fast and outcome.failed:
                break
        return outcomes
    with ThreadPoolExecutor(max_workers=workers) as pool:
        if timeout_s > 0:
            results = pool.map(lambda c: _run_one(c, timeout_s), cases)
        else:
            # Without a timeout cases share this interpreter and its caches.
            results = pool.map(lambda c: c(), cases)
        for outcome in results:
            outcomes.append(outcome)
            if fail_fast and outcome.failed:
                break
    return outcomes
