"""
Check Runner
============
A check is a module-level function returning (Verdict, details). The runner
executes each under the active budget, turns budget exhaustion into SKIPPED,
and reports in declaration order whatever the number of worker processes.
"""

import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple

from tqdm import tqdm

from ecom_sdk.errors import BudgetExceeded
from ecom_sdk.settings import Settings, SharedSettings

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


Outcome = Tuple[Verdict, Dict[str, Any]]


def verdict(ok: bool) -> Verdict:
    return Verdict.PASS if ok else Verdict.FAIL


@dataclass(frozen=True)
class Check:
    """
    Attributes:
        name: stable identifier printed in reports
        function: callable(**kwargs) -> Outcome
        stretch: runs under the stretch time limit; exhaustion is SKIPPED
        kwargs: arguments for function
    """
    name: str
    function: Callable[..., Outcome]
    stretch: bool = False
    kwargs: Dict[str, Any] = field(default_factory=dict)


@dataclass
class CheckResult:
    name: str
    verdict: Verdict
    details: Dict[str, Any] = field(default_factory=dict)
    budget_exhausted: bool = False

    def to_dict(self) -> Dict[str, Any]:
        out = {"name": self.name, "verdict": self.verdict.value, "details": self.details}
        if self.budget_exhausted:
            out["budget_exhausted"] = True
        return out


def run_check(check: Check, settings: Settings) -> CheckResult:
    """Run one check under settings.budget (or the stretch limit)."""
    SharedSettings.configure(settings)
    budget = settings.budget
    if check.stretch:
        budget = replace(budget, time_limit_seconds=settings.stretch_seconds)
    with budget.active():
        try:
            outcome, details = check.function(**check.kwargs)
        except BudgetExceeded as e:
            logger.info("%s: budget exhausted (%s)", check.name, e)
            return CheckResult(check.name, Verdict.SKIPPED, {"budget": e.to_dict()}, budget_exhausted=True)
        except Exception as e:
            logger.exception("%s raised", check.name)
            return CheckResult(check.name, Verdict.FAIL, {"error": f"{type(e).__name__}: {e}"})
    return CheckResult(check.name, outcome, details)


def run_checks(
    checks: List[Check],
    settings: Settings,
    jobs: int = 1,
    progress: bool = True,
    description: Optional[str] = None,
) -> List[CheckResult]:
    """
    Run checks, in worker processes when jobs > 1.

    Returns:
        One CheckResult per check, in the order given
    """
    bar = tqdm(total=len(checks), desc=description, disable=not progress, file=sys.stderr, leave=False)
    results: List[Optional[CheckResult]] = [None] * len(checks)
    try:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                futures = [executor.submit(run_check, check, settings) for check in checks]
                for i, future in enumerate(futures):
                    results[i] = future.result()
                    bar.update(1)
        else:
            for i, check in enumerate(checks):
                bar.set_postfix_str(check.name)
                results[i] = run_check(check, settings)
                bar.update(1)
    finally:
        bar.close()

    for r in results:
        logger.info("%-8s %s", r.verdict.value, r.name)
    return results


def summarize(results: List[CheckResult]) -> Dict[str, int]:
    counts = {v.value: 0 for v in Verdict}
    for r in results:
        counts[r.verdict.value] += 1
    return counts
