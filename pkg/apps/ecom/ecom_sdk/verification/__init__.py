"""
Verification Suites
===================
"paper" recomputes the known reference numbers for Ecom G; "properties" runs
seeded structural checks. Both are lists of Checks run by run_checks.
"""

from ecom_sdk.verification.checks import Check, CheckResult, Verdict, run_check, run_checks, summarize
from ecom_sdk.verification.property_suite import property_checks
from ecom_sdk.verification.reference_suite import reference_checks

SUITES = {
    "paper": reference_checks,
    "properties": property_checks,
}

__all__ = [
    "Check",
    "CheckResult",
    "SUITES",
    "Verdict",
    "property_checks",
    "reference_checks",
    "run_check",
    "run_checks",
    "summarize",
]
