from matlc.check.corpus import Fixture, build_corpus, find_fixture
from matlc.check.runner import Case, CaseOutcome, run_cases, run_isolated
from matlc.check.suites import SUITES, CheckOptions, SuiteResult, run_suite, run_suites

__all__ = [
    "Fixture",
    "build_corpus",
    "find_fixture",
    "Case",
    "CaseOutcome",
    "run_cases",
    "run_isolated",
    "SUITES",
    "CheckOptions",
    "SuiteResult",
    "run_suite",
    "run_suites",
]
