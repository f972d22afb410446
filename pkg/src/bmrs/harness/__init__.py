"""Exhaustive small-instance verification of the constructions."""
from ..core import enumerate_words as enumerate_strings
from ..errors import UnknownSuiteError
from ..transducer import SubseqTransducer, run_transducer
from .equality import SuiteReport, check_equal_transductions
from .registry import Fixture, fixture, fixtures, probe_scheme, strict_fixtures
from .suites import SUITES, default_bound, run_suite, suite_names

__all__ = [
    "Fixture",
    "SUITES",
    "SubseqTransducer",
    "SuiteReport",
    "UnknownSuiteError",
    "check_equal_transductions",
    "default_bound",
    "enumerate_strings",
    "fixture",
    "fixtures",
    "probe_scheme",
    "run_suite",
    "run_transducer",
    "strict_fixtures",
    "suite_names",
]
