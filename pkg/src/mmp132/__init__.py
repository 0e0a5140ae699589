"""Distributions of quadrant marked mesh patterns over 132-avoiding permutations.

The package computes the polynomials Q_n(x) recording, over all
132-avoiding permutations of length n, how many positions match a marked
mesh pattern with quadrant thresholds (a, b, c, d).  Three independent
routes are provided and cross-checked: a brute-force enumeration oracle,
truncated-series evaluation of the known generating functions, and
convolution recursions on the coefficient tables.
"""

from .errors import (
    CapExceededError,
    ExactDivisionError,
    FormulaNotCoveredError,
    FormulaThresholdError,
    Mmp132Error,
    OeisUnavailableError,
    PatternSyntaxError,
    PermutationError,
)
from .perms import (
    EMPTY,
    PatternSpec,
    enumerate_avoiders,
    is_132_avoiding,
    mmp_count,
    parse_pattern,
    parse_permutation,
    pattern_of,
    reduce,
)
from .series import DEFAULT_ORDER, RationalGF, TSeries, XPoly, catalan
from .oracle import DEFAULT_CAP, DistCache, DistTable, brute_force_Q, build_table, build_tables
from .recursions import gf_dispatch, gf_supported, rec_rows, recursion_check
from .formulas import (
    gf_catalog,
    highest_coeff,
    identity_checks,
    second_coeff,
    special_counts,
    verify_catalog,
    verify_formulas,
)
from .reference import ERRATA, expected_rows, reference_check
from .oeis import OEIS_CLAIMS, OeisSequence, compare, fetch, verify_oeis
from .suites import SUITE_NAMES, run_suite

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "DEFAULT_CAP",
    "DEFAULT_ORDER",
    "DistCache",
    "DistTable",
    "EMPTY",
    "ERRATA",
    "ExactDivisionError",
    "FormulaNotCoveredError",
    "FormulaThresholdError",
    "Mmp132Error",
    "OEIS_CLAIMS",
    "OeisSequence",
    "OeisUnavailableError",
    "PatternSpec",
    "PatternSyntaxError",
    "PermutationError",
    "RationalGF",
    "SUITE_NAMES",
    "TSeries",
    "XPoly",
    "brute_force_Q",
    "build_table",
    "build_tables",
    "catalan",
    "compare",
    "enumerate_avoiders",
    "expected_rows",
    "fetch",
    "gf_catalog",
    "gf_dispatch",
    "gf_supported",
    "highest_coeff",
    "identity_checks",
    "is_132_avoiding",
    "mmp_count",
    "parse_pattern",
    "parse_permutation",
    "pattern_of",
    "rec_rows",
    "recursion_check",
    "reduce",
    "reference_check",
    "run_suite",
    "second_coeff",
    "special_counts",
    "verify_catalog",
    "verify_formulas",
    "verify_oeis",
    "__version__",
]
