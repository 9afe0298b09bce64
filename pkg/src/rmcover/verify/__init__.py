"""Verification pipeline: lemma-value checks, witness search, bound propagation."""

from .checks import (
    ASSUMPTIONS,
    GROUP_ORDER,
    VerifyConfig,
    VerifyContext,
    check_bounds,
    check_concat_bound_samples,
    check_nfh_values,
    check_pair_profiles,
    check_preamble,
    check_representative_nl2,
    check_s16_counts,
    check_witness,
    propagate_bounds,
    run_full_verification,
)
from .fixtures import EXPECTED_NL2, FUN_NAMES, REPRESENTATIVES, Representative, fixture_table
from .report import (
    REPORT_SCHEMA,
    SCHEMA_VERSION,
    BoundRow,
    BoundTable,
    CheckResult,
    VerificationReport,
)
from .witness import WitnessResult, search_witness

__all__ = [
    "ASSUMPTIONS",
    "GROUP_ORDER",
    "VerifyConfig",
    "VerifyContext",
    "check_bounds",
    "check_concat_bound_samples",
    "check_nfh_values",
    "check_pair_profiles",
    "check_preamble",
    "check_representative_nl2",
    "check_s16_counts",
    "check_witness",
    "propagate_bounds",
    "run_full_verification",
    "EXPECTED_NL2",
    "FUN_NAMES",
    "REPRESENTATIVES",
    "Representative",
    "fixture_table",
    "REPORT_SCHEMA",
    "SCHEMA_VERSION",
    "BoundRow",
    "BoundTable",
    "CheckResult",
    "VerificationReport",
    "WitnessResult",
    "search_witness",
]
