"""Exact solution concepts, profile algebra, and axiom audits for utility profiles.

All values are exact rationals: pass ints, strings like "3/4" or "0.9", or
fractions.Fraction; results come back as fractions.Fraction.
"""

from ._welfarekit import (
    Profile,
    anti_bentham,
    bentham,
    characterization,
    check_anonymity,
    check_continuity,
    check_mc,
    check_nonemptiness,
    check_oec,
    check_sec,
    check_unanimity,
    column_minima,
    column_sums,
    cyclic_aggregate_min,
    cyclic_aggregate_sum,
    dictator,
    evaluate,
    impossibility,
    independence_table,
    lemma1,
    meet,
    mix,
    parse_profile,
    permute,
    rawls,
    run_cli,
    search_counterexample,
    serialize_profile,
    sub_bentham,
    sub_rawls,
    subjective_mix,
    unanimous,
)

__all__ = [
    "Profile",
    "anti_bentham",
    "bentham",
    "characterization",
    "check_anonymity",
    "check_continuity",
    "check_mc",
    "check_nonemptiness",
    "check_oec",
    "check_sec",
    "check_unanimity",
    "column_minima",
    "column_sums",
    "cyclic_aggregate_min",
    "cyclic_aggregate_sum",
    "dictator",
    "evaluate",
    "impossibility",
    "independence_table",
    "lemma1",
    "meet",
    "mix",
    "parse_profile",
    "permute",
    "rawls",
    "run_cli",
    "search_counterexample",
    "serialize_profile",
    "sub_bentham",
    "sub_rawls",
    "subjective_mix",
    "unanimous",
]

__version__ = "0.1.0"
