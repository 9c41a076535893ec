"""Exact arithmetic for partitions with parts in a fixed finite set.

The library computes the restricted partition count by dynamic programming,
recovers its quasi-polynomial constituents by exact rational interpolation,
and machine-verifies the recurrence identities the structure rests on.  A
FastAPI service and a thin CLI client expose the same operations.
"""

from .counting import (
    ORACLE_PARTITION_LIMIT,
    CountCache,
    PartSet,
    Partition,
    count,
    count_for_parts,
    count_table,
    enumerate_partitions,
    lemma1_split,
    make_part_set,
)
from .quasipoly import (
    Polynomial,
    QuasiPolynomial,
    asymptotic_ratio,
    eval_quasipoly,
    interpolate_constituents,
    leading_coefficient_expected,
    limit_check,
    newton_interpolation,
)
from .recurrences import (
    CongruenceResult,
    IdentityReport,
    k2_closed_form,
    run_identity_suite,
    sertoz_ozluk_bound,
    sertoz_ozluk_check,
    solve_congruence,
    telescoped_difference_sides,
    telescoped_sums,
)

__version__ = "0.1.0"

__all__ = [
    "ORACLE_PARTITION_LIMIT",
    "CongruenceResult",
    "CountCache",
    "IdentityReport",
    "PartSet",
    "Partition",
    "Polynomial",
    "QuasiPolynomial",
    "asymptotic_ratio",
    "count",
    "count_for_parts",
    "count_table",
    "enumerate_partitions",
    "eval_quasipoly",
    "interpolate_constituents",
    "k2_closed_form",
    "leading_coefficient_expected",
    "lemma1_split",
    "limit_check",
    "make_part_set",
    "newton_interpolation",
    "run_identity_suite",
    "sertoz_ozluk_bound",
    "sertoz_ozluk_check",
    "solve_congruence",
    "telescoped_difference_sides",
    "telescoped_sums",
]
