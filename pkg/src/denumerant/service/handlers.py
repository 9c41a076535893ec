"""Envelope builders: the one place command payloads are computed and shaped.

Both the HTTP endpoints and the CLI call these functions, so a command's
output is identical no matter which transport carried it.  Every integer is
serialized as a decimal string and every rational as "p/q" (bare "p" when the
denominator is 1); decimal columns are display-only annotations derived from
the exact values.
"""

from __future__ import annotations

import math
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Iterable

from ..counting import PartSet, count, count_table, make_part_set
from ..errors import GcdNotOne, NonIntegerValue
from ..quasipoly import (
    fit_constituent,
    interpolate_constituents,
    leading_coefficient_expected,
)
from ..recurrences import IdentityReport, run_identity_suite

SCHEMA_VERSION = "1"

REDUCTION_RULE = (
    "when g = gcd(A) > 1 the count at n equals the count for A/g at n/g if g divides n "
    "and is 0 otherwise"
)


def rational_str(q: Fraction) -> str:
    return str(q)


def decimal_str(q: Fraction, significant_digits: int = 12) -> str:
    """Decimal rendering of an exact rational, for display next to it."""
    with localcontext() as ctx:
        ctx.prec = significant_digits
        return str(Decimal(q.numerator) / Decimal(q.denominator))


def _envelope(command: str, input_echo: dict[str, Any], result: Any) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input_echo": input_echo,
        "result": result,
        "exact": True,
    }


def _echo_parts(a_set: PartSet) -> list[str]:
    return [str(p) for p in a_set.parts]


def _require_gcd_one(a_set: PartSet) -> None:
    if a_set.gcd_all != 1:
        raise GcdNotOne(
            f"gcd of the parts is {a_set.gcd_all}, not 1; {REDUCTION_RULE} — "
            f"divide the parts through and rerun"
        )


def count_envelope(parts: Iterable[int], n: int) -> dict[str, Any]:
    a_set = make_part_set(parts)
    value = count(a_set, n)
    echo = {"parts": _echo_parts(a_set), "n": str(n)}
    return _envelope("count", echo, str(value))


def table_envelope(parts: Iterable[int], n_max: int) -> dict[str, Any]:
    a_set = make_part_set(parts)
    values = count_table(a_set, n_max)
    echo = {"parts": _echo_parts(a_set), "n_max": str(n_max)}
    result = {"n_max": str(n_max), "counts": [str(v) for v in values]}
    return _envelope("table", echo, result)


def quasipoly_envelope(parts: Iterable[int], extra_samples: int = 3) -> dict[str, Any]:
    a_set = make_part_set(parts)
    _require_gcd_one(a_set)
    q = interpolate_constituents(a_set, extra_samples)
    expected = leading_coefficient_expected(a_set)
    constituents = []
    all_match = True
    for r, poly in enumerate(q.constituents):
        matches = poly.leading_coefficient == expected
        all_match = all_match and matches
        constituents.append(
            {
                "residue": str(r),
                "coefficients": [rational_str(c) for c in poly.coeffs],
                "degree": str(poly.degree),
                "leading_coefficient": rational_str(poly.leading_coefficient),
                "matches_expected": matches,
            }
        )
    echo = {"parts": _echo_parts(a_set), "extra_samples": str(extra_samples)}
    result = {
        "period": str(q.period),
        "k": str(a_set.k),
        "expected_leading_coefficient": rational_str(expected),
        "verified_l_range": [str(q.verified_l_range[0]), str(q.verified_l_range[1])],
        "all_match": all_match,
        "constituents": constituents,
    }
    return _envelope("quasipoly", echo, result)


def _serialize_report(report: IdentityReport) -> dict[str, Any]:
    instance: dict[str, Any] = {}
    for key, value in report.instance.items():
        if isinstance(value, list):
            instance[key] = [str(v) for v in value]
        elif isinstance(value, str):
            instance[key] = value
        else:
            instance[key] = str(value)
    return {
        "identity": report.identity_name,
        "instance": instance,
        "lhs": None if report.lhs is None else str(report.lhs),
        "rhs": None if report.rhs is None else str(report.rhs),
        "holds": report.holds,
        "skipped": report.skipped,
    }


def verify_envelope(parts: Iterable[int], l_max: int = 3, seed: int = 0) -> dict[str, Any]:
    a_set = make_part_set(parts)
    _require_gcd_one(a_set)
    reports = run_identity_suite(a_set, l_max, seed)
    serialized = [_serialize_report(r) for r in reports]
    all_hold = all(r.holds is not False for r in reports)
    echo = {"parts": _echo_parts(a_set), "l_max": str(l_max), "seed": str(seed)}
    result = {
        "l_max": str(l_max),
        "seed": str(seed),
        "report_count": str(len(serialized)),
        "all_hold": all_hold,
        "reports": serialized,
    }
    return _envelope("verify", echo, result)


def asymptote_envelope(parts: Iterable[int], n_points: int = 8) -> dict[str, Any]:
    """Ratios of the exact count to its leading-order estimate at n = period * 2**j.

    The schedule sits on residue 0, so only that constituent is fitted (and
    over-verified); evaluating it keeps huge n cheap while staying exact.
    Points that fall inside the sampling table are additionally cross-checked
    against the raw count.
    """
    a_set = make_part_set(parts)
    _require_gcd_one(a_set)
    if n_points < 1:
        raise ValueError(f"n_points must be >= 1, got {n_points}")
    period, k = a_set.period, a_set.k
    l_hi = k - 1 + 3
    table = count_table(a_set, period * (l_hi + 1) - 1)
    constituent = fit_constituent(table, period, k, 0, l_hi)
    fact = math.factorial(k - 1)
    limit = Fraction(1, period * fact)
    points = []
    for j in range(1, n_points + 1):
        l = 1 << j
        n = period * l
        value = constituent(l)
        if value.denominator != 1 or value < 0:
            raise NonIntegerValue(
                f"constituent for residue 0 evaluates to {value} at l={l}"
            )
        p_n = int(value)
        if n < len(table) and table[n] != p_n:
            raise NonIntegerValue(
                f"constituent for residue 0 disagrees with the exact count at n={n}"
            )
        ratio = Fraction(p_n * period * fact, n ** (k - 1))
        points.append(
            {
                "j": str(j),
                "n": str(n),
                "ratio": rational_str(ratio),
                "ratio_decimal": decimal_str(ratio),
            }
        )
    echo = {"parts": _echo_parts(a_set), "n_points": str(n_points)}
    result = {
        "period": str(period),
        "k": str(k),
        "limit": rational_str(limit),
        "limit_decimal": decimal_str(limit),
        "points": points,
    }
    return _envelope("asymptote", echo, result)
