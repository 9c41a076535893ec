"""Machine verification of the recurrence identities behind the counting function.

Each verifier computes both sides of one identity with exact arithmetic and
returns an IdentityReport; nothing is ever trusted symbolically.  The batch
driver composes all verifiers over seeded, deterministic instances so the same
invocation always yields the same report list.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Any

from .counting import CountCache, PartSet, lemma1_split
from .errors import BelowValidityBound, GcdNotOne, PartNotInSet, WrongCardinality


@dataclass(frozen=True)
class CongruenceResult:
    """Solution set of coefficient * x = r (mod modulus)."""

    modulus: int
    solvable: bool
    solution_count: int
    solutions: tuple[int, ...]


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one identity instance.

    holds is True exactly when lhs equals rhs; a skipped report (identity not
    applicable, e.g. a single-part set) carries None on all three and sets the
    skipped flag.
    """

    identity_name: str
    instance: dict[str, Any]
    lhs: int | None
    rhs: int | None
    holds: bool | None
    skipped: bool = False


def _report(name: str, instance: dict[str, Any], lhs: int, rhs: int) -> IdentityReport:
    return IdentityReport(name, instance, lhs, rhs, lhs == rhs)


def _skip(name: str, reason: str) -> IdentityReport:
    return IdentityReport(name, {"reason": reason}, None, None, None, skipped=True)


def solve_congruence(coefficient: int, r: int, modulus: int) -> CongruenceResult:
    """All mutually incongruent solutions of coefficient * x = r (mod modulus).

    Solvable iff gcd(coefficient, modulus) divides r, in which case there are
    exactly gcd(coefficient, modulus) solutions, spaced modulus/gcd apart.
    """
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    c = coefficient % modulus
    target = r % modulus
    g = math.gcd(c, modulus)
    if target % g:
        return CongruenceResult(modulus, False, 0, ())
    step = modulus // g
    base = ((target // g) * pow(c // g, -1, step)) % step if step > 1 else 0
    return CongruenceResult(modulus, True, g, tuple(base + t * step for t in range(g)))


def telescoped_sums(
    a_set: PartSet, removed: int, l: int, r: int, cache: CountCache | None = None
) -> tuple[int, int]:
    """Filtered and unfiltered right-hand sums of the telescoped difference.

    The sum runs over i = 0 .. period/removed - 1 on counts of the remaining
    parts at period*l + r - i*removed.  The filtered variant keeps only terms
    where s = gcd(remaining parts) divides r - i*removed; the dropped terms
    are all zero because s divides every number the remaining set represents,
    so the two sums must agree.
    """
    if removed not in a_set.parts:
        raise PartNotInSet(f"{removed} is not a part of {a_set.parts}")
    cache = cache if cache is not None else CountCache()
    period = a_set.period
    rest = a_set.without(removed)
    s = math.gcd(*rest) if rest else 0
    filtered = 0
    unfiltered = 0
    for i in range(period // removed):
        term = cache.count(rest, period * l + r - i * removed)
        unfiltered += term
        arg = r - i * removed
        if (arg == 0) if s == 0 else (arg % s == 0):
            filtered += term
    return filtered, unfiltered


def telescoped_difference_sides(
    a_set: PartSet, removed: int, l: int, r: int, cache: CountCache | None = None
) -> IdentityReport:
    """Check count(Tl+r) - count(T(l-1)+r) against the restricted sum over the set minus one part.

    T is the period.  Negative arguments inside the sums count as zero.
    """
    if a_set.gcd_all != 1:
        raise GcdNotOne(f"gcd of {a_set.parts} is {a_set.gcd_all}, need 1")
    if removed not in a_set.parts:
        raise PartNotInSet(f"{removed} is not a part of {a_set.parts}")
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    period = a_set.period
    if not 0 <= r < period:
        raise ValueError(f"residue must lie in [0, {period}), got {r}")
    cache = cache if cache is not None else CountCache()
    lhs = cache.count(a_set.parts, period * l + r) - cache.count(
        a_set.parts, period * (l - 1) + r
    )
    rhs, _ = telescoped_sums(a_set, removed, l, r, cache)
    instance = {"parts": list(a_set.parts), "removed": removed, "l": l, "r": r}
    return _report("telescoped_difference", instance, lhs, rhs)


def k2_closed_form(
    a_set: PartSet, l: int, r: int, cache: CountCache | None = None
) -> IdentityReport:
    """Check the two-part closed form: count(a1*a2*l + r) = l + count(r)."""
    if a_set.k != 2:
        raise WrongCardinality(f"closed form needs exactly 2 parts, got {a_set.k}")
    if a_set.gcd_all != 1:
        raise GcdNotOne(f"gcd of {a_set.parts} is {a_set.gcd_all}, need 1")
    if l < 0:
        raise ValueError(f"l must be >= 0, got {l}")
    period = a_set.period
    if not 0 <= r < period:
        raise ValueError(f"residue must lie in [0, {period}), got {r}")
    cache = cache if cache is not None else CountCache()
    lhs = cache.count(a_set.parts, period * l + r)
    rhs = l + cache.count(a_set.parts, r)
    instance = {"parts": list(a_set.parts), "l": l, "r": r}
    return _report("k2_closed_form", instance, lhs, rhs)


def sertoz_ozluk_bound(a_set: PartSet) -> int:
    """Threshold above which the alternating recurrence is guaranteed."""
    return a_set.period - sum(a_set.parts) + a_set.k - 2


def sertoz_ozluk_check(
    a_set: PartSet, n: int, force: bool = False, cache: CountCache | None = None
) -> IdentityReport:
    """Check the alternating recurrence whose value telescopes to 1.

    The sum runs over i = n-k+2 .. n with weights (-1)**(n-i) * C(k-2, n-i);
    counts at negative arguments are zero.  Below the validity bound the check
    raises unless force=True, in which case the report carries whatever was
    computed, without a correctness guarantee.
    """
    if a_set.gcd_all != 1:
        raise GcdNotOne(f"gcd of {a_set.parts} is {a_set.gcd_all}, need 1")
    k = a_set.k
    if k < 2:
        raise WrongCardinality("the alternating recurrence needs at least 2 parts")
    bound = sertoz_ozluk_bound(a_set)
    if n <= bound and not force:
        raise BelowValidityBound(
            f"n={n} is not above the validity bound {bound}; pass force=True to evaluate anyway"
        )
    cache = cache if cache is not None else CountCache()
    period = a_set.period
    rhs = 0
    for i in range(n - k + 2, n + 1):
        m = n - i
        weight = (-1) ** m * math.comb(k - 2, m) if 0 <= m <= k - 2 else 0
        if weight:
            rhs += weight * (
                cache.count(a_set.parts, i) - cache.count(a_set.parts, i - period)
            )
    instance = {"parts": list(a_set.parts), "n": n}
    return _report("sertoz_ozluk", instance, 1, rhs)


def run_identity_suite(
    a_set: PartSet, l_max: int, seed: int, cache: CountCache | None = None
) -> list[IdentityReport]:
    """Exercise every verifier over deterministic-from-seed instances.

    Covers all residues and all l up to l_max for the residue-indexed
    identities, every choice of removed part for the telescoped difference
    (with a paired filter-equivalence report per instance), 50 consecutive n
    above the validity bound for the alternating recurrence, plus seeded
    congruence and split-identity spot checks.  Identities that need more
    parts than the set has are reported as explicitly skipped.
    """
    if a_set.gcd_all != 1:
        raise GcdNotOne(f"gcd of {a_set.parts} is {a_set.gcd_all}, need 1")
    if l_max < 1:
        raise ValueError(f"l_max must be >= 1, got {l_max}")
    rng = random.Random(seed)
    cache = cache if cache is not None else CountCache()
    k, period, parts = a_set.k, a_set.period, a_set.parts
    reports: list[IdentityReport] = []

    for _ in range(20):
        modulus = rng.randint(1, 50)
        coefficient = rng.randrange(modulus)
        target = rng.randrange(modulus)
        result = solve_congruence(coefficient, target, modulus)
        brute = sum(1 for x in range(modulus) if (coefficient * x - target) % modulus == 0)
        instance = {"coefficient": coefficient, "r": target, "modulus": modulus}
        reports.append(_report("congruence_count", instance, result.solution_count, brute))

    for _ in range(12):
        a = parts[rng.randrange(k)]
        n = rng.randint(a, period * (l_max + 1))
        with_part, without_part = lemma1_split(a_set, a, n)
        instance = {"parts": list(parts), "a": a, "n": n}
        reports.append(
            _report("lemma1_split", instance, cache.count(parts, n), with_part + without_part)
        )

    if k >= 2:
        for removed in parts:
            for r in range(period):
                for l in range(1, l_max + 1):
                    reports.append(
                        telescoped_difference_sides(a_set, removed, l, r, cache)
                    )
                    filtered, unfiltered = telescoped_sums(a_set, removed, l, r, cache)
                    instance = {
                        "parts": list(parts),
                        "removed": removed,
                        "l": l,
                        "r": r,
                    }
                    reports.append(
                        _report("telescoped_filter_equivalence", instance, filtered, unfiltered)
                    )
    else:
        reports.append(_skip("telescoped_difference", "requires at least 2 parts"))

    if k == 2:
        for r in range(period):
            for l in range(l_max + 1):
                reports.append(k2_closed_form(a_set, l, r, cache))
    else:
        reports.append(_skip("k2_closed_form", f"requires exactly 2 parts, set has {k}"))

    if k >= 2:
        bound = sertoz_ozluk_bound(a_set)
        for n in range(bound + 1, bound + 51):
            reports.append(sertoz_ozluk_check(a_set, n, cache=cache))
    else:
        reports.append(_skip("sertoz_ozluk", "requires at least 2 parts"))

    return reports
