"""Quasi-polynomial structure of the restricted partition count.

For a part set with gcd 1 and k parts, the count is a quasi-polynomial whose
period is the product of the parts: along each residue class r of that period,
the count at period*l + r is a polynomial in l of degree k-1, and every
constituent shares the leading coefficient period**(k-2) / (k-1)!.  This
module recovers those constituents by exact rational interpolation and offers
diagnostics for the induced asymptotic growth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .counting import PartSet, count, count_table
from .errors import GcdNotOne, NonIntegerValue, ResidualNonZero


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial with exact rational coefficients, ascending powers.

    Trailing zero coefficients are stripped on construction; the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        normalized = tuple(Fraction(c) for c in self.coeffs)
        while normalized and normalized[-1] == 0:
            normalized = normalized[:-1]
        object.__setattr__(self, "coeffs", normalized)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: int | Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class QuasiPolynomial:
    """Period plus one constituent polynomial per residue class.

    verified_l_range is the inclusive interval of l values at which every
    constituent was checked against the exact count during construction.
    """

    part_set: PartSet
    period: int
    constituents: tuple[Polynomial, ...]
    verified_l_range: tuple[int, int]

    def __post_init__(self) -> None:
        if self.period != self.part_set.period:
            raise ValueError(
                f"period {self.period} does not match the part set's {self.part_set.period}"
            )
        if len(self.constituents) != self.period:
            raise ValueError(
                f"need one constituent per residue: {len(self.constituents)} != {self.period}"
            )


def newton_interpolation(xs: Sequence[int], ys: Sequence[int | Fraction]) -> Polynomial:
    """The unique polynomial of degree < len(xs) through the given points.

    Divided differences over exact rationals, then expansion of the Newton
    form into dense coefficients.  No conditioning concerns: everything is a
    Fraction.
    """
    if len(xs) != len(ys) or not xs:
        raise ValueError("need equally many xs and ys, at least one point")
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    # Horner-style expansion: poly <- poly*(x - xs[i]) + dd[i].
    coeffs = [dd[n - 1]]
    for i in range(n - 2, -1, -1):
        expanded = [Fraction(0)] * (len(coeffs) + 1)
        for power, c in enumerate(coeffs):
            expanded[power + 1] += c
            expanded[power] -= c * xs[i]
        expanded[0] += dd[i]
        coeffs = expanded
    return Polynomial(tuple(coeffs))


def fit_constituent(
    table: Sequence[int], period: int, k: int, residue: int, l_hi: int
) -> Polynomial:
    """Fit one residue's constituent from a counting table and over-verify it.

    The first k samples (l = 0..k-1) determine the degree-<k polynomial; the
    remaining samples up to l_hi must lie on it exactly, otherwise
    ResidualNonZero pinpoints the residue and the failing l.
    """
    samples = [table[period * l + residue] for l in range(l_hi + 1)]
    poly = newton_interpolation(range(k), samples[:k])
    for l in range(k, l_hi + 1):
        predicted = poly(l)
        if predicted != samples[l]:
            raise ResidualNonZero(residue, l, samples[l], predicted)
    return poly


def interpolate_constituents(a_set: PartSet, extra_samples: int = 3) -> QuasiPolynomial:
    """Recover every constituent polynomial of the counting quasi-polynomial.

    Requires gcd 1.  Each residue class is sampled at l = 0..k-1+extra_samples
    in a single table sweep; the first k points fix the polynomial and the
    extras over-determine it, so any off-by-one in the counting engine (or a
    constituent that is not yet polynomial at small l) surfaces as
    ResidualNonZero rather than a silently wrong fit.
    """
    if a_set.gcd_all != 1:
        raise GcdNotOne(f"gcd of {a_set.parts} is {a_set.gcd_all}, need 1")
    if extra_samples < 1:
        raise ValueError(f"extra_samples must be >= 1, got {extra_samples}")
    period, k = a_set.period, a_set.k
    l_hi = k - 1 + extra_samples
    table = count_table(a_set, period * (l_hi + 1) - 1)
    constituents = tuple(
        fit_constituent(table, period, k, r, l_hi) for r in range(period)
    )
    return QuasiPolynomial(
        part_set=a_set,
        period=period,
        constituents=constituents,
        verified_l_range=(0, l_hi),
    )


def eval_quasipoly(q: QuasiPolynomial, n: int) -> int:
    """Evaluate the quasi-polynomial at n via its residue's constituent.

    The result must be a nonnegative integer; a non-integer rational means
    the stored constituents are inconsistent and evaluation aborts rather
    than rounding.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    l, r = divmod(n, q.period)
    value = q.constituents[r](l)
    if value.denominator != 1 or value < 0:
        raise NonIntegerValue(
            f"constituent for residue {r} evaluates to {value} at l={l}"
        )
    return int(value)


def leading_coefficient_expected(a_set: PartSet) -> Fraction:
    """Shared leading coefficient of every constituent: period**(k-2) / (k-1)!.

    For k=1 a gcd-1 set can only be {1}; the formula then reads 1**(-1)/0! = 1,
    matching the constant constituent.
    """
    if a_set.gcd_all != 1:
        raise GcdNotOne(f"gcd of {a_set.parts} is {a_set.gcd_all}, need 1")
    k = a_set.k
    return Fraction(a_set.period) ** (k - 2) / math.factorial(k - 1)


def asymptotic_ratio(a_set: PartSet, n: int) -> Fraction:
    """Exact ratio of the true count to its leading-order estimate.

    The estimate is n**(k-1) / (period * (k-1)!); the returned Fraction is
    count * period * (k-1)! / n**(k-1) and tends to 1 as n grows.
    """
    if a_set.gcd_all != 1:
        raise GcdNotOne(f"gcd of {a_set.parts} is {a_set.gcd_all}, need 1")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    k = a_set.k
    numerator = count(a_set, n) * a_set.period * math.factorial(k - 1)
    return Fraction(numerator, n ** (k - 1))


def limit_check(a_set: PartSet, r: int, l_values: Sequence[int]) -> list[Fraction]:
    """count(period*l + r) / (period*l + r)**(k-1) for each requested l.

    The sequence converges to 1 / (period * (k-1)!); callers assert the
    approach.  All values are exact Fractions computed from one table sweep.
    """
    if a_set.gcd_all != 1:
        raise GcdNotOne(f"gcd of {a_set.parts} is {a_set.gcd_all}, need 1")
    period, k = a_set.period, a_set.k
    if not 0 <= r < period:
        raise ValueError(f"residue must lie in [0, {period}), got {r}")
    if not l_values:
        return []
    if any(b <= a for a, b in zip(l_values, l_values[1:])):
        raise ValueError("l_values must be strictly increasing")
    if l_values[0] < 0:
        raise ValueError("l_values must be nonnegative")
    if period * l_values[0] + r < 1 and k > 1:
        raise ValueError("period*l + r must be >= 1")
    table = count_table(a_set, period * max(l_values) + r)
    return [
        Fraction(table[period * l + r], (period * l + r) ** (k - 1)) for l in l_values
    ]
