"""Molien series of permutation groups in canonical form over {1..n}.

For a permutation matrix det(Id - l*P) is the product of (1 - l^len) over
the cycles of P, so the group average only depends on the cycle-type census.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .perm import Permutation, PermGroup, cycle_type
from .series import (
    GradedSeries,
    NotDivisible,
    NotRepresentable,
    Poly,
    coeffs_json,
    exact_divide,
    product_one_minus,
)


class MolienInconsistency(ArithmeticError):
    """The averaged series failed to produce a nonnegative integer numerator."""


@dataclass(frozen=True)
class MolienResult:
    group_order: int
    raw_terms: tuple[tuple[int, tuple[int, ...]], ...]  # (multiplicity, cycle type)
    canonical: GradedSeries
    numerator_at_one: int

    @property
    def numerator(self) -> Poly:
        return self.canonical.numerator

    def to_json(self) -> dict:
        return {
            "order": self.group_order,
            "raw_terms": [
                {"multiplicity": m, "cycle_type": list(ct)} for m, ct in self.raw_terms
            ],
            "numerator": coeffs_json(self.numerator),
            "denominator_degrees": list(self.canonical.degrees),
            "h_at_one": self.numerator_at_one,
        }


def element_denominator(p: Permutation) -> tuple[int, ...]:
    """Degrees d_i with det(Id - l*P) = prod (1 - l^d_i)."""
    return cycle_type(p)


def _grouped_terms(G: PermGroup) -> list[tuple[int, tuple[int, ...]]]:
    census = G.cycle_type_census()
    # identity first, then fewer and fewer cycles, as in the usual hand display
    return sorted(((m, ct) for ct, m in census.items()), key=lambda t: (-len(t[1]), t[1]))


def _sum_by_cofactors(terms, n: int) -> Poly:
    """sum m / prod(1 - l^ct) times prod_{i<=n}(1 - l^i), one cofactor per cycle type."""
    full = product_one_minus(range(1, n + 1))
    total = Poly()
    for m, ct in terms:
        total = total + m * exact_divide(full, product_one_minus(ct))
    return total


def _sum_by_common_denominator(terms, n: int) -> Poly:
    """Same quantity as ``_sum_by_cofactors`` via a common denominator of all factors.

    The common denominator takes each factor (1 - l^d) with its largest
    multiplicity over all cycle types; only one final division is needed.
    """
    maxmult: Counter = Counter()
    for _, ct in terms:
        for d, k in Counter(ct).items():
            maxmult[d] = max(maxmult[d], k)
    common = list(maxmult.elements())
    total = Poly()
    for m, ct in terms:
        missing = list((Counter(common) - Counter(ct)).elements())
        total = total + m * product_one_minus(missing)
    return exact_divide(total * product_one_minus(range(1, n + 1)), product_one_minus(common))


def molien_series(G: PermGroup) -> MolienResult:
    n = G.n
    terms = _grouped_terms(G)
    try:
        summed = _sum_by_cofactors(terms, n)
    except NotDivisible:
        summed = _sum_by_common_denominator(terms, n)
    numerator = Poly(Fraction(c, G.order) for c in summed.coeffs)
    if not numerator.is_integral() or any(c < 0 for c in numerator.coeffs):
        raise MolienInconsistency(f"non-integral or negative Molien numerator {numerator!r}")
    h1 = numerator(1)
    if h1 * G.order != factorial(n):
        raise MolienInconsistency(f"h(1) * |G| = {h1 * G.order} != {n}!")
    return MolienResult(
        group_order=G.order,
        raw_terms=tuple(terms),
        canonical=GradedSeries(numerator, tuple(range(1, n + 1))),
        numerator_at_one=h1,
    )


def denumerant(parts, d: int) -> int:
    """Number of nonnegative solutions of sum parts[i] * e_i == d."""
    ways = [1] + [0] * d
    for p in parts:
        for k in range(p, d + 1):
            ways[k] += ways[k - p]
    return ways[d]


def fixed_monomial_count(p: Permutation, d: int) -> int:
    """Degree-d monomials fixed by p: exponent vectors constant on each cycle."""
    return denumerant(cycle_type(p), d)


def burnside_count(G: PermGroup, d: int) -> int:
    total = sum(fixed_monomial_count(g, d) for g in G.elements)
    q, r = divmod(total, G.order)
    if r:
        raise MolienInconsistency(f"Burnside sum {total} not divisible by |G| = {G.order}")
    return q


__all__ = [
    "MolienResult",
    "MolienInconsistency",
    "NotRepresentable",
    "element_denominator",
    "molien_series",
    "fixed_monomial_count",
    "burnside_count",
    "denumerant",
]
