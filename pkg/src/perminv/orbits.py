"""Monomial orbits, orbit sums and desk-scale spanning checks.

The group acts on exponent vectors by ``(sigma.A)[sigma(i)] = A[i]``, the
action induced by sigma(x_i) = x_sigma(i).

A monomial x^A has a gap when some value r < ht(A) is missing from its
exponents while every value r+1..ht(A) is present. Quantifying over all r
would make every monomial gapped (take r > ht(A)), so r is bounded by
ht(A). Under this reading x^A is gap-free exactly when its exponents cover
{0, 1, ..., ht(A)}; a gap-free exponent vector then has ht <= n - 1 and
degree <= n(n-1)/2, which makes Goebel's generating set finite.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Sequence

from .perm import PermGroup, Permutation

DEFAULT_ENUM_CAP = 10**6
DEFAULT_DIM_CAP = 500


class DimensionMismatch(ValueError):
    pass


class EnumerationCapExceeded(RuntimeError):
    pass


class NotInvariant(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(self.exponents)
        if any(a < 0 for a in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def ht(self) -> int:
        return max(self.exponents, default=0)

    @property
    def expset(self) -> frozenset[int]:
        return frozenset(self.exponents)

    def __str__(self) -> str:
        factors = [
            f"x{i}" if a == 1 else f"x{i}^{a}"
            for i, a in enumerate(self.exponents, start=1)
            if a
        ]
        return "*".join(factors) or "1"


def _exps(A) -> tuple[int, ...]:
    return A.exponents if isinstance(A, Monomial) else tuple(A)


def act(p: Permutation, A: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(A)
    for i, a in enumerate(A):
        out[p.image[i]] = a
    return tuple(out)


@dataclass(frozen=True)
class MonomialOrbit:
    representative: Monomial  # lexicographically greatest member
    members: tuple[Monomial, ...]

    @property
    def degree(self) -> int:
        return self.representative.degree

    @property
    def size(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "representative": list(self.representative.exponents),
            "orbit_size": self.size,
        }


def orbit(G: PermGroup, A) -> MonomialOrbit:
    A = _exps(A)
    if len(A) != G.n:
        raise DimensionMismatch(f"exponent vector of length {len(A)} for a group on {G.n} points")
    members = sorted({act(g, A) for g in G.elements})
    return MonomialOrbit(Monomial(members[-1]), tuple(Monomial(m) for m in members))


class MultiPoly:
    """Sparse polynomial in x_1..x_n with exact rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | Iterable = ()):
        self.n = n
        items = terms.items() if isinstance(terms, dict) else terms
        clean: dict[tuple[int, ...], int | Fraction] = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != n:
                raise DimensionMismatch(f"term {exps} in a polynomial on {n} variables")
            clean[exps] = clean.get(exps, 0) + c
        self.terms = {
            e: (c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c)
            for e, c in sorted(clean.items())
            if c != 0
        }

    @classmethod
    def constant(cls, n: int, c=1) -> MultiPoly:
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, A, c=1) -> MultiPoly:
        A = _exps(A)
        return cls(len(A), {A: c})

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    @property
    def degree(self) -> int | None:
        return max((sum(e) for e in self.terms), default=None)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.terms.items())))

    def __add__(self, other: MultiPoly) -> MultiPoly:
        merged = dict(self.terms)
        for e, c in other.terms.items():
            merged[e] = merged.get(e, 0) + c
        return MultiPoly(self.n, merged)

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            return MultiPoly(self.n, {e: c * other for e, c in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.n, out)

    __rmul__ = __mul__

    def permute(self, p: Permutation) -> MultiPoly:
        return MultiPoly(self.n, {act(p, e): c for e, c in self.terms.items()})

    def is_invariant(self, G: PermGroup) -> bool:
        gens = G.generators or G.elements
        return all(self.permute(g) == self for g in gens)

    def __repr__(self) -> str:
        return f"MultiPoly({self.n}, {self.terms!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            mono = str(Monomial(e))
            if mono == "1":
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def orbit_sum(G: PermGroup, A) -> MultiPoly:
    """Sum of the distinct monomials in the orbit of x^A, each with coefficient 1."""
    orb = orbit(G, A)
    return MultiPoly(G.n, {m.exponents: 1 for m in orb.members})


def elementary_symmetric(n: int, k: int) -> MultiPoly:
    terms = {}
    for idx in itertools.combinations(range(n), k):
        e = [0] * n
        for i in idx:
            e[i] = 1
        terms[tuple(e)] = 1
    return MultiPoly(n, terms)


def compositions(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """All exponent vectors of length n and total degree d, in lexicographic order."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for a in range(d + 1):
        for rest in compositions(n - 1, d - a):
            yield (a,) + rest


def _check_monomial_count(n: int, d: int, cap: int) -> None:
    count = comb(d + n - 1, n - 1) if n else int(d == 0)
    if count > cap:
        raise EnumerationCapExceeded(
            f"{count} monomials of degree {d} in {n} variables exceed cap {cap}"
        )


def degree_orbits(G: PermGroup, d: int, cap: int = DEFAULT_ENUM_CAP) -> list[MonomialOrbit]:
    """All orbits of degree-d monomials, sorted by representative."""
    _check_monomial_count(G.n, d, cap)
    seen: set[tuple[int, ...]] = set()
    out = []
    for A in compositions(G.n, d):
        if A in seen:
            continue
        orb = orbit(G, A)
        seen.update(m.exponents for m in orb.members)
        out.append(orb)
    return sorted(out, key=lambda o: o.representative)


def orbit_count(G: PermGroup, d: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    """dim K[V]^G_d, by explicit enumeration of degree-d monomial orbits."""
    return len(degree_orbits(G, d, cap))


def has_gap(A) -> bool:
    A = Monomial(_exps(A))
    return not A.expset >= set(range(A.ht + 1))


def gobel_generators(G: PermGroup, cap: int = DEFAULT_ENUM_CAP) -> list[MonomialOrbit]:
    """Orbits of gap-free monomials of positive degree, plus that of x_1 x_2 ... x_n.

    Sorted by (degree, representative).
    """
    n = G.n
    if n**n > cap:
        raise EnumerationCapExceeded(f"{n}^{n} candidate exponent vectors exceed cap {cap}")
    reps: dict[tuple[int, ...], MonomialOrbit] = {}
    for A in itertools.product(range(n), repeat=n):
        if sum(A) == 0 or has_gap(A):
            continue
        orb = orbit(G, A)
        reps.setdefault(orb.representative.exponents, orb)
    top = orbit(G, (1,) * n)
    reps.setdefault(top.representative.exponents, top)
    return sorted(reps.values(), key=lambda o: (o.degree, o.representative))


class AnOrbitClass(Enum):
    SYMMETRIC = "symmetric"
    SPLIT = "split"


def classify_an_orbit(A, n: int) -> AnOrbitClass:
    """Split iff the exponents are pairwise distinct; otherwise the A_n-orbit
    of x^A equals its S_n-orbit."""
    A = _exps(A)
    if len(A) != n or n < 2:
        raise DimensionMismatch(f"need an exponent vector of length n >= 2, got {A} for n={n}")
    return AnOrbitClass.SPLIT if len(set(A)) == n else AnOrbitClass.SYMMETRIC


def rational_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix over Q by fraction-exact Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            if f:
                f /= pr[col]
                row = m[r]
                for c in range(col, ncols):
                    row[c] -= f * pr[c]
        rank += 1
        if rank == len(m):
            break
    return rank


def _products_of_degree(gens: Sequence[MultiPoly], degs: Sequence[int], d: int, start: int = 0):
    """Yield index multisets (nondecreasing) whose degrees sum to d."""
    if d == 0:
        yield ()
        return
    for i in range(start, len(gens)):
        if degs[i] <= d:
            for rest in _products_of_degree(gens, degs, d - degs[i], i):
                yield (i,) + rest


def spans_degree(
    gens: Sequence[MultiPoly],
    G: PermGroup,
    d: int,
    cap: int = DEFAULT_ENUM_CAP,
    dim_cap: int = DEFAULT_DIM_CAP,
) -> bool:
    """Do the degree-d products of ``gens`` span K[V]^G_d?

    Products are invariant, so each is recorded by its coefficients at the
    orbit representatives; the span is full iff that matrix has rank
    dim K[V]^G_d.
    """
    for f in gens:
        if f.n != G.n:
            raise DimensionMismatch(f"generator on {f.n} variables for a group on {G.n} points")
        if not f.is_invariant(G):
            raise NotInvariant(f"generator {f} is not {G.order}-group invariant")
        if not f.is_homogeneous():
            raise ValueError(f"generator {f} is not homogeneous")
    basis = degree_orbits(G, d, cap)
    if len(basis) > dim_cap:
        raise EnumerationCapExceeded(f"invariant dimension {len(basis)} exceeds cap {dim_cap}")
    # degree-0 generators are constants; the empty product already covers them
    usable = [f for f in gens if not f.is_zero() and f.degree > 0]
    degs = [f.degree for f in usable]
    cols = [o.representative.exponents for o in basis]
    rows = []
    for idx in _products_of_degree(usable, degs, d):
        prod = MultiPoly.constant(G.n)
        for i in idx:
            prod = prod * usable[i]
        rows.append([prod.terms.get(c, 0) for c in cols])
    return rational_rank(rows) == len(basis)
