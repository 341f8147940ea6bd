"""Exact univariate polynomials and graded series over prod (1 - l^d).

Coefficients are Python ints (arbitrary precision) or ``Fraction``; a
``Fraction`` with denominator 1 is stored as an int, so a polynomial is
integral exactly when every coefficient is an ``int``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence


class NotDivisible(ArithmeticError):
    pass


class NotRepresentable(ArithmeticError):
    pass


def _norm(c) -> int | Fraction:
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        c = Fraction(c)
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"inexact coefficient {c!r}")


class Poly:
    """Dense polynomial in one variable, ascending powers, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def one_minus(cls, d: int) -> Poly:
        """1 - l^d."""
        return cls([1] + [0] * (d - 1) + [-1])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return render(self)

    def __add__(self, other: Poly) -> Poly:
        other = _coerce(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(m))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> Poly:
        return _coerce(other) - self

    def __mul__(self, other: Poly) -> Poly:
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, divisor: Poly) -> tuple[Poly, Poly]:
        """Long division over the rationals."""
        divisor = _coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dd = divisor.degree
        lead = Fraction(divisor.coeffs[-1])
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] / lead
            if c == 0:
                continue
            quot[k - dd] = c
            for j, b in enumerate(divisor.coeffs):
                rem[k - dd + j] -= c * b
        return Poly(quot), Poly(rem[:dd])


def _coerce(x) -> Poly:
    return x if isinstance(x, Poly) else Poly([x])


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def exact_divide(dividend: Poly, divisor: Poly) -> Poly:
    """Quotient q with q * divisor == dividend; q must have integer coefficients
    whenever both inputs do."""
    q, r = dividend.divmod(divisor)
    if not r.is_zero():
        raise NotDivisible(f"{render(dividend)} is not divisible by {render(divisor)}")
    if dividend.is_integral() and divisor.is_integral() and not q.is_integral():
        raise NotDivisible(f"quotient of {render(dividend)} by {render(divisor)} is not integral")
    return q


def product_one_minus(degrees: Iterable[int]) -> Poly:
    out = Poly([1])
    for d in degrees:
        out = out * Poly.one_minus(d)
    return out


def is_palindromic(h: Poly) -> bool:
    """True iff the coefficients between the lowest and highest nonzero term
    read the same in both directions. The zero polynomial counts as palindromic."""
    cs = h.coeffs
    if not cs:
        return True
    k = next(i for i, c in enumerate(cs) if c != 0)
    body = cs[k:]
    return body == body[::-1]


def palindrome_offset(h: Poly) -> int | None:
    """The exponent rho with l^rho h(1/l) == h(l), if h is palindromic and nonzero."""
    if h.is_zero() or not is_palindromic(h):
        return None
    k = next(i for i, c in enumerate(h.coeffs) if c != 0)
    return k + h.degree


def render(p: Poly, var: str = "l") -> str:
    """Ascending powers: ``1 + l^2 + l^3 + 2*l^4 + l^5``."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def coeffs_json(p: Poly) -> list[str]:
    """Decimal strings, so big integers survive any JSON reader."""
    return [str(c) for c in p.coeffs] or ["0"]


@dataclass(frozen=True)
class GradedSeries:
    """numerator / prod_i (1 - l^degrees[i]); never reduced."""

    numerator: Poly
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        degrees = tuple(sorted(self.degrees))
        if any(d < 1 for d in degrees):
            raise ValueError(f"denominator degrees must be positive: {degrees}")
        object.__setattr__(self, "degrees", degrees)

    def same_denominator(self, other: GradedSeries) -> bool:
        return Counter(self.degrees) == Counter(other.degrees)


def series_coefficients(s: GradedSeries, max_degree: int) -> list:
    """Coefficients c_0..c_max of the power-series expansion of ``s``."""
    c = [s.numerator[k] for k in range(max_degree + 1)]
    for d in s.degrees:
        # multiply by 1/(1 - l^d) = sum_k l^(dk)
        for k in range(d, max_degree + 1):
            c[k] += c[k - d]
    return [_norm(x) for x in c]


def to_standard_form(s: GradedSeries, target_degrees: Sequence[int]) -> GradedSeries:
    """Rewrite ``s`` over prod (1 - l^d), d in ``target_degrees``, with an integer numerator."""
    target = tuple(sorted(target_degrees))
    lifted = s.numerator * product_one_minus(target)
    try:
        num = exact_divide(lifted, product_one_minus(s.degrees))
    except NotDivisible as exc:
        raise NotRepresentable(
            f"series has no integer numerator over degrees {list(target)}"
        ) from exc
    if not num.is_integral():
        raise NotRepresentable(f"numerator {num!r} over degrees {list(target)} is not integral")
    out = GradedSeries(num, target)
    assert num * product_one_minus(s.degrees) == s.numerator * product_one_minus(target)
    return out
