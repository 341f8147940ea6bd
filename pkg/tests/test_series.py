from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from perminv.series import (
    GradedSeries,
    NotDivisible,
    NotRepresentable,
    Poly,
    coeffs_json,
    exact_divide,
    is_palindromic,
    palindrome_offset,
    poly_arith,
    product_one_minus,
    render,
    series_coefficients,
    to_standard_form,
)

ints = st.integers(-50, 50)
polys = st.lists(ints, max_size=8).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
degree_lists = st.lists(st.integers(1, 5), max_size=4)


def power_series_divide(num, den, max_degree):
    """Term-by-term long division of power series; den[0] must be 1."""
    assert den[0] == 1
    out = []
    rem = [num[k] for k in range(max_degree + 1)]
    for k in range(max_degree + 1):
        c = rem[k]
        out.append(c)
        for j in range(1, den.degree + 1 if den.degree else 1):
            if k + j <= max_degree:
                rem[k + j] -= c * den[j]
    return out


def test_arith_examples():
    one_plus = Poly([1, 1])
    one_minus = Poly([1, -1])
    assert poly_arith(one_plus, one_minus, "mul") == Poly([1, 0, -1])
    assert poly_arith(Poly([3, 0, 2]), Poly(), "add") == Poly([3, 0, 2])
    assert poly_arith(Poly([1, 1, 1]), one_minus, "mul") == Poly([1, 0, 0, -1])
    assert poly_arith(one_plus, one_plus, "sub").is_zero()


def test_trimming_and_degree():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]).degree is None
    assert Poly([Fraction(4, 2)]).coeffs == (2,)
    assert isinstance(Poly([Fraction(4, 2)]).coeffs[0], int)


def test_rejects_floats():
    with pytest.raises(TypeError):
        Poly([0.5])


def test_exact_divide_examples():
    assert exact_divide(Poly.one_minus(4), Poly.one_minus(1)) == Poly([1, 1, 1, 1])
    p = Poly([5, -3, 7])
    assert exact_divide(p, Poly([1])) == p
    with pytest.raises(NotDivisible):
        exact_divide(Poly([1, 1]), Poly([1, -1]))
    with pytest.raises(ZeroDivisionError):
        exact_divide(p, Poly())


def test_exact_divide_requires_integral_quotient():
    with pytest.raises(NotDivisible):
        exact_divide(Poly([1, 1]), Poly([2, 2]))


def test_big_integers_are_exact():
    big = Poly([10**40 + 1, 3])
    assert (big * big)[0] == (10**40 + 1) ** 2
    assert coeffs_json(big) == [str(10**40 + 1), "3"]


@pytest.mark.parametrize(
    "num, degrees, max_degree, expected",
    [
        ([1], (1,), 3, [1, 1, 1, 1]),
        ([1, 0, 1, 1, 2, 1], (1, 2, 3, 4), 4, [1, 1, 3, 5, 10]),
        ([1], (1, 2, 3, 4), 5, [1, 1, 2, 3, 5, 6]),
    ],
)
def test_series_coefficients_examples(num, degrees, max_degree, expected):
    s = GradedSeries(Poly(num), degrees)
    assert series_coefficients(s, max_degree) == expected
    assert power_series_divide(Poly(num), product_one_minus(degrees), max_degree) == expected


def test_partitions_into_parts_at_most_four():
    # brute force: count partitions of d with all parts <= 4
    def count(d, largest):
        if d == 0:
            return 1
        return sum(count(d - k, k) for k in range(1, min(d, largest) + 1))

    s = GradedSeries(Poly([1]), (1, 2, 3, 4))
    assert series_coefficients(s, 12) == [count(d, 4) for d in range(13)]


@pytest.mark.parametrize(
    "coeffs, expected",
    [([1, 0, 1, 1, 2, 1], False), ([1], True), ([1, 0, 0, 1], True), ([], True), ([0, 0, 2, 5, 2], True)],
)
def test_is_palindromic(coeffs, expected):
    assert is_palindromic(Poly(coeffs)) is expected


def test_palindrome_offset():
    assert palindrome_offset(Poly([1, 0, 0, 1])) == 3
    assert palindrome_offset(Poly([0, 0, 2, 5, 2])) == 6
    assert palindrome_offset(Poly([1, 1, 0])) == 1
    assert palindrome_offset(Poly([1, 0, 1, 1, 2, 1])) is None


def test_render():
    assert render(Poly([1, 0, 1, 1, 2, 1])) == "1 + l^2 + l^3 + 2*l^4 + l^5"
    assert render(Poly([0, -1, 0, -3])) == "-l - 3*l^3"
    assert render(Poly()) == "0"


def test_to_standard_form_examples():
    out = to_standard_form(GradedSeries(Poly([1]), (1,)), (1, 2))
    assert out.numerator == Poly([1, 0, -1]) and out.degrees == (1, 2)
    with pytest.raises(NotRepresentable):
        to_standard_form(GradedSeries(Poly([1, 1]), (1, 2)), (1,))


def test_bertin_average_retargeted():
    # (1/4)(1/(1-l)^4 + 1/(1-l^2)^2 + 2/(1-l^4)) as one fraction over (1-l)^4 (1-l^2)^2 (1-l^4)
    d1, d2, d4 = product_one_minus([1] * 4), product_one_minus([2, 2]), product_one_minus([4])
    num = d2 * d4 + d1 * d4 + 2 * d1 * d2
    num = Poly(Fraction(c, 4) for c in num.coeffs)
    s = GradedSeries(num, (1, 1, 1, 1, 2, 2, 4))
    out = to_standard_form(s, (1, 2, 3, 4))
    assert out.numerator == Poly([1, 0, 1, 1, 2, 1])


@given(polys, nonzero_polys)
def test_divide_roundtrip(q, d):
    assert exact_divide(q * d, d) == q


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    if not a.is_zero() and not b.is_zero():
        assert (a * b).degree == a.degree + b.degree


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6).map(Poly), degree_lists, st.integers(0, 25))
def test_expansion_matches_long_division(num, degrees, max_degree):
    s = GradedSeries(num, degrees)
    assert series_coefficients(s, max_degree) == power_series_divide(
        num, product_one_minus(degrees), max_degree
    )


@given(nonzero_polys, st.integers(0, 6), st.integers(-9, 9).filter(bool))
def test_palindromicity_invariance(h, k, c):
    assert is_palindromic(Poly.monomial(k, c) * h) == is_palindromic(h)


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=5))
def test_symmetrised_is_palindromic(half):
    h = Poly(half + half[::-1])
    assume(not h.is_zero())
    assert is_palindromic(h)
    rho = palindrome_offset(h)
    # l^rho h(1/l) == h(l), checked at a few rational points
    for x in (Fraction(2), Fraction(-3, 5), Fraction(7, 2)):
        assert x**rho * h(1 / x) == h(x)


@settings(max_examples=60)
@given(st.lists(st.integers(-5, 5), max_size=5).map(Poly), degree_lists, degree_lists)
def test_to_standard_form_preserves_coefficients(num, degrees, extra):
    s = GradedSeries(num, degrees)
    target = tuple(degrees) + tuple(extra)
    out = to_standard_form(s, target)
    assert sorted(out.degrees) == sorted(target)
    assert series_coefficients(out, 30) == series_coefficients(s, 30)
