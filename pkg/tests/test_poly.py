"""Integer polynomials, rational functions and certified root isolation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxgrowth.poly import (
    IntPoly,
    NoPositiveRootError,
    PolyError,
    RatFunc,
    RootInterval,
    bracket,
    bracket_cyclotomic_indices,
    bracket_product,
    count_roots,
    cyclotomic,
    div_exact,
    divides,
    divmod_q,
    poly_gcd,
    smallest_positive_root,
    squarefree_part,
    sturm_chain,
)

small_polys = st.lists(st.integers(-9, 9), min_size=0, max_size=6).map(IntPoly)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero)


class TestIntPolyBasics:
    def test_normalization_strips_leading_zeros(self):
        assert IntPoly([1, 2, 0, 0]).c == (1, 2)
        assert IntPoly([0, 0]).is_zero

    def test_degree_conventions(self):
        assert IntPoly().degree == -1
        assert IntPoly([5]).degree == 0
        assert IntPoly([0, 0, 3]).degree == 2

    def test_rejects_non_integer_coefficients(self):
        with pytest.raises(PolyError):
            IntPoly([1, 0.5])

    def test_evaluation_and_sign_at(self):
        p = IntPoly([-1, 0, 1])  # t^2 - 1
        assert p(2) == 3
        assert p.sign_at(Fraction(1, 2)) == -1
        assert p.sign_at(1) == 0
        assert p.sign_at(3) == 1

    def test_shift_and_strip_root_at_zero(self):
        p = IntPoly([1, 1]).shift(2)
        assert p.c == (0, 0, 1, 1)
        q, k = p.strip_root_at_zero()
        assert (q.c, k) == ((1, 1), 2)

    def test_reversed_coeffs_with_padding(self):
        p = IntPoly([1, 2])  # 1 + 2t
        assert p.reversed_coeffs().c == (2, 1)
        assert p.reversed_coeffs(3).c == (0, 0, 2, 1)
        with pytest.raises(PolyError):
            p.reversed_coeffs(0)

    def test_palindromic(self):
        assert IntPoly([1, 3, 1]).is_palindromic
        assert not IntPoly([1, 2]).is_palindromic


class TestArithmetic:
    @given(small_polys, small_polys)
    @settings(max_examples=60, deadline=None)
    def test_add_commutes_and_evaluates(self, a, b):
        assert a + b == b + a
        assert (a + b)(3) == a(3) + b(3)

    @given(small_polys, small_polys)
    @settings(max_examples=60, deadline=None)
    def test_mul_evaluates(self, a, b):
        assert (a * b)(2) == a(2) * b(2)

    @given(small_polys, nonzero_polys)
    @settings(max_examples=60, deadline=None)
    def test_divmod_reconstructs(self, a, b):
        q, r = divmod_q(a, b)
        x = Fraction(5, 3)
        qv = sum(c * x**i for i, c in enumerate(q))
        rv = sum(c * x**i for i, c in enumerate(r))
        assert qv * b(x) + rv == a(x)

    @given(small_polys, nonzero_polys)
    @settings(max_examples=60, deadline=None)
    def test_exact_division_roundtrip(self, a, b):
        assert div_exact(a * b, b) == a
        assert divides(b, a * b)

    def test_power(self):
        assert IntPoly([1, 1]) ** 3 == IntPoly([1, 3, 3, 1])
        with pytest.raises(PolyError):
            IntPoly([1, 1]) ** -1


class TestGcdAndSquarefree:
    @given(nonzero_polys, nonzero_polys, nonzero_polys)
    @settings(max_examples=40, deadline=None)
    def test_gcd_contains_common_factor(self, a, b, c):
        g = poly_gcd(a * c, b * c)
        assert divides(c.primitive().monic_positive(), g) or c.degree == 0
        assert divides(g, a * c) and divides(g, b * c)

    def test_gcd_of_coprime(self):
        assert poly_gcd(IntPoly([1, 1]), IntPoly([-1, 1])).degree == 0

    def test_squarefree_part_drops_multiplicity(self):
        p = IntPoly([-1, 1]) ** 3 * IntPoly([1, 1])
        sf = squarefree_part(p)
        assert divides(IntPoly([-1, 1]), sf)
        assert not divides(IntPoly([-1, 1]) ** 2, sf)


class TestBracketsAndCyclotomics:
    def test_bracket_values(self):
        assert bracket(1) == IntPoly([1])
        assert bracket(4) == IntPoly([1, 1, 1, 1])
        with pytest.raises(PolyError):
            bracket(0)

    def test_bracket_is_product_of_cyclotomics(self):
        for k in range(2, 13):
            prod = IntPoly([1])
            for d in bracket_cyclotomic_indices(k):
                prod = prod * cyclotomic(d)
            assert prod == bracket(k)

    def test_known_cyclotomics(self):
        assert cyclotomic(1) == IntPoly([-1, 1])
        assert cyclotomic(2) == IntPoly([1, 1])
        assert cyclotomic(6) == IntPoly([1, -1, 1])
        assert cyclotomic(12) == IntPoly([1, 0, -1, 0, 1])

    def test_bracket_product(self):
        assert bracket_product([2, 3]) == IntPoly([1, 2, 2, 1])


class TestRootIsolation:
    def test_count_roots_interval_semantics(self):
        chain = sturm_chain(IntPoly([-2, 0, 1]))  # t^2 - 2
        assert count_roots(chain, 0, 2) == 1
        assert count_roots(chain, 1, Fraction(7, 5)) == 0
        assert count_roots(chain, -2, 2) == 2

    def test_smallest_positive_root_sqrt2(self):
        p = IntPoly([-2, 0, 1])
        iv = smallest_positive_root(p, Fraction(1, 10**9))
        assert p.sign_at(iv.lo) < 0 <= p.sign_at(iv.hi)
        assert iv.width <= Fraction(1, 10**9)

    def test_multiple_roots_are_handled(self):
        # (t - 1/2 scaled): (2t-1)^2 (t-3)
        p = IntPoly([-1, 2]) ** 2 * IntPoly([-3, 1])
        iv = smallest_positive_root(p)
        assert Fraction(1, 2) in iv

    def test_no_positive_root_raises(self):
        with pytest.raises(NoPositiveRootError):
            smallest_positive_root(IntPoly([1, 0, 1]))  # t^2 + 1
        with pytest.raises(NoPositiveRootError):
            smallest_positive_root(IntPoly([1, 1]))  # root -1

    def test_root_at_zero_is_ignored(self):
        iv = smallest_positive_root(IntPoly([0, 0, -2, 0, 1]))  # t^2(t^2-2)
        assert iv.lo > 1

    def test_root_interval_reciprocal(self):
        iv = RootInterval(Fraction(1, 2), Fraction(2, 3))
        rec = iv.reciprocal()
        assert (rec.lo, rec.hi) == (Fraction(3, 2), Fraction(2))
        assert RootInterval(Fraction(2), Fraction(3)).strictly_below(
            RootInterval(Fraction(4), Fraction(5)))


class TestRatFunc:
    def test_reduction(self):
        f = RatFunc(IntPoly([-1, 0, 1]), IntPoly([-1, 1]))  # (t^2-1)/(t-1)
        assert f.num == IntPoly([1, 1])
        assert f.den == IntPoly([1])

    def test_integer_content_reduction_and_sign(self):
        f = RatFunc(IntPoly([2, 4]), IntPoly([-2]))
        assert (f.num, f.den) == (IntPoly([-1, -2]), IntPoly([1]))

    def test_field_ops(self):
        t = RatFunc(IntPoly([0, 1]))
        one = RatFunc.from_int(1)
        f = one / (one - t)  # denominator normalized to a positive lead
        assert f.num == IntPoly([-1]) and f.den == IntPoly([-1, 1])
        assert (f - f).is_zero
        assert f * f.inverse() == 1

    def test_substitute_reciprocal_is_involutive(self):
        f = RatFunc(IntPoly([1, 2, 3]), IntPoly([5, 0, 0, 7]))
        g = f.substitute_reciprocal().substitute_reciprocal()
        assert g == f

    def test_substitute_reciprocal_value(self):
        f = RatFunc(IntPoly([0, 1]), IntPoly([1, 1]))  # t/(1+t)
        g = f.substitute_reciprocal()  # (1/t)/(1+1/t) = 1/(t+1)
        assert g(Fraction(3)) == f(Fraction(1, 3))

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc(IntPoly([1]), IntPoly())
