"""Exact arithmetic in the multiquadratic field with sqrt2, sqrt3, sqrt5."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxgrowth.algnum import ONE, ZERO, AlgNum, minus_cos_pi_over, two_cos_pi_over
from coxgrowth.graph import INF

coords = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
    min_size=8, max_size=8,
).map(AlgNum)
nonzero = coords.filter(lambda a: not a.is_zero)


class TestFieldAxioms:
    def test_sqrt_identities(self):
        r2, r3, r5 = AlgNum.sqrt_of(2), AlgNum.sqrt_of(3), AlgNum.sqrt_of(5)
        assert r2 * r2 == 2
        assert r3 * r3 == 3
        assert r5 * r5 == 5
        assert r2 * r3 == AlgNum.sqrt_of(6)
        assert r2 * r3 * r5 == AlgNum.sqrt_of(30)
        assert AlgNum.sqrt_of(6) * AlgNum.sqrt_of(10) == 2 * AlgNum.sqrt_of(15)

    def test_sqrt_of_rejects_out_of_field(self):
        with pytest.raises(ValueError):
            AlgNum.sqrt_of(7)

    @given(coords, coords, coords)
    @settings(max_examples=40, deadline=None)
    def test_ring_laws(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a + (-a) == ZERO

    @given(nonzero)
    @settings(max_examples=40, deadline=None)
    def test_inverse(self, a):
        assert a * a.inverse() == ONE

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            ZERO.inverse()

    def test_golden_ratio_inverse(self):
        phi = (ONE + AlgNum.sqrt_of(5)) / 2
        assert phi.inverse() == phi - 1


class TestCertifiedSign:
    @given(coords)
    @settings(max_examples=60, deadline=None)
    def test_sign_matches_high_precision_float(self, a):
        approx = sum(float(x) * math.sqrt(m) for x, m in
                     zip(a.c, (1, 2, 3, 6, 5, 10, 15, 30)))
        s = a.sign()
        if abs(approx) > 1e-6:
            assert s == (approx > 0) - (approx < 0)
        lo, hi = a.enclosure(80)
        assert lo <= hi
        if s > 0:
            assert hi > 0
        if s < 0:
            assert lo < 0

    def test_exact_zero_from_cancellation(self):
        a = AlgNum.sqrt_of(6) - AlgNum.sqrt_of(2) * AlgNum.sqrt_of(3)
        assert a.is_zero and a.sign() == 0

    def test_tiny_but_nonzero(self):
        # 47321/33461 is a continued-fraction convergent just below sqrt(2):
        # the difference is about 6e-10 but certifiably positive
        a = AlgNum.sqrt_of(2) - Fraction(47321, 33461)
        assert a.sign() == 1

    def test_comparison_and_float(self):
        assert AlgNum.sqrt_of(2) < AlgNum.sqrt_of(3)
        assert abs(float(AlgNum.sqrt_of(5)) - math.sqrt(5)) < 1e-15


class TestTrigConstants:
    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
    def test_minus_cos_values(self, m):
        assert abs(float(minus_cos_pi_over(m)) + math.cos(math.pi / m)) < 1e-12

    def test_infinite_weight(self):
        assert minus_cos_pi_over(INF) == -1
        assert two_cos_pi_over(INF) == 2

    def test_unsupported_weight_raises(self):
        with pytest.raises(ValueError):
            minus_cos_pi_over(7)

    def test_two_cos_satisfies_minimal_polynomials(self):
        x = two_cos_pi_over(5)  # golden ratio: x^2 = x + 1
        assert x * x == x + 1
        y = two_cos_pi_over(6)  # sqrt3: y^2 = 3
        assert y * y == 3
