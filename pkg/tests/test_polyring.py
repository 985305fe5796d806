from fractions import Fraction

import pytest

from axc import Context, Poly, rebase
from axc.errors import AxisOutOfRange, DimensionMismatch
from axc.randforms import random_poly, sample_rng


def y(i, n=2):
    return Poly.variable(n, i)


def c(v, n=2):
    return Poly.const(n, Fraction(v))


class TestArithmetic:
    def test_add_cancellation(self):
        assert (y(1) + c(1)) + (-y(1)) == c(1)

    def test_add_identity(self):
        p = y(1) * y(2) + c("1/3")
        assert Poly.zero(2) + p == p

    def test_add_like_terms(self):
        half_sq = Poly.monomial(2, (2, 0), Fraction(1, 2))
        assert half_sq + half_sq == Poly.monomial(2, (2, 0), 1)

    def test_mul_difference_of_squares(self):
        assert (y(1) + y(2)) * (y(1) - y(2)) == y(1) * y(1) - y(2) * y(2)

    def test_mul_by_zero(self):
        assert (y(1) + c(5)) * Poly.zero(2) == Poly.zero(2)

    def test_mul_rational_coefficients(self):
        assert (y(1).scale(Fraction(1, 3))) * (y(2).scale(3)) == y(1) * y(2)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            Poly.variable(2, 1) + Poly.variable(3, 1)


class TestCalculus:
    def test_partial_product(self):
        p = y(1) * y(1) * y(2)
        assert p.partial(1) == (y(1) * y(2)).scale(2)

    def test_partial_absent_variable(self):
        assert y(1).partial(2) == Poly.zero(2)

    def test_partial_constant(self):
        assert c(5).partial(1) == Poly.zero(2)

    def test_partial_axis_range(self):
        with pytest.raises(AxisOutOfRange):
            y(1).partial(3)

    def test_eval(self):
        assert (y(1) * y(2)).eval([2, 3]) == 6

    def test_eval_at_origin_is_constant_term(self):
        p = y(1) * y(1) + c("7/2")
        assert p.eval([0, 0]) == Fraction(7, 2)

    def test_eval_absolute(self):
        from axc.polyring import eval_absolute
        ctx = Context.euclidean(2, [Fraction(1), Fraction(0)])
        p = y(1) * y(1)  # (x1 - 1)^2
        assert eval_absolute(p, ctx, [Fraction(3, 2), 0]) == Fraction(1, 4)


class TestRebase:
    def test_shift_by_one(self):
        # y1 centered at 0, re-centered at 1: y1' + 1
        assert rebase(y(1), [0, 0], [1, 0]) == y(1) + c(1)

    def test_constant_unchanged(self):
        assert rebase(c("2/3"), [0, 0], [5, -1]) == c("2/3")

    def test_round_trip(self):
        rng = sample_rng(17, 0)
        for i in range(30):
            p = random_poly(sample_rng(17, i), 3, max_degree=3, max_terms=3)
            a = [Fraction(1), Fraction(-2, 3), Fraction(0)]
            b = [Fraction(5, 7), Fraction(2), Fraction(-1)]
            assert rebase(rebase(p, a, b), b, a) == p


class TestRingAxioms:
    def test_ring_axioms_sampled(self):
        for i in range(50):
            rng = sample_rng(23, i)
            p = random_poly(rng, 2, 3, 3)
            q = random_poly(rng, 2, 3, 3)
            r = random_poly(rng, 2, 3, 3)
            assert (p + q) + r == p + (q + r)
            assert p + q == q + p
            assert (p * q) * r == p * (q * r)
            assert p * q == q * p
            assert p * (q + r) == p * q + p * r

    def test_partials_commute(self):
        for i in range(50):
            p = random_poly(sample_rng(29, i), 3, 4, 3)
            assert p.partial(1).partial(2) == p.partial(2).partial(1)

    def test_everything_is_fraction(self):
        for i in range(20):
            p = random_poly(sample_rng(31, i), 2, 3, 3)
            q = p * p + p
            assert all(isinstance(v, Fraction) for v in q.terms.values())


class TestContext:
    def test_signature_product(self):
        assert Context.minkowski(4).sig == -1
        assert Context.euclidean(3).sig == 1

    def test_validation(self):
        with pytest.raises(DimensionMismatch):
            Context(2, (0,), (1, 1))
        with pytest.raises(DimensionMismatch):
            Context(2, (0, 0), (1, 2))
