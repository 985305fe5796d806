from fractions import Fraction

import pytest

from axc import Context, Form, Poly, VectorField, form_linear, interior, k_field
from axc.errors import GradeOutOfRange
from axc.randforms import random_form, sample_rng


def B(ctx, idx, poly=None):
    return Form.basis(ctx, idx, poly)


def var(ctx, i):
    return Poly.variable(ctx.n, i)


class TestLinear:
    def test_sum_of_basis_forms(self, e2):
        s = B(e2, (1,)) + B(e2, (2,))
        assert s.coefficient((1,)) == Poly.const(2, 1)
        assert s.coefficient((2,)) == Poly.const(2, 1)

    def test_cancellation(self, e2):
        w = random_form(e2, sample_rng(1, 0))
        assert (w + w.scale(-1)).is_zero

    def test_scale_and_linear_combination(self, e2):
        half = B(e2, (1, 2), Poly.const(2, Fraction(1, 2)))
        phi = random_form(e2, sample_rng(1, 1))
        assert form_linear(2, half, 0, phi) == B(e2, (1, 2))


class TestWedge:
    def test_antisymmetry_of_basis(self, e2):
        dx1, dx2 = B(e2, (1,)), B(e2, (2,))
        assert dx1.wedge(dx2) == B(e2, (1, 2))
        assert dx2.wedge(dx1) == B(e2, (1, 2)).scale(-1)

    def test_repeated_index(self, e2):
        dx1 = B(e2, (1,))
        assert dx1.wedge(dx1).is_zero

    def test_coefficients_multiply(self, e2):
        left = B(e2, (2,), var(e2, 1))
        right = B(e2, (1,), var(e2, 2))
        assert left.wedge(right) == B(e2, (1, 2), -(var(e2, 1) * var(e2, 2)))

    def test_graded_commutativity(self, e3):
        for i in range(20):
            rng = sample_rng(3, i)
            a = random_form(e3, rng)
            b = random_form(e3, rng)
            lhs = a.wedge(b)
            rhs = Form.zero(e3)
            for p in a.grades():
                for q in b.grades():
                    rhs = rhs + b.grade_select(q).wedge(a.grade_select(p)).scale((-1) ** (p * q))
            assert lhs == rhs

    def test_associativity(self, e3):
        for i in range(20):
            rng = sample_rng(5, i)
            a, b, c = (random_form(e3, rng) for _ in range(3))
            assert a.wedge(b).wedge(c) == a.wedge(b.wedge(c))


class TestInterior:
    def test_radial_on_dx1(self, e2):
        got = interior(k_field(e2), B(e2, (1,)))
        assert got == Form.from_poly(e2, var(e2, 1))

    def test_zero_on_scalars(self, e2):
        assert interior(k_field(e2), Form.from_poly(e2, var(e2, 1) + var(e2, 2))).is_zero

    def test_radial_on_area_form(self, e2):
        got = interior(k_field(e2), B(e2, (1, 2)))
        assert got == B(e2, (2,), var(e2, 1)) + B(e2, (1,), -var(e2, 2))

    def test_antiderivation(self, e3):
        # i_v(a ^ b) = i_v(a) ^ b + eta(a) ^ i_v(b)
        v = k_field(e3)
        for i in range(20):
            rng = sample_rng(7, i)
            a = random_form(e3, rng)
            b = random_form(e3, rng)
            lhs = interior(v, a.wedge(b))
            rhs = interior(v, a).wedge(b) + a.eta().wedge(interior(v, b))
            assert lhs == rhs

    def test_nilpotent(self, e3):
        v = k_field(e3)
        for i in range(20):
            w = random_form(e3, sample_rng(9, i))
            assert interior(v, interior(v, w)).is_zero


class TestExteriorDerivative:
    def test_d_of_product_scalar(self, e2):
        f = var(e2, 1) * var(e2, 2)
        got = Form.from_poly(e2, f).d()
        assert got == B(e2, (1,), var(e2, 2)) + B(e2, (2,), var(e2, 1))

    def test_d_of_constant_basis(self, e2):
        assert B(e2, (1,)).d().is_zero

    def test_d_mixed(self, e2):
        assert B(e2, (2,), var(e2, 1)).d() == B(e2, (1, 2))

    def test_d_squared_zero(self, e3, m4):
        for ctx in (e3, m4):
            for i in range(20):
                w = random_form(ctx, sample_rng(11, i))
                assert w.d().d().is_zero

    def test_leibniz(self, e3):
        for i in range(20):
            rng = sample_rng(13, i)
            a = random_form(e3, rng)
            b = random_form(e3, rng)
            lhs = a.wedge(b).d()
            rhs = a.d().wedge(b) + a.eta().wedge(b.d())
            assert lhs == rhs


class TestGradeBookkeeping:
    def test_grade_select(self, e2):
        w = Form.scalar(e2, 1) + B(e2, (1,))
        assert w.grade_select(0) == Form.scalar(e2, 1)
        assert w.grade_select(1) == B(e2, (1,))
        assert B(e2, (1,)).grade_select(2).is_zero

    def test_grade_select_range(self, e2):
        with pytest.raises(GradeOutOfRange):
            B(e2, (1,)).grade_select(3)

    def test_eta(self, e2):
        assert B(e2, (1,)).eta() == B(e2, (1,)).scale(-1)
        assert B(e2, (1, 2)).eta() == B(e2, (1, 2))
        for i in range(10):
            w = random_form(e2, sample_rng(15, i))
            assert w.eta().eta() == w

    def test_homogeneous_grade(self, e2):
        assert Form.zero(e2).homogeneous_grade() is None
        assert B(e2, (1, 2)).homogeneous_grade() == 2
        with pytest.raises(GradeOutOfRange):
            (Form.scalar(e2, 1) + B(e2, (1,))).homogeneous_grade()


class TestEvaluation:
    def test_at_center(self, e2):
        assert B(e2, (2,), var(e2, 1)).at_center().is_zero

    def test_eval_point(self, e2):
        w = B(e2, (1, 2), var(e2, 1))
        assert w.eval_at([1, 0]) == B(e2, (1, 2))

    def test_constant_form_fixed(self, e2):
        w = Form.scalar(e2, Fraction(3, 7)) + B(e2, (1,), Poly.const(2, 2))
        assert w.eval_at([5, -1]) == w

    def test_eval_absolute_respects_center(self):
        ctx = Context.euclidean(2, [Fraction(1), Fraction(0)])
        w = Form.basis(ctx, (1,), Poly.variable(2, 1))  # (x1 - 1) dx1
        assert w.eval_at([1, 0], absolute=True).is_zero


class TestVectorField:
    def test_frame(self, e3):
        e1 = VectorField.frame(e3, 1)
        assert e1.components[0] == Poly.const(3, 1)
        assert e1.components[1].is_zero
