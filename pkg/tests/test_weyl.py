"""Scalar/polynomial/operator arithmetic, normal ordering, adjoints."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from jordan_osc import (
    EXACT,
    FLOAT,
    DiffOp,
    ModeMismatchError,
    Poly2,
    Scalar,
    adjoint,
    anticommutator,
    commutator,
    exact_sqrt,
    swap_vars,
)

from conftest import diff_ops, exact_scalars

F = Fraction


class TestScalar:
    def test_exact_arithmetic(self):
        x = Scalar.exact(F(1, 2), F(1, 3))
        y = Scalar.exact(2, -1)
        assert (x + y) == Scalar.exact(F(5, 2), F(-2, 3))
        assert (x * y) == Scalar.exact(F(4, 3), F(1, 6))
        assert (x - x).is_zero()
        assert -y == Scalar.exact(-2, 1)

    def test_exact_division(self):
        x = Scalar.exact(1, 1)
        y = Scalar.exact(0, 2)
        # (1+i)/(2i) = (1-i)/2
        assert x / y == Scalar.exact(F(1, 2), F(-1, 2))
        with pytest.raises(ZeroDivisionError):
            x / Scalar.zero(EXACT)

    def test_conjugate_and_magnitude(self):
        x = Scalar.exact(3, -4)
        assert x.conjugate() == Scalar.exact(3, 4)
        assert x.magnitude() == 7  # |re| + |im| in exact mode
        assert Scalar.of_float(3.0, -4.0).magnitude() == pytest.approx(5.0)

    def test_lifting_ints_into_exact(self):
        x = Scalar.exact(1) + 2
        assert x == Scalar.exact(3)
        assert Scalar.exact(1) * F(1, 2) == Scalar.exact(F(1, 2))

    def test_float_never_lifts_into_exact(self):
        with pytest.raises(ModeMismatchError):
            Scalar.exact(1) + 0.5
        with pytest.raises(ModeMismatchError):
            Scalar.exact(1) + Scalar.of_float(0.5)

    def test_float_equality_is_tolerant(self):
        x = Scalar.of_float(1.0)
        assert x == Scalar.of_float(1.0 + 1e-15)
        assert x != Scalar.of_float(1.0 + 1e-9)

    def test_power(self):
        assert Scalar.exact(0, 1) ** 2 == Scalar.exact(-1)
        assert Scalar.exact(F(1, 2)) ** 3 == Scalar.exact(F(1, 8))

    def test_str(self):
        assert str(Scalar.exact(F(3, 4))) == "3/4"
        assert "i" in str(Scalar.exact(1, F(1, 2)))

    def test_exact_sqrt(self):
        assert exact_sqrt(F(9, 4)) == F(3, 2)
        assert exact_sqrt(F(2)) is None
        assert exact_sqrt(F(0)) == 0


class TestPoly2:
    def test_product(self):
        # (a z + b zbar)^2 at a=1, b=1/4
        lin = Poly2.z(EXACT) + Poly2.zbar(EXACT).scale(Scalar.exact(F(1, 4)))
        sq = lin * lin
        assert sq.coeff(2, 0) == Scalar.exact(1)
        assert sq.coeff(1, 1) == Scalar.exact(F(1, 2))
        assert sq.coeff(0, 2) == Scalar.exact(F(1, 16))

    def test_eval_matches_expansion(self):
        lin = Poly2.z(EXACT) + Poly2.zbar(EXACT).scale(Scalar.exact(F(1, 4)))
        zv, zbv = 0.3 + 0.7j, 0.3 - 0.7j
        assert (lin * lin).eval_at(zv, zbv) == pytest.approx((zv + zbv / 4) ** 2)

    def test_zero_collapse(self):
        p = Poly2.z(EXACT) - Poly2.z(EXACT)
        assert p.is_zero()
        assert p.terms == {}

    def test_total_degree(self):
        p = Poly2.z(EXACT) * Poly2.zbar(EXACT) ** 3
        assert p.total_degree() == 4


class TestDiffOp:
    def test_normal_ordering_dz_z(self):
        # dz . z = z dz + 1
        dz, z = DiffOp.dz(EXACT), DiffOp.z(EXACT)
        assert dz * z == z * dz + DiffOp.identity(EXACT)

    def test_normal_ordering_higher(self):
        # dz^2 . z^2 = z^2 dz^2 + 4 z dz + 2
        dz, z = DiffOp.dz(EXACT), DiffOp.z(EXACT)
        got = (dz * dz) * (z * z)
        want = (
            z * z * dz * dz
            + (z * dz).scale(Scalar.exact(4))
            + DiffOp.constant(Scalar.exact(2))
        )
        assert got == want

    def test_variables_commute(self):
        dz, zbar = DiffOp.dz(EXACT), DiffOp.zbar(EXACT)
        assert commutator(dz, zbar).is_zero()
        assert commutator(DiffOp.dzbar(EXACT), DiffOp.z(EXACT)).is_zero()

    def test_apply_to(self):
        dz = DiffOp.dz(EXACT)
        p = Poly2.z(EXACT) ** 3
        assert dz.apply_to(p) == (Poly2.z(EXACT) ** 2).scale(Scalar.exact(3))

    def test_apply_composition_consistent(self):
        # (L M) f == L (M f) for a mixed operator
        lop = DiffOp.z(EXACT) * DiffOp.dzbar(EXACT) + DiffOp.dz(EXACT)
        mop = DiffOp.zbar(EXACT) * DiffOp.dz(EXACT)
        f = (Poly2.z(EXACT) + Poly2.zbar(EXACT)) ** 3
        assert (lop * mop).apply_to(f) == lop.apply_to(mop.apply_to(f))

    def test_adjoint_of_plain_monomial(self):
        # (z dzbar)^dagger = -dz zbar = -(zbar dz + [dz, zbar]) = -zbar dz
        got = adjoint(DiffOp.z(EXACT) * DiffOp.dzbar(EXACT))
        assert got == -(DiffOp.zbar(EXACT) * DiffOp.dz(EXACT))

    def test_adjoint_conjugates_coefficients(self):
        op = DiffOp.z(EXACT).scale(Scalar.exact(0, 1))
        assert adjoint(op) == DiffOp.zbar(EXACT).scale(Scalar.exact(0, -1))

    def test_swap_vars(self):
        op = DiffOp.z(EXACT) * DiffOp.dzbar(EXACT) ** 2
        assert swap_vars(op) == DiffOp.zbar(EXACT) * DiffOp.dz(EXACT) ** 2
        assert swap_vars(swap_vars(op)) == op

    def test_float_mode_mixing_rejected(self):
        with pytest.raises(ModeMismatchError):
            DiffOp.z(EXACT) + DiffOp.z(FLOAT)


class TestAlgebraLaws:
    @settings(max_examples=30, deadline=None)
    @given(diff_ops(), diff_ops(), diff_ops())
    def test_product_associative(self, x, y, w):
        assert (x * y) * w == x * (y * w)

    @settings(max_examples=30, deadline=None)
    @given(diff_ops(), diff_ops())
    def test_commutator_antisymmetric(self, x, y):
        assert commutator(x, y) == -commutator(y, x)

    @settings(max_examples=20, deadline=None)
    @given(diff_ops(), diff_ops(), diff_ops())
    def test_jacobi(self, x, y, w):
        total = (
            commutator(x, commutator(y, w))
            + commutator(y, commutator(w, x))
            + commutator(w, commutator(x, y))
        )
        assert total.is_zero()

    @settings(max_examples=30, deadline=None)
    @given(diff_ops(), diff_ops())
    def test_adjoint_antiautomorphism(self, x, y):
        assert adjoint(x * y) == adjoint(y) * adjoint(x)

    @settings(max_examples=30, deadline=None)
    @given(diff_ops())
    def test_adjoint_involution(self, x):
        assert adjoint(adjoint(x)) == x

    @settings(max_examples=30, deadline=None)
    @given(diff_ops())
    def test_swap_involution(self, x):
        assert swap_vars(swap_vars(x)) == x

    @settings(max_examples=30, deadline=None)
    @given(exact_scalars, diff_ops(), diff_ops())
    def test_scale_distributes(self, c, x, y):
        assert (x + y).scale(c) == x.scale(c) + y.scale(c)

    @settings(max_examples=30, deadline=None)
    @given(diff_ops(), diff_ops())
    def test_anticommutator_symmetric(self, x, y):
        assert anticommutator(x, y) == anticommutator(y, x)
