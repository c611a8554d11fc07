"""Gaussian moments, bilinear pairing, block matrices, quadrature oracle."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordan_osc import (
    EXACT,
    OracleUnavailableError,
    Params,
    Poly2,
    ReducedFn,
    Scalar,
    build_psi,
    energy,
    expand_in_basis,
    gram_block,
    h_block,
    inner_product,
    minimum_order,
    moment,
    quadrature_oracle,
)

F = Fraction

# Moments of the paired envelope at a = 1, b = 1/4, computed independently
# with a computer algebra system from the defining two-dimensional integral
#   (2a/pi) Int (x+iy)^p (x-iy)^q exp(-2(a+b)x^2 - 2(a-b)y^2 + 4ib xy) dx dy
# and frozen here. The recursion must reproduce every entry.
FROZEN_MOMENTS = {
    (0, 0): F(1),
    (0, 1): F(0),
    (1, 0): F(0),
    (0, 2): F(0),
    (1, 1): F(1, 2),
    (2, 0): F(-1, 4),
    (0, 3): F(0),
    (1, 2): F(0),
    (2, 1): F(0),
    (3, 0): F(0),
    (0, 4): F(0),
    (1, 3): F(0),
    (2, 2): F(1, 2),
    (3, 1): F(-3, 8),
    (4, 0): F(3, 16),
    (0, 5): F(0),
    (1, 4): F(0),
    (2, 3): F(0),
    (3, 2): F(0),
    (4, 1): F(0),
    (5, 0): F(0),
    (0, 6): F(0),
    (1, 5): F(0),
    (2, 4): F(0),
    (3, 3): F(3, 4),
    (4, 2): F(-3, 4),
    (5, 1): F(15, 32),
    (6, 0): F(-15, 64),
}


class TestMoments:
    def test_frozen_table(self, params):
        for (p, q), want in FROZEN_MOMENTS.items():
            assert moment(params, p, q) == Scalar.exact(want), (p, q)

    def test_base_cases(self, params):
        assert moment(params, 0, 0) == Scalar.exact(1)
        assert moment(params, 0, 1) == Scalar.exact(0)
        assert moment(params, 1, 1) == Scalar.exact(F(1, 2))  # 1/(2a)
        assert moment(params, 2, 0) == Scalar.exact(F(-1, 4))  # -b/a^2

    def test_odd_total_degree_vanishes(self, params):
        for p in range(8):
            for q in range(8):
                if (p + q) % 2 == 1:
                    assert moment(params, p, q).is_zero()

    def test_zbar_excess_vanishes(self, params):
        # all the zbar-heavy moments die: the paired envelope is analytic in z
        for q in range(1, 7):
            assert moment(params, 0, q).is_zero()

    def test_other_parameter_point(self):
        P = Params.exact(F(3, 2), F(2, 3))
        a, b = P.a, P.b
        assert moment(P, 1, 1) == Scalar.exact(F(1, 1) / (2 * a))
        assert moment(P, 2, 0) == Scalar.exact(-b / a**2)
        assert moment(P, 2, 2) == Scalar.exact(F(2, 1) / (2 * a) ** 2)


class TestInnerProduct:
    def test_ground_norm(self, params):
        fn = build_psi(params, 0, 0)
        assert inner_product(params, fn, fn) == Scalar.exact(1)

    def test_chain_heads_self_orthogonal(self, params):
        for n in range(1, 6):
            fn = build_psi(params, n, 0)
            assert inner_product(params, fn, fn).is_zero()

    def test_anti_diagonal_partner(self, params):
        got = inner_product(params, build_psi(params, 1, 0), build_psi(params, 1, 1))
        assert got == Scalar.exact(1)

    def test_cross_level_orthogonal(self, params):
        for n1, m1, n2, m2 in [(0, 0, 1, 0), (0, 0, 2, 1), (1, 1, 3, 2), (2, 0, 3, 3)]:
            got = inner_product(params, build_psi(params, n1, m1), build_psi(params, n2, m2))
            assert got.is_zero(), (n1, m1, n2, m2)

    @settings(max_examples=25, deadline=None)
    @given(
        st.fractions(min_value=F(-2), max_value=F(2), max_denominator=3),
        st.fractions(min_value=F(-2), max_value=F(2), max_denominator=3),
    )
    def test_bilinear_in_both_slots(self, c1, c2):
        P = Params.exact(1, F(1, 2))
        f1 = build_psi(P, 1, 0)
        f2 = build_psi(P, 2, 2)
        g = build_psi(P, 1, 1)
        combo = f1.scale(P.s(c1)) + f2.scale(P.s(c2))
        got = inner_product(P, combo, g)
        want = P.s(c1) * inner_product(P, f1, g) + P.s(c2) * inner_product(P, f2, g)
        assert got == want
        got = inner_product(P, g, combo)
        want = P.s(c1) * inner_product(P, g, f1) + P.s(c2) * inner_product(P, g, f2)
        assert got == want


class TestBlocks:
    def test_gram_antidiagonal(self, params):
        for n in range(5):
            block = gram_block(params, n)
            for m in range(n + 1):
                for mp in range(n + 1):
                    want = Scalar.exact(1 if m + mp == n else 0)
                    assert block[m][mp] == want, (n, m, mp)

    def test_h_block_level0(self, params):
        assert h_block(params, 0) == ((energy(params, 0),),)

    def test_h_block_level1_jordan(self, params):
        block = h_block(params, 1)
        e1 = energy(params, 1)
        assert block[0][0] == e1 and block[1][1] == e1
        assert block[0][1] == Scalar.exact(1)
        assert block[1][0] == Scalar.exact(0)

    def test_h_block_level3_structure(self, params):
        block = h_block(params, 3)
        e3 = energy(params, 3)
        for k in range(4):
            for m in range(4):
                want = e3 if k == m else Scalar.exact(1 if m == k + 1 else 0)
                assert block[k][m] == want, (k, m)


class TestResolutionOfIdentity:
    def test_reproduces_basis_functions(self, params):
        for n in range(4):
            for m in range(n + 1):
                fn = build_psi(params, n, m)
                assert expand_in_basis(params, fn, 4) == fn

    def test_reproduces_generic_polynomial(self, params):
        terms = {
            (0, 0): Scalar.exact(F(2, 3)),
            (1, 2): Scalar.exact(-1),
            (3, 0): Scalar.exact(F(1, 5)),
            (2, 2): Scalar.exact(7),
        }
        f = ReducedFn(Poly2(EXACT, terms))
        assert expand_in_basis(params, f, 4) == f


class TestQuadratureOracle:
    def test_matches_exact_norm(self, params, fparams):
        f = build_psi(fparams, 0, 0)
        got = quadrature_oracle(fparams, f, f)
        assert got.real == pytest.approx(1.0, abs=1e-12)
        assert got.imag == pytest.approx(0.0, abs=1e-12)

    def test_matches_moment(self, fparams):
        # pairing z against zbar samples moment(1,1) = 1/(2a) = 1/2 here
        f = ReducedFn(Poly2.z("float"))
        g = ReducedFn(Poly2.zbar("float"))
        assert quadrature_oracle(fparams, f, g) == pytest.approx(0.5, abs=1e-12)
        # while z against z samples moment(2,0) = -b/a^2 = -1/4
        assert quadrature_oracle(fparams, f, f) == pytest.approx(-0.25, abs=1e-12)

    def test_matches_exact_on_pairs(self, params, fparams):
        pairs = [(1, 0, 1, 1), (2, 1, 2, 1), (3, 0, 3, 3), (2, 0, 3, 1)]
        for n1, m1, n2, m2 in pairs:
            want = inner_product(params, build_psi(params, n1, m1), build_psi(params, n2, m2))
            got = quadrature_oracle(fparams, build_psi(fparams, n1, m1), build_psi(fparams, n2, m2))
            assert abs(got - complex(want.to_complex())) < 1e-10, (n1, m1, n2, m2)

    def test_requires_a_greater_than_b(self):
        P = Params.from_ab(0.25, 1.0)
        f = ReducedFn(Poly2.one("float"))
        with pytest.raises(OracleUnavailableError):
            quadrature_oracle(P, f, f)

    def test_order_floor_enforced(self, fparams):
        f = build_psi(fparams, 2, 1)
        with pytest.raises(ValueError):
            quadrature_oracle(fparams, f, f, order=4)
        assert minimum_order(f, f) >= 32
