"""Parameters, basis construction, operator catalog, envelope conjugation."""

import math
from fractions import Fraction

import pytest

from jordan_osc import (
    CATALOG_NAMES,
    EXACT,
    EXPLICIT_NAMES,
    BlockIndex,
    DiffOp,
    Params,
    Poly2,
    Scalar,
    alpha_coeffs,
    apply,
    build_phi,
    build_psi,
    conjugate_through_envelope,
    energy,
    explicit_form,
    make_operator,
    params_from_frequencies,
    phi_scale_sq,
    pochhammer,
    psi_series,
)

F = Fraction


class TestParams:
    def test_exact_point(self, params):
        assert params.a == 1 and params.b == F(1, 4)
        assert params.lam == 2 and params.g == 2
        assert params.sqrt_ab == Scalar.exact(F(1, 2))
        assert params.sqrt_a_over_b == Scalar.exact(2)

    def test_positivity_required(self):
        with pytest.raises(ValueError):
            Params.exact(0, 1)
        with pytest.raises(ValueError):
            Params.from_ab(1.0, -0.5)

    def test_from_frequencies(self):
        # omega1^2 = 3, omega2^2 = 1: mean square 2, half difference 1
        P = params_from_frequencies(math.sqrt(3), 1.0)
        lam = math.sqrt(2)
        assert P.a == pytest.approx(lam / 2)
        assert P.b == pytest.approx(1 / (4 * lam))

    def test_from_frequencies_inverts_reference_point(self):
        # the point a=1, b=1/4 has lam=2, g=2, so omega^2 = 4 +- 2
        P = params_from_frequencies(math.sqrt(6), math.sqrt(2))
        assert P.a == pytest.approx(1.0)
        assert P.b == pytest.approx(0.25)

    def test_equal_frequencies_rejected(self):
        with pytest.raises(ValueError):
            params_from_frequencies(1.0, 1.0)
        with pytest.raises(ValueError):
            params_from_frequencies(1.0, 2.0)

    def test_to_float(self, params):
        P = params.to_float()
        assert P.mode == "float"
        assert P.a == pytest.approx(1.0)
        assert P.to_float() is P


class TestBlockIndex:
    def test_weights(self):
        idx = BlockIndex(3, 1)
        assert idx.j == F(3, 2) and idx.mu == F(-1, 2)

    def test_range_checked(self):
        with pytest.raises(ValueError):
            BlockIndex(2, 3)
        with pytest.raises(ValueError):
            BlockIndex(2, -1)


class TestCombinatorics:
    def test_pochhammer(self):
        assert pochhammer(3, 2) == 12
        assert pochhammer(-2, 5) == 0  # hits zero at x+2
        assert pochhammer(F(1, 2), 3) == F(15, 8)
        assert pochhammer(7, 0) == 1

    def test_alpha_coeffs(self):
        assert alpha_coeffs(0) == [1]
        assert alpha_coeffs(1) == [-2, 4]
        assert alpha_coeffs(2) == [4, -16, 16]
        # endpoints in closed form
        for k in range(1, 8):
            alphas = alpha_coeffs(k)
            assert alphas[0] == (-2) ** k
            assert alphas[k] == 2 ** (2 * k)
            assert all(isinstance(v, int) or v.denominator == 1 for v in alphas)


class TestBasis:
    def test_ground_state(self, params):
        assert build_psi(params, 0, 0).poly == Poly2.one(EXACT)

    def test_chain_top_is_simple(self, params):
        # psi_{1,1} = z + (b/a) ... at a=1, b=1/4: z + zbar/4
        fn = build_psi(params, 1, 1)
        assert fn.poly.coeff(1, 0) == Scalar.exact(1)
        assert fn.poly.coeff(0, 1) == Scalar.exact(F(1, 4))

    def test_chain_head_closed_form(self, params):
        # psi_{n,0} = (4 sqrt(ab))^n zbar^n; at the reference point 2^n zbar^n
        for n in range(5):
            fn = build_psi(params, n, 0)
            assert fn.poly.coeff(0, n) == Scalar.exact(2**n)
            assert len(fn.poly.terms) == 1

    def test_series_matches_chain_head(self, params):
        # the general double-sum construction must reproduce the closed-form
        # heads; this ties the two independent constructions together
        for n in range(9):
            assert psi_series(params, n, 0) == build_psi(params, n, 0)

    def test_series_is_what_build_returns(self, params):
        for n in range(5):
            for m in range(1, n + 1):
                assert build_psi(params, n, m) == psi_series(params, n, m)

    def test_float_construction_tracks_exact(self, params, fparams):
        for n in range(6):
            for m in range(n + 1):
                exact_fn = build_psi(params, n, m).to_float()
                float_fn = build_psi(fparams, n, m)
                assert float_fn.close_to(exact_fn, 1e-9)

    def test_invalid_index_rejected(self, params):
        with pytest.raises(ValueError):
            build_psi(params, 2, 3)
        with pytest.raises(ValueError):
            build_psi(params, -1, 0)


class TestPhi:
    def test_scale_sq(self):
        assert phi_scale_sq(3, 1) == F(1, 2)
        assert phi_scale_sq(2, 1) == 1
        assert phi_scale_sq(7, 4) == 4

    def test_rational_scale_folded(self, params):
        phi = build_phi(params, 7, 4)
        assert phi.residual_scale_sq == Scalar.exact(1)
        assert phi.fn == build_psi(params, 7, 4).scale(Scalar.exact(2))

    def test_irrational_scale_tracked(self, params):
        phi = build_phi(params, 3, 1)
        assert phi.residual_scale_sq == Scalar.exact(F(1, 2))
        assert phi.fn == build_psi(params, 3, 1)

    def test_float_always_folds(self, fparams):
        phi = build_phi(fparams, 3, 1)
        assert phi.residual_scale_sq == Scalar.of_float(1.0)
        want = build_psi(fparams, 3, 1).scale(Scalar.of_float(math.sqrt(0.5)))
        assert phi.fn.close_to(want, 1e-12)


class TestCatalog:
    def test_energy(self, params):
        assert energy(params, 0) == Scalar.exact(4)
        assert energy(params, 3) == Scalar.exact(16)

    def test_lowering_operator_form(self, params):
        # A- = dz + a zbar at a=1
        want = DiffOp.dz(EXACT) + DiffOp.zbar(EXACT)
        assert make_operator(params, "A-") == want

    def test_hamiltonian_form(self, params):
        H = make_operator(params, "H")
        want = (
            DiffOp.monomial((0, 0, 1, 1), Scalar.exact(-4))
            + DiffOp.monomial((1, 1, 0, 0), Scalar.exact(4))
            + DiffOp.monomial((0, 2, 0, 0), Scalar.exact(2))
        )
        assert H == want

    def test_u_is_affine_in_h(self, params):
        # U = -H/2 + 2a: the central combination collapses to the Hamiltonian
        u = make_operator(params, "U")
        want = make_operator(params, "H").scale(Scalar.exact(F(-1, 2))) + DiffOp.constant(
            Scalar.exact(2)
        )
        assert u == want

    def test_unknown_name_rejected(self, params):
        with pytest.raises(ValueError):
            make_operator(params, "Q")

    def test_aliases(self, params):
        assert make_operator(params, "D+21") == make_operator(params, "D+12")
        assert make_operator(params, "D-21") == make_operator(params, "D-12")

    @pytest.mark.parametrize("name", EXPLICIT_NAMES)
    def test_catalog_matches_explicit_forms(self, params, name):
        assert make_operator(params, name) == explicit_form(params, name)

    def test_catalog_complete(self, params):
        for name in CATALOG_NAMES:
            assert not make_operator(params, name).is_zero()


class TestEnvelopeConjugation:
    def test_shifted_derivatives(self, params):
        got = conjugate_through_envelope(params, DiffOp.dz(EXACT))
        want = DiffOp.dz(EXACT) - DiffOp.zbar(EXACT)
        assert got == want
        got = conjugate_through_envelope(params, DiffOp.dzbar(EXACT))
        want = (
            DiffOp.dzbar(EXACT)
            - DiffOp.z(EXACT)
            - DiffOp.zbar(EXACT).scale(Scalar.exact(F(1, 2)))
        )
        assert got == want

    def test_multiplication_ops_unchanged(self, params):
        op = DiffOp.z(EXACT) * DiffOp.zbar(EXACT)
        assert conjugate_through_envelope(params, op) == op

    def test_homomorphism(self, params):
        x = make_operator(params, "A+")
        y = make_operator(params, "B-")
        got = conjugate_through_envelope(params, x * y)
        want = conjugate_through_envelope(params, x) * conjugate_through_envelope(params, y)
        assert got == want


class TestApply:
    def test_lowering_kills_chain_heads(self, params):
        lower = make_operator(params, "A-")
        for n in range(6):
            assert apply(params, lower, build_psi(params, n, 0)).is_zero()

    def test_jordan_step(self, params):
        H = make_operator(params, "H")
        img = apply(params, H, build_psi(params, 1, 1))
        img = img - build_psi(params, 1, 1).scale(energy(params, 1))
        assert img == build_psi(params, 1, 0)

    def test_eigenvalue_on_chain_head(self, params):
        H = make_operator(params, "H")
        for n in range(5):
            fn = build_psi(params, n, 0)
            assert apply(params, H, fn) == fn.scale(energy(params, n))

    def test_linear_in_operator(self, params):
        x = make_operator(params, "B+")
        y = make_operator(params, "A+")
        fn = build_psi(params, 2, 1)
        assert apply(params, x + y, fn) == apply(params, x, fn) + apply(params, y, fn)
