"""Gaussian-weighted bilinear form, moments, and block matrices.

Everything here evaluates the bilinear pairing

    <<f|g>> = integral f(x) g(x) dx1 dx2,      z = x1 + i x2, zbar = x1 - i x2,

for reduced functions f = kappa * P * envelope (see model). Two independent
routes are provided: an exact rational route through the moment recursion, and
a numerical Gauss-Hermite route (the oracle). The exact route is authoritative;
the oracle exists to catch transcription errors in the recursion.

Moments are stored in units of pi/(2a): moment(p, q) is the rational multiple
M with I(p,q) = integral z^p zbar^q envelope^2 = M * pi/(2a). Since each
reduced function carries one factor kappa = sqrt(2a/pi), the pairing of two
reduced functions is kappa^2 * (pi/(2a)) * sum(...) = sum(...), a plain scalar,
so inner_product never needs pi at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .model import Params, ReducedFn, apply, build_psi, make_operator
from .weyl import EXACT, FLOAT, Poly2, Scalar


class OracleUnavailableError(RuntimeError):
    """The quadrature oracle needs a > b for a convergent real-space measure."""


@lru_cache(maxsize=None)
def moment(params: Params, p_deg: int, q_deg: int) -> Scalar:
    """I(p, q) in units of pi/(2a), via the two integration-by-parts rules

        p I(p-1, q) = 2a I(p, q+1)
        q I(p, q-1) = 2a I(p+1, q) + 4b I(p, q+1)

    with base I(0,0) = pi/(2a); negative indices vanish.
    """
    if p_deg < 0 or q_deg < 0:
        return Scalar.zero(params.mode)
    if q_deg >= 1:
        # raise-q rule, rearranged: I(p, q) = p/(2a) I(p-1, q-1)
        factor = params.s(p_deg) / (params.s(2) * params.a_scalar)
        return factor * moment(params, p_deg - 1, q_deg - 1)
    if p_deg == 0:
        return Scalar.one(params.mode)
    # q = 0, p >= 1: combining both rules gives
    # I(p, 0) = -(2b/a) I(p-1, 1) = -b (p-1)/a^2 I(p-2, 0), so odd p vanish
    factor = params.s(-(p_deg - 1)) * params.b_scalar / (params.a_scalar * params.a_scalar)
    return factor * moment(params, p_deg - 2, 0)


def inner_product(params: Params, f: ReducedFn, g: ReducedFn) -> Scalar:
    """<<f|g>> as a plain Scalar (bilinear, symmetric; no conjugation)."""
    prod = f.poly * g.poly
    total = Scalar.zero(params.mode)
    for (i, j), c in prod.terms.items():
        total = total + c * moment(params, i, j)
    return total


def _eval_on_grid(poly: Poly2, zgrid: np.ndarray, zbgrid: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(zgrid, dtype=complex)
    for (i, j), c in poly.sorted_terms():
        acc += c.to_complex() * zgrid**i * zbgrid**j
    return acc


def minimum_order(f: ReducedFn, g: ReducedFn) -> int:
    """Per-axis Gauss-Hermite order floor for a given integrand pair."""
    return max(32, f.poly.total_degree() + g.poly.total_degree() + 8)


def quadrature_oracle(params: Params, f: ReducedFn, g: ReducedFn, order: int | None = None) -> complex:
    """<<f|g>> by tensor-product Gauss-Hermite quadrature on (x1, x2).

    With z = x1 + i x2 the squared envelope is
    exp(-2(a+b) x1^2 - 2(a-b) x2^2 + 4 i b x1 x2); the real Gaussian factors
    become the Hermite weights and the bounded oscillatory factor stays in the
    integrand. Requires a > b; the default order is max(32, total degree + 8)
    per axis and a caller-supplied order below that floor is rejected.
    """
    a, b = float(params.a), float(params.b)
    if not a > b:
        raise OracleUnavailableError(f"quadrature needs a > b, got a={a}, b={b}")
    floor = minimum_order(f, g)
    if order is None:
        order = floor
    elif order < floor:
        raise ValueError(f"order {order} is below the degree-dependent minimum {floor}")
    nodes, weights = np.polynomial.hermite.hermgauss(order)
    s1 = math.sqrt(2 * (a + b))
    s2 = math.sqrt(2 * (a - b))
    x1 = (nodes / s1)[:, None]
    x2 = (nodes / s2)[None, :]
    zgrid = x1 + 1j * x2
    zbgrid = x1 - 1j * x2
    integrand = (
        _eval_on_grid(f.poly.to_float(), zgrid, zbgrid)
        * _eval_on_grid(g.poly.to_float(), zgrid, zbgrid)
        * np.exp(4j * b * x1 * x2)
    )
    w2d = weights[:, None] * weights[None, :]
    total = (w2d * integrand).sum() / (s1 * s2)
    # kappa^2 = 2a/pi for the two reduced-function normalizations
    return complex(total * 2 * a / math.pi)


# ---------------------------------------------------------------------------
# block matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GramBlock:
    """Pairing matrix of one level: entries[m][m'] = <<psi_{n,m} | psi_{n,m'}>>."""

    n: int
    entries: tuple

    def __getitem__(self, m: int):
        return self.entries[m]


def gram_block(params: Params, n: int) -> GramBlock:
    fns = [build_psi(params, n, m) for m in range(n + 1)]
    rows = tuple(
        tuple(inner_product(params, fns[m], fns[mp]) for mp in range(n + 1))
        for m in range(n + 1)
    )
    return GramBlock(n, rows)


def h_block(params: Params, n: int) -> tuple:
    """Matrix M[k][m] = <<psi_{n,n-k} | H psi_{n,m}>>; biorthogonality turns it
    into the level-n Jordan block E_n I + superdiagonal of ones."""
    ham = make_operator(params, "H")
    fns = [build_psi(params, n, m) for m in range(n + 1)]
    images = [apply(params, ham, fn) for fn in fns]
    return tuple(
        tuple(inner_product(params, fns[n - k], images[m]) for m in range(n + 1))
        for k in range(n + 1)
    )


def expand_in_basis(params: Params, f: ReducedFn, n_max: int) -> ReducedFn:
    """Truncated resolution of identity: sum over n <= n_max of
    <<psi_{n,n-m}|f>> psi_{n,m}; reproduces any f in the span of those levels."""
    out = ReducedFn.zero(params.mode)
    for n in range(n_max + 1):
        for m in range(n + 1):
            coeff = inner_product(params, build_psi(params, n, n - m), f)
            if not coeff.is_zero():
                out = out + build_psi(params, n, m).scale(coeff)
    return out
