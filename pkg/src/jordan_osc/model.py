"""Model layer: parameters, basis functions, and the operator catalog.

The model is the 2D complex oscillator

    H = -4 dz dzbar + 4 a^2 z zbar + 8 a b zbar^2,        a > 0, b > 0,

whose eigenvalue problem is solved by reduced functions: every basis function
is stored as its polynomial part P with the global envelope and normalization

    function = kappa * P(z, zbar) * exp(-a z zbar - b zbar^2),
    kappa    = sqrt(2a / pi),

never materialized. H has eigenvalues E_n = 4a(n+1); each level carries an
(n+1)-dimensional Jordan block spanned by functions psi_{n,m} (0 <= m <= n)
obeying (H - E_n) psi_{n,m} = psi_{n,m-1}.

Exactness strategy: in exact mode the parameters are a = p^2, b = q^2 for
positive rationals p, q, so sqrt(ab) = p q, sqrt(a/b) = p/q and sqrt(b/a) = q/p
are rational and all ladder/action coefficients stay Gaussian rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .weyl import (
    EXACT,
    FLOAT,
    DiffOp,
    ModeMismatchError,
    Number,
    Poly2,
    Scalar,
    anticommutator,
    exact_sqrt,
)

#: every name make_operator accepts (D+21/D-21 are accepted as aliases)
CATALOG_NAMES = (
    "H", "A+", "A-", "B+", "B-",
    "R", "S", "T", "U",
    "J0", "J+", "J-", "K",
    "a1+", "a1-", "a2+", "a2-",
    "E11", "E12", "E21", "E22",
    "D+11", "D+12", "D+22", "D-11", "D-12", "D-22",
)

#: generators with an independently transcribed explicit z/zbar form
EXPLICIT_NAMES = (
    "a1+", "a1-", "a2+", "a2-",
    "J0", "J+", "J-", "K",
    "D+11", "D+12", "D+22", "D-11", "D-12", "D-22",
)

_ALIASES = {"D+21": "D+12", "D-21": "D-12"}


@dataclass(frozen=True)
class Params:
    """Model parameters, stored through their square roots p = sqrt(a), q = sqrt(b)."""

    mode: str
    p: Number
    q: Number

    def __post_init__(self):
        if not (self.p > 0 and self.q > 0):
            raise ValueError("parameters require a > 0 and b > 0")

    # ---- constructors ----
    @staticmethod
    def exact(p: int | str | Fraction, q: int | str | Fraction) -> "Params":
        return Params(EXACT, Fraction(p), Fraction(q))

    @staticmethod
    def from_ab(a: float, b: float) -> "Params":
        if not (a > 0 and b > 0):
            raise ValueError("parameters require a > 0 and b > 0")
        return Params(FLOAT, math.sqrt(a), math.sqrt(b))

    @staticmethod
    def from_frequencies(omega1: float, omega2: float) -> "Params":
        """Float-mode parameters of the nonseparable oscillator with the given
        frequencies; requires omega1 > omega2 > 0 so the coupling is positive."""
        if not (omega1 > omega2 > 0):
            raise ValueError("need omega1 > omega2 > 0 for the nonseparable branch")
        lam = math.sqrt((omega1**2 + omega2**2) / 2)
        g = (omega1**2 - omega2**2) / 2
        return Params.from_ab(lam / 2, g / (4 * lam))

    def to_float(self) -> "Params":
        if self.mode == FLOAT:
            return self
        return Params(FLOAT, float(self.p), float(self.q))

    # ---- plain-number views ----
    @property
    def a(self) -> Number:
        return self.p * self.p

    @property
    def b(self) -> Number:
        return self.q * self.q

    @property
    def lam(self) -> Number:
        return 2 * self.a

    @property
    def g(self) -> Number:
        return 4 * self.lam * self.b

    # ---- scalar views ----
    def s(self, value) -> Scalar:
        return Scalar.lift(value, self.mode)

    @property
    def a_scalar(self) -> Scalar:
        return self.s(self.a) if self.mode == EXACT else Scalar.of_float(self.a)

    @property
    def b_scalar(self) -> Scalar:
        return self.s(self.b) if self.mode == EXACT else Scalar.of_float(self.b)

    @property
    def sqrt_ab(self) -> Scalar:
        v = self.p * self.q
        return self.s(v) if self.mode == EXACT else Scalar.of_float(v)

    @property
    def sqrt_a_over_b(self) -> Scalar:
        v = self.p / self.q
        return self.s(v) if self.mode == EXACT else Scalar.of_float(v)

    @property
    def sqrt_b_over_a(self) -> Scalar:
        v = self.q / self.p
        return self.s(v) if self.mode == EXACT else Scalar.of_float(v)


def params_from_frequencies(omega1: float, omega2: float) -> Params:
    return Params.from_frequencies(omega1, omega2)


@dataclass(frozen=True)
class BlockIndex:
    """Position inside the Jordan structure: level n, chain position m."""

    n: int
    m: int

    def __post_init__(self):
        if not (0 <= self.m <= self.n):
            raise ValueError(f"need 0 <= m <= n, got n={self.n}, m={self.m}")

    @property
    def j(self) -> Fraction:
        return Fraction(self.n, 2)

    @property
    def mu(self) -> Fraction:
        return Fraction(2 * self.m - self.n, 2)


@dataclass(frozen=True, eq=False)
class ReducedFn:
    """Polynomial part of kappa * P(z, zbar) * exp(-a z zbar - b zbar^2).

    The envelope and kappa are fixed once the parameters are; equality of
    reduced functions is equality of the stored polynomials.
    """

    poly: Poly2

    @property
    def mode(self) -> str:
        return self.poly.mode

    @staticmethod
    def zero(mode: str) -> "ReducedFn":
        return ReducedFn(Poly2.zero(mode))

    def __add__(self, other: "ReducedFn") -> "ReducedFn":
        return ReducedFn(self.poly + other.poly)

    def __sub__(self, other: "ReducedFn") -> "ReducedFn":
        return ReducedFn(self.poly - other.poly)

    def __neg__(self) -> "ReducedFn":
        return ReducedFn(-self.poly)

    def scale(self, value) -> "ReducedFn":
        return ReducedFn(self.poly.scale(value))

    def __mul__(self, value) -> "ReducedFn":
        return self.scale(value)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def to_float(self) -> "ReducedFn":
        return ReducedFn(self.poly.to_float())

    def close_to(self, other: "ReducedFn", tol: float) -> bool:
        return self.poly.close_to(other.poly, tol)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReducedFn):
            return NotImplemented
        return self.poly == other.poly

    __hash__ = None

    def __str__(self) -> str:
        return str(self.poly)

    __repr__ = __str__


@dataclass(frozen=True)
class PhiFn:
    """A rescaled basis function sqrt(residual_scale_sq) * fn.

    In float mode the rescaling sqrt(m!/(n-m)!) is always folded into ``fn``
    and ``residual_scale_sq`` is 1. In exact mode the square root is folded in
    only when it is rational; otherwise ``fn`` stays unscaled and the squared
    factor is tracked here, so su(2)-type checks can run on squared values.
    """

    fn: ReducedFn
    residual_scale_sq: Scalar


# ---------------------------------------------------------------------------
# combinatorial helpers
# ---------------------------------------------------------------------------


def pochhammer(x, k: int):
    """Rising factorial (x)_k = x (x+1) ... (x+k-1); (x)_0 = 1."""
    if k < 0:
        raise ValueError("pochhammer needs k >= 0")
    out = 1
    for t in range(k):
        out = out * (x + t)
    return out


def alpha_coeffs(k: int) -> list[Fraction]:
    """Expansion coefficients of the degree-k associated-function sum.

    alpha_0 = (-2)^k, alpha_k = 2^(2k), and for 0 < i < k
    alpha_i = (-2)^i (k-i+1)_i alpha_0 / i!. All values are integers.
    """
    if k < 0:
        raise ValueError("alpha_coeffs needs k >= 0")
    first = Fraction((-2) ** k)
    if k == 0:
        return [first]
    coeffs = [first]
    for i in range(1, k):
        coeffs.append(Fraction((-2) ** i * pochhammer(k - i + 1, i), factorial(i)) * first)
    coeffs.append(Fraction(2 ** (2 * k)))
    return coeffs


# ---------------------------------------------------------------------------
# basis functions
# ---------------------------------------------------------------------------


def _check_index(n: int, m: int) -> None:
    if not (isinstance(n, int) and isinstance(m, int) and 0 <= m <= n):
        raise ValueError(f"need integers 0 <= m <= n, got n={n!r}, m={m!r}")


def _cn0_reduced(params: Params, n: int) -> Scalar:
    # c_{n,0} / kappa = 4^n (ab)^(n/2) = (4 sqrt(ab))^n
    return (params.s(4) * params.sqrt_ab) ** n


def _cn_reduced(params: Params, n: int) -> Scalar:
    # c_n = c_{n,0} / ((8ab)^n n!)
    denom = (params.s(8) * params.a_scalar * params.b_scalar) ** n * params.s(factorial(n))
    return _cn0_reduced(params, n) / denom


@lru_cache(maxsize=None)
def _psi_chain_head(params: Params, n: int) -> ReducedFn:
    # psi_{n,0} = c_{n,0} zbar^n  (direct closed form for the chain head)
    return ReducedFn(Poly2.monomial(0, n, _cn0_reduced(params, n)))


@lru_cache(maxsize=None)
def psi_series(params: Params, n: int, m: int) -> ReducedFn:
    """The full associated-function sum, valid for every 0 <= m <= n:

    psi_{n,m} = c_n (2ab)^(n-m) sum_i alpha_i^(n-m) (2m-n+i+1)_(2n-2m-i)
                zbar^i (a z + b zbar)^(2m-n+i).

    Whenever the exponent 2m-n+i would be negative the rising factorial
    contains a zero factor, so no negative powers ever materialize.
    """
    _check_index(n, m)
    mode = params.mode
    k = n - m
    alphas = alpha_coeffs(k)
    w = Poly2.monomial(1, 0, params.a_scalar) + Poly2.monomial(0, 1, params.b_scalar)
    acc = Poly2.zero(mode)
    for i in range(k + 1):
        poch = pochhammer(2 * m - n + i + 1, 2 * n - 2 * m - i)
        if poch == 0:
            continue
        e = 2 * m - n + i
        assert e >= 0
        term = Poly2.monomial(0, i, params.s(alphas[i] * poch)) * w**e
        acc = acc + term
    front = _cn_reduced(params, n) * (params.s(2) * params.a_scalar * params.b_scalar) ** k
    return ReducedFn(acc.scale(front))


@lru_cache(maxsize=None)
def build_psi(params: Params, n: int, m: int) -> ReducedFn:
    """Reduced basis function psi_{n,m}; m = 0 uses the direct chain-head form,
    m >= 1 the associated-function sum (psi_series agrees at m = 0, tested)."""
    _check_index(n, m)
    if m == 0:
        return _psi_chain_head(params, n)
    return psi_series(params, n, m)


def phi_scale_sq(n: int, m: int) -> Fraction:
    """Squared su(2) rescaling m!/(n-m)! of phi relative to psi."""
    _check_index(n, m)
    return Fraction(factorial(m), factorial(n - m))


def build_phi(params: Params, n: int, m: int) -> PhiFn:
    """su(2)-normalized function phi = sqrt(m!/(n-m)!) psi_{n,m} with j = n/2,
    mu = m - n/2; the square root is tracked when it is irrational in exact mode."""
    base = build_psi(params, n, m)
    ratio = phi_scale_sq(n, m)
    if params.mode == FLOAT:
        return PhiFn(base.scale(math.sqrt(ratio)), Scalar.one(FLOAT))
    root = exact_sqrt(ratio)
    if root is not None:
        return PhiFn(base.scale(root), Scalar.one(EXACT))
    return PhiFn(base, params.s(ratio))


def energy(params: Params, n: int) -> Scalar:
    """Level-n eigenvalue E_n = 4a(n+1)."""
    return params.s(4 * (n + 1)) * params.a_scalar


# ---------------------------------------------------------------------------
# operator catalog
# ---------------------------------------------------------------------------


def _canonical_name(name: str) -> str:
    name = _ALIASES.get(name, name)
    if name not in CATALOG_NAMES:
        raise ValueError(f"unknown operator {name!r}; catalog: {', '.join(CATALOG_NAMES)}")
    return name


@lru_cache(maxsize=None)
def make_operator(params: Params, name: str) -> DiffOp:
    """Catalog operator by name.

    H, A+/-, B+/- are entered from their defining forms; every composite name
    (R, S, T, U, the gl(2) and boson generators, E_ij, D+/-_ij) is built
    compositionally from those via products and linear combinations, never
    hand-expanded. Unknown names raise ValueError.
    """
    name = _canonical_name(name)
    mode = params.mode
    s = params.s
    a, b = params.a_scalar, params.b_scalar
    mono = DiffOp.monomial
    one = Scalar.one(mode)

    if name == "H":
        return (
            mono((0, 0, 1, 1), s(-4))
            + mono((1, 1, 0, 0), s(4) * a * a)
            + mono((0, 2, 0, 0), s(8) * a * b)
        )
    if name in ("A+", "A-"):
        sign = s(-1) if name == "A+" else s(1)
        return mono((0, 0, 1, 0), one) + mono((0, 1, 0, 0), sign * a)
    if name in ("B+", "B-"):
        sign = s(-1) if name == "B+" else s(1)
        return (
            mono((0, 0, 0, 1), one)
            + mono((1, 0, 0, 0), sign * a)
            + mono((0, 1, 0, 0), sign * s(2) * b)
        )

    op = lambda nm: make_operator(params, nm)  # noqa: E731

    if name == "R":
        return op("A+") * op("A-")
    if name == "S":
        return op("B+") * op("B-")
    if name == "T":
        return op("A+") * op("B-") - op("B+") * op("A-")
    if name == "U":
        return op("A+") * op("B-") + op("B+") * op("A-")

    if name == "J0":
        return op("T").scale(s(1) / (s(4) * a))
    if name == "J+":
        inner = op("S") + op("R").scale(b * b / (a * a)) - op("U").scale(b / a)
        return inner.scale(s(-1) / (s(16) * a * b))
    if name == "J-":
        return op("R").scale(s(-4) * b / a)
    if name == "K":
        inner = op("R").scale(s(2) * b / a) - op("U") + DiffOp.constant(s(2) * a)
        return inner.scale(s(1) / (s(2) * a))

    if name in ("a1+", "a2-"):
        core = op("A+" if name == "a1+" else "A-").scale(b) - op("B+" if name == "a1+" else "B-").scale(a)
        core = core.scale(s(1) / (s(4) * a * params.sqrt_ab))
        return core if name == "a1+" else -core
    if name == "a1-":
        return op("A-").scale(s(2) * params.sqrt_b_over_a)
    if name == "a2+":
        return op("A+").scale(s(-2) * params.sqrt_b_over_a)

    if name.startswith("E"):
        i, j = int(name[1]), int(name[2])
        raising = op(f"a{i}+")
        lowering = op(f"a{j}-")
        return anticommutator(raising, lowering).scale(s(Fraction(1, 2)))

    # D+ij / D-ij = (1/2){a_i^pm, a_j^pm}
    sign, i, j = name[1], int(name[2]), int(name[3])
    left = op(f"a{i}{sign}")
    right = op(f"a{j}{sign}")
    return anticommutator(left, right).scale(s(Fraction(1, 2)))


@lru_cache(maxsize=None)
def explicit_form(params: Params, name: str) -> DiffOp:
    """Independently transcribed explicit z/zbar form of the 14 superalgebra
    generators; built from first-order pieces only, never from make_operator,
    so agreement with the catalog is a genuine cross-check."""
    if name not in EXPLICIT_NAMES:
        raise ValueError(f"no explicit form for {name!r}; available: {', '.join(EXPLICIT_NAMES)}")
    mode = params.mode
    s = params.s
    a, b = params.a_scalar, params.b_scalar
    mono = DiffOp.monomial
    one = Scalar.one(mode)

    # shared first-order pieces: X = b dz - a dzbar, W = (a z + b zbar) as
    # a multiplication operator (X and W commute)
    X = mono((0, 0, 1, 0), b) + mono((0, 0, 0, 1), -a)
    W = mono((1, 0, 0, 0), a) + mono((0, 1, 0, 0), b)

    if name == "a1+":
        return (X + W.scale(a)).scale(s(1) / (s(4) * a * params.sqrt_ab))
    if name == "a1-":
        return (mono((0, 0, 1, 0), one) + mono((0, 1, 0, 0), a)).scale(s(2) * params.sqrt_b_over_a)
    if name == "a2+":
        return (mono((0, 0, 1, 0), one) + mono((0, 1, 0, 0), -a)).scale(s(-2) * params.sqrt_b_over_a)
    if name == "a2-":
        return (X - W.scale(a)).scale(s(-1) / (s(4) * a * params.sqrt_ab))

    if name == "J0":
        return (
            mono((1, 0, 1, 0), a) + mono((0, 1, 1, 0), s(2) * b) + mono((0, 1, 0, 1), -a)
        ).scale(s(1) / (s(2) * a))
    if name == "J+":
        return (X * X - (W * W).scale(a * a)).scale(s(-1) / (s(16) * a**3 * b))
    if name == "J-":
        return (mono((0, 0, 2, 0), one) + mono((0, 2, 0, 0), -(a * a))).scale(s(-4) * b / a)
    if name == "K":
        return (
            mono((0, 0, 2, 0), b)
            + mono((0, 0, 1, 1), -a)
            + mono((1, 1, 0, 0), a**3)
            + mono((0, 2, 0, 0), a * a * b)
        ).scale(s(1) / (a * a))

    if name in ("D+11", "D-22"):
        sign = s(1) if name == "D+11" else s(-1)
        quad = X * X + (W * X).scale(sign * s(2) * a) + (W * W).scale(a * a)
        return quad.scale(s(1) / (s(16) * a**3 * b))
    if name in ("D+22", "D-11"):
        sign = s(-1) if name == "D+22" else s(1)
        quad = mono((0, 0, 2, 0), one) + mono((0, 1, 1, 0), sign * s(2) * a) + mono((0, 2, 0, 0), a * a)
        return quad.scale(s(4) * b / a)

    # D+12 / D-12
    sign = s(1) if name == "D+12" else s(-1)
    quad = (
        mono((0, 0, 2, 0), b)
        + mono((0, 0, 1, 1), -a)
        + mono((1, 0, 1, 0), sign * a * a)
        + mono((0, 1, 0, 1), sign * a * a)
        + mono((1, 1, 0, 0), -(a**3))
        + mono((0, 2, 0, 0), -(a * a * b))
        + DiffOp.constant(sign * a * a)
    )
    return quad.scale(s(-1) / (s(2) * a * a))


# ---------------------------------------------------------------------------
# envelope-conjugated application
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _shifted_derivative_powers(params: Params, k: int, l: int) -> DiffOp:
    # conjugation by the envelope sends dz -> dz - a zbar and
    # dzbar -> dzbar - a z - 2b zbar; the two shifted derivatives commute
    mode = params.mode
    a, b = params.a_scalar, params.b_scalar
    dz_shift = DiffOp.dz(mode) + DiffOp.monomial((0, 1, 0, 0), -a)
    dzb_shift = (
        DiffOp.dzbar(mode)
        + DiffOp.monomial((1, 0, 0, 0), -a)
        + DiffOp.monomial((0, 1, 0, 0), params.s(-2) * b)
    )
    return dz_shift**k * dzb_shift**l


def conjugate_through_envelope(params: Params, op: DiffOp) -> DiffOp:
    """exp(a z zbar + b zbar^2) . op . exp(-a z zbar - b zbar^2) as a DiffOp."""
    if op.mode != params.mode:
        raise ModeMismatchError(f"operator is {op.mode!r}, parameters are {params.mode!r}")
    out = DiffOp.zero(params.mode)
    for (i, j, k, l), c in op.terms.items():
        head = DiffOp.monomial((i, j, 0, 0), c)
        out = out + head * _shifted_derivative_powers(params, k, l)
    return out


def apply(params: Params, op: DiffOp, fn: ReducedFn) -> ReducedFn:
    """Act with an operator on a reduced function.

    The envelope is never materialized: the operator is conjugated through
    exp(-a z zbar - b zbar^2) and the substituted operator acts on the
    polynomial part.
    """
    conj = conjugate_through_envelope(params, op)
    return ReducedFn(conj.apply_to(fn.poly))
