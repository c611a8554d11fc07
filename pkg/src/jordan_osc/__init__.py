"""Symbolic toolkit for a nonseparable two-dimensional complex oscillator.

The package builds the model's ladder operators and symmetry algebra inside
the Weyl algebra of (z, zbar), constructs the Jordan-block basis functions in
reduced (Gaussian-envelope-free) form, and machine-verifies the full catalog
of algebraic relations, operator actions, representation coefficients, and
bilinear-pairing identities, either exactly over Gaussian rationals or in
floating point.
"""

from .gaussint import (
    GramBlock,
    OracleUnavailableError,
    expand_in_basis,
    gram_block,
    h_block,
    inner_product,
    minimum_order,
    moment,
    quadrature_oracle,
)
from .model import (
    CATALOG_NAMES,
    EXPLICIT_NAMES,
    BlockIndex,
    Params,
    PhiFn,
    ReducedFn,
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
from .verifier import (
    ACTION_RULES,
    DIAGONAL_RULES,
    LADDER_RULES,
    SUITES,
    RelationSpec,
    Report,
    check_actions,
    check_explicit_forms,
    check_integrals,
    check_irrep,
    check_pseudo_hermiticity,
    check_relation,
    check_structure,
    eval_expression,
    load_negative_controls,
    load_relations,
    parse_relations,
    run_suites,
)
from .weyl import (
    DEFAULT_TOL,
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

__version__ = "0.1.0"

__all__ = [
    "ACTION_RULES",
    "BlockIndex",
    "CATALOG_NAMES",
    "DEFAULT_TOL",
    "DIAGONAL_RULES",
    "DiffOp",
    "EXACT",
    "EXPLICIT_NAMES",
    "FLOAT",
    "GramBlock",
    "LADDER_RULES",
    "ModeMismatchError",
    "OracleUnavailableError",
    "Params",
    "PhiFn",
    "Poly2",
    "ReducedFn",
    "RelationSpec",
    "Report",
    "SUITES",
    "Scalar",
    "adjoint",
    "alpha_coeffs",
    "anticommutator",
    "apply",
    "build_phi",
    "build_psi",
    "check_actions",
    "check_explicit_forms",
    "check_integrals",
    "check_irrep",
    "check_pseudo_hermiticity",
    "check_relation",
    "check_structure",
    "commutator",
    "conjugate_through_envelope",
    "energy",
    "eval_expression",
    "exact_sqrt",
    "expand_in_basis",
    "explicit_form",
    "gram_block",
    "h_block",
    "inner_product",
    "load_negative_controls",
    "load_relations",
    "make_operator",
    "minimum_order",
    "moment",
    "params_from_frequencies",
    "parse_relations",
    "phi_scale_sq",
    "pochhammer",
    "psi_series",
    "quadrature_oracle",
    "run_suites",
    "swap_vars",
]
