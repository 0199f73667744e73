"""Certified numerical bounds for commutator inequalities.

The package computes rigorous upper bounds for the best constant in
``||f(A)X - X f(B)|| <= C * ||X|| * f(||AX - XB|| / ||X||)`` over
unitarily invariant norms, for operator-monotone test functions such as
``f(x) = x / (x + 1)`` and ``f(x) = sqrt(x)``.  It bundles:

* a one-parameter-family approximation bound built from Gaussian
  antiderivatives (:mod:`commbounds.approx`),
* derivative-free tuning of that bound over a certification grid
  (:mod:`commbounds.optimize`),
* interval stitching that lifts gridpoint bounds to a global constant
  and integrates it into a square-root commutator constant
  (:mod:`commbounds.stitch`),
* a catalogue of closed-form constants for comparison
  (:mod:`commbounds.formulas`),
* a random-matrix laboratory that checks every inequality on sampled
  Hermitian matrices (:mod:`commbounds.matrixlab`),
* a command line front end (:mod:`commbounds.cli`).
"""

from commbounds.approx import (
    DEGENERATE_VALUE,
    DomainViolation,
    ErfMinOutcome,
    GaussianParams,
    NoSignChange,
    RootValidationFailed,
    ToleranceConfig,
    erf_min_bound,
    f1,
)
from commbounds.formulas import (
    PiecewiseQuadParams,
    csc1,
    gamma_boyadzhiev,
    gamma_olsen_pedersen,
    gamma_pedersen,
    gamma_sin,
    gamma_tangent,
    lv_threshold,
    optimize_pq_f1,
    pq_f1_bound,
    pq_sqrt_bound,
    scaled_cayley_Cc,
    shift_bound_e,
    shift_constant,
    simple_Ct,
    trivial_constant,
)
from commbounds.matrixlab import (
    BadParameter,
    CampaignConfig,
    CampaignReport,
    HermitianSpectral,
    NormKind,
    NotHermitian,
    SpectralRadiusTooLarge,
    ZeroDenominator,
    counterexample_report,
    doubling_embed,
    gen_commutator,
    hermitian_eig,
    matrix_function,
    monte_carlo_campaign,
    singular_values,
    ui_norm,
    unitary_exp,
    verify_abs_bounds,
    verify_conjecture_ratio,
    verify_exp_equivalence,
    verify_jensen,
)
from commbounds.optimize import (
    BoundPoint,
    PatternSearchConfig,
    build_paper_grid,
    optimize_grid,
    pattern_search,
    pattern_search_nd,
)
from commbounds.stitch import (
    ArgumentOrder,
    CoverageGap,
    DegenerateNode,
    StitchedCertificate,
    continuity_lift,
    corner_large,
    corner_small,
    gamma_half_via_Cc,
    global_constant,
    sqrt_constant,
    stitch,
)

__all__ = [
    "ArgumentOrder",
    "BadParameter",
    "BoundPoint",
    "CampaignConfig",
    "CampaignReport",
    "CoverageGap",
    "DEGENERATE_VALUE",
    "DegenerateNode",
    "DomainViolation",
    "ErfMinOutcome",
    "GaussianParams",
    "HermitianSpectral",
    "NoSignChange",
    "NormKind",
    "NotHermitian",
    "PatternSearchConfig",
    "PiecewiseQuadParams",
    "RootValidationFailed",
    "SpectralRadiusTooLarge",
    "StitchedCertificate",
    "ToleranceConfig",
    "ZeroDenominator",
    "build_paper_grid",
    "continuity_lift",
    "corner_large",
    "corner_small",
    "counterexample_report",
    "csc1",
    "doubling_embed",
    "erf_min_bound",
    "f1",
    "gamma_boyadzhiev",
    "gamma_half_via_Cc",
    "gamma_olsen_pedersen",
    "gamma_pedersen",
    "gamma_sin",
    "gamma_tangent",
    "gen_commutator",
    "global_constant",
    "hermitian_eig",
    "lv_threshold",
    "matrix_function",
    "monte_carlo_campaign",
    "optimize_grid",
    "optimize_pq_f1",
    "pattern_search",
    "pattern_search_nd",
    "pq_f1_bound",
    "pq_sqrt_bound",
    "scaled_cayley_Cc",
    "shift_bound_e",
    "shift_constant",
    "simple_Ct",
    "singular_values",
    "sqrt_constant",
    "stitch",
    "trivial_constant",
    "ui_norm",
    "unitary_exp",
    "verify_abs_bounds",
    "verify_conjecture_ratio",
    "verify_exp_equivalence",
    "verify_jensen",
]

__version__ = "0.1.0"
