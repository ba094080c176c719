"""Positive measures on R^n and the polytorus, their Herglotz-Nevanlinna and
polydisk integral representations, and numerical checks of the conditions
that characterize them."""
from .classify import (
    DEGENERATE,
    FactorSummary,
    ProductRecord,
    classify_measure,
    classify_product,
    classify_product_torus,
)
from .conditions import (
    DEFAULT_THRESHOLD,
    ConditionReport,
    SamplePlan,
    SampleRecord,
    Verdict,
    fitted_constant,
    growth_check,
    lebesgue_check,
    lebesgue_check_dim1,
    lebesgue_check_dim2,
    lebesgue_residual,
    nevanlinna_check,
    nevanlinna_form_residual,
    nevanlinna_residual,
    refined_lebesgue_check,
)
from .errors import (
    DimensionError,
    DivergenceError,
    DomainError,
    MeasureInvariantError,
    MeasureParseError,
    NevanlinnaError,
    PreconditionError,
    RepresentationError,
    UnsupportedIntegralError,
)
from .herglotz import (
    check_positivity,
    check_variable_dependence,
    evaluate_q,
    evaluate_q_derivative,
)
from .kernels import (
    brute_combinatorial_sum,
    combinatorial_sum,
    d_factor,
    d_product,
    kernel_K,
    kernel_K_derivative,
    n_factor,
    n_product,
    poisson,
    psi,
)
from .measures import (
    REAL,
    TORUS,
    Domain,
    MeasureSpec,
    PolydiskData,
    RepresentationData,
    cayley_pullback,
    cayley_pushforward,
    convex_line_measure,
    is_finite,
    make_density,
    make_dirac,
    make_lebesgue,
    make_line,
    permuted_product,
    spec_from_dict,
    tensor,
    zero_measure,
)
from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    QuadratureResult,
    growth_integral,
    integrate,
    total_mass,
)
from .torus import (
    evaluate_f,
    evaluate_f_derivative,
    fourier_coefficient,
    mixed_fourier_check,
    torus_lebesgue_check,
    torus_lebesgue_residual,
)

__version__ = "0.1.0"
