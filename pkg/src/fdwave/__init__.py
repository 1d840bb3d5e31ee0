"""Time-fractional diffusion-wave toolkit.

Special functions (Wright / M-Wright), Green functions of the Cauchy and
Signalling problems, Levy stable densities, Riemann-Liouville / Caputo
operators, Laplace-inversion oracles, viscoelastic parameter maps, and
evolution solvers, with a CSV/JSON-emitting command line.
"""

__version__ = "0.1.0"

from ._backend import HAS_NUMBA
from .evolution import (
    Field2D,
    Grid1D,
    ProblemData,
    solve_cauchy_convolution,
    solve_direct_scheme,
    solve_signalling_convolution,
    stable_dt,
)
from .fracderiv import (
    FracOpOrder,
    LaplaceRule,
    SampledFunction,
    caputo_derivative,
    caputo_rl_relation_residual,
    numeric_laplace,
    rl_derivative,
    rl_integral,
    verify_laplace_rule,
)
from .green import (
    GreenSpec,
    Kind,
    green_cauchy,
    green_cauchy_moment,
    green_cauchy_profile,
    green_cauchy_transform,
    green_signalling,
    green_signalling_signal,
    green_signalling_transform,
    reciprocity_residual,
    scale_map,
    similarity,
)
from .laplace_oracle import ContourConfig, TransformFn, bromwich_mwright, talbot_invert
from .orders import FractionalOrder
from .special_fn import (
    EvalPolicy,
    Method,
    WrightParams,
    default_crossover,
    f_wright,
    f_wright_series,
    m_wright,
    m_wright_arr,
    m_wright_asymptotic,
    m_wright_closed_half,
    m_wright_closed_zero,
    m_wright_info,
    m_wright_moment,
    m_wright_profile,
    m_wright_tail_bound,
    overlap_band_check,
    wright_series,
)
from .stable import (
    ClosedKind,
    StableParams,
    stable_cdf_closed,
    stable_duality_residual,
    stable_extremal_survival,
    stable_from_mwright,
    stable_pdf_closed,
    stable_pdf_series,
    stable_tail_exponent,
)
from .visco import (
    MaterialParams,
    creep_compliance,
    gamma_from_q,
    green_spec,
    mu_of_s,
    order_from_creep,
    q_factor,
)

__all__ = [
    "HAS_NUMBA",
    "FractionalOrder",
    "EvalPolicy",
    "Method",
    "WrightParams",
    "default_crossover",
    "f_wright",
    "f_wright_series",
    "m_wright",
    "m_wright_arr",
    "m_wright_asymptotic",
    "m_wright_closed_half",
    "m_wright_closed_zero",
    "m_wright_info",
    "m_wright_moment",
    "m_wright_profile",
    "m_wright_tail_bound",
    "overlap_band_check",
    "wright_series",
    "GreenSpec",
    "Kind",
    "similarity",
    "green_cauchy",
    "green_signalling",
    "green_cauchy_profile",
    "green_signalling_signal",
    "green_cauchy_transform",
    "green_signalling_transform",
    "green_cauchy_moment",
    "reciprocity_residual",
    "scale_map",
    "ClosedKind",
    "StableParams",
    "stable_pdf_series",
    "stable_pdf_closed",
    "stable_cdf_closed",
    "stable_from_mwright",
    "stable_duality_residual",
    "stable_extremal_survival",
    "stable_tail_exponent",
    "ContourConfig",
    "TransformFn",
    "bromwich_mwright",
    "talbot_invert",
    "SampledFunction",
    "FracOpOrder",
    "LaplaceRule",
    "rl_integral",
    "rl_derivative",
    "caputo_derivative",
    "caputo_rl_relation_residual",
    "numeric_laplace",
    "verify_laplace_rule",
    "MaterialParams",
    "creep_compliance",
    "order_from_creep",
    "q_factor",
    "gamma_from_q",
    "mu_of_s",
    "green_spec",
    "Grid1D",
    "ProblemData",
    "Field2D",
    "solve_cauchy_convolution",
    "solve_signalling_convolution",
    "solve_direct_scheme",
    "stable_dt",
    "__version__",
]
