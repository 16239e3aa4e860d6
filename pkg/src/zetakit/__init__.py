"""zetakit: zeta functions of complex sequences.

Computes special values, pole locations, residues, and the derivative at 0
of the zeta function attached to a sequence of complex numbers, starting
from a characteristic function's Taylor coefficients at the origin and its
large-argument logarithmic asymptotic coefficients.  Everything is
cross-checkable numerically through direct summation, contour quadrature,
and rational (barycentric) continuation.
"""

__version__ = "0.1.0"

from .aaa import BarycentricModel, aaa_fit, bary_eval, derivative_at, find_real_features
from .asym import (AsymExpansion, PoleInfo, PoleReport, classify_poles,
                   heaviside, l_asy_eval, log_compose, residue_at,
                   zeta_int_leq_alpha, zeta_prime_zero)
from .catalog import (CatalogModel, ZeroSequence, airy_model, airy_zeros,
                      chf_model, hurwitz_model, model_from_spec, pcf_model,
                      riemann_model)
from .errors import (AccuracyError, ConditioningWarning, DivergenceError,
                     DomainError, NeedsContinuationError, PoleError,
                     RefinementError, SlowConvergenceError, StripError,
                     UnsupportedOrderError, ZetakitError)
from .evaluate import contour_zeta, continued_zeta, zeta_series
from .kernels import (EULER_GAMMA, bernoulli_number, bernoulli_poly,
                      binomial_general, digamma_polygamma, gamma, log_psi,
                      stirling_first)
from .quadrature import euler_maclaurin_tail, quad_adaptive
from .series import (LogCoeffs, PowerSeries, exact_sum_rule, hadamardize,
                     log_coeffs, zeta_pos_int, zeta_via_bell)
from .shift import (ShiftParams, mu_coeff, omega_table, rightmost_pole_check,
                    shifted_values)

__all__ = [
    "AsymExpansion", "BarycentricModel", "CatalogModel", "LogCoeffs",
    "PoleInfo", "PoleReport", "PowerSeries", "ShiftParams", "ZeroSequence",
    "aaa_fit", "airy_model", "airy_zeros", "bary_eval", "bernoulli_number",
    "bernoulli_poly", "binomial_general", "chf_model", "classify_poles",
    "contour_zeta", "continued_zeta", "derivative_at", "digamma_polygamma",
    "euler_maclaurin_tail", "exact_sum_rule", "find_real_features", "gamma",
    "hadamardize", "heaviside", "hurwitz_model", "l_asy_eval", "log_coeffs",
    "log_compose", "log_psi", "model_from_spec", "mu_coeff", "omega_table",
    "pcf_model", "quad_adaptive", "residue_at", "riemann_model",
    "rightmost_pole_check", "shifted_values", "stirling_first",
    "zeta_int_leq_alpha", "zeta_pos_int", "zeta_prime_zero", "zeta_series",
    "zeta_via_bell", "EULER_GAMMA",
    "ZetakitError", "DomainError", "UnsupportedOrderError", "PoleError",
    "NeedsContinuationError", "StripError", "AccuracyError",
    "SlowConvergenceError", "DivergenceError", "RefinementError",
    "ConditioningWarning",
]
