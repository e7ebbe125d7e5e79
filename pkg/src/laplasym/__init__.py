"""Optimally truncated asymptotic evaluation of Laplace integrals.

Evaluates I(z) = int_0^inf e^{-zt} f(t) dt for large complex z by truncating
the divergent large-z expansion at the index floor(mu r |z| + mu - Re beta),
which leaves an exponentially small remainder O(e^{-r|z|}) plus, once arg z
sweeps past a singularity of f on the circle of convergence, a second
exponentially small contribution from that singularity.  A quadrature oracle
measures the true remainder so the predicted envelopes can be verified.
"""

from .amplitude import (
    AmplitudeSpec,
    SimplePole,
    Singularity,
    SqrtBranch,
    builtin_spec,
    evaluate_amplitude,
    pochhammer,
    series_value,
)
from .errors import ConvergenceError, DomainError, SingularityError
from .expansion import (
    DEFAULT_DELTA,
    EvalPoint,
    TruncatedExpansion,
    hadamard_sum,
    remainder_envelope,
    significance_threshold,
    singularity_contribution,
    tail_integral_J,
    truncation_index,
    upsilon,
    watson_sum,
)
from .expintegral import (
    E1Expansion,
    e1_expansion,
    e1_optimal_index,
    e1_partial_sum,
    e1_remainder_integral,
    jeffreys_estimate,
    script_E,
    superasymptotic_estimate,
)
from .incgamma import (
    bound_a1,
    bound_a2,
    gamma_complete,
    gamma_complete_log,
    gamma_lower,
    gamma_lower_log,
    gamma_upper,
    gamma_upper_log,
    log_gamma,
)
from .oracle import QuadratureResult, measured_remainder, reference_value

__version__ = "0.1.0"

__all__ = [
    "AmplitudeSpec",
    "ConvergenceError",
    "DEFAULT_DELTA",
    "DomainError",
    "E1Expansion",
    "EvalPoint",
    "QuadratureResult",
    "SimplePole",
    "Singularity",
    "SingularityError",
    "SqrtBranch",
    "TruncatedExpansion",
    "bound_a1",
    "bound_a2",
    "builtin_spec",
    "e1_expansion",
    "e1_optimal_index",
    "e1_partial_sum",
    "e1_remainder_integral",
    "evaluate_amplitude",
    "gamma_complete",
    "gamma_complete_log",
    "gamma_lower",
    "gamma_lower_log",
    "gamma_upper",
    "gamma_upper_log",
    "hadamard_sum",
    "jeffreys_estimate",
    "log_gamma",
    "measured_remainder",
    "pochhammer",
    "reference_value",
    "remainder_envelope",
    "script_E",
    "series_value",
    "significance_threshold",
    "singularity_contribution",
    "superasymptotic_estimate",
    "tail_integral_J",
    "truncation_index",
    "upsilon",
    "watson_sum",
]
