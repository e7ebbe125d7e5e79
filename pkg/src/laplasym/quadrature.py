"""Complex-valued adaptive quadrature on finite intervals.

Thin wrapper over scipy.integrate.quad (QUADPACK): the real and imaginary
parts are integrated separately so the error estimate applies to each part,
and breakpoint hints can be passed through for integrands with interior
near-singular bumps.
"""

from __future__ import annotations

import warnings
from typing import Callable, Sequence

from scipy import integrate

from .errors import ConvergenceError


def quad_complex(
    f: Callable[[float], complex],
    a: float,
    b: float,
    *,
    epsabs: float = 1e-14,
    epsrel: float = 1e-12,
    points: Sequence[float] | None = None,
    limit: int = 500,
) -> tuple[complex, float, int]:
    """Integrate a complex-valued function of a real variable over [a, b].

    Returns (value, abs_error_estimate, n_evaluations).  Breakpoints outside
    (a, b) are dropped.  QUADPACK roundoff warnings are tolerated; the
    returned error estimate reflects them.
    """
    pts = None
    if points:
        pts = sorted(p for p in points if a < p < b)
        if not pts:
            pts = None

    cache: dict[float, complex] = {}

    def _eval(t: float) -> complex:
        v = cache.get(t)
        if v is None:
            v = f(t)
            cache[t] = v
        return v

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        re_val, re_err, re_info = integrate.quad(
            lambda t: _eval(t).real, a, b,
            epsabs=epsabs, epsrel=epsrel, points=pts, limit=limit, full_output=1,
        )[:3]
        im_val, im_err, im_info = integrate.quad(
            lambda t: _eval(t).imag, a, b,
            epsabs=epsabs, epsrel=epsrel, points=pts, limit=limit, full_output=1,
        )[:3]

    neval = re_info["neval"] + im_info["neval"]
    return complex(re_val, im_val), re_err + im_err, neval


def quad_complex_checked(
    f: Callable[[float], complex],
    a: float,
    b: float,
    *,
    epsabs: float,
    epsrel: float,
    fail_abs: float,
    points: Sequence[float] | None = None,
    limit: int = 500,
) -> tuple[complex, float, int]:
    """As quad_complex, but raise ConvergenceError if the estimate misses fail_abs."""
    value, err, neval = quad_complex(
        f, a, b, epsabs=epsabs, epsrel=epsrel, points=points, limit=limit
    )
    if err > fail_abs and err > epsrel * abs(value) * 100:
        raise ConvergenceError(
            f"quadrature error estimate {err:.3e} exceeds requested {fail_abs:.3e} "
            f"on [{a:g}, {b:g}]"
        )
    return value, err, neval
