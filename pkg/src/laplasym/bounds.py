"""Randomized verification of the incomplete-gamma tail/head bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .incgamma import bound_a1, bound_a2, gamma_lower_log, gamma_upper_log


@dataclass
class BoundsReport:
    seed: int
    samples: int
    min_ratio_a1: float = math.inf
    min_ratio_a2: float = math.inf
    violations_a1: int = 0
    violations_a2: int = 0
    out_of_range_rejected: bool = False
    worst_case_a1: tuple = ()
    worst_case_a2: tuple = ()

    @property
    def passed(self) -> bool:
        return (
            self.violations_a1 == 0
            and self.violations_a2 == 0
            and self.min_ratio_a1 > 1.0
            and self.min_ratio_a2 > 1.0
            and self.out_of_range_rejected
        )


def check_bounds(seed: int, samples: int) -> BoundsReport:
    """Sample both bounds over their proven parameter ranges.

    Upper-tail bound: |Gamma(omega+1, chi)| <= 2 e^-chi chi^(a+1) for
    -1 <= a <= chi, chi >= 1.  Head bound: |gamma(omega+1, chi)| <=
    e^-chi chi^(a+1) for a >= chi > 0.  Ratios are formed in log space.
    """
    rng = np.random.default_rng(seed)
    report = BoundsReport(seed=seed, samples=samples)

    # Deterministic edge probes, including the a = -1 corner.
    edge_a1 = [(-1.0, 0.0, 1.0), (-1.0, 7.3, 2.0), (0.0, -10.0, 1.0), (10.0, 0.0, 10.0)]
    draws_a1 = edge_a1 + [
        (
            -1.0 + (chi + 1.0) * rng.uniform(),
            rng.uniform(-10.0, 10.0),
            chi,
        )
        for chi in 1.0 + 39.0 * rng.uniform(size=samples - len(edge_a1))
    ]
    for a, b, chi in draws_a1:
        a = min(a, chi)
        omega = complex(a, b)
        log_bound = math.log(bound_a1(omega, chi))
        log_actual, _ = gamma_upper_log(omega + 1.0, chi)
        log_ratio = log_bound - log_actual
        ratio = math.exp(log_ratio)
        if ratio < report.min_ratio_a1:
            report.min_ratio_a1 = ratio
            report.worst_case_a1 = (float(a), float(b), float(chi))
        if log_ratio < 0.0:
            report.violations_a1 += 1

    edge_a2 = [(1.0, 0.0, 1.0), (5.0, 0.0, 2.0), (3.0, 4.0, 3.0), (30.0, -10.0, 30.0)]
    draws_a2 = edge_a2 + [
        (
            chi + 30.0 * rng.uniform(),
            rng.uniform(-10.0, 10.0),
            chi,
        )
        for chi in 0.05 + 29.95 * rng.uniform(size=samples - len(edge_a2))
    ]
    for a, b, chi in draws_a2:
        omega = complex(a, b)
        log_bound = math.log(bound_a2(omega, chi))
        log_actual, _ = gamma_lower_log(omega + 1.0, chi)
        log_ratio = log_bound - log_actual
        ratio = math.exp(log_ratio)
        if ratio < report.min_ratio_a2:
            report.min_ratio_a2 = ratio
            report.worst_case_a2 = (float(a), float(b), float(chi))
        if log_ratio < 0.0:
            report.violations_a2 += 1

    # Just outside the proven range the predicate must refuse, not fail.
    try:
        bound_a1(complex(-1.0 - 1e-9, 0.0), 2.0)
    except DomainError:
        report.out_of_range_rejected = True
    return report
