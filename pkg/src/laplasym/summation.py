"""Compensated (error-free transformation) accumulation for complex terms.

Partial sums of optimally truncated expansions are O(1) while the remainders
being resolved against them can be ~1e-9, so plain left-to-right addition
is not good enough to keep the reconstruction error at the 1e-15 level.
"""

from __future__ import annotations

from typing import Iterable


def neumaier_sum(values: Iterable[float]) -> float:
    """Kahan-Babuska-Neumaier compensated sum of real values."""
    total = 0.0
    comp = 0.0
    for v in values:
        t = total + v
        if abs(total) >= abs(v):
            comp += (total - t) + v
        else:
            comp += (v - t) + total
        total = t
    return total + comp


def neumaier_csum(values: Iterable[complex]) -> complex:
    """Compensated sum of complex values (real and imaginary parts separately)."""
    re_total = 0.0
    re_comp = 0.0
    im_total = 0.0
    im_comp = 0.0
    for v in values:
        x = v.real
        t = re_total + x
        if abs(re_total) >= abs(x):
            re_comp += (re_total - t) + x
        else:
            re_comp += (x - t) + re_total
        re_total = t

        y = v.imag
        t = im_total + y
        if abs(im_total) >= abs(y):
            im_comp += (im_total - t) + y
        else:
            im_comp += (y - t) + im_total
        im_total = t
    return complex(re_total + re_comp, im_total + im_comp)
