"""Medians of sampled scalar data and of functions restricted to circles.

The median of an even-sized sample is the midpoint of the two central
order statistics; this is the unique value selected by continuity of the
underlying function.  Selection uses introselect (average O(n)), never a
full sort.
"""

from __future__ import annotations

import numpy as np

from .geometry import CircleSpec, sample_circle


def median_samples(values) -> float:
    """Median of a sample set: central order statistic for odd counts,
    midpoint of the two central order statistics for even counts."""
    v = np.asarray(values, float).ravel()
    if v.size == 0:
        raise ValueError("empty sample set")
    if not np.all(np.isfinite(v)):
        raise ValueError("sample set contains non-finite values")
    k = v.size // 2
    if v.size % 2:
        return float(np.partition(v, k)[k])
    part = np.partition(v, [k - 1, k])
    return float(0.5 * (part[k - 1] + part[k]))


def default_sample_count(radius: float, h: float) -> int:
    """Default circle sample count for a grid of spacing h.

    Eight samples per grid cell the circle crosses, at least 64, rounded
    up to an even count so antipodal sample pairs are exact.
    """
    n = max(64, int(np.ceil(8.0 * 2.0 * np.pi * radius / h)))
    return n + (n % 2)


def median_on_circle(f, spec: CircleSpec) -> float:
    """Median of f over the sampled circle.

    f is called with an (n, 2) array of points and must return n values;
    evaluation failures (e.g. a sample outside a masked field) propagate.
    """
    pts = sample_circle(spec)
    vals = np.asarray(f(pts), float)
    return median_samples(vals)


def mean_abs_deviation(values, m: float) -> float:
    """Mean of |v_i - m|: the quantity the median minimizes over m."""
    v = np.asarray(values, float).ravel()
    if v.size == 0:
        raise ValueError("empty sample set")
    return float(np.mean(np.abs(v - m)))
