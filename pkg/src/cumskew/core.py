"""Cumulative skew and companion statistics built on Lorenz-curve gaps.

The cumulative skew (CS) of a sample is a weighted average of the vertical
gaps between the Lorenz curve and the 45-degree line,

    CS = sum(d_i * w_i) / sum(d_i),        w_i = (2*i - n) * 3 / n,

for gap indices i = 1..n-1.  The rank-linear weights are antisymmetric
around the median gap, so symmetric samples score exactly zero, and the
statistic is bounded by +/-(1 - 2/n) no matter how extreme an outlier is.

Gaps are evaluated on a canonical shift of the data that fixes the mean at
one.  CS is invariant under positive affine maps, so the shift never changes
its value; it only keeps the construction well defined for data whose raw
sum is zero or negative, and well conditioned when the mean dwarfs the
spread.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConstantSample, EmptyOrTooSmall, NonFiniteValue

__all__ = [
    "Sample",
    "LorenzGrid",
    "WeightVector",
    "SkewReport",
    "validate_sample",
    "lorenz_grid",
    "raw_lorenz_grid",
    "weight_vector",
    "cumulative_skew",
    "moment_skewness",
    "gini",
    "skew_report",
]


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _compensated_cumsum(x: np.ndarray) -> np.ndarray:
    """Running sums with the local rounding of each step folded back in.

    The residual of every addition is recovered exactly from consecutive
    plain-cumsum outputs (TwoSum identity) and accumulated as a correction,
    so prefix sums are accurate to one rounding regardless of length.
    """
    t = np.cumsum(x)
    prev = np.empty_like(t)
    prev[0] = 0.0
    prev[1:] = t[:-1]
    err = (prev - (t - x)) + (x - (t - prev))
    return t + np.cumsum(err)


@dataclass(frozen=True, eq=False)
class Sample:
    """Validated 1-D numeric observations, in their original order."""

    values: np.ndarray

    @property
    def n(self) -> int:
        return self.values.size


@dataclass(frozen=True, eq=False)
class LorenzGrid:
    """Cumulative proportions and signed gaps at p_i = i/n, i = 1..n-1.

    Attributes:
        p: cumulative proportion of individuals, exactly i/n.
        q: cumulative proportion of total size.
        d: signed gaps p - q.
        n: sample size (one more than the number of grid points).
        total: sum of the (possibly shifted) values behind q.
        raw_mean: mean of the unshifted sample, kept so that statistics
            on the classical (unshifted) footing can be recovered.
    """

    p: np.ndarray
    q: np.ndarray
    d: np.ndarray
    n: int
    total: float
    raw_mean: float


@dataclass(frozen=True, eq=False)
class WeightVector:
    """Rank-linear gap weights w_i = (2*i - n) * 3 / n, i = 1..n-1."""

    w: np.ndarray
    n: int


@dataclass(frozen=True)
class SkewReport:
    """Skewness summary for one sample."""

    n: int
    cs: float
    b1: float
    gini: float
    degenerate: bool

    @property
    def cs_bound(self) -> float:
        """Largest magnitude CS can attain at this sample size."""
        return 1.0 - 2.0 / self.n


def validate_sample(raw) -> Sample:
    """Check finiteness and size, preserving input order.

    Args:
        raw: sequence of real numbers.

    Returns:
        A Sample wrapping a read-only float64 copy of the data.

    Raises:
        EmptyOrTooSmall: fewer than two values.
        NonFiniteValue: a NaN or infinity is present (first index reported).
    """
    values = np.array(raw, dtype=np.float64)
    if values.ndim != 1:
        raise ValueError(f"expected 1-D data, got shape {values.shape}")
    if values.size < 2:
        raise EmptyOrTooSmall(f"need at least 2 observations, got {values.size}")
    finite = np.isfinite(values)
    if not finite.all():
        idx = int(np.argmin(finite))
        raise NonFiniteValue(idx, float(values[idx]))
    return Sample(values=_readonly(values))


def lorenz_grid(sample: Sample) -> LorenzGrid:
    """Build the gap grid on the canonical mean-one shift of the sample.

    Values are shifted by (1 - mean), sorted ascending, and accumulated;
    q_i is the running sum over the shifted total.  On this footing every
    gap is nonnegative and the gap sequence is concave.  A constant sample
    yields all-zero gaps (the curve coincides with the diagonal).
    """
    x = np.sort(sample.values)
    n = x.size
    raw_mean = math.fsum(x) / n
    p = np.arange(1, n) / n
    if x[0] == x[-1]:
        q = p.copy()
        d = np.zeros(n - 1)
        total = float(n)
    else:
        shifted = x - raw_mean + 1.0
        total = math.fsum(shifted)
        q = _compensated_cumsum(shifted[:-1]) / total
        d = p - q
    return LorenzGrid(
        p=_readonly(p), q=_readonly(q), d=_readonly(d),
        n=n, total=total, raw_mean=raw_mean,
    )


def raw_lorenz_grid(sample: Sample) -> LorenzGrid:
    """Build the classical Lorenz grid on the data as given (no shift).

    This is the textbook curve with q_i = S_i / S_n on sorted values; it
    requires a positive total.  Prefer :func:`lorenz_grid` for computing
    cumulative skew, which is identical on both footings whenever the raw
    total is positive.

    Raises:
        ValueError: the values sum to zero or less.
    """
    x = np.sort(sample.values)
    n = x.size
    total = math.fsum(x)
    if total <= 0.0:
        raise ValueError("classical Lorenz curve needs a positive total")
    p = np.arange(1, n) / n
    q = _compensated_cumsum(x[:-1]) / total
    d = p - q
    return LorenzGrid(
        p=_readonly(p), q=_readonly(q), d=_readonly(d),
        n=n, total=total, raw_mean=total / n,
    )


def weight_vector(n: int) -> WeightVector:
    """Weights (2*i - n) * 3 / n for gap indices i = 1..n-1.

    Antisymmetric (w_i = -w_{n-i}), summing to zero, with the median gap
    carrying weight zero when n is even.  Magnitudes stay below 3.
    """
    if n < 2:
        raise EmptyOrTooSmall(f"need n >= 2, got {n}")
    i = np.arange(1, n)
    w = (2 * i - n) * 3.0 / n
    return WeightVector(w=_readonly(w), n=n)


def _cs_from_grid(grid: LorenzGrid, weights: WeightVector) -> float:
    # index-order compensated sums keep results reproducible across platforms
    den = math.fsum(grid.d)
    if den == 0.0:
        return 0.0
    num = math.fsum(grid.d * weights.w)
    return num / den


def cumulative_skew(sample: Sample) -> float:
    """Gap-weighted skewness in [-(1 - 2/n), 1 - 2/n].

    Zero for symmetric samples, positive for right skew, and defined as 0
    for constant samples (all gaps vanish).
    """
    return _cs_from_grid(lorenz_grid(sample), weight_vector(sample.n))


def moment_skewness(sample: Sample) -> float:
    """Classical third-moment skewness b1 = m3 / m2**1.5.

    Uses population central moments m_k = sum((x - mean)**k) / n.

    Raises:
        ConstantSample: the sample has zero variance.
    """
    x = sample.values
    n = x.size
    if np.min(x) == np.max(x):
        raise ConstantSample("moment skewness undefined for a constant sample")
    mean = math.fsum(x) / n
    dev = x - mean
    m2 = math.fsum(dev * dev) / n
    if m2 == 0.0:
        raise ConstantSample("moment skewness undefined for a constant sample")
    m3 = math.fsum(dev * dev * dev) / n
    return m3 / m2 ** 1.5


def gini(grid: LorenzGrid) -> float:
    """Gini coefficient, twice the gap area under the grid.

    Evaluated on the classical footing of the original data (gaps are
    rescaled by the raw mean, undoing the canonical shift) so that
    positive data yield the standard trapezoid Gini in [0, 1).  When the
    raw mean is not positive the shift-invariant canonical value is
    returned instead, since the classical coefficient is undefined there.
    Unlike CS, Gini depends on the location of the data.
    """
    area = 2.0 * math.fsum(grid.d) / grid.n
    if grid.raw_mean > 0.0:
        return area / grid.raw_mean
    return area


def skew_report(sample: Sample) -> SkewReport:
    """Bundle CS, b1, and Gini for one sample.

    Constant samples are flagged degenerate and score zero everywhere
    rather than raising.
    """
    x = sample.values
    n = x.size
    if np.min(x) == np.max(x):
        return SkewReport(n=n, cs=0.0, b1=0.0, gini=0.0, degenerate=True)
    grid = lorenz_grid(sample)
    try:
        b1 = moment_skewness(sample)
    except ConstantSample:
        # spread below float resolution; numerically constant
        return SkewReport(n=n, cs=0.0, b1=0.0, gini=0.0, degenerate=True)
    cs = _cs_from_grid(grid, weight_vector(n))
    return SkewReport(n=n, cs=cs, b1=b1, gini=gini(grid), degenerate=False)
