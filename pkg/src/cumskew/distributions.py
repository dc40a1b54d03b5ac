"""Seedable random streams, distribution samplers, and outlier injection.

Every sampler is a pure function of an RngStream and its parameters, so a
run is reproduced exactly by reusing the same (base_seed, stream_id) pair.
Parallel work should create one stream per task instead of sharing one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Sample, validate_sample
from .errors import CountTooLarge

__all__ = [
    "RngStream",
    "rng_stream",
    "DistributionSpec",
    "ContaminationSpec",
    "sample_normal",
    "sample_lognormal",
    "sample_cauchy",
    "sample_tukey_g",
    "cauchy_transform",
    "tukey_g_transform",
    "contaminate",
    "draw_sample",
]

_MASK64 = (1 << 64) - 1

DISTRIBUTION_KINDS = ("normal", "lognormal", "cauchy", "tukey_g")
CONTAMINATION_SIDES = ("high", "low")


class RngStream:
    """Deterministic PCG64 stream keyed by (base_seed, stream_id).

    Identical keys reproduce the identical draw sequence on any platform
    running the same numpy version; distinct stream ids from one base seed
    are statistically independent.
    """

    def __init__(self, base_seed: int, stream_id: int = 0):
        self.base_seed = int(base_seed)
        self.stream_id = int(stream_id)
        seq = np.random.SeedSequence(
            [self.base_seed & _MASK64, self.stream_id & _MASK64]
        )
        self._gen = np.random.Generator(np.random.PCG64(seq))

    def __repr__(self) -> str:
        return f"RngStream(base_seed={self.base_seed}, stream_id={self.stream_id})"

    def random(self, size=None):
        """Uniform draws in [0, 1)."""
        return self._gen.random(size)

    def uniform(self, low: float, high: float, size=None):
        return self._gen.uniform(low, high, size)

    def standard_normal(self, size=None):
        return self._gen.standard_normal(size)

    def integers(self, low: int, high: int) -> int:
        """One integer in [low, high)."""
        return int(self._gen.integers(low, high))

    def choose_indices(self, n: int, k: int) -> np.ndarray:
        """k distinct indices drawn uniformly from range(n)."""
        return self._gen.choice(n, size=k, replace=False)


def rng_stream(base_seed: int, stream_id: int = 0) -> RngStream:
    """Create a deterministic random stream."""
    return RngStream(base_seed, stream_id)


@dataclass(frozen=True)
class DistributionSpec:
    """One of the supported sampling distributions plus its parameters.

    mu is the location (normal mean, underlying mean for tukey_g), sigma
    the scale or shape (normal sd, lognormal log-sd, underlying sd for
    tukey_g), and g the tail parameter of the g-distribution.  The Cauchy
    is fixed at standard location/scale.
    """

    kind: str
    mu: float = 0.0
    sigma: float = 1.0
    g: float = 0.0

    def __post_init__(self):
        if self.kind not in DISTRIBUTION_KINDS:
            raise ValueError(f"unknown distribution kind {self.kind!r}")
        if self.kind == "normal" and self.sigma < 0:
            raise ValueError("normal sd must be >= 0")
        if self.kind == "lognormal" and self.sigma <= 0:
            raise ValueError("lognormal shape must be > 0")
        if self.kind == "tukey_g":
            if self.g < 0:
                raise ValueError("g must be >= 0")
            if self.sigma <= 0:
                raise ValueError("underlying sd must be > 0")

    @classmethod
    def normal(cls, mu: float = 0.0, sigma: float = 1.0) -> "DistributionSpec":
        return cls(kind="normal", mu=mu, sigma=sigma)

    @classmethod
    def lognormal(cls, sigma: float) -> "DistributionSpec":
        """Lognormal with log-mean 0 and log-sd sigma."""
        return cls(kind="lognormal", sigma=sigma)

    @classmethod
    def cauchy(cls) -> "DistributionSpec":
        return cls(kind="cauchy")

    @classmethod
    def tukey_g(cls, g: float, mu: float = 0.0, sigma: float = 1.0) -> "DistributionSpec":
        return cls(kind="tukey_g", mu=mu, sigma=sigma, g=g)


@dataclass(frozen=True)
class ContaminationSpec:
    """Replace `count` entries with outliers scaled off the sample maximum.

    Replacements are u * max(sample) with u ~ U(lo, hi) on the high side,
    and the negated value on the low side.
    """

    count: int
    side: str
    magnitude_range: tuple[float, float] = (10.0, 20.0)

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("count must be >= 0")
        if self.side not in CONTAMINATION_SIDES:
            raise ValueError(f"side must be one of {CONTAMINATION_SIDES}")
        lo, hi = self.magnitude_range
        if not lo <= hi:
            raise ValueError("magnitude range must satisfy lo <= hi")
        if lo <= 1.0:
            raise ValueError("magnitude multipliers must exceed 1")


def sample_normal(rng: RngStream, mu: float, sigma: float, n: int) -> Sample:
    """n draws from N(mu, sigma**2); sigma = 0 gives a constant sample."""
    if sigma < 0:
        raise ValueError("sigma must be >= 0")
    return validate_sample(mu + sigma * rng.standard_normal(n))


def sample_lognormal(rng: RngStream, sigma: float, n: int) -> Sample:
    """n draws of exp(Z) with Z ~ N(0, sigma**2)."""
    if sigma <= 0:
        raise ValueError("sigma must be > 0")
    return validate_sample(np.exp(sigma * rng.standard_normal(n)))


def cauchy_transform(u):
    """Map uniforms in [0, 1) to standard Cauchy via tan(pi*(u - 1/2))."""
    return np.tan(np.pi * (np.asarray(u, dtype=float) - 0.5))


def sample_cauchy(rng: RngStream, n: int) -> Sample:
    """n standard Cauchy draws by inverting the CDF of uniforms."""
    return validate_sample(cauchy_transform(rng.random(n)))


def tukey_g_transform(z, g: float):
    """Apply (exp(g*z) - 1) / g elementwise; g = 0 is the identity limit.

    Strictly increasing in z for every g >= 0, so ranks are preserved.
    """
    z = np.asarray(z, dtype=float)
    if g == 0.0:
        return z.copy()
    return np.expm1(g * z) / g


def sample_tukey_g(rng: RngStream, g: float, mu: float, sigma: float, n: int) -> Sample:
    """n draws of the g-distribution built from Z ~ N(mu, sigma**2).

    At g = 0 this returns Z itself and consumes the stream exactly like
    sample_normal, so both samplers agree draw for draw.
    """
    if g < 0:
        raise ValueError("g must be >= 0")
    z = mu + sigma * rng.standard_normal(n)
    return validate_sample(tukey_g_transform(z, g))


def contaminate(sample: Sample, spec: ContaminationSpec, rng: RngStream) -> Sample:
    """Overwrite spec.count randomly chosen entries with outliers.

    The sample size is unchanged; untouched entries keep their values.
    Index draws precede magnitude draws on the supplied stream.

    Raises:
        CountTooLarge: spec.count exceeds half the sample size.
    """
    k = spec.count
    if k == 0:
        return sample
    n = sample.n
    if 2 * k > n:
        raise CountTooLarge(f"cannot replace {k} of {n} values (limit n/2)")
    idx = rng.choose_indices(n, k)
    lo, hi = spec.magnitude_range
    magnitudes = rng.uniform(lo, hi, k) * float(np.max(sample.values))
    values = sample.values.copy()
    values[idx] = magnitudes if spec.side == "high" else -magnitudes
    return validate_sample(values)


def draw_sample(spec: DistributionSpec, rng: RngStream, n: int) -> Sample:
    """Draw n observations from the specified distribution."""
    if spec.kind == "normal":
        return sample_normal(rng, spec.mu, spec.sigma, n)
    if spec.kind == "lognormal":
        return sample_lognormal(rng, spec.sigma, n)
    if spec.kind == "cauchy":
        return sample_cauchy(rng, n)
    if spec.kind == "tukey_g":
        return sample_tukey_g(rng, spec.g, spec.mu, spec.sigma, n)
    raise ValueError(f"unknown distribution kind {spec.kind!r}")
