"""Distribution families with exact significand CDFs and seeded samplers.

Three families cover every construction the range trichotomy needs:

* ``ScaledBenford(m)``: m * 10**U[0,1).  Benford for every scale m > 0, with
  support [m, 10m]; the canonical generator is m == 1.
* ``BoundedUniform(lo, hi)``: U[lo, hi] with 0 < lo < hi.  Never Benford;
  its significand CDF has a closed per-decade form.
* ``TwoDecadeBenford()``: an absolutely continuous Benford distribution on
  [1, 100) whose density x**-2 (x-1) log10(e) on [1, 10), 10 x**-2 log10(e)
  on [10, 100) is not log-uniform on either decade, yet folds across decades
  to the Benford significand density log10(e) / t.

``exact_significand_cdf`` gives P(S(|X|) <= t) in closed form,
``ks_distance_exact`` its sup-norm distance from the Benford CDF log10(t),
and ``sample`` draws reproducibly from a counter-based generator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .significand import _decade_exact, significand

__all__ = [
    "LOG10E",
    "BoundedUniform",
    "DistributionSpec",
    "ExternalProvenance",
    "GeneratedProvenance",
    "Sample",
    "ScaledBenford",
    "TwoDecadeBenford",
    "benford_cdf",
    "exact_significand_cdf",
    "first_digit_law",
    "fold_to_significand_density",
    "ks_distance_exact",
    "sample",
    "support",
]

LOG10E = math.log10(math.e)

# Identifier of the bit-stable counter-based generator behind sample().
RNG_ALGORITHM = "numpy-philox4x64-10"

_MAX_SEED = 2**64


def benford_cdf(t: float) -> float:
    """Benford significand CDF: P(S(|X|) <= t) == log10(t) on [1, 10]."""
    t = float(t)
    if not 1.0 <= t <= 10.0:
        raise ValueError(f"benford_cdf requires t in [1, 10], got {t}")
    return math.log10(t)


def first_digit_law(d: int) -> float:
    """Probability log10(1 + 1/d) that the first significant digit equals d."""
    if not 1 <= int(d) <= 9 or int(d) != d:
        raise ValueError(f"first digit must be an integer in 1..9, got {d!r}")
    return math.log10(1.0 + 1.0 / int(d))


@dataclass(frozen=True)
class ScaledBenford:
    """m * 10**U[0,1): the Benford generator scaled by m > 0."""

    scale: float = 1.0

    def __post_init__(self):
        m = float(self.scale)
        if not (math.isfinite(m) and m > 0.0):
            raise ValueError(f"scale must be positive and finite, got {self.scale!r}")
        object.__setattr__(self, "scale", m)

    def support(self) -> tuple[float, float]:
        return (self.scale, 10.0 * self.scale)

    def pdf(self, x: float) -> float:
        lo, hi = self.support()
        if lo <= x < hi:
            return 1.0 / (x * math.log(10.0))
        return 0.0


@dataclass(frozen=True)
class BoundedUniform:
    """U[lo, hi] on a positive bounded interval, 0 < lo < hi."""

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi) and 0.0 < lo < hi):
            raise ValueError(f"uniform requires 0 < lo < hi, got [{self.lo!r}, {self.hi!r}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def support(self) -> tuple[float, float]:
        return (self.lo, self.hi)

    def pdf(self, x: float) -> float:
        if self.lo <= x <= self.hi:
            return 1.0 / (self.hi - self.lo)
        return 0.0


@dataclass(frozen=True)
class TwoDecadeBenford:
    """Benford distribution on [1, 100) with a non-log-uniform density."""

    def support(self) -> tuple[float, float]:
        return (1.0, 100.0)

    def pdf(self, x: float) -> float:
        if 1.0 <= x < 10.0:
            return (x - 1.0) / (x * x) * LOG10E
        if 10.0 <= x < 100.0:
            return 10.0 / (x * x) * LOG10E
        return 0.0

    def cdf(self, x: float) -> float:
        # Antiderivatives of the two density branches; continuous at 10.
        if x < 1.0:
            return 0.0
        if x < 10.0:
            return LOG10E * (math.log(x) + 1.0 / x - 1.0)
        if x < 100.0:
            return _TWO_DECADE_F10 + 10.0 * LOG10E * (0.1 - 1.0 / x)
        return 1.0

    def _cdf_array(self, x: np.ndarray) -> np.ndarray:
        first = LOG10E * (np.log(x, where=x > 0, out=np.zeros_like(x)) + 1.0 / x - 1.0)
        second = _TWO_DECADE_F10 + 10.0 * LOG10E * (0.1 - 1.0 / x)
        out = np.where(x < 10.0, first, second)
        out = np.where(x < 1.0, 0.0, out)
        return np.where(x >= 100.0, 1.0, out)


_TWO_DECADE_F10 = 1.0 - 0.9 * LOG10E  # CDF of TwoDecadeBenford at x == 10

DistributionSpec = ScaledBenford | BoundedUniform | TwoDecadeBenford


def support(spec: DistributionSpec) -> tuple[float, float]:
    """Support interval of a distribution spec."""
    return spec.support()


@dataclass(frozen=True)
class GeneratedProvenance:
    """How a generated sample came to be; enough to regenerate it bit-for-bit."""

    spec: DistributionSpec
    seed: int
    n: int
    rng: str = RNG_ALGORITHM


@dataclass(frozen=True)
class ExternalProvenance:
    """Marks samples read from a file or other outside source."""

    source: str


@dataclass(frozen=True, eq=False)
class Sample:
    """Immutable ordered collection of finite reals plus its provenance."""

    values: np.ndarray
    provenance: GeneratedProvenance | ExternalProvenance = field(
        default_factory=lambda: ExternalProvenance("unspecified")
    )

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.ndim != 1:
            raise ValueError("sample values must be one-dimensional")
        if not np.all(np.isfinite(v)):
            raise ValueError("sample values must all be finite")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self) -> int:
        return self.values.shape[0]


def _validate_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed < _MAX_SEED:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return seed


def _two_decade_ppf(u: np.ndarray) -> np.ndarray:
    """Invert the TwoDecadeBenford CDF by bisection on [1, 100].

    The first decade's CDF log(x) + 1/x - 1 has no closed-form inverse, so
    both branches are bisected uniformly until the bracket collapses below
    1e-12 in CDF units.
    """
    dist = TwoDecadeBenford()
    lo = np.full_like(u, 1.0)
    hi = np.full_like(u, 100.0)
    # 60 halvings shrink the bracket to ~8e-17 of its width; the density is
    # bounded by log10(e), so the CDF gap is comfortably below 1e-12.
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        below = dist._cdf_array(mid) <= u
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    return 0.5 * (lo + hi)


def sample(spec: DistributionSpec, n: int, seed: int) -> Sample:
    """Draw ``n`` independent values from ``spec``, reproducibly.

    The same (spec, n, seed) triple always yields bit-identical values: the
    stream comes from the counter-based Philox generator, whose output is
    stable across platforms and library versions.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"sample size must be >= 1, got {n}")
    seed = _validate_seed(seed)
    rng = np.random.Generator(np.random.Philox(seed))
    u = rng.random(n)
    if isinstance(spec, ScaledBenford):
        values = spec.scale * np.power(10.0, u)
    elif isinstance(spec, BoundedUniform):
        values = spec.lo + (spec.hi - spec.lo) * u
    elif isinstance(spec, TwoDecadeBenford):
        values = _two_decade_ppf(u)
    else:
        raise TypeError(f"unknown distribution spec {spec!r}")
    return Sample(values, GeneratedProvenance(spec=spec, seed=seed, n=n))


def _uniform_significand_cdf(lo: float, hi: float, t: float) -> float:
    """P(S(U[lo, hi]) <= t) in closed form, one term per decade."""
    total = 0.0
    for k in range(_decade_exact(lo), _decade_exact(hi) + 1):
        p = 10.0**k
        seg_lo = max(lo, p)
        seg_hi = min(hi, 10.0 * p)
        if seg_hi <= seg_lo:
            continue
        cap = min(seg_hi, p * t)
        if cap > seg_lo:
            total += cap - seg_lo
    return total / (hi - lo)


def exact_significand_cdf(spec: DistributionSpec, t: float) -> float:
    """Exact P(S(|X|) <= t) for X ~ spec, t in [1, 10].

    ScaledBenford is scale-invariant, so every scale gives log10(t); the
    TwoDecadeBenford density folds to the same law.  BoundedUniform sums the
    measure of {x : S(x) <= t} decade by decade.
    """
    t = float(t)
    if not 1.0 <= t <= 10.0:
        raise ValueError(f"significand CDF requires t in [1, 10], got {t}")
    if isinstance(spec, (ScaledBenford, TwoDecadeBenford)):
        return math.log10(t)
    if isinstance(spec, BoundedUniform):
        return _uniform_significand_cdf(spec.lo, spec.hi, t)
    raise TypeError(f"unknown distribution spec {spec!r}")


def fold_to_significand_density(spec: DistributionSpec, t: float) -> float:
    """Density of S(X) at t in [1, 10): sum over decades of 10**k pdf(10**k t).

    For TwoDecadeBenford exactly two terms are nonzero and the sum collapses
    to log10(e) / t; for any single-decade uniform it is the flat
    1 / (hi - lo) stretched by the decade scale.
    """
    t = float(t)
    if not 1.0 <= t < 10.0:
        raise ValueError(f"significand density requires t in [1, 10), got {t}")
    pdf = getattr(spec, "pdf", None)
    if pdf is None:
        raise TypeError(f"spec {spec!r} has no density")
    lo, hi = spec.support()
    total = 0.0
    for k in range(_decade_exact(lo) - 1, _decade_exact(hi) + 2):
        p = 10.0**k
        total += p * pdf(p * t)
    return total


def _uniform_ks_distance(lo: float, hi: float) -> float:
    """sup_t |P(S(U[lo, hi]) <= t) - log10 t|, computed from the geometry.

    The significand CDF is piecewise affine with breakpoints only at S(lo)
    and S(hi); on each affine piece F(t) - log10(t) is convex, so the sup
    over the piece is attained at its endpoints or the single interior
    stationary point t = log10(e) / slope.  A coarse grid is folded in as a
    cross-check against degenerate segments.
    """
    breaks = sorted({1.0, 10.0, significand(lo), significand(hi)})
    candidates = list(breaks)
    for a, b in zip(breaks, breaks[1:]):
        fa = _uniform_significand_cdf(lo, hi, a)
        fb = _uniform_significand_cdf(lo, hi, b)
        slope = (fb - fa) / (b - a)
        if slope > 0.0:
            t_star = LOG10E / slope
            if a < t_star < b:
                candidates.append(t_star)
    grid = np.linspace(1.0, 10.0, 4097)
    candidates.extend(grid.tolist())
    return max(
        abs(_uniform_significand_cdf(lo, hi, t) - math.log10(t)) for t in candidates
    )


def ks_distance_exact(spec: DistributionSpec) -> float:
    """Sup-norm distance between the significand CDF of ``spec`` and log10 t.

    Zero exactly for the Benford families; strictly positive for every
    bounded uniform (uniform distributions are bounded away from the law).
    """
    if isinstance(spec, (ScaledBenford, TwoDecadeBenford)):
        return 0.0
    if isinstance(spec, BoundedUniform):
        return _uniform_ks_distance(spec.lo, spec.hi)
    raise TypeError(f"unknown distribution spec {spec!r}")
