"""Classification of bounded ranges by which Benford distributions they admit.

For a closed range [a, b] with 0 < a < b the trichotomy is decided by b
against 10a:

* b < 10a: no random variable supported inside [a, b] is Benford.  The
  certificate is the nonempty set of significands the range cannot produce,
  which a Benford variable must attain with positive probability.
* b == 10a: exactly one Benford distribution fits, the scaled generator
  a * 10**U[0,1) with support [a, 10a].  (That it is the only one follows
  from the log-uniform-mod-1 characterization of the law; this module
  verifies the witness, not the uniqueness.)
* b > 10a: infinitely many of both kinds fit.  For every c in the open
  interval (0, b/10 - a) the scaled generator (a+c) * 10**U[0,1) is Benford
  with support inside [a, b]; for every c in (0, b - 10a) the uniform
  U[a+c, 10a+c] sits inside [a, b] and is not Benford.

So conformance is a property of how mass is distributed, not of how many
orders of magnitude the range spans: one order always suffices, and no
width of range alone guarantees anything.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distributions import BoundedUniform, ScaledBenford
from .errors import ParameterOutOfRangeError, RangeCaseError
from .significand import IntervalSet, RangeSpec, significand_image

__all__ = [
    "Infeasible",
    "Rich",
    "RangeClassification",
    "UniqueBenford",
    "benford_witness",
    "classify_range",
    "infeasibility_certificate",
    "non_benford_witness",
]


@dataclass(frozen=True)
class Infeasible:
    """b < 10a: no Benford distribution fits; ``gap`` holds the missing significands."""

    gap: IntervalSet


@dataclass(frozen=True)
class UniqueBenford:
    """b == 10a: the one Benford distribution supported in [a, b]."""

    witness: ScaledBenford


@dataclass(frozen=True)
class Rich:
    """b > 10a: open parameter intervals for both witness families."""

    benford_c_interval: tuple[float, float]
    non_benford_c_interval: tuple[float, float]


RangeClassification = Infeasible | UniqueBenford | Rich


def classify_range(rng: RangeSpec) -> RangeClassification:
    """Decide the trichotomy for [a, b] by comparing b with 10a.

    The comparison uses the float product 10*a once; inputs within an ulp of
    the b == 10a boundary classify by that comparison and are inherently
    sensitive to representation.
    """
    ten_a = 10.0 * rng.a
    if rng.b < ten_a:
        return Infeasible(gap=infeasibility_certificate(rng))
    if rng.b == ten_a:
        return UniqueBenford(witness=ScaledBenford(rng.a))
    return Rich(
        benford_c_interval=(0.0, rng.b / 10.0 - rng.a),
        non_benford_c_interval=(0.0, rng.b - ten_a),
    )


def _require_rich(rng: RangeSpec) -> None:
    if rng.b <= 10.0 * rng.a:
        raise RangeCaseError(
            f"range [{rng.a}, {rng.b}] does not satisfy b > 10a; "
            "witness families exist only in that case"
        )


def benford_witness(rng: RangeSpec, c: float) -> ScaledBenford:
    """Benford distribution (a+c) * 10**U[0,1) supported inside [a, b].

    Requires b > 10a and c strictly inside (0, b/10 - a); both endpoints are
    rejected, matching the open parameter interval.
    """
    _require_rich(rng)
    c = float(c)
    c_max = rng.b / 10.0 - rng.a
    if not 0.0 < c < c_max:
        raise ParameterOutOfRangeError(
            f"c must lie in the open interval (0, {c_max}), got {c}",
            valid_interval=(0.0, c_max),
        )
    scale = rng.a + c
    if 10.0 * scale > rng.b:
        # c passed the interval test but rounding pushed the support edge out.
        raise ParameterOutOfRangeError(
            f"c={c} leaves no room: support [{scale}, {10.0 * scale}] exceeds b={rng.b}",
            valid_interval=(0.0, c_max),
        )
    return ScaledBenford(scale)


def non_benford_witness(rng: RangeSpec, c: float) -> BoundedUniform:
    """Uniform U[a+c, 10a+c] supported inside [a, b]; never Benford.

    Requires b > 10a and c strictly inside (0, b - 10a).
    """
    _require_rich(rng)
    c = float(c)
    c_max = rng.b - 10.0 * rng.a
    if not 0.0 < c < c_max:
        raise ParameterOutOfRangeError(
            f"c must lie in the open interval (0, {c_max}), got {c}",
            valid_interval=(0.0, c_max),
        )
    lo = rng.a + c
    hi = 10.0 * rng.a + c
    if hi > rng.b:
        raise ParameterOutOfRangeError(
            f"c={c} leaves no room: support [{lo}, {hi}] exceeds [{rng.a}, {rng.b}]",
            valid_interval=(0.0, c_max),
        )
    return BoundedUniform(lo, hi)


def infeasibility_certificate(rng: RangeSpec) -> IntervalSet:
    """Significands a Benford variable needs but [a, b] cannot produce.

    Defined only for b < 10a; the result is the nonempty complement of the
    significand image within [1, 10).
    """
    if rng.b >= 10.0 * rng.a:
        raise RangeCaseError(
            f"range [{rng.a}, {rng.b}] covers every significand; "
            "infeasibility certificates exist only when b < 10a"
        )
    return significand_image(rng).complement()
