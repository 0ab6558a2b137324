"""Decimal significand and significant-digit arithmetic.

The significand of a nonzero real x is the unique t in [1, 10) with
|x| = 10**k * t for an integer k (the decade); S(0) is 0 by convention and
S(-x) == S(x).  Everything downstream (conformance statistics, range
classification) reduces to this map, so it is computed exactly here: a
binary64 value has a finite decimal expansion, and we return the double
nearest its true significand rather than trusting ``10**(log10(x) % 1)``,
which misrounds at decade boundaries (0.001, 1e22, ...).

Also provided: the image of a closed range [a, b] under S, as an explicit
union of subintervals of [1, 10).  That image covers all of [1, 10) exactly
when b >= 10a, i.e. when the range spans at least one order of magnitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal

import numpy as np

__all__ = [
    "Interval",
    "IntervalSet",
    "RangeSpec",
    "digit",
    "log_mantissa",
    "significand",
    "significands",
    "significand_image",
    "span_orders",
]

# 10**k is exactly representable in binary64 for 0 <= k <= 22 (5**22 < 2**53),
# so dividing or multiplying by it is a single correctly-rounded operation.
_MAX_EXACT_POW10 = 22
_POW10 = tuple(float(10**k) for k in range(_MAX_EXACT_POW10 + 1))
_POW10_ARR = np.array(_POW10)

# Largest double below 10; used when the true significand rounds up to 10.0.
_BELOW_TEN = math.nextafter(10.0, 1.0)


def _decade_exact(ax: float) -> int:
    """floor(log10(ax)) for finite ax > 0, exact for every double."""
    # Decimal(float) converts the binary value to its exact decimal expansion;
    # adjusted() is the exponent of the leading digit.
    return Decimal(ax).adjusted()


def _significand_via_decimal(ax: float, k: int) -> float:
    sign, digits, exp = Decimal(ax).as_tuple()
    # Shifting the decimal exponent is exact; float() rounds correctly once.
    return float(Decimal((0, digits, exp - k)))


def significand(x: float) -> float:
    """Return S(x), the decimal significand of x, in [1, 10), or 0.0 for x == 0.

    The result is the double nearest the exact significand of the stored
    binary value of ``x`` (clamped below 10.0 in the half-ulp corner where
    that rounding would leave [1, 10)).  Sign is ignored: S(-x) == S(x).

    Raises ValueError for NaN or infinite input.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"significand is undefined for non-finite input {x!r}")
    if x == 0.0:
        return 0.0
    ax = abs(x)
    k = _decade_exact(ax)
    if 0 < k <= _MAX_EXACT_POW10:
        s = ax / _POW10[k]
    elif -_MAX_EXACT_POW10 <= k < 0:
        s = ax * _POW10[-k]
    elif k == 0:
        s = ax
    else:
        s = _significand_via_decimal(ax, k)
    if s == 10.0:
        s = _BELOW_TEN
    return s


def digit(x: float, position: int) -> int:
    """Return the ``position``-th decimal digit (1-based) of S(x).

    Digits are read from the exact decimal expansion of the binary value, so
    digit(20.19, 4) == 9 but far positions expose the binary representation
    rather than returning 0.  Position 1 is never 0 for nonzero x.  For
    x == 0 every position is defined as 0, mirroring S(0) == 0 (a totality
    choice: dataset scans need digit() to accept every finite value).

    Raises ValueError for position < 1 or non-finite x.
    """
    if position < 1:
        raise ValueError(f"digit position must be >= 1, got {position}")
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"digit is undefined for non-finite input {x!r}")
    if x == 0.0:
        return 0
    digits = Decimal(abs(x)).as_tuple().digits
    return digits[position - 1] if position <= len(digits) else 0


def log_mantissa(x: float) -> float:
    """Return log10(S(|x|)) in [0, 1), the fractional part of log10|x|.

    Exactly 0.0 for every power of ten, and inherits the decade invariance
    of significand().  Raises ValueError for zero or non-finite input.
    """
    s = significand(x)
    if s == 0.0:
        raise ValueError("log_mantissa is undefined at zero")
    return math.log10(s)


def significands(values: np.ndarray) -> np.ndarray:
    """Vectorized significand() over an array of finite values.

    Bit-identical to calling significand() per element; the common decades
    (|k| <= 22) go through one correctly-rounded multiply or divide, the
    rest (subnormals, |x| >= 1e23) fall back to the exact decimal path.
    Zeros map to 0.0.
    """
    v = np.asarray(values, dtype=np.float64)
    if not np.all(np.isfinite(v)):
        raise ValueError("significands requires finite values")
    ax = np.abs(v)
    out = np.zeros_like(ax)
    nz = ax > 0.0
    if not nz.any():
        return out

    a = ax[nz]
    k = np.floor(np.log10(a)).astype(np.int64)
    s = np.empty_like(a)
    # float log10 can misplace the decade by one; correct until s lands in
    # [1, 10).  Two passes always suffice.
    pending = np.ones(a.shape, dtype=bool)
    for _ in range(3):
        if not pending.any():
            break
        idx = np.nonzero(pending)[0]
        ki = k[idx]
        fast = np.abs(ki) <= _MAX_EXACT_POW10
        fi = idx[fast]
        if fi.size:
            kf = k[fi]
            af = a[fi]
            sf = np.empty(fi.size, dtype=np.float64)
            pos = kf >= 0
            sf[pos] = af[pos] / _POW10_ARR[kf[pos]]
            sf[~pos] = af[~pos] * _POW10_ARR[-kf[~pos]]
            s[fi] = sf
            low = sf < 1.0
            high = sf >= 10.0
            k[fi[low]] -= 1
            k[fi[high]] += 1
            pending[fi] = low | high
        si = idx[~fast]
        if si.size:
            for j in si:
                s[j] = significand(a[j])
            pending[si] = False
    # Boundary doubles are ambiguous in the fast path (a quotient can round
    # to exactly 1.0 from below a decade, or to 10.0 from inside one);
    # recompute those few through the scalar exact path.
    boundary = np.nonzero((s == 1.0) | (s >= 10.0))[0]
    for j in boundary:
        s[j] = significand(a[j])
    out[nz] = s
    return out


@dataclass(frozen=True)
class RangeSpec:
    """Closed interval [a, b] with 0 < a < b, both finite."""

    a: float
    b: float

    def __post_init__(self):
        a = float(self.a)
        b = float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ValueError("range bounds must be finite")
        if not 0.0 < a < b:
            raise ValueError(f"range requires 0 < a < b, got [{a}, {b}]")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


@dataclass(frozen=True)
class Interval:
    """Subinterval of [1, 10) with endpoint inclusivity flags."""

    lo: float
    hi: float
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        if not (1.0 <= self.lo <= self.hi <= 10.0):
            raise ValueError(f"interval [{self.lo}, {self.hi}] must sit inside [1, 10]")
        if self.hi == 10.0 and not self.hi_open:
            raise ValueError("10 itself is not a significand; hi=10 must be open")
        if self.lo == self.hi and (self.lo_open or self.hi_open):
            raise ValueError("degenerate interval with an open endpoint is empty")

    def contains(self, t: float) -> bool:
        if t < self.lo or t > self.hi:
            return False
        if t == self.lo and self.lo_open:
            return False
        if t == self.hi and self.hi_open:
            return False
        return True

    @property
    def length(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class IntervalSet:
    """Sorted union of pairwise-disjoint intervals inside [1, 10)."""

    intervals: tuple[Interval, ...]

    def __post_init__(self):
        ivs = tuple(self.intervals)
        object.__setattr__(self, "intervals", ivs)
        for prev, nxt in zip(ivs, ivs[1:]):
            if nxt.lo < prev.hi:
                raise ValueError("intervals must be sorted and disjoint")
            if nxt.lo == prev.hi and not (prev.hi_open or nxt.lo_open):
                raise ValueError("touching intervals share a point; not disjoint")

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def contains(self, t: float) -> bool:
        return any(iv.contains(t) for iv in self.intervals)

    @property
    def total_length(self) -> float:
        return math.fsum(iv.length for iv in self.intervals)

    def covers_universe(self) -> bool:
        """True when the union is all of [1, 10)."""
        return (
            len(self.intervals) == 1
            and self.intervals[0].lo == 1.0
            and not self.intervals[0].lo_open
            and self.intervals[0].hi == 10.0
        )

    def complement(self) -> "IntervalSet":
        """Complement within the half-open universe [1, 10)."""
        gaps: list[Interval] = []
        cursor = 1.0
        cursor_open = False  # the point `cursor` itself is still available
        for iv in self.intervals:
            if iv.lo > cursor or (iv.lo == cursor and iv.lo_open and not cursor_open):
                gaps.append(Interval(cursor, iv.lo, lo_open=cursor_open, hi_open=not iv.lo_open))
            cursor = iv.hi
            cursor_open = not iv.hi_open
        if cursor < 10.0:
            gaps.append(Interval(cursor, 10.0, lo_open=cursor_open, hi_open=True))
        return IntervalSet(tuple(gaps))


def span_orders(rng: RangeSpec) -> float:
    """Orders of magnitude spanned by [a, b]: log10(b / a)."""
    return math.log10(rng.b / rng.a)


def significand_image(rng: RangeSpec) -> IntervalSet:
    """Exact image {S(x) : x in [a, b]} as a union of subintervals of [1, 10).

    The image is all of [1, 10) iff b >= 10a.  For b < 10a the range misses
    some significands: either the single decade gives one closed interval
    [S(a), S(b)], or the range wraps a decade boundary and gives
    [1, S(b)] union [S(a), 10).
    """
    a, b = rng.a, rng.b
    if b >= 10.0 * a:
        return IntervalSet((Interval(1.0, 10.0, hi_open=True),))
    sa = significand(a)
    sb = significand(b)
    if _decade_exact(a) == _decade_exact(b):
        return IntervalSet((Interval(sa, sb),))
    if sb >= sa:
        # Only reachable when rounding collapses an under-ulp gap; the image
        # is all of [1, 10) at double resolution.
        return IntervalSet((Interval(1.0, 10.0, hi_open=True),))
    return IntervalSet((Interval(1.0, sb), Interval(sa, 10.0, hi_open=True)))
