"""Benford's Law significand arithmetic, conformance testing, and
constructive distributions over bounded ranges.

The library answers three questions exactly:

* What is the significand S(x) of a value, and which significands can a
  bounded range [a, b] produce at all?
* How far is a dataset or a distribution from the Benford significand law
  P(S <= t) = log10 t?
* Which Benford (and non-Benford) distributions fit inside a given range?
  One order of magnitude is exactly the threshold: below it none fit, at it
  exactly one, above it infinitely many of both kinds.
"""

from .conformance import (
    ConformanceReport,
    DigitFrequencies,
    chi_square_statistic,
    conformance_report,
    empirical_significand_cdf,
    first_digit_frequencies,
    ks_statistic,
    mad_statistic,
)
from .distributions import (
    LOG10E,
    BoundedUniform,
    DistributionSpec,
    ExternalProvenance,
    GeneratedProvenance,
    Sample,
    ScaledBenford,
    TwoDecadeBenford,
    benford_cdf,
    exact_significand_cdf,
    first_digit_law,
    fold_to_significand_density,
    ks_distance_exact,
    sample,
    support,
)
from .errors import (
    EmptySampleError,
    NoNumericDataError,
    ParameterOutOfRangeError,
    RangeCaseError,
    UnknownColumnError,
)
from .ingest import DatasetColumn, ingest
from .ranges import (
    Infeasible,
    RangeClassification,
    Rich,
    UniqueBenford,
    benford_witness,
    classify_range,
    infeasibility_certificate,
    non_benford_witness,
)
from .report import SCHEMA_VERSION, ColumnReport, ReportDocument
from .significand import (
    Interval,
    IntervalSet,
    RangeSpec,
    digit,
    log_mantissa,
    significand,
    significand_image,
    significands,
    span_orders,
)

__version__ = "0.1.0"

__all__ = [
    "LOG10E",
    "SCHEMA_VERSION",
    "BoundedUniform",
    "ColumnReport",
    "ConformanceReport",
    "DatasetColumn",
    "DigitFrequencies",
    "DistributionSpec",
    "EmptySampleError",
    "ExternalProvenance",
    "GeneratedProvenance",
    "Infeasible",
    "Interval",
    "IntervalSet",
    "NoNumericDataError",
    "ParameterOutOfRangeError",
    "RangeCaseError",
    "RangeClassification",
    "RangeSpec",
    "ReportDocument",
    "Rich",
    "Sample",
    "ScaledBenford",
    "TwoDecadeBenford",
    "UniqueBenford",
    "UnknownColumnError",
    "benford_cdf",
    "benford_witness",
    "chi_square_statistic",
    "classify_range",
    "conformance_report",
    "digit",
    "empirical_significand_cdf",
    "exact_significand_cdf",
    "first_digit_frequencies",
    "first_digit_law",
    "fold_to_significand_density",
    "infeasibility_certificate",
    "ingest",
    "ks_distance_exact",
    "ks_statistic",
    "log_mantissa",
    "mad_statistic",
    "non_benford_witness",
    "sample",
    "significand",
    "significand_image",
    "significands",
    "span_orders",
    "support",
]
