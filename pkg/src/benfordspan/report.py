"""JSON report document: a versioned, losslessly round-tripping record.

Serialization is canonical (sorted keys, fixed separators, shortest
round-trip float text), so serialize -> parse -> serialize is byte-identical
and repeated runs of the same command produce identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .conformance import ConformanceReport, DigitFrequencies
from .distributions import (
    BoundedUniform,
    DistributionSpec,
    ScaledBenford,
    TwoDecadeBenford,
)
from .ranges import Infeasible, RangeClassification, Rich, UniqueBenford
from .significand import Interval, IntervalSet

__all__ = ["SCHEMA_VERSION", "ColumnReport", "ReportDocument"]

SCHEMA_VERSION = "1"


def spec_to_dict(spec: DistributionSpec) -> dict[str, Any]:
    if isinstance(spec, ScaledBenford):
        return {"family": "scaled-benford", "scale": spec.scale}
    if isinstance(spec, BoundedUniform):
        return {"family": "uniform", "lo": spec.lo, "hi": spec.hi}
    if isinstance(spec, TwoDecadeBenford):
        return {"family": "two-decade"}
    raise TypeError(f"unknown distribution spec {spec!r}")


def spec_from_dict(data: dict[str, Any]) -> DistributionSpec:
    family = data["family"]
    if family == "scaled-benford":
        return ScaledBenford(scale=data["scale"])
    if family == "uniform":
        return BoundedUniform(lo=data["lo"], hi=data["hi"])
    if family == "two-decade":
        return TwoDecadeBenford()
    raise ValueError(f"unknown distribution family {family!r}")


def _interval_set_to_list(ivs: IntervalSet) -> list[dict[str, Any]]:
    return [
        {"lo": iv.lo, "hi": iv.hi, "lo_open": iv.lo_open, "hi_open": iv.hi_open}
        for iv in ivs
    ]


def _interval_set_from_list(items: list[dict[str, Any]]) -> IntervalSet:
    return IntervalSet(
        tuple(
            Interval(d["lo"], d["hi"], lo_open=d["lo_open"], hi_open=d["hi_open"])
            for d in items
        )
    )


def classification_to_dict(cls: RangeClassification) -> dict[str, Any]:
    if isinstance(cls, Infeasible):
        return {"kind": "infeasible", "gap": _interval_set_to_list(cls.gap)}
    if isinstance(cls, UniqueBenford):
        return {"kind": "unique-benford", "witness": spec_to_dict(cls.witness)}
    if isinstance(cls, Rich):
        return {
            "kind": "rich",
            "benford_c_interval": list(cls.benford_c_interval),
            "non_benford_c_interval": list(cls.non_benford_c_interval),
        }
    raise TypeError(f"unknown classification {cls!r}")


def classification_from_dict(data: dict[str, Any]) -> RangeClassification:
    kind = data["kind"]
    if kind == "infeasible":
        return Infeasible(gap=_interval_set_from_list(data["gap"]))
    if kind == "unique-benford":
        witness = spec_from_dict(data["witness"])
        assert isinstance(witness, ScaledBenford)
        return UniqueBenford(witness=witness)
    if kind == "rich":
        return Rich(
            benford_c_interval=tuple(data["benford_c_interval"]),
            non_benford_c_interval=tuple(data["non_benford_c_interval"]),
        )
    raise ValueError(f"unknown classification kind {kind!r}")


def _report_to_dict(rep: ConformanceReport) -> dict[str, Any]:
    return {
        "n": rep.n,
        "digit_frequencies": {
            "counts": list(rep.digit_freqs.counts),
            "n": rep.digit_freqs.n,
            "excluded": rep.digit_freqs.excluded,
        },
        "ks": rep.ks,
        "chi_square": rep.chi_square,
        "mad": rep.mad,
        "span_orders": rep.span_orders,
        "observed_range": list(rep.observed_range),
    }


def _report_from_dict(data: dict[str, Any]) -> ConformanceReport:
    freqs = data["digit_frequencies"]
    return ConformanceReport(
        n=data["n"],
        digit_freqs=DigitFrequencies(
            counts=tuple(freqs["counts"]), n=freqs["n"], excluded=freqs["excluded"]
        ),
        ks=data["ks"],
        chi_square=data["chi_square"],
        mad=data["mad"],
        span_orders=data["span_orders"],
        observed_range=tuple(data["observed_range"]),
    )


@dataclass(frozen=True)
class ColumnReport:
    """Per-column analysis: conformance plus the observed-range classification."""

    name: str
    skipped: int
    report: ConformanceReport
    classification: RangeClassification | None = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "skipped": self.skipped,
            "report": _report_to_dict(self.report),
        }
        if self.classification is not None:
            out["classification"] = classification_to_dict(self.classification)
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ColumnReport":
        classification = None
        if "classification" in data:
            classification = classification_from_dict(data["classification"])
        return cls(
            name=data["name"],
            skipped=data["skipped"],
            report=_report_from_dict(data["report"]),
            classification=classification,
        )


@dataclass(frozen=True)
class ReportDocument:
    """Top-level JSON document emitted by the CLI."""

    command: list[str]
    provenance: dict[str, Any]
    columns: tuple[ColumnReport, ...] = ()
    classification: RangeClassification | None = None
    version: str = SCHEMA_VERSION

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "version": self.version,
            "command": list(self.command),
            "provenance": dict(self.provenance),
            "columns": [c.to_dict() for c in self.columns],
        }
        if self.classification is not None:
            out["classification"] = classification_to_dict(self.classification)
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ReportDocument":
        classification = None
        if "classification" in data:
            classification = classification_from_dict(data["classification"])
        return cls(
            command=list(data["command"]),
            provenance=dict(data["provenance"]),
            columns=tuple(ColumnReport.from_dict(c) for c in data["columns"]),
            classification=classification,
            version=data["version"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))
