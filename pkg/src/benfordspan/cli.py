"""Command-line interface.

Commands: ``analyze`` (conformance report for a file column), ``sample``
(write reproducible draws), ``classify`` (range trichotomy), and
``verify-paper`` (run the built-in verification suite).

The output vocabulary is distances and classifications only; the tool never
labels data as fraudulent or anomalous.  Exit codes are documented per
error class so scripts can tell input problems apart:

    0  success
    1  verification suite reported failures
    2  usage error (bad flags or arguments)
    3  input file missing or unreadable
    4  unknown column or field
    5  no parseable numeric cells
    6  sample has no nonzero values
    7  parameter outside its valid interval / wrong trichotomy case
"""

from __future__ import annotations

import math
import sys

import click
import numpy as np

from . import __version__
from .conformance import conformance_report
from .distributions import (
    BoundedUniform,
    DistributionSpec,
    ScaledBenford,
    TwoDecadeBenford,
    sample as draw_sample,
)
from .errors import (
    EmptySampleError,
    NoNumericDataError,
    ParameterOutOfRangeError,
    RangeCaseError,
    UnknownColumnError,
)
from .ingest import ingest
from .ranges import benford_witness, classify_range, non_benford_witness
from .report import ColumnReport, ReportDocument, classification_to_dict, spec_to_dict
from .significand import RangeSpec

_EXIT_FILE = 3
_EXIT_COLUMN = 4
_EXIT_NO_DATA = 5
_EXIT_EMPTY = 6
_EXIT_PARAMETER = 7

_ERROR_EXITS = (
    (FileNotFoundError, _EXIT_FILE),
    (UnknownColumnError, _EXIT_COLUMN),
    (NoNumericDataError, _EXIT_NO_DATA),
    (EmptySampleError, _EXIT_EMPTY),
    (ParameterOutOfRangeError, _EXIT_PARAMETER),
    (RangeCaseError, _EXIT_PARAMETER),
)


def _fail(exc: Exception) -> None:
    for exc_type, code in _ERROR_EXITS:
        if isinstance(exc, exc_type):
            click.echo(f"error: {exc}", err=True)
            sys.exit(code)
    raise exc


@click.group()
@click.version_option(version=__version__, prog_name="benfordspan")
def cli() -> None:
    """Significand arithmetic, Benford conformance, and range analysis."""


def _classification_for_observed(lo: float, hi: float):
    if not lo < hi:
        return None
    return classify_range(RangeSpec(lo, hi))


def _format_report_text(doc: ReportDocument) -> str:
    lines: list[str] = []
    for col in doc.columns:
        rep = col.report
        lines.append(f"column: {col.name}")
        lines.append(f"  values analyzed   {rep.n}")
        lines.append(f"  zeros excluded    {rep.digit_freqs.excluded}")
        lines.append(f"  cells skipped     {col.skipped}")
        lines.append(f"  ks distance       {rep.ks:.6f}")
        lines.append(f"  chi-square        {rep.chi_square:.6f}")
        lines.append(f"  mad               {rep.mad:.6f}")
        lines.append(f"  span (orders)     {rep.span_orders:.6f}")
        lines.append(
            f"  observed range    [{rep.observed_range[0]!r}, {rep.observed_range[1]!r}]"
        )
        lines.append("  digit  observed  expected")
        for d in range(1, 10):
            expected = math.log10(1 + 1 / d)
            observed = rep.digit_freqs.proportion(d) if rep.digit_freqs.n else 0.0
            lines.append(f"      {d}  {observed:8.5f}  {expected:8.5f}")
        if col.classification is not None:
            lines.extend(_format_classification_text(col.classification))
    return "\n".join(lines) + "\n"


def _format_classification_text(cls) -> list[str]:
    data = classification_to_dict(cls)
    lines = [f"  range class       {data['kind']}"]
    if data["kind"] == "infeasible":
        for gap in data["gap"]:
            lo_b = "(" if gap["lo_open"] else "["
            hi_b = ")" if gap["hi_open"] else "]"
            lines.append(
                f"    missing significands {lo_b}{gap['lo']!r}, {gap['hi']!r}{hi_b}"
            )
    elif data["kind"] == "unique-benford":
        lines.append(f"    witness scale {data['witness']['scale']!r}")
    else:
        b = data["benford_c_interval"]
        u = data["non_benford_c_interval"]
        lines.append(f"    benford family c in (0, {b[1]!r})")
        lines.append(f"    uniform family c in (0, {u[1]!r})")
    return lines


@cli.command()
@click.argument("path", type=click.Path())
@click.option("--column", default="0", show_default=True,
              help="Column name, or 0-based index for CSV.")
@click.option("--format", "fmt", type=click.Choice(["csv", "jsonl"]), default="csv",
              show_default=True)
@click.option("--output", type=click.Choice(["json", "text"]), default="json",
              show_default=True)
def analyze(path: str, column: str, fmt: str, output: str) -> None:
    """Conformance report for one numeric column of a file."""
    try:
        col = ingest(path, column, fmt)
        rep = conformance_report(col.values)
        classification = _classification_for_observed(*rep.observed_range)
    except Exception as exc:  # noqa: BLE001 - mapped to exit codes
        _fail(exc)
    doc = ReportDocument(
        command=["analyze", path, "--column", column, "--format", fmt],
        provenance={"file": path, "column": col.name, "format": fmt},
        columns=(
            ColumnReport(
                name=col.name,
                skipped=col.skipped,
                report=rep,
                classification=classification,
            ),
        ),
    )
    if output == "json":
        click.echo(doc.to_json(), nl=False)
    else:
        click.echo(_format_report_text(doc), nl=False)


def _build_spec(
    family: str,
    scale: float | None,
    lo: float | None,
    hi: float | None,
    a: float | None,
    b: float | None,
    c: float | None,
) -> DistributionSpec:
    if family == "scaled-benford":
        if scale is None:
            raise click.UsageError("scaled-benford needs --scale")
        return ScaledBenford(scale)
    if family == "uniform":
        if lo is None or hi is None:
            raise click.UsageError("uniform needs --lo and --hi")
        return BoundedUniform(lo, hi)
    if family == "two-decade":
        return TwoDecadeBenford()
    if family in ("benford-witness", "non-benford-witness"):
        if a is None or b is None or c is None:
            raise click.UsageError(f"{family} needs --a, --b and --c")
        rng = RangeSpec(a, b)
        if family == "benford-witness":
            return benford_witness(rng, c)
        return non_benford_witness(rng, c)
    raise click.UsageError(f"unknown family {family!r}")


@cli.command("sample")
@click.argument(
    "family",
    type=click.Choice(
        ["scaled-benford", "uniform", "two-decade", "benford-witness", "non-benford-witness"]
    ),
)
@click.option("--n", type=int, required=True, help="Number of draws.")
@click.option("--seed", type=int, required=True, help="64-bit unsigned seed.")
@click.option("--scale", type=float, default=None, help="Scale m for scaled-benford.")
@click.option("--lo", type=float, default=None, help="Lower bound for uniform.")
@click.option("--hi", type=float, default=None, help="Upper bound for uniform.")
@click.option("--a", type=float, default=None, help="Range lower bound for witnesses.")
@click.option("--b", type=float, default=None, help="Range upper bound for witnesses.")
@click.option("--c", type=float, default=None, help="Witness offset inside its interval.")
@click.option("--output", type=click.Path(), default="-", show_default=True,
              help="Output file, or - for stdout.")
def sample_cmd(family, n, seed, scale, lo, hi, a, b, c, output) -> None:
    """Write n reproducible draws, one value per line."""
    try:
        spec = _build_spec(family, scale, lo, hi, a, b, c)
        s = draw_sample(spec, n, seed)
    except click.UsageError:
        raise
    except Exception as exc:  # noqa: BLE001
        _fail(exc)
    meta = " ".join(f"{k}={v!r}" for k, v in sorted(spec_to_dict(spec).items()))
    header = f"# {meta} n={n} seed={seed} rng={s.provenance.rng}"
    body = "\n".join(repr(float(v)) for v in s.values)
    text = header + "\n" + body + "\n"
    if output == "-":
        click.echo(text, nl=False)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


@cli.command()
@click.argument("a", type=float)
@click.argument("b", type=float)
@click.option("--output", type=click.Choice(["json", "text"]), default="json",
              show_default=True)
def classify(a: float, b: float, output: str) -> None:
    """Classify the closed range [A, B] by the distributions it admits."""
    try:
        spec = RangeSpec(a, b)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    cls = classify_range(spec)
    doc = ReportDocument(
        command=["classify", repr(a), repr(b)],
        provenance={"a": a, "b": b},
        classification=cls,
    )
    if output == "json":
        click.echo(doc.to_json(), nl=False)
    else:
        lines = [f"range [{a!r}, {b!r}]"]
        lines.extend(_format_classification_text(cls))
        click.echo("\n".join(lines))


@cli.command("verify-paper")
@click.option("--n", type=int, default=100_000, show_default=True,
              help="Monte Carlo sample size (tolerances scale with 1/sqrt(n)).")
@click.option("--cases", type=int, default=10_000, show_default=True,
              help="Randomized cases per property check.")
def verify_paper(n: int, cases: int) -> None:
    """Run the built-in verification suite and exit 0 only if all checks pass."""
    from .verify import run_verification

    results = run_verification(n=n, cases=cases)
    name_w = max(len(r.name) for r in results)
    exp_w = max(len(r.expected) for r in results)
    obs_w = max(len(r.observed) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        click.echo(
            f"{status}  {r.name:<{name_w}}  expected {r.expected:>{exp_w}}  "
            f"observed {r.observed:>{obs_w}}  [{r.tolerance}]"
        )
    failed = [r for r in results if not r.passed]
    click.echo(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if failed:
        click.echo("failing checks:", err=True)
        for r in failed:
            click.echo(f"  {r.name}", err=True)
        sys.exit(1)


def main() -> None:
    cli(prog_name="benfordspan")


if __name__ == "__main__":
    main()
