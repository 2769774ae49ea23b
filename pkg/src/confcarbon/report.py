"""Aggregation and serialization of evaluated editions.

Reports consume optimizer output and never recompute it. Output files are
byte-deterministic: rows are sorted by (year, conference, scenario), no
timestamps are written, and numbers are serialized with full double
precision in CSV (shortest round-trip repr) while human tables round to
two decimals for tonnes and one for percentages.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .optimize import VenueScenario
from .records import EditionMode, ResolutionWarning

RESULTS_HEADER = [
    "conference", "year", "mode", "scenario", "country", "city", "airport",
    "total_tonnes", "savings_pct", "traveler_count", "fallback_count",
]

PLOT_HEADER = ["conference", "year", "scenario", "tonnes"]


@dataclass(frozen=True)
class EditionReport:
    """One edition's evaluated scenarios plus resolution coverage counts."""

    conference: str
    year: int
    mode: EditionMode
    scenarios: tuple[VenueScenario, ...]
    traveler_count: int
    fallback_count: int


@dataclass(frozen=True)
class ConferenceSummary:
    """Actual-location emissions of one conference across its years."""

    conference: str
    per_year_actual_tonnes: dict[int, float]
    mean_actual_tonnes: float


@dataclass(frozen=True)
class ResultRow:
    """One edition-scenario line of the results table."""

    conference: str
    year: int
    mode: str
    scenario: str
    country: str
    city: str
    airport: str
    total_tonnes: float
    savings_pct: float | None
    traveler_count: int
    fallback_count: int
    annotation: str = ""  # shown in the Markdown table, not in results.csv


def kg_to_tonnes(kg: float) -> float:
    return kg / 1000.0


def build_table(reports: Iterable[EditionReport]) -> list[ResultRow]:
    """Flatten edition reports into sorted rows, one per scenario."""
    rows = [
        ResultRow(
            conference=report.conference,
            year=report.year,
            mode=report.mode.value,
            scenario=scenario.label,
            country=scenario.country_code,
            city=scenario.city,
            airport=scenario.airport.iata,
            total_tonnes=kg_to_tonnes(scenario.total_co2_kg),
            savings_pct=scenario.savings_pct,
            traveler_count=report.traveler_count,
            fallback_count=report.fallback_count,
            annotation=scenario.annotation,
        )
        for report in reports
        for scenario in report.scenarios
    ]
    rows.sort(key=lambda r: (r.year, r.conference, r.scenario))
    return rows


def per_year_totals(reports: Iterable[EditionReport]) -> list[ConferenceSummary]:
    """Actual-scenario tonnes per (conference, year), plus per-conference mean.

    Years a conference did not run are simply absent. Virtual and hybrid
    editions contribute their counterfactual totals, keeping the series
    comparable across modes.
    """
    by_conference: dict[str, dict[int, float]] = {}
    for report in reports:
        actual = next(s for s in report.scenarios if s.label == "actual")
        years = by_conference.setdefault(report.conference, {})
        years[report.year] = years.get(report.year, 0.0) + kg_to_tonnes(actual.total_co2_kg)
    summaries = []
    for conference in sorted(by_conference):
        years = dict(sorted(by_conference[conference].items()))
        mean = math.fsum(years.values()) / len(years)
        summaries.append(ConferenceSummary(
            conference=conference,
            per_year_actual_tonnes=years,
            mean_actual_tonnes=mean,
        ))
    return summaries


def _num(value: float | None) -> str:
    """Full-precision, round-trippable text for a float; empty for undefined."""
    return "" if value is None else repr(value)


def emit_csv(rows: Sequence[ResultRow], path) -> None:
    """Write the results table as RFC-4180 CSV (full numeric precision)."""
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(RESULTS_HEADER)
        for row in rows:
            writer.writerow([
                row.conference, row.year, row.mode, row.scenario,
                row.country, row.city, row.airport,
                _num(row.total_tonnes), _num(row.savings_pct),
                row.traveler_count, row.fallback_count,
            ])


def emit_plot_csv(rows: Sequence[ResultRow], path) -> None:
    """Tidy (conference, year, scenario, tonnes) series for external plotting."""
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(PLOT_HEADER)
        for row in rows:
            writer.writerow([row.conference, row.year, row.scenario, _num(row.total_tonnes)])


def _fmt_location(country: str, city: str, airport: str) -> str:
    return f"{country} ({city}, {airport})"


def _fmt_pct(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.1f}%"


def _md_row(cells: Iterable[str]) -> str:
    return "| " + " | ".join(str(c).replace("|", "\\|") for c in cells) + " |"


def emit_markdown(rows: Sequence[ResultRow], path) -> None:
    """Write the human-readable Markdown report.

    The main table is wide (one row per edition, scenario columns side by
    side); a per-conference summary of actual-location tonnes follows.
    """
    by_edition: dict[tuple[int, str], dict[str, ResultRow]] = {}
    for row in rows:
        by_edition.setdefault((row.year, row.conference), {})[row.scenario] = row

    lines = ["# Conference travel emissions", ""]
    header = ["Year", "Conference", "Mode", "Actual location", "Actual tonnes",
              "BOC location", "BOC savings", "BPS location", "BPS savings", "Notes"]
    lines.append(_md_row(header))
    lines.append(_md_row(["---"] * len(header)))
    for (year, conference) in sorted(by_edition):
        scenarios = by_edition[(year, conference)]
        actual = scenarios.get("actual")
        boc = scenarios.get("boc")
        bps = scenarios.get("bps")
        notes = "; ".join(
            s.annotation for s in (actual, boc, bps) if s is not None and s.annotation
        )
        lines.append(_md_row([
            year,
            conference,
            actual.mode if actual else "",
            _fmt_location(actual.country, actual.city, actual.airport) if actual else "",
            f"{actual.total_tonnes:.2f}" if actual else "",
            _fmt_location(boc.country, boc.city, boc.airport) if boc else "",
            _fmt_pct(boc.savings_pct) if boc else "",
            _fmt_location(bps.country, bps.city, bps.airport) if bps else "",
            _fmt_pct(bps.savings_pct) if bps else "",
            notes,
        ]))

    summaries = _summaries_from_rows(rows)
    if summaries:
        lines += ["", "## Actual-location tonnes per conference", ""]
        lines.append(_md_row(["Conference", "Years", "Mean tonnes/edition"]))
        lines.append(_md_row(["---"] * 3))
        for summary in summaries:
            year_text = ", ".join(
                f"{year}: {tonnes:.2f}"
                for year, tonnes in summary.per_year_actual_tonnes.items()
            )
            lines.append(_md_row([
                summary.conference, year_text, f"{summary.mean_actual_tonnes:.2f}",
            ]))

    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")


def _summaries_from_rows(rows: Sequence[ResultRow]) -> list[ConferenceSummary]:
    by_conference: dict[str, dict[int, float]] = {}
    for row in rows:
        if row.scenario != "actual":
            continue
        years = by_conference.setdefault(row.conference, {})
        years[row.year] = years.get(row.year, 0.0) + row.total_tonnes
    out = []
    for conference in sorted(by_conference):
        years = dict(sorted(by_conference[conference].items()))
        out.append(ConferenceSummary(
            conference=conference,
            per_year_actual_tonnes=years,
            mean_actual_tonnes=math.fsum(years.values()) / len(years),
        ))
    return out


def emit_warnings(
    items: Sequence[tuple[EditionReport, Sequence[ResolutionWarning]]], path
) -> None:
    """Write the coverage/warning summary for a run.

    One line per warning plus a per-edition fallback coverage figure,
    sorted like the results table.
    """
    lines: list[str] = []
    total_travelers = 0
    total_fallbacks = 0
    for report, warnings in sorted(items, key=lambda it: (it[0].year, it[0].conference)):
        total_travelers += report.traveler_count
        total_fallbacks += report.fallback_count
        lines.append(
            f"{report.conference} {report.year}: {report.traveler_count} travelers, "
            f"{report.fallback_count} capital fallbacks"
        )
        for warning in warnings:
            lines.append(f"  {warning.paper_id}: {warning.kind}: {warning.detail}")
    share = (100.0 * total_fallbacks / total_travelers) if total_travelers else 0.0
    lines.append(
        f"TOTAL: {total_travelers} travelers, {total_fallbacks} capital fallbacks ({share:.1f}%)"
    )
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")
