"""Command-line front end: load -> parse -> resolve -> evaluate -> report.

Subcommands:

- ``footprint``: evaluate one or more edition files and write results.csv,
  results.md, plot_data.csv and warnings.txt into the output directory.
- ``optimize``: print the BOC and BPS venue selections for one edition.
- ``validate``: parse and validate every input without computing anything.

Exit codes are the machine contract: 0 success, 1 validation failure,
2 I/O failure. Diagnostics go to stderr only; identical inputs produce
byte-identical outputs (no timestamps, no randomness).
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Sequence

from . import __version__
from .data import default_paths
from .emissions import EmissionModel, load_model
from .errors import ConfCarbonError
from .geodata import GeoDataset, load_geodata
from .optimize import boc_distance_sum, evaluate_travelers, optimal_location_boc, \
    optimal_location_bps, submission_counts
from .records import parse_edition, resolve_travelers, resolve_venue_airport
from .report import EditionReport, build_table, emit_csv, emit_markdown, \
    emit_plot_csv, emit_warnings

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="confcarbon",
        description="Offline conference air-travel CO2 footprint and venue-savings toolkit.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        airports, capitals, cities = default_paths()
        p.add_argument("--airports", type=Path, default=airports,
                       help="airports CSV (default: bundled dataset)")
        p.add_argument("--capitals", type=Path, default=capitals,
                       help="capitals CSV (default: bundled dataset)")
        p.add_argument("--cities", type=Path, default=cities,
                       help="city gazetteer CSV (default: bundled dataset)")
        p.add_argument("--model", type=Path, default=None,
                       help="emission model JSON (default: built-in parameters)")
        p.add_argument("--include-all-airports", action="store_true",
                       help="let nearest-airport search consider non-international airports")
        p.add_argument("--candidates", default=None, metavar="CODES",
                       help="comma-separated country allowlist for venue optimization")
        p.add_argument("editions", nargs="+", type=Path, metavar="EDITION",
                       help="edition JSON file(s)")

    fp = sub.add_parser("footprint", help="evaluate editions and write report files")
    add_common(fp)
    fp.add_argument("--out", type=Path, required=True, help="output directory")
    fp.add_argument("--jobs", type=int, default=1,
                    help="editions evaluated in parallel (results are order-independent)")

    opt = sub.add_parser("optimize", help="print venue selections for one edition")
    add_common(opt)

    val = sub.add_parser("validate", help="validate all inputs without computing")
    add_common(val)

    return parser


def _parse_candidates(text: str | None) -> list[str] | None:
    if text is None:
        return None
    codes = [part.strip().upper() for part in text.split(",") if part.strip()]
    if not codes:
        return None
    return codes


def _load_inputs(args) -> tuple[GeoDataset, EmissionModel]:
    dataset = load_geodata(args.airports, args.capitals, args.cities)
    model = load_model(args.model)
    return dataset, model


def _evaluate_one(dataset, model, path, args):
    """(edition, report, warnings) for one edition file."""
    edition, records = parse_edition(path)
    travelers, warnings = resolve_travelers(
        dataset, records, include_all_airports=args.include_all_airports
    )
    scenarios = evaluate_travelers(
        dataset, model, edition, records, travelers,
        include_all_airports=args.include_all_airports,
        candidates=_parse_candidates(args.candidates),
    )
    report = EditionReport(
        conference=edition.conference,
        year=edition.year,
        mode=edition.mode,
        scenarios=tuple(scenarios),
        traveler_count=len(travelers),
        fallback_count=sum(1 for w in warnings if w.kind == "capital_fallback"),
    )
    return edition, report, warnings


def cmd_footprint(args) -> int:
    dataset, model = _load_inputs(args)

    jobs = max(1, args.jobs)
    if jobs == 1:
        evaluated = [_evaluate_one(dataset, model, path, args) for path in args.editions]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            evaluated = list(pool.map(
                lambda path: _evaluate_one(dataset, model, path, args), args.editions
            ))

    items = sorted(
        ((report, warnings) for _, report, warnings in evaluated),
        key=lambda it: (it[0].year, it[0].conference),
    )
    rows = build_table(report for report, _ in items)

    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)
    emit_csv(rows, out / "results.csv")
    emit_markdown(rows, out / "results.md")
    emit_plot_csv(rows, out / "plot_data.csv")
    emit_warnings(items, out / "warnings.txt")
    return EXIT_OK


def cmd_optimize(args) -> int:
    dataset, model = _load_inputs(args)
    candidates = _parse_candidates(args.candidates)
    for path in args.editions:
        edition, records = parse_edition(path)
        travelers, _ = resolve_travelers(
            dataset, records, include_all_airports=args.include_all_airports
        )
        boc_capital, boc_airport = optimal_location_boc(
            dataset, travelers, candidates=candidates
        )
        bps_capital, bps_airport = optimal_location_bps(
            dataset, records, travelers, candidates=candidates
        )
        counts = submission_counts(records)
        print(f"{edition.conference} {edition.year}")
        print(
            f"BOC: {boc_capital.country_code} ({boc_capital.capital_city}, {boc_airport.iata}) "
            f"distance_sum_km={boc_distance_sum(dataset, boc_capital, travelers):.3f}"
        )
        print(
            f"BPS: {bps_capital.country_code} ({bps_capital.capital_city}, {bps_airport.iata}) "
            f"papers={counts[bps_capital.country_code]}/{len(records)}"
        )
    return EXIT_OK


def cmd_validate(args) -> int:
    problems: list[str] = []
    dataset = None
    try:
        dataset = load_geodata(args.airports, args.capitals, args.cities)
        load_model(args.model)
    except ConfCarbonError as exc:
        problems.append(str(exc))

    for path in args.editions:
        try:
            edition, records = parse_edition(path)
            if dataset is not None:
                resolve_venue_airport(
                    dataset, edition, include_all_airports=args.include_all_airports
                )
                resolve_travelers(
                    dataset, records, include_all_airports=args.include_all_airports
                )
        except ConfCarbonError as exc:
            problems.append(str(exc))

    for problem in problems:
        print(problem, file=sys.stderr)
    return EXIT_VALIDATION if problems else EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    commands = {
        "footprint": cmd_footprint,
        "optimize": cmd_optimize,
        "validate": cmd_validate,
    }
    try:
        return commands[args.command](args)
    except ConfCarbonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
