"""Offline toolkit for conference air-travel CO2 accounting.

Quantifies the flight emissions implied by a conference's accepted papers
(one economy-class round trip per paper, from the first author's nearest
airport) and the savings available from two alternative venue strategies:
the capital minimizing total distance to all affiliations (BOC) and the
capital of the country with the most submissions (BPS).
"""

from .emissions import EmissionModel, Trip, load_model, multi_segment_emissions, \
    segment_emissions, trip_for
from .errors import (
    ConfCarbonError,
    EmptyCapitals,
    EmptyDataset,
    EmptyRecords,
    EmptyTravelers,
    IntegrityError,
    ParseError,
    UndefinedSavings,
    UnknownAirport,
    UnknownAirportOverride,
    UnknownCountry,
    ValidationError,
)
from .geo import EARTH_RADIUS_KM, MAX_DISTANCE_KM, GeoPoint, haversine_distance
from .geodata import (
    Airport,
    CapitalRecord,
    CityRecord,
    GeoDataset,
    ResolutionQuality,
    capital_airport,
    load_geodata,
    nearest_airport,
    resolve_city,
)
from .optimize import (
    VenueScenario,
    evaluate_edition,
    evaluate_travelers,
    optimal_location_boc,
    optimal_location_bps,
    savings_pct,
    total_emissions,
)
from .records import (
    ConferenceEdition,
    EditionMode,
    PaperRecord,
    ResolutionWarning,
    ResolvedTraveler,
    parse_edition,
    resolve_travelers,
    resolve_venue_airport,
)
from .report import (
    ConferenceSummary,
    EditionReport,
    ResultRow,
    build_table,
    emit_csv,
    emit_markdown,
    emit_plot_csv,
    emit_warnings,
    per_year_totals,
)

__version__ = "0.1.0"

__all__ = [
    "Airport",
    "CapitalRecord",
    "CityRecord",
    "ConfCarbonError",
    "ConferenceEdition",
    "ConferenceSummary",
    "EARTH_RADIUS_KM",
    "EditionMode",
    "EditionReport",
    "EmissionModel",
    "EmptyCapitals",
    "EmptyDataset",
    "EmptyRecords",
    "EmptyTravelers",
    "GeoDataset",
    "GeoPoint",
    "IntegrityError",
    "MAX_DISTANCE_KM",
    "PaperRecord",
    "ParseError",
    "ResolutionQuality",
    "ResolutionWarning",
    "ResolvedTraveler",
    "ResultRow",
    "Trip",
    "UndefinedSavings",
    "UnknownAirport",
    "UnknownAirportOverride",
    "UnknownCountry",
    "ValidationError",
    "VenueScenario",
    "build_table",
    "capital_airport",
    "emit_csv",
    "emit_markdown",
    "emit_plot_csv",
    "emit_warnings",
    "evaluate_edition",
    "evaluate_travelers",
    "haversine_distance",
    "load_geodata",
    "load_model",
    "multi_segment_emissions",
    "nearest_airport",
    "optimal_location_boc",
    "optimal_location_bps",
    "parse_edition",
    "per_year_totals",
    "resolve_city",
    "resolve_travelers",
    "resolve_venue_airport",
    "savings_pct",
    "segment_emissions",
    "total_emissions",
    "trip_for",
]
