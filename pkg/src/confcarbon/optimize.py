"""Venue-selection strategies and emission-savings computation.

Two alternatives to the actual venue are evaluated for every edition:

- BOC ("based on all countries"): every candidate country's capital is
  scored by the summed great-circle distance to all paper affiliation
  locations; the smallest sum wins. This is a discrete 1-median over the
  capital set.
- BPS ("based on paper submissions"): the country contributing the most
  papers wins; its capital hosts.

Either way the conference lands at the winner's capital and emissions are
recomputed airport-to-airport against the capital's designated airport.
Savings are relative to the actual venue: 100 * (actual - alt) / actual,
so a negative value means the alternative emits more.

All totals use exactly rounded summation (math.fsum) over travelers
sorted by paper id, making them bit-identical under any permutation of
the input and under any parallelization of the per-candidate scores.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .emissions import EmissionModel, Trip, segment_emissions, trip_for
from .errors import (
    EmptyCapitals,
    EmptyRecords,
    EmptyTravelers,
    UndefinedSavings,
    UnknownCountry,
)
from .geo import GeoPoint, _haversine_rad, _trig
from .geodata import Airport, CapitalRecord, GeoDataset
from .records import (
    ConferenceEdition,
    EditionMode,
    PaperRecord,
    ResolvedTraveler,
    resolve_travelers,
    resolve_venue_airport,
)

SCENARIO_ACTUAL = "actual"
SCENARIO_BOC = "boc"
SCENARIO_BPS = "bps"


@dataclass(frozen=True)
class VenueScenario:
    """One venue alternative for one edition: where, how much, what saved.

    ``savings_pct`` is None when undefined (actual total is zero while
    this scenario's is not); the annotation says so. The actual scenario
    always has savings 0 by definition.
    """

    label: str  # "actual" | "boc" | "bps"
    country_code: str
    city: str
    airport: Airport
    total_co2_kg: float
    savings_pct: float | None
    annotation: str = ""


def total_emissions(
    model: EmissionModel, travelers: Sequence[ResolvedTraveler], venue_airport: Airport
) -> float:
    """Summed round-trip CO2 (kg) of all travelers flying to one venue.

    Exactly rounded summation over travelers sorted by paper id: the
    result is bit-identical for any input order.
    """
    distance_cache: dict[str, float] = {}
    venue_trig = _trig(venue_airport.location)
    emitted: list[float] = []
    for traveler in sorted(travelers, key=lambda t: t.paper_id):
        origin = traveler.origin_airport
        one_way = distance_cache.get(origin.iata)
        if one_way is None:
            one_way = _haversine_rad(*_trig(origin.location), *venue_trig)
            distance_cache[origin.iata] = one_way
        emitted.append(2.0 * segment_emissions(model, one_way))
    return math.fsum(emitted)


def trips_for_venue(
    model: EmissionModel, travelers: Sequence[ResolvedTraveler], venue_airport: Airport
) -> list[Trip]:
    """Per-traveler round trips to one venue, sorted by paper id."""
    return [
        trip_for(model, traveler, venue_airport)
        for traveler in sorted(travelers, key=lambda t: t.paper_id)
    ]


def _candidate_capitals(
    dataset: GeoDataset, candidates: Iterable[str] | None
) -> list[CapitalRecord]:
    if candidates is None:
        return list(dataset.capitals.values())  # already key-sorted
    allowed = {code.strip().upper() for code in candidates}
    unknown = allowed - set(dataset.capitals)
    if unknown:
        raise UnknownCountry(sorted(unknown)[0], context="candidate allowlist")
    return [cap for code, cap in dataset.capitals.items() if code in allowed]


def _distance_sum(
    capital: CapitalRecord,
    travelers: Sequence[ResolvedTraveler],
    point_cache: dict[tuple[str, GeoPoint], float],
) -> float:
    """Sum of capital-to-affiliation distances, exactly rounded.

    Distances repeat heavily (many papers share a city), so each distinct
    (capital, point) pair is computed once; fsum keeps the total exact, so
    grouping does not change the result.
    """
    cap_trig = _trig(capital.capital_location)
    code = capital.country_code
    distances: list[float] = []
    for traveler in travelers:
        key = (code, traveler.origin_point)
        d = point_cache.get(key)
        if d is None:
            d = _haversine_rad(*cap_trig, *_trig(traveler.origin_point))
            point_cache[key] = d
        distances.append(d)
    return math.fsum(distances)


def optimal_location_boc(
    dataset: GeoDataset,
    travelers: Sequence[ResolvedTraveler],
    *,
    candidates: Iterable[str] | None = None,
) -> tuple[CapitalRecord, Airport]:
    """Capital minimizing the total distance to all affiliation locations.

    Exhaustive scan over every candidate capital; ties break toward the
    lexicographically smallest country code. The objective uses the
    travelers' affiliation coordinates, not their origin airports;
    emissions for the winning venue are computed airport-to-airport
    separately.
    """
    if not travelers:
        raise EmptyTravelers("need at least one traveler to optimize a venue")
    capitals = _candidate_capitals(dataset, candidates)
    if not capitals:
        raise EmptyCapitals("no candidate capitals to choose from")
    point_cache: dict[tuple[str, GeoPoint], float] = {}
    best = min(
        capitals,
        key=lambda cap: (_distance_sum(cap, travelers, point_cache), cap.country_code),
    )
    return best, dataset.airports[best.designated_airport_iata]


def boc_distance_sum(
    dataset: GeoDataset, capital: CapitalRecord, travelers: Sequence[ResolvedTraveler]
) -> float:
    """The BOC objective value for one capital (diagnostics / reporting)."""
    return _distance_sum(capital, travelers, {})


def optimal_location_bps(
    dataset: GeoDataset,
    records: Sequence[PaperRecord],
    travelers: Sequence[ResolvedTraveler],
    *,
    candidates: Iterable[str] | None = None,
) -> tuple[CapitalRecord, Airport]:
    """Capital of the country with the most paper submissions.

    Count ties break first toward the smaller BOC-style distance sum among
    the tied countries' capitals, then toward the smaller country code.
    """
    if not records:
        raise EmptyRecords("need at least one paper record to pick a majority country")
    allowed: set[str] | None = None
    if candidates is not None:
        allowed = {code.strip().upper() for code in candidates}
    counts = Counter(
        record.affiliation_country
        for record in records
        if allowed is None or record.affiliation_country in allowed
    )
    if not counts:
        raise EmptyRecords("no paper records from candidate countries")
    top = max(counts.values())
    tied = sorted(code for code, n in counts.items() if n == top)
    if len(tied) > 1:
        point_cache: dict[tuple[str, GeoPoint], float] = {}

        def tie_key(code: str) -> tuple[float, str]:
            capital = dataset.capitals.get(code)
            if capital is None:
                raise UnknownCountry(code, context="majority-submission winner")
            return _distance_sum(capital, travelers, point_cache), code

        winner = min(tied, key=tie_key)
    else:
        winner = tied[0]
    capital = dataset.capitals.get(winner)
    if capital is None:
        raise UnknownCountry(winner, context="majority-submission winner")
    return capital, dataset.airports[capital.designated_airport_iata]


def submission_counts(records: Sequence[PaperRecord]) -> dict[str, int]:
    """Papers per affiliation country, sorted by country code."""
    counts = Counter(record.affiliation_country for record in records)
    return dict(sorted(counts.items()))


def savings_pct(actual_kg: float, alternative_kg: float) -> float:
    """Signed savings percentage of an alternative against the actual venue.

    Negative values mean the alternative emits more. Undefined (raises)
    when the actual venue emitted nothing but the alternative would.
    """
    if actual_kg < 0 or alternative_kg < 0:
        raise ValueError("emission totals must be non-negative")
    if actual_kg == 0:
        if alternative_kg == 0:
            return 0.0
        raise UndefinedSavings(
            f"actual emissions are zero but alternative emits {alternative_kg} kg"
        )
    return 100.0 * (actual_kg - alternative_kg) / actual_kg


def _scenario(
    label: str,
    country_code: str,
    city: str,
    airport: Airport,
    total_kg: float,
    actual_kg: float,
    mode: EditionMode,
) -> VenueScenario:
    notes: list[str] = []
    pct: float | None
    if label == SCENARIO_ACTUAL:
        pct = 0.0
    else:
        try:
            pct = savings_pct(actual_kg, total_kg)
        except UndefinedSavings:
            pct = None
            notes.append("savings undefined: actual total is zero")
    if mode is EditionMode.VIRTUAL:
        if label == SCENARIO_ACTUAL:
            notes.append("virtual edition: realized savings 100%; totals are counterfactual")
        else:
            notes.append("counterfactual (virtual edition)")
    elif mode is EditionMode.HYBRID:
        low = "undefined" if pct is None else f"{pct:.1f}%"
        notes.append(f"hybrid edition: realized savings in [{low}, 100%]")
    return VenueScenario(
        label=label,
        country_code=country_code,
        city=city,
        airport=airport,
        total_co2_kg=total_kg,
        savings_pct=pct,
        annotation="; ".join(notes),
    )


def evaluate_travelers(
    dataset: GeoDataset,
    model: EmissionModel,
    edition: ConferenceEdition,
    records: Sequence[PaperRecord],
    travelers: Sequence[ResolvedTraveler],
    *,
    include_all_airports: bool = False,
    candidates: Iterable[str] | None = None,
) -> list[VenueScenario]:
    """Score the actual venue and both optimized venues for one edition.

    Returns exactly three scenarios (actual, boc, bps). All three totals
    run through the same summation path, so an optimizer that picks the
    actual venue's airport reports savings of exactly 0.0. For virtual
    editions the totals are counterfactual and the actual scenario is
    annotated with the realized 100% savings; hybrid editions carry a
    [computed, 100%] realized-savings range.
    """
    actual_airport = resolve_venue_airport(
        dataset, edition, include_all_airports=include_all_airports
    )
    actual_kg = total_emissions(model, travelers, actual_airport)

    boc_capital, boc_airport = optimal_location_boc(dataset, travelers, candidates=candidates)
    boc_kg = total_emissions(model, travelers, boc_airport)

    bps_capital, bps_airport = optimal_location_bps(
        dataset, records, travelers, candidates=candidates
    )
    bps_kg = total_emissions(model, travelers, bps_airport)

    return [
        _scenario(SCENARIO_ACTUAL, edition.venue_country, edition.venue_city,
                  actual_airport, actual_kg, actual_kg, edition.mode),
        _scenario(SCENARIO_BOC, boc_capital.country_code, boc_capital.capital_city,
                  boc_airport, boc_kg, actual_kg, edition.mode),
        _scenario(SCENARIO_BPS, bps_capital.country_code, bps_capital.capital_city,
                  bps_airport, bps_kg, actual_kg, edition.mode),
    ]


def evaluate_edition(
    dataset: GeoDataset,
    model: EmissionModel,
    edition: ConferenceEdition,
    records: Sequence[PaperRecord],
    *,
    include_all_airports: bool = False,
    candidates: Iterable[str] | None = None,
) -> list[VenueScenario]:
    """Resolve travelers and score all three venue scenarios."""
    travelers, _ = resolve_travelers(dataset, records, include_all_airports=include_all_airports)
    return evaluate_travelers(
        dataset, model, edition, records, travelers,
        include_all_airports=include_all_airports, candidates=candidates,
    )
