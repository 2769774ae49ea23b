"""Canonical input schema for conference editions and paper records.

One JSON document describes one conference edition::

    {
      "conference": "ICML",
      "year": 2019,
      "mode": "in_person",            // or "virtual" | "hybrid"
      "venue": {"city": "Long Beach", "country_code": "US",
                "airport_iata": "LAX"},          // airport_iata optional
      "papers": [
        {"paper_id": "p1", "city": "Beijing", "country_code": "CN"},
        {"paper_id": "p2", "city": "Zurich", "country_code": "CH",
         "origin_airport_iata": "ZRH"}           // optional override
      ]
    }

Virtual and hybrid editions still carry a venue (the location announced
before the mode changed) so counterfactual emissions stay computable.
Exactly one traveler is modeled per paper, starting from the first
author's affiliation city.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass

from .errors import (
    ParseError,
    UnknownAirport,
    UnknownAirportOverride,
    UnknownCountry,
    ValidationError,
)
from .geodata import (
    Airport,
    GeoDataset,
    ResolutionQuality,
    nearest_airport,
    resolve_city,
)
from .geo import GeoPoint

_IATA_RE = re.compile(r"^[A-Z]{3}$")
_COUNTRY_RE = re.compile(r"^[A-Z]{2}$")

YEAR_MIN = 1950
YEAR_MAX = 2100


class EditionMode(enum.Enum):
    IN_PERSON = "in_person"
    VIRTUAL = "virtual"
    HYBRID = "hybrid"


@dataclass(frozen=True)
class ConferenceEdition:
    conference: str
    year: int
    mode: EditionMode
    venue_city: str
    venue_country: str
    venue_airport_iata: str | None = None


@dataclass(frozen=True)
class PaperRecord:
    paper_id: str
    affiliation_city: str
    affiliation_country: str
    origin_airport_override: str | None = None


@dataclass(frozen=True)
class ResolvedTraveler:
    paper_id: str
    origin_point: GeoPoint
    origin_airport: Airport
    resolution: ResolutionQuality


@dataclass(frozen=True)
class ResolutionWarning:
    paper_id: str
    kind: str  # "capital_fallback" or "override"
    detail: str


def _require(obj: dict, key: str, types, issues: list[str], where: str):
    if key not in obj:
        issues.append(f"{where}.{key}: missing")
        return None
    value = obj[key]
    if not isinstance(value, types) or isinstance(value, bool) and types is int:
        type_name = types.__name__ if isinstance(types, type) else "/".join(t.__name__ for t in types)
        issues.append(f"{where}.{key}: expected {type_name}, got {type(value).__name__}")
        return None
    return value


def parse_edition(path) -> tuple[ConferenceEdition, list[PaperRecord]]:
    """Parse and fully validate an edition JSON file.

    Raises :class:`ParseError` for malformed JSON and
    :class:`ValidationError` listing *every* failed field (not just the
    first), so a dataset can be fixed in one pass.
    """
    with open(path, encoding="utf-8") as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", path=str(path), line=exc.lineno) from None

    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object", path=str(path))

    issues: list[str] = []
    conference = _require(doc, "conference", str, issues, "$")
    if conference is not None and not conference.strip():
        issues.append("$.conference: must be non-empty")

    year = _require(doc, "year", int, issues, "$")
    if year is not None and not YEAR_MIN <= year <= YEAR_MAX:
        issues.append(f"$.year: {year} outside [{YEAR_MIN}, {YEAR_MAX}]")

    mode_text = _require(doc, "mode", str, issues, "$")
    mode: EditionMode | None = None
    if mode_text is not None:
        try:
            mode = EditionMode(mode_text)
        except ValueError:
            issues.append(f"$.mode: {mode_text!r} not one of in_person/virtual/hybrid")

    venue_city = venue_country = None
    venue_airport: str | None = None
    venue = _require(doc, "venue", dict, issues, "$")
    if venue is not None:
        venue_city = _require(venue, "city", str, issues, "$.venue")
        venue_country = _require(venue, "country_code", str, issues, "$.venue")
        if venue_country is not None:
            venue_country = venue_country.strip().upper()
            if not _COUNTRY_RE.match(venue_country):
                issues.append(f"$.venue.country_code: bad country code {venue['country_code']!r}")
        if "airport_iata" in venue and venue["airport_iata"] is not None:
            raw = venue["airport_iata"]
            if not isinstance(raw, str) or not _IATA_RE.match(raw.strip().upper()):
                issues.append(f"$.venue.airport_iata: bad IATA code {raw!r}")
            else:
                venue_airport = raw.strip().upper()

    papers_raw = _require(doc, "papers", list, issues, "$")
    records: list[PaperRecord] = []
    seen_ids: set[str] = set()
    if papers_raw is not None:
        for i, item in enumerate(papers_raw):
            where = f"$.papers[{i}]"
            if not isinstance(item, dict):
                issues.append(f"{where}: expected object")
                continue
            paper_id = _require(item, "paper_id", str, issues, where)
            if paper_id is not None:
                if not paper_id.strip():
                    issues.append(f"{where}.paper_id: must be non-empty")
                elif paper_id in seen_ids:
                    issues.append(f"{where}.paper_id: duplicate paper_id {paper_id!r}")
                else:
                    seen_ids.add(paper_id)
            city = _require(item, "city", str, issues, where)
            country = _require(item, "country_code", str, issues, where)
            if country is not None:
                country = country.strip().upper()
                if not _COUNTRY_RE.match(country):
                    issues.append(f"{where}.country_code: bad country code {item['country_code']!r}")
            override: str | None = None
            if "origin_airport_iata" in item and item["origin_airport_iata"] is not None:
                raw = item["origin_airport_iata"]
                if not isinstance(raw, str) or not _IATA_RE.match(raw.strip().upper()):
                    issues.append(f"{where}.origin_airport_iata: bad IATA code {raw!r}")
                else:
                    override = raw.strip().upper()
            if paper_id is not None and city is not None and country is not None:
                records.append(PaperRecord(
                    paper_id=paper_id,
                    affiliation_city=city,
                    affiliation_country=country,
                    origin_airport_override=override,
                ))

    if issues:
        raise ValidationError(issues, path=str(path))

    assert conference is not None and year is not None and mode is not None
    assert venue_city is not None and venue_country is not None
    edition = ConferenceEdition(
        conference=conference.strip(),
        year=year,
        mode=mode,
        venue_city=venue_city,
        venue_country=venue_country,
        venue_airport_iata=venue_airport,
    )
    return edition, records


def resolve_travelers(
    dataset: GeoDataset,
    records: list[PaperRecord],
    *,
    include_all_airports: bool = False,
) -> tuple[list[ResolvedTraveler], list[ResolutionWarning]]:
    """Turn paper records into travelers with a concrete origin airport.

    Output order matches input order, one traveler per record, nothing
    dropped. An origin-airport override bypasses city resolution entirely
    (the airport's own location stands in for the affiliation point).
    Every capital fallback and override use is reported as a warning.
    Resolution of a given (city, country) pair is memoized within the call.
    """
    travelers: list[ResolvedTraveler] = []
    warnings: list[ResolutionWarning] = []
    city_cache: dict[tuple[str, str], tuple[GeoPoint, ResolutionQuality, Airport]] = {}

    for record in records:
        if record.origin_airport_override is not None:
            airport = dataset.airports.get(record.origin_airport_override)
            if airport is None:
                raise UnknownAirportOverride(
                    record.origin_airport_override,
                    context=f"origin override of paper {record.paper_id!r}",
                )
            travelers.append(ResolvedTraveler(
                paper_id=record.paper_id,
                origin_point=airport.location,
                origin_airport=airport,
                resolution=ResolutionQuality.OVERRIDE,
            ))
            warnings.append(ResolutionWarning(
                paper_id=record.paper_id,
                kind="override",
                detail=f"origin airport forced to {airport.iata}",
            ))
            continue

        key = (record.affiliation_city.strip().casefold(), record.affiliation_country)
        cached = city_cache.get(key)
        if cached is None:
            try:
                point, quality = resolve_city(
                    dataset, record.affiliation_city, record.affiliation_country
                )
            except UnknownCountry as exc:
                raise UnknownCountry(
                    exc.country_code,
                    context=f"paper {record.paper_id!r}, city {record.affiliation_city!r}",
                ) from None
            airport = nearest_airport(dataset, point, include_all=include_all_airports)
            cached = (point, quality, airport)
            city_cache[key] = cached
        point, quality, airport = cached
        travelers.append(ResolvedTraveler(
            paper_id=record.paper_id,
            origin_point=point,
            origin_airport=airport,
            resolution=quality,
        ))
        if quality is ResolutionQuality.CAPITAL_FALLBACK:
            warnings.append(ResolutionWarning(
                paper_id=record.paper_id,
                kind="capital_fallback",
                detail=(
                    f"city {record.affiliation_city!r} not in gazetteer; "
                    f"using capital of {record.affiliation_country}"
                ),
            ))

    return travelers, warnings


def resolve_venue_airport(
    dataset: GeoDataset,
    edition: ConferenceEdition,
    *,
    include_all_airports: bool = False,
) -> Airport:
    """Resolve an edition's venue to an airport.

    An explicit ``venue_airport_iata`` wins (and may name any airport in
    the dataset); otherwise the venue city resolves to coordinates and the
    nearest airport is used.
    """
    if edition.venue_airport_iata is not None:
        airport = dataset.airports.get(edition.venue_airport_iata)
        if airport is None:
            raise UnknownAirport(
                edition.venue_airport_iata,
                context=f"venue of {edition.conference} {edition.year}",
            )
        return airport
    point, _ = resolve_city(dataset, edition.venue_city, edition.venue_country)
    return nearest_airport(dataset, point, include_all=include_all_airports)
