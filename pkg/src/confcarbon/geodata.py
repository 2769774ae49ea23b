"""Offline geographic datasets: airports, country capitals, city gazetteer.

Three CSV files back every query the pipeline makes:

- ``airports.csv``: header ``iata,name,city,country_code,lat,lon,international``
- ``capitals.csv``: header ``country_code,capital_city,lat,lon,designated_airport_iata``
- ``cities.csv``:   header ``city,country_code,lat,lon``

Decimal fields use a period separator; ``international`` is ``true`` or
``false``. A loaded :class:`GeoDataset` is immutable and safe to share
across threads.
"""

from __future__ import annotations

import csv
import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import EmptyDataset, IntegrityError, ParseError, UnknownCountry
from .geo import GeoPoint, _haversine_rad, _trig

_IATA_RE = re.compile(r"^[A-Z]{3}$")
_COUNTRY_RE = re.compile(r"^[A-Z]{2}$")


class ResolutionQuality(enum.Enum):
    """How a city name was turned into coordinates."""

    EXACT = "exact"
    CAPITAL_FALLBACK = "capital_fallback"
    OVERRIDE = "override"


@dataclass(frozen=True)
class Airport:
    iata: str
    name: str
    city: str
    country_code: str
    location: GeoPoint
    international: bool


@dataclass(frozen=True)
class CapitalRecord:
    country_code: str
    capital_city: str
    capital_location: GeoPoint
    designated_airport_iata: str


@dataclass(frozen=True)
class CityRecord:
    city: str  # case-folded, whitespace-trimmed key
    country_code: str
    location: GeoPoint


def city_key(city: str, country_code: str) -> tuple[str, str]:
    return city.strip().casefold(), country_code.strip().upper()


@dataclass(frozen=True)
class GeoDataset:
    """Immutable, indexed view of the three geographic datasets.

    Indexes are sorted by key at construction so the dataset (and anything
    derived from it) is independent of input row order.
    """

    airports: Mapping[str, Airport]
    capitals: Mapping[str, CapitalRecord]
    cities: Mapping[tuple[str, str], CityRecord]
    # (airport, lat_rad, cos_lat, lon_rad) scan lists, precomputed once
    _intl_scan: tuple = field(default=(), repr=False, compare=False)
    _all_scan: tuple = field(default=(), repr=False, compare=False)

    @classmethod
    def from_records(
        cls,
        airports: Iterable[Airport],
        capitals: Iterable[CapitalRecord],
        cities: Iterable[CityRecord],
    ) -> "GeoDataset":
        airport_index: dict[str, Airport] = {}
        for ap in airports:
            if ap.iata in airport_index:
                raise IntegrityError(f"duplicate IATA code {ap.iata!r}")
            airport_index[ap.iata] = ap

        capital_index: dict[str, CapitalRecord] = {}
        for cap in capitals:
            if cap.country_code in capital_index:
                raise IntegrityError(f"duplicate capital for country {cap.country_code!r}")
            designated = airport_index.get(cap.designated_airport_iata)
            if designated is None:
                raise IntegrityError(
                    f"capital of {cap.country_code!r} references unknown airport "
                    f"{cap.designated_airport_iata!r}"
                )
            if not designated.international:
                raise IntegrityError(
                    f"capital of {cap.country_code!r} references non-international "
                    f"airport {cap.designated_airport_iata!r}"
                )
            capital_index[cap.country_code] = cap

        city_index: dict[tuple[str, str], CityRecord] = {}
        for rec in cities:
            key = (rec.city, rec.country_code)
            if key in city_index:
                raise IntegrityError(f"duplicate city entry {rec.city!r}/{rec.country_code!r}")
            city_index[key] = rec

        airport_index = dict(sorted(airport_index.items()))
        capital_index = dict(sorted(capital_index.items()))
        city_index = dict(sorted(city_index.items()))

        all_scan = tuple((ap, *_trig(ap.location)) for ap in airport_index.values())
        intl_scan = tuple(entry for entry in all_scan if entry[0].international)
        return cls(
            airports=airport_index,
            capitals=capital_index,
            cities=city_index,
            _intl_scan=intl_scan,
            _all_scan=all_scan,
        )


def _read_rows(path, expected_header: list[str]) -> Iterable[tuple[int, list[str]]]:
    """Yield (line_number, row) pairs after checking the header line."""
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError("empty file, expected header", path=str(path)) from None
        if header != expected_header:
            raise ParseError(
                f"bad header {header!r}, expected {expected_header!r}",
                path=str(path), line=1,
            )
        for row in reader:
            if not row or (len(row) == 1 and not row[0].strip()):
                continue  # skip blank lines
            if len(row) != len(expected_header):
                raise ParseError(
                    f"expected {len(expected_header)} fields, got {len(row)}",
                    path=str(path), line=reader.line_num,
                )
            yield reader.line_num, row


def _parse_point(lat_text: str, lon_text: str, path, line: int) -> GeoPoint:
    try:
        return GeoPoint(float(lat_text), float(lon_text))
    except ValueError as exc:
        raise ParseError(f"bad coordinates ({lat_text!r}, {lon_text!r}): {exc}",
                         path=str(path), line=line) from None


def _parse_iata(text: str, path, line: int) -> str:
    code = text.strip().upper()
    if not _IATA_RE.match(code):
        raise ParseError(f"bad IATA code {text!r}", path=str(path), line=line)
    return code


def _parse_country(text: str, path, line: int) -> str:
    code = text.strip().upper()
    if not _COUNTRY_RE.match(code):
        raise ParseError(f"bad country code {text!r}", path=str(path), line=line)
    return code


def load_geodata(airports_path, capitals_path, cities_path) -> GeoDataset:
    """Load and validate the three CSV datasets into a :class:`GeoDataset`.

    Duplicate keys and dangling capital->airport references raise
    :class:`IntegrityError` naming the offending line; malformed rows raise
    :class:`ParseError` with the line number. Loading is deterministic:
    the same files produce an identical dataset regardless of row order.
    """
    airports: list[Airport] = []
    seen_iata: dict[str, int] = {}
    for line, row in _read_rows(
        airports_path, ["iata", "name", "city", "country_code", "lat", "lon", "international"]
    ):
        iata = _parse_iata(row[0], airports_path, line)
        if iata in seen_iata:
            raise IntegrityError(
                f"{airports_path}:{line}: duplicate IATA {iata!r} "
                f"(first seen on line {seen_iata[iata]})"
            )
        seen_iata[iata] = line
        flag_text = row[6].strip()
        if flag_text not in ("true", "false"):
            raise ParseError(f"international must be true or false, got {row[6]!r}",
                             path=str(airports_path), line=line)
        airports.append(Airport(
            iata=iata,
            name=row[1].strip(),
            city=row[2].strip(),
            country_code=_parse_country(row[3], airports_path, line),
            location=_parse_point(row[4], row[5], airports_path, line),
            international=flag_text == "true",
        ))

    capitals: list[CapitalRecord] = []
    seen_country: dict[str, int] = {}
    for line, row in _read_rows(
        capitals_path, ["country_code", "capital_city", "lat", "lon", "designated_airport_iata"]
    ):
        country = _parse_country(row[0], capitals_path, line)
        if country in seen_country:
            raise IntegrityError(
                f"{capitals_path}:{line}: duplicate country {country!r} "
                f"(first seen on line {seen_country[country]})"
            )
        seen_country[country] = line
        capitals.append(CapitalRecord(
            country_code=country,
            capital_city=row[1].strip(),
            capital_location=_parse_point(row[2], row[3], capitals_path, line),
            designated_airport_iata=_parse_iata(row[4], capitals_path, line),
        ))

    cities: list[CityRecord] = []
    seen_city: dict[tuple[str, str], int] = {}
    for line, row in _read_rows(cities_path, ["city", "country_code", "lat", "lon"]):
        name = row[0].strip()
        if not name:
            raise ParseError("empty city name", path=str(cities_path), line=line)
        country = _parse_country(row[1], cities_path, line)
        key = city_key(name, country)
        if key in seen_city:
            raise IntegrityError(
                f"{cities_path}:{line}: duplicate city {name!r}/{country!r} "
                f"(first seen on line {seen_city[key]})"
            )
        seen_city[key] = line
        cities.append(CityRecord(
            city=key[0],
            country_code=country,
            location=_parse_point(row[2], row[3], cities_path, line),
        ))

    return GeoDataset.from_records(airports, capitals, cities)


def resolve_city(
    dataset: GeoDataset, city: str, country_code: str
) -> tuple[GeoPoint, ResolutionQuality]:
    """Resolve a city name to coordinates.

    Exact (case-folded) gazetteer hits return the city's coordinates;
    unknown cities in a known country fall back to the capital's
    coordinates, tagged ``CAPITAL_FALLBACK`` so coverage can be reported.
    """
    key = city_key(city, country_code)
    rec = dataset.cities.get(key)
    if rec is not None:
        return rec.location, ResolutionQuality.EXACT
    capital = dataset.capitals.get(key[1])
    if capital is None:
        raise UnknownCountry(key[1], context=f"city {city!r}")
    return capital.capital_location, ResolutionQuality.CAPITAL_FALLBACK


def nearest_airport(
    dataset: GeoDataset, point: GeoPoint, *, include_all: bool = False
) -> Airport:
    """Return the airport closest to ``point`` by great-circle distance.

    Only airports flagged international are considered unless
    ``include_all`` is set. Exact distance ties break toward the
    lexicographically smallest IATA code.
    """
    scan = dataset._all_scan if include_all else dataset._intl_scan
    if not scan:
        raise EmptyDataset("no airports available for nearest-airport search")
    phi, cos_phi, lam = _trig(point)
    best: Airport | None = None
    best_d = float("inf")
    for airport, a_phi, a_cos, a_lam in scan:
        d = _haversine_rad(phi, cos_phi, lam, a_phi, a_cos, a_lam)
        if d < best_d or (d == best_d and best is not None and airport.iata < best.iata):
            best = airport
            best_d = d
    assert best is not None
    return best


def capital_airport(dataset: GeoDataset, country_code: str) -> tuple[CapitalRecord, Airport]:
    """Return a country's capital record and its designated airport."""
    code = country_code.strip().upper()
    capital = dataset.capitals.get(code)
    if capital is None:
        raise UnknownCountry(code)
    return capital, dataset.airports[capital.designated_airport_iata]
