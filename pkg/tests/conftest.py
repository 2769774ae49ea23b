"""Shared fixture builders: synthetic geodata files and edition documents."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from confcarbon import GeoDataset, load_geodata

AIRPORTS_HEADER = "iata,name,city,country_code,lat,lon,international"
CAPITALS_HEADER = "country_code,capital_city,lat,lon,designated_airport_iata"
CITIES_HEADER = "city,country_code,lat,lon"

# A hand-checkable world: four countries on the equator. Distances are
# analytic there: d(lon1, lon2) = R * radians(|lon1 - lon2|).
EQUATOR_AIRPORTS = [
    "AAA,Alpha International,Alpha,AA,0.0,0.0,true",
    "BBB,Bravo International,Bravo,BB,0.0,9.0,true",
    "CCC,Charlie International,Charlie,CC,0.0,30.0,true",
    "DDD,Delta International,Delta,DD,0.0,50.0,true",
    "DOM,Delta Domestic Field,Delta,DD,0.0,49.5,false",
]
EQUATOR_CAPITALS = [
    "AA,Alpha,0.0,0.0,AAA",
    "BB,Bravo,0.0,9.0,BBB",
    "CC,Charlie,0.0,30.0,CCC",
    "DD,Delta,0.0,50.0,DDD",
]
EQUATOR_CITIES = [
    "Alpha,AA,0.0,0.0",
    "Bravo,BB,0.0,9.0",
    "Charlie,CC,0.0,30.0",
    "Delta,DD,0.0,50.0",
    "Echo,BB,0.0,10.0",
]


def write_geodata(
    directory: Path,
    airports: list[str],
    capitals: list[str],
    cities: list[str],
) -> tuple[Path, Path, Path]:
    directory.mkdir(parents=True, exist_ok=True)
    paths = (
        directory / "airports.csv",
        directory / "capitals.csv",
        directory / "cities.csv",
    )
    paths[0].write_text("\n".join([AIRPORTS_HEADER, *airports]) + "\n", encoding="utf-8")
    paths[1].write_text("\n".join([CAPITALS_HEADER, *capitals]) + "\n", encoding="utf-8")
    paths[2].write_text("\n".join([CITIES_HEADER, *cities]) + "\n", encoding="utf-8")
    return paths


def write_edition(path: Path, *, conference="TESTCONF", year=2019, mode="in_person",
                  venue=None, papers=()) -> Path:
    doc = {
        "conference": conference,
        "year": year,
        "mode": mode,
        "venue": venue or {"city": "Alpha", "country_code": "AA"},
        "papers": list(papers),
    }
    path.write_text(json.dumps(doc, indent=2), encoding="utf-8")
    return path


def paper(paper_id: str, city: str, country: str, override: str | None = None) -> dict:
    doc = {"paper_id": paper_id, "city": city, "country_code": country}
    if override is not None:
        doc["origin_airport_iata"] = override
    return doc


@pytest.fixture
def equator_paths(tmp_path) -> tuple[Path, Path, Path]:
    return write_geodata(
        tmp_path / "geodata", EQUATOR_AIRPORTS, EQUATOR_CAPITALS, EQUATOR_CITIES
    )


@pytest.fixture
def equator_world(equator_paths) -> GeoDataset:
    return load_geodata(*equator_paths)
