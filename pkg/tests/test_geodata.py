"""Dataset loading, integrity checks, and spatial queries."""

import math
import random

import pytest

from confcarbon import (
    EmptyDataset,
    GeoPoint,
    IntegrityError,
    ParseError,
    ResolutionQuality,
    UnknownCountry,
    capital_airport,
    load_geodata,
    nearest_airport,
    resolve_city,
)
from conftest import (
    EQUATOR_AIRPORTS,
    EQUATOR_CAPITALS,
    EQUATOR_CITIES,
    write_geodata,
)


def oracle_distance_km(lat1, lon1, lat2, lon2):
    """Independent haversine (atan2 form), kept apart from the library code."""
    p1, p2 = math.radians(lat1), math.radians(lat2)
    dp = math.radians(lat2 - lat1)
    dl = math.radians(lon2 - lon1)
    a = math.sin(dp / 2) ** 2 + math.cos(p1) * math.cos(p2) * math.sin(dl / 2) ** 2
    return 6371.0 * 2 * math.atan2(math.sqrt(a), math.sqrt(1 - a))


class TestLoading:
    def test_counts_and_indexing(self, equator_world):
        assert len(equator_world.airports) == 5
        assert len(equator_world.capitals) == 4
        assert len(equator_world.cities) == 5
        assert list(equator_world.airports) == sorted(equator_world.airports)

    def test_row_order_does_not_matter(self, tmp_path):
        forward = load_geodata(*write_geodata(
            tmp_path / "fwd", EQUATOR_AIRPORTS, EQUATOR_CAPITALS, EQUATOR_CITIES
        ))
        backward = load_geodata(*write_geodata(
            tmp_path / "bwd",
            list(reversed(EQUATOR_AIRPORTS)),
            list(reversed(EQUATOR_CAPITALS)),
            list(reversed(EQUATOR_CITIES)),
        ))
        assert forward.airports == backward.airports
        assert forward.capitals == backward.capitals
        assert forward.cities == backward.cities

    def test_duplicate_iata_rejected_with_lines(self, tmp_path):
        rows = EQUATOR_AIRPORTS + ["AAA,Alpha Again,Alpha,AA,1.0,1.0,true"]
        paths = write_geodata(tmp_path / "dup", rows, EQUATOR_CAPITALS, EQUATOR_CITIES)
        with pytest.raises(IntegrityError, match=r"line 2") as exc_info:
            load_geodata(*paths)
        assert ":7:" in str(exc_info.value)  # duplicate sits on line 7

    def test_capital_with_unknown_airport_rejected(self, tmp_path):
        capitals = EQUATOR_CAPITALS + ["ZZ,Zulu,0.0,60.0,ZZZ"]
        paths = write_geodata(tmp_path / "dangling", EQUATOR_AIRPORTS, capitals, EQUATOR_CITIES)
        with pytest.raises(IntegrityError, match="ZZZ"):
            load_geodata(*paths)

    def test_capital_with_non_international_airport_rejected(self, tmp_path):
        capitals = EQUATOR_CAPITALS + ["ZZ,Zulu,0.0,49.5,DOM"]
        paths = write_geodata(tmp_path / "domestic", EQUATOR_AIRPORTS, capitals, EQUATOR_CITIES)
        with pytest.raises(IntegrityError, match="non-international"):
            load_geodata(*paths)

    def test_duplicate_city_rejected(self, tmp_path):
        cities = EQUATOR_CITIES + ["  alpha ,AA,0.5,0.5"]  # same key after folding
        paths = write_geodata(tmp_path / "dupcity", EQUATOR_AIRPORTS, EQUATOR_CAPITALS, cities)
        with pytest.raises(IntegrityError, match="alpha"):
            load_geodata(*paths)

    @pytest.mark.parametrize("bad_row,message", [
        ("aa!,Bad,Alpha,AA,0.0,0.0,true", "IATA"),
        ("XXX,Bad,Alpha,A1,0.0,0.0,true", "country"),
        ("XXX,Bad,Alpha,AA,95.0,0.0,true", "coordinates"),
        ("XXX,Bad,Alpha,AA,0.0,0.0,yes", "international"),
        ("XXX,Bad,Alpha,AA,0.0,0.0", "fields"),
    ])
    def test_malformed_airport_rows(self, tmp_path, bad_row, message):
        paths = write_geodata(
            tmp_path / "bad", EQUATOR_AIRPORTS + [bad_row], EQUATOR_CAPITALS, EQUATOR_CITIES
        )
        with pytest.raises(ParseError, match=message) as exc_info:
            load_geodata(*paths)
        assert exc_info.value.line == 7

    def test_bad_header_rejected(self, tmp_path):
        paths = write_geodata(tmp_path / "hdr", EQUATOR_AIRPORTS, EQUATOR_CAPITALS, EQUATOR_CITIES)
        paths[0].write_text("iata,name\nAAA,Alpha\n", encoding="utf-8")
        with pytest.raises(ParseError, match="header"):
            load_geodata(*paths)


class TestResolveCity:
    def test_exact_match(self, equator_world):
        point, quality = resolve_city(equator_world, "Bravo", "BB")
        assert point == GeoPoint(0.0, 9.0)
        assert quality is ResolutionQuality.EXACT

    def test_case_and_whitespace_folding(self, equator_world):
        point, quality = resolve_city(equator_world, "  bRaVo ", "bb")
        assert point == GeoPoint(0.0, 9.0)
        assert quality is ResolutionQuality.EXACT

    def test_unknown_city_falls_back_to_capital(self, equator_world):
        point, quality = resolve_city(equator_world, "Nonexistentville", "CC")
        assert point == GeoPoint(0.0, 30.0)
        assert quality is ResolutionQuality.CAPITAL_FALLBACK

    def test_unknown_country_raises(self, equator_world):
        with pytest.raises(UnknownCountry):
            resolve_city(equator_world, "Paris", "ZQ")

    def test_result_always_from_known_locations(self, equator_world):
        known = {c.location for c in equator_world.cities.values()}
        known |= {c.capital_location for c in equator_world.capitals.values()}
        rng = random.Random(7)
        names = ["Alpha", "Bravo", "Echo", "Nowhere", "Elsewhere"]
        for _ in range(200):
            city = rng.choice(names)
            country = rng.choice(list(equator_world.capitals))
            point, _ = resolve_city(equator_world, city, country)
            assert point in known


class TestNearestAirport:
    def test_exact_location_wins(self, equator_world):
        assert nearest_airport(equator_world, GeoPoint(0.0, 30.0)).iata == "CCC"

    def test_international_only_by_default(self, equator_world):
        near_dom = GeoPoint(0.0, 49.5)
        assert nearest_airport(equator_world, near_dom).iata == "DDD"
        assert nearest_airport(equator_world, near_dom, include_all=True).iata == "DOM"

    def test_tie_breaks_to_smaller_iata(self, tmp_path):
        airports = [
            "TTB,Tie B,Tie,TT,0.0,10.0,true",
            "TTA,Tie A,Tie,TT,0.0,10.0,true",
        ]
        paths = write_geodata(tmp_path / "tie", airports, [], [])
        dataset = load_geodata(*paths)
        assert nearest_airport(dataset, GeoPoint(3.0, 12.0)).iata == "TTA"

    def test_empty_dataset_raises(self, tmp_path):
        dataset = load_geodata(*write_geodata(tmp_path / "empty", [], [], []))
        with pytest.raises(EmptyDataset):
            nearest_airport(dataset, GeoPoint(0.0, 0.0))

    def test_matches_bruteforce_oracle_on_random_fixtures(self, tmp_path):
        rng = random.Random(20111204)
        for trial in range(5):
            n = rng.randint(1, 200)
            rows = []
            coords = {}
            for i in range(n):
                iata = f"{chr(65 + i // 26 // 26 % 26)}{chr(65 + i // 26 % 26)}{chr(65 + i % 26)}"
                lat, lon = rng.uniform(-89, 89), rng.uniform(-180, 180)
                rows.append(f"{iata},Airport {i},City {i},AA,{lat!r},{lon!r},true")
                coords[iata] = (lat, lon)
            dataset = load_geodata(*write_geodata(tmp_path / f"rand{trial}", rows, [], []))
            for _ in range(200):
                q = GeoPoint(rng.uniform(-90, 90), rng.uniform(-180, 180))
                expected = min(
                    coords,
                    key=lambda code: (oracle_distance_km(q.lat, q.lon, *coords[code]), code),
                )
                assert nearest_airport(dataset, q).iata == expected


class TestCapitalAirport:
    def test_designated_airport_returned(self, equator_world):
        capital, airport = capital_airport(equator_world, "BB")
        assert capital.capital_city == "Bravo"
        assert airport.iata == "BBB"
        assert airport.international

    def test_lowercase_code_accepted(self, equator_world):
        capital, _ = capital_airport(equator_world, "bb")
        assert capital.country_code == "BB"

    def test_unknown_country(self, equator_world):
        with pytest.raises(UnknownCountry):
            capital_airport(equator_world, "ZQ")
