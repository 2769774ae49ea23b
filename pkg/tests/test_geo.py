"""Geodesy unit and property tests."""

import math
import random

import pytest
from hypothesis import given, strategies as st

from confcarbon import EARTH_RADIUS_KM, MAX_DISTANCE_KM, GeoPoint, haversine_distance

# Frozen from a 50-digit evaluation of the haversine formula with R = 6371.0.
JFK = GeoPoint(40.6413, -73.7781)
LHR = GeoPoint(51.4700, -0.4543)
JFK_LHR_KM = 5540.011317976542

lats = st.floats(min_value=-90.0, max_value=90.0, allow_nan=False)
lons = st.floats(min_value=-540.0, max_value=540.0, allow_nan=False)
points = st.builds(GeoPoint, lats, lons)


class TestGeoPoint:
    def test_plain_construction(self):
        p = GeoPoint(10.5, 20.25)
        assert (p.lat, p.lon) == (10.5, 20.25)

    @pytest.mark.parametrize("bad_lat", [-90.0001, 90.0001, 91, -1000, math.nan, math.inf])
    def test_out_of_range_lat_rejected(self, bad_lat):
        with pytest.raises(ValueError):
            GeoPoint(bad_lat, 0.0)

    @pytest.mark.parametrize(
        "raw,expected",
        [(190.0, -170.0), (-190.0, 170.0), (360.0, 0.0), (540.0, 180.0),
         (-180.0, 180.0), (180.0, 180.0), (0.0, 0.0), (725.0, 5.0)],
    )
    def test_lon_wraps_into_half_open_range(self, raw, expected):
        assert GeoPoint(0.0, raw).lon == expected

    @given(lats, lons)
    def test_lon_always_in_range(self, lat, lon):
        p = GeoPoint(lat, lon)
        assert -180.0 < p.lon <= 180.0

    def test_pole_longitudes_collapse(self):
        assert GeoPoint(90.0, 123.4) == GeoPoint(90.0, -77.0)
        assert GeoPoint(-90.0, 5.0) == GeoPoint(-90.0, 0.0)


class TestHaversineExamples:
    def test_identical_points(self):
        p = GeoPoint(12.3, 45.6)
        assert haversine_distance(p, p) == 0.0

    def test_antipodal_equator(self):
        d = haversine_distance(GeoPoint(0.0, 0.0), GeoPoint(0.0, 180.0))
        assert d == pytest.approx(math.pi * EARTH_RADIUS_KM, abs=1e-9)
        assert d == pytest.approx(20015.09, abs=0.01)

    def test_jfk_lhr_matches_frozen_oracle(self):
        assert haversine_distance(JFK, LHR) == pytest.approx(JFK_LHR_KM, abs=1e-6)

    def test_quarter_circumference(self):
        d = haversine_distance(GeoPoint(0.0, 0.0), GeoPoint(90.0, 0.0))
        assert d == pytest.approx(math.pi * EARTH_RADIUS_KM / 2.0, rel=1e-12)

    def test_pole_points_coincide(self):
        assert haversine_distance(GeoPoint(90.0, 10.0), GeoPoint(90.0, -120.0)) == 0.0


class TestHaversineProperties:
    @given(points, points)
    def test_symmetry_exact(self, a, b):
        assert haversine_distance(a, b) == haversine_distance(b, a)

    @given(points, points)
    def test_bounds(self, a, b):
        d = haversine_distance(a, b)
        assert 0.0 <= d <= MAX_DISTANCE_KM

    @given(points, points)
    def test_zero_iff_same_point(self, a, b):
        d = haversine_distance(a, b)
        if a == b:
            assert d == 0.0
        else:
            assert d > 0.0

    @given(points, points, points)
    def test_triangle_inequality(self, a, b, c):
        assert haversine_distance(a, c) <= (
            haversine_distance(a, b) + haversine_distance(b, c) + 1e-6
        )

    @given(lats, st.floats(min_value=-180.0, max_value=180.0, allow_nan=False), points)
    def test_lon_wrap_invariance(self, lat, lon, other):
        base = haversine_distance(GeoPoint(lat, lon), other)
        wrapped = haversine_distance(GeoPoint(lat, lon + 360.0), other)
        assert wrapped == pytest.approx(base, abs=1e-6)

    def test_seeded_random_symmetry_sweep(self):
        rng = random.Random(20210617)
        for _ in range(2000):
            a = GeoPoint(rng.uniform(-90, 90), rng.uniform(-180, 180))
            b = GeoPoint(rng.uniform(-90, 90), rng.uniform(-180, 180))
            assert haversine_distance(a, b) == haversine_distance(b, a)
