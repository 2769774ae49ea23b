"""Spherical geodesy primitives: validated coordinates and haversine distance.

All distances are great-circle kilometers on a sphere of radius
``EARTH_RADIUS_KM``. The radius is a fixed constant so results are
bit-reproducible across runs and machines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

EARTH_RADIUS_KM = 6371.0

# Upper bound of any great-circle distance (antipodal points).
MAX_DISTANCE_KM = math.pi * EARTH_RADIUS_KM


@dataclass(frozen=True)
class GeoPoint:
    """A latitude/longitude position in decimal degrees.

    Latitude must lie in [-90, 90]; out-of-range values are rejected.
    Longitude is normalized into (-180, 180] by modular wrap, so
    GeoPoint(10, 190) == GeoPoint(10, -170). At the poles every longitude
    names the same point, so it is canonicalized to 0.
    """

    lat: float
    lon: float

    def __post_init__(self) -> None:
        lat = float(self.lat)
        lon = float(self.lon)
        if not (math.isfinite(lat) and math.isfinite(lon)):
            raise ValueError(f"coordinates must be finite, got ({self.lat}, {self.lon})")
        if not -90.0 <= lat <= 90.0:
            raise ValueError(f"latitude {lat} outside [-90, 90]")
        lon = lon % 360.0  # [0, 360]; float % can land exactly on 360.0
        if lon > 180.0:
            lon -= 360.0
        if abs(lat) == 90.0:
            lon = 0.0
        object.__setattr__(self, "lat", lat)
        object.__setattr__(self, "lon", lon)


def _trig(point: GeoPoint) -> tuple[float, float, float]:
    """Precompute (lat_rad, cos(lat_rad), lon_rad) for a point."""
    phi = math.radians(point.lat)
    return phi, math.cos(phi), math.radians(point.lon)


def _haversine_rad(
    phi1: float, cos_phi1: float, lam1: float,
    phi2: float, cos_phi2: float, lam2: float,
) -> float:
    """Haversine distance from precomputed radian coordinates.

    Intermediates are symmetric in the two points (abs of the deltas, and
    commutative products/sums only), so swapping arguments gives a
    bit-identical result.
    """
    dphi = abs(phi2 - phi1)
    dlam = abs(lam2 - lam1)
    a = math.sin(dphi / 2.0) ** 2 + cos_phi1 * cos_phi2 * math.sin(dlam / 2.0) ** 2
    # Rounding can push a slightly past 1 for near-antipodal points.
    return 2.0 * EARTH_RADIUS_KM * math.asin(min(1.0, math.sqrt(a)))


def haversine_distance(a: GeoPoint, b: GeoPoint) -> float:
    """Great-circle distance between two points, in kilometers.

    Returns 0.0 exactly when the two points coincide (after longitude
    normalization; at the poles all longitudes coincide) and never exceeds
    ``MAX_DISTANCE_KM``.
    """
    phi1, cos1, lam1 = _trig(a)
    phi2, cos2, lam2 = _trig(b)
    return _haversine_rad(phi1, cos1, lam1, phi2, cos2, lam2)
