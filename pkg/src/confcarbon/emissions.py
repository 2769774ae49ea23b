"""Flight CO2 model: great-circle distance to round-trip emission mass.

The model is a transparent piecewise per-kilometer factor table with a
fixed detour uplift added to every segment (real routes exceed the great
circle). Per segment of one-way distance d > 0::

    d' = d + detour_km
    kg = d' * factor(band of d') * cabin_multiplier

Bands are half-open: with edges [1500, 4000] the factors cover
[0, 1500), [1500, 4000) and [4000, inf), and a distance exactly on an
edge belongs to the higher band. The default factors approximate
published short/medium/long-haul economy-class aviation emission factors;
all parameters can be overridden from a JSON config file.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable

from .errors import ParseError
from .geo import haversine_distance
from .geodata import Airport
from .records import ResolvedTraveler

DEFAULT_DETOUR_KM = 95.0
DEFAULT_BAND_EDGES_KM = (1500.0, 4000.0)
DEFAULT_BAND_FACTORS_KG_PER_KM = (0.251, 0.195, 0.151)
DEFAULT_CABIN_MULTIPLIER = 1.0  # economy class


@dataclass(frozen=True)
class EmissionModel:
    detour_km: float = DEFAULT_DETOUR_KM
    band_edges_km: tuple[float, ...] = DEFAULT_BAND_EDGES_KM
    band_factors_kg_per_km: tuple[float, ...] = DEFAULT_BAND_FACTORS_KG_PER_KM
    cabin_multiplier: float = DEFAULT_CABIN_MULTIPLIER

    def __post_init__(self) -> None:
        edges = tuple(float(e) for e in self.band_edges_km)
        factors = tuple(float(f) for f in self.band_factors_kg_per_km)
        if len(factors) != len(edges) + 1:
            raise ValueError(
                f"need {len(edges) + 1} band factors for {len(edges)} edges, got {len(factors)}"
            )
        if any(e2 <= e1 for e1, e2 in zip(edges, edges[1:])) or (edges and edges[0] <= 0):
            raise ValueError(f"band edges must be positive and strictly ascending: {edges}")
        if any(f <= 0 for f in factors):
            raise ValueError(f"band factors must be positive: {factors}")
        if self.detour_km < 0:
            raise ValueError(f"detour_km must be non-negative: {self.detour_km}")
        if self.cabin_multiplier <= 0:
            raise ValueError(f"cabin_multiplier must be positive: {self.cabin_multiplier}")
        object.__setattr__(self, "detour_km", float(self.detour_km))
        object.__setattr__(self, "band_edges_km", edges)
        object.__setattr__(self, "band_factors_kg_per_km", factors)
        object.__setattr__(self, "cabin_multiplier", float(self.cabin_multiplier))

    @classmethod
    def from_config(cls, path) -> "EmissionModel":
        """Build a model from a JSON config file; absent keys keep defaults."""
        with open(path, encoding="utf-8") as handle:
            try:
                doc = json.load(handle)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc.msg}", path=str(path), line=exc.lineno) from None
        if not isinstance(doc, dict):
            raise ParseError("model config must be a JSON object", path=str(path))
        known = {"detour_km", "band_edges_km", "band_factors_kg_per_km", "cabin_multiplier"}
        unknown = set(doc) - known
        if unknown:
            raise ParseError(f"unknown model keys: {sorted(unknown)}", path=str(path))
        kwargs = {}
        for key in known & set(doc):
            value = doc[key]
            kwargs[key] = tuple(value) if isinstance(value, list) else value
        try:
            return cls(**kwargs)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad model parameters: {exc}", path=str(path)) from None


@dataclass(frozen=True)
class Trip:
    """One traveler's round trip between two airports."""

    paper_id: str
    origin: Airport
    destination: Airport
    one_way_km: float
    round_trip_co2_kg: float


def segment_emissions(model: EmissionModel, one_way_km: float) -> float:
    """One-way CO2 mass (kg) for a single flight segment of given length."""
    if one_way_km < 0:
        raise ValueError(f"segment distance must be non-negative: {one_way_km}")
    if one_way_km == 0:
        return 0.0
    adjusted = one_way_km + model.detour_km
    factor = model.band_factors_kg_per_km[bisect_right(model.band_edges_km, adjusted)]
    return adjusted * factor * model.cabin_multiplier


def multi_segment_emissions(model: EmissionModel, leg_distances_km: Iterable[float]) -> float:
    """One-way CO2 mass for an itinerary of individually flown segments.

    Each leg pays its own detour uplift and band factor. An empty
    itinerary emits nothing.
    """
    return math.fsum(segment_emissions(model, leg) for leg in leg_distances_km)


def trip_for(model: EmissionModel, traveler: ResolvedTraveler, venue_airport: Airport) -> Trip:
    """Round trip between a traveler's origin airport and the venue airport.

    Emissions are exactly twice the one-way segment; a traveler already at
    the venue airport emits nothing.
    """
    origin = traveler.origin_airport
    one_way = haversine_distance(origin.location, venue_airport.location)
    return Trip(
        paper_id=traveler.paper_id,
        origin=origin,
        destination=venue_airport,
        one_way_km=one_way,
        round_trip_co2_kg=2.0 * segment_emissions(model, one_way),
    )


def load_model(path=None) -> EmissionModel:
    """Model from a config path, or the documented defaults when ``path`` is None."""
    if path is None:
        return EmissionModel()
    return EmissionModel.from_config(path)
