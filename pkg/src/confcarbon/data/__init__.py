"""Bundled offline geographic datasets and their default paths.

The package ships a curated world subset: major international airports,
one capital record per country with a designated international airport,
and a city gazetteer covering common conference and affiliation cities.
They are plain CSV files; pass your own via the CLI flags to extend or
replace them.
"""

from importlib.resources import files
from pathlib import Path


def default_paths() -> tuple[Path, Path, Path]:
    """(airports, capitals, cities) paths of the bundled datasets."""
    root = files(__package__)
    return (
        Path(str(root / "airports.csv")),
        Path(str(root / "capitals.csv")),
        Path(str(root / "cities.csv")),
    )
