"""Exception hierarchy shared by all confcarbon modules."""


class ConfCarbonError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ConfCarbonError):
    """A file could not be parsed (malformed CSV row, bad JSON, ...)."""

    def __init__(self, message: str, *, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = f"{path}:"
            if line is not None:
                prefix += f"{line}:"
            prefix += " "
        super().__init__(prefix + message)


class IntegrityError(ConfCarbonError):
    """Dataset-level invariant violated (duplicate keys, dangling references)."""


class ValidationError(ConfCarbonError):
    """One or more fields of an input document failed validation.

    Collects every issue instead of stopping at the first one, so a whole
    file can be fixed in one pass.
    """

    def __init__(self, issues: list[str], *, path: str | None = None):
        self.issues = list(issues)
        self.path = path
        where = f"{path}: " if path else ""
        super().__init__(where + "; ".join(self.issues))


class UnknownCountry(ConfCarbonError):
    """Country code has no capital record in the loaded dataset."""

    def __init__(self, country_code: str, *, context: str = ""):
        self.country_code = country_code
        detail = f" ({context})" if context else ""
        super().__init__(f"unknown country code {country_code!r}{detail}")


class UnknownAirport(ConfCarbonError):
    """An explicitly named IATA code is absent from the airport dataset."""

    def __init__(self, iata: str, *, context: str = ""):
        self.iata = iata
        detail = f" ({context})" if context else ""
        super().__init__(f"unknown airport {iata!r}{detail}")


class UnknownAirportOverride(UnknownAirport):
    """A paper record's origin-airport override names an unknown airport."""


class EmptyDataset(ConfCarbonError):
    """A query needs at least one airport but none are available."""


class EmptyTravelers(ConfCarbonError):
    """Venue optimization needs at least one traveler."""


class EmptyCapitals(ConfCarbonError):
    """Venue optimization needs at least one candidate capital."""


class EmptyRecords(ConfCarbonError):
    """Majority-country selection needs at least one paper record."""


class UndefinedSavings(ConfCarbonError):
    """Savings percentage undefined: baseline emissions are zero while the
    alternative's are not."""
