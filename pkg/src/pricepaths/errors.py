"""Exception types shared across the package.

All subclasses also derive from ValueError so callers that do not care about
the distinction can catch one built-in type.
"""


class PricePathsError(Exception):
    """Base class for package-specific errors."""


class SchemaError(PricePathsError, ValueError):
    """An input document lacks a required column, key, or header."""


class ParseError(PricePathsError, ValueError):
    """A cell could not be read as a valid value; the message names the row."""


class InsufficientDataError(PricePathsError, ValueError):
    """Too few observations to compute the requested quantity."""
