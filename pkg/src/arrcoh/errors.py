"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so raising the right class matters:
InputError -> 1, ResourceCapError -> 2.  InternalConsistencyError marks
a situation the mathematics forbids (e.g. a negative beta invariant); it
signals a bug in this package, never bad user input.
"""


class ArrcohError(Exception):
    """Base class for all package errors."""


class InputError(ArrcohError):
    """Malformed or semantically invalid input data."""


class ResourceCapError(ArrcohError):
    """A configured size cap was exceeded."""


class InternalConsistencyError(ArrcohError):
    """An internal invariant failed; indicates a bug, not bad input."""
