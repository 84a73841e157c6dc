"""Error taxonomy shared by the library and the command line tool.

Parse and validation problems raise ValueError subclasses; resource caps
raise BudgetExceeded.  The CLI maps these onto exit codes (2 for bad
input, 3 for unsupported types, 4 for tripped caps).
"""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed textual input (element, window, vector, polynomial)."""


class UnsupportedTypeError(ValueError):
    """Type spec outside the supported families or rank range."""


class BudgetExceeded(RuntimeError):
    """A configured search cap was hit before the computation finished."""
