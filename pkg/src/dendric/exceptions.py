"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`DendricError`,
so callers (and the CLI) can separate domain failures from programming bugs.
"""

from __future__ import annotations


class DendricError(Exception):
    """Base class for all library errors."""


class SymbolNotInSource(DendricError, ValueError):
    pass


class NotAnEndomorphism(DendricError, ValueError):
    pass


class ErasingMorphism(DendricError, ValueError):
    pass


class NoStabilization(DendricError, RuntimeError):
    pass


class InsufficientHorizon(DendricError, ValueError):
    """An operation needs factors longer than the language is known for."""

    def __init__(self, required: int, available: int, what: str = ""):
        self.required = required
        self.available = available
        self.what = what
        msg = f"horizon {available} is too small"
        if what:
            msg += f" for {what}"
        msg += f"; need horizon >= {required}"
        super().__init__(msg)


class NotInLanguage(DendricError, ValueError):
    pass


class InvalidLanguage(DendricError, ValueError):
    """A word collection is not factorial or not extendable within its horizon."""


class NotASuffixCode(DendricError, ValueError):
    pass


class NotAPrefixCode(DendricError, ValueError):
    pass


class NotBifix(DendricError, ValueError):
    pass


class NotComplete(DendricError, ValueError):
    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class EmptyWordInCode(DendricError, ValueError):
    pass


class DiameterOfDisconnected(DendricError, ValueError):
    pass


class NotOrderOne(DendricError, ValueError):
    pass


class IncompleteReturns(DendricError, RuntimeError):
    pass


class PartialMap(DendricError, ValueError):
    pass


class NotTemplateLanguage(DendricError, ValueError):
    pass
