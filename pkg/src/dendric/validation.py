"""Input checks shared by the estimator wrappers and the CLI."""

from __future__ import annotations

from .exceptions import InsufficientHorizon
from .language import FactorLanguage
from .words import Word, WordLike


def check_language(X) -> FactorLanguage:
    if not isinstance(X, FactorLanguage):
        raise TypeError(f"expected a FactorLanguage, got {type(X).__name__}")
    return X


def check_word(X: FactorLanguage, w: WordLike) -> Word:
    """Coerce ``w`` onto the alphabet of ``X`` and check membership."""
    return X.check_word(X.coerce(w))


def check_horizon(X: FactorLanguage, needed: int, what: str) -> FactorLanguage:
    if needed > X.horizon:
        raise InsufficientHorizon(needed, X.horizon, what)
    return X
