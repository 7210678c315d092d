"""Named example shifts used throughout the tests and the CLI ``--example`` flag."""

from __future__ import annotations

from typing import Callable, Dict

from .language import FactorLanguage, Template, language_from_substitution, language_from_templates
from .transforms import alphabetic_image
from .words import Morphism

FIBONACCI = Morphism.from_dict({"a": "ab", "b": "a"})
TRIBONACCI = Morphism.from_dict({"a": "ab", "b": "ac", "c": "a"})
CHACON = Morphism.from_dict({"a": "aabc", "b": "bc", "c": "abc"})
SPECULAR = Morphism.from_dict({"a": "ab", "b": "cda", "c": "cd", "d": "abc"})
TRIBONACCI_ALPHA = Morphism.from_dict({"a": "a", "b": "a", "c": "c"}, target=["a", "c"])

THREE_TAILS = (
    Template.parse("c | | ab"),
    Template.parse("d | | ab"),
    Template.parse("ab | | ab"),
)


def fibonacci(horizon: int) -> FactorLanguage:
    return language_from_substitution(FIBONACCI, horizon)


def tribonacci(horizon: int) -> FactorLanguage:
    return language_from_substitution(TRIBONACCI, horizon)


def chacon(horizon: int) -> FactorLanguage:
    return language_from_substitution(CHACON, horizon)


def specular(horizon: int) -> FactorLanguage:
    return language_from_substitution(SPECULAR, horizon)


def tribonacci_image(horizon: int) -> FactorLanguage:
    """Tribonacci language under a, b -> a and c -> c."""
    return alphabetic_image(tribonacci(horizon), TRIBONACCI_ALPHA)


def three_tails(horizon: int) -> FactorLanguage:
    return language_from_templates(list(THREE_TAILS), horizon)


EXAMPLES: Dict[str, Callable[[int], FactorLanguage]] = {
    "fibonacci": fibonacci,
    "tribonacci": tribonacci,
    "chacon": chacon,
    "specular": specular,
    "tribonacci-image": tribonacci_image,
    "three-tails": three_tails,
}
