"""Factor languages of shift spaces, known exactly up to a horizon.

A :class:`FactorLanguage` stores ``L_n(X)`` for every ``n <= horizon``. Queries
that would need longer factors raise :class:`InsufficientHorizon` instead of
answering from truncated data.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from .exceptions import (
    InsufficientHorizon,
    InvalidLanguage,
    NoStabilization,
    NotAnEndomorphism,
    NotInLanguage,
)
from .words import EMPTY, Alphabet, Morphism, Word, WordLike, apply, as_word, _SEPARATORS

DEFAULT_MAX_ITER = 50


def _factors_upto(w: Word, horizon: int, into: List[Set[Word]]) -> None:
    n = len(w)
    for i in range(n):
        for j in range(i + 1, min(n, i + horizon) + 1):
            into[j - i].add(w[i:j])


@dataclass(frozen=True, eq=False)
class FactorLanguage:
    """Per-length factor sets ``L_0 .. L_horizon`` of a shift space."""

    alphabet: Alphabet
    horizon: int
    factors: Tuple[FrozenSet[Word], ...]
    provenance: Mapping = field(default_factory=lambda: {"kind": "explicit"})

    def __post_init__(self):
        if self.horizon < 1:
            raise ValueError("horizon must be >= 1")
        if len(self.factors) != self.horizon + 1:
            raise ValueError("factors must list L_0 .. L_horizon")
        fs = tuple(frozenset(as_word(w) for w in ws) for ws in self.factors)
        fs = (frozenset([EMPTY]),) + fs[1:]
        for n, ws in enumerate(fs):
            for w in ws:
                if len(w) != n:
                    raise ValueError(f"word {w!r} stored at length {n}")
                if not self.alphabet.covers(w):
                    raise ValueError(f"word {w!r} leaves the alphabet")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def from_words(cls, words: Iterable[WordLike], horizon: int, alphabet: Alphabet,
                   provenance=None) -> "FactorLanguage":
        by_len: List[Set[Word]] = [set() for _ in range(horizon + 1)]
        for w in words:
            w = as_word(w)
            if len(w) <= horizon:
                by_len[len(w)].add(w)
        return cls(alphabet, horizon, tuple(frozenset(s) for s in by_len),
                   dict(provenance or {"kind": "explicit"}))

    # -- queries ---------------------------------------------------------

    def require(self, needed: int, what: str = "") -> None:
        if needed > self.horizon:
            raise InsufficientHorizon(needed, self.horizon, what)

    def __contains__(self, w) -> bool:
        w = as_word(w)
        self.require(len(w), f"membership of a word of length {len(w)}")
        return w in self.factors[len(w)]

    def p(self, n: int) -> int:
        self.require(n, f"p_{n}")
        return len(self.factors[n])

    def words(self, n: int) -> List[Word]:
        """``L_n`` in canonical order."""
        self.require(n, f"L_{n}")
        return self.alphabet.sorted(self.factors[n])

    def all_words(self, max_len: Optional[int] = None) -> List[Word]:
        top = self.horizon if max_len is None else max_len
        self.require(top, f"words up to length {top}")
        out: List[Word] = []
        for n in range(top + 1):
            out.extend(self.words(n))
        return out

    def check_word(self, w: WordLike) -> Word:
        w = self.coerce(w)
        if w not in self:
            raise NotInLanguage(f"{self.format(w)} is not a factor of the language")
        return w

    def coerce(self, w: WordLike) -> Word:
        if isinstance(w, str):
            return self.alphabet.parse(w)
        return as_word(w)

    def format(self, w: Word) -> str:
        return self.alphabet.format(w)

    @cached_property
    def _right_index(self) -> Dict[Word, FrozenSet[str]]:
        idx: Dict[Word, Set[str]] = {}
        for n in range(1, self.horizon + 1):
            for w in self.factors[n]:
                idx.setdefault(w[:-1], set()).add(w[-1])
        return {k: frozenset(v) for k, v in idx.items()}

    @cached_property
    def _left_index(self) -> Dict[Word, FrozenSet[str]]:
        idx: Dict[Word, Set[str]] = {}
        for n in range(1, self.horizon + 1):
            for w in self.factors[n]:
                idx.setdefault(w[1:], set()).add(w[0])
        return {k: frozenset(v) for k, v in idx.items()}

    def right_letters(self, w: Word) -> FrozenSet[str]:
        """Letters ``b`` with ``wb`` a factor."""
        self.require(len(w) + 1, f"right extensions of a length-{len(w)} word")
        return self._right_index.get(w, frozenset())

    def left_letters(self, w: Word) -> FrozenSet[str]:
        self.require(len(w) + 1, f"left extensions of a length-{len(w)} word")
        return self._left_index.get(w, frozenset())

    # -- validation --------------------------------------------------------

    def problems(self) -> List[str]:
        """Violations of factoriality / extendability within the horizon."""
        out = []
        for n in range(2, self.horizon + 1):
            for w in self.factors[n]:
                if w[1:] not in self.factors[n - 1] or w[:-1] not in self.factors[n - 1]:
                    out.append(f"not factorial: {self.format(w)} has a missing factor")
        for n in range(0, self.horizon - 1):
            for w in self.factors[n]:
                if not any((a,) + w + (b,) in self.factors[n + 2] for a in self.left_letters(w)
                           for b in self.alphabet):
                    out.append(f"not extendable: {self.format(w)}")
        return out

    def validate(self) -> "FactorLanguage":
        probs = self.problems()
        if probs:
            raise InvalidLanguage("; ".join(probs[:5]) + (" ..." if len(probs) > 5 else ""))
        return self

    def truncate(self, horizon: int) -> "FactorLanguage":
        """The same language, known only up to a smaller horizon."""
        if not 1 <= horizon <= self.horizon:
            raise ValueError(f"cannot truncate horizon {self.horizon} to {horizon}")
        return FactorLanguage(self.alphabet, horizon, self.factors[:horizon + 1], self.provenance)

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "alphabet": list(self.alphabet.symbols),
            "horizon": self.horizon,
            "factors": {str(n): [self.format(w) for w in self.words(n)]
                        for n in range(1, self.horizon + 1)},
            "provenance": dict(self.provenance),
        }

    def to_json(self, indent: Optional[int] = 1) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: Mapping) -> "FactorLanguage":
        alphabet = Alphabet.of(data["alphabet"])
        horizon = int(data["horizon"])
        words = []
        for n, ws in data["factors"].items():
            for text in ws:
                w = alphabet.parse(text) if text else EMPTY
                if len(w) != int(n):
                    raise InvalidLanguage(f"word {text!r} listed under length {n}")
                words.append(w)
        lang = cls.from_words(words, horizon, alphabet, data.get("provenance"))
        return lang.validate()

    @classmethod
    def from_json(cls, text: str) -> "FactorLanguage":
        return cls.from_dict(json.loads(text))


# -- constructors --------------------------------------------------------------


def _max_iter(cap: Optional[int]) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("DENDRIC_MAX_ITER")
    return int(env) if env else DEFAULT_MAX_ITER


def language_from_substitution(m: Morphism, horizon: int, max_iter: Optional[int] = None) -> FactorLanguage:
    """Factors of length <= horizon of all iterates ``m^n(a)``, ``a`` a letter.

    Iteration stops once the accumulated factor set is unchanged by one more
    iteration and every iterate is longer than ``2 * horizon``. The cap on the
    number of iterations defaults to 50, or ``$DENDRIC_MAX_ITER``.
    """
    if not m.is_endomorphism:
        raise NotAnEndomorphism("a substitution must map its alphabet to itself")
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    cap = _max_iter(max_iter)
    current = {a: (a,) for a in m.source}
    acc: List[Set[Word]] = [set() for _ in range(horizon + 1)]
    acc[0].add(EMPTY)
    prev = -1
    for it in range(cap + 1):
        for w in current.values():
            _factors_upto(w, horizon, acc)
        size = sum(map(len, acc))
        if size == prev and min(map(len, current.values())) > 2 * horizon:
            provenance = {"kind": "substitution", "morphism": m.to_text(), "iterations": it}
            return FactorLanguage(m.source, horizon, tuple(frozenset(s) for s in acc), provenance)
        prev = size
        current = {a: apply(m, w) for a, w in current.items()}
    raise NoStabilization(f"factor set of length <= {horizon} not stable after {cap} iterations")


@dataclass(frozen=True)
class Template:
    """The bi-infinite word ``...uuu . m vvv...`` (``m`` starts at index 0)."""

    left_period: Word
    middle: Word
    right_period: Word

    def __post_init__(self):
        for name in ("left_period", "middle", "right_period"):
            object.__setattr__(self, name, as_word(getattr(self, name)))
        if not self.left_period or not self.right_period:
            raise ValueError("template periods must be nonempty")

    def letter(self, i: int) -> str:
        if i < 0:
            return self.left_period[i % len(self.left_period)]
        if i < len(self.middle):
            return self.middle[i]
        return self.right_period[(i - len(self.middle)) % len(self.right_period)]

    def segment(self, start: int, stop: int) -> Word:
        return tuple(self.letter(i) for i in range(start, stop))

    def symbols(self) -> Set[str]:
        return set(self.left_period) | set(self.middle) | set(self.right_period)

    @classmethod
    def parse(cls, line: str) -> "Template":
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 3:
            raise ValueError(f"template line must be 'u | m | v', got {line!r}")
        u, m, v = (_read_tokens(p) for p in parts)
        return cls(u, m, v)

    def to_text(self) -> str:
        return " | ".join(_write_tokens(x) for x in (self.left_period, self.middle, self.right_period))


def _read_tokens(text: str) -> Word:
    if not text:
        return EMPTY
    if _SEPARATORS.search(text):
        return tuple(t for t in _SEPARATORS.split(text) if t)
    return tuple(text)


def _write_tokens(w: Word) -> str:
    return "".join(w) if all(len(s) == 1 for s in w) else " ".join(w)


def parse_templates(text: str) -> List[Template]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(Template.parse(line))
    if not out:
        raise ValueError("no templates given")
    return out


def language_from_templates(ts: Sequence[Template], horizon: int,
                            alphabet: Optional[Alphabet] = None) -> FactorLanguage:
    """Factors of the shift closure of a finite set of template points.

    The closure of the orbit of ``...uu m vv...`` adds the periodic points
    ``...uu.uu...`` and ``...vv.vv...``, whose factors are included too.
    """
    if not ts:
        raise ValueError("nonempty template list required")
    if alphabet is None:
        alphabet = Alphabet.of(sorted(set().union(*(t.symbols() for t in ts))))
    acc: List[Set[Word]] = [set() for _ in range(horizon + 1)]
    acc[0].add(EMPTY)
    for t in ts:
        u, m, v = t.left_period, t.middle, t.right_period
        window = u * (math.ceil(horizon / len(u)) + 1) + m + v * (math.ceil(horizon / len(v)) + 1)
        _factors_upto(window, horizon, acc)
        for per in (u, v):
            _factors_upto(per * (math.ceil(horizon / len(per)) + 1), horizon, acc)
    provenance = {"kind": "templates", "templates": [t.to_text() for t in ts]}
    return FactorLanguage(alphabet, horizon, tuple(frozenset(s) for s in acc), provenance)


def language_from_words(words: Iterable[WordLike], horizon: Optional[int] = None,
                        alphabet: Optional[Alphabet] = None, validate: bool = True) -> FactorLanguage:
    """Factor closure of an explicit word list, declared exact up to ``horizon``.

    ``horizon`` defaults to the longest given word.
    """
    ws = [as_word(w) for w in words]
    if not ws:
        raise ValueError("no words given")
    if horizon is None:
        horizon = max(map(len, ws))
    if alphabet is None:
        alphabet = Alphabet.of(sorted({s for w in ws for s in w}))
    acc: List[Set[Word]] = [set() for _ in range(horizon + 1)]
    acc[0].add(EMPTY)
    for w in ws:
        _factors_upto(w, horizon, acc)
    lang = FactorLanguage(alphabet, horizon, tuple(frozenset(s) for s in acc), {"kind": "explicit"})
    return lang.validate() if validate else lang


# -- extension sets ------------------------------------------------------------


def left_ext(X: FactorLanguage, w: WordLike, k: int) -> Set[Word]:
    """``L_k(w)``: words ``u`` of length ``k`` with ``uw`` a factor."""
    w = X.coerce(w)
    X.require(len(w) + k, f"L_{k}({X.format(w)})")
    X.check_word(w)
    n = len(w)
    return {u[:k] for u in X.factors[n + k] if u[k:] == w}


def right_ext(X: FactorLanguage, w: WordLike, k: int) -> Set[Word]:
    """``R_k(w)``: words ``v`` of length ``k`` with ``wv`` a factor."""
    w = X.coerce(w)
    X.require(len(w) + k, f"R_{k}({X.format(w)})")
    X.check_word(w)
    n = len(w)
    return {v[n:] for v in X.factors[n + k] if v[:n] == w}


def biext(X: FactorLanguage, w: WordLike, k: int) -> Set[Tuple[Word, Word]]:
    """``E_k(w)``: pairs ``(u, v)`` of length-``k`` words with ``uwv`` a factor."""
    w = X.coerce(w)
    X.require(len(w) + 2 * k, f"E_{k}({X.format(w)})")
    X.check_word(w)
    n = len(w)
    return {(x[:k], x[k + n:]) for x in X.factors[n + 2 * k] if x[k:k + n] == w}
