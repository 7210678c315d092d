"""Alphabets, finite words and non-erasing morphisms.

Words are plain tuples of symbols. Symbols are atomic string tokens rather than
characters, so derived alphabets (blocks of a higher block shift, the letters of
a decoding) can carry names such as ``"aa"`` or ``"u0"``. Wherever a word is
accepted, a ``str`` is also accepted and read one character per symbol.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from .exceptions import ErasingMorphism, NotAnEndomorphism, SymbolNotInSource

Word = Tuple[str, ...]
WordLike = Union[str, Sequence[str]]

EMPTY: Word = ()
_SEPARATORS = re.compile(r"[.\s]+")


def as_word(w: WordLike) -> Word:
    """Coerce ``w`` to a tuple of symbols (a ``str`` is split into characters)."""
    if isinstance(w, tuple):
        return w
    if isinstance(w, str):
        return tuple(w)
    return tuple(w)


@dataclass(frozen=True)
class Alphabet:
    """A finite, ordered set of distinct symbols.

    The order is the one used for every canonical listing of words.
    """

    symbols: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        if not symbols:
            raise ValueError("an alphabet must be nonempty")
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"duplicate symbols in alphabet {symbols!r}")
        for s in symbols:
            if not isinstance(s, str) or not s or not s.isprintable() or _SEPARATORS.search(s):
                raise ValueError(f"invalid symbol {s!r}")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(symbols)})

    @classmethod
    def of(cls, symbols: Iterable[str]) -> "Alphabet":
        if isinstance(symbols, str):
            symbols = list(symbols)
        return cls(tuple(symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, symbol) -> bool:
        return symbol in self._index

    def index(self, symbol: str) -> int:
        return self._index[symbol]

    @property
    def single_char(self) -> bool:
        return all(len(s) == 1 for s in self.symbols)

    def sort_key(self, w: Word):
        """Canonical order: by length, then lexicographically in alphabet order."""
        return (len(w), tuple(self._index[s] for s in w))

    def sorted(self, words: Iterable[Word]) -> list:
        return sorted(words, key=self.sort_key)

    def covers(self, w: Word) -> bool:
        return all(s in self._index for s in w)

    def format(self, w: Word, empty: str = "ε") -> str:
        if not w:
            return empty
        return "".join(w) if self.single_char else ".".join(w)

    def parse(self, text: str) -> Word:
        """Read a word written with :meth:`format` (or space/dot separated)."""
        text = text.strip()
        if text in ("", "ε"):
            return EMPTY
        if _SEPARATORS.search(text):
            w = tuple(t for t in _SEPARATORS.split(text) if t)
        elif self.single_char:
            w = tuple(text)
        else:
            w = self._tokenize(text)
        bad = [s for s in w if s not in self._index]
        if bad:
            raise SymbolNotInSource(f"symbols {bad} not in alphabet {list(self.symbols)}")
        return w

    def _tokenize(self, text: str) -> Word:
        # greedy longest match over the alphabet
        by_len = sorted(self.symbols, key=len, reverse=True)
        out = []
        i = 0
        while i < len(text):
            for s in by_len:
                if text.startswith(s, i):
                    out.append(s)
                    i += len(s)
                    break
            else:
                raise SymbolNotInSource(f"cannot split {text!r} over alphabet {list(self.symbols)}")
        return tuple(out)


def format_word(w: WordLike, empty: str = "ε") -> str:
    """Format a word without a declared alphabet."""
    w = as_word(w)
    if not w:
        return empty
    return "".join(w) if all(len(s) == 1 for s in w) else ".".join(w)


@dataclass(frozen=True, eq=False)
class Morphism:
    """A non-erasing morphism ``source* -> target*`` given by letter images."""

    source: Alphabet
    target: Alphabet
    images: Mapping[str, Word]

    def __post_init__(self):
        images = {a: as_word(self.images[a]) for a in self.source if a in self.images}
        missing = [a for a in self.source if a not in images]
        if missing:
            raise ValueError(f"morphism is not defined on {missing}")
        extra = [a for a in self.images if a not in self.source]
        if extra:
            raise SymbolNotInSource(f"image given for symbols {extra} outside the source alphabet")
        for a, img in images.items():
            if not img:
                raise ErasingMorphism(f"image of {a!r} is empty")
            bad = [s for s in img if s not in self.target]
            if bad:
                raise SymbolNotInSource(f"image of {a!r} uses {bad}, not in the target alphabet")
        object.__setattr__(self, "images", images)

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.source, self.target, self.images) == (other.source, other.target, other.images)

    def __hash__(self):
        return hash((self.source, self.target, tuple(self.images.items())))

    def __call__(self, w: WordLike) -> Word:
        return apply(self, w)

    @classmethod
    def from_dict(cls, images: Mapping[str, WordLike], source=None, target=None) -> "Morphism":
        """Build a morphism, inferring alphabets from the images when not given.

        When every image symbol is a source symbol the target is the source,
        which makes the usual substitutions endomorphisms.
        """
        imgs = {a: as_word(v) for a, v in images.items()}
        src = source if isinstance(source, Alphabet) else Alphabet.of(source or list(imgs))
        if target is None:
            used = []
            for img in imgs.values():
                for s in img:
                    if s not in used:
                        used.append(s)
            if all(s in src for s in used):
                tgt = src
            else:
                tgt = Alphabet.of(sorted(used))
        else:
            tgt = target if isinstance(target, Alphabet) else Alphabet.of(target)
        return cls(src, tgt, imgs)

    @property
    def is_alphabetic(self) -> bool:
        return all(len(img) == 1 for img in self.images.values())

    @property
    def is_endomorphism(self) -> bool:
        return self.source == self.target

    def to_text(self) -> str:
        return "".join(f"{a} -> {self.target.format(self.images[a])}\n" for a in self.source)


def apply(m: Morphism, w: WordLike) -> Word:
    w = as_word(w)
    out = []
    for s in w:
        try:
            out.extend(m.images[s])
        except KeyError:
            raise SymbolNotInSource(f"symbol {s!r} not in source alphabet {list(m.source)}") from None
    return tuple(out)


def iterate(m: Morphism, seed: str, n: int) -> Word:
    """Return ``m`` applied ``n`` times to the one-letter word ``seed``."""
    if not m.is_endomorphism:
        raise NotAnEndomorphism("iteration needs source == target")
    if n < 0:
        raise ValueError("n must be >= 0")
    w = (seed,)
    if seed not in m.source:
        raise SymbolNotInSource(f"symbol {seed!r} not in source alphabet")
    for _ in range(n):
        w = apply(m, w)
    return w


def parse_morphism(text: str, source=None, target=None) -> Morphism:
    """Parse ``a -> ab`` lines (blank lines and ``#`` comments are ignored).

    An image containing spaces or dots is read as a list of tokens. Otherwise
    it is split into characters, or, when some source symbol is longer than
    one character, into source symbols by longest match.
    """
    raw_images: Dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise ValueError(f"line {lineno}: expected 'a -> image', got {raw!r}")
        lhs, rhs = (part.strip() for part in line.split("->", 1))
        if not lhs:
            raise ValueError(f"line {lineno}: missing source symbol")
        if lhs in raw_images:
            raise ValueError(f"line {lineno}: symbol {lhs!r} defined twice")
        raw_images[lhs] = rhs
    if not raw_images:
        raise ValueError("empty morphism description")
    src = Alphabet.of(list(raw_images))
    images: Dict[str, Word] = {}
    for lhs, rhs in raw_images.items():
        if _SEPARATORS.search(rhs):
            images[lhs] = tuple(t for t in _SEPARATORS.split(rhs) if t)
        elif src.single_char:
            images[lhs] = tuple(rhs)
        else:
            try:
                images[lhs] = src._tokenize(rhs)
            except SymbolNotInSource:
                images[lhs] = tuple(rhs)
    return Morphism.from_dict(images, source=source, target=target)
