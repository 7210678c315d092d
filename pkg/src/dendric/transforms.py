"""Language-level transformations: higher block codes, alphabetic images,
complete bifix decodings and general sliding block images.

Each returns a new :class:`FactorLanguage` whose horizon is shrunk so that the
result is still exact up to it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple, Union

from .codes import as_code, completeness
from .exceptions import InsufficientHorizon, NotBifix, NotComplete, PartialMap
from .language import FactorLanguage
from .words import EMPTY, Alphabet, Morphism, Word, WordLike, apply, as_word


@dataclass(frozen=True)
class BlockCoding:
    """Bijection from ``L_k(X)`` onto a fresh alphabet of block symbols."""

    k: int
    dictionary: Mapping[Word, str]
    alphabet: Alphabet

    def encode(self, w: Word) -> Word:
        """Image of a factor of length >= k (overlapping k-blocks)."""
        k = self.k
        return tuple(self.dictionary[w[i:i + k]] for i in range(len(w) - k + 1))

    def to_text(self, source: Alphabet) -> str:
        return "".join(f"{source.format(b)} -> {s}\n"
                       for b, s in sorted(self.dictionary.items(), key=lambda it: source.sort_key(it[0])))


def block_coding(X: FactorLanguage, k: int, names: Optional[Mapping] = None,
                 rename: bool = False) -> BlockCoding:
    """Name each k-block of ``X``.

    By default a block is named by its own text; ``rename`` gives ``u0, u1, ...``
    in canonical block order, and ``names`` (block -> symbol) overrides both.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    X.require(k, f"the {k}-block coding")
    blocks = X.words(k)
    if names is not None:
        named = {X.coerce(b): s for b, s in names.items()}
        missing = [X.format(b) for b in blocks if b not in named]
        if missing:
            raise PartialMap(f"no name given for blocks {missing}")
        dictionary = {b: named[b] for b in blocks}
    elif rename:
        dictionary = {b: f"u{i}" for i, b in enumerate(blocks)}
    else:
        sep = "" if X.alphabet.single_char else "_"
        dictionary = {b: sep.join(b) for b in blocks}
        if len(set(dictionary.values())) != len(dictionary):
            dictionary = {b: f"u{i}" for i, b in enumerate(blocks)}
    if len(set(dictionary.values())) != len(dictionary):
        raise ValueError("block names must be distinct")
    return BlockCoding(k, dictionary, Alphabet.of([dictionary[b] for b in blocks]))


def higher_block(X: FactorLanguage, k: int, names: Optional[Mapping] = None,
                 rename: bool = False) -> FactorLanguage:
    """Language of the k-th higher block shift; horizon becomes ``horizon - k + 1``."""
    coding = block_coding(X, k, names, rename)
    horizon = X.horizon - k + 1
    factors: List[Set[Word]] = [{EMPTY}]
    for n in range(1, horizon + 1):
        factors.append({coding.encode(w) for w in X.factors[n + k - 1]})
    provenance = {"kind": "higher_block", "k": k,
                  "dictionary": {X.format(b): s for b, s in coding.dictionary.items()},
                  "source": dict(X.provenance)}
    return FactorLanguage(coding.alphabet, horizon, tuple(frozenset(s) for s in factors), provenance)


def alphabetic_image(X: FactorLanguage, alpha: Morphism) -> FactorLanguage:
    """``{alpha(w)}`` over the factors of ``X``; the horizon is unchanged.

    Whether ``alpha`` is a conjugacy is not checked.
    """
    if not alpha.is_alphabetic:
        raise ValueError("the morphism must be alphabetic")
    missing = [a for a in X.alphabet if a not in alpha.source]
    if missing:
        raise ValueError(f"morphism is not defined on {missing}")
    factors = [frozenset(apply(alpha, w) for w in ws) for ws in X.factors]
    used = {w[0] for w in factors[1]}
    alphabet = Alphabet.of([b for b in alpha.target if b in used])
    provenance = {"kind": "alphabetic_image", "morphism": alpha.to_text(), "source": dict(X.provenance)}
    return FactorLanguage(alphabet, X.horizon, tuple(factors), provenance)


def coding_morphism(U, names: Union[None, Sequence[str], Mapping[str, WordLike]] = None,
                    target: Optional[Alphabet] = None) -> Morphism:
    """A bijection from fresh letters onto the words of ``U``.

    ``names`` is either a list of letters matched with ``U`` in canonical order
    or a mapping letter -> code word; default letters are ``u0, u1, ...``.
    """
    U = as_code(U)
    key = target.sort_key if target else (lambda w: (len(w), w))
    words = sorted(U.words, key=key)
    if names is None:
        images = {f"u{i}": w for i, w in enumerate(words)}
    elif isinstance(names, Mapping):
        images = {b: as_word(w) for b, w in names.items()}
    else:
        names = list(names)
        if len(names) != len(words):
            raise ValueError(f"{len(names)} names for {len(words)} code words")
        images = dict(zip(names, words))
    if set(images.values()) != set(U.words) or len(set(images.values())) != len(images):
        raise ValueError("the coding morphism must be a bijection onto the code")
    return Morphism.from_dict(images, source=list(images), target=target)


def bifix_decode(X: FactorLanguage, U, phi: Optional[Morphism] = None) -> FactorLanguage:
    """Complete bifix decoding: words ``x`` over the coding alphabet with
    ``phi(x)`` a factor of ``X``.

    ``U`` must be a bifix code that is two-sided complete for ``X``. The new
    horizon is ``horizon // max |u|``.
    """
    U = as_code(U)
    if not U.is_bifix_code:
        raise NotBifix("the code must be both prefix and suffix")
    comp = completeness(X, U)
    if not comp.two_sided:
        side = "right" if not comp.right_complete else "left"
        raise NotComplete(f"code is not {side} complete: witness {X.format(comp.witness)}", comp.witness)
    if phi is None:
        phi = coding_morphism(U, target=X.alphabet)
    if set(phi.images.values()) != set(U.words) or len(set(phi.images.values())) != len(U):
        raise ValueError("phi must map its letters bijectively onto U")
    horizon = X.horizon // U.max_length
    if horizon < 1:
        raise InsufficientHorizon(U.max_length, X.horizon, "a bifix decoding")
    factors: List[Set[Word]] = [set() for _ in range(horizon + 1)]
    factors[0].add(EMPTY)
    queue = deque([(EMPTY, EMPTY)])
    while queue:
        x, image = queue.popleft()
        if len(x) == horizon:
            continue
        for b in phi.source:
            img = image + phi.images[b]
            if img in X:
                factors[len(x) + 1].add(x + (b,))
                queue.append((x + (b,), img))
    provenance = {"kind": "bifix_decode", "coding": phi.to_text(), "source": dict(X.provenance)}
    return FactorLanguage(phi.source, horizon, tuple(frozenset(s) for s in factors), provenance)


def sliding_block_image(X: FactorLanguage, window: Tuple[int, int], f: Mapping,
                        alphabet: Optional[Alphabet] = None) -> FactorLanguage:
    """Image under the sliding block code with memory ``m`` and anticipation ``n``.

    ``f`` maps every factor of length ``m + n + 1`` to a symbol. A factor of
    length ``l`` maps to the word of its ``l - m - n`` windowed values; the
    horizon shrinks by ``m + n``.
    """
    m, n = window
    if m < 0 or n < 0:
        raise ValueError("window sizes must be >= 0")
    span = m + n + 1
    horizon = X.horizon - m - n
    if horizon < 1:
        raise InsufficientHorizon(span, X.horizon, "a sliding block image")
    table: Dict[Word, str] = {X.coerce(k): v for k, v in f.items()}
    missing = [X.format(w) for w in X.words(span) if w not in table]
    if missing:
        raise PartialMap(f"block map undefined on {missing}")
    factors: List[Set[Word]] = [{EMPTY}]
    for length in range(1, horizon + 1):
        factors.append({tuple(table[w[i:i + span]] for i in range(length))
                        for w in X.factors[length + m + n]})
    if alphabet is None:
        alphabet = Alphabet.of(sorted({s for w in factors[1] for s in w}))
    provenance = {"kind": "sliding_block", "window": [m, n], "source": dict(X.provenance)}
    return FactorLanguage(alphabet, horizon, tuple(frozenset(s) for s in factors), provenance)
