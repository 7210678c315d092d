"""Prefix, suffix and bifix codes, completeness, return words.

Also holds the counting functions used to check the return-word theorem and the
bifix codes obtained from a permutation action (stabilizer of a point).
"""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

from .exceptions import EmptyWordInCode, IncompleteReturns, InsufficientHorizon
from .language import FactorLanguage
from .words import EMPTY, Word, WordLike, as_word


def _is_prefix_code(words: FrozenSet[Word]) -> bool:
    return not any(u != v and v[:len(u)] == u for u in words for v in words)


def _is_suffix_code(words: FrozenSet[Word]) -> bool:
    return not any(u != v and len(u) < len(v) and v[len(v) - len(u):] == u for u in words for v in words)


@dataclass(frozen=True)
class CodeSet:
    """A finite set of nonempty words with its prefix/suffix/bifix flags."""

    words: FrozenSet[Word]
    is_prefix_code: bool
    is_suffix_code: bool

    @property
    def is_bifix_code(self) -> bool:
        return self.is_prefix_code and self.is_suffix_code

    @property
    def max_length(self) -> int:
        return max(map(len, self.words))

    def __iter__(self) -> Iterator[Word]:
        return iter(sorted(self.words, key=lambda w: (len(w), w)))

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w) -> bool:
        return as_word(w) in self.words


def code_flags(ws: Iterable[WordLike]) -> CodeSet:
    words = frozenset(as_word(w) for w in ws)
    if not words:
        raise ValueError("a code needs at least one word")
    if EMPTY in words:
        raise EmptyWordInCode("codes may not contain the empty word")
    return CodeSet(words, _is_prefix_code(words), _is_suffix_code(words))


def as_code(U) -> CodeSet:
    return U if isinstance(U, CodeSet) else code_flags(U)


def parse_code(text: str, X: Optional[FactorLanguage] = None) -> CodeSet:
    """One word per line; words are parsed over ``X``'s alphabet when given."""
    words = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            words.append(X.alphabet.parse(line) if X is not None else tuple(line))
    return code_flags(words)


@dataclass(frozen=True)
class Completeness:
    right_complete: bool
    left_complete: bool
    right_witness: Optional[Word] = None
    left_witness: Optional[Word] = None

    @property
    def two_sided(self) -> bool:
        return self.right_complete and self.left_complete

    @property
    def witness(self) -> Optional[Word]:
        return self.right_witness if self.right_witness is not None else self.left_witness


def completeness(X: FactorLanguage, U) -> Completeness:
    """Test right/left X-completeness on all factors of length ``max |u|``.

    A factor of that length with no prefix (suffix) in ``U`` is a witness
    that no longer factor extending it can have one either.
    """
    U = as_code(U)
    n = U.max_length
    X.require(n, "completeness test")
    right_w = left_w = None
    for w in X.words(n):
        if right_w is None and not any(w[:k] in U.words for k in range(1, n + 1)):
            right_w = w
        if left_w is None and not any(w[n - k:] in U.words for k in range(1, n + 1)):
            left_w = w
    return Completeness(right_w is None, left_w is None, right_w, left_w)


def rho(X: FactorLanguage, W: Iterable[WordLike]) -> int:
    """Sum of ``r(w) - 1`` over ``W``."""
    total = 0
    for w in W:
        w = X.check_word(X.coerce(w))
        total += len(X.right_letters(w)) - 1
    return total


# -- return words ----------------------------------------------------------------


@dataclass(frozen=True)
class ReturnWordReport:
    base: Word
    complete_returns: FrozenSet[Word]
    returns: FrozenSet[Word]
    complete_within_horizon: bool


def return_words(X: FactorLanguage, w: WordLike) -> ReturnWordReport:
    """Complete return words to ``w`` by breadth-first right extension.

    Each branch stops at the first new occurrence of ``w``. A branch that
    reaches the horizon before that is dropped and the report is flagged as
    incomplete.
    """
    w = X.check_word(X.coerce(w))
    if not w:
        raise ValueError("return words are defined for nonempty words")
    n = len(w)
    complete: Set[Word] = set()
    cut = False
    queue = deque([w])
    while queue:
        s = queue.popleft()
        if len(s) + 1 > X.horizon:
            cut = True
            continue
        for b in sorted(X.right_letters(s), key=X.alphabet.index):
            t = s + (b,)
            if t[-n:] == w:
                complete.add(t)
            else:
                queue.append(t)
    returns = frozenset(t[n:] for t in complete)
    return ReturnWordReport(w, frozenset(complete), returns, not cut)


def return_count_by_prefix_tree(X: FactorLanguage, report: ReturnWordReport) -> int:
    """Count complete returns as ``1 + sum over proper prefixes p of (branches(p) - 1)``.

    An independent count of the same set (the prefixes form a tree whose
    leaves are the complete return words).
    """
    words = report.complete_returns
    prefixes = {t[:i] for t in words for i in range(len(report.base), len(t))}
    total = 1
    for p in prefixes:
        branches = sum(1 for b in X.alphabet if p + (b,) in prefixes or p + (b,) in words)
        total += branches - 1
    return total


@dataclass(frozen=True)
class ReturnCountCheck:
    word: Word
    count: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.count == self.expected


@dataclass(frozen=True)
class ReturnTheoremReport:
    m: int
    expected: int
    checks: Tuple[ReturnCountCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def check_return_count_theorem(X: FactorLanguage, m: int, words: Iterable[WordLike]) -> ReturnTheoremReport:
    """Check ``|R(w)| == 1 + rho(L_m)`` for each given word of length >= m."""
    X.require(m + 1, f"rho(L_{m})")
    expected = 1 + rho(X, X.words(m))
    checks = []
    for w in words:
        w = X.coerce(w)
        if len(w) < m:
            raise ValueError(f"word {X.format(w)} is shorter than the threshold {m}")
        rep = return_words(X, w)
        if not rep.complete_within_horizon:
            raise IncompleteReturns(f"return words to {X.format(w)} not resolved within horizon {X.horizon}")
        checks.append(ReturnCountCheck(w, len(rep.returns), expected))
    return ReturnTheoremReport(m, expected, tuple(checks))


# -- codes from a permutation action -------------------------------------------


def parse_permutations(text: str) -> Dict[str, Dict[str, str]]:
    """Read lines ``a: (1 2)(3 4)`` in cycle notation; ``()`` or ``id`` is the identity."""
    perms: Dict[str, Dict[str, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError(f"line {lineno}: expected 'letter: cycles'")
        letter, cycles = (p.strip() for p in line.split(":", 1))
        perm: Dict[str, str] = {}
        if cycles not in ("", "id", "()"):
            for cyc in re.findall(r"\(([^()]*)\)", cycles):
                pts = cyc.replace(",", " ").split()
                for i, q in enumerate(pts):
                    if q in perm:
                        raise ValueError(f"line {lineno}: point {q} appears twice")
                    perm[q] = pts[(i + 1) % len(pts)]
        perms[letter] = perm
    return perms


def group_bifix_code(X: FactorLanguage, perms: Mapping[str, Mapping], point) -> CodeSet:
    """Words ``w`` of the language with ``point . w == point`` and no shorter such prefix.

    ``perms`` maps each letter to a permutation given as a dict; points missing
    from a dict are fixed. The action is on the right: ``q . (ab) = (q . a) . b``.
    """
    def act(q, a):
        return perms.get(a, {}).get(q, q)

    code: Set[Word] = set()
    queue = deque([(EMPTY, point)])
    while queue:
        s, q = queue.popleft()
        if len(s) + 1 > X.horizon:
            raise InsufficientHorizon(len(s) + 2, X.horizon, "resolving the stabilizer code")
        for b in sorted(X.right_letters(s), key=X.alphabet.index):
            r = act(q, b)
            if r == point:
                code.add(s + (b,))
            else:
                queue.append((s + (b,), r))
    return code_flags(code)


# -- random maximal suffix codes ----------------------------------------------------


def random_maximal_suffix_code(X: FactorLanguage, start: int, steps: int, rng: random.Random,
                               max_len: Optional[int] = None) -> CodeSet:
    """Grow an X-maximal suffix code from ``L_start`` by leaf expansion.

    Each step replaces a random word ``u`` by the set of its left extensions
    ``Au`` within the language. Every step keeps the code suffix and
    left-complete.
    """
    top = X.horizon if max_len is None else max_len
    X.require(top, "random suffix code")
    code = set(X.factors[start])
    for _ in range(steps):
        growable = sorted((u for u in code if len(u) < top), key=X.alphabet.sort_key)
        if not growable:
            break
        u = rng.choice(growable)
        code.remove(u)
        code.update((a,) + u for a in X.left_letters(u))
    return code_flags(code)
