"""Horizon-qualified verdicts on (eventual) dendricity and neutrality.

Every verdict certifies the scanned lengths only. A finite scan cannot tell a
late threshold from no threshold at all, so a scan only reports eventual
dendricity when the failure-free stretch ``[threshold, max_len]`` covers at
least the upper half of the scanned lengths (``2 * threshold <= max_len``).
Otherwise the language is rejected within the horizon.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .extension import extension_graph
from .language import FactorLanguage
from .words import Word

DENDRIC = "dendric_within_horizon"
EVENTUALLY_DENDRIC = "eventually_dendric_within_horizon"
REJECTED = "rejected_within_horizon"


def _status(threshold: int, max_len: int) -> str:
    if threshold == 0:
        return DENDRIC
    if 2 * threshold <= max_len:
        return EVENTUALLY_DENDRIC
    return REJECTED


@dataclass(frozen=True)
class Failure:
    word: Word
    reason: str  # "disconnected" or "cyclic"
    multiplicity: int


@dataclass(frozen=True)
class DendricityVerdict:
    scanned_max_length: int
    failures: Tuple[Failure, ...]
    threshold_estimate: Optional[int]
    status: str

    def to_dict(self, fmt=lambda w: "".join(w)) -> dict:
        return {
            "status": self.status,
            "threshold": self.threshold_estimate,
            "scanned_max_length": self.scanned_max_length,
            "failures": [{"word": fmt(f.word), "reason": f.reason, "multiplicity": f.multiplicity}
                         for f in self.failures],
        }

    def describe(self) -> str:
        if self.status == DENDRIC:
            head = "dendric within scan"
        elif self.status == EVENTUALLY_DENDRIC:
            head = f"eventually dendric within scan, threshold {self.threshold_estimate}"
        else:
            head = "rejected within scan"
        return f"{head} (scanned length <= {self.scanned_max_length})"


def dendricity_scan(X: FactorLanguage, max_len: int) -> DendricityVerdict:
    """Check that ``E_1(w)`` is a tree for every factor with ``|w| <= max_len``.

    ``threshold_estimate`` is one more than the longest failing length (0
    without failures), or ``None`` when words of length ``max_len`` fail.
    """
    X.require(max_len + 2, f"a dendricity scan up to length {max_len}")
    failures = []
    for n in range(max_len + 1):
        for w in X.words(n):
            g = extension_graph(X, w, 1)
            if not g.is_tree():
                reason = "disconnected" if not g.is_connected() else "cyclic"
                failures.append(Failure(w, reason, g.multiplicity()))
    threshold = 1 + max(len(f.word) for f in failures) if failures else 0
    return DendricityVerdict(max_len, tuple(failures), threshold if threshold <= max_len else None,
                             _status(threshold, max_len))


@dataclass(frozen=True)
class NeutralityVerdict:
    scanned_max_length: int
    non_neutral: Tuple[Tuple[Word, int], ...]
    threshold_estimate: Optional[int]
    status: str


def eventually_neutral_scan(X: FactorLanguage, max_len: int) -> NeutralityVerdict:
    """Least ``m`` such that all scanned words of length >= m have multiplicity 0."""
    X.require(max_len + 2, f"a neutrality scan up to length {max_len}")
    bad = []
    for n in range(max_len + 1):
        for w in X.words(n):
            m = extension_graph(X, w, 1).multiplicity()
            if m:
                bad.append((w, m))
    threshold = 1 + max(len(w) for w, _ in bad) if bad else 0
    if threshold == 0:
        status = "neutral_within_horizon"
    elif 2 * threshold <= max_len:
        status = "eventually_neutral_within_horizon"
    else:
        status = REJECTED
    return NeutralityVerdict(max_len, tuple(bad), threshold if threshold <= max_len else None, status)


@dataclass(frozen=True)
class LeftSpecialViolation:
    word: Word
    special_extensions: Tuple[Tuple[str, int], ...]
    ell: int


@dataclass(frozen=True)
class LeftSpecialReport:
    """Outcome of the left-special extension criterion from length ``n``.

    ``by_length`` maps each scanned length to whether all its left-special
    words passed, so a criterion that starts later than ``n`` is visible.
    """

    n: int
    max_len: int
    violations: Tuple[LeftSpecialViolation, ...]
    by_length: Dict[int, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def first_passing_length(self) -> Optional[int]:
        """Smallest length from which every scanned length passes."""
        start = None
        for n in sorted(self.by_length):
            if self.by_length[n]:
                if start is None:
                    start = n
            else:
                start = None
        return start


def check_left_special_criterion(X: FactorLanguage, n: int, max_len: int) -> LeftSpecialReport:
    """Each left-special ``w`` with ``n <= |w| < max_len`` must have exactly one
    letter ``b`` with ``wb`` left-special, and then ``l(wb) == l(w)``."""
    X.require(max_len + 2, f"the left-special criterion up to length {max_len}")
    violations = []
    by_length = {}
    for k in range(n, max_len):
        ok = True
        for w in X.words(k):
            ell = len(X.left_letters(w))
            if ell < 2:
                continue
            ext = []
            for b in sorted(X.right_letters(w), key=X.alphabet.index):
                e = len(X.left_letters(w + (b,)))
                if e >= 2:
                    ext.append((b, e))
            if len(ext) != 1 or ext[0][1] != ell:
                violations.append(LeftSpecialViolation(w, tuple(ext), ell))
                ok = False
        by_length[k] = ok
    return LeftSpecialReport(n, max_len, tuple(violations), by_length)


@dataclass(frozen=True)
class SimpleTreeReport:
    k: int
    max_len: int
    failures: Tuple[Word, ...]
    start: Optional[int]


def check_simple_tree_horizon(X: FactorLanguage, k: int, max_len: int) -> SimpleTreeReport:
    """Least ``n*`` such that ``E_k(w)`` is a simple tree for ``n* <= |w| <= max_len``.

    ``start`` is ``None`` when words of length ``max_len`` already fail.
    """
    X.require(max_len + 2 * k, f"simple-tree scan of order {k} up to length {max_len}")
    failures = [w for n in range(max_len + 1) for w in X.words(n)
                if not extension_graph(X, w, k).is_simple_tree()]
    start = 1 + max(len(w) for w in failures) if failures else 0
    return SimpleTreeReport(k, max_len, tuple(failures), None if start > max_len else start)


@dataclass(frozen=True)
class OrderEquivalenceReport:
    """Compare tree-ness of ``E_n(w)`` and ``E_{n+1}(w)`` for ``m <= |w| <= max_len``.

    ``discrepancies`` lists words where exactly one of the two graphs is a
    tree. ``equivalent`` is the statement the theory guarantees: all order-n
    graphs are trees iff all order-(n+1) graphs are.
    """

    n: int
    m: int
    max_len: int
    all_trees_n: bool
    all_trees_n1: bool
    non_trees_n: Tuple[Word, ...]
    non_trees_n1: Tuple[Word, ...]
    discrepancies: Tuple[Word, ...]

    @property
    def equivalent(self) -> bool:
        return self.all_trees_n == self.all_trees_n1

    @property
    def dendric_conditions(self) -> Dict[str, bool]:
        """Within the scan: (i) order-1 trees (only when ``n == 1``), (ii) both
        scanned orders trees, (iii) some scanned order trees."""
        out = {"ii": self.all_trees_n and self.all_trees_n1,
               "iii": self.all_trees_n or self.all_trees_n1}
        if self.n == 1:
            out["i"] = self.all_trees_n
        return out


def check_order_equivalence(X: FactorLanguage, n: int, m: int, max_len: int) -> OrderEquivalenceReport:
    X.require(max_len + 2 * (n + 1), f"order {n}/{n + 1} comparison up to length {max_len}")
    bad_n, bad_n1, disc = [], [], []
    for k in range(m, max_len + 1):
        for w in X.words(k):
            t_n = extension_graph(X, w, n).is_tree()
            t_n1 = extension_graph(X, w, n + 1).is_tree()
            if not t_n:
                bad_n.append(w)
            if not t_n1:
                bad_n1.append(w)
            if t_n != t_n1:
                disc.append(w)
    return OrderEquivalenceReport(n, m, max_len, not bad_n, not bad_n1, tuple(bad_n), tuple(bad_n1),
                                  tuple(disc))


def verdict_to_json(v: DendricityVerdict, fmt) -> str:
    return json.dumps(v.to_dict(fmt), indent=1, ensure_ascii=False)
