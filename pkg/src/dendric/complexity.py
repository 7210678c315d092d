"""Complexity sequences, special words and asymptotic classes.

``p_n`` counts factors of length n, ``s_n = p_{n+1} - p_n`` and
``b_n = s_{n+1} - s_n``. Exact asymptotic classes are only computed for shifts
given by finitely many eventually periodic points (templates); for other
languages :func:`omega_estimate` gives a finite-horizon diagnostic.
"""

from __future__ import annotations

import csv
import io
import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .exceptions import InsufficientHorizon, NotTemplateLanguage
from .language import FactorLanguage, Template, parse_templates
from .words import Word


@dataclass(frozen=True)
class ComplexityProfile:
    p: Tuple[int, ...]
    s: Tuple[int, ...]
    b: Tuple[int, ...]
    left_special: Tuple[FrozenSet[Word], ...]
    right_special: Tuple[FrozenSet[Word], ...]
    bispecial: Tuple[FrozenSet[Word], ...]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "p_n", "s_n", "b_n", "LS_n", "RS_n"])
        for n, pn in enumerate(self.p):
            row = [n, pn]
            row.append(self.s[n] if n < len(self.s) else "")
            row.append(self.b[n] if n < len(self.b) else "")
            row.append(len(self.left_special[n]) if n < len(self.left_special) else "")
            row.append(len(self.right_special[n]) if n < len(self.right_special) else "")
            writer.writerow(row)
        return buf.getvalue()


def complexity_profile(X: FactorLanguage) -> ComplexityProfile:
    if X.horizon < 2:
        raise InsufficientHorizon(2, X.horizon, "a complexity profile")
    p = tuple(X.p(n) for n in range(X.horizon + 1))
    s = tuple(p[n + 1] - p[n] for n in range(X.horizon))
    b = tuple(s[n + 1] - s[n] for n in range(X.horizon - 1))
    ls, rs, bs = [], [], []
    for n in range(X.horizon):
        left = frozenset(w for w in X.factors[n] if len(X.left_letters(w)) > 1)
        right = frozenset(w for w in X.factors[n] if len(X.right_letters(w)) > 1)
        ls.append(left)
        rs.append(right)
        bs.append(left & right)
    return ComplexityProfile(p, s, b, tuple(ls), tuple(rs), tuple(bs))


@dataclass(frozen=True)
class CassaigneReport:
    n: int
    s_n: int
    left_sum: int
    right_sum: int
    b_n: int
    multiplicity_sum: int

    @property
    def passed(self) -> bool:
        return self.s_n == self.left_sum == self.right_sum and self.b_n == self.multiplicity_sum


def _multiplicity(X: FactorLanguage, w: Word) -> int:
    n = len(w)
    e = sum(1 for x in X.factors[n + 2] if x[1:-1] == w)
    return e - len(X.left_letters(w)) - len(X.right_letters(w)) + 1


def check_cassaigne(X: FactorLanguage, n: int) -> CassaigneReport:
    """Compare ``s_n`` with the sums of ``l(w)-1`` and ``r(w)-1`` over ``L_n``,
    and ``b_n`` with the sum of multiplicities."""
    X.require(n + 2, f"the identities at length {n}")
    words = X.factors[n]
    s_n = X.p(n + 1) - X.p(n)
    b_n = X.p(n + 2) - 2 * X.p(n + 1) + X.p(n)
    return CassaigneReport(
        n,
        s_n,
        sum(len(X.left_letters(w)) - 1 for w in words),
        sum(len(X.right_letters(w)) - 1 for w in words),
        b_n,
        sum(_multiplicity(X, w) for w in words),
    )


# -- left-special forest ------------------------------------------------------------


@dataclass
class LSNode:
    word: Word
    ell: int
    parent: Optional[Word]
    children: List[Word] = field(default_factory=list)
    flags: List[str] = field(default_factory=list)


@dataclass
class LSForest:
    """Left-special words of lengths ``start..stop`` linked by prefix.

    A node is flagged ``branching`` with two or more left-special children,
    ``ell_change`` when a child has a different number of left extensions and
    ``dead_end`` when it has no left-special child below the top level.
    """

    start: int
    stop: int
    nodes: Dict[Word, LSNode]
    roots: List[Word]

    def level(self, n: int) -> List[LSNode]:
        return [node for w, node in self.nodes.items() if len(w) == n]

    def flagged(self) -> List[LSNode]:
        return [node for node in self.nodes.values() if node.flags]

    def chains(self) -> List[LSNode]:
        """Top-level nodes, one per maximal chain."""
        return self.level(self.stop)

    def to_dict(self, fmt=lambda w: "".join(w)) -> dict:
        return {
            "from": self.start,
            "to": self.stop,
            "nodes": [
                {"word": fmt(n.word), "ell": n.ell,
                 "parent": None if n.parent is None else fmt(n.parent), "flags": n.flags}
                for n in self.nodes.values()
            ],
        }


def ls_forest(X: FactorLanguage, start: int, stop: int) -> LSForest:
    if start > stop:
        raise ValueError("start must be <= stop")
    X.require(stop + 1, "the left-special forest")
    nodes: Dict[Word, LSNode] = {}
    roots = []
    for n in range(start, stop + 1):
        for w in X.words(n):
            ell = len(X.left_letters(w))
            if ell < 2:
                continue
            parent = w[:-1] if n > start else None
            nodes[w] = LSNode(w, ell, parent)
            if parent is None:
                roots.append(w)
            else:
                # left-special words are closed under prefix
                nodes[parent].children.append(w)
    for node in nodes.values():
        if len(node.children) >= 2:
            node.flags.append("branching")
        if any(nodes[c].ell != node.ell for c in node.children):
            node.flags.append("ell_change")
        if not node.children and len(node.word) < stop:
            node.flags.append("dead_end")
    return LSForest(start, stop, nodes, roots)


@dataclass(frozen=True)
class OmegaEstimate:
    """Finite-horizon diagnostic for ``lim s_n``.

    ``status`` is ``"stable"`` when ``s_n`` is constant on at least the last
    three observable lengths, else ``"unstable"`` (and the other fields are
    ``None``). ``persistent_flags`` counts flagged left-special nodes inside
    the stable range; a nonzero count means the special words keep branching
    and the limit need not equal the asymptotic-class count.
    """

    status: str
    s_limit: Optional[int] = None
    stable_from: Optional[int] = None
    chain_count: Optional[int] = None
    chain_sum: Optional[int] = None
    persistent_flags: Optional[int] = None


def omega_estimate(X: FactorLanguage) -> OmegaEstimate:
    if X.horizon < 4:
        return OmegaEstimate("unstable")
    s = [X.p(n + 1) - X.p(n) for n in range(X.horizon)]
    top = len(s) - 1
    start = top
    while start > 0 and s[start - 1] == s[top]:
        start -= 1
    if top - start + 1 < 3:
        return OmegaEstimate("unstable")
    forest = ls_forest(X, start, top)
    chains = forest.chains()
    inner = [n for n in forest.flagged() if len(n.word) < top]
    return OmegaEstimate("stable", s[top], start, len(chains), sum(n.ell - 1 for n in chains), len(inner))


# -- asymptotic classes of template shifts ---------------------------------------------


def _primitive_root(w: Word) -> Word:
    n = len(w)
    for p in range(1, n + 1):
        if n % p == 0 and w[:p] * (n // p) == w:
            return w[:p]
    return w


def _least_rotation(w: Word) -> Word:
    return min(w[i:] + w[:i] for i in range(len(w)))


def _canonical_tail(pre: Word, per: Word) -> Tuple[Word, Word]:
    per = _primitive_root(per)
    while pre and pre[-1] == per[-1]:
        pre = pre[:-1]
        per = per[-1:] + per[:-1]
    return pre, per


@dataclass(frozen=True)
class _Orbit:
    key: tuple
    periodic: bool
    tail_class: Word
    # right-infinite tails of the orbit with the letter before them
    tails: Tuple[Tuple[Tuple[Word, Word], str], ...]


def _orbit(t: Template, depth: int) -> _Orbit:
    u, v, m = _primitive_root(t.left_period), _primitive_root(t.right_period), t.middle
    x = Template(u, m, v)
    nu, nv = len(u), len(v)
    i0 = next((i for i in range(0, len(m) + nu + nv + 1) if x.letter(i) != x.letter(i - nu)), None)
    if i0 is None:
        root = _least_rotation(u)
        tails = tuple((_canonical_tail((), x.segment(p, p + nu)), x.letter(p - 1)) for p in range(nu))
        return _Orbit(("P", root), True, root, tails)
    j0 = next(j for j in range(len(m) - 1, i0 - nu - nv - 2, -1) if x.letter(j) != x.letter(j + nv))
    window = x.segment(i0 - nu, j0 + nv + 1)
    tails = []
    for p in range(i0 - nu * depth, j0 + nv + 2):
        q = max(p, j0 + 1)
        tails.append((_canonical_tail(x.segment(p, q), x.segment(q, q + nv)), x.letter(p - 1)))
    return _Orbit(("A", window, nu, nv), False, _least_rotation(v), tuple(tails))


def _points(ts: Sequence[Template]) -> List[Template]:
    pts = []
    for t in ts:
        pts.append(t)
        pts.append(Template(t.left_period, (), t.left_period))
        pts.append(Template(t.right_period, (), t.right_period))
    return pts


@dataclass(frozen=True)
class AsymptoticClass:
    tail_period: Word
    orbits: Tuple[tuple, ...]
    ls_tails: Tuple[Tuple[Word, Word, int], ...]
    structure: str

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    @property
    def omega(self) -> int:
        return self.orbit_count - 1

    @property
    def ls_sum(self) -> int:
        return sum(ell - 1 for _, _, ell in self.ls_tails)


@dataclass(frozen=True)
class AsymptoticClassReport:
    classes: Tuple[AsymptoticClass, ...]

    @property
    def omega(self) -> int:
        return sum(c.omega for c in self.classes)

    @property
    def consistent(self) -> bool:
        """Each class has ``omega == sum(ell - 1)`` over its special tails."""
        return all(c.omega == c.ls_sum for c in self.classes)


def asymptotic_classes(ts) -> AsymptoticClassReport:
    """Right asymptotic classes of the shift generated by template points.

    Accepts a list of :class:`Template` or a language built from templates.
    """
    if isinstance(ts, FactorLanguage):
        if ts.provenance.get("kind") != "templates":
            raise NotTemplateLanguage("asymptotic classes need a template-defined shift")
        ts = [Template.parse(line) for line in ts.provenance["templates"]]
    elif isinstance(ts, str):
        ts = parse_templates(ts)
    ts = list(ts)
    if not ts or not all(isinstance(t, Template) for t in ts):
        raise NotTemplateLanguage("expected a nonempty list of templates")
    depth = 2 + sum(len(t.left_period) + len(t.middle) + len(t.right_period) for t in ts)
    orbits: Dict[tuple, _Orbit] = {}
    for pt in _points(ts):
        orb = _orbit(pt, depth)
        orbits.setdefault(orb.key, orb)
    groups: Dict[Word, List[_Orbit]] = defaultdict(list)
    for orb in orbits.values():
        groups[orb.tail_class].append(orb)
    classes = []
    for tail_class in sorted(groups, key=lambda w: (len(w), w)):
        members = groups[tail_class]
        if len(members) < 2:
            continue
        preds: Dict[Tuple[Word, Word], set] = defaultdict(set)
        for orb in members:
            for tail, a in orb.tails:
                preds[tail].add(a)
        ls = tuple(sorted((pre, per, len(letters)) for (pre, per), letters in preds.items()
                          if len(letters) >= 2))
        structure = "cluster-of-trees" if any(o.periodic for o in members) else "tree"
        keys = tuple(sorted((o.key for o in members), key=repr))
        classes.append(AsymptoticClass(tail_class, keys, ls, structure))
    return AsymptoticClassReport(tuple(classes))


def format_tail(pre: Word, per: Word) -> str:
    return "".join(pre) + "(" + "".join(per) + ")^w"


def profile_to_json(profile: ComplexityProfile, fmt) -> str:
    data = {
        "p": list(profile.p), "s": list(profile.s), "b": list(profile.b),
        "left_special": [[fmt(w) for w in sorted(ws)] for ws in profile.left_special],
        "right_special": [[fmt(w) for w in sorted(ws)] for ws in profile.right_special],
    }
    return json.dumps(data, indent=1, ensure_ascii=False)
