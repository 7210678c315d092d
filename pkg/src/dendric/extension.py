"""Extension graphs and their structural predicates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Tuple

from .codes import as_code
from .exceptions import (
    DiameterOfDisconnected,
    NotAPrefixCode,
    NotASuffixCode,
    NotComplete,
    NotOrderOne,
)
from .language import FactorLanguage, biext, left_ext, right_ext
from .words import Alphabet, Word, WordLike, format_word

Edge = Tuple[Word, Word]


@dataclass(frozen=True)
class ExtensionGraph:
    """Bipartite graph of left extensions x right extensions of ``word``.

    ``kind`` is ``("uniform", k)`` or ``("generalized", U, V)`` with ``U``
    and ``V`` frozensets of words.
    """

    word: Word
    left: FrozenSet[Word]
    right: FrozenSet[Word]
    edges: FrozenSet[Edge]
    kind: tuple
    alphabet: Optional[Alphabet] = None

    @property
    def order(self) -> Optional[int]:
        return self.kind[1] if self.kind[0] == "uniform" else None

    def _adjacency(self) -> Dict[Hashable, List[Hashable]]:
        adj: Dict[Hashable, List[Hashable]] = {("L", u): [] for u in self.left}
        adj.update({("R", v): [] for v in self.right})
        for u, v in self.edges:
            adj[("L", u)].append(("R", v))
            adj[("R", v)].append(("L", u))
        return adj

    def n_vertices(self) -> int:
        return len(self.left) + len(self.right)

    def components(self) -> int:
        adj = self._adjacency()
        seen = set()
        count = 0
        for s in adj:
            if s in seen:
                continue
            count += 1
            seen.add(s)
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
        return count

    def is_connected(self) -> bool:
        # the graph without vertices is not counted as connected
        return self.n_vertices() > 0 and self.components() == 1

    def is_acyclic(self) -> bool:
        return len(self.edges) == self.n_vertices() - self.components()

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == self.n_vertices() - 1

    def diameter(self) -> int:
        """Largest distance between two vertices (path length for trees)."""
        if not self.is_connected():
            raise DiameterOfDisconnected(f"extension graph of {self.format(self.word)} is disconnected")
        adj = self._adjacency()
        best = 0
        for s in adj:
            dist = {s: 0}
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        queue.append(y)
            best = max(best, max(dist.values()))
        return best

    def is_simple_tree(self) -> bool:
        return self.is_tree() and self.diameter() <= 3

    def multiplicity(self) -> int:
        if self.kind != ("uniform", 1):
            raise NotOrderOne("multiplicity is defined for letter extensions (k = 1) only")
        return len(self.edges) - len(self.left) - len(self.right) + 1

    def neutrality_class(self) -> str:
        m = self.multiplicity()
        if m > 0:
            return "strong"
        if m < 0:
            return "weak"
        return "neutral"

    def format(self, w: Word) -> str:
        return self.alphabet.format(w) if self.alphabet else format_word(w)

    def sorted_edges(self) -> List[Edge]:
        key = self.alphabet.sort_key if self.alphabet else (lambda w: (len(w), w))
        return sorted(self.edges, key=lambda e: (key(e[0]), key(e[1])))

    def to_dot(self) -> str:
        """DOT text with ``L_``/``R_`` vertex prefixes and canonical ordering."""
        key = self.alphabet.sort_key if self.alphabet else (lambda w: (len(w), w))
        fmt = lambda w: self.format(w) if w else "eps"  # noqa: E731
        suffix = str(self.kind[1]) if self.kind[0] == "uniform" else "UV"
        lines = [f'graph "ext_{fmt(self.word)}_{suffix}" {{']
        for u in sorted(self.left, key=key):
            lines.append(f'  "L_{fmt(u)}" [label="{fmt(u)}"];')
        for v in sorted(self.right, key=key):
            lines.append(f'  "R_{fmt(v)}" [label="{fmt(v)}"];')
        for u, v in self.sorted_edges():
            lines.append(f'  "L_{fmt(u)}" -- "R_{fmt(v)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def extension_graph(X: FactorLanguage, w: WordLike, k: int = 1) -> ExtensionGraph:
    """``E_k(w)`` with vertex sets ``L_k(w)`` and ``R_k(w)``."""
    w = X.coerce(w)
    if k < 1:
        raise ValueError("k must be >= 1")
    edges = frozenset(biext(X, w, k))
    return ExtensionGraph(w, frozenset(left_ext(X, w, k)), frozenset(right_ext(X, w, k)), edges,
                          ("uniform", k), X.alphabet)


def generalized_extension_graph(X: FactorLanguage, w: WordLike, U, V) -> ExtensionGraph:
    """``E_{U,V}(w)``: edges ``(u, v)`` with ``u`` in U, ``v`` in V and ``uwv`` a factor.

    ``U`` must be a suffix code and ``V`` a prefix code, and every left
    (right) extension of ``w`` of length ``max |U|`` (``max |V|``) must have a
    suffix in ``U`` (a prefix in ``V``).
    """
    w = X.check_word(X.coerce(w))
    U, V = as_code(U), as_code(V)
    if not U.is_suffix_code:
        raise NotASuffixCode("U must be a suffix code")
    if not V.is_prefix_code:
        raise NotAPrefixCode("V must be a prefix code")
    nu, nv = U.max_length, V.max_length
    X.require(len(w) + nu + nv, f"E_U,V({X.format(w)})")
    for s in sorted(left_ext(X, w, nu), key=X.alphabet.sort_key):
        if not any(s[nu - i:] in U.words for i in range(1, nu + 1)):
            raise NotComplete(f"left extension {X.format(s)} of {X.format(w)} has no suffix in U", s)
    for s in sorted(right_ext(X, w, nv), key=X.alphabet.sort_key):
        if not any(s[:i] in V.words for i in range(1, nv + 1)):
            raise NotComplete(f"right extension {X.format(s)} of {X.format(w)} has no prefix in V", s)
    left = frozenset(u for u in U.words if u + w in X)
    right = frozenset(v for v in V.words if w + v in X)
    edges = frozenset((u, v) for u in left for v in right if u + w + v in X)
    return ExtensionGraph(w, left, right, edges, ("generalized", U.words, V.words), X.alphabet)


def is_tree(g: ExtensionGraph) -> bool:
    return g.is_tree()


def is_connected(g: ExtensionGraph) -> bool:
    return g.is_connected()


def is_acyclic(g: ExtensionGraph) -> bool:
    return g.is_acyclic()


def diameter(g: ExtensionGraph) -> int:
    return g.diameter()


def is_simple_tree(g: ExtensionGraph) -> bool:
    return g.is_simple_tree()


def multiplicity(g: ExtensionGraph) -> int:
    return g.multiplicity()


def neutrality_class(g: ExtensionGraph) -> str:
    return g.neutrality_class()
