import pytest
from hypothesis import given
from hypothesis import strategies as st

from dendric.exceptions import (
    DiameterOfDisconnected,
    NotAPrefixCode,
    NotASuffixCode,
    NotComplete,
    NotOrderOne,
)
from dendric.extension import ExtensionGraph, extension_graph, generalized_extension_graph
from dendric.words import as_word

from oracles import extension_edges, factor_sets, long_word, nx_diameter, nx_is_tree
from conftest import FIB_IMAGES


def edge_strs(X, g):
    return {("".join(u), "".join(v)) for u, v in g.edges}


def test_fibonacci_graphs_of_a(fib):
    g1 = extension_graph(fib, "a", 1)
    assert len(g1.left) == 2 and len(g1.right) == 2 and len(g1.edges) == 3
    assert g1.is_tree() and g1.diameter() == 3 and g1.is_simple_tree()
    g3 = extension_graph(fib, "a", 3)
    assert edge_strs(fib, g3) == {("aba", "bab"), ("aab", "baa"), ("bab", "aba"), ("aba", "baa"),
                                  ("aab", "aba")}
    assert g3.is_tree() and not g3.is_simple_tree()
    assert g3.diameter() == nx_diameter(g3.edges) > 3


def test_specular_empty_word(specular):
    g = extension_graph(specular, "", 1)
    assert edge_strs(specular, g) == {("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("d", "a"),
                                      ("c", "a")}
    assert g.components() == 2 and g.is_acyclic() and not g.is_connected() and not g.is_tree()
    with pytest.raises(DiameterOfDisconnected):
        g.diameter()


def test_chacon_abc_and_bca(chacon):
    g = extension_graph(chacon, "abc", 1)
    assert edge_strs(chacon, g) == {("a", "a"), ("c", "b"), ("a", "b"), ("c", "a")}
    assert g.is_connected() and not g.is_acyclic() and not g.is_tree()
    assert g.multiplicity() == 1 and g.neutrality_class() == "strong"
    h = extension_graph(chacon, "bca", 1)
    assert h.multiplicity() == -1 and h.neutrality_class() == "weak"
    assert extension_graph(chacon, "bca", 1).is_acyclic() and not h.is_connected()


def test_neutral_and_order_errors(fib):
    assert extension_graph(fib, "a", 1).neutrality_class() == "neutral"
    with pytest.raises(NotOrderOne):
        extension_graph(fib, "a", 2).multiplicity()


def test_generalized_with_letters_equals_uniform(fib, chacon):
    for X in (fib, chacon):
        letters = [(a,) for a in X.alphabet]
        for w in X.all_words(5):
            g = generalized_extension_graph(X, w, letters, letters)
            assert g.edges == extension_graph(X, w, 1).edges


def test_generalized_fibonacci(fib):
    g = generalized_extension_graph(fib, "", ["a", "b"], ["aa", "ab", "b"])
    # aab, bab, baa, ab... the pair (a, aa) would need aaa, which is not a factor
    assert edge_strs(fib, g) == {("a", "b"), ("b", "aa"), ("b", "ab"), ("a", "ab")}
    F = factor_sets(long_word(FIB_IMAGES, 5000), 6)
    brute = {(u, v) for u in ["a", "b"] for v in ["aa", "ab", "b"] if u + v in F[len(u + v)]}
    assert edge_strs(fib, g) == brute
    assert g.is_tree()
    h = generalized_extension_graph(fib, "a", ["aa", "ba", "b"], ["a", "b"])
    assert h.is_tree()


def test_generalized_errors(fib):
    with pytest.raises(NotASuffixCode):
        generalized_extension_graph(fib, "", ["a", "ba"], ["a", "b"])
    with pytest.raises(NotAPrefixCode):
        generalized_extension_graph(fib, "", ["a", "b"], ["a", "ab"])
    with pytest.raises(NotComplete) as exc:
        generalized_extension_graph(fib, "", ["a", "b"], ["aa", "b"])
    assert fib.format(exc.value.witness) in {"ab"}


def test_dot_export(fib):
    dot = extension_graph(fib, "a", 1).to_dot()
    assert dot.splitlines()[0] == 'graph "ext_a_1" {'
    assert dot.count(" -- ") == 3
    assert '"L_a" -- "R_b";' in dot
    assert extension_graph(fib, "", 1).to_dot().startswith('graph "ext_eps_1"')
    assert dot == extension_graph(fib, "a", 1).to_dot()


@pytest.mark.parametrize("name", ["fib", "trib", "chacon", "specular", "image", "tails"])
def test_predicates_against_networkx(name, request):
    X = request.getfixturevalue(name)
    for w in X.all_words(5):
        for k in (1, 2):
            g = extension_graph(X, w, k)
            assert g.is_tree() == nx_is_tree(g.edges)
            if g.is_connected():
                assert g.diameter() == nx_diameter(g.edges)
            # no isolated vertices
            assert {u for u, _ in g.edges} == g.left and {v for _, v in g.edges} == g.right


@pytest.mark.parametrize("name", ["fib", "trib", "chacon", "specular", "image"])
def test_engine_edges_match_string_oracle(name, request):
    from conftest import CHACON_IMAGES, SPECULAR_IMAGES, TRIB_IMAGES
    X = request.getfixturevalue(name)
    images = {"fib": FIB_IMAGES, "trib": TRIB_IMAGES, "chacon": CHACON_IMAGES,
              "specular": SPECULAR_IMAGES, "image": TRIB_IMAGES}[name]
    s = long_word(images, 30000)
    if name == "image":
        s = s.replace("b", "a")
    F = factor_sets(s, 9)
    for w in X.all_words(4):
        text = "".join(w)
        for k in (1, 2):
            assert edge_strs(X, extension_graph(X, w, k)) == extension_edges(F, text, k)


def test_multiplicity_of_neutral_words_sum(fib, trib, image):
    # a neutral word w has l(w) - 1 = sum over b in R(w) of (l(wb) - 1)
    for X in (fib, trib, image):
        for w in X.all_words(8):
            if extension_graph(X, w, 1).multiplicity() == 0:
                total = sum(len(X.left_letters(w + (b,))) - 1 for b in X.right_letters(w))
                assert len(X.left_letters(w)) - 1 == total


bip_edges = st.sets(st.tuples(st.sampled_from("abcd"), st.sampled_from("abcd")), min_size=1, max_size=10)


@given(bip_edges)
def test_random_graph_invariants(edges):
    E = frozenset((as_word(u), as_word(v)) for u, v in edges)
    g = ExtensionGraph((), frozenset(u for u, _ in E), frozenset(v for _, v in E), E, ("uniform", 1))
    m = g.multiplicity()
    assert g.is_tree() == nx_is_tree(E)
    if g.is_tree():
        assert g.is_connected() and g.is_acyclic() and m == 0
    if g.is_acyclic():
        assert m <= 0
    if g.is_connected():
        assert m >= 0
        assert g.diameter() == nx_diameter(E)
    assert g.is_simple_tree() == (g.is_tree() and nx_diameter(E) <= 3)
