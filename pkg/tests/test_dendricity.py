import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dendric.dendricity import (
    DENDRIC,
    EVENTUALLY_DENDRIC,
    REJECTED,
    check_left_special_criterion,
    check_order_equivalence,
    check_simple_tree_horizon,
    dendricity_scan,
    eventually_neutral_scan,
)
from dendric.exceptions import InsufficientHorizon
from dendric.extension import extension_graph
from dendric.language import Template, language_from_templates

from oracles import extension_edges, factor_sets, long_word, nx_is_tree
from conftest import FIB_IMAGES, SPECULAR_IMAGES


def brute_threshold(images, max_len):
    """Least m with all E_1(w), m <= |w| <= max_len, trees; computed on strings."""
    s = long_word(images, 40000)
    F = factor_sets(s, max_len + 2)
    F[0] = {""}
    bad = [n for n in range(max_len + 1) for w in F[n] if not nx_is_tree(extension_edges(F, w, 1))]
    return 1 + max(bad) if bad else 0


def test_fibonacci_dendric(fib):
    v = dendricity_scan(fib, 8)
    assert v.status == DENDRIC and v.threshold_estimate == 0 and not v.failures
    assert brute_threshold(FIB_IMAGES, 8) == 0


def test_specular_threshold_one(specular):
    v = dendricity_scan(specular, 8)
    assert v.status == EVENTUALLY_DENDRIC and v.threshold_estimate == 1
    assert [(f.word, f.reason) for f in v.failures] == [((), "disconnected")]
    assert brute_threshold(SPECULAR_IMAGES, 8) == 1


def test_image_threshold_four(image):
    v = dendricity_scan(image, 10)
    assert v.threshold_estimate == 4 and v.status == EVENTUALLY_DENDRIC
    assert [(image.format(f.word), f.reason, f.multiplicity) for f in v.failures] == [("aaa", "cyclic", 1)]
    assert v.describe() == "eventually dendric within scan, threshold 4 (scanned length <= 10)"


def test_chacon_rejected(chacon):
    v = dendricity_scan(chacon, 12)
    assert v.status == REJECTED and v.threshold_estimate is None
    assert max(len(f.word) for f in v.failures) == 12
    for f in v.failures:
        assert not extension_graph(chacon, f.word, 1).is_tree()


def test_verdict_json(image):
    d = dendricity_scan(image, 8).to_dict(image.format)
    assert d == {"status": EVENTUALLY_DENDRIC, "threshold": 4, "scanned_max_length": 8,
                 "failures": [{"word": "aaa", "reason": "cyclic", "multiplicity": 1}]}


def test_scan_needs_horizon(fib):
    with pytest.raises(InsufficientHorizon):
        dendricity_scan(fib.truncate(9), 8)


@pytest.mark.parametrize("name", ["fib", "specular", "image", "chacon"])
def test_threshold_monotone(name, request):
    X = request.getfixturevalue(name)
    seen = []
    for top in range(0, 14):
        t = dendricity_scan(X, top).threshold_estimate
        seen.append(top + 1 if t is None else t)
    assert seen == sorted(seen)


def test_neutral_scan(fib, image, chacon):
    assert eventually_neutral_scan(fib, 8).threshold_estimate == 0
    assert eventually_neutral_scan(image, 12).threshold_estimate == 4
    assert eventually_neutral_scan(chacon, 12).status == REJECTED


def test_left_special_criterion(image, fib, chacon):
    r = check_left_special_criterion(image, 4, 12)
    assert r.passed and r.first_passing_length() == 4
    assert not check_left_special_criterion(image, 3, 12).passed
    assert check_left_special_criterion(fib, 0, 12).passed
    # Chacon's violations sit at lengths 3, 12, 39, ...
    assert check_left_special_criterion(chacon, 6, 11).passed
    r = check_left_special_criterion(chacon, 6, 14)
    assert not r.passed and {len(v.word) for v in r.violations} == {12}


def test_simple_tree_horizon(fib, specular):
    assert check_simple_tree_horizon(fib, 1, 8).start == 0
    r = check_simple_tree_horizon(fib, 3, 8)
    assert r.start >= 1 and ("a",) in r.failures
    assert check_simple_tree_horizon(specular, 1, 8).start == 1


def test_order_equivalence(fib, specular, image, chacon):
    for X, m in ((fib, 0), (specular, 1), (image, 4)):
        for n in (1, 2):
            r = check_order_equivalence(X, n, m, 8)
            assert r.equivalent and not r.discrepancies and r.all_trees_n
            assert all(r.dendric_conditions.values())
    r = check_order_equivalence(chacon, 1, 0, 8)
    assert r.equivalent and not r.all_trees_n and not r.all_trees_n1


@pytest.mark.parametrize("name", ["fib", "specular", "image"])
def test_scan_threshold_implies_other_checks(name, request):
    X = request.getfixturevalue(name)
    v = dendricity_scan(X, 12)
    m = v.threshold_estimate
    assert m is not None
    r = check_left_special_criterion(X, m, 12)
    assert r.first_passing_length() is not None
    assert check_order_equivalence(X, 1, m, 8).equivalent
    if m == 0:
        assert eventually_neutral_scan(X, 12).threshold_estimate == 0


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.text("ab", min_size=1, max_size=3), st.text("abc", max_size=2),
                          st.text("ab", min_size=1, max_size=3)), min_size=1, max_size=3))
def test_scan_invariants_on_templates(templates):
    X = language_from_templates([Template(tuple(u), tuple(m), tuple(v)) for u, m, v in templates], 10)
    v = dendricity_scan(X, 6)
    assert (v.threshold_estimate == 0) == (not v.failures)
    for f in v.failures:
        assert not extension_graph(X, f.word, 1).is_tree()
    if v.threshold_estimate == 0:
        assert eventually_neutral_scan(X, 6).threshold_estimate == 0
