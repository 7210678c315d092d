"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from dendric.codes import (  # noqa: E402
    check_return_count_theorem,
    code_flags,
    completeness,
    group_bifix_code,
    parse_permutations,
    random_maximal_suffix_code,
    return_words,
    rho,
)
from dendric.complexity import asymptotic_classes, check_cassaigne, complexity_profile, omega_estimate  # noqa: E402
from dendric.dendricity import (  # noqa: E402
    EVENTUALLY_DENDRIC,
    REJECTED,
    check_left_special_criterion,
    check_order_equivalence,
    dendricity_scan,
)
from dendric.extension import extension_graph  # noqa: E402
from dendric.shifts import (  # noqa: E402
    THREE_TAILS,
    chacon,
    fibonacci,
    specular,
    three_tails,
    tribonacci,
    tribonacci_image,
)
from dendric.transforms import bifix_decode, block_coding, coding_morphism, higher_block  # noqa: E402

from oracles import long_word  # noqa: E402

TRIB_IMAGES = {"a": "ab", "b": "ac", "c": "a"}


def _edges(X, g):
    return {(X.format(u), X.format(v)) for u, v in g.edges}


def _strs(X, ws):
    return {X.format(w) for w in ws}


def criterion_1():
    X = fibonacci(24)
    g1, g3 = extension_graph(X, "a", 1), extension_graph(X, "a", 3)
    return [
        ("p_n = n+1 for n <= 20", all(X.p(n) == n + 1 for n in range(21))),
        ("scan(max 10) threshold 0", dendricity_scan(X, 10).threshold_estimate == 0),
        ("E_1(a) edges", _edges(X, g1) == {("a", "b"), ("b", "a"), ("b", "b")}),
        ("E_3(a) edges", _edges(X, g3) == {("aba", "bab"), ("aab", "baa"), ("bab", "aba"),
                                           ("aba", "baa"), ("aab", "aba")}),
        ("E_1(a) simple, E_3(a) not", g1.is_simple_tree() and g3.is_tree() and not g3.is_simple_tree()),
    ]


def criterion_2():
    X = chacon(26)
    v = dendricity_scan(X, 12)
    return [
        ("p_n = 2n+1 for 1 <= n <= 20", all(X.p(n) == 2 * n + 1 for n in range(1, 21))),
        ("m(abc) = +1", extension_graph(X, "abc", 1).multiplicity() == 1),
        ("m(bca) = -1", extension_graph(X, "bca", 1).multiplicity() == -1),
        ("scan(max 12) rejected", v.status == REJECTED),
        ("non-tree witness with |w| >= 10", any(len(f.word) >= 10 for f in v.failures)),
        ("witnesses are non-trees", all(not extension_graph(X, f.word, 1).is_tree() for f in v.failures)),
    ]


def criterion_3():
    X = specular(20)
    g = extension_graph(X, "", 1)
    return [
        ("E_1(eps) edges", _edges(X, g) == {("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("d", "a"),
                                            ("c", "a")}),
        ("two components", g.components() == 2),
        ("scan(max 8) threshold 1", dendricity_scan(X, 8).threshold_estimate == 1),
    ]


def criterion_4():
    X = tribonacci_image(30)
    v = dendricity_scan(X, 12)
    s = complexity_profile(X).s
    return [
        ("scan(max 12) threshold 4", v.threshold_estimate == 4 and v.status == EVENTUALLY_DENDRIC),
        ("aaa strong failure", any(X.format(f.word) == "aaa" and f.multiplicity > 0 for f in v.failures)),
        ("left-special criterion n=4", check_left_special_criterion(X, 4, 12).passed),
        ("s_n = 2 for 4 <= n <= 10", all(s[n] == 2 for n in range(4, 11))),
    ]


def criterion_5():
    T = tribonacci(40)
    Y = tribonacci_image(60)
    F = fibonacci(30)
    # rho(L_4) on the image by direct string counting
    s = long_word(TRIB_IMAGES, 30000).replace("b", "a")
    f4 = {s[i:i + 4] for i in range(len(s) - 3)}
    f5 = {s[i:i + 5] for i in range(len(s) - 4)}
    brute_rho = sum(sum(w + x in f5 for x in "ac") - 1 for w in f4)
    image_words = [w for n in range(4, 7) for w in Y.words(n)]
    ri = check_return_count_theorem(Y, 4, image_words)
    rf = check_return_count_theorem(F, 0, F.all_words(4)[1:])
    rt = check_return_count_theorem(T, 0, T.all_words(4)[1:])
    return [
        ("Tribonacci R(a)", _strs(T, return_words(T, "a").returns) == {"a", "ba", "ca"}),
        ("Tribonacci R(c)", _strs(T, return_words(T, "c").returns) == {"abac", "ababac", "abaabac"}),
        ("image R(a)", _strs(Y, return_words(Y, "a").returns) == {"a", "ca"}),
        ("image R(c)", _strs(Y, return_words(Y, "c").returns) == {"aaac", "aaaaac", "aaaaaac"}),
        ("Fibonacci m=0 counts 2", rf.passed and rf.expected == 2),
        ("Tribonacci m=0 counts 3", rt.passed and rt.expected == 3),
        (f"rho(L_4) = brute force ({brute_rho})", rho(Y, Y.words(4)) == brute_rho),
        ("image m=4 counts 1 + rho(L_4)", ri.passed and ri.expected == 1 + brute_rho and len(ri.checks) > 0),
    ]


def criterion_6():
    langs = {"fibonacci": fibonacci(24), "tribonacci": tribonacci(40), "chacon": chacon(26),
             "specular": specular(20), "image": tribonacci_image(30), "templates": three_tails(20)}
    out = []
    for name, X in langs.items():
        out.append((f"{name} n <= {X.horizon - 2}",
                    all(check_cassaigne(X, n).passed for n in range(X.horizon - 1))))
    return out


def criterion_7():
    X = fibonacci(24)
    names = {"aa": "u", "ab": "v", "ba": "w"}
    Y = higher_block(X, 2, names=names)
    coding = block_coding(X, 2, names=names)
    f = coding.dictionary
    iso = True
    for n in range(2, 9):
        for w in X.words(n):
            g = extension_graph(X, w, 1)
            lam = {a: f[((a,) + w)[:2]] for (a,) in g.left}
            rho_ = {b: f[(w + (b,))[-2:]] for (b,) in g.right}
            h = extension_graph(Y, coding.encode(w), 1)
            iso &= len(set(lam.values())) == len(lam) and len(set(rho_.values())) == len(rho_)
            iso &= {(lam[a], rho_[b]) for (a,), (b,) in g.edges} == {(u, v) for (u,), (v,) in h.edges}
    return [
        ("E_1(eps) in X^(2)", _edges(Y, extension_graph(Y, "", 1)) == {("u", "v"), ("v", "w"), ("w", "u"),
                                                                        ("w", "v")}),
        ("E_1(vw) in X^(2)", _edges(Y, extension_graph(Y, "vw", 1)) == {("u", "u"), ("u", "v"), ("w", "u")}),
        ("isomorphism via (lambda, rho) for 2 <= |w| <= 8", iso),
        ("scan threshold 1", dendricity_scan(Y, 8).threshold_estimate == 1),
    ]


def criterion_8():
    X = fibonacci(30)
    U = code_flags(["aa", "aba", "b"])
    Y = bifix_decode(X, U, coding_morphism(U, {"u": "aa", "v": "aba", "w": "b"}))
    G = group_bifix_code(X, parse_permutations("a: (1 2)\nb: id"), "1")
    return [
        ("U bifix", U.is_bifix_code),
        ("U two-sided complete", completeness(X, U).two_sided),
        ("E_1(eps, Y)", _edges(Y, extension_graph(Y, "", 1)) == {("u", "w"), ("v", "v"), ("v", "w"),
                                                                 ("w", "u"), ("w", "v")}),
        ("E_1(w, Y)", _edges(Y, extension_graph(Y, "w", 1)) == {("u", "u"), ("u", "v"), ("v", "u")}),
        ("scan of Y (max 8) threshold 0", dendricity_scan(Y, 8).threshold_estimate == 0),
        ("group code = {aa, aba, b}", _strs(X, G.words) == {"aa", "aba", "b"}),
    ]


def criterion_9():
    rep = asymptotic_classes(list(THREE_TAILS))
    X = three_tails(20)
    s = complexity_profile(X).s
    est = omega_estimate(X)
    c = rep.classes[0] if len(rep.classes) == 1 else None
    return [
        ("one class", c is not None),
        ("3 orbits, omega 2", c is not None and c.orbit_count == 3 and c.omega == 2),
        ("cluster of trees", c is not None and c.structure == "cluster-of-trees"),
        ("s_n = 2 from n = 1", all(x == 2 for x in s[1:])),
        ("lim s_n = sum omega(C)", est.status == "stable" and est.s_limit == rep.omega == 2),
    ]


def criterion_10():
    out = []
    for name, X, m in (("fibonacci", fibonacci(24), 0), ("specular", specular(20), 1),
                       ("image", tribonacci_image(30), 4)):
        for n in (1, 2):
            r = check_order_equivalence(X, n, m, 8)
            out.append((f"{name} n={n} m={m}", r.equivalent and not r.discrepancies))
    return out


def criterion_11():
    out = []
    for name, X, m in (("fibonacci", fibonacci(24), 0), ("image", tribonacci_image(30), 4)):
        target = rho(X, X.words(m))
        ok = True
        for seed in range(100):
            rng = random.Random(seed)
            U = random_maximal_suffix_code(X, max(m, 1), rng.randrange(1, 25), rng, 16)
            ok &= U.is_suffix_code and completeness(X, U).left_complete
            ok &= all(len(u) >= m for u in U.words) and rho(X, U.words) == target
        out.append((f"{name} m={m}: 100 codes, rho = {target}", ok))
    return out


CRITERIA = {
    1: ("Fibonacci complexity, trees and graphs of a", criterion_1),
    2: ("Chacon complexity, multiplicities and rejection", criterion_2),
    3: ("specular empty-word graph and threshold 1", criterion_3),
    4: ("Tribonacci image threshold 4 and left-special criterion", criterion_4),
    5: ("return words and the return count theorem", criterion_5),
    6: ("special-word sum identities on all languages", criterion_6),
    7: ("higher block graphs, isomorphism and threshold", criterion_7),
    8: ("complete bifix decoding and group code", criterion_8),
    9: ("template shift asymptotic class", criterion_9),
    10: ("order n / n+1 tree equivalence", criterion_10),
    11: ("random maximal suffix codes keep rho", criterion_11),
}


def evaluate(number):
    title, fn = CRITERIA[number]
    checks = fn()
    failed = [label for label, ok in checks if not ok]
    line = f"criterion {number:2d} {'PASS' if not failed else 'FAIL'}: {title}"
    if failed:
        line += " [failed: " + "; ".join(failed) + "]"
    return not failed, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, line = evaluate(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
