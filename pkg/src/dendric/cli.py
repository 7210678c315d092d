"""Command line front end.

Every subcommand takes one language source (``--substitution``,
``--templates``, ``--words``, ``--language`` or ``--example``); without one a
language JSON document is read from standard input, so transforms chain with
pipes::

    dendric higher-block --example fibonacci --horizon 20 --k 2 | dendric dendric --max 8

Exit status: 0 success, 1 a verdict or theorem check failed, 2 usage or
horizon errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Callable, Dict, List, Optional

from .codes import (
    check_return_count_theorem,
    completeness,
    group_bifix_code,
    parse_code,
    parse_permutations,
    random_maximal_suffix_code,
    return_words,
    rho,
)
from .complexity import (
    asymptotic_classes,
    check_cassaigne,
    complexity_profile,
    format_tail,
    ls_forest,
)
from .dendricity import (
    REJECTED,
    check_left_special_criterion,
    check_order_equivalence,
    check_simple_tree_horizon,
    dendricity_scan,
    eventually_neutral_scan,
)
from .exceptions import DendricError, InsufficientHorizon
from .extension import extension_graph, generalized_extension_graph
from .language import (
    FactorLanguage,
    language_from_substitution,
    language_from_templates,
    language_from_words,
    parse_templates,
)
from .shifts import EXAMPLES
from .transforms import alphabetic_image, bifix_decode, coding_morphism, higher_block
from .words import parse_morphism

DEFAULT_HORIZON = 20


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_language(args) -> FactorLanguage:
    sources = [s for s in ("substitution", "templates", "words", "language", "example")
               if getattr(args, s, None) is not None]
    if len(sources) > 1:
        raise UsageError(f"give exactly one language source, got {', '.join('--' + s for s in sources)}")
    kind = sources[0] if sources else "language"
    horizon = args.horizon
    if horizon is not None and horizon < 2:
        raise UsageError("--horizon must be >= 2")
    if kind == "substitution":
        return language_from_substitution(parse_morphism(_read(args.substitution)), horizon or DEFAULT_HORIZON)
    if kind == "templates":
        return language_from_templates(parse_templates(_read(args.templates)), horizon or DEFAULT_HORIZON)
    if kind == "words":
        words = [line.split("#", 1)[0].strip() for line in _read(args.words).splitlines()]
        return language_from_words([w for w in words if w], horizon)
    if kind == "example":
        return EXAMPLES[args.example](horizon or DEFAULT_HORIZON)
    text = _read(getattr(args, "language", None) or "-")
    try:
        X = FactorLanguage.from_json(text)
    except (json.JSONDecodeError, KeyError) as exc:
        raise UsageError(f"could not read a language JSON document: {exc}") from exc
    if horizon is not None and horizon != X.horizon:
        if horizon > X.horizon:
            raise InsufficientHorizon(horizon, X.horizon, "the requested --horizon")
        X = X.truncate(horizon)
    return X


# -- output helpers ------------------------------------------------------------


def _dump(obj) -> str:
    return json.dumps(obj, indent=1, ensure_ascii=False) + "\n"


def _need_format(args, allowed) -> str:
    fmt = args.format or allowed[0]
    if fmt not in allowed:
        raise UsageError(f"{args.command} supports --format {'/'.join(allowed)}, not {fmt}")
    return fmt


def _words_line(X: FactorLanguage, ws) -> str:
    return " ".join(X.format(w) for w in sorted(ws, key=X.alphabet.sort_key))


# -- commands --------------------------------------------------------------------
# Each returns (text, exit status).


def cmd_language(args, X):
    fmt = _need_format(args, ("json", "text"))
    if fmt == "json":
        return X.to_json() + "\n", 0
    lines = [f"alphabet: {' '.join(X.alphabet)}", f"horizon: {X.horizon}"]
    lines += [f"{n}: {_words_line(X, X.factors[n])}" for n in range(1, X.horizon + 1)]
    return "\n".join(lines) + "\n", 0


def cmd_ext_graph(args, X):
    fmt = _need_format(args, ("text", "dot", "json"))
    w = X.coerce(args.word or "")
    if args.U or args.V:
        if not (args.U and args.V):
            raise UsageError("--U and --V go together")
        g = generalized_extension_graph(X, w, parse_code(_read(args.U), X), parse_code(_read(args.V), X))
    else:
        g = extension_graph(X, w, args.k)
    if fmt == "dot":
        return g.to_dot(), 0
    f = lambda u: X.format(u)  # noqa: E731
    info = {
        "word": f(w), "left": [f(u) for u in sorted(g.left, key=X.alphabet.sort_key)],
        "right": [f(v) for v in sorted(g.right, key=X.alphabet.sort_key)],
        "edges": [[f(u), f(v)] for u, v in g.sorted_edges()],
        "connected": g.is_connected(), "acyclic": g.is_acyclic(), "tree": g.is_tree(),
        "diameter": g.diameter() if g.is_connected() else None,
        "simple_tree": g.is_simple_tree(),
    }
    if g.order == 1:
        info["multiplicity"] = g.multiplicity()
        info["class"] = g.neutrality_class()
    if fmt == "json":
        return _dump(info), 0
    lines = [f"word: {f(w) or 'ε'}", f"left: {' '.join(info['left'])}", f"right: {' '.join(info['right'])}",
             "edges: " + " ".join(f"{u}-{v}" for u, v in info["edges"])]
    lines += [f"{k}: {info[k]}" for k in ("connected", "acyclic", "tree", "diameter", "simple_tree")]
    if "multiplicity" in info:
        lines += [f"multiplicity: {info['multiplicity']} ({info['class']})"]
    return "\n".join(lines) + "\n", 0


def cmd_complexity(args, X):
    fmt = _need_format(args, ("text", "csv", "json"))
    top = args.max if args.max is not None else X.horizon - 1
    X.require(top + 1, f"complexity up to length {top}")
    prof = complexity_profile(X)
    rows = []
    for n in range(top + 1):
        rows.append({"n": n, "p_n": prof.p[n], "s_n": prof.s[n],
                     "b_n": prof.b[n] if n < len(prof.b) else None,
                     "LS_n": len(prof.left_special[n]), "RS_n": len(prof.right_special[n])})
    if fmt == "json":
        return _dump(rows), 0
    if fmt == "csv":
        out = ["n,p_n,s_n,b_n,LS_n,RS_n"]
        out += [",".join("" if r[k] is None else str(r[k]) for k in r) for r in rows]
        return "\n".join(out) + "\n", 0
    out = [f"{'n':>3} {'p_n':>6} {'s_n':>4} {'b_n':>4} {'LS':>3} {'RS':>3}"]
    for r in rows:
        b = "" if r["b_n"] is None else r["b_n"]
        out.append(f"{r['n']:>3} {r['p_n']:>6} {r['s_n']:>4} {b:>4} {r['LS_n']:>3} {r['RS_n']:>3}")
    return "\n".join(out) + "\n", 0


def cmd_special(args, X):
    fmt = _need_format(args, ("text", "json"))
    X.require(args.max + 1, f"special words up to length {args.max}")
    rows = []
    for n in range(args.max + 1):
        ws = X.words(n)
        left = [w for w in ws if len(X.left_letters(w)) > 1]
        right = [w for w in ws if len(X.right_letters(w)) > 1]
        both = [w for w in left if w in set(right)]
        rows.append({"n": n, "left_special": [X.format(w) for w in left],
                     "right_special": [X.format(w) for w in right],
                     "bispecial": [X.format(w) for w in both]})
    if fmt == "json":
        return _dump(rows), 0
    out = []
    for r in rows:
        show = lambda ws: " ".join(w or "ε" for w in ws) or "-"  # noqa: E731
        out.append(f"{r['n']}: LS {show(r['left_special'])} | RS {show(r['right_special'])}"
                   f" | BS {show(r['bispecial'])}")
    return "\n".join(out) + "\n", 0


def cmd_ls_forest(args, X):
    fmt = _need_format(args, ("text", "json"))
    forest = ls_forest(X, args.start, args.stop)
    if fmt == "json":
        return _dump(forest.to_dict(X.format)), 0
    out = []
    for n in range(args.start, args.stop + 1):
        for node in forest.level(n):
            flags = f" [{', '.join(node.flags)}]" if node.flags else ""
            out.append(f"{'  ' * (n - args.start)}{X.format(node.word) or 'ε'} l={node.ell}{flags}")
    return "\n".join(out) + "\n", 0


def cmd_dendric(args, X):
    fmt = _need_format(args, ("text", "json"))
    v = dendricity_scan(X, args.max)
    code = 1 if v.status == REJECTED else 0
    if fmt == "json":
        return _dump(v.to_dict(X.format)), code
    out = [v.describe()]
    for f in v.failures:
        out.append(f"  {X.format(f.word) or 'ε'}: {f.reason}, m={f.multiplicity}")
    return "\n".join(out) + "\n", code


def cmd_neutral(args, X):
    fmt = _need_format(args, ("text", "json"))
    v = eventually_neutral_scan(X, args.max)
    code = 1 if v.status == REJECTED else 0
    data = {"status": v.status, "threshold": v.threshold_estimate, "scanned_max_length": v.scanned_max_length,
            "non_neutral": [{"word": X.format(w), "multiplicity": m} for w, m in v.non_neutral]}
    if fmt == "json":
        return _dump(data), code
    out = [f"{v.status.replace('_', ' ')}, threshold {v.threshold_estimate} (scanned length <= {args.max})"]
    out += [f"  {X.format(w) or 'ε'}: m={m}" for w, m in v.non_neutral]
    return "\n".join(out) + "\n", code


def cmd_ls_criterion(args, X):
    fmt = _need_format(args, ("text", "json"))
    r = check_left_special_criterion(X, args.n, args.max)
    code = 0 if r.passed else 1
    data = {"n": r.n, "max": r.max_len, "passed": r.passed,
            "by_length": {str(k): ok for k, ok in sorted(r.by_length.items())},
            "first_passing_length": r.first_passing_length(),
            "violations": [{"word": X.format(v.word), "ell": v.ell,
                            "special_extensions": [[b, e] for b, e in v.special_extensions]}
                           for v in r.violations]}
    if fmt == "json":
        return _dump(data), code
    out = [f"left-special criterion from n={r.n}: {'pass' if r.passed else 'fail'} (scanned length < {r.max_len})"]
    out += [f"  {k}: {'ok' if ok else 'violation'}" for k, ok in sorted(r.by_length.items())]
    return "\n".join(out) + "\n", code


def cmd_cassaigne(args, X):
    fmt = _need_format(args, ("text", "json"))
    top = args.max if args.max is not None else X.horizon - 2
    reports = [check_cassaigne(X, n) for n in range(top + 1)]
    code = 0 if all(r.passed for r in reports) else 1
    rows = [{"n": r.n, "s_n": r.s_n, "left_sum": r.left_sum, "right_sum": r.right_sum, "b_n": r.b_n,
             "multiplicity_sum": r.multiplicity_sum, "pass": r.passed} for r in reports]
    if fmt == "json":
        return _dump(rows), code
    out = [f"{r['n']}: s={r['s_n']} sum(l-1)={r['left_sum']} sum(r-1)={r['right_sum']} "
           f"b={r['b_n']} sum(m)={r['multiplicity_sum']} {'ok' if r['pass'] else 'FAIL'}" for r in rows]
    return "\n".join(out) + "\n", code


def cmd_simple_tree(args, X):
    fmt = _need_format(args, ("text", "json"))
    r = check_simple_tree_horizon(X, args.k, args.max)
    data = {"k": r.k, "max": r.max_len, "start": r.start, "failures": [X.format(w) for w in r.failures]}
    if fmt == "json":
        return _dump(data), 0
    where = "none within scan" if r.start is None else str(r.start)
    return f"E_{r.k}(w) simple trees from length {where} (scanned length <= {r.max_len})\n", 0


def cmd_order_equiv(args, X):
    fmt = _need_format(args, ("text", "json"))
    r = check_order_equivalence(X, args.n, args.m, args.max)
    code = 0 if r.equivalent else 1
    data = {"n": r.n, "m": r.m, "max": r.max_len, "equivalent": r.equivalent,
            "all_trees": {str(r.n): r.all_trees_n, str(r.n + 1): r.all_trees_n1},
            "discrepancies": [X.format(w) for w in r.discrepancies],
            "conditions": r.dendric_conditions}
    if fmt == "json":
        return _dump(data), code
    out = [f"orders {r.n}/{r.n + 1} from length {r.m}: all trees {r.all_trees_n}/{r.all_trees_n1}, "
           f"equivalent {r.equivalent} (scanned length <= {r.max_len})"]
    if r.discrepancies:
        out.append("  per-word discrepancies: " + _words_line(X, r.discrepancies))
    return "\n".join(out) + "\n", code


def cmd_returns(args, X):
    fmt = _need_format(args, ("text", "json"))
    rep = return_words(X, args.word)
    key = X.alphabet.sort_key
    data = {"word": X.format(rep.base), "complete_within_horizon": rep.complete_within_horizon,
            "returns": [X.format(u) for u in sorted(rep.returns, key=key)],
            "complete_returns": [X.format(u) for u in sorted(rep.complete_returns, key=key)]}
    code = 0 if rep.complete_within_horizon else 2
    if fmt == "json":
        return _dump(data), code
    out = data["returns"][:]
    if not rep.complete_within_horizon:
        out.append(f"# incomplete: some branch passed horizon {X.horizon}; raise --horizon")
    return "\n".join(out) + "\n", code


def cmd_return_theorem(args, X):
    fmt = _need_format(args, ("text", "json"))
    lo = args.start if args.start is not None else max(args.m, 1)
    hi = args.stop if args.stop is not None else lo + 2
    words = [w for n in range(lo, hi + 1) for w in X.words(n)]
    r = check_return_count_theorem(X, args.m, words)
    code = 0 if r.passed else 1
    rows = [{"word": X.format(c.word), "count": c.count, "expected": c.expected, "pass": c.passed}
            for c in r.checks]
    if fmt == "json":
        return _dump(rows), code
    out = [f"{row['word']}: {row['count']} (expected {row['expected']}) {'ok' if row['pass'] else 'FAIL'}"
           for row in rows]
    return "\n".join(out) + "\n", code


def _emit_language(args, Y, header: str = ""):
    fmt = _need_format(args, ("json", "text"))
    if fmt == "json":
        return Y.to_json() + "\n", 0
    text, _ = cmd_language(args, Y)
    return header + text, 0


def cmd_higher_block(args, X):
    names = None
    if args.names:
        names = {}
        for line in _read(args.names).splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                block, sym = (p.strip() for p in line.split("->"))
                names[block] = sym
    Y = higher_block(X, args.k, names=names, rename=args.rename)
    dictionary = "".join(f"{b} -> {s}\n" for b, s in Y.provenance["dictionary"].items())
    return _emit_language(args, Y, dictionary)


def cmd_alpha_image(args, X):
    alpha = parse_morphism(_read(args.morphism))
    return _emit_language(args, alphabetic_image(X, alpha))


def cmd_bifix_decode(args, X):
    U = parse_code(_read(args.code), X)
    phi = None
    if args.names:
        m = parse_morphism(_read(args.names))
        phi = coding_morphism(U, {b: X.coerce(m.images[b]) for b in m.source}, X.alphabet)
    return _emit_language(args, bifix_decode(X, U, phi))


def cmd_group_code(args, X):
    fmt = _need_format(args, ("text", "json"))
    U = group_bifix_code(X, parse_permutations(_read(args.perm)), args.point)
    comp = completeness(X, U)
    words = [X.format(w) for w in sorted(U.words, key=X.alphabet.sort_key)]
    data = {"code": words, "bifix": U.is_bifix_code, "right_complete": comp.right_complete,
            "left_complete": comp.left_complete}
    if fmt == "json":
        return _dump(data), 0
    return "\n".join(words) + "\n", 0


def cmd_asymptotic(args, X):
    fmt = _need_format(args, ("text", "json"))
    rep = asymptotic_classes(X)
    classes = [{"tail": format_tail((), c.tail_period), "orbits": c.orbit_count, "omega": c.omega,
                "structure": c.structure,
                "left_special_tails": [{"tail": format_tail(pre, per), "ell": ell}
                                       for pre, per, ell in c.ls_tails]}
               for c in rep.classes]
    prof = complexity_profile(X)
    data = {"classes": classes, "omega": rep.omega, "s_last": prof.s[-1]}
    if fmt == "json":
        return _dump(data), 0
    out = [f"classes: {len(classes)}, omega(X) = {rep.omega}, s_{X.horizon - 1} = {prof.s[-1]}"]
    for c in classes:
        tails = ", ".join(f"{t['tail']} l={t['ell']}" for t in c["left_special_tails"])
        out.append(f"  tail {c['tail']}: {c['orbits']} orbits, omega {c['omega']}, {c['structure']}; {tails}")
    return "\n".join(out) + "\n", 0


def cmd_suffix_codes(args, X):
    """Random X-maximal suffix codes from L_m; checks rho(U) == rho(L_m)."""
    fmt = _need_format(args, ("text", "json"))
    rng = random.Random(args.seed)
    target = rho(X, X.words(args.m))
    rows = []
    for _ in range(args.count):
        U = random_maximal_suffix_code(X, max(args.m, 1), args.steps, rng, X.horizon - 1)
        value = rho(X, U.words)
        rows.append({"size": len(U), "max_length": U.max_length, "rho": value, "pass": value == target})
    code = 0 if all(r["pass"] for r in rows) else 1
    if fmt == "json":
        return _dump({"rho_L_m": target, "codes": rows}), code
    bad = sum(not r["pass"] for r in rows)
    return f"rho(L_{args.m}) = {target}; {len(rows) - bad}/{len(rows)} codes agree\n", code


COMMANDS: Dict[str, Callable] = {
    "language": cmd_language,
    "ext-graph": cmd_ext_graph,
    "complexity": cmd_complexity,
    "special": cmd_special,
    "ls-forest": cmd_ls_forest,
    "dendric": cmd_dendric,
    "neutral": cmd_neutral,
    "ls-criterion": cmd_ls_criterion,
    "cassaigne": cmd_cassaigne,
    "simple-tree": cmd_simple_tree,
    "order-equiv": cmd_order_equiv,
    "returns": cmd_returns,
    "return-theorem": cmd_return_theorem,
    "higher-block": cmd_higher_block,
    "alpha-image": cmd_alpha_image,
    "bifix-decode": cmd_bifix_decode,
    "group-code": cmd_group_code,
    "asymptotic": cmd_asymptotic,
    "suffix-codes": cmd_suffix_codes,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("language source (default: language JSON on stdin)")
    src.add_argument("--substitution", metavar="FILE", help="morphism file, lines 'a -> ab'")
    src.add_argument("--templates", metavar="FILE", help="template file, lines 'u | m | v'")
    src.add_argument("--words", metavar="FILE", help="explicit word list, one per line")
    src.add_argument("--language", metavar="FILE", help="language JSON ('-' for stdin)")
    src.add_argument("--example", choices=sorted(EXAMPLES), help="built-in example shift")
    common.add_argument("--horizon", type=int, help=f"factor length bound (default {DEFAULT_HORIZON})")
    common.add_argument("--format", choices=("text", "json", "dot", "csv"))
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="dendric", description="Extension graphs and dendricity "
                                     "verdicts for factor languages known up to a horizon.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = lambda name, **kw: sub.add_parser(name, parents=[common], **kw)  # noqa: E731

    p("language", help="build and export the language")
    g = p("ext-graph", help="extension graph of a word")
    g.add_argument("--word", default="")
    g.add_argument("--k", type=int, default=1)
    g.add_argument("--U", metavar="FILE")
    g.add_argument("--V", metavar="FILE")
    p("complexity", help="p_n, s_n, b_n table").add_argument("--max", type=int)
    p("special", help="special words per length").add_argument("--max", type=int, required=True)
    g = p("ls-forest", help="left-special prefix forest")
    g.add_argument("--from", dest="start", type=int, required=True)
    g.add_argument("--to", dest="stop", type=int, required=True)
    p("dendric", help="dendricity scan").add_argument("--max", type=int, required=True)
    p("neutral", help="eventual neutrality scan").add_argument("--max", type=int, required=True)
    g = p("ls-criterion", help="left-special extension criterion")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--max", type=int, required=True)
    p("cassaigne", help="check the special-word sum identities").add_argument("--max", type=int)
    g = p("simple-tree", help="length from which E_k(w) are simple trees")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--max", type=int, required=True)
    g = p("order-equiv", help="compare tree-ness of orders n and n+1")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, default=0)
    g.add_argument("--max", type=int, required=True)
    p("returns", help="return words to a word").add_argument("--word", required=True)
    g = p("return-theorem", help="check the return-word count against rho(L_m)")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--from", dest="start", type=int)
    g.add_argument("--to", dest="stop", type=int)
    g = p("higher-block", help="k-th higher block language")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--rename", action="store_true", help="name blocks u0, u1, ...")
    g.add_argument("--names", metavar="FILE", help="lines 'block -> symbol'")
    p("alpha-image", help="image under an alphabetic morphism").add_argument("--morphism", required=True)
    g = p("bifix-decode", help="complete bifix decoding")
    g.add_argument("--code", metavar="FILE", required=True)
    g.add_argument("--names", metavar="FILE", help="coding morphism lines 'u -> aa'")
    g = p("group-code", help="bifix code of a permutation stabilizer")
    g.add_argument("--perm", metavar="FILE", required=True)
    g.add_argument("--point", required=True)
    p("asymptotic", help="asymptotic classes of a template shift")
    g = p("suffix-codes", help="random maximal suffix codes against rho(L_m)")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--count", type=int, default=20)
    g.add_argument("--steps", type=int, default=10)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        X = load_language(args)
        text, code = COMMANDS[args.command](args, X)
    except (UsageError, DendricError, OSError, ValueError) as exc:
        print(f"dendric {args.command}: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
