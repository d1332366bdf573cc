"""Command line front end: ``klchar char|verify|goodmon|term``."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .bosonic import GoodParam, char_bosonic, char_l2_closed, char_l3_closed, closed_term, param_to_word
from .configurations import (
    BoundaryVector, char_bruteforce, char_infinite, char_recursion, extremal_config,
)
from .goodmon import (
    cancellation_pairs, classify, good_words, path_ascii, split_pair, verify_cancellation,
)
from .operators import char_by_monomials_all
from .series import Series, Window, format_monomial, mismatches

METHODS = ("brute", "rec", "inf", "monomials", "bosonic", "l2", "l3")


@dataclass
class RunConfig:
    method: str
    bv: BoundaryVector
    window: Window
    N: Optional[object] = None  # int or "inf"
    degree: Optional[int] = None
    fmt: str = "table"


def _ints(text: str) -> List[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def _length(text: str):
    return "inf" if text == "inf" else int(text)


def _boundary(args) -> BoundaryVector:
    if args.b is None:
        b = [args.k] * (args.l - 1)
    else:
        b = [x for chunk in args.b for x in _ints(chunk)]
    return BoundaryVector(args.l, args.k, tuple(b))


def _window(args) -> Window:
    if args.qmax < 0 or args.zmax < 0:
        raise ValueError("window bounds must be non-negative")
    return Window(0, args.qmax, 0, args.zmax)


def compute(cfg: RunConfig) -> Tuple[Series, Window]:
    """Series of the selected method and the window on which it is exact."""
    bv, w, m = cfg.bv, cfg.window, cfg.method
    if m == "rec" and cfg.N == "inf":
        return char_infinite(bv, w), w
    if m in ("brute", "rec"):
        if cfg.N is None or cfg.N == "inf":
            raise ValueError(f"method {m} needs --N")
        fn = char_bruteforce if m == "brute" else char_recursion
        return fn(bv, cfg.N, w), w
    if m == "inf":
        return char_infinite(bv, w), w
    if m == "monomials":
        res = char_by_monomials_all(bv.k, bv.l, w, cfg.degree)
        return res.chars[bv], res.window
    if m == "bosonic":
        return char_bosonic(bv, w), w
    if m == "l2":
        if bv.l != 2:
            raise ValueError("method l2 needs --l 2")
        return char_l2_closed(bv.k, bv.b[0], w), w
    if m == "l3":
        if bv.l != 3:
            raise ValueError("method l3 needs --l 3")
        return char_l3_closed(bv.k, bv.b[0], bv.b[1], w), w
    raise ValueError(f"unknown method {m!r}")


def _emit(s: Series, fmt: str, out) -> None:
    out.write(s.to_json() + "\n" if fmt == "json" else s.to_table())


def cmd_char(args, out) -> int:
    cfg = RunConfig(args.method, _boundary(args), _window(args), args.N, args.degree, args.format)
    s, win = compute(cfg)
    _emit(s.restrict(win), cfg.fmt, out)
    return 0


def cmd_verify(args, out) -> int:
    bv, w = _boundary(args), _window(args)
    methods = ["inf", "bosonic", "monomials"] + (["l2"] if bv.l == 2 else []) + (["l3"] if bv.l == 3 else [])
    results = {}
    common = w
    for m in methods:
        s, win = compute(RunConfig(m, bv, w, degree=args.degree))
        results[m] = s
        common = Window(0, min(common.q_max, win.q_max), 0, min(common.z_max, win.z_max))
    out.write(f"# boundary {bv}\n# certified window {common}\n")
    ref = results["inf"]
    failed = False
    for m in methods[1:]:
        diff = mismatches(ref, results[m], common)
        if diff:
            failed = True
            a, n = diff[0]
            out.write(f"{m}: MISMATCH at q^{a} z^{n}: inf={ref.coeff(a, n)} {m}={results[m].coeff(a, n)}"
                      f" ({len(diff)} differing coefficients)\n")
        else:
            out.write(f"{m}: agrees with inf\n")
    out.write("methods disagree\n" if failed else "all methods agree\n")
    return 1 if failed else 0


def cmd_goodmon(args, out) -> int:
    if args.action == "list":
        words = good_words(args.l, args.maxdeg)
        for w in words:
            out.write((w or "(empty)") + "\n")
        out.write(f"# {len(words)} classes\n")
        return 0
    if args.action == "classify":
        cl = classify(args.word, args.l)
        name = {"G": "G_G", "A": "G_A", "B": "G_B"}[cl.kind]
        out.write(f"{args.word or '(empty)'}: {name}" + (f" (cancellation arrow at {cl.index})" if cl.index else "") + "\n")
        return 0
    if args.action == "path":
        out.write(path_ascii(args.word, args.l, marked=args.marked) + "\n")
        return 0
    if args.action == "cancel":
        w = _window(args)
        failed = 0
        pairs = cancellation_pairs(args.l, args.maxdeg)
        from .configurations import all_boundaries
        for a, b in pairs:
            ok = all(verify_cancellation(a, bv, w) for bv in all_boundaries(args.k, args.l))
            N, K = split_pair(a, args.l)
            out.write(f"{a or '(empty)'} ~ {b}: N={N or '-'} K={K or '-'}: {'cancels' if ok else 'DOES NOT CANCEL'}\n")
            failed += not ok
        out.write(f"# {len(pairs)} pairs, {failed} failures\n")
        return 1 if failed else 0
    raise ValueError(args.action)


def cmd_term(args, out) -> int:
    p = GoodParam(tuple(_ints(args.sigma)), tuple(_ints(args.n)))
    t = closed_term(p)
    word = param_to_word(p)
    doc = {
        "word": word,
        "alpha": t.alpha,
        "beta": t.beta,
        "gamma": t.gamma,
        "t": list(t.t),
        "vector": [format_monomial(m.a, m.n) for m in t.vector],
    }
    if args.k is not None:
        bv = _boundary(args)
        lead = t.leading(bv)
        doc["leading"] = format_monomial(lead.a, lead.n)
        doc["extremal"] = list(extremal_config(word, bv))
    if args.format == "json":
        out.write(json.dumps(doc) + "\n")
    else:
        for key, val in doc.items():
            out.write(f"{key}: {val}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="klchar", description="Characters of (k,l)-admissible configurations.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, need_k=True):
        p.add_argument("--k", type=int, required=need_k)
        p.add_argument("--l", type=int, required=True)
        p.add_argument("--b", nargs="+", help="boundary b_0 ... b_(l-2); default all k")
        p.add_argument("--qmax", type=int, default=10)
        p.add_argument("--zmax", type=int, default=6)

    p = sub.add_parser("char", help="compute a character")
    common(p)
    p.add_argument("--method", choices=METHODS, default="inf")
    p.add_argument("--N", type=_length, help="length bound for brute/rec ('inf' for rec)")
    p.add_argument("--degree", type=int, help="word-degree budget for monomials")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("verify", help="compare all methods")
    common(p)
    p.add_argument("--degree", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("goodmon", help="good monomials and cancellation pairs")
    p.add_argument("action", choices=("list", "classify", "cancel", "path"))
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--maxdeg", type=int, default=6)
    p.add_argument("--word", default="")
    p.add_argument("--marked", action="store_true")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--qmax", type=int, default=10)
    p.add_argument("--zmax", type=int, default=6)
    p.set_defaults(func=cmd_goodmon)

    p = sub.add_parser("term", help="closed form of one bosonic term")
    p.add_argument("--sigma", required=True, help="sigma(1),...,sigma(l)")
    p.add_argument("--n", required=True, help="n_1,...,n_(l-1)")
    p.add_argument("--k", type=int)
    p.add_argument("--b", nargs="+")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_term)
    return ap


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "term" and args.k is not None:
        args.l = len(_ints(args.sigma))
    try:
        return args.func(args, out)
    except (ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"klchar: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
