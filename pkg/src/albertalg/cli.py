"""Command-line front end.

Subcommands: define, verify, factor, fixpoint, hexagon, eval. All input
and output is JSON with rationals as "p/q" strings; randomized commands
take an explicit --seed. Exit codes: 0 pass, 1 verification failure,
2 usage or parse error.
"""

import argparse
import json
import os
import sys

from . import innerfact
from .albert import FIRST, trace_norm
from .assoc3 import CYCLIC
from .errors import AlbertError, NotSimilarity, ParseError, UnknownSuite
from .fixpoint import fixed_subspace, has_fixed_vector_in_A0
from .hexagon import relation_audit
from .randgen import rand_albert, rand_assoc, rng_from_seed
from .ratio import rat, rat_str
from .strmaps import (InstrWord, classify, eval_word, make_ia, make_jp,
                      make_phi, make_psi)
from .suites import SUITES, run_suite
from .workspace import Workspace, builtin_workspace, parse_assoc_elem

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _emit(report, out_path):
    text = json.dumps(report, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _load_json_arg(value):
    """Inline JSON, or the contents of a file (use @path to force a file)."""
    if value.startswith("@"):
        path = value[1:]
    elif os.path.exists(value):
        path = value
    else:
        try:
            return json.loads(value)
        except json.JSONDecodeError as exc:
            raise ParseError("argument is neither JSON nor a file: %s"
                             % exc) from exc
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError("invalid JSON in %s: %s" % (path, exc)) from exc


def _workspace(args):
    if getattr(args, "config", None):
        return Workspace.load(args.config)
    return builtin_workspace()


def _get_albert(ws, label):
    if label in ws.albert:
        return ws.albert[label]
    raise ParseError("unknown algebra %r; available: %s"
                     % (label, ", ".join(sorted(ws.albert))))


def _word_from_arg(alg, value):
    return InstrWord.from_json(alg, _load_json_arg(value))


# -- define --------------------------------------------------------------

def cmd_define(args):
    ws = Workspace.load(args.config)
    report = ws.summary()
    notes = []
    rng = rng_from_seed(args.seed)
    for label, alg in ws.albert.items():
        if alg.kind == FIRST and alg.algebra.backend == CYCLIC:
            checked = 0
            for _ in range(args.count):
                x = rand_albert(alg, rng)
                if all(c.is_zero() for c in x.coords):
                    continue
                if trace_norm(x)[1].is_zero():
                    notes.append("%s: sampled element with N = 0; "
                                 "not a division algebra" % label)
                    break
                checked += 1
            else:
                notes.append("%s: N(x) != 0 on %d sampled nonzero elements; "
                             "consistent with division (not a proof)"
                             % (label, checked))
    report["notes"] = notes
    _emit(report, args.out)
    return EXIT_PASS


# -- verify -------------------------------------------------------------------

def cmd_verify(args):
    ws = _workspace(args)
    report = run_suite(args.suite, ws=ws, seed=args.seed, count=args.count)
    _emit(report, args.out)
    return EXIT_PASS if report["passed"] else EXIT_FAIL


# -- factor ----------------------------------------------------------------

def _word_report(kind, alg, word, target):
    op = eval_word(word)
    verified = op == target
    return {"kind": kind, "algebra": alg.label,
            "word": word.to_json(),
            "length": len(word),
            "similitude": rat_str(word.similitude().rational_value()),
            "verified": verified}, verified


def cmd_factor(args):
    ws = _workspace(args)
    alg = _get_albert(ws, args.algebra)
    kind = args.kind

    def delem(value):
        return parse_assoc_elem(alg.algebra, _load_json_arg(value))

    if kind == "jp":
        if args.i is None or args.j is None:
            raise ParseError("factor jp needs --i and --j")
        i, j = delem(args.i), delem(args.j)
        from .assoc3 import invert
        p = (j * i * invert(j)) * invert(i)
        word = innerfact.jp_word(alg, i, j)
        report, ok = _word_report(kind, alg, word, make_jp(alg, p))
    elif kind == "ia":
        if args.a is None:
            raise ParseError("factor ia needs --a")
        a = delem(args.a)
        word = innerfact.ia_word(alg, a, expand=args.expand or None)
        report, ok = _word_report(kind, alg, word, make_ia(alg, a))
        report["expanded"] = all(g.to_json()["gen"] != "prim"
                                 for g in word.gens)
    elif kind == "psi":
        if args.a is None or args.b is None:
            raise ParseError("factor psi needs --a and --b")
        a, b = delem(args.a), delem(args.b)
        word = innerfact.psi_word(alg, a, b, expand=args.expand or None)
        report, ok = _word_report(kind, alg, word, make_psi(alg, a, b))
    elif kind == "phi":
        if not args.s:
            raise ParseError("factor phi needs at least one --s")
        s_list = [delem(v) for v in args.s]
        p = alg.algebra.one
        for s in s_list:
            p = p * s
        word = innerfact.phi_p_word(alg, s_list)
        report, ok = _word_report(kind, alg, word, make_phi(alg, p))
    elif kind == "chi":
        if args.a is None:
            raise ParseError("factor chi needs --a")
        a = delem(args.a)
        word = innerfact.chi_map(alg, a)
        op = eval_word(word)
        rng = rng_from_seed(args.seed)
        d = alg.algebra
        ok = True
        for _ in range(args.count):
            x = rand_assoc(d, rng)
            if op.apply(alg.elem(x, d.zero, d.zero)) != \
                    alg.elem(a * x, d.zero, d.zero):
                ok = False
                break
        report = {"kind": kind, "algebra": alg.label,
                  "word": word.to_json(), "length": len(word),
                  "similitude":
                      rat_str(word.similitude().rational_value()),
                  "verified": ok, "checked_cases": args.count}
    elif kind == "reduce":
        if args.word is None:
            raise ParseError("factor reduce needs --word")
        f = eval_word(_word_from_arg(alg, args.word))
        chi, (a, b) = innerfact.reduce_similarity(alg, f)
        psi = make_psi(alg, a, b, verify=False)
        ok = eval_word(chi).compose(psi) == f
        d = alg.algebra
        report = {"kind": kind, "algebra": alg.label,
                  "chi": chi.to_json(),
                  "a": [rat_str(v) for v in d.q_coords(a)],
                  "b": [rat_str(v) for v in d.q_coords(b)],
                  "verified": ok}
    else:
        raise ParseError("unknown factor kind %r" % (kind,))
    _emit(report, args.out)
    return EXIT_PASS if ok else EXIT_FAIL


# -- fixpoint -----------------------------------------------------------------

def cmd_fixpoint(args):
    ws = _workspace(args)
    alg = _get_albert(ws, args.algebra)
    f = eval_word(_word_from_arg(alg, args.word))
    info = classify(f)
    sub = fixed_subspace(f)
    report = {"algebra": alg.label,
              "automorphism": info["automorphism"],
              "fixed_space": sub.to_json()}
    if info["automorphism"]:
        report["fixed_vector_in_A0"] = has_fixed_vector_in_A0(f)
    _emit(report, args.out)
    return EXIT_PASS


# -- hexagon -----------------------------------------------------------------

def cmd_hexagon(args):
    ws = _workspace(args)
    if args.algebra:
        alg = _get_albert(ws, args.algebra)
    else:
        from .albert import REDUCED
        reduced = [a for a in ws.albert.values() if a.kind == REDUCED]
        alg = reduced[0] if reduced else next(iter(ws.albert.values()))
    cases = relation_audit(alg, seed=args.seed, count=args.count)
    passed = all(c["passed"] for c in cases)
    report = {"algebra": alg.label, "seed": args.seed,
              "count": args.count, "passed": passed, "relations": cases}
    _emit(report, args.out)
    return EXIT_PASS if passed else EXIT_FAIL


# -- eval ---------------------------------------------------------------------

def cmd_eval(args):
    ws = _workspace(args)
    alg = _get_albert(ws, args.algebra)
    word = _word_from_arg(alg, args.word)
    op = eval_word(word)
    report = {"algebra": alg.label, "length": len(word),
              "declared_similitude":
                  rat_str(word.similitude().rational_value())}
    try:
        info = classify(op)
        report["classification"] = {
            "automorphism": info["automorphism"],
            "isometry": info["isometry"],
            "similarity": rat_str(info["similarity"].rational_value())}
        ok = info["similarity"] == word.similitude()
    except NotSimilarity as exc:
        report["classification"] = {"error": str(exc)}
        ok = False
    if args.apply is not None:
        coords = _load_json_arg(args.apply)
        x = alg.from_coords([rat(c) for c in coords])
        img = op.apply(x)
        report["image"] = [rat_str(c.rational_value()) for c in img.coords]
    report["verified"] = ok
    _emit(report, args.out)
    return EXIT_PASS if ok else EXIT_FAIL


# -- parser ---------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="albertalg",
        description="Exact computations in 27-dimensional exceptional "
                    "Jordan algebras: define algebras from JSON configs, "
                    "factor automorphisms into U-operator words, and run "
                    "verification suites.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, config=True, seed=True, count=None):
        if config:
            sp.add_argument("--config", help="workspace config JSON")
        if seed:
            sp.add_argument("--seed", type=int, default=0,
                            help="seed for randomized checks (default 0)")
        if count is not None:
            sp.add_argument("--count", type=int, default=count,
                            help="cases per randomized check "
                                 "(default %d)" % count)
        sp.add_argument("--out", help="also write the JSON report here")

    sp = sub.add_parser("define", help="load a config and summarize it")
    sp.add_argument("--config", required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=200,
                    help="anisotropy samples per division candidate")
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_define)

    sp = sub.add_parser("verify", help="run a named verification suite")
    sp.add_argument("suite", choices=sorted(SUITES))
    common(sp, count=None)
    sp.add_argument("--count", type=int, default=None,
                    help="cases per check (suite-specific default)")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("factor",
                        help="factor a named map into a U-operator word")
    sp.add_argument("kind", choices=["jp", "ia", "psi", "phi", "chi",
                                     "reduce"])
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--i", help="element (JSON coordinates or @file)")
    sp.add_argument("--j", help="element")
    sp.add_argument("--a", help="element")
    sp.add_argument("--b", help="element")
    sp.add_argument("--s", action="append",
                    help="symmetric factor; repeatable")
    sp.add_argument("--word", help="word JSON for kind=reduce")
    sp.add_argument("--expand", action="store_true",
                    help="require a pure U-generator word")
    common(sp, count=20)
    sp.set_defaults(fn=cmd_factor)

    sp = sub.add_parser("fixpoint",
                        help="fixed subspace of the map a word evaluates to")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--word", required=True)
    common(sp, seed=False)
    sp.set_defaults(fn=cmd_fixpoint)

    sp = sub.add_parser("hexagon",
                        help="audit the root-group commutator relations")
    sp.add_argument("--algebra")
    common(sp, count=20)
    sp.set_defaults(fn=cmd_hexagon)

    sp = sub.add_parser("eval",
                        help="evaluate and classify a word, optionally "
                             "applying it to an element")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--word", required=True)
    sp.add_argument("--apply", help="27 coordinates to map through the word")
    common(sp, seed=False)
    sp.set_defaults(fn=cmd_eval)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, UnknownSuite) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except AlbertError as exc:
        print("%s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
