"""Command-line interface.

Exit codes: 0 success or true verdict, 1 false verdict / Unknown / NotEqual,
2 input error, 3 bounded completion or resource limit.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import warnings

from . import commutative as comm
from .engine import check_gs_basis, irr, shirshov_complete
from .errors import InfiniteULError, NotALieElementError, ShirshovError
from .lie import check_lie_gs_basis, lie_irr, lie_normal_form
from .lyndon import (alsw_enumerate, cfl_bracketing, format_tree, is_alsw, lie_recognize,
                     shirshov_factorize, standard_bracketing, tree_to_json)
from .plactic import COLUMN, ROW, tableau_normal_form, tableau_strings
from .poly import FreePolynomial, monic, parse_polynomial
from .presentations import Presentation, WordProblemResult, load_presentation, word_problem
from .reduction import normal_form
from .serialize import completion_to_json, format_any, report_to_json
from .words import Alphabet, make_order, parse_word

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("limits must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="presentation JSON file or fixture name")
    common.add_argument("--order", help="override the word order (deglex, lex, eps)")
    common.add_argument("--max-degree", type=_positive)
    common.add_argument("--max-steps", type=_positive)
    common.add_argument("--max-length", type=_positive)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--mode", choices=(ROW, COLUMN), default=ROW)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--generators", help="comma-separated generator names, smallest first")
    common.add_argument("-n", type=_positive, help="use the standard alphabet x1 < ... < xn")

    parser = argparse.ArgumentParser(prog="shirshov", description="Groebner-Shirshov basis toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", parents=[common], help="verify closure under compositions")
    p.add_argument("--samples", type=int, default=0, help="also reduce this many random ideal elements")
    sub.add_parser("complete", parents=[common], help="run completion")
    p = sub.add_parser("nf", parents=[common], help="normal form of a word or polynomial")
    p.add_argument("expr")
    sub.add_parser("irr", parents=[common], help="enumerate irreducible words")
    p = sub.add_parser("lyndon", parents=[common], help="factorization and bracketings")
    p.add_argument("word", nargs="?")
    p.add_argument("--list", action="store_true", help="list ALSWs up to --max-length")
    p = sub.add_parser("lie", parents=[common], help="recognize a Lie polynomial")
    p.add_argument("expr")
    p = sub.add_parser("tableau", parents=[common], help="plactic tableau of a word")
    p.add_argument("word", nargs="?", default="")
    p = sub.add_parser("wp", parents=[common], help="word problem u = v")
    p.add_argument("u")
    p.add_argument("v")
    return parser


# -- helpers -----------------------------------------------------------------------

def _presentation(args) -> Presentation:
    if not args.input:
        raise InputError("this command needs --input")
    pres = load_presentation(args.input)
    if args.order:
        if pres.kind == "commutative":
            pres.order = comm.CommutativeOrder(pres.alphabet, args.order)
            pres.relations = [r.monic(pres.order) for r in pres.relations]
        else:
            order = make_order(args.order, pres.alphabet)
            if not order.is_monomial:
                raise InputError(f"{args.order} is not a monomial order")
            if pres.kind == "lie" and order.name != "deglex":
                raise InputError("Lie presentations use the deg-lex order")
            if pres.kind != "lie":
                pres.relations = [monic(r, order) for r in pres.relations]
            pres.order = order
    return pres


def _alphabet(args) -> Alphabet:
    if args.input:
        return load_presentation(args.input).alphabet
    if args.generators:
        return Alphabet(tuple(g.strip() for g in args.generators.split(",") if g.strip()))
    return Alphabet.standard(args.n or 2)


def _random_ideal_element(rels, n, rng, terms=4, pad=2):
    total = FreePolynomial.zero()
    for _ in range(terms):
        s = rng.choice(rels)
        a = tuple(rng.randrange(n) for _ in range(rng.randint(0, pad)))
        b = tuple(rng.randrange(n) for _ in range(rng.randint(0, pad)))
        total = total + s.sandwich(a, b).scale(rng.randint(-3, 3))
    return total


# -- commands ----------------------------------------------------------------------

def cmd_check(args):
    pres = _presentation(args)
    if pres.kind == "lie":
        report = check_lie_gs_basis(pres.relations, pres.order)
    elif pres.kind == "commutative":
        report = comm.check_groebner(pres.relations, pres.order)
    else:
        report = check_gs_basis(pres.relations, pres.order)
    out = report_to_json(report, pres.alphabet)
    code = EXIT_OK if report.verdict else EXIT_FALSE
    if args.samples and pres.kind not in ("commutative",) and pres.relations:
        rng = random.Random(args.seed)
        rels = pres.associative()
        zero = sum(not normal_form(_random_ideal_element(rels, len(pres.alphabet), rng), rels, pres.order)
                   for _ in range(args.samples))
        out["samples"] = {"count": args.samples, "seed": args.seed, "reduced_to_zero": zero}
    lines = [f"verdict: {'true' if report.verdict else 'false'} ({len(report.records)} compositions)"]
    if pres.kind == "commutative" and report.verdict:
        try:
            lifted = comm.eps_lift(pres.relations, pres.order)
        except InfiniteULError as e:
            out["eps_lift"] = {"error": str(e)}
            lines.append(f"no finite associative lift: {e}")
        else:
            eps = comm.eps_order(pres.order)
            lift_ok = check_gs_basis(lifted, eps).verdict
            out["eps_lift"] = {"relations": [p.format(pres.alphabet, eps) for p in lifted], "verdict": lift_ok}
            lines.append(f"lifted to {len(lifted)} associative relations; closed: {'true' if lift_ok else 'false'}")
    for a in out["ambiguities"]:
        if not a["trivial"]:
            lines.append(f"nontrivial {a['kind']} at w={a['w']} (relations {a['i']}, {a['j']}): "
                         f"residue {a['residue']}")
    if "samples" in out:
        s = out["samples"]
        lines.append(f"random ideal elements reducing to 0: {s['reduced_to_zero']}/{s['count']}")
    return out, lines, code


def cmd_complete(args):
    pres = _presentation(args)
    if pres.kind == "commutative":
        result = comm.buchberger(pres.relations, pres.order, args.max_degree, args.max_steps)
    else:
        result = shirshov_complete(pres.associative(), pres.order, args.max_degree, args.max_steps)
    out = completion_to_json(result, pres.alphabet)
    lines = [f"status: {out['status']}", f"rounds: {out['rounds']}", f"added: {out['added']}", "basis:"]
    lines += [f"  {s}" for s in out["basis"]]
    return out, lines, EXIT_OK if result.status.complete else EXIT_LIMIT


def cmd_nf(args):
    pres = _presentation(args)
    if pres.kind == "commutative":
        f = comm.parse_commutative(args.expr, pres.alphabet)
        r = comm.reduce(f, pres.relations, pres.order)
        text = r.format(pres.alphabet, pres.order)
    elif pres.kind == "lie":
        f = parse_polynomial(args.expr, pres.alphabet)
        try:
            elem = lie_recognize(f)
        except NotALieElementError as e:
            raise InputError(f"{args.expr!r} is not a Lie polynomial "
                             f"(residual leading word {pres.alphabet.format(e.word)})") from None
        text = lie_normal_form(elem, pres.relations, pres.order).format(pres.alphabet)
    else:
        f = parse_polynomial(args.expr, pres.alphabet)
        text = normal_form(f, pres.relations, pres.order).format(pres.alphabet, pres.order)
    return {"normal_form": text}, [text], EXIT_OK


def cmd_irr(args):
    pres = _presentation(args)
    length = args.max_length or 3
    if pres.kind == "lie":
        items = [format_tree(t, pres.alphabet, "[]") for t in lie_irr(pres.relations, pres.alphabet, length)]
    elif pres.kind == "commutative":
        items = [comm.format_monomial(e, pres.alphabet)
                 for d in range(length + 1) for e in reversed(comm.standard_monomials(pres.relations, pres.order, d))]
    else:
        items = [pres.alphabet.format(w) for w in irr(pres.relations, pres.order, length)]
    return {"max_length": length, "count": len(items), "irr": items}, items, EXIT_OK


def cmd_lyndon(args):
    alphabet = _alphabet(args)
    if args.list:
        length = args.max_length or 4
        items = [alphabet.format(w) for w in alsw_enumerate(len(alphabet), length)]
        return {"max_length": length, "count": len(items), "alsw": items}, items, EXIT_OK
    if not args.word:
        raise InputError("lyndon needs a word or --list")
    w = parse_word(args.word, alphabet)
    if not w:
        raise InputError("the empty word has no factorization")
    factors = shirshov_factorize(w)
    out = {"word": alphabet.format(w), "alsw": is_alsw(w),
           "factors": [alphabet.format(c) for c in factors],
           "bracketed": [format_tree(standard_bracketing(c), alphabet, "[]") for c in factors]}
    if out["alsw"]:
        std = standard_bracketing(w)
        out["standard"] = format_tree(std, alphabet, "[]")
        out["cfl"] = format_tree(cfl_bracketing(w), alphabet, "[]")
        out["tree"] = tree_to_json(std, alphabet)
    lines = [f"alsw: {'true' if out['alsw'] else 'false'}",
             "factors: " + " | ".join(out["factors"]),
             "bracketed: " + " ".join(out["bracketed"])]
    if out["alsw"]:
        lines += [f"standard: {out['standard']}", f"cfl: {out['cfl']}"]
    return out, lines, EXIT_OK


def cmd_lie(args):
    alphabet = _alphabet(args)
    p = parse_polynomial(args.expr, alphabet)
    try:
        elem = lie_recognize(p)
    except NotALieElementError as e:
        word = alphabet.format(e.word)
        return ({"lie": False, "residual_leading_word": word},
                [f"not a Lie polynomial: residual leading word {word}"], EXIT_FALSE)
    text = elem.format(alphabet)
    return {"lie": True, "element": text}, [text], EXIT_OK


def cmd_tableau(args):
    alphabet = _alphabet(args)
    w = parse_word(args.word, alphabet) if args.word.strip() else ()
    rows = tableau_strings(tableau_normal_form(w, len(alphabet), args.mode), args.mode)
    return {"mode": args.mode, "tableau": rows}, [" ".join(rows) if rows else "(empty)"], EXIT_OK


def cmd_wp(args):
    pres = _presentation(args)
    if pres.kind not in ("semigroup", "group", "algebra"):
        raise InputError(f"wp needs a semigroup, group or algebra presentation, not {pres.kind}")
    u, v = parse_word(args.u, pres.alphabet), parse_word(args.v, pres.alphabet)
    ans = word_problem(pres, u, v, args.max_degree, args.max_steps)
    nfs = [format_any(x, pres.alphabet, pres.order) for x in ans.normal_forms]
    out = {"verdict": ans.result.value, "normal_forms": nfs, "completion": str(ans.completion.status)}
    code = EXIT_OK if ans.result == WordProblemResult.EQUAL else EXIT_FALSE
    return out, [f"{ans.result.value} ({nfs[0]} | {nfs[1]}; completion {out['completion']})"], code


COMMANDS = {"check": cmd_check, "complete": cmd_complete, "nf": cmd_nf, "irr": cmd_irr,
            "lyndon": cmd_lyndon, "lie": cmd_lie, "tableau": cmd_tableau, "wp": cmd_wp}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            out, lines, code = COMMANDS[args.command](args)
    except InfiniteULError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except (InputError, ShirshovError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
