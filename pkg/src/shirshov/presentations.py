"""Presentations of algebras, Lie algebras, semigroups and groups; the word
problem; and the Chinese, Knuth, Drinfeld-Kohno and related relation families."""

from __future__ import annotations

import json
import logging
import re
import warnings
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Sequence

from .commutative import CommutativeOrder, parse_commutative
from .engine import CompletionResult, shirshov_complete
from .errors import ParseError
from .lyndon import lie_recognize
from .poly import FreePolynomial, monic, parse_polynomial
from .reduction import normal_form
from .words import Alphabet, DegLex, MonomialOrder, Word, make_order, parse_word

log = logging.getLogger(__name__)

KINDS = ("algebra", "lie", "semigroup", "group", "commutative")
INVERSE_SUFFIX = "^-1"


@dataclass
class Presentation:
    """Generators, an order, and relations.

    ``relations`` holds :class:`FreePolynomial` for algebra, semigroup and
    group kinds (binomials ``u - v`` with ``u > v`` for the latter two),
    :class:`LieElement` for Lie kind, and :class:`CommutativePolynomial` for
    commutative kind.  Every relation is monic.  For group kind the alphabet
    already contains the inverse letters and ``relations`` the inverse rules.
    """

    alphabet: Alphabet
    kind: str
    relations: list
    order: object
    name: str = ""
    word_relations: list = field(default_factory=list)

    def associative(self) -> list:
        """Relations as polynomials in the free associative algebra."""
        if self.kind == "lie":
            return [r.expand() for r in self.relations]
        if self.kind == "commutative":
            raise ValueError("commutative presentations have no associative form")
        return list(self.relations)


def _orient(p: FreePolynomial, order: MonomialOrder) -> FreePolynomial:
    return monic(p, order)


def binomial(u: Word, v: Word, order: MonomialOrder) -> FreePolynomial | None:
    """``u - v`` with the larger word first, or None when ``u == v``."""
    if u == v:
        return None
    if order.key(u) < order.key(v):
        u, v = v, u
    return FreePolynomial({u: 1, v: -1})


def semigroup_to_algebra(pairs: Sequence, order: MonomialOrder) -> list:
    out = []
    for u, v in pairs:
        b = binomial(tuple(u), tuple(v), order)
        if b is None:
            warnings.warn(f"dropping trivial relation {u} = {v}", stacklevel=2)
            continue
        if b not in out:
            out.append(b)
    return out


def group_alphabet(generators: Sequence[str]) -> Alphabet:
    """Original generators followed by their inverses, in the same relative order."""
    return Alphabet(tuple(generators) + tuple(g + INVERSE_SUFFIX for g in generators))


def inverse_rules(n: int) -> list:
    """``(x x^-1, 1)`` and ``(x^-1 x, 1)`` for each of ``n`` original generators."""
    out = []
    for i in range(n):
        out.append(((i, i + n), ()))
        out.append(((i + n, i), ()))
    return out


# -- building presentations ----------------------------------------------------

def make_presentation(generators: Sequence[str], kind: str, relations: Sequence, order=None,
                      name: str = "") -> Presentation:
    """``relations`` are ``(lhs, rhs)`` pairs of text (or words for monoid kinds)."""
    if kind not in KINDS:
        raise ParseError(f"unknown presentation kind {kind!r}")
    if kind == "group":
        alphabet = group_alphabet(generators)
    else:
        alphabet = Alphabet(tuple(generators))
    if kind == "commutative":
        corder = CommutativeOrder(alphabet, (order or {}).get("type", "deglex")
                                  if isinstance(order, dict) else (order or "deglex"))
        rels = []
        for lhs, rhs in relations:
            p = parse_commutative(lhs, alphabet) - parse_commutative(rhs, alphabet)
            if p:
                rels.append(p.monic(corder))
        return Presentation(alphabet, kind, rels, corder, name)
    word_order = make_order(order, alphabet)
    if kind in ("semigroup", "group"):
        pairs = [(_as_word(lhs, alphabet), _as_word(rhs, alphabet)) for lhs, rhs in relations]
        if kind == "group":
            pairs = inverse_rules(len(generators)) + pairs
        rels = semigroup_to_algebra(pairs, word_order)
        return Presentation(alphabet, kind, rels, word_order, name, pairs)
    rels = []
    for k, (lhs, rhs) in enumerate(relations):
        try:
            p = parse_polynomial(lhs, alphabet) - parse_polynomial(rhs, alphabet)
        except ParseError as e:
            raise ParseError(str(e), f"relation {k}") from None
        if not p:
            warnings.warn(f"dropping zero relation {k}", stacklevel=2)
            continue
        if kind == "lie":
            if not isinstance(word_order, DegLex):
                raise ParseError("Lie presentations use the deg-lex order")
            rels.append(lie_recognize(p).monic())
        else:
            rels.append(_orient(p, word_order))
    return Presentation(alphabet, kind, rels, word_order, name)


def _as_word(x, alphabet: Alphabet) -> Word:
    if isinstance(x, str):
        return parse_word(x, alphabet)
    w = tuple(x)
    alphabet.check(w)
    return w


def presentation_from_json(obj: dict, name: str = "") -> Presentation:
    try:
        generators = obj["generators"]
        kind = obj.get("kind", "algebra")
        order = obj.get("order", {"type": "deglex"})
        raw = obj.get("relations", [])
    except (TypeError, KeyError) as e:
        raise ParseError(f"presentation is missing field {e}") from None
    if not isinstance(generators, list) or not all(isinstance(g, str) for g in generators):
        raise ParseError("'generators' must be a list of names")
    if isinstance(order, dict) and order.get("precedence"):
        prec = list(order["precedence"])
        if sorted(prec) != sorted(generators):
            raise ParseError("order precedence must list every generator exactly once")
        generators = prec
    pairs = []
    for k, r in enumerate(raw):
        if not isinstance(r, dict) or "lhs" not in r:
            raise ParseError("relations must be objects with 'lhs' and 'rhs'", f"relation {k}")
        pairs.append((str(r["lhs"]), str(r.get("rhs", "0" if kind not in ("semigroup", "group") else "1"))))
    return make_presentation(generators, kind, pairs, order, name or obj.get("name", ""))


def presentation_to_json(p: Presentation) -> dict:
    if p.kind == "group":
        gens = list(p.alphabet.generators[:len(p.alphabet) // 2])
    else:
        gens = list(p.alphabet.generators)
    if p.kind == "commutative":
        order = {"type": p.order.kind}
        rels = [{"lhs": r.format(p.alphabet, p.order), "rhs": "0"} for r in p.relations]
    else:
        order = p.order.spec()
        if p.kind in ("semigroup", "group"):
            n = len(gens)
            extra = p.word_relations[2 * n:] if p.kind == "group" else p.word_relations
            rels = [{"lhs": p.alphabet.format(u), "rhs": p.alphabet.format(v)} for u, v in extra]
        elif p.kind == "lie":
            rels = [{"lhs": r.format(p.alphabet), "rhs": "0"} for r in p.relations]
        else:
            rels = [{"lhs": r.format(p.alphabet, p.order), "rhs": "0"} for r in p.relations]
    return {"name": p.name, "generators": gens, "kind": p.kind, "order": order, "relations": rels}


FIXTURES = ("grassmann_n3", "clifford_n3", "pbw_2dim", "pbw_3dim", "chinese_n3", "chinese_n4",
            "knuth_n2", "knuth_n3", "braid_b3", "drinfeld_kohno_n4", "eps_lift_demo")


def fixture_names() -> list:
    files = resources.files("shirshov") / "data"
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".json"))


def load_fixture(name: str) -> Presentation:
    path = resources.files("shirshov") / "data" / f"{name}.json"
    if not path.is_file():
        raise ParseError(f"unknown fixture {name!r}")
    return presentation_from_json(json.loads(path.read_text()), name)


def load_presentation(source: str) -> Presentation:
    """A fixture name or a path to a presentation JSON file."""
    p = Path(source)
    if p.suffix == ".json" or p.exists():
        try:
            obj = json.loads(p.read_text())
        except FileNotFoundError:
            raise ParseError(f"no such file {source!r}") from None
        except json.JSONDecodeError as e:
            raise ParseError(f"malformed JSON: {e.msg}", f"line {e.lineno} column {e.colno}") from None
        return presentation_from_json(obj, p.stem)
    return load_fixture(source)


# -- word problem ----------------------------------------------------------------

class WordProblemResult(str, Enum):
    EQUAL = "Equal"
    NOT_EQUAL = "NotEqual"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


@dataclass
class WordProblemAnswer:
    result: WordProblemResult
    normal_forms: tuple
    completion: CompletionResult


def word_problem(p: Presentation, u: Word, v: Word, max_degree: int | None = None,
                 max_steps: int | None = None, completion: CompletionResult | None = None) -> WordProblemAnswer:
    """Decide ``u = v`` when possible.

    Normal forms are compared modulo a (possibly truncated) completion.  Equal
    normal forms prove equality.  Different normal forms prove inequality only
    if the completion is complete, or if it processed every ambiguity up to
    ``2 * max(|u|, |v|)`` and every relation is homogeneous, so that no
    derivation between words of the query length can leave that range.
    """
    if p.kind not in ("semigroup", "group", "algebra"):
        raise ValueError(f"word problem needs a monoid or algebra presentation, not {p.kind!r}")
    u, v = tuple(u), tuple(v)
    p.alphabet.check(u)
    p.alphabet.check(v)
    radius = 2 * max(len(u), len(v), 1)
    if completion is None:
        bound = max_degree if max_degree is not None else radius
        completion = shirshov_complete(p.relations, p.order, max_degree=bound, max_steps=max_steps)
    basis = completion.basis
    nu = normal_form(FreePolynomial.word(u), basis, p.order)
    nv = normal_form(FreePolynomial.word(v), basis, p.order)
    if nu == nv:
        result = WordProblemResult.EQUAL
    elif completion.status.complete:
        result = WordProblemResult.NOT_EQUAL
    elif (completion.status.kind == "DegreeBounded" and completion.status.bound >= radius
          and all(r.is_homogeneous() for r in p.relations)):
        result = WordProblemResult.NOT_EQUAL
    else:
        result = WordProblemResult.UNKNOWN
    return WordProblemAnswer(result, (nu, nv), completion)


# -- relation families -------------------------------------------------------------

def _std(n: int) -> Alphabet:
    return Alphabet.standard(n)


def chinese_relation_pairs(n: int) -> list:
    """Instances of the five Chinese families, each ``(family, lhs, rhs)``; 0-based letters."""
    out = []
    for i in range(n):
        for j in range(i):
            for k in range(j):
                out.append((1, (i, j, k), (j, i, k)))
                out.append((2, (i, k, j), (j, i, k)))
                out.append((5, (i, j, i, k), (i, k, i, j)))
        for j in range(i):
            out.append((3, (i, j, j), (j, i, j)))
            out.append((4, (i, i, j), (i, j, i)))
    out.sort(key=lambda t: (t[0], len(t[1]), t[1]))
    return out


def chinese_relations(n: int) -> Presentation:
    alphabet = _std(n)
    order = DegLex(alphabet)
    pairs = [(u, v) for _, u, v in chinese_relation_pairs(n)]
    return Presentation(alphabet, "semigroup", semigroup_to_algebra(pairs, order), order,
                        f"chinese_n{n}", pairs)


def chinese_normal_form(w: Word, n: int) -> Word:
    p = chinese_relations(n)
    nf = normal_form(FreePolynomial.word(tuple(w)), p.relations, p.order)
    (word,) = nf.terms
    return word


def lambda_pattern(n: int) -> re.Pattern:
    """Regex over ``chr(65 + letter)`` strings matching the staircase normal forms."""
    blocks = []
    for m in range(n):
        a = chr(65 + m)
        blocks.append("".join(f"(?:{a}{chr(65 + k)})*" for k in range(m)) + f"{a}*")
    return re.compile("".join(blocks))


def is_lambda_form(w: Word, n: int) -> bool:
    return lambda_pattern(n).fullmatch("".join(chr(65 + a) for a in w)) is not None


def knuth_relation_pairs(n: int) -> list:
    """``x_i x_k x_j = x_k x_i x_j`` (i <= j < k) and ``x_j x_i x_k = x_j x_k x_i`` (i < j <= k)."""
    out = []
    for i in range(n):
        for j in range(i, n):
            for k in range(j + 1, n):
                out.append(((i, k, j), (k, i, j)))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j, n):
                out.append(((j, i, k), (j, k, i)))
    return out


def knuth_relations(n: int) -> Presentation:
    alphabet = _std(n)
    order = DegLex(alphabet)
    pairs = knuth_relation_pairs(n)
    return Presentation(alphabet, "semigroup", semigroup_to_algebra(pairs, order), order,
                        f"knuth_n{n}", pairs)


def grassmann_relations(n: int) -> Presentation:
    alphabet = _std(n)
    order = DegLex(alphabet)
    rels = [FreePolynomial({(i, i): 1}) for i in range(n)]
    rels += [FreePolynomial({(j, i): 1, (i, j): 1}) for j in range(n) for i in range(j)]
    return Presentation(alphabet, "algebra", rels, order, f"grassmann_n{n}")


def clifford_relations(a: Sequence[Sequence]) -> Presentation:
    """``x_i x_j + x_j x_i = a_ij`` for a symmetric rational matrix ``a``."""
    n = len(a)
    alphabet = _std(n)
    order = DegLex(alphabet)
    rels = []
    for j in range(n):
        for i in range(j + 1):
            if Fraction(a[i][j]) != Fraction(a[j][i]):
                raise ValueError("the Clifford form must be symmetric")
            if i == j:
                rels.append(FreePolynomial({(i, i): 1, (): -Fraction(a[i][i]) / 2}))
            else:
                rels.append(FreePolynomial({(j, i): 1, (i, j): 1, (): -Fraction(a[i][j])}))
    return Presentation(alphabet, "algebra", rels, order, f"clifford_n{n}")


def pbw_relations(table: dict, n: int) -> Presentation:
    """Lie algebra from structure constants ``table[(i, j)] = {k: c}`` meaning ``[x_i x_j] = sum c x_k`` (i > j).

    Missing pairs bracket to zero.
    """
    alphabet = _std(n)
    rels = []
    for i in range(n):
        for j in range(i):
            p = FreePolynomial({(i, j): 1, (j, i): -1})
            for k, c in table.get((i, j), {}).items():
                p = p - FreePolynomial({(k,): c})
            rels.append(lie_recognize(p).monic())
    return Presentation(alphabet, "lie", rels, DegLex(alphabet), f"pbw_{n}dim")


def drinfeld_kohno(n: int) -> Presentation:
    """Generators ``t_ij`` (``1 <= i < j <= n - 1``) ordered lexicographically by index pair."""
    if n < 3:
        raise ValueError("n must be at least 3")
    pairs = [(i, j) for i in range(1, n) for j in range(i + 1, n)]
    idx = {p: r for r, p in enumerate(pairs)}
    alphabet = Alphabet(tuple(f"t{i}{j}" if n <= 10 else f"t{i}_{j}" for i, j in pairs))

    def br(a, b):
        x, y = idx[a], idx[b]
        return FreePolynomial({(x, y): 1, (y, x): -1})

    rels = []
    m = n - 1
    for k in range(1, m + 1):
        for i in range(k + 1, m + 1):
            for j in range(i + 1, m + 1):
                for l in range(k + 1, m + 1):
                    if l in (i, j):
                        continue
                    rels.append(br((i, j), (k, l)))
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for k in range(j + 1, m + 1):
                rels.append(br((j, k), (i, j)) + br((i, k), (i, j)))
                rels.append(br((j, k), (i, k)) - br((i, k), (i, j)))
    lie = [lie_recognize(p).monic() for p in rels]
    return Presentation(alphabet, "lie", lie, DegLex(alphabet), f"drinfeld_kohno_n{n}")


def braid_b3() -> Presentation:
    alphabet = _std(2)
    order = DegLex(alphabet)
    pairs = [((1, 0, 1), (0, 1, 0))]
    return Presentation(alphabet, "semigroup", semigroup_to_algebra(pairs, order), order, "braid_b3", pairs)
