"""Lyndon-Shirshov words: predicates, factorization, elimination, bracketings,
and recognition of Lie polynomials inside the free associative algebra.

Conventions: ``x1 < x2 < ...``; an associative Lyndon-Shirshov word (ALSW) is
strictly greater than each of its proper rotations, and in the lexicographic
order used for factorizations a proper prefix is greater than the word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import (InternalContradictionError, NoEliminationError, NotALieElementError,
                     NotALSWError, ParseError)
from .poly import FreePolynomial, format_terms, lie_bracket
from .words import Alphabet, DegLex, Word, format_word, shirshov_leq, shirshov_less


# -- trees -----------------------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    letter: int

    @property
    def word(self) -> Word:
        return (self.letter,)

    @property
    def degree(self) -> int:
        return 1


@dataclass(frozen=True)
class Node:
    left: "LieTree"
    right: "LieTree"
    word: Word = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "word", self.left.word + self.right.word)

    @property
    def degree(self) -> int:
        return len(self.word)


LieTree = Leaf | Node


def bracket(a, b) -> Node:
    """Build ``[a b]``; integers are promoted to leaves."""
    return Node(Leaf(a) if isinstance(a, int) else a, Leaf(b) if isinstance(b, int) else b)


def format_tree(t: LieTree, alphabet: Alphabet, brackets: str = "()") -> str:
    if isinstance(t, Leaf):
        return alphabet.generators[t.letter]
    o, c = brackets
    return f"{o}{format_tree(t.left, alphabet, brackets)} {format_tree(t.right, alphabet, brackets)}{c}"


_TREE_TOKEN = re.compile(r"\s*(?:([\[\]()])|([A-Za-z_][A-Za-z0-9_]*))")


def parse_tree(text: str, alphabet: Alphabet) -> LieTree:
    """Parse a fully bracketed tree such as ``"((x2 x1) x1)"`` or ``"[[x2 x1] x1]"``."""
    toks, pos = [], 0
    while text[pos:].strip():
        m = _TREE_TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character in tree {text!r}", f"column {pos + 1}")
        toks.append((m.group(1) or m.group(2), m.start()))
        pos = m.end()
    i = 0

    def node():
        nonlocal i
        if i >= len(toks):
            raise ParseError("unexpected end of tree")
        tok, at = toks[i]
        i += 1
        if tok in "([":
            left, right = node(), node()
            close = ")" if tok == "(" else "]"
            if i >= len(toks) or toks[i][0] != close:
                raise ParseError(f"expected {close!r}", f"column {at + 1}")
            i += 1
            return Node(left, right)
        if tok in ")]":
            raise ParseError(f"unexpected {tok!r}", f"column {at + 1}")
        if tok not in alphabet.rank:
            raise ParseError(f"unknown generator {tok!r}", f"column {at + 1}")
        return Leaf(alphabet.rank[tok])

    t = node()
    if i != len(toks):
        raise ParseError("trailing input after tree")
    return t


def tree_to_json(t: LieTree, alphabet: Alphabet):
    if isinstance(t, Leaf):
        return alphabet.generators[t.letter]
    return [tree_to_json(t.left, alphabet), tree_to_json(t.right, alphabet)]


def tree_from_json(obj, alphabet: Alphabet) -> LieTree:
    if isinstance(obj, str):
        return Leaf(alphabet.word(obj)[0]) if obj in alphabet.rank else _bad_leaf(obj)
    if isinstance(obj, list) and len(obj) == 2:
        return Node(tree_from_json(obj[0], alphabet), tree_from_json(obj[1], alphabet))
    raise ParseError(f"bad tree JSON {obj!r}")


def _bad_leaf(name):
    raise ParseError(f"unknown generator {name!r}")


@lru_cache(maxsize=65536)
def expand(t: LieTree) -> FreePolynomial:
    """Associative expansion via ``[u, v] = uv - vu``."""
    if isinstance(t, Leaf):
        return FreePolynomial.word(t.word)
    return lie_bracket(expand(t.left), expand(t.right))


def expand_substituted(t: LieTree, path: tuple, value: FreePolynomial) -> FreePolynomial:
    """Expansion of ``t`` with the subtree at ``path`` (0 = left, 1 = right) replaced by ``value``."""
    if not path:
        return value
    if isinstance(t, Leaf):
        raise ValueError("path leads below a leaf")
    if path[0] == 0:
        return lie_bracket(expand_substituted(t.left, path[1:], value), expand(t.right))
    return lie_bracket(expand(t.left), expand_substituted(t.right, path[1:], value))


def subtree(t: LieTree, path: tuple) -> LieTree:
    for p in path:
        t = t.right if p else t.left
    return t


# -- associative Lyndon-Shirshov words -------------------------------------------

def _nonempty(w):
    if not w:
        raise ValueError("the empty word is not allowed here")


def is_alsw(w: Word) -> bool:
    """``w`` is strictly greater than every proper rotation."""
    _nonempty(w)
    w = tuple(w)
    return all(w > w[k:] + w[:k] for k in range(1, len(w)))


def is_alsw_by_suffixes(w: Word) -> bool:
    """Equivalent test: ``w`` is greater than each proper suffix in the prefix-greater order."""
    _nonempty(w)
    w = tuple(w)
    return all(shirshov_less(w[k:], w) for k in range(1, len(w)))


def shirshov_factorize(w: Word) -> list:
    """Unique factorization into ALSWs ``c1 <= c2 <= ...`` (Duval's algorithm)."""
    _nonempty(w)
    w = tuple(w)
    # standard Lyndon factorization on the reversed alphabet
    s = [-a for a in w]
    n, i, out = len(s), 0, []
    while i < n:
        j, k = i + 1, i
        while j < n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        while i <= k:
            out.append(w[i:i + j - k])
            i += j - k
    return out


def alsw_enumerate(n: int, max_length: int, min_length: int = 1) -> list:
    """All ALSWs over ``n`` letters with length in range, in deg-lex order."""
    out = []
    if n <= 0 or max_length <= 0:
        return out
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m >= min_length:
            out.append(tuple(n - 1 - a for a in w))
        while len(w) < max_length:
            w.append(w[len(w) - m])
        while w and w[-1] == n - 1:
            w.pop()
    return sorted(out, key=lambda u: (len(u), u))


def longest_alsw_suffix(w: Word) -> int:
    """Start index of the longest proper suffix of ``w`` that is an ALSW."""
    for k in range(1, len(w)):
        if is_alsw(w[k:]):
            return k
    raise NotALSWError(f"{w} has no proper ALSW suffix")


# -- elimination -----------------------------------------------------------------

@dataclass(frozen=True)
class Elimination:
    """``letters[r] = (i, j)`` stands for ``x_i x_beta^j``; ``word`` indexes ``letters``.

    ``letters`` lists the derived letters occurring in the word, smallest first.
    """

    beta: int
    letters: tuple
    word: Word


def _derived_key(letter):
    i, j = letter
    return (i, -j)


def eliminate(w: Word) -> Elimination:
    """Join every occurrence of the minimal letter to the preceding letter."""
    _nonempty(w)
    beta = min(w)
    if all(a == beta for a in w):
        raise NoEliminationError(f"{w} is a power of a single letter")
    if w[0] == beta:
        raise NoEliminationError(f"{w} starts with its minimal letter")
    blocks = []
    for a in w:
        if a == beta:
            i, j = blocks[-1]
            blocks[-1] = (i, j + 1)
        else:
            blocks.append((a, 0))
    letters = tuple(sorted(set(blocks), key=_derived_key))
    rank = {x: r for r, x in enumerate(letters)}
    return Elimination(beta, letters, tuple(rank[b] for b in blocks))


def _eliminate_keyed(items: list) -> list:
    """One elimination step on ``[(key, tree), ...]``; trees of the minimal letter are joined."""
    beta = min(k for k, _ in items)
    out = []
    for k, t in items:
        if k == beta:
            pk, pt, j = out[-1]
            out[-1] = (pk, Node(pt, t), j + 1)
        else:
            out.append((k, t, 0))
    return [((k, -j), t) for k, t, j in out]


def standard_bracketing(w: Word) -> LieTree:
    """Down-to-up bracketing of an ALSW by iterated elimination."""
    w = tuple(w)
    _nonempty(w)
    if not is_alsw(w):
        raise NotALSWError(f"{w} is not an ALSW")
    return _standard(w)


@lru_cache(maxsize=65536)
def _standard(w: Word) -> LieTree:
    items = [(a, Leaf(a)) for a in w]
    while len(items) > 1:
        items = _eliminate_keyed(items)
    return items[0][1]


def factor_bracketings(w: Word) -> list:
    """``[c1], [c2], ...`` for the Shirshov factorization of ``w``."""
    return [_standard(c) for c in shirshov_factorize(w)]


def cfl_bracketing(w: Word) -> LieTree:
    """Up-to-down bracketing: split off the longest proper ALSW suffix."""
    w = tuple(w)
    _nonempty(w)
    if not is_alsw(w):
        raise NotALSWError(f"{w} is not an ALSW")
    return _cfl(w)


def _cfl(w):
    if len(w) == 1:
        return Leaf(w[0])
    k = longest_alsw_suffix(w)
    return Node(_cfl(w[:k]), _cfl(w[k:]))


def is_nlsw(t: LieTree) -> bool:
    if isinstance(t, Leaf):
        return True
    if not is_alsw(t.word):
        return False
    if not (is_nlsw(t.left) and is_nlsw(t.right)):
        return False
    if isinstance(t.left, Node) and not shirshov_leq(t.left.right.word, t.right.word):
        return False
    return True


def nlsw_enumerate(alphabet: Alphabet | int, max_degree: int) -> list:
    n = alphabet if isinstance(alphabet, int) else len(alphabet)
    return [_standard(w) for w in alsw_enumerate(n, max_degree)]


# -- special bracketing ----------------------------------------------------------

def _find_span(t: LieTree, start: int, pos: int, end: int, path: tuple):
    """Smallest subtree whose leaf span begins at ``pos`` and reaches ``end``."""
    size = t.degree
    if start > pos or start + size < end:
        return None
    if isinstance(t, Node):
        hit = _find_span(t.left, start, pos, end, path + (0,))
        if hit is None:
            hit = _find_span(t.right, start + t.left.degree, pos, end, path + (1,))
        if hit is not None:
            return hit
    if start == pos:
        return path, t
    return None


def _replace(t: LieTree, path: tuple, new: LieTree) -> LieTree:
    if not path:
        return new
    if path[0] == 0:
        return Node(_replace(t.left, path[1:], new), t.right)
    return Node(t.left, _replace(t.right, path[1:], new))


def special_bracketing_with_path(w: Word, u: Word, position: int):
    """``([w]_u, path)`` where ``path`` locates the subtree ``[u]``."""
    w, u = tuple(w), tuple(u)
    if w[position:position + len(u)] != u or position < 0:
        raise ValueError(f"{u} does not occur in {w} at position {position}")
    if not is_alsw(w):
        raise NotALSWError(f"{w} is not an ALSW")
    if not is_alsw(u):
        raise NotALSWError(f"{u} is not an ALSW")
    full = _standard(w)
    hit = _find_span(full, 0, position, position + len(u), ())
    if hit is None:
        raise InternalContradictionError(f"no subtree of [{w}] starts at {position} and covers {u}")
    path, sub = hit
    c = sub.word[len(u):]
    inner: LieTree = _standard(u)
    upath: tuple = ()
    if c:
        for f in shirshov_factorize(c):
            inner = Node(inner, _standard(f))
            upath = (0,) + upath
    return _replace(full, path, inner), path + upath


def special_bracketing(w: Word, u: Word, position: int) -> LieTree:
    """``[w]_u = [a[...[[u][c1]]...[cn]]d]`` where ``[w] = [a[uc]d]``."""
    return special_bracketing_with_path(w, u, position)[0]


# -- Lie elements ----------------------------------------------------------------

class LieElement:
    """``sum alpha_u [u]`` over NLSWs, keyed by ALSW supports."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        out = {}
        for w, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                out[tuple(w)] = out.get(tuple(w), 0) + c
        self.coeffs = {w: c for w, c in out.items() if c}

    @classmethod
    def basis(cls, w: Word, coeff=1) -> "LieElement":
        w = tuple(w)
        if not is_alsw(w):
            raise NotALSWError(f"{w} is not an ALSW")
        return cls({w: coeff})

    @classmethod
    def from_tree(cls, t: LieTree) -> "LieElement":
        return lie_recognize(expand(t))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, LieElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return LieElement(out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LieElement":
        return LieElement({w: Fraction(c) * d for w, d in self.coeffs.items()})

    def expand(self) -> FreePolynomial:
        total = FreePolynomial.zero()
        for w, c in self.coeffs.items():
            total = total + expand(_standard(w)).scale(c)
        return total

    def leading(self):
        """Leading associative word and its coefficient (deg-lex)."""
        if not self.coeffs:
            raise ValueError("the zero Lie element has no leading word")
        w = max(self.coeffs, key=lambda u: (len(u), u))
        return w, self.coeffs[w]

    def monic(self) -> "LieElement":
        _, c = self.leading()
        return self if c == 1 else self.scale(1 / c)

    def format(self, alphabet: Alphabet) -> str:
        terms = sorted(self.coeffs.items(), key=lambda t: (len(t[0]), t[0]), reverse=True)

        def mono(w):
            return format_tree(_standard(w), alphabet, "[]") if len(w) > 1 else format_word(w, alphabet)
        return format_terms(terms, mono)

    def __repr__(self):
        return f"LieElement({self.coeffs!r})"


def lie_recognize(p: FreePolynomial) -> LieElement:
    """Peel leading words off ``p``; succeeds iff ``p`` is a Lie polynomial.

    Raises :class:`NotALieElementError` with the first residual leading word
    that is not an ALSW.
    """
    order = DegLex(Alphabet.standard(max((max(w) for w in p.terms if w), default=0) + 1))
    out = {}
    rest = p
    while rest:
        w = max(rest.terms, key=order.key)
        c = rest.terms[w]
        if not w or not is_alsw(w):
            raise NotALieElementError(w)
        out[w] = c
        rest = rest - expand(_standard(w)).scale(c)
    return LieElement(out)


def is_lie_polynomial(p: FreePolynomial) -> bool:
    try:
        lie_recognize(p)
    except NotALieElementError:
        return False
    return True


def necklace_count(k: int, m: int) -> int:
    """Number of ALSWs of length ``m`` over ``k`` letters."""
    def mobius(d):
        res, q = 1, 2
        while q * q <= d:
            if d % q == 0:
                d //= q
                if d % q == 0:
                    return 0
                res = -res
            q += 1
        return -res if d > 1 else res
    return sum(mobius(d) * k ** (m // d) for d in range(1, m + 1) if m % d == 0) // m
