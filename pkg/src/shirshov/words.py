"""Words over a totally ordered alphabet and the orderings used to compare them.

A word is a plain tuple of generator ranks; rank 0 is the smallest generator.
The empty tuple is the identity word ``1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetMismatchError, ParseError

Word = tuple

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(?:\^-1)?$")


@dataclass(frozen=True)
class Alphabet:
    """Generator names listed in increasing order."""

    generators: tuple
    rank: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate generator names in {gens}")
        for g in gens:
            if not isinstance(g, str) or not _NAME.match(g):
                raise ValueError(f"invalid generator name {g!r}")
        object.__setattr__(self, "rank", {g: i for i, g in enumerate(gens)})

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> "Alphabet":
        """``x1 < x2 < ... < xn``."""
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def word(self, text: str) -> Word:
        return parse_word(text, self)

    def format(self, w: Word) -> str:
        return format_word(w, self)

    def words(self, length: int) -> Iterator[Word]:
        """All words of exactly ``length`` letters, in lexicographic order."""
        if length == 0:
            yield ()
            return
        for w in self.words(length - 1):
            for a in range(len(self)):
                yield w + (a,)

    def check(self, w: Word) -> None:
        n = len(self.generators)
        for a in w:
            if not (0 <= a < n):
                raise AlphabetMismatchError(
                    f"letter index {a} outside alphabet of size {n}")


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse whitespace-separated generator names; ``"1"`` is the empty word."""
    tokens = text.split()
    if tokens == ["1"] or not tokens:
        return ()
    try:
        return tuple(alphabet.rank[t] for t in tokens)
    except KeyError as exc:
        raise ParseError(f"unknown generator {exc.args[0]!r} in {text!r}") from None


def format_word(w: Word, alphabet: Alphabet) -> str:
    if not w:
        return "1"
    return " ".join(alphabet.generators[a] for a in w)


def occurrences(w: Sequence[int], u: Sequence[int]) -> Iterator[int]:
    """Start positions of ``u`` inside ``w``, left to right."""
    m = len(u)
    first = u[0] if m else None
    for i in range(len(w) - m + 1):
        if m == 0 or (w[i] == first and tuple(w[i:i + m]) == tuple(u)):
            yield i


def find(w: Sequence[int], u: Sequence[int]) -> int:
    """Leftmost position of ``u`` in ``w`` or -1."""
    for i in occurrences(w, u):
        return i
    return -1


def contains(w: Sequence[int], u: Sequence[int]) -> bool:
    return find(w, u) >= 0


# -- orderings ---------------------------------------------------------------

LESS, EQUAL, GREATER = -1, 0, 1


class MonomialOrder:
    """Base class for word orders.

    Subclasses provide :meth:`key`, a flat tuple of integers whose natural
    tuple ordering agrees with the word ordering.
    """

    name = "abstract"
    is_monomial = True

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet

    def key(self, w: Word) -> tuple:
        raise NotImplementedError

    def compare(self, u: Word, v: Word) -> int:
        self.alphabet.check(u)
        self.alphabet.check(v)
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def max(self, words: Iterable[Word]) -> Word:
        return max(words, key=self.key)

    def sorted(self, words: Iterable[Word], reverse: bool = False) -> list:
        return sorted(words, key=self.key, reverse=reverse)

    def spec(self) -> dict:
        return {"type": self.name}

    def __eq__(self, other):
        return (type(self) is type(other) and self.alphabet == other.alphabet
                and self.spec() == other.spec())

    def __hash__(self):
        return hash((type(self).__name__, self.alphabet))

    def __repr__(self):
        return f"{type(self).__name__}({list(self.alphabet.generators)})"


class DegLex(MonomialOrder):
    """Length first, then left-to-right letter comparison."""

    name = "deglex"

    def key(self, w):
        return (len(w),) + tuple(w)


class ShirshovLex(MonomialOrder):
    """Pure lexicographic order in which a word is greater than its extensions.

    ``u > uv`` for every nonempty ``v``; the empty word is the greatest.
    Not a monomial order, so never used for reduction.
    """

    name = "lex"
    is_monomial = False

    def key(self, w):
        return tuple(w) + (len(self.alphabet),)


class EpsOrder(MonomialOrder):
    """Compare commutative images first, then words lexicographically.

    ``commutative`` is a :class:`shirshov.commutative.CommutativeOrder` on
    exponent vectors over the same alphabet.
    """

    name = "eps"

    def __init__(self, alphabet, commutative=None):
        super().__init__(alphabet)
        if commutative is None:
            from .commutative import CommutativeOrder
            commutative = CommutativeOrder(alphabet, "deglex")
        self.commutative = commutative

    def key(self, w):
        exps = [0] * len(self.alphabet)
        for a in w:
            exps[a] += 1
        return self.commutative.key(tuple(exps)) + tuple(w)

    def spec(self):
        return {"type": self.name, "commutative": self.commutative.kind}


def compare_words(order: MonomialOrder, u: Word, v: Word) -> int:
    """Return -1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
    return order.compare(u, v)


def shirshov_less(u: Word, v: Word) -> bool:
    """``u`` strictly below ``v`` in the lex order with prefixes greatest."""
    for a, b in zip(u, v):
        if a != b:
            return a < b
    return len(u) > len(v)


def shirshov_leq(u: Word, v: Word) -> bool:
    return u == v or shirshov_less(u, v)


def make_order(spec, alphabet: Alphabet) -> MonomialOrder:
    """Build an order from a name or a ``{"type": ...}`` mapping."""
    if isinstance(spec, MonomialOrder):
        return spec
    if spec is None:
        spec = "deglex"
    if isinstance(spec, str):
        spec = {"type": spec}
    kind = str(spec.get("type", "deglex")).lower().replace("-", "")
    if kind == "deglex":
        return DegLex(alphabet)
    if kind in ("lex", "shirshovlex"):
        return ShirshovLex(alphabet)
    if kind == "eps":
        from .commutative import CommutativeOrder
        return EpsOrder(alphabet, CommutativeOrder(alphabet, spec.get("commutative", "deglex")))
    raise ParseError(f"unknown order type {spec.get('type')!r}")
