"""Exact-rational polynomials in the free associative algebra."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import NonMonicError, ParseError, ZeroPolynomialError
from .words import Alphabet, MonomialOrder, Word, format_word


def _q(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floating-point coefficients are not allowed")
    return Fraction(c)


class FreePolynomial:
    """A finite linear combination of words with rational coefficients.

    Instances are treated as immutable values; zero coefficients are never
    stored.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out = {}
        for w, c in items:
            w = tuple(w)
            c = out.get(w, 0) + _q(c)
            if c:
                out[w] = c
            else:
                out.pop(w, None)
        self.terms = out
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "FreePolynomial":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def word(cls, w: Word, coeff=1) -> "FreePolynomial":
        return cls({tuple(w): coeff})

    @classmethod
    def constant(cls, c) -> "FreePolynomial":
        return cls({(): c})

    @classmethod
    def zero(cls) -> "FreePolynomial":
        return cls._raw({})

    # -- container protocol
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.terms)

    def items(self):
        return self.terms.items()

    def coefficient(self, w: Word) -> Fraction:
        return self.terms.get(tuple(w), Fraction(0))

    def support(self) -> set:
        return set(self.terms)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self.terms}) <= 1

    # -- arithmetic
    def __eq__(self, other):
        if isinstance(other, FreePolynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return FreePolynomial._raw({w: -c for w, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, FreePolynomial):
            other = FreePolynomial.constant(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            c = out.get(w, 0) + c
            if c:
                out[w] = c
            else:
                del out[w]
        return FreePolynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, FreePolynomial):
            other = FreePolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "FreePolynomial":
        c = _q(c)
        if not c:
            return FreePolynomial.zero()
        return FreePolynomial._raw({w: c * d for w, d in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, FreePolynomial):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def sandwich(self, a: Word, b: Word) -> "FreePolynomial":
        """``a * self * b`` for words ``a`` and ``b``."""
        a, b = tuple(a), tuple(b)
        return FreePolynomial._raw({a + w + b: c for w, c in self.terms.items()})

    # -- ordered views
    def leading(self, order: MonomialOrder):
        return leading(self, order)

    def sorted_terms(self, order: MonomialOrder) -> list:
        """Terms from the largest word down."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def format(self, alphabet: Alphabet, order: MonomialOrder | None = None) -> str:
        if order is None:
            from .words import DegLex
            order = DegLex(alphabet)
        return format_terms(self.sorted_terms(order), lambda w: format_word(w, alphabet))

    def __repr__(self):
        if not self.terms:
            return "FreePolynomial(0)"
        inner = ", ".join(f"{w}: {c}" for w, c in self.terms.items())
        return f"FreePolynomial({{{inner}}})"


def format_terms(terms, fmt_monomial) -> str:
    """Render ``[(monomial, coeff), ...]`` as ``c1*m1 + c2*m2 - ...``."""
    if not terms:
        return "0"
    parts = []
    for k, (m, c) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = fmt_monomial(m)
        if mono == "1":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def multiply(p: FreePolynomial, q: FreePolynomial) -> FreePolynomial:
    out: dict = {}
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            w = u + v
            c = out.get(w, 0) + a * b
            if c:
                out[w] = c
            else:
                del out[w]
    return FreePolynomial._raw(out)


def lie_bracket(p: FreePolynomial, q: FreePolynomial) -> FreePolynomial:
    """``[p, q] = pq - qp``."""
    return multiply(p, q) - multiply(q, p)


def leading(p: FreePolynomial, order: MonomialOrder):
    """The order-maximal word of ``p`` with its coefficient."""
    if not p.terms:
        raise ZeroPolynomialError("the zero polynomial has no leading word")
    w = max(p.terms, key=order.key)
    return w, p.terms[w]


def leading_word(p: FreePolynomial, order: MonomialOrder) -> Word:
    return leading(p, order)[0]


def monic(p: FreePolynomial, order: MonomialOrder) -> FreePolynomial:
    _, c = leading(p, order)
    return p if c == 1 else p.scale(1 / c)


def require_monic(polys, order: MonomialOrder) -> list:
    """Leading words of ``polys``; raises unless every element is monic."""
    leads = []
    for i, s in enumerate(polys):
        w, c = leading(s, order)
        if c != 1:
            raise NonMonicError(f"relation {i} has leading coefficient {c}")
        leads.append(w)
    return leads


# -- text syntax ---------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\^-1)?)|(?P<op>[-+*\[\]()]))")


def tokenize(text: str) -> list:
    text = text.replace("−", "-")
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}", f"column {pos + 1}")
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.text = text
        self.alphabet = alphabet
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, message):
        raise ParseError(message, f"column {self.peek()[2] + 1}")

    def expr(self) -> FreePolynomial:
        total = FreePolynomial.zero()
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            self.take()
        total = total + self.term().scale(sign)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                total = total + self.term().scale(-1 if val == "-" else 1)
            else:
                break
        return total

    def term(self) -> FreePolynomial:
        out = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                out = out * self.factor()
            elif kind in ("num", "name") or (kind == "op" and val in "[("):
                out = out * self.factor()
            else:
                return out

    def factor(self) -> FreePolynomial:
        kind, val, _ = self.peek()
        if kind == "num":
            self.take()
            return FreePolynomial.constant(Fraction(val))
        if kind == "name":
            self.take()
            if val not in self.alphabet.rank:
                self.fail(f"unknown generator {val!r}")
            return FreePolynomial.word((self.alphabet.rank[val],))
        if kind == "op" and val in "[(":
            self.take()
            close = "]" if val == "[" else ")"
            left = self.operand()
            right = self.operand()
            k2, v2, _ = self.peek()
            if k2 != "op" or v2 != close:
                self.fail(f"expected {close!r}")
            self.take()
            return lie_bracket(left, right)
        self.fail("expected a coefficient, generator or bracket")

    def operand(self) -> FreePolynomial:
        kind, val, _ = self.peek()
        if kind == "name" or (kind == "op" and val in "[("):
            return self.factor()
        self.fail("bracket operands must be generators or brackets")


def parse_polynomial(text: str, alphabet: Alphabet) -> FreePolynomial:
    """Parse ``"c1*w1 + c2*w2 - ..."``; ``[u v]`` and ``(u v)`` denote Lie brackets."""
    p = _Parser(text, alphabet)
    if not p.toks:
        raise ParseError("empty polynomial")
    out = p.expr()
    if p.i != len(p.toks):
        p.fail("trailing input")
    return out
