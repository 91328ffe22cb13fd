"""Commutative polynomials, Buchberger's algorithm, and the lift of a commutative
Groebner basis to a Groebner-Shirshov basis of the free associative algebra
(Eisenbud, Peeva and Sturmfels)."""

from __future__ import annotations

import heapq
import logging
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .engine import (COMPLETE, Ambiguity, AmbiguityRecord, CompletionResult, GsReport,
                     Status)
from .errors import InfiniteULError, NonMonicError, NotClosedError, ParseError, ZeroPolynomialError
from .poly import FreePolynomial, format_terms
from .words import Alphabet, EpsOrder, Word

log = logging.getLogger(__name__)

ExponentVector = tuple

S_POLYNOMIAL = "s-polynomial"


class CommutativeOrder:
    """Monomial order on exponent vectors; the last generator is the largest variable."""

    def __init__(self, alphabet: Alphabet, kind: str = "deglex"):
        kind = kind.lower().replace("-", "")
        if kind not in ("deglex", "lex"):
            raise ParseError(f"unknown commutative order {kind!r}")
        self.alphabet = alphabet
        self.kind = kind

    def key(self, e: ExponentVector) -> tuple:
        rev = tuple(reversed(e))
        if self.kind == "lex":
            return rev
        return (sum(e),) + rev

    def __eq__(self, other):
        return isinstance(other, CommutativeOrder) and (self.alphabet, self.kind) == (other.alphabet, other.kind)

    def __hash__(self):
        return hash((self.alphabet, self.kind))

    def __repr__(self):
        return f"CommutativeOrder({self.kind!r})"


class CommutativePolynomial:
    """Rational linear combination of exponent vectors (no zero coefficients)."""

    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms: Mapping | Iterable, nvars: int):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent vector {e} has wrong length")
            c = out.get(e, 0) + Fraction(c)
            if c:
                out[e] = c
            else:
                out.pop(e, None)
        self.terms = out
        self.nvars = nvars
        self._hash = None

    @classmethod
    def monomial(cls, e, coeff=1):
        return cls({tuple(e): coeff}, len(e))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, CommutativePolynomial) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            c = out.get(e, 0) + c
            if c:
                out[e] = c
            else:
                del out[e]
        p = CommutativePolynomial({}, self.nvars)
        p.terms = out
        return p

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return CommutativePolynomial({e: c * d for e, d in self.terms.items()} if c else {}, self.nvars)

    def shift(self, e: ExponentVector, c=1):
        """``c * x^e * self``."""
        c = Fraction(c)
        return CommutativePolynomial(
            {tuple(a + b for a, b in zip(e, f)): c * d for f, d in self.terms.items()}, self.nvars)

    def __mul__(self, other):
        if not isinstance(other, CommutativePolynomial):
            return self.scale(other)
        out = CommutativePolynomial({}, self.nvars)
        for e, c in other.terms.items():
            out = out + self.shift(e, c)
        return out

    def leading(self, order: CommutativeOrder):
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading monomial")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order):
        _, c = self.leading(order)
        return self if c == 1 else self.scale(1 / c)

    def format(self, alphabet: Alphabet, order: CommutativeOrder | None = None) -> str:
        order = order or CommutativeOrder(alphabet)
        terms = sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)
        return format_terms(terms, lambda e: format_monomial(e, alphabet))

    def __repr__(self):
        return f"CommutativePolynomial({self.terms!r})"


def format_monomial(e: ExponentVector, alphabet: Alphabet) -> str:
    parts = []
    for g, k in zip(alphabet.generators, e):
        if k == 1:
            parts.append(g)
        elif k > 1:
            parts.append(f"{g}^{k}")
    return " ".join(parts) or "1"


_CTOK = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^]))")


def parse_commutative(text: str, alphabet: Alphabet) -> CommutativePolynomial:
    """Parse ``"x1^2 x3 - 1/2*x2"``-style text."""
    text = text.replace("−", "-")
    toks, pos = [], 0
    while pos < len(text) and text[pos:].strip():
        m = _CTOK.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character in {text!r}", f"column {pos + 1}")
        toks.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        pos = m.end()
    n = len(alphabet)
    total = CommutativePolynomial({}, n)
    i, sign = 0, 1
    coeff, exps = Fraction(1), [0] * n
    seen_factor = False

    def flush():
        nonlocal total
        total = total + CommutativePolynomial({tuple(exps): sign * coeff}, n)

    while i < len(toks):
        kind, val, at = toks[i]
        if kind == "op" and val in "+-":
            if seen_factor:
                flush()
            elif i:
                raise ParseError("dangling operator", f"column {at + 1}")
            sign = -1 if val == "-" else 1
            coeff, exps, seen_factor = Fraction(1), [0] * n, False
            i += 1
            continue
        if kind == "num":
            coeff *= Fraction(val)
            seen_factor = True
        elif kind == "name":
            if val not in alphabet.rank:
                raise ParseError(f"unknown generator {val!r}", f"column {at + 1}")
            power = 1
            if i + 1 < len(toks) and toks[i + 1][1] == "^":
                if i + 2 >= len(toks) or toks[i + 2][0] != "num" or "/" in toks[i + 2][1]:
                    raise ParseError("bad exponent", f"column {at + 1}")
                power = int(toks[i + 2][1])
                i += 2
            exps[alphabet.rank[val]] += power
            seen_factor = True
        elif val == "*":
            pass
        else:
            raise ParseError(f"unexpected {val!r}", f"column {at + 1}")
        i += 1
    if not seen_factor:
        raise ParseError(f"empty term in {text!r}")
    flush()
    return total


def divides(a: ExponentVector, b: ExponentVector) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    return tuple(max(x, y) for x, y in zip(a, b))


def coprime(a: ExponentVector, b: ExponentVector) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _lead(p, order):
    return p.leading(order)[0]


def _require_monic(S, order):
    for i, s in enumerate(S):
        _, c = s.leading(order)
        if c != 1:
            raise NonMonicError(f"relation {i} has leading coefficient {c}")


def s_polynomial(f: CommutativePolynomial, g: CommutativePolynomial, order: CommutativeOrder):
    """``f*a - g*b`` with ``lead(f)*a = lead(g)*b = lcm``; None for coprime leading monomials."""
    if not f or not g:
        raise ZeroPolynomialError("s-polynomial of the zero polynomial")
    u, v = _lead(f, order), _lead(g, order)
    if coprime(u, v):
        return None
    w = lcm(u, v)
    a = tuple(x - y for x, y in zip(w, u))
    b = tuple(x - y for x, y in zip(w, v))
    return f.shift(a) - g.shift(b)


def reduce(f: CommutativePolynomial, S: Sequence[CommutativePolynomial], order: CommutativeOrder):
    """Full reduction by divisibility, largest monomial first."""
    if not S:
        return f
    _require_monic(S, order)
    leads = [_lead(s, order) for s in S]
    priority = sorted(range(len(S)), key=lambda i: (order.key(leads[i]), i))
    terms = dict(f.terms)
    heap = [tuple(-x for x in order.key(e)) + (e,) for e in terms]
    heapq.heapify(heap)
    queued = set(terms)
    out = {}
    while heap:
        e = heapq.heappop(heap)[-1]
        queued.discard(e)
        c = terms.pop(e, None)
        if c is None:
            continue
        hit = next((i for i in priority if divides(leads[i], e)), None)
        if hit is None:
            out[e] = c
            continue
        q = tuple(x - y for x, y in zip(e, leads[hit]))
        for u, d in S[hit].terms.items():
            if u == leads[hit]:
                continue
            v = tuple(x + y for x, y in zip(u, q))
            nc = terms.get(v, 0) - c * d
            if nc:
                terms[v] = nc
                if v not in queued:
                    queued.add(v)
                    heapq.heappush(heap, tuple(-x for x in order.key(v)) + (v,))
            else:
                terms.pop(v, None)
    p = CommutativePolynomial({}, f.nvars)
    p.terms = out
    return p


def check_groebner(S: Sequence[CommutativePolynomial], order: CommutativeOrder) -> GsReport:
    """Reduce the s-polynomial of every pair; coprime pairs are reduced as a spot check."""
    S = list(S)
    _require_monic(S, order)
    records = []
    notes = []
    for i in range(len(S)):
        for j in range(i + 1, len(S)):
            u, v = _lead(S[i], order), _lead(S[j], order)
            h = s_polynomial(S[i], S[j], order)
            w = lcm(u, v)
            amb = Ambiguity(S_POLYNOMIAL, w, tuple(x - y for x, y in zip(w, u)),
                            tuple(x - y for x, y in zip(w, v)), i, j)
            if h is None:
                # product criterion says zero; reduce it anyway as a spot check
                h = S[i].shift(amb.left) - S[j].shift(amb.right)
                notes.append(f"coprime pair ({i}, {j}) spot-checked")
            r = reduce(h, S, order)
            records.append(AmbiguityRecord(amb, h, r, not r))
    verdict = all(r.trivial for r in records)
    return GsReport(S, order, records, verdict, representation="commutative", notes=notes)


def _interreduce(S, order):
    work = [s.monic(order) for s in S if s]
    while True:
        work.sort(key=lambda s: order.key(_lead(s, order)))
        changed = False
        out = []
        for idx, s in enumerate(work):
            others = [t for k, t in enumerate(work) if k != idx and t is not None]
            r = reduce(s, others, order)
            if r:
                r = r.monic(order)
            if r != s:
                changed = True
                work[idx] = r if r else None
            if r:
                out.append(r)
            else:
                work[idx] = None
        work = out
        if not changed:
            return sorted(work, key=lambda s: order.key(_lead(s, order)))


def buchberger(S: Sequence[CommutativePolynomial], order: CommutativeOrder,
               max_degree: int | None = None, max_steps: int | None = None) -> CompletionResult:
    """Buchberger completion with the same bookkeeping as :func:`shirshov_complete`."""
    basis = _interreduce(S, order)
    original = set(basis)
    processed: set = set()
    rounds = steps = 0
    while True:
        rounds += 1
        skipped = False
        new = []
        pairs = []
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                u, v = _lead(basis[i], order), _lead(basis[j], order)
                if coprime(u, v):
                    continue
                pairs.append((order.key(lcm(u, v)), i, j))
        pairs.sort()
        for _, i, j in pairs:
            f, g = basis[i], basis[j]
            if (f, g) in processed:
                continue
            w = lcm(_lead(f, order), _lead(g, order))
            if max_degree is not None and sum(w) > max_degree:
                skipped = True
                continue
            if max_steps is not None and steps >= max_steps:
                basis = _interreduce(basis + new, order) if new else basis
                return _cresult(basis, Status("StepBounded", max_steps), rounds, original, order)
            steps += 1
            processed.add((f, g))
            r = reduce(s_polynomial(f, g, order), basis, order)
            if r:
                r = r.monic(order)
                if r not in new:
                    new.append(r)
        if not new:
            return _cresult(basis, Status("DegreeBounded", max_degree) if skipped else COMPLETE,
                            rounds, original, order)
        basis = _interreduce(basis + new, order)


def _cresult(basis, status, rounds, original, order):
    added = [s for s in basis if s not in original]
    return CompletionResult(basis, status, rounds, len(added), order, added)


def reduced_groebner(S: Sequence[CommutativePolynomial], order: CommutativeOrder) -> list:
    S = [s.monic(order) for s in S if s]
    if not check_groebner(S, order).verdict:
        raise NotClosedError("not a Groebner basis")
    leads = [_lead(s, order) for s in S]
    minimal = []
    for i, s in enumerate(S):
        if any(j != i and divides(leads[j], leads[i]) and (leads[j] != leads[i] or j < i)
               for j in range(len(S))):
            continue
        minimal.append(s)
    out = [reduce(s, minimal[:k] + minimal[k + 1:], order) for k, s in enumerate(minimal)]
    return sorted(out, key=lambda s: order.key(_lead(s, order)))


def standard_monomials(S: Sequence[CommutativePolynomial], order: CommutativeOrder, degree: int) -> list:
    """Exponent vectors of total degree ``degree`` not divisible by any leading monomial."""
    n = len(order.alphabet)
    leads = [_lead(s, order) for s in S if s]
    return [e for e in exponent_vectors(n, degree) if not any(divides(u, e) for u in leads)]


def exponent_vectors(n: int, degree: int):
    if n == 0:
        if degree == 0:
            yield ()
        return
    for k in range(degree, -1, -1):
        for rest in exponent_vectors(n - 1, degree - k):
            yield (k,) + rest


# -- lifting to the free associative algebra -------------------------------------

def gamma(w: Word, n: int) -> ExponentVector:
    """Commutative image of a word."""
    e = [0] * n
    for a in w:
        e[a] += 1
    return tuple(e)


def delta_split(u: ExponentVector) -> Word:
    """The non-decreasing word with content ``u``."""
    return tuple(i for i, k in enumerate(u) for _ in range(k))


def delta(p: CommutativePolynomial) -> FreePolynomial:
    return FreePolynomial({delta_split(e): c for e, c in p.terms.items()})


def commutators(n: int) -> list:
    """``x_i x_j - x_j x_i`` for ``i > j``."""
    return [FreePolynomial({(i, j): 1, (j, i): -1}) for i in range(n) for j in range(i)]


def upper_set_UL(m: ExponentVector, leads: Sequence[ExponentVector], cap: int = 64,
                 relation=None) -> list:
    """Monomials ``u`` in the variables strictly between the smallest and largest
    variable of ``m`` such that neither ``u*m/x_first`` nor ``u*m/x_last`` lies in
    the monomial ideal generated by ``leads``."""
    support = [i for i, k in enumerate(m) if k]
    if not support:
        return [tuple(0 for _ in m)]
    first, last = support[0], support[-1]
    window = range(first + 1, last)
    drop_first = list(m)
    drop_first[first] -= 1
    drop_last = list(m)
    drop_last[last] -= 1

    def in_ideal(e):
        return any(divides(v, e) for v in leads)

    def ok(u):
        a = tuple(x + y for x, y in zip(u, drop_first))
        b = tuple(x + y for x, y in zip(u, drop_last))
        return not in_ideal(a) and not in_ideal(b)

    one = tuple(0 for _ in m)
    if not ok(one):
        return []
    found = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for u in frontier:
            for v in window:
                e = list(u)
                e[v] += 1
                e = tuple(e)
                if e in found or not ok(e):
                    continue
                if e[v] > cap:
                    raise InfiniteULError(relation if relation is not None else m,
                                          f"U_L({m}) exceeds exponent cap {cap} in variable {v}")
                found.add(e)
                nxt.append(e)
        frontier = nxt
    return sorted(found, key=lambda e: (sum(e), tuple(reversed(e))))


def eps_order(order: CommutativeOrder) -> EpsOrder:
    return EpsOrder(order.alphabet, order)


def eps_lift(G: Sequence[CommutativePolynomial], order: CommutativeOrder, cap: int = 64) -> list:
    """Lift a minimal commutative Groebner basis to a Groebner-Shirshov basis of
    ``gamma^{-1}(Id(G))`` under :func:`eps_order`.

    The input is first replaced by the reduced Groebner basis of its ideal.
    """
    n = len(order.alphabet)
    reduced = reduced_groebner(G, order) if G else []
    if set(reduced) != {g.monic(order) for g in G if g}:
        log.info("eps_lift: input normalized to the reduced Groebner basis")
    leads = [_lead(s, order) for s in reduced]
    lifted = []
    for s, m in zip(reduced, leads):
        label = s.format(order.alphabet, order)
        for u in upper_set_UL(m, leads, cap, relation=label):
            lifted.append(delta(s.shift(u)))
    lifted.extend(commutators(n))
    eo = eps_order(order)
    return sorted(lifted, key=lambda p: eo.key(max(p.terms, key=eo.key)))
