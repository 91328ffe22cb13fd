"""Compositions, Groebner-Shirshov basis checks and Shirshov completion
in the free associative algebra."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotClosedError, ZeroPolynomialError
from .poly import FreePolynomial, leading, leading_word, monic, require_monic
from .reduction import Reducer, normal_form
from .words import MonomialOrder, Word, contains, occurrences

log = logging.getLogger(__name__)

INTERSECTION = "intersection"
INCLUSION = "inclusion"


@dataclass(frozen=True)
class Ambiguity:
    """An overlap word ``w`` of two leading words.

    Intersection: ``w = lead(f) * right = left * lead(g)``.
    Inclusion: ``w = lead(f) = left * lead(g) * right``.
    """

    kind: str
    w: Word
    left: Word
    right: Word
    i: int = 0
    j: int = 0

    def sort_key(self, order: MonomialOrder | None = None):
        wk = order.key(self.w) if order is not None else (len(self.w),) + self.w
        return (wk, self.i, self.j, len(self.left), self.kind)


def _leads_ambiguities(u: Word, v: Word, i: int = 0, j: int = 0) -> list:
    """Ambiguities between leading words ``u`` (of f) and ``v`` (of g)."""
    out = []
    nu, nv = len(u), len(v)
    for k in range(1, min(nu, nv)):
        if u[nu - k:] == v[:k]:
            w = u + v[k:]
            out.append(Ambiguity(INTERSECTION, w, u[:nu - k], v[k:], i, j))
    for pos in occurrences(u, v):
        if i == j and pos == 0 and nu == nv:
            continue
        out.append(Ambiguity(INCLUSION, u, u[:pos], u[pos + nv:], i, j))
    out.sort(key=lambda a: (len(a.w), len(a.left), a.kind))
    return out


def find_ambiguities(f: FreePolynomial, g: FreePolynomial, order: MonomialOrder,
                     i: int = 0, j: int = 1) -> list:
    """All intersection and inclusion ambiguities of ``f`` with ``g``.

    Pass ``i == j`` when ``f`` and ``g`` are the same relation so that the
    trivial placement of a word inside itself is skipped.
    """
    if not f or not g:
        raise ZeroPolynomialError("ambiguities of the zero polynomial")
    return _leads_ambiguities(leading_word(f, order), leading_word(g, order), i, j)


def composition(f: FreePolynomial, g: FreePolynomial, amb: Ambiguity) -> FreePolynomial:
    if amb.kind == INTERSECTION:
        return f.sandwich((), amb.right) - g.sandwich(amb.left, ())
    return f - g.sandwich(amb.left, amb.right)


def is_trivial(h: FreePolynomial, S: Sequence[FreePolynomial], w: Word, order: MonomialOrder,
               reducer: Reducer | None = None) -> bool:
    """Whether ``h`` reduces to zero modulo ``S`` using only words below ``w``."""
    if not h:
        return True
    if order.key(leading_word(h, order)) >= order.key(w):
        return False
    reducer = reducer or Reducer(S, order)
    return not reducer.normal_form(h)


@dataclass
class AmbiguityRecord:
    ambiguity: Ambiguity
    composition: FreePolynomial
    residue: FreePolynomial
    trivial: bool


@dataclass
class GsReport:
    relations: list
    order: MonomialOrder
    records: list
    verdict: bool
    representation: str = "associative"
    notes: list = field(default_factory=list)

    def failures(self) -> list:
        return [r for r in self.records if not r.trivial]


def all_ambiguities(S: Sequence[FreePolynomial], order: MonomialOrder) -> list:
    leads = [leading_word(s, order) for s in S]
    out = []
    for i, u in enumerate(leads):
        for j, v in enumerate(leads):
            out.extend(_leads_ambiguities(u, v, i, j))
    out.sort(key=lambda a: a.sort_key(order))
    return out


def check_gs_basis(S: Sequence[FreePolynomial], order: MonomialOrder) -> GsReport:
    """Reduce every composition of every ordered pair (self-pairs included)."""
    S = list(S)
    require_monic(S, order)
    reducer = Reducer(S, order)
    records = []
    for amb in all_ambiguities(S, order):
        h = composition(S[amb.i], S[amb.j], amb)
        residue = reducer.normal_form(h)
        trivial = is_trivial(h, S, amb.w, order, reducer)
        records.append(AmbiguityRecord(amb, h, residue, trivial))
    return GsReport(S, order, records, all(r.trivial for r in records))


def is_gs_basis(S: Sequence[FreePolynomial], order: MonomialOrder) -> bool:
    return check_gs_basis(S, order).verdict


# -- completion ----------------------------------------------------------------

@dataclass(frozen=True)
class Status:
    kind: str  # "Complete" | "DegreeBounded" | "StepBounded"
    bound: int | None = None

    def __str__(self):
        return self.kind if self.bound is None else f"{self.kind}({self.bound})"

    @property
    def complete(self) -> bool:
        return self.kind == "Complete"


COMPLETE = Status("Complete")


@dataclass
class CompletionResult:
    basis: list
    status: Status
    rounds: int
    added: int
    order: MonomialOrder
    added_relations: list = field(default_factory=list)


def interreduce(S: Sequence[FreePolynomial], order: MonomialOrder) -> list:
    """Monic, mutually reduced relations with distinct leading words.

    Deterministic: elements are processed from the smallest leading word up.
    """
    work = [monic(s, order) for s in S if s]
    while True:
        work.sort(key=lambda s: order.key(leading_word(s, order)))
        changed = False
        kept: list = []
        for s in work:
            r = normal_form(s, kept, order) if kept else s
            if r:
                r = monic(r, order)
                if r != s:
                    changed = True
                kept.append(r)
            else:
                changed = True
        # tails against later (larger) elements
        final = []
        for idx, s in enumerate(kept):
            others = kept[:idx] + kept[idx + 1:]
            lw, _ = leading(s, order)
            if others:
                tail = s - FreePolynomial.word(lw)
                nt = normal_form(tail, others, order)
                r = FreePolynomial.word(lw) + nt
                if r != s:
                    changed = True
                s = r
            final.append(s)
        work = final
        if not changed:
            return sorted(work, key=lambda s: order.key(leading_word(s, order)))


def shirshov_complete(S: Sequence[FreePolynomial], order: MonomialOrder,
                      max_degree: int | None = None, max_steps: int | None = None) -> CompletionResult:
    """Adjoin nontrivial composition residues until closure or a limit is hit.

    Each round reduces every not-yet-processed composition of the current
    basis, in increasing order of the ambiguity word, against the basis as it
    stood at the start of the round; nonzero residues are made monic and
    adjoined, and the enlarged set is inter-reduced.  Compositions whose
    ambiguity word is longer than ``max_degree`` are skipped; if any were
    skipped the run cannot be certified complete.
    """
    if max_degree is not None and max_degree < 1:
        raise ValueError("max_degree must be positive")
    if max_steps is not None and max_steps < 1:
        raise ValueError("max_steps must be positive")
    basis = interreduce(S, order)
    original = set(basis)
    processed: set = set()
    rounds = steps = 0
    while True:
        rounds += 1
        reducer = Reducer(basis, order)
        skipped = False
        new = []
        seen_new = set()
        for amb in all_ambiguities(basis, order):
            f, g = basis[amb.i], basis[amb.j]
            tag = (f, g, amb.kind, amb.left, amb.right)
            if tag in processed:
                continue
            if max_degree is not None and len(amb.w) > max_degree:
                skipped = True
                continue
            if max_steps is not None and steps >= max_steps:
                basis = interreduce(basis + new, order) if new else basis
                return _result(basis, Status("StepBounded", max_steps), rounds, original, order)
            steps += 1
            r = reducer.normal_form(composition(f, g, amb))
            if r:
                r = monic(r, order)
                if max_degree is not None and len(leading_word(r, order)) > max_degree:
                    skipped = True
                    continue
            processed.add(tag)
            if r:
                if r not in seen_new:
                    seen_new.add(r)
                    new.append(r)
        if not new:
            status = Status("DegreeBounded", max_degree) if skipped else COMPLETE
            return _result(basis, status, rounds, original, order)
        log.debug("round %d: adjoining %d relations", rounds, len(new))
        basis = interreduce(basis + new, order)


def _result(basis, status, rounds, original, order) -> CompletionResult:
    added = [s for s in basis if s not in original]
    return CompletionResult(basis, status, rounds, len(added), order, added)


def reduced_basis(S: Sequence[FreePolynomial], order: MonomialOrder) -> list:
    """The unique reduced Groebner-Shirshov basis of the ideal generated by ``S``.

    ``S`` must already be closed under compositions.
    """
    S = [monic(s, order) for s in S if s]
    report = check_gs_basis(S, order)
    if not report.verdict:
        bad = report.failures()[0].ambiguity
        raise NotClosedError(f"not a Groebner-Shirshov basis: composition at w={bad.w} is nontrivial")
    leads = [leading_word(s, order) for s in S]
    minimal = []
    for i, s in enumerate(S):
        redundant = False
        for j, v in enumerate(leads):
            if j == i:
                continue
            if v == leads[i]:
                if j < i:
                    redundant = True
            elif contains(leads[i], v):
                redundant = True
            if redundant:
                break
        if not redundant:
            minimal.append(s)
    out = []
    for idx, s in enumerate(minimal):
        rest = minimal[:idx] + minimal[idx + 1:]
        out.append(normal_form(s, rest, order) if rest else s)
    return sorted(out, key=lambda s: order.key(leading_word(s, order)))


def irr(S: Sequence[FreePolynomial], order: MonomialOrder, max_length: int) -> list:
    """Words of length at most ``max_length`` avoiding every leading word, in deg-lex order."""
    leads = [leading_word(s, order) for s in S if s]
    n = len(order.alphabet)
    level = [()] if not any(len(v) == 0 for v in leads) else []
    out = list(level)
    for _ in range(max_length):
        nxt = []
        for w in level:
            for a in range(n):
                u = w + (a,)
                # prefixes already avoid every lead; only suffixes can match
                if not any(len(v) <= len(u) and u[len(u) - len(v):] == v for v in leads):
                    nxt.append(u)
        out.extend(nxt)
        level = nxt
    return sorted(out, key=lambda w: (len(w), w))


def ideal_linear_basis(S: Sequence[FreePolynomial], order: MonomialOrder, max_length: int) -> list:
    """``u - nf(u)`` for every reducible word ``u`` with ``|u| <= max_length``."""
    S = list(S)
    if not S:
        return []
    if not check_gs_basis(S, order).verdict:
        raise NotClosedError("ideal_linear_basis needs a Groebner-Shirshov basis")
    reducer = Reducer(S, order)
    n = len(order.alphabet)
    out = []
    level = [()]
    for length in range(max_length + 1):
        if length:
            level = [w + (a,) for w in level for a in range(n)]
        for u in sorted(level):
            if not reducer.is_irreducible(u):
                p = FreePolynomial.word(u)
                out.append(p - reducer.normal_form(p))
    return out
