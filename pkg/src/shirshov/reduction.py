"""Reduction of free polynomials modulo a set of monic relations.

Strategy (fixed, so results are reproducible even when the relations are not
closed under compositions): always rewrite the largest reducible word; among
the relations whose leading word occurs in it pick the one with the smallest
leading word, ties broken by list index; rewrite the leftmost occurrence.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NonMonicError
from .poly import FreePolynomial, leading
from .words import MonomialOrder, Word, find


@dataclass(frozen=True)
class RewriteStep:
    """One elimination ``f -> f - coeff * left * s_relation * right``."""

    coeff: Fraction
    left: Word
    relation: int
    right: Word


@dataclass
class Reduction:
    remainder: FreePolynomial
    steps: list

    def reconstruct(self, relations: Sequence[FreePolynomial]) -> FreePolynomial:
        """``sum coeff * left * s * right`` over the recorded steps."""
        total = FreePolynomial.zero()
        for st in self.steps:
            total = total + relations[st.relation].sandwich(st.left, st.right).scale(st.coeff)
        return total


class Reducer:
    """Precomputed rewriting data for a fixed relation list and order."""

    def __init__(self, relations: Sequence[FreePolynomial], order: MonomialOrder):
        if not order.is_monomial:
            raise ValueError(f"{order.name} is not a monomial order")
        self.order = order
        self.relations = list(relations)
        self.leads = []
        self.tails = []
        for i, s in enumerate(self.relations):
            w, c = leading(s, order)
            if c != 1:
                raise NonMonicError(f"relation {i} has leading coefficient {c}")
            self.leads.append(w)
            self.tails.append([(u, d) for u, d in s.terms.items() if u != w])
        # smallest leading word first, then list index
        self.priority = sorted(range(len(self.relations)),
                               key=lambda i: (order.key(self.leads[i]), i))

    def match(self, w: Word):
        """``(relation index, position)`` of the rewrite applied to ``w``, or None."""
        n = len(w)
        for i in self.priority:
            lead = self.leads[i]
            if len(lead) <= n:
                pos = find(w, lead)
                if pos >= 0:
                    return i, pos
        return None

    def is_irreducible(self, w: Word) -> bool:
        return self.match(w) is None

    def reduce(self, f: FreePolynomial, trace: bool = False) -> Reduction:
        key = self.order.key
        terms = dict(f.terms)
        heap = [(tuple(-x for x in key(w)), w) for w in terms]
        heapq.heapify(heap)
        queued = set(terms)
        out = {}
        steps = []
        while heap:
            _, w = heapq.heappop(heap)
            queued.discard(w)
            c = terms.pop(w, None)
            if c is None:
                continue
            hit = self.match(w)
            if hit is None:
                out[w] = c
                continue
            i, pos = hit
            a, b = w[:pos], w[pos + len(self.leads[i]):]
            if trace:
                steps.append(RewriteStep(c, a, i, b))
            # w = a*lead*b  ->  -c * a*(s - lead)*b
            for u, d in self.tails[i]:
                v = a + u + b
                nc = terms.get(v, 0) - c * d
                if nc:
                    terms[v] = nc
                    if v not in queued:
                        queued.add(v)
                        heapq.heappush(heap, (tuple(-x for x in key(v)), v))
                else:
                    terms.pop(v, None)
        return Reduction(FreePolynomial._raw(out), steps)

    def normal_form(self, f: FreePolynomial) -> FreePolynomial:
        return self.reduce(f).remainder


def normal_form(f: FreePolynomial, S: Sequence[FreePolynomial], order: MonomialOrder) -> FreePolynomial:
    """Reduce ``f`` to a combination of words avoiding every leading word of ``S``."""
    if not S:
        return f
    return Reducer(S, order).normal_form(f)


def reduce_with_trace(f: FreePolynomial, S: Sequence[FreePolynomial], order: MonomialOrder) -> Reduction:
    return Reducer(S, order).reduce(f, trace=True)
