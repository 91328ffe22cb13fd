"""Groebner-Shirshov bases for Lie algebras presented inside the free
associative algebra: Lie elimination via special bracketing, Lie compositions,
basis verification and the comparison with the associative check."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .engine import (INCLUSION, INTERSECTION, Ambiguity, AmbiguityRecord, GsReport,
                     all_ambiguities, check_gs_basis)
from .errors import InternalContradictionError, NonMonicError, ZeroPolynomialError
from .lyndon import (LieElement, _standard, expand, expand_substituted, is_alsw, lie_recognize,
                     nlsw_enumerate, special_bracketing_with_path)
from .poly import FreePolynomial
from .reduction import Reducer, RewriteStep
from .words import Alphabet, DegLex, Word, contains

LieAmbiguity = Ambiguity


def as_lie(x) -> LieElement:
    """Accept a :class:`LieElement` or an associative Lie polynomial."""
    if isinstance(x, LieElement):
        return x
    if isinstance(x, FreePolynomial):
        return lie_recognize(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a Lie element")


def _order_for(elems) -> DegLex:
    top = 0
    for e in elems:
        for w in e.coeffs:
            top = max(top, max(w) + 1)
    return DegLex(Alphabet.standard(max(top, 1)))


def _require_monic(S):
    for i, s in enumerate(S):
        if not s:
            raise ZeroPolynomialError(f"relation {i} is zero")
        _, c = s.leading()
        if c != 1:
            raise NonMonicError(f"relation {i} has leading coefficient {c}")


def special_normal_word(s: LieElement, w: Word, position: int) -> FreePolynomial:
    """Expansion of ``[a s b]_{s-bar}`` where ``w = a s-bar b``."""
    lead, _ = s.leading()
    tree, path = special_bracketing_with_path(w, lead, position)
    return expand_substituted(tree, path, s.expand())


@dataclass
class LieReduction:
    remainder: LieElement
    steps: list


def lie_reduce(f, S: Sequence, order: DegLex | None = None) -> LieReduction:
    """Lie elimination of leading words with the associative rewriting strategy."""
    f = as_lie(f)
    S = [as_lie(s) for s in S]
    _require_monic(S)
    if not S:
        return LieReduction(f, [])
    order = order or _order_for([f, *S])
    reducer = Reducer([s.expand() for s in S], order)
    rest = f.expand()
    out = {}
    steps = []
    while rest:
        w = max(rest.terms, key=order.key)
        c = rest.terms[w]
        if not is_alsw(w):
            raise InternalContradictionError(f"leading word {w} of a Lie polynomial is not an ALSW")
        hit = reducer.match(w)
        if hit is None:
            out[w] = c
            rest = rest - expand(_standard(w)).scale(c)
            continue
        i, pos = hit
        steps.append(RewriteStep(c, w[:pos], i, w[pos + len(reducer.leads[i]):]))
        rest = rest - special_normal_word(S[i], w, pos).scale(c)
    return LieReduction(LieElement(out), steps)


def lie_normal_form(f, S: Sequence, order: DegLex | None = None) -> LieElement:
    return lie_reduce(f, S, order).remainder


def lie_composition(f, g, amb: Ambiguity) -> LieElement:
    """Inclusion: ``f - [a g b]_{g-bar}``; intersection: ``[f b]_{f-bar} - [a g]_{g-bar}``."""
    f, g = as_lie(f), as_lie(g)
    fl, _ = f.leading()
    gl, _ = g.leading()
    if amb.kind == INCLUSION:
        if amb.left + gl + amb.right != fl or amb.w != fl:
            raise ValueError("invalid inclusion ambiguity")
        h = f.expand() - special_normal_word(g, amb.w, len(amb.left))
    elif amb.kind == INTERSECTION:
        if (not amb.left or not amb.right or fl + amb.right != amb.w or amb.left + gl != amb.w
                or len(amb.w) >= len(fl) + len(gl)):
            raise ValueError("invalid intersection ambiguity")
        h = special_normal_word(f, amb.w, 0) - special_normal_word(g, amb.w, len(amb.left))
    else:
        raise ValueError(f"unknown ambiguity kind {amb.kind!r}")
    return lie_recognize(h)


def check_lie_gs_basis(S: Sequence, order: DegLex | None = None) -> GsReport:
    S = [as_lie(s) for s in S]
    _require_monic(S)
    order = order or _order_for(S)
    assoc = [s.expand() for s in S]
    records = []
    for amb in all_ambiguities(assoc, order):
        h = lie_composition(S[amb.i], S[amb.j], amb)
        r = lie_normal_form(h, S, order)
        if h and order.key(h.leading()[0]) >= order.key(amb.w):
            raise InternalContradictionError(f"Lie composition at {amb.w} does not drop the leading word")
        records.append(AmbiguityRecord(amb, h, r, not r))
    return GsReport(S, order, records, all(r.trivial for r in records), representation="lie")


def lie_irr(S: Sequence, alphabet: Alphabet | int, max_degree: int) -> list:
    """NLSWs of degree at most ``max_degree`` whose support avoids every leading word."""
    leads = [as_lie(s).leading()[0] for s in S]
    return [t for t in nlsw_enumerate(alphabet, max_degree)
            if not any(contains(t.word, v) for v in leads)]


@dataclass(frozen=True)
class PbwCheck:
    lie: bool
    assoc: bool

    @property
    def agree(self) -> bool:
        return self.lie == self.assoc


def pbw_shirshov_check(S: Sequence, order: DegLex | None = None) -> PbwCheck:
    """Compare the Lie check of ``S`` with the associative check of its expansions."""
    S = [as_lie(s) for s in S]
    order = order or _order_for(S)
    lie = check_lie_gs_basis(S, order).verdict
    assoc = check_gs_basis([s.expand() for s in S], order).verdict
    return PbwCheck(lie, assoc)
