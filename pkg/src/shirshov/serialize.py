"""JSON-ready dictionaries for reports and results."""

from __future__ import annotations

from .commutative import CommutativeOrder, CommutativePolynomial, format_monomial
from .engine import CompletionResult, GsReport
from .lyndon import LieElement
from .words import Alphabet


def format_any(p, alphabet: Alphabet, order=None) -> str:
    if isinstance(p, LieElement):
        return p.format(alphabet)
    if isinstance(p, CommutativePolynomial):
        return p.format(alphabet, order if isinstance(order, CommutativeOrder) else None)
    return p.format(alphabet, order)


def _monomial(m, alphabet: Alphabet, commutative: bool) -> str:
    return format_monomial(m, alphabet) if commutative else alphabet.format(m)


def report_to_json(report: GsReport, alphabet: Alphabet) -> dict:
    commutative = report.representation == "commutative"
    order = report.order
    amb = []
    for r in report.records:
        a = r.ambiguity
        amb.append({
            "kind": a.kind,
            "w": _monomial(a.w, alphabet, commutative),
            "a": _monomial(a.left, alphabet, commutative),
            "b": _monomial(a.right, alphabet, commutative),
            "i": a.i,
            "j": a.j,
            "composition": format_any(r.composition, alphabet, order),
            "residue": format_any(r.residue, alphabet, order),
            "trivial": r.trivial,
        })
    return {
        "representation": report.representation,
        "verdict": report.verdict,
        "relations": [format_any(s, alphabet, order) for s in report.relations],
        "ambiguities": amb,
        "notes": list(report.notes),
    }


def completion_to_json(result: CompletionResult, alphabet: Alphabet) -> dict:
    return {
        "status": str(result.status),
        "rounds": result.rounds,
        "added": result.added,
        "basis": [format_any(s, alphabet, result.order) for s in result.basis],
        "added_relations": [format_any(s, alphabet, result.order) for s in result.added_relations],
    }
