"""Brute-force reference implementations used to cross-check the library.

Nothing here imports the rewriting engine; each oracle works from first
principles (exhaustive search, insertion algorithms, linear algebra).
"""

from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction


# -- linear algebra ---------------------------------------------------------------

class SparseEchelon:
    """Incremental row echelon form over the rationals; rows are dicts."""

    def __init__(self, key=None):
        self.pivots = {}
        self.key = key or (lambda m: m)

    def add(self, row: dict) -> bool:
        """Insert a row; True if it increased the rank."""
        row = {m: Fraction(c) for m, c in row.items() if c}
        while row:
            p = max(row, key=self.key)
            if p not in self.pivots:
                c = row[p]
                self.pivots[p] = {m: v / c for m, v in row.items()}
                return True
            prow = self.pivots[p]
            c = row[p]
            for m, v in prow.items():
                nv = row.get(m, 0) - c * v
                if nv:
                    row[m] = nv
                else:
                    row.pop(m, None)
        return False

    @property
    def rank(self):
        return len(self.pivots)


def all_words(n, max_length):
    for length in range(max_length + 1):
        yield from itertools.product(range(n), repeat=length)


def quotient_dims(relations, n, max_degree):
    """``dim (k<X>/Id(S))_{<= d} - dim (...)_{<= d-1}`` for ``d = 0..max_degree``.

    ``relations`` are dicts word -> coefficient.  The ideal part of the
    filtration is spanned by ``a s b`` with every word of length at most ``d``;
    for a Groebner-Shirshov basis this is the whole intersection.
    """
    ech = SparseEchelon(key=lambda w: (len(w), w))
    out = []
    prev = 0
    for d in range(max_degree + 1):
        for s in relations:
            deg = max(len(w) for w in s)
            for la in range(0, d - deg + 1):
                for lb in range(0, d - deg - la + 1):
                    if la + deg + lb != d:
                        continue
                    for a in itertools.product(range(n), repeat=la):
                        for b in itertools.product(range(n), repeat=lb):
                            ech.add({a + w + b: c for w, c in s.items()})
        total = sum(n ** k for k in range(d + 1))
        dim = total - ech.rank
        out.append(dim - prev)
        prev = dim
    return out


# -- Lie algebra counts -----------------------------------------------------------

def mobius(n):
    res, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            res = -res
        p += 1
    return -res if n > 1 else res


def witt(k, d):
    """Dimension of the degree-``d`` part of the free Lie algebra on ``k`` generators."""
    return sum(mobius(d // e) * k ** e for e in range(1, d + 1) if d % e == 0) // d


def commutator(p, q):
    out = {}
    for u, a in p.items():
        for v, b in q.items():
            out[u + v] = out.get(u + v, 0) + a * b
            out[v + u] = out.get(v + u, 0) - a * b
    return {w: c for w, c in out.items() if c}


def free_lie_span(n, d):
    """Expansions of all left-normed brackets of degree ``d``; spans Lie(X)_d."""
    if d == 1:
        return [{(a,): 1} for a in range(n)]
    out = []
    for p in free_lie_span(n, d - 1):
        for a in range(n):
            c = commutator(p, {(a,): 1})
            if c:
                out.append(c)
    return out


def lie_quotient_dims(relations, n, max_degree):
    """Graded dimensions of Lie(X)/ideal for homogeneous Lie relations (as expansions).

    The ideal in degree ``d`` is spanned by ``[...[s, y1], ..., yk]`` with
    generators ``y``; its dimension is compared against the free Lie dimension.
    """
    chains = {}
    for s in relations:
        deg = len(next(iter(s)))
        chains.setdefault(deg, []).append(s)
    out = []
    for d in range(1, max_degree + 1):
        free = SparseEchelon()
        for p in free_lie_span(n, d):
            free.add(p)
        ideal = SparseEchelon()
        for p in chains.get(d, []):
            ideal.add(p)
        out.append(free.rank - ideal.rank)
        nxt = []
        for p in chains.get(d, []):
            for a in range(n):
                c = commutator(p, {(a,): 1})
                if c:
                    nxt.append(c)
        chains.setdefault(d + 1, []).extend(nxt)
    return out


# -- monoid congruences ---------------------------------------------------------------

def congruence_classes(pairs, n, length):
    """Classes of words of exactly ``length`` letters under length-preserving relations."""
    rules = [(tuple(u), tuple(v)) for u, v in pairs] + [(tuple(v), tuple(u)) for u, v in pairs]
    seen = {}
    classes = []
    for w in itertools.product(range(n), repeat=length):
        if w in seen:
            continue
        cls = {w}
        queue = deque([w])
        while queue:
            x = queue.popleft()
            for u, v in rules:
                k = len(u)
                for i in range(len(x) - k + 1):
                    if x[i:i + k] == u:
                        y = x[:i] + v + x[i + k:]
                        if y not in cls:
                            cls.add(y)
                            queue.append(y)
        idx = len(classes)
        classes.append(cls)
        for x in cls:
            seen[x] = idx
    return classes, seen


def knuth_pairs(n):
    out = []
    for i, j, k in itertools.product(range(n), repeat=3):
        if i <= j < k:
            out.append(((i, k, j), (k, i, j)))
        if i < j <= k:
            out.append(((j, i, k), (j, k, i)))
    return out


def chinese_pairs(n):
    """The defining relations (not the completed basis)."""
    out = []
    for i, j, k in itertools.product(range(n), repeat=3):
        if i > j > k:
            out.append(((i, j, k), (i, k, j)))
            out.append(((i, j, k), (j, i, k)))
    for i, j in itertools.product(range(n), repeat=2):
        if i > j:
            out.append(((i, j, j), (j, i, j)))
            out.append(((i, i, j), (i, j, i)))
    return out


# -- Schensted insertion ------------------------------------------------------------

def schensted(word):
    """Row-insertion tableau, rows listed top (longest) to bottom, English convention."""
    rows = []
    for a in word:
        for row in rows:
            pos = next((i for i, b in enumerate(row) if b > a), None)
            if pos is None:
                row.append(a)
                break
            row[pos], a = a, row[pos]
        else:
            rows.append([a])
    return rows


def tableau_rows_reading(word):
    """Rows in plactic reading order: shortest (top in French) first."""
    return [tuple(r) for r in reversed(schensted(word))]


def tableau_columns(word):
    """Columns left to right, each as a strictly decreasing word."""
    rows = schensted(word)
    if not rows:
        return []
    return [tuple(rows[i][j] for i in reversed(range(len(rows))) if j < len(rows[i]))
            for j in range(len(rows[0]))]
