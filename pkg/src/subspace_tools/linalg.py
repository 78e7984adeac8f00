"""Small exact linear algebra over Q (row reduction on Fraction matrices)."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = list
Matrix = list


def to_fractions(rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = to_fractions(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    rows = list(rows)
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : rows @ x = 0}."""
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def row_basis(vectors: Sequence[Sequence]) -> list[list[Fraction]]:
    """An echelon basis of the span of ``vectors`` (empty for the zero space)."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    return rref(vectors)[0]


def independent_subset(vectors: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal independent subset, chosen greedily in order."""
    chosen: list[int] = []
    current: list = []
    r = 0
    for i, v in enumerate(vectors):
        trial = current + [list(v)]
        rt = rank(trial)
        if rt > r:
            chosen.append(i)
            current = trial
            r = rt
    return chosen


def in_span(v: Sequence, vectors: Sequence[Sequence]) -> bool:
    if all(Fraction(x) == 0 for x in v):
        return True
    if not vectors:
        return False
    return v in Span(vectors)


def is_subspace(inner: Sequence[Sequence], outer: Sequence[Sequence]) -> bool:
    if not inner:
        return True
    span = Span(outer) if outer else Span([])
    return all(v in span for v in inner)


def intersect(a: Sequence[Sequence], b: Sequence[Sequence], dim: int) -> list[list[Fraction]]:
    """Basis of span(a) ∩ span(b) inside Q^dim."""
    a = row_basis(a)
    b = row_basis(b)
    if not a or not b:
        return []
    # solve sum s_i a_i - sum t_j b_j = 0
    cols = [list(v) for v in a] + [[-x for x in v] for v in b]
    system = [[cols[k][i] for k in range(len(cols))] for i in range(dim)]
    out = []
    for sol in nullspace(system, len(cols)):
        w = [sum(sol[k] * a[k][i] for k in range(len(a))) for i in range(dim)]
        out.append(w)
    return row_basis(out) if out else []


def extend_to_basis(partial: Sequence[Sequence], space: Sequence[Sequence]) -> list[list[Fraction]]:
    """Vectors from ``space`` (in order) that extend ``partial`` to a basis of span(space)."""
    current = [list(v) for v in partial]
    r = rank(current) if current else 0
    added = []
    for v in row_basis(space):
        trial = current + [v]
        if rank(trial) > r:
            current = trial
            added.append(v)
            r += 1
    return added


def mat_vec(m, v):
    return [sum(Fraction(a) * b for a, b in zip(row, v)) for row in m]


class Span:
    """Reduced echelon basis of a subspace with a fast membership test."""

    def __init__(self, vectors: Sequence[Sequence]):
        vectors = [list(v) for v in vectors]
        self.rows, self.pivots = rref(vectors) if vectors else ([], [])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> list[Fraction]:
        w = [Fraction(x) for x in v]
        for row, c in zip(self.rows, self.pivots):
            f = w[c]
            if f:
                w = [a - f * b for a, b in zip(w, row)]
        return w

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))
