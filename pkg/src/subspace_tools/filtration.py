"""
Common bases for two filtrations of a finite-dimensional Q-vector space.

The construction is inductive on dim W: refine one chain so that its first
proper member is a hyperplane H, solve the problem inside H for that chain
and the other chain intersected with H, then add one vector from the
deepest member of the other chain that still sticks out of H.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import NotNested


@dataclass(frozen=True)
class Filtration:
    """W_0 ⊇ W_1 ⊇ ... inside Q^dim; each member is a spanning list."""

    dim: int
    chain: tuple

    def __post_init__(self):
        chain = tuple(tuple(tuple(Fraction(x) for x in v) for v in member) for member in self.chain)
        object.__setattr__(self, "chain", chain)
        for member in chain:
            for v in member:
                if len(v) != self.dim:
                    raise NotNested(f"vector of length {len(v)} in ambient dimension {self.dim}")
        if not chain:
            raise NotNested("a filtration needs at least W_0")
        if _dim(chain[0]) != self.dim:
            raise NotNested("W_0 must be the whole ambient space")
        for i in range(1, len(chain)):
            if not linalg.is_subspace(chain[i], chain[i - 1]):
                raise NotNested(f"member {i} is not contained in member {i - 1}")

    @classmethod
    def from_json(cls, data: dict) -> "Filtration":
        return cls(int(data["dim"]), tuple(tuple(tuple(v) for v in m) for m in data["chain"]))

    def dims(self) -> list[int]:
        return [_dim(m) for m in self.chain]


def _dim(vectors) -> int:
    return linalg.rank(vectors) if vectors else 0


def _basis(vectors) -> list[list[Fraction]]:
    return linalg.row_basis(vectors) if vectors else []


def _hyperplane_containing(sub: list, space: list) -> list:
    """A hyperplane of span(space) that contains span(sub)."""
    ext = linalg.extend_to_basis(sub, space)
    return _basis(list(sub) + ext[:-1])


def _common_basis(W: list, A: list[list], B: list[list], dim: int) -> list[list[Fraction]]:
    d = _dim(W)
    if d == 0:
        return []
    proper_a = [m for m in A if _dim(m) < d]
    proper_b = [m for m in B if _dim(m) < d]
    if not proper_a and not proper_b:
        return _basis(W)
    if not proper_a:
        A, B, proper_a, proper_b = B, A, proper_b, proper_a
    H = _hyperplane_containing(_basis(proper_a[0]), W)
    A_inner = [H] + proper_a
    B_inner = [linalg.intersect(m, H, dim) if m else [] for m in B]
    inner = _common_basis(H, A_inner, B_inner, dim)
    # members of B not inside H form an initial segment; take its deepest one
    k = max(idx for idx, m in enumerate(B) if m and not linalg.is_subspace(m, H))
    w_new = next(v for v in _basis(B[k]) if not linalg.in_span(v, H))
    return inner + [w_new]


def common_filtration_basis(F1: Filtration, F2: Filtration) -> list[list[Fraction]]:
    """A basis of W containing a basis of every member of both chains."""
    if F1.dim != F2.dim:
        raise NotNested("filtrations live in different ambient spaces")
    dim = F1.dim
    W = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    A = [_basis(m) for m in F1.chain]
    B = [_basis(m) for m in F2.chain]
    return _common_basis(W, A, B, dim)


def certify(basis: Sequence[Sequence], *filtrations: Filtration) -> bool:
    """Basis is independent, spans Q^dim, and its members inside each subspace span it."""
    if not filtrations:
        raise ValueError("nothing to certify against")
    dim = filtrations[0].dim
    vecs = [list(v) for v in basis]
    if len(vecs) != dim or (dim and linalg.rank(vecs) != dim):
        return False
    for F in filtrations:
        for member in F.chain:
            span = linalg.Span(member)
            inside = [v for v in vecs if v in span] if member else []
            if len(inside) != span.dim:
                return False
    return True


def echelon_oracle(F1: Filtration, F2: Filtration) -> list[list[Fraction]] | None:
    """Greedy reference construction over the grid of intersections.

    Walks A_i ∩ B_j from the deepest members outwards and extends the
    current independent set inside each intersection. Returns None when
    some intersection cannot be completed without breaking independence.
    """
    dim = F1.dim
    chosen: list[list[Fraction]] = []
    for i in range(len(F1.chain) - 1, -1, -1):
        for j in range(len(F2.chain) - 1, -1, -1):
            a, b = F1.chain[i], F2.chain[j]
            X = linalg.intersect(a, b, dim) if a and b else []
            if not X:
                continue
            span = linalg.Span(X)
            have = [v for v in chosen if v in span]
            missing = _dim(X) - (_dim(have) if have else 0)
            if missing == 0:
                continue
            ext = linalg.extend_to_basis(chosen, X)
            if len(ext) != missing:
                return None
            chosen.extend(ext)
    if len(chosen) != dim:
        return None
    return chosen
