"""
Rational approximation from long repetitions in b-ary expansions.

Given the first N digits of alpha, find a prefix ABCB with a long block B,
form the eventually periodic rational xi = 0.A(BC)(BC)..., and build the
integer vector x = (b^(r+s), b^r, M) together with the products of linear
forms that a subspace argument would feed on. For rational alpha the
vectors obtained at growing N lie on a common plane whose coefficients
recover alpha.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import BadPlaceSet, DegeneratePattern, OutOfRange, PatternMismatch
from .exactnum import INFINITE, Place, PlaceSet, as_rational, factorize, norm_at
from .words import Alphabet, Word, as_word


def digit_alphabet(b: int) -> Alphabet:
    return Alphabet(tuple(range(b)))


def digits_of_rational(xi, b: int, N: int) -> Word:
    """First N b-ary digits of xi in (0, 1); terminating expansions end in zeros."""
    xi = as_rational(xi)
    if not 0 < xi < 1:
        raise OutOfRange(f"{xi} is not in (0, 1)")
    if b < 2:
        raise OutOfRange("base must be at least 2")
    num, den = xi.numerator, xi.denominator
    out = []
    for _ in range(N):
        num *= b
        d, num = divmod(num, den)
        out.append(d)
    return Word(tuple(out), digit_alphabet(b))


def _as_digits(w) -> tuple:
    w = as_word(w)
    return tuple(int(s) for s in w.symbols)


@dataclass(frozen=True)
class AbcbPattern:
    A: tuple
    B: tuple
    C: tuple

    def __post_init__(self):
        for name in ("A", "B", "C"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        if len(self.B) < 1:
            raise ValueError("block B must be nonempty")

    @property
    def r(self) -> int:
        return len(self.A)

    @property
    def s(self) -> int:
        return len(self.B) + len(self.C)

    @property
    def length(self) -> int:
        """Length of ABCB, i.e. r + s + len(B)."""
        return self.r + self.s + len(self.B)

    def digits(self) -> tuple:
        return self.A + self.B + self.C + self.B

    @staticmethod
    def _fmt(block) -> str:
        return "".join(str(d) if d < 10 else f"[{d}]" for d in block)

    def describe(self) -> str:
        return f"A={self._fmt(self.A)!r} B={self._fmt(self.B)!r} C={self._fmt(self.C)!r}"


def extract_abcb(w, eps) -> AbcbPattern | None:
    """Prefix ABCB of w with len(B) >= eps*len(w), maximizing len(B).

    Ties go to the shortest A, then the shortest C. For each (r, s) the
    longest admissible B is min(s, agreement run of w against itself
    shifted by s, starting at position r).
    """
    eps = Fraction(eps)
    u = _as_digits(w)
    N = len(u)
    best = None  # (lB, r, lC)
    for r in range(N):
        for s in range(1, N - r):
            m = 0
            while r + s + m < N and m < s and u[r + m] == u[r + s + m]:
                m += 1
            lB = m
            if lB < 1 or lB < eps * N:
                continue
            cand = (lB, r, s - lB)
            if best is None or (-cand[0], cand[1], cand[2]) < (-best[0], best[1], best[2]):
                best = cand
    if best is None:
        return None
    lB, r, lC = best
    return AbcbPattern(A=u[:r], B=u[r:r + lB], C=u[r + lB:r + lB + lC])


def _block_value(block: Sequence[int], b: int) -> int:
    v = 0
    for d in block:
        v = v * b + d
    return v


def periodic_value(p: AbcbPattern, b: int) -> tuple[Fraction, int]:
    """(xi, M) for xi = 0.A(BC)^inf and M = xi * b^r (b^s - 1)."""
    period = p.B + p.C
    if all(d == b - 1 for d in period):
        raise DegeneratePattern("period made only of the top digit; expansion is not unique")
    if any(not 0 <= d < b for d in p.A + period):
        raise OutOfRange(f"pattern digits must lie in 0..{b - 1}")
    a_val = _block_value(p.A, b)
    bc_val = _block_value(period, b)
    M = a_val * (b ** p.s - 1) + bc_val
    xi = Fraction(M, b ** p.r * (b ** p.s - 1))
    return xi, M


@dataclass(frozen=True)
class ApproximationGap:
    gap: Fraction
    bound: Fraction
    holds: bool


def approximation_gap(alpha, p: AbcbPattern, b: int) -> ApproximationGap:
    """|alpha - xi| against b^-(r+s+len(B)), the agreement length of ABCB."""
    alpha = as_rational(alpha)
    L = p.length
    if _as_digits(digits_of_rational(alpha, b, L)) != p.digits():
        raise PatternMismatch("digits of alpha do not begin with ABCB")
    xi, _ = periodic_value(p, b)
    gap = abs(alpha - xi)
    bound = Fraction(1, b ** L)
    return ApproximationGap(gap, bound, gap <= bound)


@dataclass(frozen=True)
class SubspaceDatum:
    N: int
    x: tuple
    product_value: Fraction
    height_bound: Fraction
    pattern: AbcbPattern | None = None
    notes: tuple = field(default_factory=tuple)


def required_places(b: int) -> PlaceSet:
    return PlaceSet(p for p, _ in factorize(b))


def subspace_product(alpha, p: AbcbPattern, b: int, S: PlaceSet | None = None, N: int | None = None) -> SubspaceDatum:
    """Double product of |L_{i,p}(x)|_p over S for x = (b^(r+s), b^r, M).

    At infinity the forms are x1, x2 and alpha*x1 - alpha*x2 - x3; at finite
    places they are the coordinates. The b-powers contribute 1 by the
    product formula, leaving |b^(r+s) alpha - b^r alpha - M| * prod |M|_p.
    When M = 0 the finite factors are taken as 1 and the datum is flagged.
    """
    alpha = as_rational(alpha)
    if S is None:
        S = required_places(b)
    needed = required_places(b)
    if not needed <= S:
        raise BadPlaceSet(f"S must contain inf and every prime dividing {b}")
    _, M = periodic_value(p, b)
    x1, x2, x3 = b ** (p.r + p.s), b ** p.r, M
    notes = []
    value = Fraction(1)
    for place in sorted(S, key=lambda q: (q.prime is None, q.prime or 0)):
        if place.is_infinite:
            forms = (Fraction(x1), Fraction(x2), alpha * x1 - alpha * x2 - x3)
        else:
            forms = (Fraction(x1), Fraction(x2), Fraction(x3))
        for i, f in enumerate(forms):
            if i == 2 and not place.is_infinite and x3 == 0:
                continue
            value *= norm_at(f, place)
    if M == 0:
        notes.append("M=0 convention: finite-place factors of M taken as 1")
    return SubspaceDatum(
        N=N if N is not None else p.length,
        x=(x1, x2, x3),
        product_value=value,
        height_bound=Fraction(x1),
        pattern=p,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class Plane:
    """Coefficients of lambda*b^r + mu*b^(r+s) + nu*M = 0."""

    lam: Fraction
    mu: Fraction
    nu: Fraction

    @property
    def recovered_alpha(self) -> Fraction | None:
        if self.nu == 0:
            return None
        return -self.mu / self.nu


def detect_common_plane(data: Sequence) -> Plane | None:
    """Plane through the origin containing every x, or None if they span Q^3."""
    vecs = [d.x if isinstance(d, SubspaceDatum) else tuple(d) for d in data]
    if len(vecs) < 3:
        raise ValueError("need at least three vectors")
    ns = linalg.nullspace([list(v) for v in vecs], 3)
    if not ns:
        return None
    # columns are (x1, x2, x3) = (b^(r+s), b^r, M): coefficient order (mu, lam, nu)
    choice = next((v for v in ns if v[2] != 0), ns[0])
    mu, lam, nu = choice
    if nu != 0:
        mu, lam, nu = mu / nu, lam / nu, Fraction(1)
    return Plane(lam=lam, mu=mu, nu=nu)


@dataclass(frozen=True)
class PipelineRow:
    N: int
    pattern: AbcbPattern
    xi: Fraction
    gap: ApproximationGap
    datum: SubspaceDatum


def abl_pipeline(alpha, b: int, Ns: Sequence[int], eps) -> tuple[list[PipelineRow], Plane | None]:
    """Run pattern extraction, approximation and product evaluation per N."""
    alpha = as_rational(alpha)
    S = required_places(b)
    rows = []
    for N in Ns:
        w = digits_of_rational(alpha, b, N)
        pat = extract_abcb(w, eps)
        if pat is None:
            continue
        try:
            xi, _ = periodic_value(pat, b)
        except DegeneratePattern:
            continue
        gap = approximation_gap(alpha, pat, b)
        datum = subspace_product(alpha, pat, b, S, N=N)
        rows.append(PipelineRow(N, pat, xi, gap, datum))
    # neighbouring N can repeat a pattern; two independent vectors still fix the plane
    vecs = [r.datum.x for r in rows]
    distinct = list(dict.fromkeys(vecs))
    plane = None
    if len(vecs) >= 3 and linalg.rank([list(v) for v in distinct]) == 2:
        plane = detect_common_plane(vecs)
    return rows, plane
