"""
Power sums n -> b_1 a_1^n + ... + b_m a_m^n over Q with positive roots.

Canonical form keeps roots strictly decreasing and coefficients nonzero, so
two power sums are equal as functions of n iff their term tuples are equal.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import IrrationalObstruction, NonpositiveRoot, StepLimit, ZeroInput
from .exactnum import as_rational, factorize, format_rational

DEFAULT_STEP_LIMIT = 256


def _int_root(n: int, q: int) -> int | None:
    """Exact nonnegative integer q-th root of n >= 0, else None."""
    if n < 0:
        return None
    if n < 2:
        return n
    lo, hi = 0, 1 << (n.bit_length() // q + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** q <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo ** q == n else None


def rational_root(x: Fraction, q: int) -> Fraction | None:
    """Real q-th root of x inside Q (negative x allowed for odd q)."""
    x = Fraction(x)
    if x < 0:
        if q % 2 == 0:
            return None
        r = rational_root(-x, q)
        return None if r is None else -r
    n = _int_root(x.numerator, q)
    d = _int_root(x.denominator, q)
    if n is None or d is None:
        return None
    return Fraction(n, d)


@dataclass(frozen=True)
class PowerSum:
    """Canonical tuple of (coefficient, root) pairs, roots strictly decreasing."""

    terms: tuple = ()

    @classmethod
    def from_terms(cls, raw: Iterable) -> "PowerSum":
        return canonicalize(raw)

    @classmethod
    def constant(cls, c) -> "PowerSum":
        return canonicalize([(c, 1)])

    @classmethod
    def monomial(cls, coeff, root) -> "PowerSum":
        return canonicalize([(coeff, root)])

    @classmethod
    def from_json(cls, data) -> "PowerSum":
        if isinstance(data, str):
            data = json.loads(data)
        return canonicalize((t["coeff"], t["root"]) for t in data["terms"])

    def to_json(self) -> dict:
        return {"terms": [{"coeff": format_rational(c), "root": format_rational(a)} for c, a in self.terms]}

    @classmethod
    def parse(cls, text: str) -> "PowerSum":
        """Parse "coeff*root^n + ..." style input, e.g. "1*4^n + 2*2^n + 1"."""
        text = text.replace(" ", "").replace("-", "+-")
        raw = []
        for chunk in filter(None, text.split("+")):
            if "^n" in chunk:
                body = chunk.replace("^n", "")
                if "*" in body:
                    c, a = body.rsplit("*", 1)
                else:
                    c, a = ("-1", body[1:]) if body.startswith("-") else ("1", body)
                raw.append((c.strip("()"), a.strip("()")))
            else:
                raw.append((chunk.strip("()"), "1"))
        return canonicalize(raw)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def roots(self) -> list[Fraction]:
        return [a for _, a in self.terms]

    @property
    def coefficients(self) -> list[Fraction]:
        return [c for c, _ in self.terms]

    def __len__(self) -> int:
        return len(self.terms)

    def __call__(self, n: int) -> Fraction:
        return evaluate(self, n)

    def __add__(self, other):
        return add(self, _lift(other))

    __radd__ = __add__

    def __neg__(self):
        return PowerSum(tuple((-c, a) for c, a in self.terms))

    def __sub__(self, other):
        return add(self, -_lift(other))

    def __rsub__(self, other):
        return add(_lift(other), -self)

    def __mul__(self, other):
        return mul(self, _lift(other))

    __rmul__ = __mul__

    def __pow__(self, q: int):
        return power(self, q)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, a in self.terms:
            if a == 1:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(f"({format_rational(a)})^n" if a.denominator != 1 else f"{a}^n")
            else:
                base = f"({format_rational(a)})" if a.denominator != 1 else str(a)
                parts.append(f"{format_rational(c)}*{base}^n")
        return " + ".join(parts).replace("+ -", "- ")


def _lift(x) -> PowerSum:
    return x if isinstance(x, PowerSum) else PowerSum.constant(x)


def canonicalize(raw: Iterable) -> PowerSum:
    """Merge equal roots, drop zero coefficients, sort roots descending."""
    acc: dict[Fraction, Fraction] = {}
    for c, a in raw:
        c, a = as_rational(c), as_rational(a)
        if a <= 0:
            raise NonpositiveRoot(f"root {a} is not positive")
        acc[a] = acc.get(a, Fraction(0)) + c
    return PowerSum(tuple((c, a) for a, c in sorted(acc.items(), reverse=True) if c != 0))


def evaluate(u: PowerSum, n: int) -> Fraction:
    return sum((c * a ** n for c, a in u.terms), Fraction(0))


def add(u: PowerSum, v: PowerSum) -> PowerSum:
    return canonicalize(list(u.terms) + list(v.terms))


def mul(u: PowerSum, v: PowerSum) -> PowerSum:
    return canonicalize((c * d, a * b) for c, a in u.terms for d, b in v.terms)


def power(u: PowerSum, q: int) -> PowerSum:
    if q < 0:
        raise ValueError("exponent must be nonnegative")
    out = PowerSum.constant(1)
    base = u
    while q:
        if q & 1:
            out = mul(out, base)
        base = mul(base, base)
        q >>= 1
    return out


def progression(u: PowerSum, Q: int, R: int) -> PowerSum:
    """The power sum n -> u(Q n + R)."""
    if Q < 1:
        raise ValueError("Q must be a positive integer")
    return canonicalize((c * a ** R, a ** Q) for c, a in u.terms)


def qth_root(u: PowerSum, q: int, step_limit: int = DEFAULT_STEP_LIMIT) -> PowerSum | None:
    """A rational power sum v with v**q == u, found by peeling terms greedily.

    The top root of v is the q-th root of the top root of u. Each later root
    of v is read off the leading term of u - v_partial**q, which must be
    q c_1^(q-1) c_j (alpha_1^(q-1) alpha_j)^n. For even q the sign of v
    is chosen so that its leading coefficient is positive.

    Raises IrrationalObstruction when the leading root or coefficient has
    no rational q-th root; returns None when peeling cannot close.
    """
    if q < 1:
        raise ValueError("q must be positive")
    if u.is_zero:
        raise ZeroInput("q-th root of the zero power sum")
    if q == 1:
        return u
    c0, a0 = u.terms[0]
    alpha1 = rational_root(a0, q)
    if alpha1 is None:
        raise IrrationalObstruction("root", a0, q)
    c1 = rational_root(c0, q)
    if c1 is None:
        raise IrrationalObstruction("coefficient", c0, q)
    smallest = u.terms[-1][1]
    terms = [(c1, alpha1)]
    lead_scale = q * c1 ** (q - 1)
    for _ in range(step_limit):
        v = PowerSum(tuple(terms))
        residual = add(u, -power(v, q))
        if residual.is_zero:
            return v
        rc, ra = residual.terms[0]
        alpha = ra / alpha1 ** (q - 1)
        if alpha >= terms[-1][1] or alpha ** q < smallest:
            return None
        terms.append((rc / lead_scale, alpha))
    raise StepLimit(f"q-th root peeling exceeded {step_limit} steps")


@dataclass(frozen=True)
class PisotDecomposition:
    """u(Q n + R) == w(n)**q."""

    Q: int
    R: int
    w: PowerSum


def pure_power_factor(u: PowerSum, q: int) -> tuple[Fraction, int, PowerSum] | None:
    """Search u(n) = a^(n + r) * v(n)^q with rational v.

    Candidates: a ranges over the roots of u (and 1), r over 0..q-1.
    Returns the first (a, r, v) found in that order.
    """
    cands = [Fraction(1)] + [a for a in u.roots if a != 1]
    for a in cands:
        for r in range(q):
            scaled = canonicalize((c / a ** r, root / a) for c, root in u.terms)
            try:
                v = qth_root(scaled, q)
            except (IrrationalObstruction, StepLimit):
                continue
            if v is not None:
                return a, r, v
    return None


def pisot_decompose(u: PowerSum, q: int, Q_values: Sequence[int] | None = None) -> PisotDecomposition | None:
    """First (Q, R) in lexicographic order with u(Qn+R) a q-th power of a Q-power sum."""
    if u.is_zero:
        raise ZeroInput("decomposition of the zero power sum")
    if Q_values is None:
        Q_values = (q, 2 * q)
    for Q in Q_values:
        for R in range(Q):
            p = progression(u, Q, R)
            w = None
            try:
                w = qth_root(p, q)
            except (IrrationalObstruction, StepLimit):
                w = None
            if w is None:
                w = _lift_pure_power(p, q)
            if w is not None and power(w, q) == p:
                return PisotDecomposition(Q, R, w)
    return None


def _lift_pure_power(p: PowerSum, q: int) -> PowerSum | None:
    # a^(n+r) v^q is a q-th power over Q only when a and a^r have rational q-th roots
    found = pure_power_factor(p, q)
    if found is None:
        return None
    a, r, v = found
    ra = rational_root(a, q)
    rr = rational_root(a ** r, q)
    if ra is None or rr is None:
        return None
    return mul(PowerSum.monomial(rr, ra), v)


def exponent_matrix(roots: Sequence) -> tuple[list[int], list[list[int]]]:
    """Prime-exponent vectors of positive rationals (rows) over their joint primes."""
    facts = []
    primes: set[int] = set()
    for a in roots:
        a = as_rational(a)
        if a <= 0:
            raise NonpositiveRoot(f"root {a} is not positive")
        f = {p: e for p, e in factorize(a.numerator)}
        for p, e in factorize(a.denominator):
            f[p] = f.get(p, 0) - e
        facts.append(f)
        primes.update(f)
    plist = sorted(primes)
    return plist, [[f.get(p, 0) for p in plist] for f in facts]


def roots_multiplicatively_independent(roots) -> bool:
    if isinstance(roots, PowerSum):
        roots = roots.roots
    roots = list(roots)
    _, rows = exponent_matrix(roots)
    if any(not any(r) for r in rows):
        return False
    return linalg.rank(rows) == len(roots)


@dataclass(frozen=True)
class Verdict:
    value: bool
    reason: str

    def __bool__(self) -> bool:
        return self.value


def is_universal_hilbert_candidate(u: PowerSum) -> Verdict:
    if len(u) < 2:
        return Verdict(False, f"needs at least 2 terms, has {len(u)}")
    if not roots_multiplicatively_independent(u.roots):
        return Verdict(False, "roots are multiplicatively dependent")
    return Verdict(True, "m >= 2, nonzero coefficients, multiplicatively independent roots")


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_rational(self.re))
        object.__setattr__(self, "im", as_rational(self.im))

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" with rational a, b."""
        t = text.replace(" ", "").replace("I", "i").replace("j", "i")
        if not t.endswith("i"):
            return cls(Fraction(t))
        body = t[:-1]
        split = max(body.rfind("+"), body.rfind("-"))
        if split <= 0:
            re_part, im_part = "0", body
        else:
            re_part, im_part = body[:split], body[split:]
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        return cls(Fraction(re_part), Fraction(im_part))

    def modulus_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        if self.im == 0:
            return format_rational(self.re)
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        im = "" if mag == 1 else format_rational(mag)
        if self.re == 0:
            return f"{'-' if self.im < 0 else ''}{im}i"
        return f"{format_rational(self.re)}{sign}{im}i"


def has_dominant_root(roots: Sequence[GaussianRational], direction: str = "upper") -> tuple[bool, GaussianRational | None]:
    """Unique maximizer (upper) or minimizer (lower) of the squared modulus."""
    roots = [r if isinstance(r, GaussianRational) else GaussianRational(r) for r in roots]
    if not roots:
        raise ValueError("no roots given")
    if any(r.modulus_squared() == 0 for r in roots):
        raise ZeroInput("roots must be nonzero")
    if len(set(roots)) != len(roots):
        raise ValueError("roots must be pairwise distinct")
    if direction not in ("upper", "lower"):
        raise ValueError("direction is 'upper' or 'lower'")
    mods = [r.modulus_squared() for r in roots]
    target = max(mods) if direction == "upper" else min(mods)
    hits = [r for r, m in zip(roots, mods) if m == target]
    if len(hits) == 1:
        return True, hits[0]
    return False, None


def dominance_bound(u: PowerSum) -> int:
    """An n0 with u(n) != 0 for every n >= n0 (leading term dominates the rest).

    Uses |b_1| a_1^n > sum_{i>1} |b_i| a_i^n, which holds once
    (a_2/a_1)^n * sum_{i>1}|b_i| < |b_1|.
    """
    if u.is_zero:
        raise ZeroInput("zero power sum vanishes everywhere")
    if len(u) == 1:
        return 0
    b1, a1 = u.terms[0]
    rest = sum(abs(c) for c, _ in u.terms[1:])
    ratio = u.terms[1][1] / a1
    n = 0
    while ratio ** n * rest >= abs(b1):
        n += 1
    return n
