"""
Numbers p + q*sqrt(d) with rational p, q and square-free integer d >= 1.

Signs are decided exactly by squaring, so comparisons never touch floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .exactnum import as_rational, factorize, format_rational


def squarefree_split(n: int) -> tuple[int, int]:
    """Write n >= 0 as s**2 * d with d square-free; returns (s, d)."""
    if n == 0:
        return 0, 1
    s, d = 1, 1
    for p, e in factorize(n):
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return s, d


def rational_sqrt(x) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    x = as_rational(x)
    if x < 0:
        return None
    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class QuadraticScalar:
    p: Fraction
    q: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self):
        object.__setattr__(self, "p", as_rational(self.p))
        object.__setattr__(self, "q", as_rational(self.q))
        if self.d < 1:
            raise ValueError("radicand must be a positive square-free integer")
        if self.d == 1 and self.q != 0:
            object.__setattr__(self, "p", self.p + self.q)
            object.__setattr__(self, "q", Fraction(0))
        if self.q == 0 and self.d != 1:
            object.__setattr__(self, "d", 1)

    @classmethod
    def sqrt_of(cls, x) -> "QuadraticScalar":
        """sqrt(x) for a nonnegative rational x, normalized to s*sqrt(d)."""
        x = as_rational(x)
        if x < 0:
            raise ValueError("negative radicand")
        # sqrt(n/m) = sqrt(n*m)/m
        s, d = squarefree_split(x.numerator * x.denominator)
        return cls(Fraction(0), Fraction(s, x.denominator), d)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def _coerce(self, other) -> "QuadraticScalar":
        if isinstance(other, QuadraticScalar):
            if other.q != 0 and self.q != 0 and other.d != self.d:
                raise ValueError("mixing different quadratic fields")
            return other
        return QuadraticScalar(as_rational(other))

    def _field(self, other: "QuadraticScalar") -> int:
        return self.d if self.q != 0 else other.d

    def __add__(self, other):
        o = self._coerce(other)
        return QuadraticScalar(self.p + o.p, self.q + o.q, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticScalar(-self.p, -self.q, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        d = self._field(o)
        return QuadraticScalar(self.p * o.p + self.q * o.q * d, self.p * o.q + self.q * o.p, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticScalar":
        return QuadraticScalar(self.p, -self.q, self.d)

    def norm(self) -> Fraction:
        return self.p * self.p - self.q * self.q * self.d

    def __truediv__(self, other):
        o = self._coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        num = self * o.conjugate()
        return QuadraticScalar(num.p / n, num.q / n, num.d)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        out = QuadraticScalar(Fraction(1))
        for _ in range(k):
            out = out * self
        return out

    def sign(self) -> int:
        p, q = self.p, self.q
        sp = (p > 0) - (p < 0)
        sq = (q > 0) - (q < 0)
        if sq == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq
        # opposite signs: compare p^2 with q^2 d
        diff = p * p - q * q * self.d
        return sp if diff > 0 else (sq if diff < 0 else 0)

    def __eq__(self, other):
        try:
            return (self - other).sign() == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.p, self.q, self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.p) + float(self.q) * self.d ** 0.5

    def exact_str(self) -> str:
        if self.q == 0:
            return format_rational(self.p)
        return f"{format_rational(self.p)} + {format_rational(self.q)}*sqrt({self.d})"

    def __str__(self) -> str:
        return self.exact_str()
