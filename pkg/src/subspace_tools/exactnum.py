"""
Exact rational scalars, p-adic valuations and norms, heights, S-integers.

Rationals are plain :class:`fractions.Fraction` values; every norm at a
finite place is returned as an exact power of p.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import FactorizationBound, NotPrime, ZeroInput, ZeroVector

Rational = Fraction

#: Trial division runs up to this bound; cofactors above bound**2 are refused.
DEFAULT_FACTOR_BOUND = 10**6

_factor_bound = DEFAULT_FACTOR_BOUND


def set_factor_bound(bound: int) -> None:
    global _factor_bound
    if bound < 2:
        raise ValueError("factor bound must be at least 2")
    _factor_bound = int(bound)
    _factor_cached.cache_clear()


def get_factor_bound() -> int:
    return _factor_bound


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational literal")
    if "." in text or "e" in text.lower():
        raise ValueError(f"decimal literals are not exact rationals: {text!r}")
    return Fraction(text)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=4096)
def _factor_cached(n: int, bound: int) -> tuple[tuple[int, int], ...]:
    out = []
    d = 2
    while d * d <= n and d <= bound:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        if d * d <= n:
            # trial division stopped at the bound before reaching sqrt(n)
            raise FactorizationBound(
                f"cofactor {n} exceeds trial-division bound {bound}"
            )
        out.append((n, 1))
    return tuple(out)


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of |n| as ascending (prime, exponent) pairs."""
    n = abs(int(n))
    if n == 0:
        raise ZeroInput("cannot factor 0")
    return list(_factor_cached(n, _factor_bound))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factorize(n)
    return len(f) == 1 and f[0][1] == 1


def prime_support(x: Fraction) -> list[int]:
    """Primes dividing the numerator or denominator of a nonzero rational."""
    x = as_rational(x)
    if x == 0:
        raise ZeroInput("0 has no prime support")
    ps = {p for p, _ in factorize(x.numerator)} | {p for p, _ in factorize(x.denominator)}
    return sorted(ps)


@dataclass(frozen=True, order=True)
class Place:
    """An absolute value on Q: a prime p, or the infinite place (prime None)."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None:
            if not isinstance(self.prime, int) or not is_prime(self.prime):
                raise NotPrime(f"{self.prime!r} is not a prime")

    @property
    def is_infinite(self) -> bool:
        return self.prime is None

    @classmethod
    def parse(cls, text: str) -> "Place":
        text = text.strip().lower()
        if text in ("inf", "infinity", "oo"):
            return INFINITE
        return cls(int(text))

    def __str__(self) -> str:
        return "inf" if self.prime is None else str(self.prime)


INFINITE = Place(None)


class PlaceSet(frozenset):
    """Finite set of places that always contains the infinite place."""

    def __new__(cls, places: Iterable = ()):
        items = set()
        for p in places:
            if isinstance(p, Place):
                items.add(p)
            elif isinstance(p, str):
                items.add(Place.parse(p))
            else:
                items.add(Place(int(p)))
        items.add(INFINITE)
        return super().__new__(cls, items)

    @classmethod
    def parse(cls, text: str) -> "PlaceSet":
        return cls(t for t in text.split(",") if t.strip())

    @property
    def finite_primes(self) -> list[int]:
        return sorted(p.prime for p in self if p.prime is not None)

    def __str__(self) -> str:
        return "{" + ",".join([str(p) for p in self.finite_primes] + ["inf"]) + "}"

    def __repr__(self) -> str:
        return f"PlaceSet({self})"


def valuation(a, p: int) -> int:
    """Exponent v with a = p**v * (unit at p)."""
    a = as_rational(a)
    if a == 0:
        raise ZeroInput("valuation of 0 is undefined")
    if isinstance(p, Place):
        p = p.prime
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    v = 0
    n, d = abs(a.numerator), a.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def norm_at(a, place) -> Fraction:
    """|a|_p as an exact rational; |.|_inf is the ordinary absolute value."""
    a = as_rational(a)
    if not isinstance(place, Place):
        place = Place.parse(place) if isinstance(place, str) else Place(int(place))
    if place.is_infinite:
        return abs(a)
    if a == 0:
        return Fraction(0)
    return Fraction(place.prime) ** (-valuation(a, place.prime))


def height_rational(xi) -> int:
    """max(|numerator|, |denominator|) of the reduced fraction."""
    xi = as_rational(xi)
    return max(abs(xi.numerator), xi.denominator)


def height_rational_product_form(xi) -> tuple[Fraction, Fraction]:
    """Both product expressions for H(xi) over the relevant places.

    Returns ``(prod max(1, |xi|_p), 1 / prod min(1, |xi|_p))``; each equals
    :func:`height_rational` exactly.
    """
    xi = as_rational(xi)
    places = [INFINITE]
    if xi != 0:
        places += [Place(p) for p in prime_support(xi)]
    upper = Fraction(1)
    lower = Fraction(1)
    for place in places:
        n = norm_at(xi, place)
        upper *= max(Fraction(1), n)
        lower *= min(Fraction(1), n)
    inv_lower = 1 / lower if lower != 0 else None
    return upper, inv_lower


def height_vector(coords: Sequence) -> Fraction:
    """Projective height: product over all places of the sup of coordinate norms."""
    xs = [as_rational(c) for c in coords]
    if not xs:
        raise ZeroVector("empty vector")
    if all(x == 0 for x in xs):
        raise ZeroVector("height of the zero vector is undefined")
    primes = set()
    for x in xs:
        if x != 0:
            primes.update(prime_support(x))
    h = max(abs(x) for x in xs)
    for p in sorted(primes):
        place = Place(p)
        h *= max(norm_at(x, place) for x in xs)
    return h


def is_s_integer(xi, S: PlaceSet) -> bool:
    xi = as_rational(xi)
    allowed = set(S.finite_primes)
    return all(p in allowed for p, _ in factorize(xi.denominator))


def is_s_unit(xi, S: PlaceSet) -> bool:
    xi = as_rational(xi)
    if xi == 0:
        return False
    allowed = set(S.finite_primes)
    return all(p in allowed for p in prime_support(xi))


def product_formula_check(a) -> Fraction:
    """prod_p |a|_p over inf and the primes of a; the product formula makes it 1."""
    a = as_rational(a)
    if a == 0:
        raise ZeroInput("product formula needs a nonzero rational")
    out = norm_at(a, INFINITE)
    for p in prime_support(a):
        out *= norm_at(a, Place(p))
    return out
