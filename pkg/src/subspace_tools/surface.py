"""
Divisor-weight criteria for integral points on surfaces, and the curve-side
Riemann-Roch budget.

Inputs are the intersection matrix of the boundary divisors C_1..C_r and
positive integer weights a; D = sum a_i C_i. All verdicts are exact: the
smaller root gamma_i of C_i^2 T^2 - 2 (D.C_i) T + D^2 lives in a real
quadratic field and is compared by exact sign analysis.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    DegenerateSelfIntersection,
    DimensionMismatch,
    HodgeViolation,
    IndexOutOfRange,
    NoConvergence,
    NonpositivePairing,
    OutOfRiemannRochRange,
    PositivityViolation,
    ScreenFailed,
    ThetaOutOfRange,
)
from .exactnum import as_rational
from .quadratic import QuadraticScalar

DEFAULT_MAX_ITER = 10_000
DENOMINATOR_CAP = 2**48


@dataclass(frozen=True)
class IntersectionMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(as_rational(x) for x in row) for row in self.entries)
        r = len(rows)
        if r < 1 or any(len(row) != r for row in rows):
            raise DimensionMismatch("intersection matrix must be square and nonempty")
        for i in range(r):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"intersection matrix not symmetric at ({i + 1},{j + 1})")
        object.__setattr__(self, "entries", rows)

    @property
    def r(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def from_json(cls, data) -> "IntersectionMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        m = cls(tuple(tuple(row) for row in data["matrix"]))
        if "r" in data and int(data["r"]) != m.r:
            raise DimensionMismatch(f"declared r={data['r']} but matrix is {m.r}x{m.r}")
        return m

    @classmethod
    def all_ones(cls, r: int) -> "IntersectionMatrix":
        return cls(tuple(tuple(1 for _ in range(r)) for _ in range(r)))


def _check_weights(M: IntersectionMatrix, a: Sequence[int]) -> list[Fraction]:
    if len(a) != M.r:
        raise DimensionMismatch(f"{len(a)} weights for {M.r} divisors")
    return [as_rational(x) for x in a]


def d_squared(M: IntersectionMatrix, a: Sequence) -> Fraction:
    """D^2 = a^T M a."""
    a = _check_weights(M, a)
    return sum((a[i] * M[i, j] * a[j] for i in range(M.r) for j in range(M.r)), Fraction(0))


def d_dot(M: IntersectionMatrix, a: Sequence, i: int) -> Fraction:
    """D . C_i = (M a)_i, with i 1-based."""
    a = _check_weights(M, a)
    if not 1 <= i <= M.r:
        raise IndexOutOfRange(f"index {i} outside 1..{M.r}")
    return sum((M[i - 1, j] * a[j] for j in range(M.r)), Fraction(0))


@dataclass(frozen=True)
class PairingData:
    """The three numbers every per-divisor criterion consumes."""

    D2: Fraction
    DC: Fraction
    C2: Fraction

    @classmethod
    def of(cls, M: IntersectionMatrix, a: Sequence, i: int) -> "PairingData":
        return cls(d_squared(M, a), d_dot(M, a, i), M[i - 1, i - 1])

    @property
    def discriminant(self) -> Fraction:
        """(D.C)^2 - D^2 C^2, the reduced discriminant of q(1, T)."""
        return self.DC * self.DC - self.D2 * self.C2


def gamma_roots(data: PairingData) -> tuple[QuadraticScalar, QuadraticScalar]:
    """(gamma, gamma') = ((D.C) -+ sqrt(disc)) / C^2."""
    if data.C2 <= 0:
        raise DegenerateSelfIntersection(f"C^2 = {data.C2} is not positive")
    disc = data.discriminant
    if disc < 0:
        raise HodgeViolation(f"discriminant {disc} < 0: not a surface intersection form")
    root = QuadraticScalar.sqrt_of(disc)
    g = (QuadraticScalar(data.DC) - root) / data.C2
    gp = (QuadraticScalar(data.DC) + root) / data.C2
    return g, gp


def gamma_small(M: IntersectionMatrix, a: Sequence, i: int) -> QuadraticScalar:
    return gamma_roots(PairingData.of(M, a, i))[0]


def f_theta_data(data: PairingData, theta) -> QuadraticScalar | Fraction:
    """F(theta) = theta (1 - theta (D.C)/D^2 + theta^2 C^2 / (3 D^2))."""
    if data.D2 == 0:
        raise ZeroDivisionError("D^2 = 0")
    t = theta if isinstance(theta, QuadraticScalar) else QuadraticScalar(as_rational(theta))
    val = t * (1 - t * (data.DC / data.D2) + t * t * (data.C2 / (3 * data.D2)))
    return val.p if val.is_rational else val


def f_theta(M: IntersectionMatrix, a: Sequence, i: int, theta):
    return f_theta_data(PairingData.of(M, a, i), theta)


def beta_half(data: PairingData) -> Fraction:
    """Autissier's truncation point beta/2 = D^2 / (2 D.C)."""
    if data.DC == 0:
        raise NonpositivePairing("D.C = 0")
    return data.D2 / (2 * data.DC)


def _gt(x, y) -> bool:
    if isinstance(x, QuadraticScalar):
        return x > y
    return Fraction(x) > Fraction(y)


def cz_check(M: IntersectionMatrix, a: Sequence) -> list[bool]:
    """Per index: F(gamma_i) > a_i, exactly."""
    a = _check_weights(M, a)
    out = []
    for i in range(1, M.r + 1):
        data = PairingData.of(M, a, i)
        g, _ = gamma_roots(data)
        out.append(_gt(f_theta_data(data, g), a[i - 1]))
    return out


def autissier_lhs(data: PairingData) -> Fraction:
    """D^2/(D.C) * (1 + D^2 C^2 / (6 (D.C)^2)), which equals 4 F(beta/2)."""
    if data.DC <= 0:
        raise NonpositivePairing(f"D.C = {data.DC} is not positive")
    return data.D2 / data.DC * (1 + data.D2 * data.C2 / (6 * data.DC * data.DC))


def autissier_check(M: IntersectionMatrix, a: Sequence) -> list[bool]:
    a = _check_weights(M, a)
    return [autissier_lhs(PairingData.of(M, a, i)) > 4 * a[i - 1] for i in range(1, M.r + 1)]


def balance_holds(M: IntersectionMatrix, a: Sequence, eps) -> bool:
    """(1-eps) Q(a) < r a_i L_i(a) < (1+eps) Q(a) for every i."""
    eps = as_rational(eps)
    a = _check_weights(M, a)
    Q = d_squared(M, a)
    r = M.r
    for i in range(1, r + 1):
        t = r * a[i - 1] * d_dot(M, a, i)
        if not ((1 - eps) * Q < t < (1 + eps) * Q):
            return False
    return True


def _simplex_map(M: IntersectionMatrix, x: list[Fraction]) -> list[Fraction]:
    inv = [1 / sum((M[i, j] * x[j] for j in range(M.r)), Fraction(0)) for i in range(M.r)]
    total = sum(inv)
    return [v / total for v in inv]


def _imbalance(M: IntersectionMatrix, x: list[Fraction]) -> Fraction:
    Q = d_squared(M, x)
    return max(abs(M.r * x[i - 1] * d_dot(M, x, i) / Q - 1) for i in range(1, M.r + 1))


@dataclass
class WeightSolution:
    weights: tuple
    iterations: int
    real_point: tuple = field(default=())


def _round_to_integers(M: IntersectionMatrix, x: list[Fraction], eps: Fraction, scale_limit: int) -> tuple | None:
    # smallest integer scale whose rounding still balances within eps
    for K in range(1, scale_limit + 1):
        a = [max(1, round(K * xi / min(x))) for xi in x]
        g = 0
        for v in a:
            g = math.gcd(g, v)
        a = [v // g for v in a]
        if balance_holds(M, a, eps):
            return tuple(a)
    return None


def fixed_point_weights(M: IntersectionMatrix, eps, max_iter: int = DEFAULT_MAX_ITER, scale_limit: int = 100_000) -> WeightSolution:
    """Positive integers a with (1-eps) Q(a) < r a_i L_i(a) < (1+eps) Q(a).

    Iterates x -> (1/L_i(x))_i / sum_j 1/L_j(x) on the simplex from the
    barycenter. For a matrix with positive entries this map contracts
    Hilbert's projective metric, so the iteration converges to the point
    where all x_i L_i(x) agree. Denominators are capped between steps.
    """
    eps = as_rational(eps)
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    if any(M[i, j] <= 0 for i in range(M.r) for j in range(M.r)):
        raise PositivityViolation("fixed-point weights need all intersection numbers positive")
    r = M.r
    x = [Fraction(1, r)] * r
    target = eps / 2
    it = 0
    while _imbalance(M, x) >= target:
        if it >= max_iter:
            raise NoConvergence(f"no balanced point within {max_iter} iterations")
        x = [v.limit_denominator(DENOMINATOR_CAP) for v in _simplex_map(M, x)]
        it += 1
    a = _round_to_integers(M, x, eps, scale_limit)
    if a is None:
        raise NoConvergence("could not round the balanced point to integer weights")
    assert balance_holds(M, a, eps)
    return WeightSolution(weights=a, iterations=it, real_point=tuple(x))


def levin_screen(M: IntersectionMatrix) -> None:
    if M.r < 4:
        raise ScreenFailed(f"needs at least 4 boundary divisors, got {M.r}")
    bad = [(i + 1, j + 1) for i in range(M.r) for j in range(M.r) if M[i, j] <= 0]
    if bad:
        raise ScreenFailed(f"nonpositive intersection numbers at {bad[:4]}: divisors cannot all be ample")


def eterm(data: PairingData) -> Fraction:
    """(1/6) D^2 C^2 / (D.C)^2."""
    return data.D2 * data.C2 / (6 * data.DC * data.DC)


@dataclass
class LevinResult:
    weights: tuple
    eps: Fraction
    tau: Fraction
    attempts: int
    lhs: tuple


def levin_check(M: IntersectionMatrix, max_iter: int = DEFAULT_MAX_ITER, max_attempts: int = 40) -> LevinResult:
    """Certified Autissier weights for r >= 4 positive boundary divisors.

    Balanced weights give r a_i (D.C_i) < (1+eps) D^2, and r >= 4 turns that
    into the Autissier inequality once eps is below the (1/6) D^2 C_i^2 /
    (D.C_i)^2 term. eps starts from that term at the balanced real point and
    is halved until every index passes.
    """
    levin_screen(M)
    r = M.r
    x0 = [Fraction(1, r)] * r
    # balanced real point for tau
    x = x0
    for _ in range(200):
        if _imbalance(M, x) < Fraction(1, 10**6):
            break
        x = [v.limit_denominator(DENOMINATOR_CAP) for v in _simplex_map(M, x)]
    tau = min(eterm(PairingData.of(M, x, i)) for i in range(1, r + 1))
    eps = min(tau, Fraction(1, 2))
    for attempt in range(1, max_attempts + 1):
        sol = fixed_point_weights(M, eps, max_iter=max_iter)
        if all(autissier_check(M, sol.weights)):
            lhs = tuple(autissier_lhs(PairingData.of(M, sol.weights, i)) for i in range(1, r + 1))
            return LevinResult(sol.weights, eps, tau, attempt, lhs)
        eps /= 2
    raise NoConvergence("weights failed the Autissier inequality after repeated refinement")


# -- curves -----------------------------------------------------------------

@dataclass(frozen=True)
class CurveBudget:
    r: int
    g: int
    n: int
    ell: int
    A: Fraction
    minimal_n: int | None


def minimal_positive_n(r: int, g: int) -> int | None:
    """Smallest n with nr > 2g-2 and A(n) > 0; A > 0 iff n (r - 2) > g."""
    if r <= 2:
        return None
    n = g // (r - 2) + 1
    while n * r <= 2 * g - 2:
        n += 1
    return n


def curve_budget(r: int, g: int, n: int) -> CurveBudget:
    """ell = nr - g + 1 and A = ell (ell - 2n - 1) / 2."""
    if r < 1 or g < 0 or n < 1:
        raise ValueError("need r >= 1, g >= 0, n >= 1")
    if not n * r > 2 * g - 2:
        raise OutOfRiemannRochRange(f"n r = {n * r} is not above 2g - 2 = {2 * g - 2}")
    ell = n * r - g + 1
    A = Fraction(ell * (ell - 2 * n - 1), 2)
    return CurveBudget(r, g, n, ell, A, minimal_positive_n(r, g))


# -- asymptotic surrogate -----------------------------------------------------

@dataclass(frozen=True)
class EthetaBound:
    cubic_term: object
    F: object
    tag: str = "asymptotic"


def etheta_lower_bound(D2, DC, C2, n: int, theta) -> EthetaBound:
    """(theta D^2/2 - theta^2 (D.C)/2 + theta^3 C^2/6) n^3, with F(theta).

    The O(n^2) correction is not modelled; F(theta) bounds the fraction of
    sums from below only up to O(1/n), hence the "asymptotic" tag.
    """
    data = PairingData(as_rational(D2), as_rational(DC), as_rational(C2))
    t = theta if isinstance(theta, QuadraticScalar) else QuadraticScalar(as_rational(theta))
    if t < 0:
        raise ThetaOutOfRange("theta must be nonnegative")
    if data.C2 > 0 and data.discriminant >= 0:
        _, gp = gamma_roots(data)
        if t > gp:
            raise ThetaOutOfRange(f"theta exceeds gamma' = {gp}")
    val = (t * data.D2 / 2 - t * t * data.DC / 2 + t * t * t * data.C2 / 6) * (n ** 3)
    F = f_theta_data(data, t) if data.D2 != 0 else None
    return EthetaBound(val.p if val.is_rational else val, F)
