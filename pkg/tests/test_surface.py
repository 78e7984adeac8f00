import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from subspace_tools import surface as sf
from subspace_tools.errors import (
    HodgeViolation,
    OutOfRiemannRochRange,
    PositivityViolation,
    ScreenFailed,
    ThetaOutOfRange,
)
from subspace_tools.surface import IntersectionMatrix, PairingData

ONES4 = IntersectionMatrix.all_ones(4)
ONES3 = IntersectionMatrix.all_ones(3)
P1P1 = IntersectionMatrix(((0, 1, 0, 1), (1, 0, 1, 0), (0, 1, 0, 1), (1, 0, 1, 0)))


def test_pairings():
    assert sf.d_squared(ONES4, [1, 1, 1, 1]) == 16
    assert sf.d_dot(ONES4, [1, 2, 3, 4], 2) == 10


def test_autissier_examples():
    assert sf.autissier_lhs(PairingData.of(ONES4, [1] * 4, 1)) == Fraction(14, 3)
    assert all(sf.autissier_check(ONES4, [1] * 4))
    assert sf.autissier_lhs(PairingData.of(ONES3, [1] * 3, 1)) == Fraction(7, 2)
    assert not any(sf.autissier_check(ONES3, [1] * 3))


def test_gamma_and_f():
    d = PairingData(Fraction(3), Fraction(2), Fraction(1))
    g, gp = sf.gamma_roots(d)
    assert g == 1 and gp == 3
    assert sf.f_theta_data(d, g) == Fraction(4, 9)
    with pytest.raises(HodgeViolation):
        sf.gamma_roots(PairingData(Fraction(3), Fraction(1), Fraction(1)))


def test_cz_check():
    assert all(sf.cz_check(ONES4, [1] * 4))
    assert not any(sf.cz_check(IntersectionMatrix(((1,),)), [1]))


def test_weights_and_levin():
    assert sf.fixed_point_weights(IntersectionMatrix(((1, 2), (2, 1))), Fraction(1, 10)).weights == (1, 1)
    res = sf.levin_check(ONES4)
    assert res.weights == (1, 1, 1, 1)
    with pytest.raises(ScreenFailed):
        sf.levin_check(P1P1)
    with pytest.raises(ScreenFailed):
        sf.levin_check(ONES3)
    with pytest.raises(PositivityViolation):
        sf.fixed_point_weights(P1P1, Fraction(1, 10))


def test_curve_budget_examples():
    assert sf.curve_budget(3, 0, 1).A == 2
    cb = sf.curve_budget(3, 1, 1)
    assert cb.A == 0 and cb.minimal_n == 2
    assert sf.minimal_positive_n(2, 1) is None
    with pytest.raises(OutOfRiemannRochRange):
        sf.curve_budget(1, 3, 1)


def test_etheta():
    b = sf.etheta_lower_bound(3, 2, 1, 1, 1)
    assert b.cubic_term == Fraction(2, 3) and b.F == Fraction(4, 9) and b.tag == "asymptotic"
    with pytest.raises(ThetaOutOfRange):
        sf.etheta_lower_bound(3, 2, 1, 1, 4)


valid_data = st.tuples(st.integers(1, 60), st.integers(1, 60), st.integers(1, 30)).map(
    lambda t: PairingData(Fraction(t[0]), Fraction(math.isqrt(t[0] * t[1]) + t[2]), Fraction(t[1]))
)


@given(valid_data)
def test_gamma_is_optimal_against_beta_half(d):
    g, _ = sf.gamma_roots(d)
    assert sf.f_theta_data(d, g) >= sf.f_theta_data(d, sf.beta_half(d))


@given(valid_data)
def test_autissier_lhs_is_four_f_beta_half(d):
    assert sf.autissier_lhs(d) == 4 * sf.f_theta_data(d, sf.beta_half(d))


@given(st.integers(3, 8), st.integers(0, 6))
def test_minimal_n_is_minimal(r, g):
    n0 = sf.minimal_positive_n(r, g)
    assert sf.curve_budget(r, g, n0).A > 0
    for n in range(1, n0):
        if n * r > 2 * g - 2:
            assert sf.curve_budget(r, g, n).A <= 0


@given(st.integers(4, 5), st.data())
def test_levin_certificates(r, data):
    rows = [[0] * r for _ in range(r)]
    for i in range(r):
        for j in range(i, r):
            rows[i][j] = rows[j][i] = data.draw(st.integers(1, 10))
    M = IntersectionMatrix(tuple(map(tuple, rows)))
    res = sf.levin_check(M)
    assert all(sf.autissier_check(M, res.weights))
    assert all(w > 0 for w in res.weights)
