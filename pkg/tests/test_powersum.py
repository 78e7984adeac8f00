from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from subspace_tools import powersum as ps
from subspace_tools.errors import IrrationalObstruction, NonpositiveRoot, ZeroInput
from subspace_tools.powersum import GaussianRational, PowerSum

P = PowerSum.parse


def test_parse_and_canonical_form():
    u = P("1 + 2*2^n + 4^n")
    assert u.roots == [4, 2, 1]
    assert str(u) == "4^n + 2*2^n + 1"
    assert ps.canonicalize([(1, 2), (-1, 2)]).is_zero
    with pytest.raises(NonpositiveRoot):
        ps.canonicalize([(1, -2)])


def test_json_roundtrip():
    u = P("3*5^n - 2*(1/2)^n")
    assert PowerSum.from_json(u.to_json()) == u


def test_evaluate_and_progression():
    u = P("2^n + 3^n")
    assert ps.evaluate(u, 3) == 35
    assert ps.progression(u, 2, 1) == P("3*9^n + 2*4^n")


def test_qth_root_examples():
    assert ps.qth_root(P("4^n + 2*2^n + 1"), 2) == P("2^n + 1")
    assert ps.qth_root(P("4^n"), 2) == P("2^n")
    with pytest.raises(IrrationalObstruction):
        ps.qth_root(P("2^n"), 2)


def test_pisot_examples():
    d = ps.pisot_decompose(P("4^n + 2*2^n + 1"), 2)
    assert (d.Q, d.R, d.w) == (2, 0, P("4^n + 1"))
    d = ps.pisot_decompose(P("2^n"), 2)
    assert (d.Q, d.R, d.w) == (2, 0, P("2^n"))
    assert ps.pisot_decompose(P("2^n + 3^n"), 2) is None
    with pytest.raises(ZeroInput):
        ps.pisot_decompose(PowerSum(()), 2)


def test_universal_hilbert():
    assert ps.roots_multiplicatively_independent([6, 10, 15])
    assert not ps.roots_multiplicatively_independent([2, 4])
    assert ps.is_universal_hilbert_candidate(P("2^n + 3^n"))
    assert not ps.is_universal_hilbert_candidate(P("2^n + 4^n"))
    assert not ps.is_universal_hilbert_candidate(P("2^n"))


def test_dominance():
    roots = [GaussianRational.parse(z) for z in ("8+i", "8-i", "2+i", "2-i")]
    assert ps.has_dominant_root(roots, "upper") == (False, None)
    ok, w = ps.has_dominant_root([GaussianRational.parse("2+i"), GaussianRational(1)], "lower")
    assert ok and w == GaussianRational(1)
    assert str(GaussianRational.parse("8-i")) == "8-i"


def test_dominance_bound():
    u = P("2^n - 3")
    n0 = ps.dominance_bound(u)
    assert all(ps.evaluate(u, n) != 0 for n in range(n0, n0 + 30))


roots = st.fractions(min_value=Fraction(1, 6), max_value=12, max_denominator=6).filter(lambda x: x > 0)
coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=4).filter(lambda x: x != 0)
power_sums = st.lists(st.tuples(coeffs, roots), min_size=1, max_size=4).map(ps.canonicalize).filter(lambda u: not u.is_zero)


@given(power_sums, st.sampled_from([2, 3]))
def test_root_of_power_recovers(v, q):
    got = ps.qth_root(ps.power(v, q), q)
    expected = v if (q % 2 or v.terms[0][0] > 0) else -v
    assert got == expected


@given(power_sums, power_sums, st.integers(0, 6))
def test_ring_operations_pointwise(u, v, n):
    assert ps.evaluate(ps.add(u, v), n) == ps.evaluate(u, n) + ps.evaluate(v, n)
    assert ps.evaluate(ps.mul(u, v), n) == ps.evaluate(u, n) * ps.evaluate(v, n)


@given(power_sums, st.integers(1, 4), st.integers(0, 3), st.integers(0, 5))
def test_progression_pointwise(u, Q, R, n):
    R = R % Q
    assert ps.evaluate(ps.progression(u, Q, R), n) == ps.evaluate(u, Q * n + R)


@given(st.lists(st.integers(2, 40), min_size=1, max_size=4, unique=True))
def test_independence_rejects_powers(base):
    # adding a product of existing roots always creates a dependency
    extra = base[0] * base[-1]
    if extra in base:
        return
    assert not ps.roots_multiplicatively_independent(base + [extra])
