import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from subspace_tools import words
from subspace_tools.errors import InputTooLarge, PreconditionFailed
from subspace_tools.automata import thue_morse_direct


def test_complexity_examples():
    tm = thue_morse_direct(64)
    assert [words.complexity(tm, n) for n in (1, 2, 3)] == [2, 4, 6]
    assert words.complexity("0110", 2) == 3
    assert words.factors("0110", 2) == {("0", "1"), ("1", "1"), ("1", "0")}


def test_disjoint_repetition_examples():
    r = words.find_disjoint_repetition("0" * 10)
    assert (r.k, r.n, r.length) == (1, 6, 5)
    r = words.find_disjoint_repetition("abcabc")
    assert (r.k, r.n, r.length) == (1, 4, 3)
    assert words.find_disjoint_repetition("abcdef") is None


def test_lemma_examples():
    r = words.repetition_from_low_complexity("01" * 20, 4, 2)
    assert (r.k, r.n, r.length) == (1, 3, 2)
    r = words.repetition_from_low_complexity("0" * 30, 4, 2)
    assert r.length >= Fraction(4, 3)
    with pytest.raises(PreconditionFailed):
        words.repetition_from_low_complexity(thue_morse_direct(512), 8, 1)


def test_oracle_size_guard():
    with pytest.raises(InputTooLarge):
        words.brute_force_repetition_oracle("0" * 200)


def test_exhaustive_against_oracle():
    # every binary word up to length 12
    for n in range(1, 13):
        for bits in itertools.product("01", repeat=n):
            w = "".join(bits)
            fast = words.find_disjoint_repetition(w)
            slow = words.brute_force_repetition_oracle(w)
            assert (fast is None) == (slow is None), w
            if fast is not None:
                assert fast.length == slow.length, w
                assert fast.is_valid_in(w)


@given(st.text(alphabet="abc", min_size=1, max_size=40), st.integers(1, 8))
def test_complexity_bounds(w, n):
    rho = words.complexity(w, n)
    assert rho <= max(0, len(w) - n + 1)
    assert rho <= 3 ** n
    if n + 1 <= len(w):
        # each length-n factor except possibly the suffix extends to the right
        assert words.complexity(w, n + 1) >= rho - 1


@given(st.text(alphabet="01", min_size=1, max_size=30), st.integers(1, 6))
def test_repetition_is_valid(w, m):
    r = words.find_disjoint_repetition(w, m)
    if r is not None:
        assert r.is_valid_in(w) and r.length >= m


@given(st.text(alphabet="01", min_size=1, max_size=6), st.text(alphabet="01", max_size=6),
       st.integers(1, 10), st.integers(0, 3))
def test_lemma_property(period, pre, n, slack):
    kappa = Fraction(len(pre) + len(period) + 1 + slack, n)
    N = words.lemma_prefix_length(n, kappa)
    w = (pre + period * (N // len(period) + 2))[: N + 3]
    r = words.repetition_from_low_complexity(w, n, kappa)
    assert r.is_valid_in(w[:N])
    assert 3 * r.length >= n
    assert r.length >= words.lemma_epsilon(kappa) * N
