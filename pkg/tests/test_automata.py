from fractions import Fraction

import pytest

from subspace_tools import automata
from subspace_tools.errors import InvalidAutomaton, InvalidDigit


def test_figure1_examples():
    m = automata.figure1_machine()
    assert m.run([0, 0, 1, 0, 0]) == "b"
    assert "".join(automata.automatic_term(m, n) for n in range(5)) == "babaa"


def test_base_digits():
    assert automata.base_digits(0, 2) == [0]
    assert automata.base_digits(6, 2) == [1, 1, 0]
    assert automata.base_digits(10, 3) == [1, 0, 1]


def test_thue_morse_agreement():
    N = 2 ** 16
    tm = automata.automatic_prefix(automata.thue_morse_machine(), N)
    assert str(tm)[:8] == "01101001"
    assert tm.symbols == automata.thue_morse_direct(N).symbols


def test_invalid_inputs():
    m = automata.figure1_machine()
    with pytest.raises(InvalidDigit):
        m.run([2])
    d = m.to_dict()
    d["initial"] = "Q"
    with pytest.raises(InvalidAutomaton):
        automata.FiniteAutomaton.from_dict(d)


def test_roundtrip_and_resolution():
    m = automata.figure1_machine()
    assert automata.FiniteAutomaton.from_dict(m.to_dict()) == m
    assert automata.resolve_machine("examples/figure1.json") == m
    assert automata.resolve_machine("thue-morse") == automata.thue_morse_machine()


def test_slope_regression():
    assert automata.measured_complexity_slope(automata.thue_morse_machine(), 4096, 32) == Fraction(16, 5)
    assert automata.measured_complexity_slope(automata.figure1_machine(), 4096, 32) == Fraction(423, 32)


def test_slope_grows_then_settles():
    m = automata.figure1_machine()
    slopes = [automata.measured_complexity_slope(m, N, 32) for N in (1024, 2048, 4096, 8192)]
    assert slopes == sorted(slopes)
    assert slopes[-1] == slopes[-2]


def test_constant_machine():
    m = automata.bundled_machine("constant")
    w = automata.automatic_prefix(m, 50)
    assert len(set(w.symbols)) == 1
