import random

import pytest
from hypothesis import given, strategies as st

from subspace_tools import filtration as fl
from subspace_tools.errors import NotNested
from subspace_tools.verify import random_filtration

E1, E2 = (1, 0), (0, 1)


def test_two_dimensional_example():
    F1 = fl.Filtration(2, ((E1, E2), (E1,)))
    F2 = fl.Filtration(2, ((E1, E2), ((1, 1),)))
    basis = fl.common_filtration_basis(F1, F2)
    assert [tuple(v) for v in basis] == [(1, 0), (1, 1)]
    assert fl.certify(basis, F1, F2)
    assert fl.echelon_oracle(F1, F2) is not None


def test_not_nested():
    with pytest.raises(NotNested):
        fl.Filtration(2, ((E1, E2), (E1,), (E2,)))
    with pytest.raises(NotNested):
        fl.Filtration(2, ((E1,),))


def test_certify_rejects_bad_basis():
    F1 = fl.Filtration(2, ((E1, E2), (E1,)))
    assert not fl.certify([(1, 1), (1, -1)], F1)


@given(st.integers(0, 10 ** 6), st.integers(1, 6))
def test_random_pairs(seed, dim):
    rng = random.Random(seed)
    F1, F2 = random_filtration(rng, dim), random_filtration(rng, dim)
    basis = fl.common_filtration_basis(F1, F2)
    assert fl.certify(basis, F1, F2)
    oracle = fl.echelon_oracle(F1, F2)
    assert oracle is not None and fl.certify(oracle, F1, F2)
