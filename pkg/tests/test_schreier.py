import pytest
from hypothesis import given, strategies as st

from colorlie.lyndon import derived_generator_counts
from colorlie.operators import op_E
from colorlie.schreier import epsilon_univariate, schreier_generators_series
from colorlie.series import Series

N = 10


def uni(coeffs, n=N):
    return Series.univariate(coeffs, n)


def partitions_into(parts, n):
    """Number of partitions of n into the given part sizes (with repetition)."""
    if n == 0:
        return 1
    if not parts:
        return 0
    first, rest = parts[0], parts[1:]
    return sum(partitions_into(rest, n - k * first) for k in range(n // first + 1))


def test_epsilon_zero():
    assert epsilon_univariate(uni([0])) == 1


def test_epsilon_binomial():
    assert epsilon_univariate(uni([0, 2])) == uni([n + 1 for n in range(N + 1)])


def test_epsilon_partitions():
    got = epsilon_univariate(uni([0, 1, 1], 5)).coefficients()
    assert got == [1, 1, 2, 2, 3, 3]
    assert got == [partitions_into([1, 2], n) for n in range(6)]


def test_epsilon_rejects_bad_input():
    with pytest.raises(ValueError):
        epsilon_univariate(uni([1, 1]))
    with pytest.raises(ValueError):
        epsilon_univariate(uni([0, -1]))
    from fractions import Fraction
    with pytest.raises(ValueError):
        epsilon_univariate(uni([0, Fraction(1, 2)]))


@given(st.lists(st.integers(0, 4), min_size=1, max_size=N))
def test_epsilon_is_E_on_integer_series(coeffs):
    f = uni([0] + coeffs)
    assert epsilon_univariate(f) == op_E(f)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=N))
def test_quotient_by_whole_algebra(coeffs):
    hx = uni([0] + coeffs)
    assert schreier_generators_series(hx, uni([0])) == hx


def test_whole_algebra():
    assert schreier_generators_series(uni([0, 2]), uni([0])) == uni([0, 2])


def test_rank_one():
    assert schreier_generators_series(uni([0, 1]), uni([0, 1])).is_zero()


@pytest.mark.parametrize("r", [2, 3])
def test_derived_subalgebra(r):
    hz = schreier_generators_series(uni([0, r]), uni([0, r])).coefficients()
    assert hz == derived_generator_counts(r, N)
    if r == 2:
        assert hz[2:] == [n - 1 for n in range(2, N + 1)]


def test_inconsistent_inputs():
    with pytest.raises(ValueError):
        schreier_generators_series(uni([0, 1]), uni([0, 3]))
