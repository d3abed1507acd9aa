from fractions import Fraction

from hypothesis import given, strategies as st
import pytest

from hermint.errors import DomainError
from hermint.exact import Rat, binomial, double_factorial, is_even_sum, is_valid_df_arg


@pytest.mark.parametrize("a, expected", [
    (-1, 1), (-3, -1), (-5, Fraction(1, 3)), (0, 1), (1, 1), (5, 15), (6, 48), (-7, Fraction(-1, 15)),
])
def test_double_factorial_values(a, expected):
    assert double_factorial(a) == expected


@pytest.mark.parametrize("a", [-2, -4, -100])
def test_double_factorial_even_negative_is_domain_error(a):
    with pytest.raises(DomainError):
        double_factorial(a)
    assert not is_valid_df_arg(a)


@given(st.integers(0, 300))
def test_pairing_identity(n):
    assert double_factorial(2 * n - 1) * double_factorial(-2 * n - 1) == (-1) ** n


@given(st.integers(2, 400))
def test_recursion(a):
    assert double_factorial(a) == a * double_factorial(a - 2)


@given(st.integers(-401, 400).filter(is_valid_df_arg))
def test_never_zero_and_backward_recursion(a):
    v = double_factorial(a)
    assert v != 0
    if a % 2 and a < 1:
        assert v == double_factorial(a + 2) / (a + 2)


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(10, 5) == 252
    assert all(binomial(p, 0) == 1 for p in range(50))
    with pytest.raises(DomainError):
        binomial(3, 4)


@pytest.mark.parametrize("idx, expected", [([1, 1], True), ([1, 1, 1], False), ([2, 2, 1, 1], True), ([], True)])
def test_is_even_sum(idx, expected):
    assert is_even_sum(idx) is expected


def test_rat_normalized():
    assert Rat(0, 7).denominator == 1
    assert Rat(6, -4) == Rat(-3, 2) and Rat(6, -4).denominator == 2


@given(st.integers(), st.integers(1, 10 ** 40), st.integers(), st.integers(1, 10 ** 40))
def test_rat_exact(p, q, r, s):
    big = 10 ** 60
    a, b = Rat(p * big + 1, q), Rat(r, s)
    assert (a + b) - b == a
    assert (a * b) / b == a if b else True
