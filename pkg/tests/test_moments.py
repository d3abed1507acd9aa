from itertools import product

from hypothesis import given, strategies as st
import pytest

from hermint.exact import Rat, double_factorial
from hermint.moments import (integrate_poly, integrate_poly_slow, moment, moment_table,
                             oracle_H)


@pytest.mark.parametrize("k, expected", [(0, 1), (2, Rat(1, 4)), (4, Rat(3, 16)), (3, 0)])
def test_moment_examples(k, expected):
    assert moment(k) == expected


def test_moment_table_consistency():
    table = moment_table(80)
    assert table[0] == 1
    for j in range(1, 41):
        assert table[2 * j] == Rat(2 * j - 1, 4) * table[2 * j - 2]
        assert moment(2 * j) * 4 ** j == double_factorial(2 * j - 1)


@pytest.mark.parametrize("p, expected", [((1,), 1), ((-2, 0, 4), -1), ((12, 0, -48, 0, 16), 3), ((), 0)])
def test_integrate_poly(p, expected):
    assert integrate_poly(p) == expected


@given(st.lists(st.integers(-10 ** 12, 10 ** 12), max_size=40))
def test_integrate_paths_agree(p):
    assert integrate_poly(p) == integrate_poly_slow(p)


@pytest.mark.parametrize("idx, expected", [([1, 1], 1), ([2, 2, 2, 2], 41), ([1, 1, 1], 0), ([2, 2, 1, 1], 7)])
def test_oracle_examples(idx, expected):
    assert oracle_H(idx) == expected


@given(st.lists(st.integers(0, 10), min_size=1, max_size=5), st.randoms(use_true_random=False))
def test_oracle_permutation_and_padding(idx, rnd):
    shuffled = list(idx)
    rnd.shuffle(shuffled)
    assert oracle_H(shuffled) == oracle_H(idx)
    assert oracle_H(idx + [0]) == oracle_H(idx)


def test_odd_sum_vanishes_exhaustive():
    # integrand is odd; evaluate the integral rather than trusting the parity shortcut
    from hermint.hermite import hermite_product
    for q in product(range(16), repeat=3):
        if sum(q) % 2:
            assert integrate_poly(hermite_product(q)) == 0
            assert oracle_H(q) == 0
