from itertools import permutations, product

from hypothesis import given, strategies as st
import pytest

from hermint.closed import (QuadIndex, closed_H1, closed_H2, closed_H3, closed_H4,
                            expanded_coeff_H1, expanded_coeff_H2, printed_H2, recurrence_H4)
from hermint.errors import ParityError, UnavailableDegreeError
from hermint.exact import double_factorial
from hermint.fixtures import paper_pk
from hermint.moments import oracle_H


def test_quad_index():
    q = QuadIndex(2, 2, 1, 0)
    assert q.sum_parity == 1
    assert QuadIndex.of([3, 1]) == QuadIndex(3, 1, 0, 0)
    with pytest.raises(ValueError):
        QuadIndex(-1, 0, 0, 0)
    with pytest.raises(ValueError):
        QuadIndex.of([1, 2, 3, 4, 5])


@pytest.mark.parametrize("n, expected", [(4, 3), (3, 0), (2, -1), (0, 1), (6, -15)])
def test_closed_H1(n, expected):
    assert closed_H1(n) == expected


@pytest.mark.parametrize("n, m, expected", [(1, 1, 1), (3, 1, -3), (0, 0, 1), (2, 1, 0)])
def test_closed_H2(n, m, expected):
    assert closed_H2(n, m) == expected


def test_closed_H2_embeds_H1():
    assert all(closed_H2(n, 0) == closed_H1(n) for n in range(41))


def test_printed_sign_fails_at_witness():
    assert oracle_H([1, 1]) == 1
    assert printed_H2(1, 1) == -1
    # the two sign conventions agree exactly when m is even
    for n, m in product(range(20), repeat=2):
        if (n + m) % 2 == 0:
            assert (printed_H2(n, m) == closed_H2(n, m)) == (m % 2 == 0)


@pytest.mark.parametrize("t, expected", [((2, 2, 2), 1), ((1, 1, 0), 1), ((4, 0, 0), 3)])
def test_closed_H3(t, expected):
    assert closed_H3(*t) == expected


def test_closed_H3_embeds_H2():
    assert all(closed_H3(n, m, 0) == closed_H2(n, m) for n, m in product(range(31), repeat=2))


def test_closed_H3_small_exhaustive():
    for t in product(range(11), repeat=3):
        assert closed_H3(*t) == oracle_H(t)


@pytest.mark.parametrize("q, expected", [((1, 1, 1, 1), 3), ((2, 2, 1, 1), 7), ((2, 2, 2, 2), 41), ((1, 1, 1, 0), 0)])
def test_closed_H4(q, expected):
    assert closed_H4(QuadIndex(*q), paper_pk) == expected
    assert closed_H4(q) == expected


def test_closed_H4_missing_degree():
    with pytest.raises(UnavailableDegreeError):
        closed_H4(QuadIndex(1, 1, 1, 3), {0: paper_pk(0)})


@pytest.mark.parametrize("q, expected", [((0, 0, 0, 0), 1), ((2, 0, 0, 0), -1), ((2, 2, 0, 0), 3), ((3, 0, 0, 0), 0)])
def test_recurrence_examples(q, expected):
    assert recurrence_H4(QuadIndex(*q)) == expected


def test_recurrence_matches_oracle_small():
    for q in product(range(8), repeat=4):
        assert recurrence_H4(QuadIndex(*q)) == oracle_H(q)


@given(st.tuples(*[st.integers(0, 14)] * 4))
def test_recurrence_permutation_invariant(q):
    values = {recurrence_H4(QuadIndex(*p)) for p in permutations(q)}
    assert len(values) == 1


@pytest.mark.parametrize("n, m, expected", [(1, 1, 1), (3, 1, -3), (2, 0, -1)])
def test_expanded_coeff_H2(n, m, expected):
    assert expanded_coeff_H2(n, m) == expected


def test_expanded_coefficients_match_closed_forms():
    assert all(expanded_coeff_H1(n) == closed_H1(n) for n in range(0, 25, 2))
    assert all(expanded_coeff_H2(n, m) == closed_H2(n, m)
               for n, m in product(range(41), repeat=2) if (n + m) % 2 == 0)
    # (2p)!/(p! 2^p) = (2p-1)!!
    import math
    assert all(math.factorial(2 * p) // (math.factorial(p) * 2 ** p) == double_factorial(2 * p - 1)
               for p in range(30))


def test_expanded_coeff_parity_errors():
    with pytest.raises(ParityError):
        expanded_coeff_H2(1, 2)
    with pytest.raises(ParityError):
        expanded_coeff_H1(3)
