"""Backend equivalence: the compiled and pure-Python kernels agree exactly."""
from hypothesis import given, settings, strategies as st
import pytest

from hermint import _kernels
from hermint._kernels import _pykernels

ints = st.lists(st.integers(-10 ** 30, 10 ** 30), max_size=90)


def test_selected_backend_is_available():
    assert _kernels.BACKEND in _kernels.available_backends()


@given(ints, ints)
@settings(max_examples=60)
def test_poly_mul(a, b):
    for mod in _kernels.available_backends().values():
        assert mod.poly_mul(list(a), list(b)) == _naive_mul(a, b)


def _naive_mul(a, b):
    if not a or not b:
        return []
    return [sum(a[i] * b[k - i] for i in range(len(a)) if 0 <= k - i < len(b))
            for k in range(len(a) + len(b) - 1)]


@given(st.lists(st.integers(-10 ** 20, 10 ** 20), min_size=1, max_size=160))
@settings(max_examples=60)
def test_gauss_numerator_high_degree(coeffs):
    # degrees past 64 exercise shifts wider than a machine word
    ref = _pykernels.gauss_numerator(coeffs)
    for mod in _kernels.available_backends().values():
        assert mod.gauss_numerator(coeffs) == ref
    assert ref[1] == 4 ** ((len(coeffs) - 1) // 2)


def test_h4_value_backends_agree(backend):
    memo, ref_memo = {}, {}
    for q in [(0, 0, 0, 0), (2, 2, 1, 1), (2, 2, 2, 2), (7, 5, 3, 1), (14, 13, 9, 2), (20, 20, 20, 20)]:
        assert backend.h4_value(*q, memo) == _pykernels.h4_value(*q, ref_memo)
    assert memo == ref_memo


def test_h4_value_odd_sum_is_zero(backend):
    assert backend.h4_value(1, 1, 1, 0, {}) == 0


@pytest.mark.parametrize("q, expected", [((2, 2, 2, 2), 41), ((2, 2, 1, 1), 7), ((1, 1, 1, 1), 3)])
def test_h4_value_fixtures(backend, q, expected):
    assert backend.h4_value(*q, {}) == expected


def test_env_var_forces_fallback():
    import subprocess
    import sys
    out = subprocess.run(
        [sys.executable, "-c", "import hermint; print(hermint.BACKEND)"],
        env={"HERMINT_PURE_PYTHON": "1", "PATH": ""}, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
