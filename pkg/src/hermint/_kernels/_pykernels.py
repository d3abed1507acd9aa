"""Pure-Python kernels; reference behaviour for the compiled module."""


def poly_mul(a, b):
    """Convolution of two integer coefficient lists (index = power)."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def gauss_numerator(coeffs):
    """Integrate against the normalized weight sqrt(2/pi) e^{-2x^2}.

    Returns ``(num, den)`` with ``den = 4**J``, ``J = (len(coeffs)-1)//2``,
    using moment(2j) = (2j-1)!!/4^j.
    """
    acc = 0
    df = 1
    top = (len(coeffs) - 1) // 2 if coeffs else 0
    for j in range(top + 1):
        acc = 4 * acc + coeffs[2 * j] * df
        df *= 2 * j + 1
    return acc, 1 << (2 * top)


def h4_value(a, b, c, d, memo):
    """Four-index integral by the three-term recurrence, memoized in ``memo``.

    ``memo`` maps descending-sorted index tuples to ints.
    """
    if (a + b + c + d) & 1:
        return 0
    key = tuple(sorted((a, b, c, d), reverse=True))
    v = memo.get(key)
    if v is not None:
        return v
    n, m, l, j = key
    if n == 0:
        v = 1
    else:
        v = 0
        if n >= 2:
            v -= (n - 1) * h4_value(n - 2, m, l, j, memo)
        if m:
            v += m * h4_value(n - 1, m - 1, l, j, memo)
        if l:
            v += l * h4_value(n - 1, m, l - 1, j, memo)
        if j:
            v += j * h4_value(n - 1, m, l, j - 1, memo)
    memo[key] = v
    return v
