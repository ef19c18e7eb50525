"""Independent brute-force references shared by the test modules.

Everything here is deliberately written with plain Python loops and cmath
so it exercises none of the library's vectorized code paths.
"""

import cmath

import numpy as np

# The worked 8-point example used across modules and its hand-checked results.
GOLDEN_X = np.array(
    [1 + 1j, 2 + 2j, 3 + 3j, -4 - 4j, -5 - 5j, -6 + 6j, 7 - 7j, 8 + 8j],
    dtype=np.complex128,
)
GOLDEN_FOLD = np.array([-4 - 4j, -4 + 8j, 10 - 4j, 4 + 4j], dtype=np.complex128)
GOLDEN_FORWARD = np.array([6 + 4j, -10 + 8j, 6 - 20j, -18 - 8j], dtype=np.complex128)
GOLDEN_INVERSE_C = np.array([1.5 + 1j, -4.5 - 2j, 1.5 - 5j, -2.5 + 2j], dtype=np.complex128)
GOLDEN_INVERSE_N = np.array([0.75 + 0.5j, -2.25 - 1j, 0.75 - 2.5j, -1.25 + 1j], dtype=np.complex128)


def naive_dft(x, sign=-1, scale=1.0):
    """Textbook double-loop DFT: out[k] = scale * sum x[n] e^{sign 2pi j k n / N}."""
    n = len(x)
    out = []
    for k in range(n):
        acc = 0j
        for i in range(n):
            acc += complex(x[i]) * cmath.exp(sign * 2j * cmath.pi * k * i / n)
        out.append(acc * scale)
    return np.array(out, dtype=np.complex128)


def naive_fold(x, n, c):
    """Column sums of the l x c arrangement, accumulated with Python complex."""
    l = n // c
    out = [0j] * c
    for col in range(c):
        for row in range(l):
            out[col] += complex(x[row * c + col])
    return np.array(out, dtype=np.complex128)


def divisor_pairs(n):
    """All valid (c, l) factorizations with 2 <= c <= n/2."""
    return [(c, n // c) for c in range(2, n // 2 + 1) if n % c == 0]


def random_complex(rng, n, integer=False):
    if integer:
        return rng.integers(-9, 10, n).astype(np.complex128) + 1j * rng.integers(-9, 10, n)
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def plan_is_feasible(n, c, sample_rate, targets, tol):
    """Linear scan over every retained bin; no rounding shortcuts."""
    l = n // c
    bw = sample_rate / n
    for t in targets:
        best = min(abs(k * l * bw - t) for k in range(c))
        if best > tol * t:
            return False
    return True


def exhaustive_best_plan(sample_rate, targets, max_n, power_of_two_only, tol):
    """Minimal (c, n) over every valid divisor pair, or None when nothing fits."""
    best = None
    for n in range(4, max_n + 1):
        if power_of_two_only and n & (n - 1):
            continue
        for c in range(2, n // 2 + 1):
            if n % c:
                continue
            if plan_is_feasible(n, c, sample_rate, targets, tol):
                if best is None or (c, n) < best:
                    best = (c, n)
    return best
