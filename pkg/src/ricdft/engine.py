"""Transform engines for the compressed sequences.

Two engines share one contract: a direct quadratic DFT/IDFT that serves as
the correctness reference for any length, and an iterative radix-2 FFT for
power-of-two lengths.  :func:`transform` dispatches between them.

Twiddle exponents are reduced modulo the order in integer arithmetic
before any trig evaluation, so W_M**a == W_M**(a mod M) holds to machine
precision even for huge exponents.

Operation counting conventions: the direct engine counts every twiddle
product (including multiplications by 1, -1, +-j) as one complex
multiplication, M*M in total, plus M*(M-1) complex additions.  The radix-2
engine counts one complex multiplication and two complex additions per
butterfly, i.e. (M/2)*log2(M) multiplications and M*log2(M) additions;
trivial twiddles are multiplied and counted like any other.  Output
scaling applied by a normalization mode is not counted.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    Direction,
    NormalizationMode,
    NotPowerOfTwoError,
    OpCounter,
    as_complex_sequence,
    is_power_of_two,
)

__all__ = [
    "Direction",
    "TwiddleFactor",
    "twiddle_table",
    "dft_direct",
    "fft_radix2",
    "transform",
]


@dataclass(frozen=True)
class TwiddleFactor:
    """W_order**exponent = exp(2j*pi*exponent/order), exponent any integer."""

    order: int
    exponent: int

    @property
    def value(self) -> complex:
        r = self.exponent % self.order  # exact periodicity, keeps the angle small
        return complex(np.exp(2j * np.pi * (r / self.order)))


# Per-length tables of W_M**(-r) for r = 0..M-1, built once and then
# read-shared.  Inverse-direction values are exact conjugates.
_tables: dict[int, np.ndarray] = {}
_bitrev: dict[int, np.ndarray] = {}


def twiddle_table(order: int) -> np.ndarray:
    """Forward twiddle table: entry r holds exp(-2j*pi*r/order)."""
    table = _tables.get(order)
    if table is None:
        table = np.exp(-2j * np.pi * np.arange(order) / order)
        table.setflags(write=False)
        _tables[order] = table
    return table


def _bit_reversal(m: int) -> np.ndarray:
    perm = _bitrev.get(m)
    if perm is None:
        bits = m.bit_length() - 1
        idx = np.arange(m)
        perm = np.zeros(m, dtype=np.int64)
        for _ in range(bits):
            perm = (perm << 1) | (idx & 1)
            idx >>= 1
        perm.setflags(write=False)
        _bitrev[m] = perm
    return perm


def _scale(mode: NormalizationMode, direction: Direction, m: int) -> float:
    if mode is NormalizationMode.UNITARY:
        return 1.0 / math.sqrt(m)
    if mode is NormalizationMode.RECIPROCAL_N and direction is Direction.INVERSE:
        return 1.0 / m
    return 1.0


def dft_direct(
    x,
    direction: Direction = Direction.FORWARD,
    mode: NormalizationMode = NormalizationMode.NONE,
    counter: OpCounter | None = None,
) -> np.ndarray:
    """Direct evaluation of the transform definition, O(M**2).

    output[k] = scale * sum over n of x[n] * W_M**(-+ k*n), with the sign
    chosen by ``direction`` and the scale by ``mode``.  Valid for any
    length; this is the reference the fast paths are checked against.
    """
    x = as_complex_sequence(x)
    m = len(x)
    table = twiddle_table(m)
    if direction is Direction.INVERSE:
        table = table.conj()
    out = np.empty(m, dtype=np.complex128)
    n_idx = np.arange(m, dtype=np.int64)
    chunk = max(1, (1 << 21) // m)  # bound the k*n index block to ~16 MB
    for k0 in range(0, m, chunk):
        k_idx = np.arange(k0, min(k0 + chunk, m), dtype=np.int64)
        out[k0 : k0 + len(k_idx)] = table[(k_idx[:, None] * n_idx) % m] @ x
    if counter is not None:
        counter.mul(m * m)
        counter.add(m * (m - 1))
    s = _scale(mode, direction, m)
    if s != 1.0:
        out *= s
    return out


def fft_radix2(
    x,
    direction: Direction = Direction.FORWARD,
    mode: NormalizationMode = NormalizationMode.NONE,
    counter: OpCounter | None = None,
) -> np.ndarray:
    """Iterative decimation-in-time radix-2 FFT for power-of-two lengths.

    Matches :func:`dft_direct` on the same inputs up to roundoff.
    """
    x = as_complex_sequence(x)
    m = len(x)
    if not is_power_of_two(m):
        raise NotPowerOfTwoError(f"length {m} is not a power of two")
    y = x[_bit_reversal(m)]  # fancy indexing copies; input stays untouched
    half = 1
    while half < m:
        step = half * 2
        w = twiddle_table(step)[:half]
        if direction is Direction.INVERSE:
            w = w.conj()
        blocks = y.reshape(-1, step)
        hi = blocks[:, half:] * w
        lo = blocks[:, :half]
        blocks[:, half:] = lo - hi
        blocks[:, :half] = lo + hi
        if counter is not None:
            counter.mul(m // 2)
            counter.add(m)
        half = step
    s = _scale(mode, direction, m)
    if s != 1.0:
        y *= s
    return y


def transform(
    x,
    direction: Direction = Direction.FORWARD,
    mode: NormalizationMode = NormalizationMode.NONE,
    counter: OpCounter | None = None,
) -> np.ndarray:
    """Dispatch to the radix-2 engine for power-of-two lengths, else direct."""
    x = as_complex_sequence(x)
    if is_power_of_two(len(x)):
        return fft_radix2(x, direction, mode, counter)
    return dft_direct(x, direction, mode, counter)
