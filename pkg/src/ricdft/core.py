"""Domain types, plan construction and index arithmetic.

The central object is the :class:`RicPlan`, a validated factorization
``N = L * C`` of a signal length.  Arranging an N-point signal as an
L x C rectangle and summing its columns produces a C-point signal whose
transform equals the N-point transform at the index multiples of L (the
"rectangular index coefficients", RICs).  Everything downstream (folding,
engines, the end-to-end pipeline) is parameterized by a plan.

Indices are 0-based throughout.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------

class RicdftError(Exception):
    """Base class for every error raised by this package."""


class NonDivisorError(RicdftError, ValueError):
    """The compressed length does not divide the total length."""


class OutOfRangeError(RicdftError, ValueError):
    """A parameter lies outside its admissible range."""


class LengthMismatchError(RicdftError, ValueError):
    """A sequence length does not match the plan it is used with."""


class NotPowerOfTwoError(RicdftError, ValueError):
    """A length that must be a power of two is not."""


# ---------------------------------------------------------------------------
# Enumerations
# ---------------------------------------------------------------------------

class Direction(str, Enum):
    """Transform direction: FORWARD uses exponent sign -1, INVERSE +1."""

    FORWARD = "forward"
    INVERSE = "inverse"


class NormalizationMode(str, Enum):
    """Scaling convention paired across the forward/inverse transforms.

    NONE          no scaling in either direction (callers own scaling)
    RECIPROCAL_N  inverse carries 1/length, forward is unscaled
    UNITARY       both directions carry 1/sqrt(length)
    """

    NONE = "none"
    RECIPROCAL_N = "recip-n"
    UNITARY = "unitary"


def is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


# ---------------------------------------------------------------------------
# Plans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RicPlan:
    """A validated factorization n = l * c.

    ``c`` is the compressed length (number of retained coefficients), ``l``
    the fold depth.  ``q`` and ``p`` hold log2(n) and log2(c) when both n
    and c are powers of two, else None.
    """

    n: int
    c: int
    l: int
    q: int | None = None
    p: int | None = None

    def __post_init__(self):
        if self.l * self.c != self.n:
            raise NonDivisorError(f"{self.l} * {self.c} != {self.n}")
        if not (2 <= self.c <= self.n // 2):
            raise OutOfRangeError(f"c={self.c} outside [2, {self.n // 2}] for n={self.n}")


def make_plan(n: int, c: int) -> RicPlan:
    """Build the plan folding an n-point sequence down to c points.

    Requires n >= 4, c a divisor of n and 2 <= c <= n/2 (so the fold depth
    l = n/c is at least 2).  The exponent view (q, p) is populated only
    when n and c are both powers of two.
    """
    n, c = int(n), int(c)
    if n < 4:
        raise OutOfRangeError(f"n={n} is too short to fold; need n >= 4")
    if not (2 <= c <= n // 2):
        raise OutOfRangeError(f"c={c} outside [2, {n // 2}] for n={n}")
    if n % c != 0:
        raise NonDivisorError(f"c={c} does not divide n={n}")
    q = p = None
    if is_power_of_two(n) and is_power_of_two(c):
        q = n.bit_length() - 1
        p = c.bit_length() - 1
    return RicPlan(n=n, c=c, l=n // c, q=q, p=p)


def plan_from_exponents(q: int, p: int) -> RicPlan:
    """Build the power-of-two plan with n = 2**q and c = 2**p, p in [1, q-1]."""
    q, p = int(q), int(p)
    if q < 2:
        raise OutOfRangeError(f"q={q} must be at least 2")
    if not (1 <= p <= q - 1):
        raise OutOfRangeError(f"p={p} outside [1, {q - 1}]")
    return make_plan(2 ** q, 2 ** p)


# ---------------------------------------------------------------------------
# Rectangular index arithmetic
# ---------------------------------------------------------------------------

class RectIndex(NamedTuple):
    """Row/column position of a sample in the l x c arrangement."""

    l: int
    c: int


def rect_to_flat(idx: RectIndex, plan: RicPlan) -> int:
    """Flatten a (row, column) position: n = l*C + c."""
    if not (0 <= idx.l < plan.l):
        raise OutOfRangeError(f"row {idx.l} outside [0, {plan.l - 1}]")
    if not (0 <= idx.c < plan.c):
        raise OutOfRangeError(f"column {idx.c} outside [0, {plan.c - 1}]")
    return idx.l * plan.c + idx.c


def flat_to_rect(n: int, plan: RicPlan) -> RectIndex:
    """Invert :func:`rect_to_flat`; recovers the unique (row, column) pair."""
    if not (0 <= n < plan.n):
        raise OutOfRangeError(f"index {n} outside [0, {plan.n - 1}]")
    return RectIndex(l=n // plan.c, c=n % plan.c)


# ---------------------------------------------------------------------------
# Normalization correction
# ---------------------------------------------------------------------------

def correction_factor(mode: NormalizationMode, direction: Direction, plan: RicPlan) -> float:
    """Scale K restoring the n-point normalization after a c-point transform.

    A c-point engine normalizes by c where the caller expects normalization
    by n = l*c.  The bridge is K = 1/l for the reciprocal convention (since
    (1/l)(1/c) = 1/n) and K = 1/sqrt(l) for the unitary one; unscaled
    transforms need no correction.
    """
    if mode is NormalizationMode.NONE:
        return 1.0
    if mode is NormalizationMode.UNITARY:
        return 1.0 / math.sqrt(plan.l)
    # RECIPROCAL_N scales the inverse only; the forward side is unscaled.
    if direction is Direction.INVERSE:
        return 1.0 / plan.l
    return 1.0


# ---------------------------------------------------------------------------
# Operation counting
# ---------------------------------------------------------------------------

class OpCounter:
    """Tally of complex additions and multiplications.

    One instance per computation; counts only grow while a computation
    runs.  Call :meth:`reset` between runs.
    """

    __slots__ = ("complex_adds", "complex_mults")

    def __init__(self):
        self.complex_adds = 0
        self.complex_mults = 0

    def add(self, n: int = 1):
        self.complex_adds += n

    def mul(self, n: int = 1):
        self.complex_mults += n

    def reset(self):
        self.complex_adds = 0
        self.complex_mults = 0

    def __repr__(self):
        return f"OpCounter(complex_adds={self.complex_adds}, complex_mults={self.complex_mults})"


# ---------------------------------------------------------------------------
# Sequence validation
# ---------------------------------------------------------------------------

def as_complex_sequence(x) -> np.ndarray:
    """Coerce to a 1-d complex128 array and reject NaN/Inf samples."""
    arr = np.asarray(x, dtype=np.complex128)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d sequence, got shape {arr.shape}")
    if arr.size < 1:
        raise ValueError("sequence must hold at least one sample")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError("sequence contains non-finite samples")
    return arr
