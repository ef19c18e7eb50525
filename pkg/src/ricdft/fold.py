"""Multiplierless lossless compression by column sums.

Viewing an n-point sequence as an l x c rectangle (row-major), the fold
adds the l entries of each column, costing c*(l-1) complex additions and
no multiplications.  The c-point result carries the full information of
the original sequence's transform at index multiples of l.
"""

from dataclasses import dataclass

import numpy as np

from .core import LengthMismatchError, OpCounter, RicPlan, as_complex_sequence


@dataclass(frozen=True)
class FoldedSequence:
    """c-point column sums of an n-point sequence, tagged with its origin."""

    samples: np.ndarray
    source_n: int
    plan: RicPlan


def _column_sums(x: np.ndarray, plan: RicPlan, counter: OpCounter | None) -> np.ndarray:
    rows = x.reshape(plan.l, plan.c)
    # Accumulate in ascending row order; keeps results bit-reproducible.
    out = rows[0].copy()
    for l in range(1, plan.l):
        out += rows[l]
    if counter is not None:
        counter.add(plan.c * (plan.l - 1))
    return out


def fold(x, plan: RicPlan, counter: OpCounter | None = None) -> FoldedSequence:
    """Fold an n-point time-domain signal down to c column sums.

    output[c] = sum over l of x[l*C + c], for c in [0, C-1].
    """
    x = as_complex_sequence(x)
    if len(x) != plan.n:
        raise LengthMismatchError(f"signal has {len(x)} samples, plan expects {plan.n}")
    return FoldedSequence(samples=_column_sums(x, plan, counter), source_n=plan.n, plan=plan)


def fold_spectrum(spectrum, plan: RicPlan, counter: OpCounter | None = None) -> FoldedSequence:
    """Fold an n-point spectrum down to c column sums.

    Same kernel as :func:`fold`; kept as a distinct entry point so the
    forward-path and inverse-path call sites stay distinguishable in logs
    and counters.
    """
    spectrum = as_complex_sequence(spectrum)
    if len(spectrum) != plan.n:
        raise LengthMismatchError(f"spectrum has {len(spectrum)} samples, plan expects {plan.n}")
    return FoldedSequence(samples=_column_sums(spectrum, plan, counter), source_n=plan.n, plan=plan)
