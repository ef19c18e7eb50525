"""Choose (n, c) so target frequencies land exactly on retained bins.

With sample rate fs and length n, bin m sits at m*fs/n Hz and the folded
pipeline retains bins that are multiples of l = n/c.  The planner searches
divisor pairs of candidate lengths for the cheapest plan whose retained
bins cover every requested frequency: minimal c first (the c-point
transform dominates the multiplication count), then minimal n.
"""

import math
from dataclasses import dataclass

from .core import OutOfRangeError, RicdftError, RicPlan, make_plan


@dataclass(frozen=True)
class Assignment:
    """One target frequency mapped onto a retained bin."""

    target: float
    k: int
    bin_index: int
    achieved: float
    rel_error: float


@dataclass(frozen=True)
class PlanProposal:
    plan: RicPlan
    sample_rate: float
    bin_width: float
    assignments: tuple[Assignment, ...]


class InfeasibleError(RicdftError):
    """No candidate plan meets the tolerance; carries the best attempt."""

    def __init__(self, message: str, best_rel_error: float, best_plan: RicPlan | None):
        super().__init__(message)
        self.best_rel_error = best_rel_error
        self.best_plan = best_plan


def _nearest_k(target: float, l: int, bin_width: float, c: int) -> int:
    """Index k of the retained bin k*l nearest to target; ties go lower."""
    pos = target / (l * bin_width)
    lo = min(max(int(math.floor(pos)), 0), c - 1)
    hi = min(lo + 1, c - 1)
    err_lo = abs(lo * l * bin_width - target)
    err_hi = abs(hi * l * bin_width - target)
    return hi if err_hi < err_lo else lo


def _assign(target: float, plan: RicPlan, bin_width: float) -> Assignment:
    k = _nearest_k(target, plan.l, bin_width, plan.c)
    achieved = k * plan.l * bin_width
    rel = 0.0 if target == 0 else abs(achieved - target) / target
    return Assignment(target=target, k=k, bin_index=k * plan.l, achieved=achieved, rel_error=rel)


def _candidate_pairs(max_n: int, power_of_two_only: bool) -> list[tuple[int, int]]:
    """All valid (c, n) pairs with n <= max_n, sorted ascending by (c, n)."""
    pairs = []
    if power_of_two_only:
        n = 4
        while n <= max_n:
            c = 2
            while c <= n // 2:
                pairs.append((c, n))
                c *= 2
            n *= 2
    else:
        for n in range(4, max_n + 1):
            for c in range(2, n // 2 + 1):
                if n % c == 0:
                    pairs.append((c, n))
    pairs.sort()
    return pairs


def plan_for_frequencies(
    sample_rate: float,
    targets,
    max_n: int,
    power_of_two_only: bool = True,
    tol: float = 0.0,
) -> PlanProposal:
    """Search n <= max_n for the cheapest plan covering all targets.

    Returns the feasible proposal with minimal c, ties broken by minimal n.
    Every target must sit within ``tol`` relative error of a retained bin
    (default 0: exact hits only).  Targets must lie strictly inside
    (0, sample_rate/2).  Raises :class:`InfeasibleError` with the best
    achievable error when nothing fits.
    """
    targets = [float(t) for t in targets]
    if sample_rate <= 0:
        raise OutOfRangeError(f"sample_rate must be positive, got {sample_rate}")
    if not targets:
        raise OutOfRangeError("need at least one target frequency")
    for t in targets:
        if not 0.0 < t < sample_rate / 2:
            raise OutOfRangeError(f"target {t} Hz outside (0, {sample_rate / 2}) Hz")
    if max_n < 4:
        raise OutOfRangeError(f"max_n={max_n} must be at least 4")

    best_err = float("inf")
    best_pair: tuple[int, int] | None = None
    for c, n in _candidate_pairs(int(max_n), power_of_two_only):
        plan = make_plan(n, c)
        bin_width = sample_rate / n
        assignments = tuple(_assign(t, plan, bin_width) for t in targets)
        worst = max(a.rel_error for a in assignments)
        if worst <= tol:
            return PlanProposal(
                plan=plan,
                sample_rate=float(sample_rate),
                bin_width=bin_width,
                assignments=assignments,
            )
        if worst < best_err:
            best_err = worst
            best_pair = (n, c)
    detail = ""
    if best_pair is not None:
        detail = f"; best achievable rel_error={best_err:.6g} at n={best_pair[0]}, c={best_pair[1]}"
    raise InfeasibleError(
        f"no plan with n <= {max_n} hits all targets within tol={tol}{detail}",
        best_rel_error=best_err,
        best_plan=make_plan(*best_pair) if best_pair is not None else None,
    )


def coverage_report(proposal: PlanProposal, extra_targets) -> list[Assignment]:
    """Map extra frequencies onto the proposal's retained bins (read-only).

    Nearest retained bin wins; exact midpoints resolve to the lower bin.
    """
    rows = []
    for t in extra_targets:
        t = float(t)
        if t < 0:
            raise OutOfRangeError(f"target {t} Hz is negative")
        rows.append(_assign(t, proposal.plan, proposal.bin_width))
    return rows
