"""Cost comparison: folded pipeline vs full-length transforms.

For each (n, c) cell the harness runs up to three methods on the same
pseudorandom input: ``ric`` (fold then c-point transform), ``full`` (full
n-point transform, then select the retained indices) and ``direct`` (full
quadratic reference, small n only).  It records exact operation counts,
median wall time over repeated trials and the disagreement against the
most trustworthy method present.  Counts, not timings, are the
acceptance-bearing quantities; timed regions run one method at a time on
a monotonic clock with warm-up runs discarded.
"""

import csv
import json
import statistics
import time
from dataclasses import dataclass, field

import numpy as np

from .core import Direction, NormalizationMode, OpCounter, RicdftError, make_plan
from .engine import dft_direct, transform
from .ric import ric_dft, ric_index_set

COUNT_NOTE = (
    "direct engine counts every twiddle product (m*m mults, m*(m-1) adds); "
    "radix-2 engine counts one mult and two adds per butterfly, trivial "
    "twiddles included; fold counts c*(l-1) adds and no mults"
)


class ConfigError(RicdftError, ValueError):
    """The benchmark grid or trial configuration is unusable."""


@dataclass
class BenchConfig:
    n_list: tuple = ()
    c_policy: str = "pow2"  # "all" | "pow2" | "explicit"
    c_list: tuple = ()
    trials: int = 9
    seed: int = 0
    warmup: int = 1
    direct_limit: int = 1024  # quadratic reference runs only for n <= this


@dataclass(frozen=True)
class BenchRow:
    n: int
    c: int
    l: int
    method: str
    complex_adds: int
    complex_mults: int
    wall_time_ns: int
    trials: int
    max_rel_error: float


@dataclass(frozen=True)
class BenchReport:
    rows: tuple = field(default_factory=tuple)
    seed: int = 0
    trials: int = 0
    note: str = COUNT_NOTE


def _cs_for(n: int, config: BenchConfig) -> list[int]:
    if config.c_policy == "explicit":
        if not config.c_list:
            raise ConfigError("c_policy 'explicit' needs a non-empty c_list")
        for c in config.c_list:
            if n % c != 0 or not 2 <= c <= n // 2:
                raise ConfigError(f"c={c} is not a valid compressed length for n={n}")
        return sorted(int(c) for c in config.c_list)
    if config.c_policy == "all":
        return [c for c in range(2, n // 2 + 1) if n % c == 0]
    if config.c_policy == "pow2":
        cs = []
        c = 2
        while c <= n // 2:
            if n % c == 0:
                cs.append(c)
            c *= 2
        return cs
    raise ConfigError(f"unknown c_policy {config.c_policy!r}")


def _timed(fn, trials: int, warmup: int):
    """Run fn(counter) warmup+trials times; return (last output, counts, median ns)."""
    for _ in range(warmup):
        fn(OpCounter())
    times = []
    out = None
    counter = None
    for _ in range(trials):
        counter = OpCounter()
        t0 = time.perf_counter_ns()
        out = fn(counter)
        times.append(time.perf_counter_ns() - t0)
    return out, counter, int(statistics.median(times))


def run_benchmark(config: BenchConfig) -> BenchReport:
    """Run the grid; deterministic inputs derive from (seed, n)."""
    if not config.n_list:
        raise ConfigError("empty n grid")
    if config.trials < 1:
        raise ConfigError(f"trials={config.trials} must be at least 1")
    rows = []
    for n in sorted(set(int(v) for v in config.n_list)):
        cs = _cs_for(n, config)
        if not cs:
            raise ConfigError(f"n={n} admits no valid compressed length under policy {config.c_policy!r}")
        rng = np.random.default_rng((config.seed, n))
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        for c in cs:
            plan = make_plan(n, c)
            idx = ric_index_set(plan)

            methods = [
                ("ric", lambda ctr: ric_dft(x, plan, NormalizationMode.NONE, ctr).values),
                ("full", lambda ctr: transform(x, Direction.FORWARD, NormalizationMode.NONE, ctr)[idx]),
            ]
            if n <= config.direct_limit:
                methods.append(
                    ("direct", lambda ctr: dft_direct(x, Direction.FORWARD, NormalizationMode.NONE, ctr)[idx])
                )

            cell = [(name,) + _timed(fn, config.trials, config.warmup) for name, fn in methods]
            reference_name = "direct" if n <= config.direct_limit else "full"
            reference = next(out for name, out, _, _ in cell if name == reference_name)
            denom = float(np.max(np.abs(reference)))
            for name, out, counter, median_ns in cell:
                err = float(np.max(np.abs(out - reference)))
                rel = 0.0 if name == reference_name else (err / denom if denom > 0 else err)
                rows.append(
                    BenchRow(
                        n=n, c=c, l=plan.l, method=name,
                        complex_adds=counter.complex_adds,
                        complex_mults=counter.complex_mults,
                        wall_time_ns=median_ns, trials=config.trials,
                        max_rel_error=rel,
                    )
                )
    rows.sort(key=lambda r: (r.n, r.c, r.method))
    return BenchReport(rows=tuple(rows), seed=config.seed, trials=config.trials)


def _row_dict(row: BenchRow) -> dict:
    return {
        "n": row.n, "c": row.c, "l": row.l, "method": row.method,
        "complex_adds": row.complex_adds, "complex_mults": row.complex_mults,
        "wall_time_ns": row.wall_time_ns, "trials": row.trials,
        "max_rel_error": row.max_rel_error,
    }


FIELDS = ["n", "c", "l", "method", "complex_adds", "complex_mults",
          "wall_time_ns", "trials", "max_rel_error"]


def emit_report(report: BenchReport, path, fmt="csv"):
    """Serialize the report as csv, json or a markdown table."""
    fmt = str(fmt).lower()
    if fmt == "csv":
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(FIELDS)
            for row in report.rows:
                d = _row_dict(row)
                writer.writerow([repr(d[k]) if k == "max_rel_error" else d[k] for k in FIELDS])
    elif fmt == "json":
        doc = {
            "seed": report.seed,
            "trials": report.trials,
            "note": report.note,
            "rows": [_row_dict(r) for r in report.rows],
        }
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    elif fmt == "markdown":
        with open(path, "w") as fh:
            fh.write("| " + " | ".join(FIELDS) + " |\n")
            fh.write("|" + "|".join(" --- " for _ in FIELDS) + "|\n")
            for row in report.rows:
                d = _row_dict(row)
                fh.write("| " + " | ".join(str(d[k]) for k in FIELDS) + " |\n")
            fh.write(f"\nCounting convention: {report.note}\n")
    else:
        raise ConfigError(f"unknown report format {fmt!r}")
