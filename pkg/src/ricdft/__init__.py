"""Fast computation of DFT coefficients whose index is a multiple of l = n/c.

Fold an n-point sequence to c column sums (c*(l-1) complex additions, no
multiplications), transform the c points, and the results equal the full
n-point transform at indices 0, l, 2l, ..., (c-1)l.  The package bundles
the fold, direct and radix-2 engines with operation counting, the
end-to-end pipeline with normalization corrections, a frequency planner,
file formats and a benchmark harness.
"""

from .core import (
    Direction,
    LengthMismatchError,
    NonDivisorError,
    NormalizationMode,
    NotPowerOfTwoError,
    OpCounter,
    OutOfRangeError,
    RectIndex,
    RicdftError,
    RicPlan,
    as_complex_sequence,
    correction_factor,
    flat_to_rect,
    is_power_of_two,
    make_plan,
    plan_from_exponents,
    rect_to_flat,
)
from .engine import TwiddleFactor, dft_direct, fft_radix2, transform, twiddle_table
from .fold import FoldedSequence, fold, fold_spectrum
from .io import (
    SignalFileError,
    SignalFormat,
    read_signal,
    synthesize_tones,
    write_signal,
    write_spectrum,
)
from .planner import (
    Assignment,
    InfeasibleError,
    PlanProposal,
    coverage_report,
    plan_for_frequencies,
)
from .ric import (
    RicSpectrum,
    VerificationReport,
    compare_values,
    ric_dft,
    ric_idft,
    ric_index_set,
    verify_against_oracle,
)
from .bench import BenchConfig, BenchReport, BenchRow, ConfigError, emit_report, run_benchmark

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "BenchConfig",
    "BenchReport",
    "BenchRow",
    "ConfigError",
    "Direction",
    "FoldedSequence",
    "InfeasibleError",
    "LengthMismatchError",
    "NonDivisorError",
    "NormalizationMode",
    "NotPowerOfTwoError",
    "OpCounter",
    "OutOfRangeError",
    "PlanProposal",
    "RectIndex",
    "RicPlan",
    "RicSpectrum",
    "RicdftError",
    "SignalFileError",
    "SignalFormat",
    "TwiddleFactor",
    "VerificationReport",
    "as_complex_sequence",
    "compare_values",
    "correction_factor",
    "coverage_report",
    "dft_direct",
    "fft_radix2",
    "flat_to_rect",
    "fold",
    "fold_spectrum",
    "is_power_of_two",
    "make_plan",
    "plan_for_frequencies",
    "plan_from_exponents",
    "read_signal",
    "rect_to_flat",
    "ric_dft",
    "ric_idft",
    "ric_index_set",
    "run_benchmark",
    "synthesize_tones",
    "transform",
    "twiddle_table",
    "verify_against_oracle",
    "write_signal",
    "write_spectrum",
]
