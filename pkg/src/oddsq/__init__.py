"""Prime counting between consecutive odd squares via divisor multiplicities.

For each k >= 1 the open window ((2k-1)^2, (2k+1)^2) satisfies the exact
identity P = N - S + E, where N = 4k-1 counts the odd integers, S their
total divisor multiplicity, E the excess beyond one, and P the odd primes.
Every quantity has an independent second route (segmented sieve, closed
divisor form, binomial expansion oracle) and the package cross-checks them.
"""

from .bhp_bound import (
    BhpCrossoverResult,
    VerifiedRangeReport,
    bhp_condition,
    bhp_crossover,
    verified_range_report,
)
from .errors import (
    BudgetExceededError,
    CertificateError,
    DomainError,
    MemoryCapError,
    OracleMismatchError,
    RangeError,
)
from .inclusion_exclusion import (
    OscillationReport,
    l_term,
    l_term_oracle,
    oscillation,
)
from .interval_counts import (
    IntervalSummary,
    MultiplicityHistogram,
    Predicate,
    RatioRow,
    ScanOutcome,
    condition_margin,
    count_odd_multiples,
    endpoints,
    histogram,
    n_count,
    r_values,
    ratio_report,
    s_via_divisor_form,
    scan,
    summarize,
)
from .multiplicity import (
    Classification,
    MatrixPosition,
    MultiplicityRecord,
    classify,
    divisor_witnesses,
    entry,
    multiplicity,
    multiplicity_record,
    positions,
)
from .sieve_oracle import PrimeWindow, base_primes, odd_primes_in, p_oracle

__version__ = "0.1.0"

__all__ = [
    "BhpCrossoverResult",
    "BudgetExceededError",
    "CertificateError",
    "Classification",
    "DomainError",
    "IntervalSummary",
    "MatrixPosition",
    "MemoryCapError",
    "MultiplicityHistogram",
    "MultiplicityRecord",
    "OracleMismatchError",
    "OscillationReport",
    "Predicate",
    "PrimeWindow",
    "RangeError",
    "RatioRow",
    "ScanOutcome",
    "VerifiedRangeReport",
    "base_primes",
    "bhp_condition",
    "bhp_crossover",
    "classify",
    "condition_margin",
    "count_odd_multiples",
    "divisor_witnesses",
    "endpoints",
    "entry",
    "histogram",
    "l_term",
    "l_term_oracle",
    "multiplicity",
    "multiplicity_record",
    "n_count",
    "odd_primes_in",
    "oscillation",
    "p_oracle",
    "positions",
    "r_values",
    "ratio_report",
    "s_via_divisor_form",
    "scan",
    "summarize",
    "verified_range_report",
]
