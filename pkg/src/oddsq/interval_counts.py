"""Counting functions over the open intervals between consecutive odd squares.

For k >= 1 the open interval ((2k-1)^2, (2k+1)^2) has length 8k and holds
N = 4k-1 odd integers.  For an odd n inside it, a divisor d >= 3 satisfies
d*d <= n exactly when d <= 2k-1, so one accumulation pass over the fixed
divisor range [3, 2k-1] recovers the multiplicity r(n) of every odd n in
the window at once.  From the counter array:

    N = number of odd n                 = 4k - 1
    S = sum of r(n)                     (total multiplicity)
    E = sum of max(r(n) - 1, 0)         (excess beyond one cell each)
    P = N - S + E                       (count of odd primes)
    C = N - P                           (count of odd composites)

P has an independent cross-check in the segmented sieve, and a prime exists
in the window if and only if E > S - N.

A_d below always means the count of ODD multiples of d in the open window.
The plain floor difference floor(hi/d) - floor(lo/d) would also pick up the
even multiples and overstates S (already at k = 2 it gives 5 instead of 2),
so every route here counts odd multiples only.
"""

from __future__ import annotations

import enum
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Callable, Iterable

import numpy as np

from . import sieve_oracle
from .errors import DomainError, OracleMismatchError, RangeError

# (2k+1)^2 stays far below 2**63 up to here; counter arrays run out of
# memory long before the bound matters.
K_LIMIT = 1 << 30


def _validate_k(k: int) -> None:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if k > K_LIMIT:
        raise RangeError(f"k must be <= 2**30, got {k}")


def endpoints(k: int) -> tuple[int, int]:
    """The excluded bounds ((2k-1)^2, (2k+1)^2) of the open interval."""
    _validate_k(k)
    return (2 * k - 1) ** 2, (2 * k + 1) ** 2


def n_count(k: int) -> int:
    """Number of odd integers strictly between the bounds: 4k - 1."""
    _validate_k(k)
    return 4 * k - 1


def count_odd_multiples(d: int, lo: int, hi: int) -> int:
    """A_d: odd multiples of odd d strictly between lo and hi.

    Pure integer floor arithmetic: writing n = d*q, n is odd iff q is odd,
    so this counts the odd q with lo/d < q < hi/d.
    """
    if d < 3 or d % 2 == 0:
        raise DomainError(f"d must be odd and >= 3, got {d}")
    if lo >= hi:
        raise DomainError(f"window must satisfy lo < hi, got ({lo}, {hi})")
    q_lo = lo // d + 1
    q_hi = (hi - 1) // d
    if q_hi < q_lo:
        return 0
    return (q_hi + 1) // 2 - q_lo // 2


def r_values(k: int) -> np.ndarray:
    """Multiplicities r(n) for the odd n in the k-th window, ascending in n.

    Slot t holds r of n = (2k-1)^2 + 2 + 2t.  Each odd d in [3, 2k-1]
    increments the slots of its odd multiples; consecutive odd multiples
    of d sit d slots apart on the odd grid.
    """
    _validate_k(k)
    lo = (2 * k - 1) ** 2
    hi = (2 * k + 1) ** 2
    first = lo + 2
    r = np.zeros(4 * k - 1, dtype=np.uint16)
    for d in range(3, 2 * k, 2):
        q = lo // d + 1
        if q % 2 == 0:
            q += 1
        start = d * q
        if start >= hi:
            continue
        r[(start - first) // 2 :: d] += 1
    if r.size and int(r.max()) >= 0xFFFF:
        raise RangeError(f"k={k}: multiplicity counter saturated")
    return r


@dataclass(frozen=True)
class IntervalSummary:
    k: int
    n_count: int
    s_total: int
    e_excess: int
    p_identity: int
    c_composites: int
    p_oracle: int | None = None


def summarize(k: int, with_oracle: bool = False) -> IntervalSummary:
    """All counting functions for one k, via the accumulation pass.

    With the oracle flag set, the segmented sieve recounts the primes and a
    disagreement raises OracleMismatchError naming the first discrepant n.
    """
    r = r_values(k)
    n = 4 * k - 1
    r64 = r.astype(np.int64)
    s = int(r64.sum())
    e = int(np.maximum(r64 - 1, 0).sum())
    p = n - s + e
    oracle_count: int | None = None
    if with_oracle:
        oracle_count = sieve_oracle.p_oracle(k)
        if oracle_count != p:
            raise OracleMismatchError(k, p, oracle_count, _first_discrepant(k, r))
    return IntervalSummary(
        k=k,
        n_count=n,
        s_total=s,
        e_excess=e,
        p_identity=p,
        c_composites=n - p,
        p_oracle=oracle_count,
    )


def _first_discrepant(k: int, r: np.ndarray) -> int | None:
    lo, hi = endpoints(k)
    window = sieve_oracle.odd_primes_in(lo, hi, want_list=True)
    prime_mask = np.zeros(r.size, dtype=bool)
    for p in window.primes or []:
        prime_mask[(p - lo - 2) // 2] = True
    bad = np.flatnonzero((r == 0) != prime_mask)
    if bad.size == 0:
        return None
    return lo + 2 + 2 * int(bad[0])


@dataclass(frozen=True)
class MultiplicityHistogram:
    k: int
    counts: dict[int, int]  # m -> number of odd n in the window with r(n) = m


def histogram(k: int) -> MultiplicityHistogram:
    """Distribution of r over the window; zero-count multiplicities omitted.

    The linear identities sum(a_m) = N, sum(m*a_m) = S,
    sum over m>=2 of (m-1)*a_m = E and a_0 = P all follow from it.
    """
    counts = np.bincount(r_values(k))
    return MultiplicityHistogram(
        k=k, counts={m: int(c) for m, c in enumerate(counts) if c}
    )


def s_via_divisor_form(k: int) -> int:
    """S by the closed divisor route: sum of A_d over odd d in [3, 2k-1].

    Independent of the accumulation pass; the two must agree exactly.
    """
    _validate_k(k)
    lo = (2 * k - 1) ** 2
    hi = (2 * k + 1) ** 2
    return sum(count_odd_multiples(d, lo, hi) for d in range(3, 2 * k, 2))


def condition_margin(k: int) -> int:
    """E - (S - N); positive exactly when the window contains a prime.

    Equals P, so the margin doubles as the identity-route prime count.
    """
    s = summarize(k)
    return s.e_excess - (s.s_total - s.n_count)


@dataclass(frozen=True)
class RatioRow:
    k: int
    s_minus_n: int
    e: int
    ratio: str | None  # E/(S-N) rounded half-even to 3 places; None if S <= N
    growth_ratio: float  # (S-N) / (4k ln ln 2k), reported as data only


def ratio_report(ks: Iterable[int]) -> list[RatioRow]:
    """Excess-vs-overcount rows; the raw rational is (e, s_minus_n) itself."""
    rows = []
    for k in ks:
        s = summarize(k)
        sn = s.s_total - s.n_count
        ratio = None
        if sn > 0:
            ratio = str(
                (Decimal(s.e_excess) / Decimal(sn)).quantize(
                    Decimal("0.001"), rounding=ROUND_HALF_EVEN
                )
            )
        rows.append(
            RatioRow(
                k=k,
                s_minus_n=sn,
                e=s.e_excess,
                ratio=ratio,
                growth_ratio=sn / (4 * k * math.log(math.log(2 * k))),
            )
        )
    return rows


class Predicate(enum.Enum):
    PRIME_EXISTS = "PrimeExists"
    AT_LEAST_TWO_PRIMES = "AtLeastTwoPrimes"

    @property
    def threshold(self) -> int:
        return 1 if self is Predicate.PRIME_EXISTS else 2


@dataclass(frozen=True)
class ScanOutcome:
    k_min: int
    k_max: int
    predicate: Predicate
    violations: list[int]
    min_p: int
    argmin_k: int
    elapsed: float


def _scan_chunk(args: tuple[int, int, int, bool]) -> tuple[list[int], int, int]:
    a, b, threshold, oracle = args
    violations = []
    best_p = -1
    best_k = -1
    for k in range(a, b + 1):
        p = summarize(k, with_oracle=oracle).p_identity
        if p < threshold:
            violations.append(k)
        if best_k < 0 or p < best_p:
            best_p, best_k = p, k
    return violations, best_p, best_k


def scan(
    k_min: int,
    k_max: int,
    predicate: Predicate,
    workers: int | None = None,
    oracle: bool = False,
    chunk_done: Callable[[int], None] | None = None,
) -> ScanOutcome:
    """Evaluate the prime-count predicate for every k in [k_min, k_max].

    The range is split into contiguous chunks and per-k work is pure, so
    results merge in k order and the outcome is identical for any worker
    count.  chunk_done(k) fires as the verified frontier advances.  With
    the oracle flag set an identity/sieve mismatch at any k is fatal.
    """
    _validate_k(k_min)
    _validate_k(k_max)
    if k_min > k_max:
        raise DomainError(f"empty range: k_min={k_min} > k_max={k_max}")
    predicate = Predicate(predicate)
    if workers is None:
        workers = os.cpu_count() or 1
    if workers < 1:
        raise DomainError(f"workers must be >= 1, got {workers}")

    started = time.perf_counter()
    total = k_max - k_min + 1
    span = max(16, -(-total // (8 * workers)))
    chunks = [
        (a, min(a + span - 1, k_max), predicate.threshold, oracle)
        for a in range(k_min, k_max + 1, span)
    ]

    violations: list[int] = []
    min_p = -1
    argmin_k = -1
    if workers == 1:
        results = map(_scan_chunk, chunks)
        for chunk, (bad, p, k) in zip(chunks, results):
            violations.extend(bad)
            if argmin_k < 0 or p < min_p:
                min_p, argmin_k = p, k
            if chunk_done is not None:
                chunk_done(chunk[1])
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk, (bad, p, k) in zip(chunks, pool.map(_scan_chunk, chunks)):
                violations.extend(bad)
                if argmin_k < 0 or p < min_p:
                    min_p, argmin_k = p, k
                if chunk_done is not None:
                    chunk_done(chunk[1])

    return ScanOutcome(
        k_min=k_min,
        k_max=k_max,
        predicate=predicate,
        violations=violations,
        min_p=min_p,
        argmin_k=argmin_k,
        elapsed=time.perf_counter() - started,
    )
