"""Segmented sieve of Eratosthenes over arbitrary windows.

Ground truth for prime counts.  This route shares no logic with the divisor
accumulation it validates: composites are struck as multiples of base primes
p <= sqrt(hi) and whatever survives is prime, with no per-candidate testing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .errors import DomainError, MemoryCapError, RangeError

HI_LIMIT = 2**63
DEFAULT_SLOT_CAP = 1 << 27  # odd candidates per window (~128 MB of mask)

# Process-wide base prime table, grown geometrically and never shrunk.
# Immutable once built, so concurrent readers are safe.
_BASE: dict = {"limit": 0, "primes": np.empty(0, dtype=np.int64)}


def _simple_sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def base_primes(limit: int) -> np.ndarray:
    """All primes <= limit, served from the cached table (treat as read-only)."""
    if limit > _BASE["limit"]:
        new_limit = max(limit, 2 * _BASE["limit"], 1 << 16)
        _BASE["primes"] = _simple_sieve(new_limit)
        _BASE["limit"] = new_limit
    primes = _BASE["primes"]
    return primes[: int(np.searchsorted(primes, limit, side="right"))]


@dataclass(frozen=True)
class PrimeWindow:
    lo: int
    hi: int
    count_odd_primes: int
    primes: list[int] | None = None


def odd_primes_in(
    lo: int, hi: int, want_list: bool = False, *, slot_cap: int = DEFAULT_SLOT_CAP
) -> PrimeWindow:
    """Count (optionally list) the odd primes strictly between lo and hi.

    The prime 2 is never counted.  Candidates start at 3, so the windows
    (0, hi) and (1, hi) behave identically.
    """
    if lo < 0:
        raise DomainError(f"lo must be >= 0, got {lo}")
    if lo >= hi:
        raise DomainError(f"window must satisfy lo < hi, got ({lo}, {hi})")
    if hi > HI_LIMIT:
        raise RangeError(f"hi must be <= 2**63, got {hi}")

    first = lo + 1 if lo % 2 == 0 else lo + 2
    if first < 3:
        first = 3
    last = hi - 1 if hi % 2 == 0 else hi - 2
    if last < first:
        return PrimeWindow(lo, hi, 0, [] if want_list else None)

    slots = (last - first) // 2 + 1
    if slots > slot_cap:
        raise MemoryCapError(
            f"window ({lo}, {hi}) needs {slots} sieve slots, cap is {slot_cap}"
        )

    mask = np.ones(slots, dtype=bool)
    for p in base_primes(isqrt(hi - 1))[1:].tolist():  # skip 2
        if p * p > last:
            break
        q = max(p, -(-first // p))  # never strike p itself
        if q % 2 == 0:
            q += 1
        start = p * q
        if start > last:
            continue
        mask[(start - first) // 2 :: p] = False

    count = int(np.count_nonzero(mask))
    listed = (first + 2 * np.flatnonzero(mask)).tolist() if want_list else None
    return PrimeWindow(lo=lo, hi=hi, count_odd_primes=count, primes=listed)


def p_oracle(k: int, *, slot_cap: int = DEFAULT_SLOT_CAP) -> int:
    """Sieve count of odd primes in the k-th window between odd squares."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    lo = (2 * k - 1) ** 2
    hi = (2 * k + 1) ** 2
    return odd_primes_in(lo, hi, slot_cap=slot_cap).count_odd_primes
