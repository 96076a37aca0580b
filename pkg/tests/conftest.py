"""Shared fixtures; the heavy sweeps run once per session."""

from dataclasses import dataclass
from math import isqrt

import numpy as np
import pytest

from oddsq.interval_counts import Predicate, histogram, scan, summarize
from oddsq.multiplicity import entry, multiplicity, positions


def sieve_flags(limit: int) -> np.ndarray:
    """Plain Eratosthenes bitmap, the tests' own primality reference."""
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags


@dataclass
class MillionSweep:
    limit: int
    roundtrip_failures: list
    prime_char_failures: list


@pytest.fixture(scope="session")
def million_sweep():
    """One pass over every odd n <= 10^6 exercising the per-n operations."""
    limit = 10**6
    flags = sieve_flags(limit)
    roundtrip, prime_char = [], []
    for n in range(3, limit + 1, 2):
        cells = positions(n)
        r = multiplicity(n)
        if len(cells) != r or any(entry(i, j) != n for i, j in cells):
            roundtrip.append(n)
        if (r == 0) != bool(flags[n]):
            prime_char.append(n)
    return MillionSweep(limit, roundtrip, prime_char)


@pytest.fixture(scope="session")
def per_k_2000():
    """summarize(k, with_oracle=True) plus histogram(k) for k = 1..2000."""
    return [(summarize(k, with_oracle=True), histogram(k)) for k in range(1, 2001)]


@pytest.fixture(scope="session")
def scan_10k():
    """Oracle-checked scans jointly covering k = 1..10^4."""
    import os

    head = scan(1, 3, Predicate.PRIME_EXISTS, workers=1, oracle=True)
    tail = scan(
        4, 10**4, Predicate.PRIME_EXISTS, workers=os.cpu_count() or 1, oracle=True
    )
    return head, tail
