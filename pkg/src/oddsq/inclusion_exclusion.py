"""Inclusion-exclusion expansion of the window prime count and its oscillation.

Expanding P = N - S + E over m-fold divisor overlaps gives

    P = N - S + L(2) - L(3) + L(4) - ...

with L(m) the sum of A_lcm(d_1..d_m) over ascending odd m-tuples from
[3, 2k-1].  Since lcm(D) divides an n exactly when every element of D does,
L(m) also equals the sum over odd n in the window of C(r(n), m), which is
the independent oracle used to validate the tuple enumeration.

The partial sums oscillate violently before collapsing to P (at k = 50 they
run -188, +431, -515, +716, ... before settling at 44): truncating the
alternating series cannot separate the primes from the semiprimes, only the
full sum can.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd

import numpy as np

from .errors import BudgetExceededError, DomainError
from .interval_counts import count_odd_multiples, endpoints, r_values

DEFAULT_NODE_BUDGET = 100_000_000


def _validate_m(m: int) -> None:
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")


class _Budget:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int):
        if limit < 1:
            raise DomainError(f"node budget must be >= 1, got {limit}")
        self.nodes = 0
        self.limit = limit

    def spend(self, amount: int = 1) -> None:
        self.nodes += amount
        if self.nodes > self.limit:
            raise BudgetExceededError(self.nodes, self.limit)


def _terms_through(
    k: int, m_cap: int, budget: _Budget, lo: int, hi: int
) -> list[int]:
    """All terms L(2)..L(m_cap) in one depth-first pass.

    Candidates ascend, the running lcm only grows under extension, and
    A_L = 0 once L >= hi, so any branch reaching lcm >= hi is dropped.
    """
    sums = [0] * (m_cap + 1)
    cands = range(3, 2 * k, 2)
    top = len(cands)

    def rec(idx: int, lcm: int, depth: int) -> None:
        for t in range(idx, top):
            d = cands[t]
            merged = lcm // gcd(lcm, d) * d
            budget.spend()
            if merged >= hi:
                continue
            below = depth + 1
            if below >= 2:
                sums[below] += count_odd_multiples(merged, lo, hi)
            if below < m_cap:
                rec(t + 1, merged, below)

    if m_cap >= 2:
        rec(0, 1, 0)
    return sums


def l_term(
    k: int,
    m: int,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    prune: bool = True,
) -> int:
    """L(m) for the k-th window by exact tuple enumeration.

    prune=False switches to flat combination-by-combination evaluation with
    no lcm cutoff, as a cross-check path for small k.
    """
    lo, hi = endpoints(k)
    _validate_m(m)
    budget = _Budget(node_budget)
    if not prune:
        total = 0
        for tup in combinations(range(3, 2 * k, 2), m):
            budget.spend()
            lcm = 1
            for d in tup:
                lcm = lcm // gcd(lcm, d) * d
            total += count_odd_multiples(lcm, lo, hi)
        return total
    sums = _terms_through(k, m, budget, lo, hi)
    # Terms below m were accumulated en passant; only the target is reported.
    return sums[m]


def l_term_oracle(k: int, m: int) -> int:
    """L(m) recomputed as the sum of C(r(n), m) over the window."""
    _validate_m(m)
    counts = np.bincount(r_values(k))
    return sum(int(a) * comb(v, m) for v, a in enumerate(counts) if v >= m and a)


@dataclass(frozen=True)
class OscillationReport:
    k: int
    m_max: int
    l_terms: list[int]  # L(2), L(3), ... for the computed depths
    partial_sums: list[int]  # s_1 = N - S, then s_m = s_{m-1} + (-1)^m L(m)
    exhausted: bool  # True when every term beyond the computed ones is zero
    final: int | None  # the settled alternating sum, only when exhausted


def oscillation(
    k: int, m_max: int, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> OscillationReport:
    """Expansion terms and signed partial sums for one window.

    Depth stops at min(m_max, max r over the window): C(r, m) vanishes for
    m > r, so terms past the maximum multiplicity are provably zero and the
    report is marked exhausted with its settled value.
    """
    if m_max < 1:
        raise DomainError(f"m_max must be >= 1, got {m_max}")
    r = r_values(k)
    n = 4 * k - 1
    s = int(r.sum(dtype=np.int64))
    max_r = int(r.max()) if r.size else 0

    m_cap = min(m_max, max_r)
    lo, hi = endpoints(k)
    sums = _terms_through(k, m_cap, _Budget(node_budget), lo, hi)

    l_terms = [sums[m] for m in range(2, m_cap + 1)]
    partial = [n - s]
    for m in range(2, m_cap + 1):
        sign = 1 if m % 2 == 0 else -1
        partial.append(partial[-1] + sign * sums[m])

    exhausted = m_max >= max_r
    return OscillationReport(
        k=k,
        m_max=m_max,
        l_terms=l_terms,
        partial_sums=partial,
        exhausted=exhausted,
        final=partial[-1] if exhausted else None,
    )
