"""Divisor multiplicity of odd integers and their cells in the odd-composite array.

The infinite array b[i][j] = (2j+1)(2j+2i-1), i, j >= 1, holds every odd
composite and no odd prime.  For an odd n >= 3 the multiplicity

    r(n) = #{d : d | n, d odd, 3 <= d, d*d <= n}

equals the number of cells of the array holding n: solving b[i][j] = n with
2j+1 = d and 2j+2i-1 = n/d pairs each counted divisor with one cell.
r(n) = 0 exactly for the odd primes, r(n) = 1 for products of two odd
primes, and r(n) >= 2 for the remaining odd composites.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt
from typing import NamedTuple

from .errors import DomainError, RangeError

# Single-n trial division is guaranteed exact below this; larger n are
# rejected rather than silently accepted.
N_LIMIT = 2**63


class Classification(Enum):
    PRIME = "Prime"
    SEMIPRIME = "Semiprime"
    MULTI_COMPOSITE = "MultiComposite"


class MatrixPosition(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class MultiplicityRecord:
    n: int
    r: int
    divisors: list[int]
    positions: list[MatrixPosition]
    classification: Classification


def _validate(n: int) -> None:
    if n < 3:
        raise DomainError(f"n must be >= 3, got {n}")
    if n % 2 == 0:
        raise DomainError(f"n must be odd, got {n}")
    if n >= N_LIMIT:
        raise RangeError(f"n must be < 2**63, got {n}")


def multiplicity(n: int) -> int:
    """Count the odd divisors d of n with 3 <= d and d*d <= n.

    The square-root bound is inclusive, so odd perfect squares count
    their root (r(9) = 1 via d = 3).
    """
    _validate(n)
    count = 0
    d = 3
    while d * d <= n:
        if n % d == 0:
            count += 1
        d += 2
    return count


def divisor_witnesses(n: int) -> list[int]:
    """The divisors counted by multiplicity(), ascending."""
    _validate(n)
    return [d for d in range(3, isqrt(n) + 1, 2) if n % d == 0]


def positions(n: int) -> list[MatrixPosition]:
    """Cells of the array holding n, ascending by witness divisor.

    Inverting b[i][j] = n gives j = (d-1)/2 and i = (n/d - d)/2 + 1 for
    each witness d; every returned cell satisfies entry(i, j) == n.
    """
    return [_cell(n, d) for d in divisor_witnesses(n)]


def _cell(n: int, d: int) -> MatrixPosition:
    return MatrixPosition(i=(n // d - d) // 2 + 1, j=(d - 1) // 2)


def entry(i: int, j: int) -> int:
    """The array value (2j+1)(2j+2i-1), always an odd composite >= 9."""
    if i < 1 or j < 1:
        raise DomainError(f"array indices must be >= 1, got ({i}, {j})")
    value = (2 * j + 1) * (2 * j + 2 * i - 1)
    if value >= N_LIMIT:
        raise RangeError(f"entry({i}, {j}) = {value} exceeds 2**63")
    return value


def classify(n: int) -> Classification:
    """Prime for r = 0, Semiprime for r = 1, MultiComposite for r >= 2."""
    r = multiplicity(n)
    if r == 0:
        return Classification.PRIME
    if r == 1:
        return Classification.SEMIPRIME
    return Classification.MULTI_COMPOSITE


def multiplicity_record(n: int) -> MultiplicityRecord:
    """Full inspection of one n: r(n), witnesses, cells, classification."""
    divisors = divisor_witnesses(n)
    r = len(divisors)
    if r == 0:
        cls = Classification.PRIME
    elif r == 1:
        cls = Classification.SEMIPRIME
    else:
        cls = Classification.MULTI_COMPOSITE
    return MultiplicityRecord(
        n=n,
        r=r,
        divisors=divisors,
        positions=[_cell(n, d) for d in divisors],
        classification=cls,
    )
