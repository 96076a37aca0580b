import pytest

from oddsq.errors import DomainError, MemoryCapError, RangeError
from oddsq.interval_counts import endpoints
from oddsq.multiplicity import multiplicity
from oddsq.sieve_oracle import base_primes, odd_primes_in, p_oracle


def test_window_counts():
    assert odd_primes_in(9, 25).count_odd_primes == 5
    assert odd_primes_in(1, 9).count_odd_primes == 3
    assert odd_primes_in(9801, 10201).count_odd_primes == 44


def test_window_list():
    w = odd_primes_in(9, 25, want_list=True)
    assert w.primes == [11, 13, 17, 19, 23]
    assert w.count_odd_primes == len(w.primes)
    assert odd_primes_in(9, 25).primes is None


def test_classical_prime_counts():
    # counts below N are the sieve count plus one for the prime 2
    assert odd_primes_in(1, 100).count_odd_primes + 1 == 25
    assert odd_primes_in(1, 1000).count_odd_primes + 1 == 168
    assert odd_primes_in(1, 10**6).count_odd_primes + 1 == 78498


def test_two_is_never_counted():
    assert odd_primes_in(1, 4, want_list=True).primes == [3]
    assert odd_primes_in(0, 3, want_list=True).primes == []


def test_endpoints_are_excluded():
    # both bounds of (9, 25) are squares, but nothing at the bounds counts
    w = odd_primes_in(23, 29, want_list=True)
    assert w.primes == []


def test_empty_windows():
    assert odd_primes_in(13, 15).count_odd_primes == 0
    assert odd_primes_in(3, 5, want_list=True).primes == []


def test_p_oracle_values():
    assert p_oracle(3) == 6
    assert p_oracle(100) == 72
    assert p_oracle(1) == 3


def test_agrees_with_multiplicity_to_k200():
    for k in range(1, 201):
        lo, hi = endpoints(k)
        listed = odd_primes_in(lo, hi, want_list=True).primes
        from_r = [n for n in range(lo + 2, hi, 2) if multiplicity(n) == 0]
        assert listed == from_r, f"k={k}"


def test_domain_and_cap_errors():
    with pytest.raises(DomainError):
        odd_primes_in(25, 9)
    with pytest.raises(DomainError):
        odd_primes_in(-1, 9)
    with pytest.raises(RangeError):
        odd_primes_in(1, 2**63 + 2)
    with pytest.raises(MemoryCapError):
        odd_primes_in(1, 10**7, slot_cap=1000)
    with pytest.raises(DomainError):
        p_oracle(0)


def test_base_prime_cache():
    primes = base_primes(100)
    assert primes.tolist()[:5] == [2, 3, 5, 7, 11]
    assert int(primes[-1]) == 97
    assert int(base_primes(10)[-1]) == 7
    assert int(base_primes(10**5)[-1]) == 99991
