"""Elementary number theory on Python ints.

Python's ``int`` is arbitrary precision and ``fractions.Fraction`` is always
kept in lowest terms with a positive denominator, so those two serve directly
as the exact integer and rational types used throughout the package.
"""

from functools import lru_cache
from math import isqrt


def _check_positive(n):
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=4096)
def _divisors(n):
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return tuple(small + large[::-1])


def divisors(n):
    """Return the divisors of ``n`` in increasing order.

    >>> divisors(12)
    [1, 2, 3, 4, 6, 12]
    """
    _check_positive(n)
    return list(_divisors(n))


@lru_cache(maxsize=4096)
def _mobius(n):
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def mobius(n):
    """Möbius function: 0 on non-squarefree n, else (-1)**(number of prime factors)."""
    _check_positive(n)
    return _mobius(n)


def is_prime(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for p in range(3, isqrt(n) + 1, 2):
        if n % p == 0:
            return False
    return True


def padic_valuation(p, m):
    """Largest ``v`` with ``p**v`` dividing ``m`` (``m >= 1``, ``p`` prime)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if isinstance(m, bool) or not isinstance(m, int):
        raise TypeError(f"expected an int, got {type(m).__name__}")
    if m == 0:
        raise ValueError("valuation of 0 is infinite")
    if m < 0:
        raise ValueError(f"expected a positive integer, got {m}")
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v
