"""Small exact number-theory helpers: factorization, totient, radical, primality.

Everything here works on plain Python integers and is deterministic.  The
totient and radical are always derived from an explicit prime factorization,
never by counting residues.
"""

from __future__ import annotations


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as an ascending list of (prime, exponent)."""
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n >= 1, ascending."""
    return [p for p, _ in factorize(n)]


def radical(n: int) -> int:
    """Largest square-free positive divisor of n >= 1 (empty product for n = 1)."""
    r = 1
    for p in prime_factors(n):
        r *= p
    return r


def euler_phi(n: int) -> int:
    """Euler's totient of n >= 1, computed from the factorization."""
    result = 1
    for p, e in factorize(n):
        result *= (p - 1) * p ** (e - 1)
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1 in ascending order."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


# Deterministic Miller-Rabin: the bases 2, 3, 5, 7 decide primality for
# every n < 3_215_031_751, which covers all moduli used in this package.
_MR_BASES = (2, 3, 5, 7)
_MR_LIMIT = 3_215_031_751


def is_prime(n: int) -> bool:
    """Primality test, deterministic for n < 3_215_031_751."""
    if n >= _MR_LIMIT:
        raise ValueError(f"is_prime is only deterministic below {_MR_LIMIT}")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
