"""Cyclotomic polynomials, divisibility tests, and feasible-index enumeration.

The n-th cyclotomic polynomial is computed by iterated exact division of
x^n - 1 by the cyclotomic polynomials of the proper divisors of n, and cached.
No structural shortcut (exponent scaling, prime-square collapse) is used in
the construction itself, so those identities remain honest cross-checks.

``divides_cyclotomic`` is the workhorse of the verification suites: it decides
whether the b-th cyclotomic polynomial divides a given integer polynomial.
Internally it first folds the dividend modulo x^b - 1 (valid because the b-th
cyclotomic polynomial divides x^b - 1) and then, when b is not square-free,
splits it by exponent residue modulo b/rad(b): every exponent of the b-th
cyclotomic polynomial is a multiple of b/rad(b), so divisibility holds exactly
when each compressed residue part is divisible by the rad(b)-th cyclotomic
polynomial.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .exact import Polynomial
from .numtheory import divisors, factorize, radical

_PHI_CACHE: dict[int, Polynomial] = {}
_PHI_LOCK = threading.Lock()


@dataclass(frozen=True)
class CycIndex:
    """A cyclotomic index b together with its radical and factorization."""

    b: int
    radical: int
    prime_factorization: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, b: int) -> "CycIndex":
        if b < 1:
            raise ValueError(f"cyclotomic index must be >= 1, got {b}")
        fac = tuple(factorize(b))
        rad = 1
        for p, _ in fac:
            rad *= p
        return cls(b, rad, fac)

    @property
    def ratio(self) -> int:
        """b divided by its radical (always a positive integer)."""
        return self.b // self.radical


def cyclotomic(n: int) -> Polynomial:
    """The n-th cyclotomic polynomial (monic, integer, degree phi(n)).

    Computed as (x^n - 1) divided successively by the cyclotomic polynomials
    of the proper divisors of n; every division step is exact.  Results are
    cached; the cache is lock-protected and only ever stores fully built
    immutable polynomials.
    """
    if n < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {n}")
    cached = _PHI_CACHE.get(n)
    if cached is not None:
        return cached
    with _PHI_LOCK:
        cached = _PHI_CACHE.get(n)
        if cached is not None:
            return cached
        for d in divisors(n):
            if d in _PHI_CACHE:
                continue
            poly = Polynomial({d: 1, 0: -1})
            for e in divisors(d)[:-1]:
                poly, rem = poly.divrem(_PHI_CACHE[e])
                if not rem.is_zero:
                    raise AssertionError(f"inexact cyclotomic division at {d}/{e}")
            _PHI_CACHE[d] = poly
        return _PHI_CACHE[n]


def divides_cyclotomic(p: Polynomial, b: int) -> bool:
    """True iff the b-th cyclotomic polynomial divides p exactly.

    Equivalently: p has a primitive b-th root of unity among its roots.
    """
    if b < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {b}")
    if p.is_zero:
        return True
    folded = p.cyclic_reduce(b)
    if folded.is_zero:
        return True
    idx = CycIndex.of(b)
    beta = idx.ratio
    if beta == 1:
        return folded.divrem(cyclotomic(b))[1].is_zero
    phi_rad = cyclotomic(idx.radical)
    for part in residue_split(folded, beta):
        if part.is_zero:
            continue
        # part = x^j * R(x^beta); the b-th cyclotomic polynomial divides it
        # exactly when the rad(b)-th one divides R.
        compressed = Polynomial({e // beta: c for e, c in part.terms.items()})
        if not compressed.divrem(phi_rad)[1].is_zero:
            return False
    return True


def radical_scaling_identity_holds(n: int) -> bool:
    """Check that the n-th cyclotomic polynomial equals the rad(n)-th one with
    every exponent multiplied by n/rad(n).

    This is a self-test of the structural identity the residue-split
    compression relies on; both sides are computed independently.
    """
    rad = radical(n)
    return cyclotomic(n) == cyclotomic(rad).scale_exponents(n // rad)


def residue_split(p: Polynomial, beta: int) -> list[Polynomial]:
    """Partition p into beta polynomials by exponent residue modulo beta.

    Entry j collects exactly the terms of p whose exponent is congruent to j
    modulo beta; the entries sum to p.
    """
    if beta < 1:
        raise ValueError(f"residue modulus must be >= 1, got {beta}")
    parts: list[dict] = [{} for _ in range(beta)]
    for e, c in p.terms.items():
        parts[e % beta][e] = c
    return [Polynomial(d) for d in parts]


def prime_power_cancellation_applies(term_count: int, primes) -> bool:
    """Whether the lacunary-divisibility reduction licenses cancelling the full
    power of one of the given primes from a cyclotomic index.

    For a polynomial with N nonzero terms divisible by the n-th cyclotomic
    polynomial, distinct primes p_1..p_k with sum(p_j - 2) > N - 2 guarantee
    that for some j the (n / p_j^{e_j})-th cyclotomic polynomial divides it as
    well, where p_j^{e_j} is the full power of p_j in n.
    """
    primes = list(primes)
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    return sum(p - 2 for p in primes) > term_count - 2


def enumerate_feasible_indices(allowed_primes, sum_bound: int, rad_ratio_bound: int,
                               min_b: int, forbid_four: bool) -> list[int]:
    """All b >= min_b whose prime factors lie in allowed_primes, subject to
    sum(p - 2) over distinct primes <= sum_bound, b/rad(b) < rad_ratio_bound,
    and (optionally) 4 not dividing b.  Ascending, finite, deterministic.

    Enumeration walks products of admissible prime powers recursively; for
    each prime the admissible exponent range is capped by the ratio bound
    (p^(e-1) alone must stay below it), so the search space is finite and
    every admissible index below the implied ceiling is visited exactly once.
    """
    if sum_bound < 0 or rad_ratio_bound < 0:
        raise ValueError("bounds must be non-negative")
    primes = sorted(set(allowed_primes))
    found: list[int] = []

    def extend(i: int, value: int, psum: int, ratio: int) -> None:
        if value >= min_b:
            found.append(value)
        for j in range(i, len(primes)):
            p = primes[j]
            new_sum = psum + (p - 2)
            if new_sum > sum_bound:
                continue
            v = value * p
            r = ratio
            e = 1
            while r < rad_ratio_bound:
                if not (forbid_four and p == 2 and e >= 2):
                    extend(j + 1, v, new_sum, r)
                e += 1
                v *= p
                r *= p

    extend(0, 1, 0, 1)
    return sorted(found)
