"""Fast modular evaluation of sparse polynomial families at roots of unity.

The verification suites must certify that no cyclotomic polynomial in a large
index family divides any member of a sparse polynomial family.  One direction
of that check is exact in a single machine-word computation: if q is a prime
congruent to 1 modulo b and zeta has multiplicative order exactly b in the
integers modulo q, then every polynomial divisible by the b-th cyclotomic
polynomial evaluates to 0 at zeta modulo q.  A nonzero evaluation therefore
certifies non-divisibility outright; only zero hits need the exact sparse
division fallback.

The sweep over all t in [0, b) for a family with exponents affine in t is the
one hot loop of the package.  It runs as a numba kernel by default and falls
back to a vectorized pure-numpy path when the ``NUTFORGE_NO_NUMBA``
environment variable is set (or numba is unavailable).  Both paths produce
bit-identical outputs; ``benchmarks/bench_modeval.py`` compares their speed.

All moduli are kept below 2^31 so that every intermediate product fits in a
signed 64-bit integer.
"""

from __future__ import annotations

import os

import numpy as np

from .numtheory import is_prime, prime_factors

_Q_LIMIT = 1 << 31

_FORCE_NUMPY = bool(os.environ.get("NUTFORGE_NO_NUMBA"))


def _sweep_py(starts, ratios, b, q):
    # Pure-Python reference implementation; the tests compare both production
    # backends against it.
    out = np.empty(b, dtype=np.int64)
    cur = starts.copy()
    k = len(starts)
    for t in range(b):
        acc = 0
        for i in range(k):
            acc += cur[i]
        out[t] = acc % q
        for i in range(k):
            cur[i] = cur[i] * ratios[i] % q
    return out


def _sweep_numpy(starts, ratios, b, q):
    """Vectorized sweep: per term, build the geometric progression
    start * ratio^t (mod q) by index doubling, then accumulate."""
    qq = np.uint64(q)
    total = np.zeros(b, dtype=np.uint64)
    for start, ratio in zip(starts.tolist(), ratios.tolist()):
        g = np.empty(b, dtype=np.uint64)
        g[0] = start
        length = 1
        rpow = ratio % q  # ratio^length mod q, maintained while doubling
        while length < b:
            step = min(length, b - length)
            g[length:length + step] = g[:step] * np.uint64(rpow) % qq
            length += step
            if length < b:
                rpow = rpow * rpow % q
        total = (total + g) % qq
    return total.astype(np.int64)


_NUMBA_SWEEP = None
if not _FORCE_NUMPY:
    try:
        from numba import njit

        @njit(cache=True)
        def _sweep_numba(starts, ratios, b, q):  # pragma: no cover - jitted
            out = np.empty(b, dtype=np.int64)
            k = starts.shape[0]
            cur = starts.copy()
            for t in range(b):
                acc = 0
                for i in range(k):
                    acc += cur[i]
                out[t] = acc % q
                for i in range(k):
                    cur[i] = cur[i] * ratios[i] % q
            return out

        _NUMBA_SWEEP = _sweep_numba
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _NUMBA_SWEEP = None


def active_backend() -> str:
    """Name of the sweep backend in use: 'numba' or 'numpy'."""
    return "numba" if _NUMBA_SWEEP is not None else "numpy"


def evaluation_prime(b: int, skip: int = 0) -> int:
    """Smallest odd prime q = k*b + 1 above 50 and below 2^31, after skipping
    `skip` hits.  Distinct `skip` values give independent moduli for repeated
    screening.
    """
    remaining = skip
    k = 50 // b + 1
    while True:
        q = k * b + 1
        if q >= _Q_LIMIT:
            raise ValueError(f"no usable evaluation prime for modulus {b}")
        if q % 2 == 1 and is_prime(q):
            if remaining == 0:
                return q
            remaining -= 1
        k += 1


def root_of_order(q: int, b: int) -> int:
    """Deterministic element of multiplicative order exactly b modulo the
    prime q (requires b dividing q - 1)."""
    if (q - 1) % b != 0:
        raise ValueError("order must divide q - 1")
    if b == 1:
        return 1
    ps = prime_factors(b)
    e = (q - 1) // b
    for a in range(2, q):
        z = pow(a, e, q)
        if z == 1:
            continue
        if all(pow(z, b // p, q) != 1 for p in ps):
            return z
    raise ValueError(f"no element of order {b} modulo {q}")


def _prepare(coeffs, slopes, offsets, b, q, zeta):
    k = len(coeffs)
    starts = np.empty(k, dtype=np.int64)
    ratios = np.empty(k, dtype=np.int64)
    for i in range(k):
        starts[i] = coeffs[i] % q * pow(zeta, offsets[i] % b, q) % q
        ratios[i] = pow(zeta, slopes[i] % b, q)
    return starts, ratios


def eval_sweep(coeffs, slopes, offsets, b: int, q: int, zeta: int) -> np.ndarray:
    """Evaluate sum_i coeffs[i] * zeta^(slopes[i]*t + offsets[i]) mod q for
    every t in [0, b), where zeta has order b modulo the prime q.

    Returns an int64 array of length b; entry t is the evaluation of the
    family member at parameter t, reduced modulo q.
    """
    if not (2 < q < _Q_LIMIT):
        raise ValueError("modulus out of the 64-bit-safe range")
    starts, ratios = _prepare(coeffs, slopes, offsets, b, q, zeta)
    if _NUMBA_SWEEP is not None:
        return _NUMBA_SWEEP(starts, ratios, b, q)
    return _sweep_numpy(starts, ratios, b, q)


def eval_at(coeffs, exponents, b: int, q: int, zeta: int) -> int:
    """Single evaluation sum_i coeffs[i] * zeta^(exponents[i] mod b) mod q."""
    acc = 0
    for c, e in zip(coeffs, exponents):
        acc = (acc + c * pow(zeta, e % b, q)) % q
    return acc


def nonzero_witness(coeffs, exponents, b: int, rounds: int = 2) -> bool:
    """True iff some modular evaluation at a primitive b-th root of unity is
    nonzero, proving the b-th cyclotomic polynomial does not divide the
    polynomial with the given integer terms.

    A False return is inconclusive (the caller must decide exactly).
    """
    for salt in range(rounds):
        q = evaluation_prime(b, skip=salt)
        zeta = root_of_order(q, b)
        if eval_at(coeffs, exponents, b, q, zeta) != 0:
            return True
    return False


def sweep_zero_parameters(coeffs, slopes, offsets, b: int, rounds: int = 2) -> list[int]:
    """Parameters t in [0, b) whose family member evaluates to zero at a
    primitive b-th root of unity for `rounds` independent moduli.

    Every t not returned is certified non-divisible by the b-th cyclotomic
    polynomial; returned parameters need the exact check.
    """
    q = evaluation_prime(b, skip=0)
    zeta = root_of_order(q, b)
    values = eval_sweep(coeffs, slopes, offsets, b, q, zeta)
    suspects = np.nonzero(values == 0)[0].tolist()
    for salt in range(1, rounds):
        if not suspects:
            break
        q = evaluation_prime(b, skip=salt)
        zeta = root_of_order(q, b)
        suspects = [t for t in suspects
                    if eval_at(coeffs, [s * t + o for s, o in zip(slopes, offsets)],
                               b, q, zeta) == 0]
    return suspects
