#!/usr/bin/env python3
"""Benchmark the modular evaluation sweep: numba kernel vs pure numpy.

The sweep is the hot loop of the finite case analyses: for a cyclotomic index
b it evaluates all b parameter residues of a sparse family at an order-b root
of unity in a prime field.  Run with NUTFORGE_NO_NUMBA=1 to force the numpy
path at import time elsewhere in the package; here both implementations are
invoked side by side regardless of the flag.

Usage: python3 benchmarks/bench_modeval.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from nutforge import _modeval as me
from nutforge.lemmas import FAMILIES


def bench(fn, starts, ratios, b, q, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(starts.copy(), ratios, b, q)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    fam = FAMILIES["T"]
    coeffs = [c for c, _, _ in fam.terms]
    slopes = [a for _, a, _ in fam.terms]
    offsets = [c for _, _, c in fam.terms]

    if me._NUMBA_SWEEP is None:
        print("numba backend unavailable (NUTFORGE_NO_NUMBA set or import failed);"
              " benchmarking numpy only")

    print(f"{'b':>8} {'q':>12} {'numpy (ms)':>12} {'numba (ms)':>12} {'speedup':>8}")
    for b in (1_000, 10_000, 100_000, 482_790):
        q = me.evaluation_prime(b)
        zeta = me.root_of_order(q, b)
        starts, ratios = me._prepare(coeffs, slopes, offsets, b, q, zeta)
        t_np, out_np = bench(me._sweep_numpy, starts, ratios, b, q, args.repeat)
        if me._NUMBA_SWEEP is not None:
            me._NUMBA_SWEEP(starts.copy(), ratios, 8, q)  # compile outside timing
            t_nb, out_nb = bench(me._NUMBA_SWEEP, starts, ratios, b, q, args.repeat)
            assert np.array_equal(out_np, out_nb), "backend mismatch"
            print(f"{b:>8} {q:>12} {t_np * 1e3:>12.2f} {t_nb * 1e3:>12.2f} "
                  f"{t_np / t_nb:>8.1f}x")
        else:
            print(f"{b:>8} {q:>12} {t_np * 1e3:>12.2f} {'-':>12} {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
