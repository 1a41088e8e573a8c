"""Feasibility decision and certified witness construction.

A d-regular vertex-transitive (equivalently Cayley) nut graph of order n
exists iff

* d is even with d >= 4 and n is even with n >= d + 4, and
* additionally 4 | n and n >= d + 6 when d = 2 (mod 4).

``construct`` returns a certified witness for every feasible pair.  Witnesses
come from a catalog of parameterized dihedral-group constructions:

* two direct families covering degrees 6 (mod 8) and 2 (mod 8) once the order
  is large enough relative to the degree,
* three complement families covering the remaining orders d + 6, d + 10 and
  d + 14 for large enough degree,
* a finite catalog of sporadic graphs plus the Moebius-ladder-, prism- and
  LCF-complement recipes for the order-(d + 4) and a few small cases,
* a deterministic bounded search over circulant (then dihedral) connection
  sets for the degrees divisible by four beyond order d + 4.

Every witness is re-certified by the exact direct kernel check before being
returned, independent of which construction produced it: the outputs are
certificates, not citations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    CirculantSpec,
    DihedralSpec,
    Graph,
    build_circulant,
    build_dihedral,
    build_lcf,
    complement,
    is_regular,
)
from .verify import NutCertificate, nut_check_direct

#: Candidate cap applied to searches at orders above 24 when no explicit
#: budget is given; below that the enumeration is exhaustive.
DEFAULT_SEARCH_BUDGET = 200_000
_EXHAUSTIVE_ORDER = 24

#: Largest order the brute-force canonical labeling accepts.
CANONICAL_ORDER_LIMIT = 20


class InfeasiblePairError(ValueError):
    """Requested (order, degree) pair admits no vertex-transitive nut graph."""


class SearchExhaustedError(RuntimeError):
    """Bounded search ended without a certified witness."""


@dataclass(frozen=True)
class FeasibilityVerdict:
    exists: bool
    case: str  # "odd-or-small" | "d-div-4" | "d-2-mod-4"
    reason: str


@dataclass(frozen=True)
class Witness:
    """A concrete graph together with its construction recipe and exact
    nut certificate."""

    graph: Graph
    recipe: str
    certificate: NutCertificate

    def __post_init__(self):
        if not self.certificate.is_nut:
            raise ValueError("witness certificate must certify the nut property")


def feasible_vt(n: int, d: int) -> FeasibilityVerdict:
    """Decide whether a d-regular vertex-transitive nut graph of order n exists."""
    if n < 1 or d < 0:
        raise ValueError("order must be >= 1 and degree >= 0")
    if d % 2 == 1 or d < 4:
        return FeasibilityVerdict(
            False, "odd-or-small",
            f"degree {d} is odd or below 4; no nut graph is regular of such degree "
            "in the vertex-transitive setting")
    if d % 4 == 0:
        if n % 2 == 0 and n >= d + 4:
            return FeasibilityVerdict(True, "d-div-4",
                                      f"degree {d} divisible by 4: every even order "
                                      f">= {d + 4} is attainable")
        return FeasibilityVerdict(False, "d-div-4",
                                  f"degree {d} divisible by 4 needs an even order "
                                  f">= {d + 4}, got {n}")
    if n % 4 == 0 and n >= d + 6:
        return FeasibilityVerdict(True, "d-2-mod-4",
                                  f"degree {d} = 2 (mod 4): every order divisible "
                                  f"by 4 and >= {d + 6} is attainable")
    return FeasibilityVerdict(False, "d-2-mod-4",
                              f"degree {d} = 2 (mod 4) needs 4 | n and n >= {d + 6}, "
                              f"got {n}")


# -- parameterized dihedral families -------------------------------------------

def _rotation_band(t: int, m: int) -> set[int]:
    """Inverse-closed rotation set {+-1, ..., +-(2t + 1)} modulo m."""
    rot = set()
    for j in range(1, 2 * t + 2):
        rot.add(j)
        rot.add(m - j)
    return rot


def dihedral_6_mod_8_spec(t: int, m: int) -> DihedralSpec:
    """Degree-(8t + 6) dihedral connection set on 2m vertices (even m >= 4t + 8):
    rotation band +-1..+-(2t + 1), reflections {0, 1, 4, 6} and 8..4t + 7."""
    if t < 0:
        raise ValueError("t must be >= 0")
    if m % 2 or m < 4 * t + 8:
        raise ValueError(f"need even m >= {4 * t + 8}, got {m}")
    refl = {0, 1, 4, 6} | set(range(8, 4 * t + 8))
    return DihedralSpec(m, _rotation_band(t, m), refl)


def dihedral_2_mod_8_spec(t: int, m: int) -> DihedralSpec:
    """Degree-(8t + 10) dihedral connection set on 2m vertices (even m >= 4t + 14):
    rotation band +-1..+-(2t + 1), reflections {0, 1, 2, 5, 7, 9, 10} and
    13..4t + 13."""
    if t < 0:
        raise ValueError("t must be >= 0")
    if m % 2 or m < 4 * t + 14:
        raise ValueError(f"need even m >= {4 * t + 14}, got {m}")
    refl = {0, 1, 2, 5, 7, 9, 10} | set(range(13, 4 * t + 14))
    return DihedralSpec(m, _rotation_band(t, m), refl)


def complement_gap6_spec(d: int) -> DihedralSpec:
    """Base graph whose complement is d-regular of order d + 6 (d >= 14,
    d = 2 (mod 4)): rotations +-2, reflections {0, 8, 9}."""
    if d < 14 or d % 4 != 2:
        raise ValueError(f"need d >= 14 with d = 2 (mod 4), got {d}")
    m = (d + 6) // 2
    return DihedralSpec(m, {2, m - 2}, {0, 8, 9})


def complement_gap10_spec(d: int) -> DihedralSpec:
    """Base graph whose complement is d-regular of order d + 10 (d >= 22,
    d = 2 (mod 4)): rotations +-2, +-4, reflections {0, 2, 6, 7, 15}."""
    if d < 22 or d % 4 != 2:
        raise ValueError(f"need d >= 22 with d = 2 (mod 4), got {d}")
    m = (d + 10) // 2
    return DihedralSpec(m, {2, 4, m - 4, m - 2}, {0, 2, 6, 7, 15})


def complement_gap14_spec(d: int) -> DihedralSpec:
    """Base graph whose complement is d-regular of order d + 14 (d >= 26,
    d = 2 (mod 4)): rotations +-2, +-4, +-7, reflections
    {0, 2, 6, 7, 14, 17, 19}."""
    if d < 26 or d % 4 != 2:
        raise ValueError(f"need d >= 26 with d = 2 (mod 4), got {d}")
    m = (d + 14) // 2
    return DihedralSpec(m, {2, 4, 7, m - 7, m - 4, m - 2}, {0, 2, 6, 7, 14, 17, 19})


# -- sporadic catalog -----------------------------------------------------------

_SPORADIC_DIHEDRAL: dict[tuple[int, int], tuple[int, frozenset, frozenset]] = {
    (12, 6): (6, frozenset({1, 3, 5}), frozenset({0, 2, 3})),
    (16, 8): (8, frozenset({1, 2, 3, 5, 6, 7}), frozenset({0, 2})),
    (16, 10): (8, frozenset({1, 2, 3, 5, 6, 7}), frozenset({0, 2, 3, 4})),
    (20, 10): (10, frozenset({1, 2, 3, 7, 8, 9}), frozenset({0, 2, 3, 4})),
    (24, 10): (12, frozenset({1, 2, 3, 9, 10, 11}), frozenset({0, 2, 3, 4})),
    (28, 18): (14, frozenset({1, 2, 3, 4, 5, 9, 10, 11, 12, 13}),
               frozenset({0, 2, 3, 4, 5, 6, 7, 8})),
    (32, 18): (16, frozenset({1, 2, 3, 4, 5, 11, 12, 13, 14, 15}),
               frozenset({0, 2, 3, 4, 5, 6, 7, 8})),
}


def moebius_complement(n: int) -> Graph:
    """Complement of the Moebius ladder on n vertices: (n - 4)-regular."""
    return complement(build_circulant(CirculantSpec(n, {1, n // 2})))


def prism_complement(d: int) -> Graph:
    """Complement of the prism on d + 4 vertices: d-regular of order d + 4
    (used for degrees divisible by 8)."""
    m = (d + 4) // 2
    return complement(build_dihedral(DihedralSpec(m, {1, m - 1}, {0})))


def sporadic_witness(n: int, d: int):
    """Catalogued (graph, recipe) for the finitely many special pairs, or the
    parameterized order-(d + 4) complements; None when no catalog entry fits."""
    entry = _SPORADIC_DIHEDRAL.get((n, d))
    if entry is not None:
        m, rot, refl = entry
        spec = DihedralSpec(m, rot, refl)
        return build_dihedral(spec), f"sporadic {spec.describe()}"
    if (n, d) == (20, 16):
        return (complement(build_lcf(20, [5, -5])),
                "complement(lcf(n=20, pattern=[5, -5]))")
    if n == d + 4 and d % 8 == 4:
        return (moebius_complement(n),
                f"complement(circulant(n={n}, jumps=[1, {n // 2}]))  # Moebius ladder")
    if n == d + 4 and d % 8 == 0 and d >= 8:
        m = (d + 4) // 2
        return (prism_complement(d),
                f"complement(dihedral(m={m}, rotations=[1, {m - 1}], reflections=[0]))"
                "  # prism")
    return None


def _dihedral_family_witness(n: int, d: int):
    """Witness graph for d = 2 (mod 4) from the parameterized families.

    The direct families are preferred over the complement families whenever
    both apply; the recipe records that choice.
    """
    m = n // 2
    direct = None
    if d % 8 == 6:
        t = (d - 6) // 8
        if m >= 4 * t + 8:
            spec = dihedral_6_mod_8_spec(t, m)
            direct = (build_dihedral(spec),
                      f"degree-(8t+6) family, t={t}: {spec.describe()}")
    else:
        t = (d - 10) // 8
        if m >= 4 * t + 14:
            spec = dihedral_2_mod_8_spec(t, m)
            direct = (build_dihedral(spec),
                      f"degree-(8t+10) family, t={t}: {spec.describe()}")
    gap = n - d
    comp = None
    if gap == 6 and d >= 14:
        comp = (complement_gap6_spec(d), "order-(d+6)")
    elif gap == 10 and d >= 22:
        comp = (complement_gap10_spec(d), "order-(d+10)")
    elif gap == 14 and d >= 26:
        comp = (complement_gap14_spec(d), "order-(d+14)")
    if direct is not None:
        g, recipe = direct
        if comp is not None:
            recipe += "  # preferred over the complement family"
        return g, recipe
    if comp is not None:
        spec, label = comp
        return (complement(build_dihedral(spec)),
                f"{label} complement family: complement({spec.describe()})")
    return None


def _certify(g: Graph, recipe: str, n: int, d: int) -> Witness:
    cert = nut_check_direct(g)
    if not cert.is_nut:
        raise RuntimeError(f"construction failed certification for ({n}, {d}): {recipe}")
    if g.order != n or is_regular(g) != d:
        raise RuntimeError(f"construction has wrong shape for ({n}, {d}): {recipe}")
    _assert_witness_parity(n, d)
    return Witness(g, recipe, cert)


def _assert_witness_parity(n: int, d: int) -> None:
    # Necessary conditions for any (bi)circulant nut graph; every emitted
    # witness must satisfy them.
    if n % 2 or d % 2 or (n % 4 and d % 4) or d < 4 or n < d + 4:
        raise RuntimeError(f"witness parameters ({n}, {d}) violate the necessary "
                           "order/degree parity conditions")


def construct(n: int, d: int, budget: int | None = None) -> Witness:
    """A certified d-regular nut-graph witness of order n.

    Dispatch: sporadic catalog; then the parameterized dihedral families for
    d = 2 (mod 4); then bounded deterministic search (circulant first, then
    dihedral) for the remaining degrees divisible by 4.  Raises
    InfeasiblePairError on infeasible input and SearchExhaustedError when a
    bounded search ends empty; never returns an unverified graph.
    """
    verdict = feasible_vt(n, d)
    if not verdict.exists:
        raise InfeasiblePairError(verdict.reason)
    built = sporadic_witness(n, d)
    if built is None and d % 4 == 2:
        built = _dihedral_family_witness(n, d)
    if built is not None:
        return _certify(*built, n, d)
    w = circulant_search(n, d, budget)
    if w is None:
        w = dihedral_search(n, d, budget)
    if w is None:
        raise SearchExhaustedError(f"no witness found within bounds for ({n}, {d})")
    return w


# -- bounded searches -----------------------------------------------------------

def _effective_budget(n: int, budget: int | None) -> int | None:
    if budget is not None:
        return budget
    return None if n <= _EXHAUSTIVE_ORDER else DEFAULT_SEARCH_BUDGET


def _circulant_candidates(n: int, d: int):
    """Jump sets giving degree d at order n, ascending lexicographically."""
    if d < 0 or d > n - 1:
        return
    half = n // 2
    if n % 2 == 0:
        if d % 2 == 0:
            pool = range(1, half)
            for combo in combinations(pool, d // 2):
                yield frozenset(combo)
        else:
            pool = range(1, half)
            for combo in combinations(pool, (d - 1) // 2):
                yield frozenset(combo) | {half}
    else:
        if d % 2 == 0:
            for combo in combinations(range(1, half + 1), d // 2):
                yield frozenset(combo)


def circulant_search(n: int, d: int, budget: int | None = None) -> Witness | None:
    """First certified circulant nut witness at (n, d), or None.

    Jump sets are enumerated in deterministic lexicographic order and each
    candidate is certified by the direct kernel check.  The enumeration is
    exhaustive up to order 24; beyond that a candidate budget applies
    (DEFAULT_SEARCH_BUDGET unless overridden).
    """
    if n < 3:
        raise ValueError("circulant order must be >= 3")
    cap = _effective_budget(n, budget)
    examined = 0
    for jumps in _circulant_candidates(n, d):
        if cap is not None and examined >= cap:
            break
        examined += 1
        g = build_circulant(CirculantSpec(n, jumps))
        cert = nut_check_direct(g)
        if cert.is_nut:
            return Witness(g, f"circulant(n={n}, jumps={sorted(jumps)})", cert)
    return None


def _rotation_orbits(m: int) -> list[tuple[int, ...]]:
    orbits: list[tuple[int, ...]] = [(a, m - a) for a in range(1, (m + 1) // 2)]
    if m % 2 == 0:
        orbits.append((m // 2,))
    return orbits


def _dihedral_candidates(n: int, d: int):
    """Dihedral connection sets giving degree d at order n = 2m, in
    deterministic (rotation set, reflection set) lexicographic order."""
    if n % 2:
        return
    m = n // 2
    orbits = _rotation_orbits(m)
    for k in range(len(orbits) + 1):
        for orbit_combo in combinations(range(len(orbits)), k):
            rot: set[int] = set()
            for i in orbit_combo:
                rot |= set(orbits[i])
            refl_size = d - len(rot)
            if refl_size < 0 or refl_size > m:
                continue
            for refl in combinations(range(m), refl_size):
                yield frozenset(rot), frozenset(refl)


def dihedral_search(n: int, d: int, budget: int | None = None) -> Witness | None:
    """First certified dihedral Cayley nut witness at (n, d), or None."""
    if n % 2 or n < 6:
        raise ValueError("dihedral order must be even and >= 6")
    cap = _effective_budget(n, budget)
    examined = 0
    for rot, refl in _dihedral_candidates(n, d):
        if cap is not None and examined >= cap:
            break
        examined += 1
        spec = DihedralSpec(n // 2, rot, refl)
        g = build_dihedral(spec)
        cert = nut_check_direct(g)
        if cert.is_nut:
            return Witness(g, spec.describe(), cert)
    return None


# -- canonical labeling and census ----------------------------------------------

def canonical_form(g: Graph) -> tuple[int, ...]:
    """Isomorphism-invariant key: the lexicographically minimal sequence of
    column codes over all vertex orderings.

    The code of position k is the adjacency bit pattern of the k-th placed
    vertex against positions 0..k-1 (earlier position = higher bit).  The
    search is exhaustive branch-and-bound: a partial ordering is abandoned as
    soon as its code sequence exceeds the best complete sequence found.
    """
    n = g.order
    rows = g.adjacency_rows()
    best: list[int] | None = None
    perm: list[int] = []
    cols: list[int] = []
    used = 0

    def rec(k: int) -> None:
        nonlocal best, used
        if k == n:
            if best is None or cols < best:
                best = cols.copy()
            return
        cand = []
        for v in range(n):
            if used >> v & 1:
                continue
            code = 0
            rv = rows[v]
            for u in perm:
                code = code << 1 | (rv >> u & 1)
            cand.append((code, v))
        cand.sort()
        for code, v in cand:
            if best is not None:
                tight = all(cols[i] == best[i] for i in range(k))
                if tight and code > best[k]:
                    break  # codes ascend: every later candidate is worse
            perm.append(v)
            cols.append(code)
            used |= 1 << v
            rec(k + 1)
            perm.pop()
            cols.pop()
            used &= ~(1 << v)

    rec(0)
    assert best is not None
    return (n, *best)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    """Exact isomorphism test via canonical forms (small orders only)."""
    if a.order != b.order or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a) == canonical_form(b)


def _budgeted(tasks, budget: int, family: str, n: int, d: int):
    count = 0
    for task in tasks:
        count += 1
        if count > budget:
            raise SearchExhaustedError(
                f"census candidate count for ({family}, {n}, {d}) exceeds the "
                f"budget of {budget}")
        yield task


def _census_certify(args):
    family, n, payload = args
    if family == "circulant":
        g = build_circulant(CirculantSpec(n, payload))
        recipe = f"circulant(n={n}, jumps={sorted(payload)})"
    else:
        rot, refl = payload
        spec = DihedralSpec(n // 2, rot, refl)
        g = build_dihedral(spec)
        recipe = spec.describe()
    cert = nut_check_direct(g)
    return (g, recipe, cert) if cert.is_nut else None


def census(family: str, n: int, d: int, dedup: bool = True,
           jobs: int = 1, budget: int | None = None) -> list[Witness]:
    """All nut graphs of the family at (n, d), one witness per isomorphism
    class (or one per connection set with dedup disabled).

    Candidates are enumerated deterministically; with jobs > 1 certification
    is distributed over worker processes and merged back in candidate order,
    so the output is independent of scheduling.  A budget caps the number of
    candidate connection sets; exceeding it raises SearchExhaustedError
    rather than returning a silently truncated census.
    """
    if family == "circulant":
        tasks = (("circulant", n, jumps) for jumps in _circulant_candidates(n, d))
    elif family == "dihedral":
        tasks = (("dihedral", n, pair) for pair in _dihedral_candidates(n, d))
    else:
        raise ValueError(f"unknown census family: {family}")
    if dedup and n > CANONICAL_ORDER_LIMIT:
        raise ValueError(
            f"order {n} exceeds the canonical-labeling limit {CANONICAL_ORDER_LIMIT}; "
            "rerun with dedup disabled (--no-dedup)")
    if budget is not None:
        tasks = _budgeted(tasks, budget, family, n, d)
    if jobs > 1:
        from multiprocessing import Pool

        pool = Pool(jobs)
        results = pool.imap(_census_certify, tasks, chunksize=16)
    else:
        pool = None
        results = map(_census_certify, tasks)
    witnesses = []
    seen: set[tuple[int, ...]] = set()
    try:
        for res in results:
            if res is None:
                continue
            g, recipe, cert = res
            if dedup:
                key = canonical_form(g)
                if key in seen:
                    continue
                seen.add(key)
            _assert_witness_parity(g.order, is_regular(g))
            witnesses.append(Witness(g, recipe, cert))
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return witnesses
