"""Verification suites for the four auxiliary polynomial families Q, R, S, T.

Each family member is a sparse integer polynomial whose exponents are affine
in a parameter t >= 0.  The facts re-verified here, each over an explicit
finite range, are:

* bounded non-divisibility: for t up to a bound, no cyclotomic polynomial of
  index b >= min_b divides the family member (the candidate indices b are
  complete because a divisor of a degree-D polynomial has phi(b) <= D);
* unique remainders: for every modulus beta at or above the family threshold
  and every parameter residue, some exponent of the family has a residue
  modulo beta that no other exponent shares;
* the finite case analysis: the family-specific constraint set (allowed
  primes, sum of (p - 2) over distinct primes, bound on b/rad(b), optional
  exclusion of multiples of four) leaves finitely many feasible cyclotomic
  indices b; for each of them and every parameter residue t modulo b, the
  b-th cyclotomic polynomial does not divide the cyclically reduced family
  member.  Together with the two reduction facts above, this closes the
  divisibility question for all parameters at once, because the reduced
  polynomial depends on t only through t modulo b.

Every non-divisibility verdict is exact.  The hot sweep first looks for a
modular witness (a nonzero evaluation at an order-b element of a prime field,
which proves non-divisibility outright); the exact sparse division decides
the rare parameters where no witness appears, and is the sole authority for
reporting a violation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from ._modeval import nonzero_witness, sweep_zero_parameters
from .cyclotomic import divides_cyclotomic, enumerate_feasible_indices
from .exact import Polynomial, poly_cyclic_reduce


@dataclass(frozen=True)
class CaseConstraints:
    """Feasible-index constraints of a family's finite case analysis."""

    allowed_primes: tuple[int, ...]
    sum_bound: int
    rad_ratio_bound: int
    forbid_four: bool


@dataclass(frozen=True)
class PolynomialFamily:
    """One auxiliary family: term list with exponents slope * t + offset."""

    tag: str
    min_b: int
    unique_remainder_threshold: int
    terms: tuple[tuple[int, int, int], ...]  # (coefficient, slope, offset)
    case: CaseConstraints

    def member(self, t: int) -> Polynomial:
        if t < 0:
            raise ValueError("family parameter t must be >= 0")
        return Polynomial([(a * t + c, coeff) for coeff, a, c in self.terms])

    def exponents(self, t: int) -> list[int]:
        return [a * t + c for _, a, c in self.terms]


_PRIMES_19 = (2, 3, 5, 7, 11, 13, 17, 19)
_PRIMES_37 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

FAMILIES: dict[str, PolynomialFamily] = {
    "Q": PolynomialFamily(
        tag="Q", min_b=2, unique_remainder_threshold=6,
        terms=((1, 4, 7), (-1, 4, 5), (-1, 4, 4), (2, 2, 4), (1, 2, 3),
               (1, 2, 2), (1, 2, 0), (-2, 1, 3), (-1, 0, 2), (-1, 0, 0)),
        case=CaseConstraints((2, 3, 5, 7), 8, 6, False)),
    "R": PolynomialFamily(
        tag="R", min_b=3, unique_remainder_threshold=11,
        terms=((1, 8, 15), (1, 8, 14), (1, 8, 11), (-1, 8, 10), (-1, 8, 8),
               (2, 6, 9), (-1, 4, 15), (-1, 4, 11), (-1, 4, 9), (2, 4, 8),
               (-2, 4, 7), (1, 4, 6), (1, 4, 4), (1, 4, 0), (-2, 2, 6),
               (1, 0, 7), (1, 0, 5), (-1, 0, 4), (-1, 0, 1), (-1, 0, 0)),
        case=CaseConstraints(_PRIMES_19, 18, 11, True)),
    "S": PolynomialFamily(
        tag="S", min_b=2, unique_remainder_threshold=8,
        terms=((1, 4, 13), (1, 4, 11), (1, 4, 10), (1, 4, 9), (-1, 4, 8),
               (-1, 2, 13), (-1, 2, 10), (-1, 2, 9), (3, 2, 7), (1, 2, 5),
               (-1, 2, 4), (1, 2, 3), (-1, 2, 2), (1, 2, 1), (-2, 1, 6),
               (1, 0, 6), (-1, 0, 5), (-1, 0, 1), (-1, 0, 0)),
        case=CaseConstraints(_PRIMES_19, 17, 8, False)),
    "T": PolynomialFamily(
        tag="T", min_b=3, unique_remainder_threshold=20,
        terms=((1, 8, 27), (1, 8, 26), (1, 8, 25), (1, 8, 22), (1, 8, 20),
               (1, 8, 18), (1, 8, 17), (-1, 8, 16), (-1, 8, 15), (2, 6, 15),
               (-1, 4, 26), (-1, 4, 25), (1, 4, 23), (-1, 4, 21), (-1, 4, 20),
               (1, 4, 19), (-1, 4, 18), (-1, 4, 17), (3, 4, 14), (-3, 4, 13),
               (1, 4, 10), (1, 4, 9), (-1, 4, 8), (1, 4, 7), (1, 4, 6),
               (-1, 4, 4), (1, 4, 2), (1, 4, 1), (-2, 2, 12), (1, 0, 12),
               (1, 0, 11), (-1, 0, 10), (-1, 0, 9), (-1, 0, 7), (-1, 0, 5),
               (-1, 0, 2), (-1, 0, 1), (-1, 0, 0)),
        case=CaseConstraints(_PRIMES_37, 36, 13, True)),
}

FAMILY_TAGS = tuple(FAMILIES)


def _family(tag: str) -> PolynomialFamily:
    try:
        return FAMILIES[tag]
    except KeyError:
        raise ValueError(f"unknown family tag {tag!r}; expected one of {FAMILY_TAGS}")


def build_family(tag: str, t: int) -> Polynomial:
    """The family member at parameter t, with colliding exponents merged."""
    return _family(tag).member(t)


def family_root_at_one(tag: str, t: int) -> int:
    """Value of the family member at x = 1 (always zero: the coefficients of
    every family sum to zero, so 1 is a root for all t)."""
    return _family(tag).member(t)(1)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verification run.

    ``indices_checked`` holds one (index, detail) entry per checked index in
    ascending order; ``violations`` must be empty on success; ``notes``
    carries informational findings outside the claimed range (for instance a
    unique-remainder failure below the family threshold).
    """

    family: str
    operation: str
    parameter_range: str
    indices_checked: tuple = ()
    violations: tuple = ()
    notes: tuple = ()
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def text_lines(self) -> list[str]:
        lines = [f"{self.family} {self.operation}: {self.parameter_range}"]
        for idx, detail in self.indices_checked:
            lines.append(f"  {idx}: {detail}")
        for v in self.violations:
            lines.append(f"  VIOLATION: {v}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        lines.append(f"  result: {'ok' if self.ok else 'FAILED'} "
                     f"({len(self.indices_checked)} indices, "
                     f"{len(self.violations)} violations, {self.wall_time:.2f}s)")
        return lines

    def summary(self) -> dict:
        return {
            "family": self.family,
            "operation": self.operation,
            "parameter_range": self.parameter_range,
            "checked": len(self.indices_checked),
            "violations": list(self.violations),
            "notes": list(self.notes),
            "ok": self.ok,
            "wall_time": round(self.wall_time, 3),
        }


def _phi_table(limit: int) -> list[int]:
    """Totients of 0..limit by sieve (sufficient for candidate scanning)."""
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:  # p prime
            for k in range(p, limit + 1, p):
                phi[k] -= phi[k] // p
    return phi


def candidate_divisor_indices(max_degree: int, min_b: int) -> list[int]:
    """Every b >= min_b whose cyclotomic polynomial could divide a polynomial
    of the given degree, i.e. phi(b) <= max_degree.

    Complete because phi(b) >= sqrt(b/2) for all b, so the scan up to
    2 * max_degree^2 misses nothing.
    """
    limit = 2 * max_degree * max_degree
    phi = _phi_table(limit)
    return [b for b in range(min_b, limit + 1) if phi[b] <= max_degree]


def _nondivisible(fam: PolynomialFamily, t: int, b: int) -> bool:
    """Exact decision: does the b-th cyclotomic polynomial NOT divide the
    family member at t?  Fast modular witness first, exact division on the
    rare witness-free parameters."""
    coeffs = [c for c, _, _ in fam.terms]
    exps = fam.exponents(t)
    if nonzero_witness(coeffs, exps, b):
        return True
    return not divides_cyclotomic(poly_cyclic_reduce(fam.member(t), b), b)


def verify_family_bounded(tag: str, t_max: int, min_b: int | None = None) -> VerificationReport:
    """Assert that no cyclotomic polynomial of index >= min_b divides any
    family member with parameter t <= t_max.

    For each t the candidate indices are every b with phi(b) bounded by the
    member's degree, which is a complete divisor-candidate set.
    """
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    fam = _family(tag)
    low = fam.min_b if min_b is None else min_b
    start = time.perf_counter()
    checked = []
    violations = []
    max_deg = max(a * t_max + c for _, a, c in fam.terms)
    phi = _phi_table(2 * max_deg * max_deg)
    for t in range(t_max + 1):
        deg = fam.member(t).degree
        bad = []
        count = 0
        for b in range(low, 2 * deg * deg + 1):
            if phi[b] > deg:
                continue
            count += 1
            if not _nondivisible(fam, t, b):
                bad.append(b)
        checked.append((t, f"{count} candidate indices, degree {deg}"))
        violations.extend((t, b) for b in bad)
    return VerificationReport(
        family=tag, operation="bounded-nondivisibility",
        parameter_range=f"t <= {t_max}, b >= {low}",
        indices_checked=tuple(checked), violations=tuple(violations),
        wall_time=time.perf_counter() - start)


def _has_unique_residue(fam: PolynomialFamily, t: int, beta: int) -> bool:
    residues = [(a * t + c) % beta for _, a, c in fam.terms]
    counts: dict[int, int] = {}
    for r in residues:
        counts[r] = counts.get(r, 0) + 1
    return any(v == 1 for v in counts.values())


def verify_unique_remainder(tag: str, beta_range: tuple[int, int]) -> VerificationReport:
    """For each modulus beta in the inclusive range and each parameter residue
    t in [0, beta), assert that some exponent of the family has a unique
    remainder modulo beta.

    Moduli below the family threshold are allowed but reported as
    out-of-claim notes instead of violations when they fail.
    """
    lo, hi = beta_range
    if lo < 1 or hi < lo:
        raise ValueError("beta range must satisfy 1 <= lo <= hi")
    fam = _family(tag)
    threshold = fam.unique_remainder_threshold
    start = time.perf_counter()
    checked = []
    violations = []
    notes = []
    for beta in range(lo, hi + 1):
        fails = [t for t in range(beta) if not _has_unique_residue(fam, t, beta)]
        if not fails:
            checked.append((beta, "unique remainder for every t"))
        elif beta >= threshold:
            checked.append((beta, f"FAILED for t in {fails}"))
            violations.append((beta, tuple(fails)))
        else:
            checked.append((beta, f"out of claim (threshold {threshold}); "
                                  f"fails for {len(fails)} parameter(s)"))
            notes.append(f"beta={beta} below threshold {threshold}: "
                         f"no unique remainder for t in {fails}")
    return VerificationReport(
        family=tag, operation="unique-remainder",
        parameter_range=f"beta in [{lo}, {hi}], threshold {threshold}",
        indices_checked=tuple(checked), violations=tuple(violations),
        notes=tuple(notes), wall_time=time.perf_counter() - start)


def verify_finite_case_analysis(tag: str) -> VerificationReport:
    """Enumerate the family's feasible cyclotomic indices and assert
    non-divisibility of the cyclically reduced member for every parameter
    residue.

    Because the reduction of the member modulo x^b - 1 depends on t only
    through t modulo b, checking t in [0, b) covers every parameter.  The
    modular sweep certifies almost all (b, t) pairs; survivors are decided by
    the exact division test, which alone can report a violation.
    """
    fam = _family(tag)
    cc = fam.case
    indices = enumerate_feasible_indices(cc.allowed_primes, cc.sum_bound,
                                         cc.rad_ratio_bound, fam.min_b,
                                         cc.forbid_four)
    coeffs = [c for c, _, _ in fam.terms]
    slopes = [a for _, a, _ in fam.terms]
    offsets = [c for _, _, c in fam.terms]
    start = time.perf_counter()
    checked = []
    violations = []
    for b in indices:
        suspects = sweep_zero_parameters(coeffs, slopes, offsets, b)
        confirmed = [t for t in suspects
                     if divides_cyclotomic(poly_cyclic_reduce(fam.member(t), b), b)]
        detail = f"all {b} parameter residues non-divisible"
        if suspects:
            detail += f" ({len(suspects)} decided by exact division)"
        if confirmed:
            detail = f"DIVISIBLE for t in {confirmed}"
            violations.extend((b, t) for t in confirmed)
        checked.append((b, detail))
    constraint_desc = (f"primes in {cc.allowed_primes}, sum(p-2) <= {cc.sum_bound}, "
                       f"b/rad(b) < {cc.rad_ratio_bound}, b >= {fam.min_b}"
                       + (", 4 does not divide b" if cc.forbid_four else ""))
    return VerificationReport(
        family=tag, operation="finite-case-analysis",
        parameter_range=f"{len(indices)} feasible indices ({constraint_desc})",
        indices_checked=tuple(checked), violations=tuple(violations),
        wall_time=time.perf_counter() - start)
