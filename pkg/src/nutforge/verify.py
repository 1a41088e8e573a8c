"""Nut-property certification by two independent exact methods.

Direct method: compute the exact rational nullspace of the adjacency matrix.
The graph is a nut graph iff the nullity is one and the kernel vector has no
zero coordinate.

Spectral method (bicirculant graphs only): the adjacency matrix of an
order-2m bicirculant is similar to the direct sum over the m-th roots of
unity zeta of the 2x2 blocks

    [[p0(zeta), p1(1/zeta)], [p1(zeta), p2(zeta)]],

where p_i sums x^j over connection set i.  The block determinant, as a
polynomial reduced modulo x^m - 1, therefore decides singularity at every
root of unity at once: the blocks at the primitive b-th roots (b dividing m)
are singular iff the b-th cyclotomic polynomial divides the determinant
polynomial.  Block zero-eigenvalue multiplicity is one unless the trace
vanishes there too; aggregating phi(b) times the block multiplicity over the
singular divisors gives the total nullity without ever touching algebraic
numbers.

A diagonal shift of one runs the same computation for eigenvalue -1, which is
what complement constructions need: for a non-complete regular graph the
complement's nullity equals the multiplicity of -1 in the base graph.

For vertex-transitive inputs nullity one already implies the nut property, so
the spectral verdict is complete for dihedral Cayley graphs.  For general
bicirculants the spectral method reports the nullity only; the kernel-entry
condition always defers to the direct method.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import divides_cyclotomic
from .exact import Polynomial, matrix_kernel
from .graphs import BicirculantSpec, Graph
from .numtheory import divisors, euler_phi


@dataclass(frozen=True)
class NutCertificate:
    """Outcome of a nut check.

    ``kernel_vector`` is present exactly when the direct method found
    nullity one; it is the unique (up to scale) exact kernel vector.
    """

    is_nut: bool
    nullity: int
    kernel_vector: tuple | None
    kernel_has_zero_entry: bool | None
    method: str

    def __post_init__(self):
        if self.is_nut and (self.nullity != 1 or self.kernel_has_zero_entry):
            raise ValueError("inconsistent certificate")


@dataclass(frozen=True)
class DivisorVerdict:
    """Singularity report for the blocks at the primitive b-th roots of unity."""

    b: int
    det_divisible: bool
    trace_nonzero_at_root: bool | None  # present only when det_divisible


@dataclass(frozen=True)
class SpectralReport:
    """Nullity of a (possibly shifted) bicirculant adjacency matrix, resolved
    per divisor of m."""

    m: int
    shift: int
    divisor_verdicts: tuple[DivisorVerdict, ...]
    total_nullity: int

    @property
    def singular_divisors(self) -> tuple[int, ...]:
        return tuple(v.b for v in self.divisor_verdicts if v.det_divisible)

    @property
    def simple_zero(self) -> bool:
        """True iff the total nullity is exactly one (for vertex-transitive
        graphs this is equivalent to the nut property)."""
        return self.total_nullity == 1


def nut_check_direct(g: Graph) -> NutCertificate:
    """Certify the nut property by exact kernel computation."""
    res = matrix_kernel(g.adjacency_matrix())
    if res.nullity == 1:
        vec = res.basis[0]
        has_zero = any(x == 0 for x in vec)
        return NutCertificate(is_nut=not has_zero, nullity=1, kernel_vector=vec,
                              kernel_has_zero_entry=has_zero, method="direct")
    return NutCertificate(is_nut=False, nullity=res.nullity, kernel_vector=None,
                          kernel_has_zero_entry=None, method="direct")


def nullity_shifted(g: Graph, shift: int) -> int:
    """Nullity of A(g) + shift * I.

    For shift one on a regular non-complete graph this equals the nullity of
    the complement, since complementing a d-regular graph of order n maps the
    non-principal eigenvalues lambda to -1 - lambda.
    """
    return matrix_kernel(g.adjacency_matrix().shifted(shift)).nullity


def _connection_polynomial(conn, m: int) -> Polynomial:
    return Polynomial({j % m: 1 for j in conn})


def det_polynomial(spec: BicirculantSpec, shift: int) -> Polynomial:
    """Block-determinant polynomial D with D(zeta) = det(A_zeta + shift * I)
    for every m-th root of unity zeta, reduced modulo x^m - 1.

    D = (shift + p0) * (shift + p2) - p1 * p1~, where p1~ reverses the
    exponents of p1 modulo m (the evaluation of p1 at 1/zeta).
    """
    m = spec.m
    p0 = _connection_polynomial(spec.s0, m)
    p2 = _connection_polynomial(spec.s2, m)
    p1 = _connection_polynomial(spec.s1, m)
    p1_rev = Polynomial({(m - j) % m: 1 for j in spec.s1})
    d = (p0 + shift) * (p2 + shift) - p1 * p1_rev
    return d.cyclic_reduce(m)


def trace_polynomial(spec: BicirculantSpec, shift: int) -> Polynomial:
    """Block-trace polynomial T with T(zeta) = trace(A_zeta + shift * I)."""
    m = spec.m
    t = (_connection_polynomial(spec.s0, m) + _connection_polynomial(spec.s2, m)
         + 2 * shift)
    return t.cyclic_reduce(m)


def nut_check_spectral(spec: BicirculantSpec, shift: int = 0) -> SpectralReport:
    """Resolve the nullity of the (shifted) bicirculant through its 2x2 blocks.

    For each divisor b of m the primitive b-th roots of unity contribute
    phi(b) blocks; each is singular iff the b-th cyclotomic polynomial
    divides the determinant polynomial, with zero-eigenvalue multiplicity two
    iff the trace polynomial is divisible as well.
    """
    if shift not in (0, 1):
        raise ValueError("shift must be 0 or 1")
    det = det_polynomial(spec, shift)
    trace = trace_polynomial(spec, shift)
    verdicts = []
    total = 0
    for b in divisors(spec.m):
        if divides_cyclotomic(det, b):
            trace_divisible = divides_cyclotomic(trace, b)
            mult = 2 if trace_divisible else 1
            total += euler_phi(b) * mult
            verdicts.append(DivisorVerdict(b, True, not trace_divisible))
        else:
            verdicts.append(DivisorVerdict(b, False, None))
    return SpectralReport(spec.m, shift, tuple(verdicts), total)
