"""nutforge: exact constructions and certification of regular nut graphs.

A nut graph is a nontrivial simple graph whose adjacency matrix has nullity
exactly one with a kernel vector free of zero entries.  This package decides
for which (order, degree) pairs a vertex-transitive / Cayley nut graph
exists, produces a certified witness graph for every feasible pair via
dihedral-group and circulant constructions, and re-verifies the cyclotomic
non-divisibility facts those constructions rest on.

All certification is exact: arbitrary-precision integer polynomials, exact
rational nullspaces, and cyclotomic divisibility tests.  No floating point is
involved anywhere in a verdict.
"""

from .exact import (
    IntMatrix,
    KernelResult,
    Polynomial,
    integer_kernel_vector,
    matrix_kernel,
    poly_cyclic_reduce,
    poly_divrem,
    poly_mul,
)
from .cyclotomic import (
    CycIndex,
    cyclotomic,
    divides_cyclotomic,
    enumerate_feasible_indices,
    prime_power_cancellation_applies,
    radical_scaling_identity_holds,
    residue_split,
)
from .numtheory import divisors, euler_phi, factorize, radical
from .graphs import (
    BicirculantSpec,
    CirculantSpec,
    DihedralSpec,
    Graph,
    build_bicirculant,
    build_circulant,
    build_dihedral,
    build_lcf,
    complement,
    from_graph6,
    is_regular,
    parse_graph,
    serialize,
    to_graph6,
)
from .verify import (
    NutCertificate,
    SpectralReport,
    det_polynomial,
    nullity_shifted,
    nut_check_direct,
    nut_check_spectral,
    trace_polynomial,
)
from .constructions import (
    FeasibilityVerdict,
    InfeasiblePairError,
    SearchExhaustedError,
    Witness,
    are_isomorphic,
    canonical_form,
    census,
    circulant_search,
    complement_gap6_spec,
    complement_gap10_spec,
    complement_gap14_spec,
    construct,
    dihedral_2_mod_8_spec,
    dihedral_6_mod_8_spec,
    dihedral_search,
    feasible_vt,
    moebius_complement,
    prism_complement,
    sporadic_witness,
)
from .lemmas import (
    FAMILIES,
    FAMILY_TAGS,
    VerificationReport,
    build_family,
    candidate_divisor_indices,
    family_root_at_one,
    verify_family_bounded,
    verify_finite_case_analysis,
    verify_unique_remainder,
)

__version__ = "0.1.0"

__all__ = [
    "IntMatrix", "KernelResult", "Polynomial", "integer_kernel_vector",
    "matrix_kernel", "poly_cyclic_reduce", "poly_divrem", "poly_mul",
    "CycIndex", "cyclotomic", "divides_cyclotomic", "enumerate_feasible_indices",
    "prime_power_cancellation_applies", "radical_scaling_identity_holds",
    "residue_split",
    "divisors", "euler_phi", "factorize", "radical",
    "BicirculantSpec", "CirculantSpec", "DihedralSpec", "Graph",
    "build_bicirculant", "build_circulant", "build_dihedral", "build_lcf",
    "complement", "from_graph6", "is_regular", "parse_graph", "serialize",
    "to_graph6",
    "NutCertificate", "SpectralReport", "det_polynomial", "nullity_shifted",
    "nut_check_direct", "nut_check_spectral", "trace_polynomial",
    "FeasibilityVerdict", "InfeasiblePairError", "SearchExhaustedError",
    "Witness", "are_isomorphic", "canonical_form", "census", "circulant_search",
    "complement_gap6_spec", "complement_gap10_spec", "complement_gap14_spec",
    "construct", "dihedral_2_mod_8_spec", "dihedral_6_mod_8_spec",
    "dihedral_search", "feasible_vt", "moebius_complement", "prism_complement",
    "sporadic_witness",
    "FAMILIES", "FAMILY_TAGS", "VerificationReport", "build_family",
    "candidate_divisor_indices", "family_root_at_one", "verify_family_bounded",
    "verify_finite_case_analysis", "verify_unique_remainder",
]
