"""Tests for feasibility, the construction catalog, searches, and the census."""

import pytest

from nutforge.constructions import (
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
from nutforge.graphs import (
    CirculantSpec,
    DihedralSpec,
    build_circulant,
    build_dihedral,
    complement,
    is_regular,
)
from nutforge.verify import nut_check_direct, nut_check_spectral


def oracle_feasible(n, d):
    """Independent restatement of the existence conditions."""
    if d % 2 or d < 4 or n % 2 or n < d + 4:
        return False
    if d % 4 == 2 and (n % 4 or n < d + 6):
        return False
    return True


class TestFeasibility:
    def test_documented_pairs(self):
        assert feasible_vt(8, 4).exists
        assert not feasible_vt(14, 6).exists
        assert feasible_vt(12, 6).exists
        assert not feasible_vt(9, 4).exists

    def test_cases(self):
        assert feasible_vt(10, 3).case == "odd-or-small"
        assert feasible_vt(10, 0).case == "odd-or-small"
        assert feasible_vt(8, 4).case == "d-div-4"
        assert feasible_vt(12, 6).case == "d-2-mod-4"

    def test_degenerate_inputs(self):
        v = feasible_vt(1, 0)
        assert not v.exists and v.case == "odd-or-small"

    def test_matches_oracle_on_grid(self):
        for d in range(0, 21):
            for n in range(1, 41):
                assert feasible_vt(n, d).exists == oracle_feasible(n, d), (n, d)

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            feasible_vt(0, 4)
        with pytest.raises(ValueError):
            feasible_vt(8, -2)


class TestFamilySpecs:
    def test_degree_6_mod_8_instances(self):
        s = dihedral_6_mod_8_spec(0, 8)
        assert s.rotations == frozenset({1, 7})
        assert s.reflections == frozenset({0, 1, 4, 6})
        s = dihedral_6_mod_8_spec(0, 10)
        assert s.rotations == frozenset({1, 9})
        assert s.reflections == frozenset({0, 1, 4, 6})
        s = dihedral_6_mod_8_spec(1, 12)
        assert s.rotations == frozenset({1, 2, 3, 9, 10, 11})
        assert s.reflections == frozenset({0, 1, 4, 6, 8, 9, 10, 11})

    def test_degree_2_mod_8_instances(self):
        s = dihedral_2_mod_8_spec(0, 14)
        assert s.rotations == frozenset({1, 13})
        assert s.reflections == frozenset({0, 1, 2, 5, 7, 9, 10, 13})
        s = dihedral_2_mod_8_spec(0, 16)
        assert s.rotations == frozenset({1, 15})
        assert s.reflections == frozenset({0, 1, 2, 5, 7, 9, 10, 13})
        s = dihedral_2_mod_8_spec(1, 18)
        assert s.rotations == frozenset({1, 2, 3, 15, 16, 17})
        assert s.reflections == frozenset({0, 1, 2, 5, 7, 9, 10, 13, 14, 15, 16, 17})

    def test_complement_family_instances(self):
        s = complement_gap6_spec(14)
        assert (s.m, s.rotations, s.reflections) == (10, frozenset({2, 8}),
                                                     frozenset({0, 8, 9}))
        assert complement_gap6_spec(18).m == 12
        assert complement_gap6_spec(18).rotations == frozenset({2, 10})
        assert complement_gap6_spec(22).rotations == frozenset({2, 12})
        s = complement_gap10_spec(22)
        assert (s.m, s.rotations) == (16, frozenset({2, 4, 12, 14}))
        assert s.reflections == frozenset({0, 2, 6, 7, 15})
        assert complement_gap10_spec(26).rotations == frozenset({2, 4, 14, 16})
        s = complement_gap14_spec(26)
        assert (s.m, s.rotations) == (20, frozenset({2, 4, 7, 13, 16, 18}))
        assert s.reflections == frozenset({0, 2, 6, 7, 14, 17, 19})

    def test_bounds_enforced(self):
        with pytest.raises(ValueError):
            dihedral_6_mod_8_spec(0, 7)  # odd m
        with pytest.raises(ValueError):
            dihedral_6_mod_8_spec(1, 10)  # below 4t + 8
        with pytest.raises(ValueError):
            dihedral_2_mod_8_spec(0, 12)
        with pytest.raises(ValueError):
            complement_gap6_spec(10)
        with pytest.raises(ValueError):
            complement_gap10_spec(18)
        with pytest.raises(ValueError):
            complement_gap14_spec(22)

    def test_family_degrees(self):
        for t, m in ((0, 8), (1, 12), (2, 20)):
            g = build_dihedral(dihedral_6_mod_8_spec(t, m))
            assert is_regular(g) == 8 * t + 6
        for t, m in ((0, 14), (1, 18), (2, 24)):
            g = build_dihedral(dihedral_2_mod_8_spec(t, m))
            assert is_regular(g) == 8 * t + 10


class TestSporadic:
    def test_twelve_six(self):
        g, recipe = sporadic_witness(12, 6)
        assert g.order == 12 and is_regular(g) == 6
        assert "dihedral(m=6" in recipe

    def test_moebius_slot(self):
        g, recipe = sporadic_witness(16, 12)
        assert g == moebius_complement(16)
        assert is_regular(g) == 12
        assert "circulant(n=16, jumps=[1, 8])" in recipe

    def test_lcf_slot(self):
        g, recipe = sporadic_witness(20, 16)
        assert is_regular(g) == 16
        assert "lcf" in recipe

    def test_prism_slot(self):
        g, recipe = sporadic_witness(12, 8)
        assert g == prism_complement(8)
        assert "prism" in recipe

    def test_absent(self):
        assert sporadic_witness(16, 6) is None


class TestConstruct:
    def test_direct_family_pair(self):
        w = construct(16, 6)
        assert w.graph.order == 16
        assert is_regular(w.graph) == 6
        assert w.certificate.is_nut
        assert "degree-(8t+6)" in w.recipe

    def test_complement_family_pair(self):
        w = construct(20, 14)
        assert (w.graph.order, is_regular(w.graph)) == (20, 14)
        assert "complement" in w.recipe

    def test_prism_complement_pair(self):
        w = construct(12, 8)
        assert w.graph == prism_complement(8)
        assert w.certificate.is_nut

    def test_infeasible_raises(self):
        with pytest.raises(InfeasiblePairError):
            construct(14, 6)
        with pytest.raises(InfeasiblePairError):
            construct(9, 4)

    def test_search_pairs(self):
        w = construct(14, 8)  # circulant regime
        assert (w.graph.order, is_regular(w.graph)) == (14, 8)
        w = construct(16, 8)  # sporadic: circulants do not cover this pair
        assert "sporadic" in w.recipe

    def test_spectral_agreement_of_family_witnesses(self):
        # Direct families: the only singular block divisor is 2 (shift 0);
        # complement families: the base graph is singular only at 1 (shift 1).
        # Spanned over the whole order range of the acceptance sweep.
        for t in range(0, 4):
            for m in range(4 * t + 8, 4 * t + 40, 2):
                rep = nut_check_spectral(dihedral_6_mod_8_spec(t, m).as_bicirculant(), 0)
                assert rep.singular_divisors == (2,) and rep.total_nullity == 1
        for t in range(0, 3):
            for m in range(4 * t + 14, 4 * t + 44, 2):
                rep = nut_check_spectral(dihedral_2_mod_8_spec(t, m).as_bicirculant(), 0)
                assert rep.singular_divisors == (2,) and rep.total_nullity == 1
        families = ((complement_gap6_spec, 14), (complement_gap10_spec, 22),
                    (complement_gap14_spec, 26))
        for spec_fn, d_min in families:
            for d in range(d_min, 47, 4):
                rep = nut_check_spectral(spec_fn(d).as_bicirculant(), 1)
                assert rep.singular_divisors == (1,) and rep.total_nullity == 1


class TestSearch:
    def test_finds_first_lexicographic(self):
        w = circulant_search(8, 4)
        assert w is not None
        assert "jumps=[1, 2]" in w.recipe

    def test_absent_for_non_multiple_of_four(self):
        assert circulant_search(12, 6) is None

    def test_order_ten(self):
        w = circulant_search(10, 4)
        assert w is not None and "jumps=[1, 2]" in w.recipe

    def test_budget_respected(self):
        assert circulant_search(8, 4, budget=0) is None

    def test_construct_budget_exhaustion(self):
        with pytest.raises(SearchExhaustedError):
            construct(14, 8, budget=0)

    def test_dihedral_search_small(self):
        w = dihedral_search(12, 6)
        assert w is not None
        assert is_regular(w.graph) == 6 and w.graph.order == 12


class TestCanonicalAndCensus:
    def test_relabel_invariance(self):
        import random

        rng = random.Random(107)
        g = build_circulant(CirculantSpec(8, {1, 2}))
        for _ in range(10):
            perm = list(range(8))
            rng.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == canonical_form(g)

    def test_distinguishes_nonisomorphic(self):
        a = build_circulant(CirculantSpec(8, {1, 2}))
        b = build_circulant(CirculantSpec(8, {1, 3}))
        assert canonical_form(a) != canonical_form(b)

    def test_matches_exhaustive_minimum_on_small_graphs(self):
        # Independent oracle: minimize the column-code sequence over every
        # permutation explicitly.
        import random
        from itertools import permutations

        from nutforge.graphs import Graph

        def brute_minimum(g):
            n = g.order
            best = None
            for perm in permutations(range(n)):
                cols = []
                for k in range(n):
                    code = 0
                    for u in perm[:k]:
                        code = code << 1 | g.has_edge(u, perm[k])
                    cols.append(code)
                if best is None or cols < best:
                    best = cols
            return (n, *best)

        rng = random.Random(109)
        for _ in range(25):
            n = rng.randint(1, 6)
            edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                     if rng.random() < 0.5]
            g = Graph.from_edges(n, edges)
            assert canonical_form(g) == brute_minimum(g)

    def test_census_unique_classes(self):
        assert len(census("circulant", 8, 4)) == 1
        assert len(census("circulant", 10, 4)) == 1

    def test_census_no_dedup_counts_specs(self):
        with_dup = census("circulant", 8, 4, dedup=False)
        assert len(with_dup) >= 1
        assert all(w.certificate.is_nut for w in with_dup)

    def test_census_dihedral_twelve_six(self):
        classes = census("dihedral", 12, 6)
        assert len(classes) == 1

    def test_census_dihedral_contains_prism_complement(self):
        classes = census("dihedral", 12, 8)
        target = canonical_form(prism_complement(8))
        assert len(classes) >= 1
        assert any(canonical_form(w.graph) == target for w in classes)

    def test_census_representatives_recertify(self):
        for w in census("dihedral", 12, 6) + census("circulant", 10, 4):
            fresh = nut_check_direct(w.graph)
            assert fresh.is_nut and fresh.nullity == 1

    def test_census_jobs_deterministic(self):
        a = census("circulant", 10, 4, jobs=1)
        b = census("circulant", 10, 4, jobs=2)
        assert [w.recipe for w in a] == [w.recipe for w in b]

    def test_census_order_limit(self):
        with pytest.raises(ValueError, match="no-dedup"):
            census("circulant", 22, 4)

    def test_ten_regular_pair_isomorphic(self):
        # The 10-regular order-16 dihedral graph and the complement of the
        # order-16 dihedral graph on {r^4, rs, r^5 s, r^6 s, r^7 s} are two
        # descriptions of one graph; compare complements (sparser, faster).
        a = build_dihedral(DihedralSpec(8, {1, 2, 3, 5, 6, 7}, {0, 2, 3, 4}))
        b = complement(build_dihedral(DihedralSpec(8, {4}, {1, 5, 6, 7})))
        assert nut_check_direct(a).is_nut and nut_check_direct(b).is_nut
        assert are_isomorphic(complement(a), complement(b))


class TestWitnessInvariant:
    def test_witness_requires_nut_certificate(self):
        g = build_circulant(CirculantSpec(4, {1}))
        cert = nut_check_direct(g)
        with pytest.raises(ValueError):
            Witness(g, "square", cert)
