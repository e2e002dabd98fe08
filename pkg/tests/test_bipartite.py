"""Feasibility formulas and constructions for balanced complete bipartite graphs."""

import random

import pytest

from equitree import (
    InfeasibleVectorError,
    Params,
    PreconditionError,
    SolutionPair,
    TreeColoring,
    UNBOUNDED,
    complete_bipartite,
    construct_knn_11,
    construct_knn_inf2,
    cycle,
    detect_balanced_biclique,
    even_t_coloring,
    exact_va11,
    exact_vainf2,
    feasible_11,
    feasible_inf2,
    graph_from_edges,
    infeasible_by_divisibility,
    make_class_counts,
    odd_q_11_coloring,
    odd_q_inf2_counts,
    path,
    realize_class_counts,
    relabel_for_sides,
    solve_linear,
    two_solution_coloring,
    va11_upper,
    vainf2_upper,
    verify,
)


def _check_11(n, q, coloring):
    rep = verify(complete_bipartite(n), coloring, Params(q, 1, 1))
    assert rep.verdict, rep.first_violation


def _check_inf2(n, q, coloring):
    rep = verify(complete_bipartite(n), coloring, Params(q, UNBOUNDED, 2))
    assert rep.verdict, rep.first_violation


class TestSolveLinear:
    def test_frozen_example(self):
        assert [(s.x, s.y) for s in solve_linear(3, 43)] == [
            (1, 10), (5, 7), (9, 4), (13, 1)
        ]

    def test_no_solution(self):
        assert solve_linear(3, 5) == []

    def test_matches_exhaustive_enumeration(self):
        for a in range(1, 7):
            for n in range(0, 60):
                got = [(s.x, s.y) for s in solve_linear(a, n)]
                want = [
                    (x, y)
                    for x in range(n + 1)
                    for y in range(n + 1)
                    if a * x + (a + 1) * y == n
                ]
                assert got == sorted(want)

    def test_pair_size_total(self):
        for s in solve_linear(3, 43):
            assert s.z == s.x + s.y


class TestClassCounts:
    def test_valid_vector_accepted(self):
        vec = make_class_counts(65, 9, x2p=5, y1=4)
        assert (vec.a, vec.r) == (14, 4)
        assert vec.counts() == (0, 0, 0, 5, 4, 0, 0, 0)

    def test_negative_count_rejected(self):
        with pytest.raises(InfeasibleVectorError, match="negative"):
            make_class_counts(65, 9, x2p=6, y1=-1, y2=4)

    def test_wrong_total_rejected(self):
        with pytest.raises(InfeasibleVectorError, match="sum"):
            make_class_counts(65, 9, x2p=5, y1=3)

    def test_side_equation_rejected(self):
        with pytest.raises(InfeasibleVectorError, match="consumption"):
            make_class_counts(65, 9, x2p=4, y1=5)

    def test_a_zero_excludes_depleted_shapes(self):
        with pytest.raises(InfeasibleVectorError, match="a=0"):
            make_class_counts(2, 5, x1=2, y1=2, x2p=1)

    def test_a_zero_valid_vector(self):
        vec = make_class_counts(2, 5, x1=2, x2=1, y1=2)
        assert vec.a == 0

    def test_realize_frozen_witness(self):
        vec = make_class_counts(65, 9, x2p=5, y1=4)
        coloring = realize_class_counts(65, 9, vec)
        _check_inf2(65, 9, coloring)

    def test_realize_rejects_invalid_vector(self):
        from equitree import ClassCountVector
        bad = ClassCountVector(14, 4, x2p=5, y1=3)
        with pytest.raises(InfeasibleVectorError):
            realize_class_counts(65, 9, bad)

    def test_realize_round_trips_shape_census(self):
        """Counting realized classes by side signature recovers the vector."""
        for n, q in ((65, 9), (65, 11), (50, 9)):
            vec = (feasible_inf2(n, q) if q == 9 and n == 65
                   else odd_q_inf2_counts(n, q))
            coloring = realize_class_counts(n, q, vec)
            a = vec.a
            census = {
                (a + 1, 0): 0, (a, 0): 0, (a, 1): 0, (a - 1, 1): 0,
                (0, a + 1): 0, (0, a): 0, (1, a): 0, (1, a - 1): 0,
            }
            for c in range(1, q + 1):
                members = coloring.color_class(c)
                xs = sum(1 for v in members if v < n)
                ys = len(members) - xs
                census[(xs, ys)] += 1
            assert (
                census[(a + 1, 0)], census[(a, 0)], census[(a, 1)],
                census[(a - 1, 1)], census[(0, a + 1)], census[(0, a)],
                census[(1, a)], census[(1, a - 1)],
            ) == vec.counts()


class TestEvenT:
    def test_small_profile(self):
        coloring = even_t_coloring(5, 4)
        assert sorted(coloring.class_sizes()) == [2, 2, 3, 3]
        rep = verify(complete_bipartite(5), coloring, Params(4, 0, 0))
        assert rep.verdict

    def test_one_sided_classes_satisfy_any_caps(self):
        for n, t in ((3, 2), (7, 6), (10, 4), (9, 8)):
            coloring = even_t_coloring(n, t)
            rep = verify(complete_bipartite(n), coloring, Params(t, 0, 0))
            assert rep.verdict, (n, t, rep.first_violation)

    def test_odd_t_rejected(self):
        with pytest.raises(PreconditionError):
            even_t_coloring(5, 3)


class TestOddQ11:
    def test_below_n_uses_edges_and_triples(self):
        coloring = odd_q_11_coloring(7, 5)
        sizes = sorted(coloring.class_sizes())
        assert sizes == [2, 3, 3, 3, 3]
        _check_11(7, 5, coloring)

    def test_between_n_and_2n(self):
        coloring = odd_q_11_coloring(5, 7)
        assert sorted(coloring.class_sizes()) == [1, 1, 1, 1, 2, 2, 2]
        _check_11(5, 7, coloring)

    def test_at_least_2n_gives_singletons(self):
        coloring = odd_q_11_coloring(3, 7)
        assert sorted(coloring.class_sizes()) == [0, 1, 1, 1, 1, 1, 1]
        _check_11(3, 7, coloring)

    def test_below_threshold_rejected(self):
        with pytest.raises(PreconditionError):
            odd_q_11_coloring(7, 3)

    def test_sweep_verifies(self):
        for n in (1, 2, 3, 6, 10, 17):
            start = 2 * ((n + 1) // 3) + 1
            for q in range(start, 2 * n + 4, 2):
                _check_11(n, q, odd_q_11_coloring(n, q))


class TestTwoSolution:
    def test_builds_from_two_pairs(self):
        s1, s2 = SolutionPair(1, 10), SolutionPair(5, 7)
        coloring = two_solution_coloring(43, 1, 1, s1, s2)
        assert coloring.t == s1.z + s2.z == 23
        _check_11(43, 23, coloring)

    def test_same_pair_twice(self):
        s = SolutionPair(5, 7)
        coloring = two_solution_coloring(43, 1, 1, s, s)
        assert coloring.t == 24
        _check_11(43, 24, coloring)

    def test_mismatched_moduli_rejected(self):
        with pytest.raises(PreconditionError):
            two_solution_coloring(43, 1, 1, SolutionPair(1, 10),
                                  SolutionPair(2, 13))

    def test_unsolvable_pair_rejected(self):
        with pytest.raises(PreconditionError):
            two_solution_coloring(43, 1, 1, SolutionPair(2, 10),
                                  SolutionPair(1, 10))


class TestOddQInf2Counts:
    def test_case_small_q(self):
        vec = odd_q_inf2_counts(65, 11)
        assert vec.counts() == (5, 0, 0, 0, 0, 1, 4, 1)
        _check_inf2(65, 11, realize_class_counts(65, 11, vec))

    def test_case_middle_q(self):
        vec = odd_q_inf2_counts(50, 9)
        assert vec.counts() == (0, 0, 0, 5, 1, 3, 0, 0)
        _check_inf2(50, 9, realize_class_counts(50, 9, vec))

    def test_case_large_q(self):
        vec = odd_q_inf2_counts(8, 5)
        assert vec.counts() == (0, 2, 0, 0, 0, 1, 1, 1)
        _check_inf2(8, 5, realize_class_counts(8, 5, vec))

    def test_gap_instance_raises(self):
        with pytest.raises(InfeasibleVectorError):
            odd_q_inf2_counts(10, 7)

    def test_even_or_out_of_range_rejected(self):
        with pytest.raises(PreconditionError):
            odd_q_inf2_counts(65, 10)
        with pytest.raises(PreconditionError):
            odd_q_inf2_counts(65, 65)

    def test_all_successes_verify(self):
        for n in range(3, 40):
            t = vainf2_upper(n) // 2 * 2
            low = max(3, t - 1 if t else 3)
            for q in range(low, n, 2):
                try:
                    vec = odd_q_inf2_counts(n, q)
                except (PreconditionError, InfeasibleVectorError):
                    continue
                _check_inf2(n, q, realize_class_counts(n, q, vec))


class TestBoundsAndPredicates:
    def test_frozen_upper_bounds(self):
        assert va11_upper(43) == 28
        assert vainf2_upper(65) == 10
        assert vainf2_upper(20) == 6

    def test_feasible_beyond_upper_bounds(self):
        for n in range(1, 41):
            for q in range(va11_upper(n), 2 * n + 3):
                if q >= 1:
                    assert feasible_11(n, q), (n, q)
            for q in range(vainf2_upper(n), 2 * n + 3):
                if q >= 1:
                    assert feasible_inf2(n, q) is not None, (n, q)

    def test_divisibility_obstruction_examples(self):
        assert infeasible_by_divisibility(9, 3)
        assert infeasible_by_divisibility(20, 5)
        assert not infeasible_by_divisibility(65, 13)
        assert not infeasible_by_divisibility(9, 2)

    def test_divisibility_obstruction_implies_formula_says_no(self):
        for n in range(1, 61):
            for t in range(1, 2 * n + 1):
                if infeasible_by_divisibility(n, t):
                    assert feasible_inf2(n, t) is None, (n, t)

    def test_matching_variant_implies_star_variant(self):
        """A (q,1,1)-coloring is also a (q,inf,2)-coloring, so the
        feasibility regions must nest."""
        for n in range(1, 31):
            for q in range(1, 2 * n + 3):
                if feasible_11(n, q):
                    assert feasible_inf2(n, q) is not None, (n, q)

    def test_frozen_11_values(self):
        assert not feasible_11(43, 21)
        assert all(feasible_11(43, q) for q in range(22, 87))
        assert not feasible_11(8, 5)
        assert not feasible_11(5, 3)
        assert not feasible_11(2, 1)
        assert feasible_11(1, 1)

    def test_frozen_inf2_values(self):
        assert feasible_inf2(65, 7) is None
        assert feasible_inf2(9, 3) is None
        assert feasible_inf2(20, 5) is None
        witness = feasible_inf2(65, 9)
        assert witness is not None
        assert witness.counts() == (0, 0, 0, 5, 4, 0, 0, 0)

    def test_inf2_witnesses_always_realize(self):
        for n in range(1, 36):
            for q in range(1, 2 * n + 3):
                witness = feasible_inf2(n, q)
                if witness is not None:
                    _check_inf2(n, q, realize_class_counts(n, q, witness))


class TestExactThresholds:
    def test_frozen_values(self):
        assert exact_va11(43) == 22
        assert exact_vainf2(65) == 8
        assert exact_va11(5) == 4
        assert exact_va11(1) == 1
        assert exact_va11(2) == 2

    def test_definition_against_feasibility_scan(self):
        for n in range(1, 26):
            s = exact_va11(n)
            assert all(feasible_11(n, q) for q in range(s, 2 * n + 5))
            assert s == 1 or not feasible_11(n, s - 1)
            s2 = exact_vainf2(n)
            assert all(
                feasible_inf2(n, q) is not None for q in range(s2, 2 * n + 5)
            )
            assert s2 == 1 or feasible_inf2(n, s2 - 1) is None

    def test_thresholds_below_upper_bounds(self):
        for n in range(1, 80):
            assert exact_va11(n) <= max(1, va11_upper(n))
            assert exact_vainf2(n) <= max(1, vainf2_upper(n))
            assert exact_vainf2(n) <= exact_va11(n)


class TestConstructDrivers:
    def test_11_sweep(self):
        for n in (1, 2, 4, 7, 12, 19):
            for q in range(exact_va11(n), 2 * n + 4):
                _check_11(n, q, construct_knn_11(n, q))

    def test_inf2_sweep(self):
        for n in (1, 2, 4, 7, 12, 19):
            for q in range(exact_vainf2(n), 2 * n + 4):
                _check_inf2(n, q, construct_knn_inf2(n, q))

    def test_infeasible_requests_raise(self):
        with pytest.raises(PreconditionError):
            construct_knn_11(8, 5)
        with pytest.raises(PreconditionError):
            construct_knn_inf2(65, 7)
        with pytest.raises(PreconditionError):
            construct_knn_inf2(9, 3)

    def test_gap_instance_still_constructs(self):
        """(10, 7) defeats the case formulas but is feasible, so the
        driver must fall back to the feasibility witness."""
        _check_inf2(10, 7, construct_knn_inf2(10, 7))


class TestBicliqueDetection:
    def test_canonical_layout(self):
        sides = detect_balanced_biclique(complete_bipartite(4))
        assert sides == (list(range(4)), list(range(4, 8)))

    def test_shuffled_biclique_detected_and_colorable(self):
        rng = random.Random(99)
        for n in (2, 3, 5):
            base = complete_bipartite(n)
            perm = list(range(2 * n))
            rng.shuffle(perm)
            g = graph_from_edges(
                2 * n, [(perm[u], perm[v]) for u, v in base.edges()]
            )
            sides = detect_balanced_biclique(g)
            assert sides is not None
            xs, ys = sides
            expect = {frozenset(perm[v] for v in range(n)),
                      frozenset(perm[v] for v in range(n, 2 * n))}
            assert {frozenset(xs), frozenset(ys)} == expect
            coloring = relabel_for_sides(even_t_coloring(n, 2), xs, ys)
            rep = verify(g, coloring, Params(2, 0, 0))
            assert rep.verdict, rep.first_violation

    def test_four_cycle_is_k22(self):
        sides = detect_balanced_biclique(cycle(4))
        assert sides is not None
        assert {frozenset(s) for s in sides} == {
            frozenset({0, 2}), frozenset({1, 3})
        }

    @pytest.mark.parametrize("g", [
        path(4),
        cycle(5),
        cycle(6),
        graph_from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
        graph_from_edges(2, []),
    ])
    def test_non_bicliques_rejected(self, g):
        assert detect_balanced_biclique(g) is None


class TestInstanceValidation:
    def test_bad_instances_raise(self):
        with pytest.raises(PreconditionError):
            feasible_11(0, 3)
        with pytest.raises(PreconditionError):
            feasible_inf2(5, 0)
        with pytest.raises(PreconditionError):
            exact_va11(0)
        with pytest.raises(PreconditionError):
            even_t_coloring(0, 2)
