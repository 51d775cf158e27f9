import random

import pytest

from specgap import (
    BudgetExceeded,
    Graph,
    atlas_all,
    atlas_graph,
    canonical_form,
    classify,
    enumerate_labeled,
    enumerate_regular,
    is_connected,
    is_regular,
    mu1,
)
from oracles import all_graphs_on, naive_canonical, random_graph

CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19}
QUARTIC_COUNTS = {5: 1, 6: 1, 7: 2, 8: 6, 9: 16}


def relabel(g: Graph, perm: list[int]) -> Graph:
    edges = [
        (perm[u], perm[v]) for u in range(g.n) for v in g.neighbors(u) if u < v
    ]
    return Graph.from_edges(g.n, edges)


class TestCanonicalForm:
    def test_matches_exhaustive_minimum_small(self):
        rnd = random.Random(13)
        graphs = [random_graph(rnd, rnd.randint(1, 6)) for _ in range(40)]
        graphs += list(enumerate_labeled(3, 6))
        for g in graphs:
            assert canonical_form(g) == naive_canonical(g)

    def test_invariant_under_relabeling(self):
        rnd = random.Random(23)
        g = atlas_graph("petersen").graph
        base = canonical_form(g)
        for _ in range(50):
            perm = list(range(10))
            rnd.shuffle(perm)
            assert canonical_form(relabel(g, perm)) == base

    def test_distinguishes_non_isomorphic(self):
        assert canonical_form(atlas_graph("K33").graph) != canonical_form(
            atlas_graph("Y2_prism").graph
        )

    def test_round_trip_to_graph(self):
        rnd = random.Random(31)
        for _ in range(20):
            g = random_graph(rnd, rnd.randint(2, 9))
            cf = canonical_form(g)
            assert canonical_form(cf.to_graph()) == cf

    def test_size_contract(self):
        with pytest.raises(ValueError):
            canonical_form(atlas_graph("K33").graph, max_n=4)


class TestEnumerateRegular:
    def test_cubic_counts(self):
        for n, expected in CUBIC_COUNTS.items():
            assert len(list(enumerate_regular(3, n))) == expected

    def test_quartic_counts(self):
        for n, expected in QUARTIC_COUNTS.items():
            assert len(list(enumerate_regular(4, n))) == expected

    def test_rejects_impossible_parameters(self):
        with pytest.raises(ValueError):
            list(enumerate_regular(3, 5))  # odd n*k
        with pytest.raises(ValueError):
            list(enumerate_regular(3, 3))  # n <= k

    def test_soundness(self):
        for k, n in ((3, 8), (4, 7)):
            for g in enumerate_regular(k, n):
                assert is_connected(g)
                assert is_regular(g) == k

    def test_output_is_strictly_increasing_canonical(self):
        forms = [canonical_form(g) for g in enumerate_regular(3, 8)]
        assert all(a < b for a, b in zip(forms, forms[1:]))
        # emitted graphs literally are their own canonical representatives
        for g, cf in zip(enumerate_regular(3, 8), forms):
            assert cf.to_graph() == g

    def test_completeness_against_labeled_oracle_small(self):
        # exhaustive edge-subset oracle at n = 6, exhaustive-permutation dedup
        brute = {
            naive_canonical(g)
            for g in all_graphs_on(6)
            if is_regular(g) == 3 and is_connected(g)
        }
        assert len(brute) == 2
        ours = {naive_canonical(g) for g in enumerate_regular(3, 6)}
        assert ours == brute

    def test_completeness_against_labeled_oracle(self):
        for k, n in ((3, 4), (3, 6), (4, 5), (4, 6), (4, 7)):
            labeled = {canonical_form(g) for g in enumerate_labeled(k, n)}
            ours = {canonical_form(g) for g in enumerate_regular(k, n)}
            assert ours == labeled

    def test_pairwise_distinct_at_cubic_10(self):
        rnd = random.Random(47)
        graphs = list(enumerate_regular(3, 10))
        forms = {canonical_form(g) for g in graphs}
        assert len(forms) == len(graphs) == 19
        # random relabelings stay inside the same class set
        for g in graphs[:5]:
            perm = list(range(10))
            rnd.shuffle(perm)
            assert canonical_form(relabel(g, perm)) in forms


class TestClassify:
    def test_cubic_mu1_at_most_one(self):
        report = classify(3, 1.0, 10)
        names = {s.atlas_name for s in report.survivors}
        assert names == {"K4", "K33", "Y2_prism", "cube", "wagner", "petersen"}
        assert report.counts == CUBIC_COUNTS | {5: 0, 7: 0, 9: 0}
        assert report.realized_max == 10

    def test_cubic_mu1_at_most_zero(self):
        # the spectra force this set: mu1(K33) = 0, mu1(Y2_prism) = 1
        report = classify(3, 0.0, 10)
        assert report.survivor_names == {"K4", "K33"}

    def test_cubic_mu1_at_most_minus_one(self):
        report = classify(3, -1.0, 10)
        assert report.survivor_names == {"K4"}

    def test_quartic_small(self):
        report = classify(4, 0.0, 8)
        assert report.survivor_names == {"K5", "octahedron", "K44"}

    def test_atlas_members_survive_iff_threshold(self):
        report = classify(3, 1.0, 8)
        names = report.survivor_names
        for entry in atlas_all(3):
            if entry.graph.n <= 8:
                assert (entry.name in names) == (mu1(entry.graph) <= 1.0 + 1e-9)

    def test_survivor_records(self):
        report = classify(3, 1.0, 6)
        for s in report.survivors:
            assert s.mu1 <= 1.0 + 1e-9
            assert s.n <= 6
            assert not s.borderline or abs(s.mu1 - 1.0) < 1e-7

    def test_budget_refusal_and_cap(self):
        with pytest.raises(BudgetExceeded) as err:
            classify(3, 2.0)
        assert err.value.required > err.value.budget
        with pytest.raises(BudgetExceeded):
            classify(3, 1.0, 105)
        report = classify(3, 1.0, cap=True)
        assert report.capped and report.n_max == report.budget == 10
        assert report.derived_bound is not None and report.derived_bound > 10

    def test_default_bound_within_budget_runs_fully(self):
        report = classify(3, -1.0)
        assert not report.capped
        assert report.n_max == 4  # linear bound (z - k)/z
        assert report.survivor_names == {"K4"}
